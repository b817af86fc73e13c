"""Complete resolutions over the truncated polynomial algebra.

The algebra is self-injective, so every module M without free summands
has a complete resolution: splice the minimal free resolution of M with
the shifted k-dual of the minimal free resolution of M*.  Degrees n >= 0
carry the minimal resolution (P_n covers the n-th syzygy), degrees
n <= -1 carry duals of the M*-side (P_{-m} = Q_{m-1}^* for m >= 1), and
the splice map P_0 -> P_{-1} factors as P_0 ->> M >-> Q_0^*.

Every P_n is presented as a standard free module L^rank with the
(generator, monomial) basis.  The identification of a dual of a free
module with a standard free module uses the Frobenius form of the
algebra twisted by the antipode: psi(X^e) is the dual basis vector at
the complementary monomial X^(p-1-e), with sign (-1)^(|p-1-e|).

Boundary maps double as matrices over the algebra (one column per free
generator); all entries lie in the radical — minimality — and that fact
plus d∘d = 0, exactness, and surjectivity of the augmentation are
machine-checked by ``verify_window``.
"""
from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from .algebra import AlgebraElement, AlgebraSpec, ModuleRep, free_module, trivial_module
from .linalg import Subspace, image_basis, invert, kernel_basis, rank as mat_rank, solve_many


class WindowError(RuntimeError):
    """A computation needs resolution degrees outside the built window."""


_RESOLUTIONS: dict[str, "CompleteResolution"] = {}
_TRIVIAL: dict[tuple, "TrivialResolution"] = {}
_TENSOR: dict[tuple, "TensorResolution"] = {}


def complete_resolution(module: ModuleRep) -> "CompleteResolution":
    """The shared complete-resolution instance for a module.

    Keyed by module content, so equal modules share one growing window
    (and one lift cache downstream).
    """
    key = module.content_key()
    if key not in _RESOLUTIONS:
        _RESOLUTIONS[key] = CompleteResolution(module)
    return _RESOLUTIONS[key]


def trivial_resolution(spec: AlgebraSpec) -> "TrivialResolution":
    key = (spec.p, spec.rank, spec.names)
    if key not in _TRIVIAL:
        _TRIVIAL[key] = TrivialResolution(spec)
    return _TRIVIAL[key]


def tensor_resolution(module: ModuleRep) -> "TensorResolution":
    key = (module.spec.p, module.spec.rank, module.spec.names, module.content_key())
    if key not in _TENSOR:
        _TENSOR[key] = TensorResolution(trivial_resolution(module.spec), module)
    return _TENSOR[key]


def resolution_of(module: ModuleRep):
    """The canonical resolution used for a module's Tate cohomology.

    The trivial module routes through the labelled resolution (so its
    classes come with monomial-tuple generator labels); everything else
    uses the generic minimal complete resolution.
    """
    if module.dim == 1 and not any(a.any() for a in module.actions):
        return trivial_resolution(module.spec)
    return complete_resolution(module)


# ---------------------------------------------------------------------------
# projective covers and syzygies


class Cover:
    """Minimal projective (= free) cover P ->> M of a module.

    ``rank``: number of free generators (= dim M/rad M); ``pi``: the
    surjection as a (dim M) x (rank * p^r) matrix on the standard free
    basis; ``kernel_rows``: reduced-echelon basis of ker(pi), i.e. of
    the syzygy of M inside P.
    """

    __slots__ = ("module", "rank", "pi", "kernel_rows", "_syzygy")

    def __init__(self, module: ModuleRep):
        spec = module.spec
        p = spec.p
        gens = module.top_basis_indices()
        self.module = module
        self.rank = len(gens)
        cols = []
        for g in gens:
            for e in spec.monomials():
                cols.append(module.monomial_action(e)[:, g])
        self.pi = (np.array(cols).T if cols else
                   np.zeros((module.dim, 0), dtype=np.int64)) % p
        if mat_rank(self.pi, p) != module.dim:
            raise AssertionError("minimal cover failed to surject")
        self.kernel_rows = kernel_basis(self.pi, p)
        self._syzygy = None

    def syzygy(self) -> ModuleRep:
        """Kernel of the cover, as a module on the kernel-row basis."""
        if self._syzygy is None:
            spec = self.module.spec
            free = free_module(spec, self.rank)
            self._syzygy = submodule_rep(free, self.kernel_rows)
        return self._syzygy


def submodule_rep(ambient: ModuleRep, rows: np.ndarray) -> ModuleRep:
    """Module structure on an action-stable subspace given by rref rows.

    Coordinates in a reduced-echelon basis are read off at the pivot
    columns, so each action is (A @ rows.T) restricted to pivot rows.
    """
    p = ambient.p
    space = Subspace.from_rows(rows, ambient.dim, p) if rows.size else \
        Subspace.zero(ambient.dim, p)
    piv = list(space.pivots)
    acts = []
    for a in ambient.actions:
        img = (a @ space.basis.T) % p
        for col in range(img.shape[1]):
            if not space.contains_vector(img[:, col]):
                raise AssertionError("subspace is not action-stable")
        acts.append(img[piv, :] % p if piv else np.zeros((0, 0), dtype=np.int64))
    return ModuleRep(ambient.spec, tuple(acts))


def projective_free_rank(module: ModuleRep) -> int:
    """Number of free summands of M (0 means M is projective-free).

    Minimal syzygies over a self-injective algebra never contain free
    summands, so the composite of a syzygy and a cosyzygy recovers the
    projective-free part; the dimension drop counts free summands.
    """
    if module.dim == 0:
        return 0
    pf = projective_free_part(module)
    drop = module.dim - pf.dim
    q, r = divmod(drop, module.spec.dim)
    if r:
        raise AssertionError("free-rank computation hit a non-integral drop")
    return q


def projective_free_part(module: ModuleRep) -> ModuleRep:
    """The (unique) maximal summand of M with no free summand."""
    omega = Cover(module).syzygy()
    return Cover(omega.dual()).syzygy().dual()


# ---------------------------------------------------------------------------
# the antipode-twisted identification of L^n with its dual


@lru_cache(maxsize=None)
def _psi_block(p: int, r: int) -> np.ndarray:
    """Matrix of psi: L -> L^*, X^e -> (-1)^(|p-1-e|) (X^(p-1-e))^*."""
    spec = AlgebraSpec(p, r)
    monos = spec.monomials()
    n = len(monos)
    out = np.zeros((n, n), dtype=np.int64)
    for j, e in enumerate(monos):
        comp = tuple(p - 1 - v for v in e)
        sign = (-1) ** (sum(comp) % 2)
        out[spec.monomial_index(comp), j] = sign % p
    return out


def _psi(spec: AlgebraSpec, rank: int) -> np.ndarray:
    block = _psi_block(spec.p, spec.rank)
    return np.kron(np.eye(rank, dtype=np.int64), block)


def _psi_inv(spec: AlgebraSpec, rank: int) -> np.ndarray:
    # psi is a signed permutation with signs +-1, so psi^-1 = psi^T
    block = _psi_block(spec.p, spec.rank)
    return np.kron(np.eye(rank, dtype=np.int64), block.T % spec.p)


# ---------------------------------------------------------------------------
# algebra-valued matrices


def extract_lambda_matrix(kmat: np.ndarray, spec: AlgebraSpec,
                          rank_tgt: int, rank_src: int) -> list[list[AlgebraElement]]:
    """Read the algebra-matrix of a map of standard free modules.

    Column of generator j is the image of 1*gen_j; block i of that
    column is the coefficient vector of the (i, j) entry.  Raises if the
    k-matrix is not the expansion of the result, i.e. not L-linear.
    """
    d = spec.dim
    if kmat.shape != (rank_tgt * d, rank_src * d):
        raise ValueError("k-matrix shape does not match the given ranks")
    entries = [[AlgebraElement(spec, kmat[i * d:(i + 1) * d, j * d])
                for j in range(rank_src)] for i in range(rank_tgt)]
    if not np.array_equal(expand_lambda_matrix(entries, spec, rank_tgt, rank_src), kmat % spec.p):
        raise AssertionError("matrix is not a module map of free modules")
    return entries


def expand_lambda_matrix(entries, spec: AlgebraSpec, rank_tgt: int, rank_src: int) -> np.ndarray:
    d = spec.dim
    out = np.zeros((rank_tgt * d, rank_src * d), dtype=np.int64)
    for i in range(rank_tgt):
        for j in range(rank_src):
            out[i * d:(i + 1) * d, j * d:(j + 1) * d] = entries[i][j].left_mult_matrix()
    return out % spec.p


# ---------------------------------------------------------------------------
# the complete resolution


class CompleteResolution:
    """Window of a complete resolution of a projective-free module.

    Accessors take the homological degree n and auto-extend the window:

    - ``rank(n)``, ``free(n)``: P_n as a standard free module;
    - ``boundary(n)``: the k-matrix of d_n: P_n -> P_{n-1};
    - ``omega(n)``: the n-th syzygy im(d_n), as a ModuleRep, with
      ``embed(n)``: omega(n) -> P_{n-1} and ``proj(n)``: P_n ->> omega(n)
      satisfying boundary(n) = embed(n) @ proj(n);
    - ``omega(0)`` is the module itself.
    """

    def __init__(self, module: ModuleRep):
        if projective_free_rank(module) != 0:
            raise ValueError(
                "module has a free summand; strip it (projective_free_part) "
                "before resolving — complete resolutions ignore projectives")
        self.module = module
        self.spec = module.spec
        self._pos: list[Cover] = []    # covers of om^j, j = 0, 1, ...
        self._neg: list[Cover] = []    # covers of the dual-side syzygies
        self._free_cache: dict[int, ModuleRep] = {}
        self._omega_cache: dict[int, ModuleRep] = {}
        self._bnd_cache: dict[int, np.ndarray] = {}
        self._sec_cache: dict[int, np.ndarray] = {}

    # -- window bookkeeping

    def _ensure_pos(self, j: int) -> None:
        while len(self._pos) <= j:
            mod = self.module if not self._pos else self._pos[-1].syzygy()
            self._pos.append(Cover(mod))

    def _ensure_neg(self, j: int) -> None:
        while len(self._neg) <= j:
            mod = self.module.dual() if not self._neg else self._neg[-1].syzygy()
            self._neg.append(Cover(mod))

    def ensure(self, n_min: int, n_max: int) -> "CompleteResolution":
        if n_min > 0 or n_max < 0:
            raise ValueError("window must contain degree 0")
        self._ensure_pos(n_max)
        self._ensure_neg(max(0, -n_min))
        return self

    # -- structure maps

    def rank(self, n: int) -> int:
        if n >= 0:
            self._ensure_pos(n)
            return self._pos[n].rank
        self._ensure_neg(-n - 1)
        return self._neg[-n - 1].rank

    def free(self, n: int) -> ModuleRep:
        r = self.rank(n)
        if r not in self._free_cache:
            self._free_cache[r] = free_module(self.spec, r)
        return self._free_cache[r]

    def proj(self, n: int) -> np.ndarray:
        """P_n ->> omega(n)."""
        if n >= 0:
            self._ensure_pos(n)
            return self._pos[n].pi
        m = -n
        self._ensure_neg(m - 1)
        cov = self._neg[m - 1]
        return (cov.kernel_rows @ _psi(self.spec, cov.rank)) % self.spec.p

    def embed(self, n: int) -> np.ndarray:
        """omega(n) >-> P_{n-1}."""
        if n >= 1:
            self._ensure_pos(n - 1)
            return self._pos[n - 1].kernel_rows.T.copy()
        m = -n
        self._ensure_neg(m)
        cov = self._neg[m]
        return (_psi_inv(self.spec, cov.rank) @ cov.pi.T) % self.spec.p

    def boundary(self, n: int) -> np.ndarray:
        if n not in self._bnd_cache:
            self._bnd_cache[n] = (self.embed(n) @ self.proj(n)) % self.spec.p
        return self._bnd_cache[n]

    def omega(self, n: int) -> ModuleRep:
        if n in self._omega_cache:
            return self._omega_cache[n]
        if n == 0:
            mod = self.module
        elif n > 0:
            self._ensure_pos(n)
            mod = self._pos[n].module
        else:
            self._ensure_neg(-n)
            mod = self._neg[-n].module.dual()
        self._omega_cache[n] = mod
        return mod

    def lambda_boundary(self, n: int):
        return extract_lambda_matrix(self.boundary(n), self.spec,
                                     self.rank(n - 1), self.rank(n))

    def section(self, n: int) -> np.ndarray:
        """A right inverse of proj(n), canonical via solve_many."""
        if n not in self._sec_cache:
            pi = self.proj(n)
            eye = np.eye(pi.shape[0], dtype=np.int64)
            sec, ok = solve_many(pi, eye, self.spec.p)
            if not ok.all():
                raise AssertionError(
                    "projection to a syzygy failed to split k-linearly")
            self._sec_cache[n] = sec
        return self._sec_cache[n]

    # -- verification

    def verify_window(self, n_min: int, n_max: int) -> dict:
        """Machine-check the structural invariants on [n_min, n_max].

        Checks, for every degree in range: d∘d = 0; L-linearity of the
        boundary (via algebra-matrix extraction); minimality (all
        entries in the radical); the factorization boundary = embed @
        proj; exactness rank ker d_n = rank d_{n+1}; and that the splice
        has image of dimension dim M.
        """
        self.ensure(n_min, n_max)
        p = self.spec.p
        report = {"degrees": list(range(n_min, n_max + 1))}
        for n in range(n_min, n_max + 1):
            d_n = self.boundary(n)
            lam = self.lambda_boundary(n)  # raises unless L-linear
            for row in lam:
                for entry in row:
                    if not entry.in_radical():
                        raise AssertionError(f"boundary {n} is not minimal")
            if not np.array_equal(d_n, (self.embed(n) @ self.proj(n)) % p):
                raise AssertionError(f"boundary {n} does not factor through omega")
            if n < n_max:
                if ((d_n @ self.boundary(n + 1)) % p).any():
                    raise AssertionError(f"d_{n} d_{n+1} != 0")
                ker_dim = self.free(n).dim - mat_rank(d_n, p)
                if ker_dim != mat_rank(self.boundary(n + 1), p):
                    raise AssertionError(f"not exact at degree {n}")
        if mat_rank(self.boundary(0), p) != self.module.dim:
            raise AssertionError("splice image does not match the module")
        report["ranks"] = {n: self.rank(n) for n in range(n_min, n_max + 1)}
        report["ok"] = True
        return report


# ---------------------------------------------------------------------------
# the labelled complete resolution of the trivial module


def _nonneg_labels(r: int, n: int) -> tuple[tuple[int, ...], ...]:
    out = [c for c in itertools.product(range(n + 1), repeat=r) if sum(c) == n]
    return tuple(sorted(out))


def _neg_labels(r: int, n: int) -> tuple[tuple[int, ...], ...]:
    total = -(n - (r - 1)) - r   # sum of b_i where a_i = -b_i - 1
    combos = [c for c in itertools.product(range(total + 1), repeat=r) if sum(c) == total]
    return tuple(sorted(tuple(-b - 1 for b in c) for c in combos))


class TrivialResolution:
    """The labelled complete resolution of k by tensor products.

    P_n for n >= 0 is free on symbols u_a, a in Z^r with a_i >= 0 and
    sum a_i = n; for n < 0 on u_a with all a_i < 0 and
    sum a_i = n - (r - 1).  The boundary moves one coordinate down by 1,
    with coefficient X_i when the coordinate is odd and X_i^(p-1) when
    even, and the sign (-1)^(a_1 + ... + a_{i-1}); in positive degrees
    terms whose target leaves the region are dropped, and the splice
    sends the degree-0 generator to (prod X_i^(p-1)) u_{(-1,..,-1)}.
    """

    def __init__(self, spec: AlgebraSpec):
        self.spec = spec
        self.module = trivial_module(spec)
        self._free_cache: dict[int, ModuleRep] = {}
        self._bnd_cache: dict[int, np.ndarray] = {}
        self._img_cache: dict[int, tuple] = {}
        self._sec_cache: dict[int, np.ndarray] = {}

    def ensure(self, n_min: int, n_max: int) -> "TrivialResolution":
        return self

    def labels(self, n: int) -> tuple[tuple[int, ...], ...]:
        r = self.spec.rank
        return _nonneg_labels(r, n) if n >= 0 else _neg_labels(r, n)

    def label_index(self, n: int, label: tuple[int, ...]) -> int:
        return self.labels(n).index(tuple(label))

    def rank(self, n: int) -> int:
        r = self.spec.rank
        if n >= 0:
            return math.comb(n + r - 1, r - 1)
        return math.comb(-n - 1 + r - 1, r - 1)

    def free(self, n: int) -> ModuleRep:
        r = self.rank(n)
        if r not in self._free_cache:
            self._free_cache[r] = free_module(self.spec, r)
        return self._free_cache[r]

    def boundary(self, n: int) -> np.ndarray:
        if n in self._bnd_cache:
            return self._bnd_cache[n]
        spec = self.spec
        p, r, d = spec.p, spec.rank, spec.dim
        src, tgt = self.labels(n), self.labels(n - 1)
        tgt_pos = {lab: i for i, lab in enumerate(tgt)}
        out = np.zeros((len(tgt) * d, len(src) * d), dtype=np.int64)
        if n == 0:
            top = spec.monomial(spec.top_monomial())
            out[0:d, 0:d] = top.left_mult_matrix()
        else:
            for j, a in enumerate(src):
                sign = 1
                for i in range(r):
                    target = a[:i] + (a[i] - 1,) + a[i + 1:]
                    if target in tgt_pos:
                        expt = [0] * r
                        expt[i] = 1 if a[i] % 2 else p - 1
                        coef = spec.monomial(tuple(expt)).scale(sign)
                        ti = tgt_pos[target]
                        out[ti * d:(ti + 1) * d, j * d:(j + 1) * d] = coef.left_mult_matrix()
                    sign *= (-1) ** (a[i] % 2)
        self._bnd_cache[n] = out % p
        return self._bnd_cache[n]

    def _image_data(self, n: int):
        """(embed, proj, module) of im(d_n) in P_{n-1}, computed generically."""
        if n in self._img_cache:
            return self._img_cache[n]
        p = self.spec.p
        d_n = self.boundary(n)
        space = image_basis(d_n, p)
        piv = list(space.pivots)
        embed = space.basis.T.copy()
        proj = d_n[piv, :].copy() if piv else np.zeros((0, d_n.shape[1]), dtype=np.int64)
        mod = submodule_rep(self.free(n - 1), space.basis)
        self._img_cache[n] = (embed, proj, mod)
        return self._img_cache[n]

    def proj(self, n: int) -> np.ndarray:
        if n == 0:
            # augmentation P_0 = L ->> k picks the constant coefficient
            eps = np.zeros((1, self.spec.dim), dtype=np.int64)
            eps[0, 0] = 1
            return eps
        return self._image_data(n)[1]

    def embed(self, n: int) -> np.ndarray:
        if n == 0:
            inc = np.zeros((self.spec.dim, 1), dtype=np.int64)
            inc[self.spec.monomial_index(self.spec.top_monomial()), 0] = 1
            return inc
        return self._image_data(n)[0]

    def omega(self, n: int) -> ModuleRep:
        if n == 0:
            return self.module
        return self._image_data(n)[2]

    def section(self, n: int) -> np.ndarray:
        if n not in self._sec_cache:
            pi = self.proj(n)
            sec, ok = solve_many(pi, np.eye(pi.shape[0], dtype=np.int64),
                                 self.spec.p)
            if not ok.all():
                raise AssertionError("projection failed to split")
            self._sec_cache[n] = sec
        return self._sec_cache[n]

    def lambda_boundary(self, n: int):
        return extract_lambda_matrix(self.boundary(n), self.spec,
                                     self.rank(n - 1), self.rank(n))

    def verify_window(self, n_min: int, n_max: int) -> dict:
        p = self.spec.p
        for n in range(n_min, n_max + 1):
            for row in self.lambda_boundary(n):
                for entry in row:
                    if not entry.in_radical():
                        raise AssertionError(f"boundary {n} is not minimal")
            if n < n_max:
                if ((self.boundary(n) @ self.boundary(n + 1)) % p).any():
                    raise AssertionError(f"d_{n} d_{n+1} != 0")
                ker = self.free(n).dim - mat_rank(self.boundary(n), p)
                if ker != mat_rank(self.boundary(n + 1), p):
                    raise AssertionError(f"not exact at degree {n}")
        if mat_rank(self.boundary(0), p) != 1:
            raise AssertionError("splice image has wrong dimension")
        return {"ok": True, "ranks": {n: self.rank(n) for n in range(n_min, n_max + 1)}}


# ---------------------------------------------------------------------------
# tensoring a resolution of k with a module


def _binom_mod(n: int, k: int, p: int) -> int:
    return math.comb(n, k) % p


class TensorResolution:
    """P(k) tensor M, a complete resolution of M on standard free modules.

    The diagonal action X_i |-> X_i (x) 1 + 1 (x) X_i makes P_n(k) (x) M
    a free module; the untwisting isomorphism

        u(X^e (x) m) = sum_{f <= e} binom(e, f) X^f (x) X^(e-f) m

    identifies the standard free module on (generator, M-basis) pairs
    with the diagonal module, carrying the boundary d (x) id back to a
    boundary between standard frees (complete and exact, though not
    minimal for a general module).  Generators of T_n are labelled by
    (P_n(k)-label, M-basis-label) pairs.
    """

    def __init__(self, base: TrivialResolution, module: ModuleRep):
        if base.spec is not module.spec and base.spec != module.spec:
            raise ValueError("resolution of k and module use different algebras")
        self.spec = base.spec
        self.base = base
        self.module = module
        self._free_cache: dict[int, ModuleRep] = {}
        self._untwist: dict[int, np.ndarray] = {}
        self._untwist_inv: dict[int, np.ndarray] = {}
        self._bnd_cache: dict[int, np.ndarray] = {}
        self._img_cache: dict[int, tuple] = {}
        self._sec_cache: dict[int, np.ndarray] = {}
        self._check_untwist()

    def _check_untwist(self) -> None:
        """Machine-check that untwisting is an isomorphism of modules.

        On one generator: the diagonal action on L (x) M must equal the
        untwist conjugate of the standard free action, and the untwist
        matrix must be invertible (it is unipotent triangular).
        """
        spec, M = self.spec, self.module
        p, d, m = spec.p, spec.dim, M.dim
        blk = self._one_gen_untwist()
        inv = invert(blk, p)
        reg = free_module(spec, 1)
        std = free_module(spec, m)
        for i in range(spec.rank):
            diag = (np.kron(reg.actions[i], np.eye(m, dtype=np.int64)) +
                    np.kron(np.eye(d, dtype=np.int64), M.actions[i])) % p
            if not np.array_equal((diag @ blk) % p, (blk @ std.actions[i]) % p):
                raise AssertionError("untwisting does not intertwine the actions")
        if not np.array_equal((blk @ inv) % p, np.eye(d * m, dtype=np.int64)):
            raise AssertionError("untwist block is not invertible")

    def ensure(self, n_min: int, n_max: int) -> "TensorResolution":
        return self

    def rank(self, n: int) -> int:
        return self.base.rank(n) * self.module.dim

    def labels(self, n: int):
        return tuple((a, lab) for a in self.base.labels(n)
                     for lab in self.module.labels)

    def free(self, n: int) -> ModuleRep:
        r = self.rank(n)
        if r not in self._free_cache:
            self._free_cache[r] = free_module(self.spec, r)
        return self._free_cache[r]

    def _one_gen_untwist(self) -> np.ndarray:
        """Untwist matrix for one generator: (e, b) -> ((b), f) indexing.

        Rows are indexed by the natural tensor coordinate (monomial,
        module-basis); columns by the standard free coordinate
        (generator=(module-basis), monomial).
        """
        spec, M = self.spec, self.module
        p, d, m = spec.p, spec.dim, M.dim
        monos = spec.monomials()
        out = np.zeros((d * m, m * d), dtype=np.int64)
        for ei, e in enumerate(monos):
            for fi, f in enumerate(monos):
                if any(fv > ev for fv, ev in zip(f, e)):
                    continue
                coef = 1
                for ev, fv in zip(e, f):
                    coef = (coef * _binom_mod(ev, fv, p)) % p
                if coef == 0:
                    continue
                diff = tuple(ev - fv for ev, fv in zip(e, f))
                act = M.monomial_action(diff)
                for b in range(m):
                    for b2 in range(m):
                        v = (coef * act[b2, b]) % p
                        if v:
                            out[fi * m + b2, b * d + ei] = v
        return out

    def untwist(self, n: int) -> np.ndarray:
        """Standard free S_n -> natural coordinates of P_n(k) (x) M."""
        t = self.base.rank(n)
        if t not in self._untwist:
            blk = self._one_gen_untwist()
            self._untwist[t] = np.kron(np.eye(t, dtype=np.int64), blk)
        return self._untwist[t]

    def untwist_inv(self, n: int) -> np.ndarray:
        t = self.base.rank(n)
        if t not in self._untwist_inv:
            self._untwist_inv[t] = invert(self.untwist(n), self.spec.p)
        return self._untwist_inv[t]

    def boundary(self, n: int) -> np.ndarray:
        if n not in self._bnd_cache:
            p, m = self.spec.p, self.module.dim
            nat = np.kron(self.base.boundary(n), np.eye(m, dtype=np.int64))
            self._bnd_cache[n] = (self.untwist_inv(n - 1) @ nat @ self.untwist(n)) % p
        return self._bnd_cache[n]

    def _image_data(self, n: int):
        if n not in self._img_cache:
            p = self.spec.p
            d_n = self.boundary(n)
            space = image_basis(d_n, p)
            piv = list(space.pivots)
            embed = space.basis.T.copy()
            proj = d_n[piv, :].copy() if piv else np.zeros((0, d_n.shape[1]), dtype=np.int64)
            self._img_cache[n] = (embed, proj, submodule_rep(self.free(n - 1), space.basis))
        return self._img_cache[n]

    def proj(self, n: int) -> np.ndarray:
        if n == 0:
            # (augmentation (x) id) then untwist: T_0 ->> M
            p, m = self.spec.p, self.module.dim
            nat = np.kron(self.base.proj(0), np.eye(m, dtype=np.int64))
            return (nat @ self.untwist(0)) % p
        return self._image_data(n)[1]

    def embed(self, n: int) -> np.ndarray:
        if n == 0:
            p, m = self.spec.p, self.module.dim
            nat = np.kron(self.base.embed(0), np.eye(m, dtype=np.int64))
            return (self.untwist_inv(-1) @ nat) % p
        return self._image_data(n)[0]

    def omega(self, n: int) -> ModuleRep:
        if n == 0:
            return self.module
        return self._image_data(n)[2]

    def section(self, n: int) -> np.ndarray:
        if n not in self._sec_cache:
            pi = self.proj(n)
            sec, ok = solve_many(pi, np.eye(pi.shape[0], dtype=np.int64),
                                 self.spec.p)
            if not ok.all():
                raise AssertionError("projection failed to split")
            self._sec_cache[n] = sec
        return self._sec_cache[n]

    def verify_window(self, n_min: int, n_max: int) -> dict:
        """Check exactness and squared-zero on a window.

        Unlike the minimal resolution, the tensor resolution is not
        minimal for a general module (it is for the trivial one), so no
        radical condition is imposed; L-linearity is still asserted via
        the algebra-matrix extraction.
        """
        p = self.spec.p
        for n in range(n_min, n_max + 1):
            extract_lambda_matrix(self.boundary(n), self.spec,
                                  self.rank(n - 1), self.rank(n))
            if n < n_max:
                if ((self.boundary(n) @ self.boundary(n + 1)) % p).any():
                    raise AssertionError(f"d_{n} d_{n+1} != 0 on the tensor side")
                ker = self.free(n).dim - mat_rank(self.boundary(n), p)
                if ker != mat_rank(self.boundary(n + 1), p):
                    raise AssertionError(f"tensor side not exact at degree {n}")
        if mat_rank(self.boundary(0), p) != self.module.dim:
            raise AssertionError("tensor splice image has wrong dimension")
        return {"ok": True}
