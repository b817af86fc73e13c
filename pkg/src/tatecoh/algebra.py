"""The truncated polynomial algebra L = k[X_1..X_r]/(X_i^p) and its modules.

Over GF(p) this is the group algebra of an elementary abelian p-group of
rank r (generators g_i correspond to 1 + X_i), a local self-injective
Hopf algebra with primitive generators.  A finitely generated module is
a finite-dimensional vector space with r commuting nilpotent operators
A_i satisfying A_i^p = 0; both conditions are machine-checked at
construction.

Monomials X^e, 0 <= e_i < p, are ordered by total degree, ties broken
reverse-lexicographically reading the exponent tuple right to left, so
X_1 < X_2 < ... < X_r in degree one.  This order is fixed globally; all
basis labelling, pivoting and hence every downstream canonical form
depends on it.
"""
from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import FieldSpec, Subspace, asmat, kernel_basis, rref

DEFAULT_NAMES = ("X", "Y", "Z", "W", "V", "U", "T", "S")


@dataclass(frozen=True)
class AlgebraSpec:
    """k[X_1..X_r]/(X_i^p) over GF(p), with display names for the X_i."""

    p: int
    rank: int
    names: tuple[str, ...] = ()

    def __post_init__(self):
        FieldSpec(self.p)
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        names = self.names or DEFAULT_NAMES[:self.rank]
        if len(names) != self.rank or len(set(names)) != self.rank:
            raise ValueError("need one distinct name per variable")
        object.__setattr__(self, "names", tuple(names))

    @property
    def dim(self) -> int:
        """k-dimension of the algebra, p^rank."""
        return self.p ** self.rank

    def monomials(self) -> tuple[tuple[int, ...], ...]:
        return _monomials(self.p, self.rank)

    def monomial_index(self, expt: tuple[int, ...]) -> int:
        return _monomial_index(self.p, self.rank)[tuple(expt)]

    def monomial_str(self, expt: tuple[int, ...]) -> str:
        parts = []
        for name, e in zip(self.names, expt):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, np.zeros(self.dim, dtype=np.int64))

    def one(self) -> "AlgebraElement":
        c = np.zeros(self.dim, dtype=np.int64)
        c[0] = 1
        return AlgebraElement(self, c)

    def variable(self, i: int) -> "AlgebraElement":
        e = [0] * self.rank
        e[i] = 1
        return self.monomial(tuple(e))

    def monomial(self, expt: tuple[int, ...]) -> "AlgebraElement":
        c = np.zeros(self.dim, dtype=np.int64)
        c[self.monomial_index(expt)] = 1
        return AlgebraElement(self, c)

    def top_monomial(self) -> tuple[int, ...]:
        """The socle monomial prod X_i^(p-1)."""
        return tuple([self.p - 1] * self.rank)


@lru_cache(maxsize=None)
def _monomials(p: int, rank: int) -> tuple[tuple[int, ...], ...]:
    # degree, then reverse-lex on the reversed exponent tuple: in degree 1
    # this sorts X_1 before X_2 before ... X_r.
    monos = list(itertools.product(range(p), repeat=rank))
    monos.sort(key=lambda e: (sum(e), tuple(reversed(e))))
    return tuple(monos)


@lru_cache(maxsize=None)
def _monomial_index(p: int, rank: int) -> dict[tuple[int, ...], int]:
    return {e: i for i, e in enumerate(_monomials(p, rank))}


@lru_cache(maxsize=None)
def _mult_table(p: int, rank: int) -> np.ndarray:
    """table[i, j] = index of monomial i * monomial j, or -1 when it dies."""
    monos = _monomials(p, rank)
    index = _monomial_index(p, rank)
    n = len(monos)
    table = np.full((n, n), -1, dtype=np.int64)
    for i, a in enumerate(monos):
        for j, b in enumerate(monos):
            s = tuple(x + y for x, y in zip(a, b))
            if all(v < p for v in s):
                table[i, j] = index[s]
    return table


@lru_cache(maxsize=None)
def _regular_action(p: int, rank: int) -> tuple[np.ndarray, ...]:
    """Left multiplication by each X_i on the monomial basis."""
    monos = _monomials(p, rank)
    index = _monomial_index(p, rank)
    mats = []
    for i in range(rank):
        a = np.zeros((len(monos), len(monos)), dtype=np.int64)
        for j, e in enumerate(monos):
            if e[i] + 1 < p:
                lifted = list(e)
                lifted[i] += 1
                a[index[tuple(lifted)], j] = 1
        mats.append(a)
    return tuple(mats)


@lru_cache(maxsize=None)
def _left_mult_monomial(p: int, rank: int, mono_idx: int) -> np.ndarray:
    table = _mult_table(p, rank)
    n = table.shape[0]
    a = np.zeros((n, n), dtype=np.int64)
    for j in range(n):
        t = table[mono_idx, j]
        if t >= 0:
            a[t, j] = 1
    return a


class AlgebraElement:
    """An element of the algebra: a coefficient vector over the monomials."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: AlgebraSpec, coeffs):
        self.spec = spec
        c = np.asarray(coeffs, dtype=np.int64) % spec.p
        if c.shape != (spec.dim,):
            raise ValueError("coefficient vector has wrong length")
        self.coeffs = c

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.spec, self.coeffs + other.coeffs)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.spec, self.coeffs - other.coeffs)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.spec, -self.coeffs)

    def scale(self, c: int) -> "AlgebraElement":
        return AlgebraElement(self.spec, self.coeffs * (c % self.spec.p))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        table = _mult_table(self.spec.p, self.spec.rank)
        out = np.zeros(self.spec.dim, dtype=np.int64)
        for i in np.nonzero(self.coeffs)[0]:
            for j in np.nonzero(other.coeffs)[0]:
                t = table[i, j]
                if t >= 0:
                    out[t] += self.coeffs[i] * other.coeffs[j]
        return AlgebraElement(self.spec, out)

    def antipode(self) -> "AlgebraElement":
        """X^e -> (-1)^|e| X^e (the X_i are primitive)."""
        out = self.coeffs.copy()
        for i, e in enumerate(self.spec.monomials()):
            if sum(e) % 2:
                out[i] = -out[i]
        return AlgebraElement(self.spec, out)

    def augmentation(self) -> int:
        """The constant coefficient: image under L -> k, X_i -> 0."""
        return int(self.coeffs[0])

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def in_radical(self) -> bool:
        return self.coeffs[0] == 0

    def left_mult_matrix(self) -> np.ndarray:
        """Matrix of multiplication by self on the regular module."""
        out = np.zeros((self.spec.dim, self.spec.dim), dtype=np.int64)
        for i in np.nonzero(self.coeffs)[0]:
            out += self.coeffs[i] * _left_mult_monomial(self.spec.p, self.spec.rank, int(i))
        return out % self.spec.p

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgebraElement) and self.spec == other.spec
                and np.array_equal(self.coeffs, other.coeffs))

    def __repr__(self) -> str:
        terms = []
        for i in np.nonzero(self.coeffs)[0]:
            c = int(self.coeffs[i])
            m = self.spec.monomial_str(self.spec.monomials()[i])
            terms.append(m if c == 1 else f"{c}*{m}")
        return " + ".join(terms) if terms else "0"


class ModuleRep:
    """A finite-dimensional module: dim + one action matrix per variable.

    Invariants (checked unless ``trusted``): the actions commute
    pairwise and each A_i^p = 0.  ``labels`` optionally names the basis
    vectors (used by quotients of free modules and resolutions).
    """

    __slots__ = ("spec", "actions", "labels", "_mono_cache")

    def __init__(self, spec: AlgebraSpec, actions, labels=None, trusted=False):
        self.spec = spec
        acts = tuple(asmat(a, spec.p) for a in actions)
        if len(acts) != spec.rank:
            raise ValueError("need one action matrix per variable")
        d = acts[0].shape[0] if acts else 0
        for a in acts:
            if a.shape != (d, d):
                raise ValueError("action matrices must be square of equal size")
        if not trusted:
            p = spec.p
            for i, a in enumerate(acts):
                power = np.eye(d, dtype=np.int64)
                for _ in range(p):
                    power = (power @ a) % p
                if power.any():
                    raise ValueError(f"action of {spec.names[i]} is not p-step nilpotent")
                for b in acts[i + 1:]:
                    if ((a @ b - b @ a) % p).any():
                        raise ValueError("action matrices do not commute")
        self.actions = acts
        self.labels = tuple(labels) if labels is not None else None
        self._mono_cache = {}

    @property
    def dim(self) -> int:
        return self.actions[0].shape[0] if self.actions else 0

    @property
    def p(self) -> int:
        return self.spec.p

    def monomial_action(self, expt: tuple[int, ...]) -> np.ndarray:
        """Matrix of the monomial X^e acting on this module."""
        expt = tuple(expt)
        got = self._mono_cache.get(expt)
        if got is not None:
            return got
        out = np.eye(self.dim, dtype=np.int64)
        for a, e in zip(self.actions, expt):
            for _ in range(e):
                out = (a @ out) % self.p
        self._mono_cache[expt] = out
        return out

    def element_action(self, x: AlgebraElement) -> np.ndarray:
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        monos = self.spec.monomials()
        for i in np.nonzero(x.coeffs)[0]:
            out += int(x.coeffs[i]) * self.monomial_action(monos[i])
        return out % self.p

    def radical(self) -> Subspace:
        """rad M = sum of the images of the X_i (row-vector convention)."""
        if self.dim == 0:
            return Subspace.zero(0, self.p)
        rows = np.vstack([a.T for a in self.actions])
        return Subspace.from_rows(rows, self.dim, self.p)

    def socle(self) -> Subspace:
        """soc M = joint kernel of the X_i."""
        if self.dim == 0:
            return Subspace.zero(0, self.p)
        stacked = np.vstack(self.actions)
        return Subspace.from_rows(kernel_basis(stacked, self.p), self.dim, self.p)

    def top_rank(self) -> int:
        """dim M/rad M = minimal number of generators."""
        return self.dim - self.radical().dim

    def top_basis_indices(self) -> tuple[int, ...]:
        """Canonical coordinate positions spanning M/rad M.

        The standard basis vectors at the non-pivot columns of
        rref(rad M) project to a basis of the top.
        """
        piv = set(self.radical().pivots)
        return tuple(j for j in range(self.dim) if j not in piv)

    def dual(self) -> "ModuleRep":
        """Contragredient module: X_i acts by phi -> -phi(X_i . -)."""
        acts = tuple((-a.T) % self.p for a in self.actions)
        return ModuleRep(self.spec, acts, trusted=True)

    def content_key(self) -> str:
        """Stable hash of (algebra, dim, actions); used for cache keys."""
        h = hashlib.sha256()
        h.update(f"{self.spec.p},{self.spec.rank},{','.join(self.spec.names)};{self.dim}".encode())
        for a in self.actions:
            h.update(a.tobytes())
        return h.hexdigest()

    def __eq__(self, other) -> bool:
        return (isinstance(other, ModuleRep) and self.spec == other.spec
                and self.dim == other.dim
                and all(np.array_equal(a, b) for a, b in zip(self.actions, other.actions)))

    def __repr__(self) -> str:
        return f"ModuleRep(p={self.p}, rank={self.spec.rank}, dim={self.dim})"


def regular_module(spec: AlgebraSpec) -> ModuleRep:
    """The algebra as a left module over itself, on the monomial basis."""
    labels = tuple(spec.monomial_str(e) for e in spec.monomials())
    return ModuleRep(spec, _regular_action(spec.p, spec.rank), labels=labels, trusted=True)


def free_module(spec: AlgebraSpec, n: int, gen_names: tuple[str, ...] | None = None) -> ModuleRep:
    """L^n with basis (generator, monomial), generator-major order."""
    if gen_names is None:
        gen_names = tuple(f"e{j}" for j in range(n))
    reg = _regular_action(spec.p, spec.rank)
    eye = np.eye(n, dtype=np.int64)
    acts = tuple(np.kron(eye, a) for a in reg)
    labels = []
    for g in gen_names:
        for e in spec.monomials():
            m = spec.monomial_str(e)
            labels.append(g if m == "1" else f"{m}*{g}")
    return ModuleRep(spec, acts, labels=tuple(labels), trusted=True)


def trivial_module(spec: AlgebraSpec) -> ModuleRep:
    acts = tuple(np.zeros((1, 1), dtype=np.int64) for _ in range(spec.rank))
    return ModuleRep(spec, acts, labels=("1",), trusted=True)


def zero_module(spec: AlgebraSpec) -> ModuleRep:
    acts = tuple(np.zeros((0, 0), dtype=np.int64) for _ in range(spec.rank))
    return ModuleRep(spec, acts, labels=(), trusted=True)


@dataclass(frozen=True)
class Presentation:
    """A cokernel presentation: free module on ``gens`` modulo ``relations``.

    Each relation is a tuple of AlgebraElements, one per generator,
    standing for sum_j rel[j] * gen_j.
    """

    spec: AlgebraSpec
    gens: tuple[str, ...]
    relations: tuple[tuple[AlgebraElement, ...], ...]

    def __post_init__(self):
        for rel in self.relations:
            if len(rel) != len(self.gens):
                raise ValueError("relation length does not match generator count")


def quotient_by_relations(pres: Presentation) -> ModuleRep:
    """Build F/LF' as an explicit ModuleRep with named basis.

    The submodule generated by the relations is expanded over all
    monomial multiples and echelonized; the quotient basis is the set of
    free-module coordinates at the non-pivot columns, so labels are
    monomial-times-generator names.
    """
    spec = pres.spec
    n = len(pres.gens)
    free = free_module(spec, n, pres.gens)
    d = spec.dim
    rows = []
    for rel in pres.relations:
        base = np.concatenate([x.coeffs for x in rel])
        for e in spec.monomials():
            block = free.monomial_action(e)
            rows.append((block @ base) % spec.p)
    if rows:
        sub, pivots = rref(np.array(rows), spec.p)
    else:
        sub = np.zeros((0, n * d), dtype=np.int64)
        pivots = ()
    sub_space = Subspace(n * d, spec.p, sub, tuple(pivots))
    keep = [j for j in range(n * d) if j not in set(pivots)]
    dim_q = len(keep)
    # project a free-module vector to quotient coordinates
    def project(v):
        return sub_space.reduce(v)[keep]
    acts = []
    for a in free.actions:
        m = np.zeros((dim_q, dim_q), dtype=np.int64)
        for c, j in enumerate(keep):
            m[:, c] = project(a[:, j] % spec.p)
        acts.append(m)
    labels = tuple(free.labels[j] for j in keep)
    mod = ModuleRep(spec, acts, labels=labels)
    return mod


def presentation_class_map(pres: Presentation) -> tuple[ModuleRep, np.ndarray]:
    """Quotient module together with the projection matrix F -> F/LF'."""
    spec = pres.spec
    mod = quotient_by_relations(pres)
    n = len(pres.gens)
    free = free_module(spec, n, pres.gens)
    rows = []
    for rel in pres.relations:
        base = np.concatenate([x.coeffs for x in rel])
        for e in spec.monomials():
            rows.append((free.monomial_action(e) @ base) % spec.p)
    sub = Subspace.from_rows(np.array(rows), n * spec.dim, spec.p) if rows \
        else Subspace.zero(n * spec.dim, spec.p)
    keep = [j for j in range(n * spec.dim) if j not in set(sub.pivots)]
    proj = np.zeros((len(keep), n * spec.dim), dtype=np.int64)
    for j in range(n * spec.dim):
        col = sub.reduce(np.eye(n * spec.dim, dtype=np.int64)[j])[keep]
        proj[:, j] = col
    return mod, proj


def hom_k(m: ModuleRep, n: ModuleRep) -> ModuleRep:
    """Hom_k(M, N) with the adjoint action X.f = X f(-) - f(X -).

    Row-major vectorization of the matrix of f (shape dim N x dim M):
    the action of X_i is B_i (x) I - I (x) A_i^T.  Fixed points are
    exactly the module homomorphisms M -> N.
    """
    if m.spec != n.spec:
        raise ValueError("modules over different algebras")
    p = m.p
    acts = []
    im = np.eye(m.dim, dtype=np.int64)
    inn = np.eye(n.dim, dtype=np.int64)
    for a, b in zip(m.actions, n.actions):
        acts.append((np.kron(b, im) - np.kron(inn, a.T)) % p)
    return ModuleRep(m.spec, tuple(acts), trusted=True)


def hom_vec(f: np.ndarray) -> np.ndarray:
    """Row-major vectorization used throughout for Hom_k coordinates."""
    return f.reshape(-1)


def hom_unvec(v: np.ndarray, dim_n: int, dim_m: int) -> np.ndarray:
    return np.asarray(v, dtype=np.int64).reshape(dim_n, dim_m)


def trace_vector(dim_m: int) -> np.ndarray:
    """Row vector t with t @ vec(f) = trace(f) for f: M -> M."""
    return hom_vec(np.eye(dim_m, dtype=np.int64))
