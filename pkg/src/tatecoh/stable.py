"""Stable homomorphism spaces and Tate cohomology dimensions.

Hom-underline(M, N) is Hom_L(M, N) modulo maps factoring through a
projective; since projectives are sums of the rank-one free module,
that subspace is spanned by composites M -> L -> N, which the Frobenius
self-duality of L makes explicit.  Tate cohomology is then
Ext-hat^n(M, N) = Hom-underline(Omega^n M, N) with Omega^n M read off a
complete resolution of M.

Classes carry canonical coordinates: the reduced-echelon complement of
the projectively-trivial subspace inside the intertwiner space is a
deterministic basis, and a class vector is the coefficient tuple of the
reduced residue of its representative in that basis.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import ModuleRep, hom_unvec, hom_vec
from .linalg import Subspace, kernel_basis
from .resolution import resolution_of


def intertwiner_rows(M: ModuleRep, N: ModuleRep) -> np.ndarray:
    """Reduced-echelon basis of Hom_L(M, N), rows = row-major matrices."""
    p = M.spec.p
    amb = M.dim * N.dim
    if amb == 0:
        return np.zeros((0, amb), dtype=np.int64)
    # adjoint-action blocks of hom_k written straight into one stack;
    # building the module object would hold r kron matrices alive at once
    im = np.eye(M.dim, dtype=np.int64)
    inn = np.eye(N.dim, dtype=np.int64)
    stacked = np.empty((len(M.actions) * amb, amb), dtype=np.int64)
    for i, (a, b) in enumerate(zip(M.actions, N.actions)):
        stacked[i * amb:(i + 1) * amb] = (np.kron(b, im) - np.kron(inn, a.T)) % p
    return kernel_basis(stacked, p)


def projective_hom_rows(M: ModuleRep, N: ModuleRep) -> np.ndarray:
    """Spanning rows for the maps M -> N factoring through a projective.

    The algebra is self-injective, so every such map is a sum of
    composites through the rank-one free module L.  Hom_L(M, L) is the
    Frobenius dual of M: phi in M* corresponds to the module map
    m -> sum_e phi(X^(top-e) m) X^e, and postcomposing with 1 -> n
    gives m -> sum_e phi(X^(top-e) m) X^e n.  Letting phi run over the
    dual basis of M and n over the basis of N spans the whole subspace,
    in dim M * dim N rows of length dim N * dim M.
    """
    spec = M.spec
    dm, dn = M.dim, N.dim
    if dm * dn == 0:
        return np.zeros((0, dm * dn), dtype=np.int64)
    top = spec.top_monomial()
    monos = spec.monomials()
    n_act = np.stack([N.monomial_action(e) for e in monos])
    m_act = np.stack([M.monomial_action(tuple(t - x for t, x in zip(top, e)))
                      for e in monos])
    # rows[w, j] = the matrix sum_e outer(X^e n_j, row w of X^(top-e))
    rows = np.einsum("esj,ewt->wjst", n_act, m_act)
    return rows.reshape(dm * dn, dn * dm) % spec.p


class StableHom:
    """Hom-underline(M, N) with canonical class coordinates.

    ``ptriv``: the subspace of maps through projectives; ``rep_rows``:
    canonical reduced-echelon complement of ptriv inside the full
    intertwiner space, one row per stable class coordinate.  The full
    space is not retained (at deep syzygies it dwarfs the quotient data)
    -- only its dimension ``hom_dim`` survives.
    """

    __slots__ = ("M", "N", "p", "hom_dim", "ptriv", "rep_rows", "_rep_pivots")

    def __init__(self, M: ModuleRep, N: ModuleRep):
        if M.spec != N.spec:
            raise ValueError("modules live over different algebras")
        self.M, self.N, self.p = M, N, M.spec.p
        amb = M.dim * N.dim
        hom = Subspace.from_rows(intertwiner_rows(M, N), amb, self.p)
        self.hom_dim = hom.dim
        self.ptriv = Subspace.from_rows(projective_hom_rows(M, N), amb, self.p)
        if not hom.contains(self.ptriv):
            raise AssertionError("projective factorizations are not all module maps")

        residues = self.ptriv.reduce_rows(hom.basis).reshape(-1, amb)
        comp = Subspace.from_rows(residues, amb, self.p)
        self.rep_rows = comp.basis
        self._rep_pivots = list(comp.pivots)
        if len(self._rep_pivots) != self.hom_dim - self.ptriv.dim:
            raise AssertionError("complement dimension mismatch")

    @property
    def dim(self) -> int:
        return self.hom_dim - self.ptriv.dim

    def check_hom(self, F: np.ndarray) -> None:
        p = self.p
        for a, b in zip(self.M.actions, self.N.actions):
            if not np.array_equal((b @ F) % p, (F @ a) % p):
                raise ValueError("matrix is not a module homomorphism")

    def coords(self, F: np.ndarray) -> np.ndarray:
        """Canonical class coordinates of a homomorphism matrix."""
        self.check_hom(F)
        res = self.ptriv.reduce(hom_vec(F % self.p))
        out = res[self._rep_pivots] if self._rep_pivots else np.zeros(0, dtype=np.int64)
        # the residue must lie in the canonical complement
        back = (out @ self.rep_rows) % self.p if out.size else np.zeros_like(res)
        if not np.array_equal(back % self.p, res):
            raise AssertionError("residue escaped the canonical complement")
        return out.astype(np.int64)

    def matrix(self, coords: np.ndarray) -> np.ndarray:
        """Canonical representative homomorphism of a class vector."""
        coords = np.asarray(coords, dtype=np.int64) % self.p
        if coords.shape != (self.dim,):
            raise ValueError("class vector has wrong length")
        vec = (coords @ self.rep_rows) % self.p if self.dim else \
            np.zeros(self.M.dim * self.N.dim, dtype=np.int64)
        return hom_unvec(vec, self.N.dim, self.M.dim)

    def is_stably_zero(self, F: np.ndarray) -> bool:
        return not self.coords(F).any()


_STABLE_CACHE: dict[tuple, StableHom] = {}


def stable_hom(M: ModuleRep, N: ModuleRep) -> StableHom:
    key = (M.content_key(), N.content_key())
    if key not in _STABLE_CACHE:
        _STABLE_CACHE[key] = StableHom(M, N)
    return _STABLE_CACHE[key]


# ---------------------------------------------------------------------------
# Tate cohomology dimensions


@dataclass(frozen=True)
class ExtClassSpace:
    """The space Ext-hat^n(M, N) presented on Hom(Omega^n M, N)."""
    M: ModuleRep
    N: ModuleRep
    degree: int
    stable: StableHom

    @property
    def dim(self) -> int:
        return self.stable.dim


def ext_class_space(M: ModuleRep, N: ModuleRep, n: int) -> ExtClassSpace:
    res = resolution_of(M)
    return ExtClassSpace(M, N, n, stable_hom(res.omega(n), N))


def ext_hat_dim(M: ModuleRep, N: ModuleRep, n: int) -> int:
    return ext_class_space(M, N, n).dim


def ext_table(M: ModuleRep, N: ModuleRep, n_min: int, n_max: int) -> dict[int, int]:
    """Dimensions of Ext-hat^n(M, N) over a degree window."""
    return {n: ext_hat_dim(M, N, n) for n in range(n_min, n_max + 1)}


def hom_dim(M: ModuleRep, N: ModuleRep) -> int:
    """Dimension of the full (unstable) homomorphism space."""
    return int(intertwiner_rows(M, N).shape[0])
