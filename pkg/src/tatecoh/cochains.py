"""Module-valued cochain complexes on a complete resolution.

A degree-n cochain with values in V is a module map P_n -> V, recorded
by its values on the free generators: an array Y of shape
(dim V, rank_n).  The differential is precomposition with the boundary,
which on generator values is multiplication by the boundary's
algebra-matrix acting on V:

    (delta Y)_j = sum_i (lambda_ij acting on V) Y_i.

Cocycles kill the image of the next boundary, hence factor through the
syzygy: that is the dictionary between cochain classes and stable maps,
and it is an isomorphism on cohomology.

On the labelled resolution of k with values in k the boundary acts
through the augmentation, so minimality makes every differential zero:
cohomology in degree n is exactly k^(rank_n) with the generator-dual
basis.
"""
from __future__ import annotations

import numpy as np

from .algebra import ModuleRep
from .linalg import Subspace, image_basis, kernel_basis
from .products import module_map_from_generators, _gencols


class CohomologySpace:
    """Cocycles modulo coboundaries with canonical coordinates."""

    __slots__ = ("p", "ambient", "cocycles", "coboundaries", "rep_rows", "_pivots")

    def __init__(self, cocycles: Subspace, coboundaries: Subspace):
        self.p = cocycles.p
        self.ambient = cocycles.ambient
        self.cocycles = cocycles
        self.coboundaries = coboundaries
        if not cocycles.contains(coboundaries):
            raise AssertionError("coboundaries escaped the cocycle space")
        residues = np.array([coboundaries.reduce(r) for r in cocycles.basis],
                            dtype=np.int64).reshape(-1, self.ambient)
        comp = Subspace.from_rows(residues, self.ambient, self.p)
        self.rep_rows = comp.basis
        self._pivots = list(comp.pivots)

    @property
    def dim(self) -> int:
        return self.cocycles.dim - self.coboundaries.dim

    def coords(self, flat: np.ndarray) -> np.ndarray:
        if not self.cocycles.contains_vector(flat % self.p):
            raise ValueError("vector is not a cocycle")
        res = self.coboundaries.reduce(flat % self.p)
        out = res[self._pivots] if self._pivots else np.zeros(0, dtype=np.int64)
        back = (out @ self.rep_rows) % self.p if out.size else np.zeros_like(res)
        if not np.array_equal(back % self.p, res):
            raise AssertionError("residue escaped the canonical complement")
        return out.astype(np.int64)

    def representative(self, coords: np.ndarray) -> np.ndarray:
        coords = np.asarray(coords, dtype=np.int64) % self.p
        if coords.shape != (self.dim,):
            raise ValueError("class vector has wrong length")
        if self.dim == 0:
            return np.zeros(self.ambient, dtype=np.int64)
        return (coords @ self.rep_rows) % self.p


class CochainComplex:
    """Hom_L(P_*, V) for a complete resolution and coefficient module V."""

    def __init__(self, res, V: ModuleRep):
        if res.spec != V.spec:
            raise ValueError("coefficients live over a different algebra")
        self.res = res
        self.V = V
        self.p = V.spec.p
        self._delta: dict[int, np.ndarray] = {}
        self._cohom: dict[int, CohomologySpace] = {}

    # -- coordinates

    def rank(self, n: int) -> int:
        return self.res.rank(n)

    def flat_dim(self, n: int) -> int:
        return self.rank(n) * self.V.dim

    def flatten(self, Y: np.ndarray) -> np.ndarray:
        """Generator-major flattening of a (dim V, rank) value array."""
        return np.ascontiguousarray(Y.T).reshape(-1)

    def unflatten(self, flat: np.ndarray, n: int) -> np.ndarray:
        return np.asarray(flat, dtype=np.int64).reshape(self.rank(n), self.V.dim).T

    # -- the differential

    def delta_matrix(self, n: int) -> np.ndarray:
        """Matrix of delta: C^n -> C^(n+1) on generator-major coordinates."""
        if n not in self._delta:
            lam = self.res.lambda_boundary(n + 1)
            t_src, t_tgt = self.rank(n), self.rank(n + 1)
            dv = self.V.dim
            out = np.zeros((t_tgt * dv, t_src * dv), dtype=np.int64)
            for j in range(t_tgt):
                for i in range(t_src):
                    out[j * dv:(j + 1) * dv, i * dv:(i + 1) * dv] = \
                        self.V.element_action(lam[i][j])
            self._delta[n] = out % self.p
        return self._delta[n]

    def delta(self, n: int, Y: np.ndarray) -> np.ndarray:
        return self.unflatten((self.delta_matrix(n) @ self.flatten(Y)) % self.p, n + 1)

    def is_cocycle(self, n: int, Y: np.ndarray) -> bool:
        return not self.delta(n, Y).any()

    # -- spaces

    def cocycle_space(self, n: int) -> Subspace:
        rows = kernel_basis(self.delta_matrix(n), self.p)
        return Subspace.from_rows(rows, self.flat_dim(n), self.p)

    def coboundary_space(self, n: int) -> Subspace:
        return image_basis(self.delta_matrix(n - 1), self.p)

    def cohomology(self, n: int) -> CohomologySpace:
        if n not in self._cohom:
            self._cohom[n] = CohomologySpace(self.cocycle_space(n),
                                             self.coboundary_space(n))
        return self._cohom[n]

    # -- assembling and the stable dictionary

    def assemble(self, n: int, Y: np.ndarray) -> np.ndarray:
        """Full k-matrix P_n -> V of the cochain with generator values Y."""
        return module_map_from_generators(self.V, np.asarray(Y, dtype=np.int64))

    def to_stable(self, n: int, Y: np.ndarray) -> np.ndarray:
        """The map omega^n -> V that a cocycle factors through."""
        if not self.is_cocycle(n, Y):
            raise ValueError("only cocycles factor through the syzygy")
        return (self.assemble(n, Y) @ self.res.section(n)) % self.p

    def from_stable(self, n: int, phi: np.ndarray) -> np.ndarray:
        """Generator values of the cochain phi . proj."""
        full = (np.asarray(phi, dtype=np.int64) @ self.res.proj(n)) % self.p
        return full[:, _gencols(self.rank(n), self.V.spec.dim)]
