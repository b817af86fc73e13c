"""Exact dense linear algebra over the prime field GF(p).

Everything the higher layers do — syzygies, intertwiner spaces, cocycle
cohomology, ideal scans — bottoms out in the primitives of this module:
reduced row echelon form under one fixed pivoting rule (leftmost
eligible column, first nonzero row at or below the cursor), kernel
bases, linear solves with free variables pinned to zero, and
echelonized subspace arithmetic.  Determinism is a contract: identical
inputs give bit-identical outputs, on either elimination backend.

Matrices are plain numpy ``int64`` arrays with entries canonicalized to
[0, p).  Row vectors span; ``Subspace`` stores a reduced-echelon basis.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import _gfpkernel_py as _py_kernel

try:
    from . import _gfpkernel as _c_kernel
except ImportError:  # extension not built; numpy path is fully equivalent
    _c_kernel = None

if os.environ.get("TATECOH_PURE_PYTHON"):
    _kernel = _py_kernel
else:
    _kernel = _c_kernel if _c_kernel is not None else _py_kernel

BACKEND = "compiled" if _kernel is not _py_kernel else "python"

# Dense elimination switches to the bit-packed GF(2) path above this
# element count; below it the generic path is cheaper than packing.
_PACK_THRESHOLD = 1024


@dataclass(frozen=True)
class FieldSpec:
    """The prime field GF(p)."""

    p: int

    def __post_init__(self):
        if self.p < 2 or not _is_prime(self.p):
            raise ValueError(f"field order must be prime, got {self.p}")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def asmat(a, p: int) -> np.ndarray:
    """Coerce to a canonical int64 matrix with entries in [0, p)."""
    m = np.asarray(a, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    return m % p


def _pack_gf2(a: np.ndarray) -> np.ndarray:
    m, n = a.shape
    nwords = max(1, (n + 63) >> 6)
    w = np.zeros((m, nwords), dtype=np.uint64)
    bits = a.astype(np.uint64) & np.uint64(1)
    for k in range((n + 63) >> 6):
        chunk = bits[:, 64 * k:64 * (k + 1)]
        shifts = np.arange(chunk.shape[1], dtype=np.uint64)
        w[:, k] = (chunk << shifts).sum(axis=1, dtype=np.uint64)
    return w


def _unpack_gf2(w: np.ndarray, n: int) -> np.ndarray:
    m = w.shape[0]
    out = np.zeros((m, n), dtype=np.int64)
    for k in range((n + 63) >> 6):
        hi = min(64, n - 64 * k)
        shifts = np.arange(hi, dtype=np.uint64)
        out[:, 64 * k:64 * k + hi] = ((w[:, k:k + 1] >> shifts) & np.uint64(1)).astype(np.int64)
    return out


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form.  Returns (matrix, pivot columns).

    Zero rows are trimmed, so the result has exactly ``rank`` rows.
    """
    a = asmat(a, p).copy()
    if a.size == 0:
        return a[:0], ()
    if p == 2 and a.size >= _PACK_THRESHOLD:
        w = _pack_gf2(a)
        pivots = _kernel.rref_gf2_packed(w, a.shape[1])
        r = _unpack_gf2(w, a.shape[1])
    else:
        a = np.ascontiguousarray(a)
        pivots = _kernel.rref_pivots(a, p)
        r = a
    return r[:len(pivots)].copy(), tuple(pivots)


def rank(a: np.ndarray, p: int) -> int:
    return len(rref(a, p)[1])


def kernel_basis(a: np.ndarray, p: int) -> np.ndarray:
    """Reduced-echelon basis of the right kernel {x : a @ x = 0}."""
    a = asmat(a, p)
    n = a.shape[1]
    r, pivots = rref(a, p)
    free = [j for j in range(n) if j not in set(pivots)]
    if not free:
        return np.zeros((0, n), dtype=np.int64)
    vecs = np.zeros((len(free), n), dtype=np.int64)
    for i, j in enumerate(free):
        vecs[i, j] = 1
        for row, pc in enumerate(pivots):
            vecs[i, pc] = (-int(r[row, j])) % p
    out, _ = rref(vecs, p)
    return out


def solve_many(a: np.ndarray, b: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Solve a @ x = b column by column.

    Returns (X, ok) where column j of X is the canonical solution of
    a @ x = b[:, j] (free variables zero) and ok[j] says whether that
    column was consistent.  Inconsistent columns of X are zero.
    """
    a = asmat(a, p)
    b = asmat(b, p)
    m, n = a.shape
    k = b.shape[1]
    if b.shape[0] != m:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    aug = np.hstack([a, b])
    r, pivots = rref(aug, p)
    x = np.zeros((n, k), dtype=np.int64)
    ok = np.ones(k, dtype=bool)
    for row, pc in enumerate(pivots):
        if pc >= n:
            # pivot in the augmented block: those columns are inconsistent
            ok &= r[row, n:] == 0
    for row, pc in enumerate(pivots):
        if pc < n:
            x[pc] = r[row, n:]
    x[:, ~ok] = 0
    return x, ok


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """Canonical solution of a @ x = b, or None when inconsistent."""
    b = np.asarray(b, dtype=np.int64) % p
    x, ok = solve_many(a, b.reshape(-1, 1), p)
    return x[:, 0] if ok[0] else None


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(p)^n held as a reduced-echelon row basis.

    The rref basis (with its pivot tuple) is a canonical form, so two
    Subspace objects represent the same subspace iff their fields are
    equal elementwise.
    """

    ambient: int
    p: int
    basis: np.ndarray        # rank x ambient, rref
    pivots: tuple[int, ...]

    @classmethod
    def from_rows(cls, rows, ambient: int, p: int) -> "Subspace":
        rows = asmat(rows, p) if np.size(rows) else np.zeros((0, ambient), dtype=np.int64)
        if rows.shape[0] and rows.shape[1] != ambient:
            raise ValueError("row length does not match ambient dimension")
        r, piv = rref(rows, p) if rows.shape[0] else (np.zeros((0, ambient), dtype=np.int64), ())
        return cls(ambient, p, r, piv)

    @classmethod
    def zero(cls, ambient: int, p: int) -> "Subspace":
        return cls(ambient, p, np.zeros((0, ambient), dtype=np.int64), ())

    @classmethod
    def full(cls, ambient: int, p: int) -> "Subspace":
        return cls(ambient, p, np.eye(ambient, dtype=np.int64), tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Canonical residue of v modulo this subspace.

        Clears the pivot coordinates in one step: since the basis is in
        reduced echelon form, each pivot column is nonzero in exactly
        one row, so v - v[pivots] @ basis is the unique coset
        representative supported off the pivots.
        """
        v = np.asarray(v, dtype=np.int64) % self.p
        if self.pivots:
            c = v[list(self.pivots)]
            if c.any():
                v = (v - c @ self.basis) % self.p
        return v

    def reduce_rows(self, rows: np.ndarray) -> np.ndarray:
        """Canonical residues of many vectors at once (rows of a matrix)."""
        rows = np.asarray(rows, dtype=np.int64) % self.p
        if self.pivots and rows.size:
            rows = (rows - rows[:, list(self.pivots)] @ self.basis) % self.p
        return rows

    def contains_vector(self, v: np.ndarray) -> bool:
        return not self.reduce(v).any()

    def contains(self, other: "Subspace") -> bool:
        return all(self.contains_vector(row) for row in other.basis)

    def coords(self, v: np.ndarray) -> np.ndarray:
        """Coordinates of v in the rref basis (requires membership)."""
        v = np.asarray(v, dtype=np.int64) % self.p
        c = v[list(self.pivots)] if self.pivots else np.zeros(0, dtype=np.int64)
        if ((c @ self.basis) % self.p != v).any():
            raise ValueError("vector not in subspace")
        return c

    def add(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.from_rows(
            np.vstack([self.basis, other.basis]), self.ambient, self.p)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient, self.p)
        # x@A = y@B  <=>  (x|y) in ker [A^T | -B^T]
        stacked = np.hstack([self.basis.T, (-other.basis.T) % self.p])
        ker = kernel_basis(stacked, self.p)
        rows = (ker[:, :self.dim] @ self.basis) % self.p
        return Subspace.from_rows(rows, self.ambient, self.p)

    def complement_in(self, ambient_space: "Subspace") -> "Subspace":
        """Deterministic complement C with self + C = ambient_space.

        Residues of the ambient basis rows modulo self are echelonized;
        they are supported off self's pivot columns, so the span meets
        self trivially.
        """
        self._check(ambient_space)
        if not ambient_space.contains(self):
            raise ValueError("complement_in: not a subspace of the ambient space")
        residues = [self.reduce(row) for row in ambient_space.basis]
        residues = [v for v in residues if v.any()]
        if not residues:
            return Subspace.zero(self.ambient, self.p)
        return Subspace.from_rows(np.array(residues), self.ambient, self.p)

    def _check(self, other: "Subspace") -> None:
        if self.ambient != other.ambient or self.p != other.p:
            raise ValueError("subspace mismatch")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.p == other.p and self.pivots == other.pivots
                and np.array_equal(self.basis, other.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, p={self.p})"


def quotient_complement(sub: Subspace, ambient_space: Subspace | None = None) -> Subspace:
    """Canonical complement of ``sub`` inside ``ambient_space`` (default: full)."""
    if ambient_space is None:
        ambient_space = Subspace.full(sub.ambient, sub.p)
    return sub.complement_in(ambient_space)


def image_basis(a: np.ndarray, p: int) -> Subspace:
    """Column space of ``a`` as a Subspace (rows = basis vectors)."""
    a = asmat(a, p)
    return Subspace.from_rows(a.T.copy(), a.shape[0], p)


def invert(a: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix; raises ValueError when singular."""
    a = asmat(a, p)
    n = a.shape[0]
    if a.shape[1] != n:
        raise ValueError("invert: matrix not square")
    x, ok = solve_many(a, np.eye(n, dtype=np.int64), p)
    if not ok.all() or len(rref(a, p)[1]) != n:
        raise ValueError("invert: matrix is singular")
    return x
