"""Pure-python (numpy) row-reduction kernels over GF(p).

Reference implementation of the two elimination entry points.  The
compiled module ``tatecoh._gfpkernel`` implements the same pivot rule
(leftmost eligible column, first nonzero row at or below the cursor,
full reduction, pivots scaled to 1) so results agree bit for bit.
"""
from __future__ import annotations

import numpy as np


def rref_pivots(a: np.ndarray, p: int) -> list[int]:
    """Reduce ``a`` (int64, entries in [0, p)) in place to rref mod p."""
    m, n = a.shape
    row = 0
    pivots: list[int] = []
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(a[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            a[[row, piv]] = a[[piv, row]]
        v = int(a[row, col])
        if v != 1:
            a[row] = (a[row] * pow(v, p - 2, p)) % p
        targets = np.nonzero(a[:, col])[0]
        targets = targets[targets != row]
        if targets.size:
            a[targets] = (a[targets] - np.outer(a[targets, col], a[row])) % p
        pivots.append(col)
        row += 1
    return pivots


def rref_gf2_packed(w: np.ndarray, ncols: int) -> list[int]:
    """Rref of a bit-packed GF(2) matrix (uint64 words), in place."""
    m = w.shape[0]
    row = 0
    pivots: list[int] = []
    for col in range(ncols):
        if row == m:
            break
        wi, b = col >> 6, col & 63
        bit = np.uint64(1) << np.uint64(b)
        hits = np.nonzero(w[row:, wi] & bit)[0]
        if hits.size == 0:
            continue
        piv = row + int(hits[0])
        if piv != row:
            w[[row, piv]] = w[[piv, row]]
        targets = np.nonzero(w[:, wi] & bit)[0]
        targets = targets[targets != row]
        if targets.size:
            w[targets] ^= w[row]
        pivots.append(col)
        row += 1
    return pivots
