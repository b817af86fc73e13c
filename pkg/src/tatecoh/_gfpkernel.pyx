# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row-reduction kernels over GF(p).

Both entry points mirror ``tatecoh._gfpkernel_py`` exactly: same pivot
rule (leftmost eligible column, first nonzero row at or below the
cursor), same full reduction, same scaling.  Outputs are bit-identical
across the two backends.
"""
import numpy as np

cimport numpy as cnp

cnp.import_array()


def rref_pivots(cnp.int64_t[:, ::1] a, long p):
    """Reduce ``a`` in place to reduced row echelon form mod p.

    Returns the list of pivot columns in order.  Entries of ``a`` must
    already lie in [0, p).
    """
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t row = 0, col, i, j, piv
    cdef long inv, factor, v
    pivots = []
    for col in range(n):
        if row == m:
            break
        piv = -1
        for i in range(row, m):
            if a[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != row:
            for j in range(n):
                v = a[row, j]
                a[row, j] = a[piv, j]
                a[piv, j] = v
        v = a[row, col]
        if v != 1:
            inv = _modinv(v, p)
            for j in range(col, n):
                a[row, j] = (a[row, j] * inv) % p
        for i in range(m):
            if i == row:
                continue
            factor = a[i, col]
            if factor != 0:
                for j in range(col, n):
                    # C '%' keeps the sign of the dividend; renormalize.
                    v = (a[i, j] - factor * a[row, j]) % p
                    if v < 0:
                        v += p
                    a[i, j] = v
        pivots.append(col)
        row += 1
    return pivots


cdef long _modinv(long v, long p):
    # Fermat: v^(p-2) mod p.  p is prime and v is nonzero mod p.
    cdef long result = 1
    cdef long base = v % p
    cdef long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def rref_gf2_packed(cnp.uint64_t[:, ::1] w, long ncols):
    """Reduced row echelon form of a bit-packed GF(2) matrix, in place.

    ``w`` holds one row per row of the logical matrix, 64 columns per
    word, bit j of word k being logical column 64*k + j.  Returns the
    pivot column list.
    """
    cdef Py_ssize_t m = w.shape[0]
    cdef Py_ssize_t nwords = w.shape[1]
    cdef Py_ssize_t row = 0, col, i, j, piv, wi
    cdef unsigned long long bit, tmp
    pivots = []
    for col in range(ncols):
        if row == m:
            break
        wi = col >> 6
        bit = (<unsigned long long>1) << (col & 63)
        piv = -1
        for i in range(row, m):
            if w[i, wi] & bit:
                piv = i
                break
        if piv < 0:
            continue
        if piv != row:
            for j in range(nwords):
                tmp = w[row, j]
                w[row, j] = w[piv, j]
                w[piv, j] = tmp
        for i in range(m):
            if i != row and (w[i, wi] & bit):
                for j in range(nwords):
                    w[i, j] ^= w[row, j]
        pivots.append(col)
        row += 1
    return pivots
