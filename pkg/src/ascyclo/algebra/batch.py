"""Vectorised polynomial arithmetic over F_q on numpy arrays of codes.

A batch of polynomials is an (N, n) int64 array whose row k holds the
coefficient codes of polynomial k, low degree first.  All routines use the
field's q x q lookup tables, so they are meant for small q (<= 1024); this is
the workhorse of the exhaustive scans, not of the scalar library.
"""

import numpy as np


def codes_to_coeffs(codes, q, n):
    """Split integers sum c_i q^i into an (N, n) coefficient array."""
    codes = np.asarray(codes, dtype=np.int64)
    out = np.empty((codes.shape[0], n), dtype=np.int64)
    rest = codes.copy()
    for i in range(n):
        out[:, i] = rest % q
        rest //= q
    return out


def coeffs_to_codes(coeffs, q):
    coeffs = np.asarray(coeffs, dtype=np.int64)
    out = np.zeros(coeffs.shape[0], dtype=np.int64)
    for i in range(coeffs.shape[1] - 1, -1, -1):
        out = out * q + coeffs[:, i]
    return out


def mul(field, A, B):
    """Row-wise products of two batches (broadcasting a single row is allowed)."""
    add, mult, _, _ = field.numpy_tables()
    A = np.atleast_2d(A)
    B = np.atleast_2d(B)
    rows = max(A.shape[0], B.shape[0])
    out = np.zeros((rows, A.shape[1] + B.shape[1] - 1), dtype=np.int64)
    for i in range(A.shape[1]):
        ai = A[:, i]
        for j in range(B.shape[1]):
            out[:, i + j] = add[out[:, i + j], mult[ai, B[:, j]]]
    return out


def reduce_mod(field, C, M):
    """Reduce every row of C modulo the monic polynomial M (a code tuple).

    Returns an (N, deg M) array.
    """
    add, mult, neg, _ = field.numpy_tables()
    C = np.array(C, dtype=np.int64, copy=True)
    n = len(M) - 1
    negM = neg[np.asarray(M[:-1], dtype=np.int64)]
    for k in range(C.shape[1] - 1, n - 1, -1):
        lead = C[:, k]
        base = k - n
        for i in range(n):
            C[:, base + i] = add[C[:, base + i], mult[lead, negM[i]]]
        C[:, k] = 0
    if C.shape[1] < n:
        C = np.hstack([C, np.zeros((C.shape[0], n - C.shape[1]), dtype=np.int64)])
    return C[:, :n]


def reduce_mod_rows(field, C, Ms):
    """Reduce row k of C modulo the monic polynomial in row k of Ms.

    Ms has shape (N, n + 1) with every row monic of degree n.
    """
    add, mult, neg, _ = field.numpy_tables()
    C = np.array(C, dtype=np.int64, copy=True)
    n = Ms.shape[1] - 1
    negM = neg[Ms[:, :n]]
    for k in range(C.shape[1] - 1, n - 1, -1):
        lead = C[:, k]
        base = k - n
        for i in range(n):
            C[:, base + i] = add[C[:, base + i], mult[lead, negM[:, i]]]
        C[:, k] = 0
    if C.shape[1] < n:
        C = np.hstack([C, np.zeros((C.shape[0], n - C.shape[1]), dtype=np.int64)])
    return C[:, :n]


def mulmod(field, A, B, M):
    return reduce_mod(field, mul(field, A, B), M)


def powmod(field, A, e, M):
    """Row-wise A^e mod M by square and multiply (e >= 1)."""
    result = None
    base = reduce_mod(field, A, M)
    while e:
        if e & 1:
            result = base if result is None else mulmod(field, result, base, M)
        e >>= 1
        if e:
            base = mulmod(field, base, base, M)
    return result
