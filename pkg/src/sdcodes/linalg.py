"""Gaussian elimination over GF(q) on integer-encoded numpy matrices."""
from __future__ import annotations

import numpy as np

from .gf import GF


def rref(F: GF, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with zero rows dropped, plus pivot columns."""
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = F.inv(int(A[r, c]))
        if inv != 1:
            A[r] = F.vmul(A[r], inv)
        for i in np.nonzero(A[:, c])[0]:
            if i != r:
                factor = F.neg(int(A[i, c]))
                A[i] = F.vadd(A[i], F.vmul(A[r], factor))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(F: GF, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def nullspace(F: GF, M, n: int | None = None) -> np.ndarray:
    """Basis (as rows) of {x : M x^T = 0}."""
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        if n is None:
            n = M.shape[1] if M.ndim == 2 else 0
        return np.eye(n, dtype=np.int64)
    R, pivots = rref(F, M)
    n = M.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for i, pc in enumerate(pivots):
            basis[t, pc] = F.neg(int(R[i, f]))
    return basis


def matmul(F: GF, A, B) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        out = F.vadd(out, F.vmul(A[:, t : t + 1], B[t : t + 1, :]))
    return out


def same_row_space(F: GF, A, B) -> bool:
    A, B = np.asarray(A), np.asarray(B)
    if A.size == 0 or B.size == 0:
        return rank(F, A) == rank(F, B) == 0
    ra, _ = rref(F, A)
    rb, _ = rref(F, B)
    return ra.shape == rb.shape and bool(np.array_equal(ra, rb))


def in_row_space(F: GF, G, v) -> bool:
    G = np.asarray(G, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64).reshape(1, -1)
    if G.size == 0:
        return not v.any()
    return rank(F, np.vstack([G, v])) == rank(F, G)
