"""Independent brute-force ground truth over F_p.

Exact Gaussian elimination (rank, canonical reduced row echelon form, row
space comparison) and exhaustive codeword sweeps (minimum distance, nearest
codeword).  The sweep walks the message space in a base-p Gray order so
each step updates the running codeword with a single row addition.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .algebra import AlgebraElement

ENUMERATION_BOUND = 2**24


def _as_matrix(rows, p: int) -> np.ndarray:
    try:
        mat = np.asarray(rows, dtype=np.int64)
    except (ValueError, TypeError) as exc:
        raise ValueError(f"rows do not form a rectangular integer matrix: {exc}") from None
    if mat.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got ndim={mat.ndim}")
    return mat % p


def rref(rows, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Canonical reduced row echelon form mod p and its pivot columns.

    Pivots are 1, pivot columns are zero elsewhere, and pivot columns
    strictly increase, so equal row spaces yield identical arrays.
    """
    mat = _as_matrix(rows, p).copy()
    nrows, ncols = mat.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(mat[r:, c])
        if nz.size == 0:
            continue
        lead = r + int(nz[0])
        if lead != r:
            mat[[r, lead]] = mat[[lead, r]]
        inv = pow(int(mat[r, c]), p - 2, p)
        mat[r] = mat[r] * inv % p
        col = mat[:, c].copy()
        col[r] = 0
        mat -= np.outer(col, mat[r])
        mat %= p
        pivots.append(c)
        r += 1
    return mat, tuple(pivots)


def rank(rows, p: int) -> int:
    """Rank over F_p via Gaussian elimination with exact field arithmetic."""
    mat = _as_matrix(rows, p)
    if mat.shape[0] == 0:
        return 0
    return len(rref(mat, p)[1])


def row_space_equal(rows_a, rows_b, p: int) -> bool:
    """Whether two row sets span the same subspace of F_p^n."""
    a = _as_matrix(rows_a, p)
    b = _as_matrix(rows_b, p)
    if a.shape[1] != b.shape[1]:
        raise ValueError(f"row length mismatch: {a.shape[1]} vs {b.shape[1]}")
    ra, pa = rref(a, p)
    rb, pb = rref(b, p)
    if pa != pb:
        return False
    return np.array_equal(ra[: len(pa)], rb[: len(pb)])


def row_space_contains(rows, vector, p: int) -> bool:
    """Whether a single vector lies in the span of the rows."""
    mat = _as_matrix(rows, p)
    vec = np.asarray(vector, dtype=np.int64).reshape(1, -1) % p
    if vec.shape[1] != mat.shape[1]:
        raise ValueError(f"length mismatch: {vec.shape[1]} vs {mat.shape[1]}")
    base = rank(mat, p)
    return rank(np.vstack([mat, vec]), p) == base


def gray_message_steps(k: int, p: int) -> Iterator[int]:
    """Positions of the message symbol that changes (by +1 mod p) per step.

    Yields p^k - 1 positions; applying them to an all-zero message visits
    every message in F_p^k exactly once.  The position for step s is the
    p-adic valuation of s.
    """
    for step in range(1, p**k):
        pos = 0
        while step % p == 0:
            step //= p
            pos += 1
        yield pos


def _check_enumeration_bound(k: int, p: int) -> None:
    if p**k > ENUMERATION_BOUND:
        raise ValueError(
            f"message space p^k = {p}^{k} exceeds the enumeration bound {ENUMERATION_BOUND}"
        )


def min_distance_bruteforce(code) -> int:
    """Minimum Hamming weight over all p^k - 1 nonzero codewords.

    Gray-order sweep: one generator-row addition per codeword.
    """
    mat = code.generator_matrix()
    p = code.ctx.p
    k = mat.shape[0]
    if k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    _check_enumeration_bound(k, p)
    current = np.zeros(mat.shape[1], dtype=np.int64)
    best = mat.shape[1] + 1
    for pos in gray_message_steps(k, p):
        current += mat[pos]
        current %= p
        w = int(np.count_nonzero(current))
        if w and w < best:
            best = w
    return best


def nearest_codeword(code, v: AlgebraElement) -> tuple[AlgebraElement, int]:
    """Codeword minimizing Hamming distance to v; ties pick the smallest message.

    Message order for tie-breaking is the flat value sum_j msg_j * p^j.
    """
    mat = code.generator_matrix()
    ctx = code.ctx
    if v.ctx != ctx:
        raise ValueError(f"vector context {v.ctx} does not match code context {ctx}")
    p = ctx.p
    k = mat.shape[0]
    _check_enumeration_bound(k, p)
    target = v.as_vector()
    current = np.zeros(mat.shape[1], dtype=np.int64)
    digits = [0] * k
    place = [p**j for j in range(k)]

    best_d = int(np.count_nonzero(target))
    best_msg = 0
    best_cw = current.copy()
    msg_value = 0
    for pos in gray_message_steps(k, p):
        old = digits[pos]
        new = (old + 1) % p
        digits[pos] = new
        msg_value += (new - old) * place[pos]
        current += mat[pos]
        current %= p
        d = int(np.count_nonzero((target - current) % p))
        if d < best_d or (d == best_d and msg_value < best_msg):
            best_d = d
            best_msg = msg_value
            best_cw = current.copy()
    return AlgebraElement(ctx, best_cw), best_d
