"""Threshold decoder for the binary homogeneous codes (Landrock-Manz style).

A codeword is sum tau(eta) * (b(eta) + 1) over subsets eta of the variables
with m-d <= |eta| < m, where b(eta) is the product of (x_k - 1) over eta.
Multiplying a received vector v by b(kappa^c), the product over the
complement of kappa, kills every basis term except tau(kappa) * 1 plus a
contribution of the error that cannot reach half the length, so the
Hamming weight of the product reads off tau(kappa).

Coefficients must be extracted cardinality layer by cardinality layer,
smallest first: b(eta) * b(kappa^c) vanishes only for eta a subset of
kappa, so subsets of kappa in layers below |kappa| have to be cleared out
of v before the test at kappa is clean.  Within one layer the tests are
independent of each other's updates.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .algebra import (
    AlgebraElement,
    b_subset,
    mask_complement,
    mask_indices,
    times_x_minus_one,
)


class DecodeStatus(Enum):
    CORRECTED = "corrected"
    DETECTED_UNCORRECTABLE = "detected-uncorrectable"


@dataclass(frozen=True)
class DecodeResult:
    """Recovered coefficients, the codeword they span, and the leftover error.

    The identity received = codeword + residual holds bit for bit; the
    status is CORRECTED exactly when the residual weight is within the
    guaranteed correction radius.
    """

    tau: dict[int, int]
    codeword: AlgebraElement
    residual: AlgebraElement
    status: DecodeStatus


def capability(d: int, m: int) -> int:
    """Guaranteed number of correctable errors, 2^(m-d-1) - 1.

    Only degrees 1 <= d <= m-1 admit a decoder; d = m-1 gives capability 0
    (exact-match decoding only).
    """
    if not 1 <= d <= m - 1:
        raise ValueError(f"degree {d} out of range [1, {m - 1}] for decoding")
    return 2 ** (m - d - 1) - 1


def extract_coefficient(v: AlgebraElement, kappa: int) -> int:
    """Threshold test for one coefficient: weigh v * b(kappa complement).

    Returns 0 iff the product weight is below 2^(m-1).  kappa must be a
    proper subset of the variables; the empty complement would make the
    multiplier the unit, which carries no threshold information.
    """
    ctx = v.ctx
    if ctx.p != 2:
        raise ValueError(f"decoding requires p = 2, context has p = {ctx.p}")
    full = (1 << ctx.m) - 1
    if not 0 <= kappa < full:
        raise ValueError(f"subset mask {kappa:#b} must be a proper subset of {ctx.m} variables")
    product = v
    for j in mask_indices(mask_complement(kappa, ctx.m)):
        product = times_x_minus_one(product, j)
    return 1 if product.weight() >= 1 << (ctx.m - 1) else 0


def decode(v: AlgebraElement, d: int) -> DecodeResult:
    """Recover all coefficients of the degree-d binary homogeneous code.

    Walks cardinalities m-d up to m-1 in ascending order (required; see
    module docstring), subtracting each recovered basis element from the
    working vector.  Whatever remains after the last layer is the error
    estimate; the result always carries a status instead of failing.
    """
    ctx = v.ctx
    if ctx.p != 2:
        raise ValueError(f"decoding requires p = 2, context has p = {ctx.p}")
    m = ctx.m
    cap = capability(d, m)
    ones = ctx.all_one()

    work = v
    tau: dict[int, int] = {}
    for card in range(m - d, m):
        for mask in range(1 << m):
            if mask.bit_count() != card:
                continue
            bit = extract_coefficient(work, mask)
            tau[mask] = bit
            if bit:
                work = work + b_subset(ctx, mask) + ones
    residual = work
    codeword = v + residual
    status = (
        DecodeStatus.CORRECTED
        if residual.weight() <= cap
        else DecodeStatus.DETECTED_UNCORRECTABLE
    )
    return DecodeResult(tau=tau, codeword=codeword, residual=residual, status=status)
