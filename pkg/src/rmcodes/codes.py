"""Code constructors and closed-form parameter calculators.

Three families of length p^m over F_p, each realizable two ways:

* order-nu codes spanned by evaluations of all monomials of degree <= nu
  (unit weights), equivalently by the (x-1)-products of digit sum
  >= m(p-1) - nu;
* weighted-order codes, the same with a weight on each variable;
* homogeneous codes spanned by evaluations of degree-d forms, with a
  binary basis of shifted (x-1)-products.

The two constructions of each code must span the same row space; every
constructor verifies that its rows are independent at build time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import oracle
from .algebra import (
    AlgebraContext,
    AlgebraElement,
    b_subset,
    jennings_element,
    weighted_p_weight,
)
from .poly import (
    ReducedPolynomial,
    WeightProfile,
    as_weight_profile,
    homogeneous_monomials,
    monomials_up_to_weighted_degree,
    phi,
)


class ConsistencyError(RuntimeError):
    """A constructed generator set is rank deficient (internal invariant broken)."""


# -- parameter calculators (pure arithmetic, q need not be prime) ------------


def nu_max(omega: int, weights: Sequence[int] | WeightProfile, q: int) -> int:
    """Largest digit sum of a tuple in [0, q-1]^m with weighted sum <= omega.

    Greedy over ascending weights: saturate the cheapest variables to
    exponent q-1, then put the largest affordable exponent on the next one.
    Equivalent to exhaustive maximization because every unit of exponent on
    variable k costs exactly w_k.
    """
    wp = weights if isinstance(weights, WeightProfile) else WeightProfile(weights)
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    cap = (q - 1) * wp.total
    if not 0 <= omega <= cap:
        raise ValueError(f"weighted order {omega} out of range [0, {cap}]")
    budget = omega
    total = 0
    for w in wp:
        take = min(q - 1, budget // w)
        total += take
        budget -= take * w
        if budget == 0:
            break
    return total


@lru_cache(maxsize=None)
def _count_bounded(weights: tuple[int, ...], omega: int, q: int) -> int:
    """Number of tuples e in [0, q-1]^len(weights) with sum e_k w_k <= omega."""
    if omega < 0:
        return 0
    if not weights:
        return 1
    w, rest = weights[0], weights[1:]
    return sum(_count_bounded(rest, omega - e * w, q) for e in range(q))


@dataclass(frozen=True)
class WrmParams:
    """Declared [n, k, d] data for a weighted code of order omega.

    nu_max splits as quotient * (q-1) + remainder with remainder < q-1,
    and d = q^(m - quotient - 1) * (q - remainder); the full-space order
    (nu_max = m(q-1)) is reported directly as d = 1.
    """

    omega: int
    weights: tuple[int, ...]
    q: int
    m: int
    nu_max: int
    quotient: int
    remainder: int
    k: int
    d: int

    @property
    def n(self) -> int:
        return self.q**self.m


def wrm_params(omega: int, weights: Sequence[int] | WeightProfile, q: int) -> WrmParams:
    """Dimension by enumeration and distance by the closed form.

    k counts the reduced monomials of weighted degree <= omega (they are a
    basis of the code); d comes from the Euclidean split of nu_max.
    """
    wp = weights if isinstance(weights, WeightProfile) else WeightProfile(weights)
    m = len(wp)
    nmax = nu_max(omega, wp, q)
    if nmax == m * (q - 1):
        quotient, remainder, d = m, 0, 1
    else:
        quotient, remainder = divmod(nmax, q - 1)
        d = q ** (m - quotient - 1) * (q - remainder)
    k = _count_bounded(wp.weights, omega, q)
    return WrmParams(
        omega=omega,
        weights=wp.weights,
        q=q,
        m=m,
        nu_max=nmax,
        quotient=quotient,
        remainder=remainder,
        k=k,
        d=d,
    )


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class HrmParams:
    n: int
    k: int
    delta: int


def hrm_params(d: int, m: int, q: int) -> HrmParams:
    """Closed-form [n, k, delta] for the degree-d homogeneous code.

    k is the alternating binomial sum over reduced degrees t congruent to d
    mod q-1 (binomials with a negative lower index contribute 0), and
    delta = (q-1)(q-s) q^(m-r-2) with d-1 = r(q-1) + s, 0 <= s < q-1.
    Valid for 1 <= d <= (m-1)(q-1).
    """
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    if m < 2:
        raise ValueError(f"need at least 2 variables for the closed form, got m={m}")
    if not 1 <= d <= (m - 1) * (q - 1):
        raise ValueError(f"degree {d} out of range [1, {(m - 1) * (q - 1)}]")
    k = 0
    for t in range(1, d + 1):
        if (d - t) % (q - 1) != 0:
            continue
        k += sum(
            (-1) ** j * _binom(m, j) * _binom(t - j * q + m - 1, t - j * q)
            for j in range(m + 1)
        )
    r, s = divmod(d - 1, q - 1)
    delta = (q - 1) * (q - s) * q ** (m - r - 2)
    return HrmParams(n=q**m, k=k, delta=delta)


# -- linear codes -------------------------------------------------------------


class LinearCode:
    """A basis of codewords of length p^m plus declared parameters.

    Rows are emitted in ascending flat-index order of their defining tuple
    or subset, so generator matrices are reproducible across runs.  Row
    independence is checked at construction; a failure means a
    construction-level bug and raises ConsistencyError.
    """

    def __init__(
        self,
        ctx: AlgebraContext,
        rows: Sequence[AlgebraElement],
        tag: str,
        order: int | None = None,
        weights: WeightProfile | None = None,
        declared_distance: int | None = None,
    ):
        rows = tuple(rows)
        if not rows:
            raise ValueError("a code needs at least one generator row")
        for row in rows:
            if row.ctx != ctx:
                raise ValueError(f"row context {row.ctx} does not match {ctx}")
        self.ctx = ctx
        self.rows = rows
        self.tag = tag
        self.order = order
        self.weights = weights
        self.declared_distance = declared_distance
        self._matrix = np.stack([row.as_vector() for row in rows])
        got = oracle.rank(self._matrix, ctx.p)
        if got != len(rows):
            raise ConsistencyError(
                f"{tag} construction produced rank {got} from {len(rows)} rows"
            )

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def k(self) -> int:
        return len(self.rows)

    def params(self) -> tuple[int, int, int | None]:
        return (self.n, self.k, self.declared_distance)

    def generator_matrix(self) -> np.ndarray:
        """k x p^m int matrix, rows in construction order."""
        return self._matrix.copy()

    def encode(self, message: Sequence[int]) -> AlgebraElement:
        """Linear combination sum_j message_j * row_j."""
        msg = np.asarray(list(message), dtype=np.int64)
        if msg.shape != (self.k,):
            raise ValueError(f"expected {self.k} message symbols, got {msg.shape}")
        if ((msg < 0) | (msg >= self.ctx.p)).any():
            raise ValueError(f"message symbols must lie in [0, {self.ctx.p})")
        word = msg @ self._matrix % self.ctx.p
        return AlgebraElement(self.ctx, word)

    def to_text(self) -> str:
        """Plain-text generator matrix: "p m k" then k digit rows."""
        lines = [f"{self.ctx.p} {self.ctx.m} {self.k}"]
        lines.extend(row.digit_line() for row in self.rows)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "LinearCode":
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines:
            raise ValueError("empty generator matrix text")
        try:
            p, m, k = (int(tok) for tok in lines[0].split())
        except ValueError:
            raise ValueError(f"bad header line {lines[0]!r}, expected 'p m k'") from None
        if len(lines) != k + 1:
            raise ValueError(f"expected {k} rows after the header, got {len(lines) - 1}")
        ctx = AlgebraContext(p, m)
        rows = [ctx.element([int(tok) for tok in ln.split()]) for ln in lines[1:]]
        return cls(ctx, rows, "loaded")

    def __repr__(self) -> str:
        d = self.declared_distance
        return f"LinearCode({self.tag}, n={self.n}, k={self.k}, d={d})"


# -- constructors --------------------------------------------------------------


def _check_omega(ctx: AlgebraContext, omega: int, wp: WeightProfile) -> None:
    cap = (ctx.p - 1) * wp.total
    if not 0 <= omega <= cap:
        raise ValueError(f"weighted order {omega} out of range [0, {cap}]")


def wrm_code_eval(
    ctx: AlgebraContext, omega: int, weights: Sequence[int] | WeightProfile
) -> LinearCode:
    """Evaluation construction: one row per monomial of weighted degree <= omega."""
    wp = as_weight_profile(weights, ctx.m)
    _check_omega(ctx, omega, wp)
    rows = [
        phi(ReducedPolynomial.monomial(ctx, exps))
        for exps in monomials_up_to_weighted_degree(ctx, wp, omega)
    ]
    params = wrm_params(omega, wp, ctx.p)
    return LinearCode(
        ctx, rows, "WRM", order=omega, weights=wp, declared_distance=params.d
    )


def _jennings_rows(
    ctx: AlgebraContext, wp: WeightProfile, omega: int
) -> list[AlgebraElement]:
    threshold = (ctx.p - 1) * wp.total - omega
    rows = []
    for i in range(ctx.n):
        exps = ctx.index_to_exponents(i)
        if weighted_p_weight(exps, wp) >= threshold:
            rows.append(jennings_element(ctx, exps))
    return rows


def wrm_code_jennings(
    ctx: AlgebraContext, omega: int, weights: Sequence[int] | WeightProfile
) -> LinearCode:
    """Basis of (x-1)-products with weighted digit sum >= (p-1)*sum(w) - omega.

    Spans the same row space as wrm_code_eval for every omega in range.
    """
    wp = as_weight_profile(weights, ctx.m)
    _check_omega(ctx, omega, wp)
    params = wrm_params(omega, wp, ctx.p)
    return LinearCode(
        ctx,
        _jennings_rows(ctx, wp, omega),
        "WRM",
        order=omega,
        weights=wp,
        declared_distance=params.d,
    )


def grm_code(ctx: AlgebraContext, nu: int) -> LinearCode:
    """Order-nu code with unit weights, built from the (x-1)-product basis."""
    cap = ctx.m * (ctx.p - 1)
    if not 0 <= nu <= cap:
        raise ValueError(f"order {nu} out of range [0, {cap}]")
    wp = WeightProfile.unit(ctx.m)
    params = wrm_params(nu, wp, ctx.p)
    return LinearCode(
        ctx,
        _jennings_rows(ctx, wp, nu),
        "GRM",
        order=nu,
        weights=wp,
        declared_distance=params.d,
    )


def radical_power(ctx: AlgebraContext, j: int) -> LinearCode:
    """Span of the (x-1)-products with digit sum >= j.

    Equals the order-(m(p-1) - j) unit-weight code as a row space.
    """
    cap = ctx.m * (ctx.p - 1)
    if not 0 <= j <= cap:
        raise ValueError(f"radical exponent {j} out of range [0, {cap}]")
    rows = []
    for i in range(ctx.n):
        exps = ctx.index_to_exponents(i)
        if sum(exps) >= j:
            rows.append(jennings_element(ctx, exps))
    params = wrm_params(cap - j, WeightProfile.unit(ctx.m), ctx.p)
    return LinearCode(
        ctx, rows, "radical-power", order=j, declared_distance=params.d
    )


def hrm_reduced_tuples(ctx: AlgebraContext, d: int) -> list[tuple[int, ...]]:
    """Reduced exponent tuples spanning the degree-d homogeneous code.

    Reducing a degree-d monomial subtracts multiples of p-1 from single
    exponents, so the reduced representatives are exactly the tuples of
    digit sum t with t congruent to d mod p-1 and 0 < t <= d.
    """
    if not 1 <= d <= ctx.m * (ctx.p - 1):
        raise ValueError(f"degree {d} out of range [1, {ctx.m * (ctx.p - 1)}]")
    tuples = []
    for t in range(1, d + 1):
        if (d - t) % (ctx.p - 1) == 0:
            tuples.extend(homogeneous_monomials(ctx, t))
    tuples.sort(key=ctx.exponents_to_index)
    return tuples


def _hrm_declared_distance(ctx: AlgebraContext, d: int) -> int | None:
    if ctx.m >= 2 and 1 <= d <= (ctx.m - 1) * (ctx.p - 1):
        return hrm_params(d, ctx.m, ctx.p).delta
    return None


def hrm_code_eval(ctx: AlgebraContext, d: int) -> LinearCode:
    """Evaluations of degree-d forms: rows are the reduced monomial evaluations."""
    rows = [
        phi(ReducedPolynomial.monomial(ctx, exps))
        for exps in hrm_reduced_tuples(ctx, d)
    ]
    return LinearCode(
        ctx, rows, "HRM-eval", order=d, declared_distance=_hrm_declared_distance(ctx, d)
    )


def hrm_code_jennings_binary(ctx: AlgebraContext, d: int) -> LinearCode:
    """Binary basis: (x-1)-subset products plus the all-one word.

    Rows are b(eta) + 1 over subsets eta with m-d <= |eta| < m, in
    ascending bitmask order; spans the same row space as hrm_code_eval.
    """
    if ctx.p != 2:
        raise ValueError(f"this basis requires p = 2, context has p = {ctx.p}")
    if not 1 <= d <= ctx.m:
        raise ValueError(f"degree {d} out of range [1, {ctx.m}]")
    ones = ctx.all_one()
    rows = []
    for mask in range(1 << ctx.m):
        card = mask.bit_count()
        if ctx.m - d <= card < ctx.m:
            rows.append(b_subset(ctx, mask) + ones)
    return LinearCode(
        ctx,
        rows,
        "HRM-binary",
        order=d,
        declared_distance=_hrm_declared_distance(ctx, d),
    )
