"""Reduced multivariate polynomials over F_p and grid evaluation.

A polynomial in m variables is *reduced* when every exponent is below p;
reduction replaces Y^e (e >= 1) by Y^{((e-1) mod (p-1)) + 1}, which never
sends a positive exponent to 0 and preserves the value at every point of
F_p^m.  Evaluating a reduced polynomial at all p^m points, with the point
at flat index i having coordinates equal to the base-p digits of i, is a
linear isomorphism onto the coefficient vectors of the modular algebra;
`phi` computes it and `psi_inverse` inverts it by per-variable Lagrange
interpolation.
"""

from __future__ import annotations

import itertools
import math
import re
from typing import Iterable, Mapping, Sequence

import numpy as np

from .algebra import AlgebraContext, AlgebraElement

MINUS_INFINITY = float("-inf")


class WeightProfile:
    """Positive integer weights (w_0, ..., w_{m-1}) in ascending order.

    The constructor rejects non-ascending weights instead of sorting them;
    sorting would silently permute the variable <-> coordinate
    correspondence.
    """

    __slots__ = ("weights",)

    def __init__(self, weights: Iterable[int]):
        ws = tuple(int(w) for w in weights)
        if not ws:
            raise ValueError("weight profile must have at least one entry")
        if any(w < 1 for w in ws):
            raise ValueError(f"weights must be >= 1, got {ws}")
        if any(ws[i] > ws[i + 1] for i in range(len(ws) - 1)):
            raise ValueError(f"weights must be ascending, got {ws}")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def unit(cls, m: int) -> "WeightProfile":
        return cls((1,) * m)

    @property
    def total(self) -> int:
        return sum(self.weights)

    def __setattr__(self, name, value):
        raise AttributeError("WeightProfile is immutable")

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, k: int) -> int:
        return self.weights[k]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeightProfile):
            return other.weights == self.weights
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("WeightProfile", self.weights))

    def __repr__(self) -> str:
        return f"WeightProfile({self.weights})"


def as_weight_profile(weights: Sequence[int] | WeightProfile, m: int) -> WeightProfile:
    wp = weights if isinstance(weights, WeightProfile) else WeightProfile(weights)
    if len(wp) != m:
        raise ValueError(f"expected {m} weights, got {len(wp)}")
    return wp


def reduce_exponent(e: int, p: int) -> int:
    """Y^e -> Y^e' with the same values on F_p; keeps e = 0 fixed."""
    if e < 0:
        raise ValueError(f"exponent must be nonnegative, got {e}")
    if e == 0:
        return 0
    return (e - 1) % (p - 1) + 1


class ReducedPolynomial:
    """Sparse reduced polynomial: map from exponent tuple to nonzero coefficient.

    The zero polynomial is the empty map.  Instances are immutable; sums and
    products reduce their result, so arbitrary expressions stay inside the
    reduced representatives.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraContext, terms: Mapping[tuple[int, ...], int]):
        checked: dict[tuple[int, ...], int] = {}
        for exps, coeff in terms.items():
            exps = ctx.check_exponents(exps)
            c = ctx.field.element(int(coeff))
            if c == 0:
                raise ValueError(f"stored coefficient for {exps} reduces to zero")
            checked[exps] = c
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "terms", checked)

    def __setattr__(self, name, value):
        raise AttributeError("ReducedPolynomial is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ctx: AlgebraContext) -> "ReducedPolynomial":
        return cls(ctx, {})

    @classmethod
    def constant(cls, ctx: AlgebraContext, c: int) -> "ReducedPolynomial":
        c = ctx.field.element(c)
        if c == 0:
            return cls.zero(ctx)
        return cls(ctx, {(0,) * ctx.m: c})

    @classmethod
    def variable(cls, ctx: AlgebraContext, k: int) -> "ReducedPolynomial":
        if not 0 <= k < ctx.m:
            raise ValueError(f"variable index {k} out of range [0, {ctx.m})")
        exps = tuple(1 if j == k else 0 for j in range(ctx.m))
        return cls(ctx, {exps: 1})

    @classmethod
    def monomial(
        cls, ctx: AlgebraContext, exponents: Sequence[int], coeff: int = 1
    ) -> "ReducedPolynomial":
        c = ctx.field.element(coeff)
        if c == 0:
            return cls.zero(ctx)
        return cls(ctx, {ctx.check_exponents(exponents): c})

    @classmethod
    def from_terms(
        cls, ctx: AlgebraContext, terms: Mapping[Sequence[int], int]
    ) -> "ReducedPolynomial":
        """Reduce a general polynomial (arbitrary exponents) to canonical form.

        Exponents are mapped through reduce_exponent, like terms combined,
        and zero coefficients dropped; values at every point of F_p^m are
        preserved.
        """
        reduced: dict[tuple[int, ...], int] = {}
        for exps, coeff in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != ctx.m:
                raise ValueError(f"expected {ctx.m} exponents, got {len(exps)}")
            key = tuple(reduce_exponent(e, ctx.p) for e in exps)
            reduced[key] = (reduced.get(key, 0) + int(coeff)) % ctx.p
        return cls(ctx, {k: v for k, v in reduced.items() if v != 0})

    # -- ring operations ----------------------------------------------------

    def _check_ctx(self, other: "ReducedPolynomial") -> None:
        if not isinstance(other, ReducedPolynomial):
            raise TypeError(f"expected ReducedPolynomial, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ValueError(f"context mismatch: {self.ctx} vs {other.ctx}")

    def __add__(self, other: "ReducedPolynomial") -> "ReducedPolynomial":
        self._check_ctx(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = (out.get(exps, 0) + c) % self.ctx.p
        return ReducedPolynomial(self.ctx, {k: v for k, v in out.items() if v != 0})

    def __sub__(self, other: "ReducedPolynomial") -> "ReducedPolynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "ReducedPolynomial") -> "ReducedPolynomial":
        self._check_ctx(other)
        raw: dict[tuple[int, ...], int] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(a + b for a, b in zip(ea, eb))
                raw[key] = raw.get(key, 0) + ca * cb
        return ReducedPolynomial.from_terms(self.ctx, raw)

    def scale(self, c: int) -> "ReducedPolynomial":
        c = self.ctx.field.element(c)
        if c == 0:
            return ReducedPolynomial.zero(self.ctx)
        return ReducedPolynomial(
            self.ctx, {e: (c * v) % self.ctx.p for e, v in self.terms.items()}
        )

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, point: Sequence[int]) -> int:
        """Value at a point of F_p^m, term by term with modular powers."""
        pt = tuple(int(a) for a in point)
        if len(pt) != self.ctx.m:
            raise ValueError(f"expected {self.ctx.m} coordinates, got {len(pt)}")
        if any(a < 0 or a >= self.ctx.p for a in pt):
            raise ValueError(f"point {pt} not in the coordinate range [0, {self.ctx.p})")
        p = self.ctx.p
        total = 0
        for exps, coeff in self.terms.items():
            term = coeff
            for a, e in zip(pt, exps):
                if e:
                    term = term * pow(a, e, p) % p
            total = (total + term) % p
        return total

    def total_degree(self) -> int | float:
        if not self.terms:
            return MINUS_INFINITY
        return max(sum(e) for e in self.terms)

    def weighted_degree(self, weights: Sequence[int] | WeightProfile) -> int | float:
        """Max over terms of sum_k e_k * w_k; MINUS_INFINITY for the zero polynomial."""
        wp = as_weight_profile(weights, self.ctx.m)
        if not self.terms:
            return MINUS_INFINITY
        return max(sum(e * w for e, w in zip(exps, wp)) for exps in self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ReducedPolynomial):
            return NotImplemented
        return other.ctx == self.ctx and other.terms == self.terms

    def __hash__(self) -> int:
        return hash((self.ctx, frozenset(self.terms.items())))

    # -- text form ------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        def sort_key(item):
            exps, _ = item
            return (-sum(exps), self.ctx.exponents_to_index(exps))
        parts = []
        for exps, coeff in sorted(self.terms.items(), key=sort_key):
            factors = []
            for k, e in enumerate(exps):
                if e == 1:
                    factors.append(f"Y{k}")
                elif e > 1:
                    factors.append(f"Y{k}^{e}")
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([str(coeff)] + factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ReducedPolynomial(p={self.ctx.p}, m={self.ctx.m}, {self})"

    @classmethod
    def parse(cls, ctx: AlgebraContext, text: str) -> "ReducedPolynomial":
        """Parse the text grammar produced by str(): e.g. "2*Y0^2*Y1 + 1"."""
        cleaned = text.replace(" ", "")
        if not cleaned:
            raise ValueError("empty polynomial text")
        cleaned = cleaned.replace("-", "+-")
        raw: dict[tuple[int, ...], int] = {}
        for chunk in cleaned.split("+"):
            if not chunk:
                continue
            sign = 1
            if chunk.startswith("-"):
                sign = -1
                chunk = chunk[1:]
            if not chunk:
                raise ValueError(f"dangling sign in {text!r}")
            coeff = sign
            exps = [0] * ctx.m
            for factor in chunk.split("*"):
                mvar = re.fullmatch(r"Y(\d+)(?:\^(\d+))?", factor)
                if mvar:
                    k = int(mvar.group(1))
                    if k >= ctx.m:
                        raise ValueError(f"variable Y{k} out of range for m={ctx.m}")
                    exps[k] += int(mvar.group(2) or 1)
                elif re.fullmatch(r"\d+", factor):
                    coeff *= int(factor)
                else:
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            key = tuple(exps)
            raw[key] = raw.get(key, 0) + coeff
        return cls.from_terms(ctx, raw)


# -- grid evaluation and interpolation ----------------------------------------


def phi(poly: ReducedPolynomial) -> AlgebraElement:
    """Evaluate at every point of F_p^m, point i = digits of i in base p.

    With that point ordering the result is exactly the coefficient vector
    identification between reduced polynomials and the modular algebra.
    Implemented as one Vandermonde transform per axis, O(m * p^{m+1}).
    """
    ctx = poly.ctx
    tensor = np.zeros(ctx.shape, dtype=np.int64)
    for exps, coeff in poly.terms.items():
        tensor[exps] = coeff
    v = ctx.vandermonde()
    for axis in range(ctx.m):
        tensor = np.moveaxis(np.tensordot(v, tensor, axes=(1, axis)) % ctx.p, 0, axis)
    flat = np.asarray(tensor, dtype=np.uint8).reshape(-1, order="F")
    return AlgebraElement._wrap(ctx, flat)


def psi_inverse(a: AlgebraElement) -> ReducedPolynomial:
    """The unique reduced polynomial whose grid evaluation equals a.

    Per-variable tensor Lagrange interpolation: m passes of p-point
    interpolation instead of a dense p^m x p^m solve.
    """
    ctx = a.ctx
    tensor = a.tensor().astype(np.int64)
    vinv = ctx.vandermonde_inv()
    for axis in range(ctx.m):
        tensor = np.moveaxis(
            np.tensordot(vinv, tensor, axes=(1, axis)) % ctx.p, 0, axis
        )
    terms = {
        tuple(int(e) for e in idx): int(tensor[tuple(idx)])
        for idx in np.argwhere(tensor)
    }
    return ReducedPolynomial(ctx, terms)


# -- interpolation polynomials for the (x-1)-product basis --------------------


def _h_coeff_vector(p: int, i: int) -> list[int]:
    """Univariate coefficients of alpha_i * prod_{j=1}^{p-1-i} (Y + j), alpha_i = -i! mod p."""
    if not 0 <= i <= p - 1:
        raise ValueError(f"index {i} out of range [0, {p})")
    alpha = (-math.factorial(i)) % p
    coeffs = [alpha]
    for j in range(1, p - i):
        out = [0] * (len(coeffs) + 1)
        for e, c in enumerate(coeffs):
            out[e] = (out[e] + c * j) % p
            out[e + 1] = (out[e + 1] + c) % p
        coeffs = out
    return coeffs


def h_single(p: int, i: int) -> ReducedPolynomial:
    """The degree-(p-1-i) univariate interpolation polynomial H_i.

    Its grid evaluation is the single-variable (x-1)^i, so for i = p-1 it
    degenerates to the constant -(p-1)! mod p.
    """
    ctx = AlgebraContext(p, 1)
    coeffs = _h_coeff_vector(p, i)
    return ReducedPolynomial(ctx, {(e,): c for e, c in enumerate(coeffs) if c != 0})


def h_multi(ctx: AlgebraContext, exponents: Sequence[int]) -> ReducedPolynomial:
    """Product over variables of the univariate H_{e_k}(Y_k).

    Satisfies phi(h_multi(ctx, e)) == jennings_element(ctx, e) and has
    weighted degree (p-1) * sum(w) - sum_k e_k * w_k.
    """
    exps = ctx.check_exponents(exponents)
    factors = [
        [(e, c) for e, c in enumerate(_h_coeff_vector(ctx.p, i)) if c != 0]
        for i in exps
    ]
    terms: dict[tuple[int, ...], int] = {}
    for combo in itertools.product(*factors):
        key = tuple(e for e, _ in combo)
        coeff = 1
        for _, c in combo:
            coeff = coeff * c % ctx.p
        if coeff:
            terms[key] = coeff
    return ReducedPolynomial(ctx, terms)


# -- monomial enumerations ----------------------------------------------------


def monomials_up_to_weighted_degree(
    ctx: AlgebraContext, weights: Sequence[int] | WeightProfile, omega: int
) -> list[tuple[int, ...]]:
    """All reduced exponent tuples with sum_k e_k * w_k <= omega, flat order."""
    if omega < 0:
        raise ValueError(f"weighted order must be >= 0, got {omega}")
    wp = as_weight_profile(weights, ctx.m)
    out = []
    for i in range(ctx.n):
        exps = ctx.index_to_exponents(i)
        if sum(e * w for e, w in zip(exps, wp)) <= omega:
            out.append(exps)
    return out


def homogeneous_monomials(ctx: AlgebraContext, d: int) -> list[tuple[int, ...]]:
    """All reduced exponent tuples with digit sum exactly d, flat order."""
    if not 0 <= d <= ctx.m * (ctx.p - 1):
        raise ValueError(f"degree {d} out of range [0, {ctx.m * (ctx.p - 1)}]")
    out = []
    for i in range(ctx.n):
        exps = ctx.index_to_exponents(i)
        if sum(exps) == d:
            out.append(exps)
    return out
