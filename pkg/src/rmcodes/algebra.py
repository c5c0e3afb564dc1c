"""Elements and arithmetic of the algebra F_p[x_0,...,x_{m-1}] with x_k^p = 1.

An element is the length-p^m vector of its monomial coefficients: the
coefficient of x_0^{i_0} ... x_{m-1}^{i_{m-1}} lives at flat index
i = sum_k i_k * p^k (little-endian, i_0 varies fastest).  Because of the
relations x_k^p = 1, the ring product is an m-dimensional cyclic
convolution.  These vectors double as codewords of length p^m, so the
module also provides the Hamming weight and the products
(x_0-1)^{i_0} ... (x_{m-1}-1)^{i_{m-1}} that form the Jennings basis.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .gf import PrimeField

MAX_LENGTH = 2**24


class ContextMismatchError(ValueError):
    """Elements from different (p, m) contexts were combined."""


class AlgebraContext:
    """Fixes the prime p and the number of variables m (length n = p^m).

    Two contexts with equal (p, m) are interchangeable.  The context owns
    the flat-index <-> exponent-tuple conversions and factories for common
    elements; per-context caches (Vandermonde matrices for grid evaluation
    and interpolation) are built lazily.
    """

    def __init__(self, p: int, m: int):
        self.field = PrimeField(p)
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise ValueError(f"number of variables must be a positive int, got {m!r}")
        if p**m > MAX_LENGTH:
            raise ValueError(f"p^m = {p}^{m} exceeds the supported length {MAX_LENGTH}")
        self.p = p
        self.m = m
        self.n = p**m
        self.shape = (p,) * m
        self._vandermonde: np.ndarray | None = None
        self._vandermonde_inv: np.ndarray | None = None

    def __repr__(self) -> str:
        return f"AlgebraContext(p={self.p}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AlgebraContext)
            and other.p == self.p
            and other.m == self.m
        )

    def __hash__(self) -> int:
        return hash(("AlgebraContext", self.p, self.m))

    # -- index conversions ------------------------------------------------

    def index_to_exponents(self, i: int) -> tuple[int, ...]:
        """Digits (i_0, ..., i_{m-1}) of the base-p expansion of i."""
        if not 0 <= i < self.n:
            raise ValueError(f"flat index {i} out of range [0, {self.n})")
        digits = []
        for _ in range(self.m):
            i, r = divmod(i, self.p)
            digits.append(r)
        return tuple(digits)

    def exponents_to_index(self, exponents: Sequence[int]) -> int:
        """Inverse of index_to_exponents."""
        exps = self.check_exponents(exponents)
        i = 0
        for k in reversed(range(self.m)):
            i = i * self.p + exps[k]
        return i

    def check_exponents(self, exponents: Sequence[int]) -> tuple[int, ...]:
        exps = tuple(int(e) for e in exponents)
        if len(exps) != self.m:
            raise ValueError(f"expected {self.m} exponents, got {len(exps)}")
        if any(e < 0 or e >= self.p for e in exps):
            raise ValueError(f"exponents {exps} not all in [0, {self.p})")
        return exps

    # -- element factories -------------------------------------------------

    def zero(self) -> "AlgebraElement":
        return AlgebraElement._wrap(self, np.zeros(self.n, dtype=np.uint8))

    def unit(self) -> "AlgebraElement":
        coeffs = np.zeros(self.n, dtype=np.uint8)
        coeffs[0] = 1
        return AlgebraElement._wrap(self, coeffs)

    def all_one(self) -> "AlgebraElement":
        """The constant-one vector (every coefficient equal to 1)."""
        return AlgebraElement._wrap(self, np.ones(self.n, dtype=np.uint8))

    def monomial(self, exponents: Sequence[int], coeff: int = 1) -> "AlgebraElement":
        """coeff * x_0^{e_0} ... x_{m-1}^{e_{m-1}} as an element."""
        coeffs = np.zeros(self.n, dtype=np.uint8)
        coeffs[self.exponents_to_index(exponents)] = self.field.element(coeff)
        return AlgebraElement._wrap(self, coeffs)

    def element(self, coeffs: Iterable[int]) -> "AlgebraElement":
        return AlgebraElement(self, coeffs)

    # -- cached grid-evaluation matrices ------------------------------------

    def vandermonde(self) -> np.ndarray:
        """Matrix V with V[a, e] = a^e mod p for a, e in [0, p)."""
        if self._vandermonde is None:
            p = self.p
            v = np.empty((p, p), dtype=np.int64)
            for a in range(p):
                for e in range(p):
                    v[a, e] = pow(a, e, p)
            self._vandermonde = v
        return self._vandermonde

    def vandermonde_inv(self) -> np.ndarray:
        """Inverse of vandermonde() mod p, built from Lagrange basis polynomials."""
        if self._vandermonde_inv is None:
            p, fld = self.p, self.field
            inv = np.zeros((p, p), dtype=np.int64)
            for r in range(p):
                # expand prod_{s != r} (Y - s), then divide by prod_{s != r} (r - s)
                num = [1]
                denom = 1
                for s in range(p):
                    if s == r:
                        continue
                    num = _poly_mul_linear(num, fld.neg(s), p)
                    denom = fld.mul(denom, fld.sub(r, s))
                scale = fld.inv(denom)
                for e, c in enumerate(num):
                    inv[e, r] = fld.mul(c, scale)
            self._vandermonde_inv = inv
        return self._vandermonde_inv


def _poly_mul_linear(coeffs: list[int], const: int, p: int) -> list[int]:
    """Multiply a univariate coefficient list by (Y + const) mod p."""
    out = [0] * (len(coeffs) + 1)
    for e, c in enumerate(coeffs):
        out[e] = (out[e] + c * const) % p
        out[e + 1] = (out[e + 1] + c) % p
    return out


class AlgebraElement:
    """Immutable coefficient vector of length p^m over F_p.

    Supports +, -, unary -, and * (the cyclic-convolution ring product).
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: AlgebraContext, coeffs: Iterable[int]):
        arr = np.asarray(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs)
        if arr.shape != (ctx.n,):
            raise ValueError(f"expected {ctx.n} coefficients, got shape {arr.shape}")
        if not np.issubdtype(arr.dtype, np.integer):
            raise ValueError("coefficients must be integers")
        arr = np.mod(arr, ctx.p).astype(np.uint8)
        arr.flags.writeable = False
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def _wrap(cls, ctx: AlgebraContext, arr: np.ndarray) -> "AlgebraElement":
        # internal fast path: arr is already a fresh uint8 vector of residues
        elem = object.__new__(cls)
        arr.flags.writeable = False
        object.__setattr__(elem, "ctx", ctx)
        object.__setattr__(elem, "coeffs", arr)
        return elem

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    def tensor(self) -> np.ndarray:
        """View the coefficients as a (p,)*m tensor, axis k = exponent of x_k."""
        return self.coeffs.reshape(self.ctx.shape, order="F")

    def _check_ctx(self, other: "AlgebraElement") -> None:
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ContextMismatchError(f"context mismatch: {self.ctx} vs {other.ctx}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_ctx(other)
        out = (self.coeffs.astype(np.int16) + other.coeffs) % self.ctx.p
        return AlgebraElement._wrap(self.ctx, out.astype(np.uint8))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_ctx(other)
        out = (self.coeffs.astype(np.int16) - other.coeffs) % self.ctx.p
        return AlgebraElement._wrap(self.ctx, out.astype(np.uint8))

    def __neg__(self) -> "AlgebraElement":
        out = (-self.coeffs.astype(np.int16)) % self.ctx.p
        return AlgebraElement._wrap(self.ctx, out.astype(np.uint8))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        """Ring product: componentwise-mod-p cyclic convolution of exponents.

        Runs over the nonzero coefficients of the sparser factor, shifting
        the dense factor cyclically along every axis, so products with the
        sparse Jennings factors stay cheap.
        """
        self._check_ctx(other)
        a, b = self, other
        if np.count_nonzero(a.coeffs) > np.count_nonzero(b.coeffs):
            a, b = b, a
        ctx = self.ctx
        bt = b.tensor().astype(np.int64)
        out = np.zeros(ctx.shape, dtype=np.int64)
        axes = tuple(range(ctx.m))
        for flat in np.flatnonzero(a.coeffs):
            shift = ctx.index_to_exponents(int(flat))
            out += int(a.coeffs[flat]) * np.roll(bt, shift, axis=axes)
        out %= ctx.p
        return AlgebraElement._wrap(
            ctx, np.asarray(out, dtype=np.uint8).reshape(-1, order="F")
        )

    def scale(self, c: int) -> "AlgebraElement":
        out = (self.ctx.field.element(c) * self.coeffs.astype(np.int32)) % self.ctx.p
        return AlgebraElement._wrap(self.ctx, out.astype(np.uint8))

    def weight(self) -> int:
        """Number of nonzero coefficients."""
        return int(np.count_nonzero(self.coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def as_vector(self) -> np.ndarray:
        """Coefficients as a fresh int64 vector."""
        return self.coeffs.astype(np.int64)

    def digit_line(self) -> str:
        """Space-separated decimal digits in flat order."""
        return " ".join(str(int(c)) for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return other.ctx == self.ctx and np.array_equal(other.coeffs, self.coeffs)

    def __hash__(self) -> int:
        return hash((self.ctx, self.coeffs.tobytes()))

    def __repr__(self) -> str:
        return f"AlgebraElement(p={self.ctx.p}, m={self.ctx.m}, [{self.digit_line()}])"


def times_x_minus_one(a: AlgebraElement, k: int) -> AlgebraElement:
    """Multiply by the single factor (x_k - 1) in O(p^m)."""
    ctx = a.ctx
    if not 0 <= k < ctx.m:
        raise ValueError(f"variable index {k} out of range [0, {ctx.m})")
    t = a.tensor().astype(np.int16)
    out = (np.roll(t, 1, axis=k) - t) % ctx.p
    return AlgebraElement._wrap(ctx, out.astype(np.uint8).reshape(-1, order="F"))


def p_weight(exponents: Sequence[int]) -> int:
    """Digit sum of an exponent tuple."""
    return sum(int(e) for e in exponents)


def weighted_p_weight(exponents: Sequence[int], weights: Sequence[int]) -> int:
    """Weight-scaled digit sum sum_k e_k * w_k."""
    if len(exponents) != len(weights):
        raise ValueError(
            f"length mismatch: {len(exponents)} exponents vs {len(weights)} weights"
        )
    return sum(int(e) * int(w) for e, w in zip(exponents, weights))


def theta(exponents: Sequence[int], p: int) -> tuple[int, ...]:
    """Componentwise complement e_k -> p-1-e_k (an involution)."""
    exps = tuple(int(e) for e in exponents)
    if any(e < 0 or e > p - 1 for e in exps):
        raise ValueError(f"exponents {exps} not all in [0, {p})")
    return tuple(p - 1 - e for e in exps)


def jennings_element(ctx: AlgebraContext, exponents: Sequence[int]) -> AlgebraElement:
    """The product (x_0-1)^{e_0} ... (x_{m-1}-1)^{e_{m-1}}.

    Built by iterated sparse multiplication with single (x_k - 1) factors;
    the empty product (all exponents zero) is the unit.
    """
    exps = ctx.check_exponents(exponents)
    out = ctx.unit()
    for k, e in enumerate(exps):
        for _ in range(e):
            out = times_x_minus_one(out, k)
    return out


def jennings_basis(ctx: AlgebraContext) -> list[AlgebraElement]:
    """All p^m products (x-1)^e, ordered by flat index of the exponent tuple.

    Each element is derived from an earlier one by a single sparse
    multiplication, so the whole basis costs O(p^m) vector passes.
    """
    basis: list[AlgebraElement] = [ctx.unit()]
    for i in range(1, ctx.n):
        exps = ctx.index_to_exponents(i)
        k = next(idx for idx, e in enumerate(exps) if e > 0)
        basis.append(times_x_minus_one(basis[i - ctx.p**k], k))
    return basis


# -- subset masks (binary case) ------------------------------------------


def subset_mask(indices: Iterable[int], m: int) -> int:
    """Bitmask of a subset of {0, ..., m-1}."""
    mask = 0
    for i in indices:
        if not 0 <= i < m:
            raise ValueError(f"variable index {i} out of range [0, {m})")
        mask |= 1 << i
    return mask


def mask_indices(mask: int) -> tuple[int, ...]:
    """Sorted variable indices present in a bitmask."""
    if mask < 0:
        raise ValueError("mask must be nonnegative")
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_complement(mask: int, m: int) -> int:
    full = (1 << m) - 1
    if not 0 <= mask <= full:
        raise ValueError(f"mask {mask:#b} has bits above position {m - 1}")
    return full ^ mask


def b_subset(ctx: AlgebraContext, mask: int) -> AlgebraElement:
    """prod_{k in subset} (x_k - 1) for p = 2, indexed by bitmask."""
    if ctx.p != 2:
        raise ValueError(f"subset products require p = 2, context has p = {ctx.p}")
    if not 0 <= mask < 1 << ctx.m:
        raise ValueError(f"mask {mask:#b} has bits above position {ctx.m - 1}")
    exps = tuple((mask >> k) & 1 for k in range(ctx.m))
    return jennings_element(ctx, exps)


def hamming_weight(a: AlgebraElement) -> int:
    """Count of nonzero coefficients."""
    return a.weight()
