"""Arithmetic in the prime field F_p for a runtime-chosen prime p."""

from __future__ import annotations

MAX_PRIME = 251


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for the supported moduli."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The field of integers modulo a prime p, 2 <= p <= 251.

    Elements are plain ints in [0, p).  The modulus lives in this shared
    context rather than in each element, so long coefficient vectors stay
    compact (one byte per residue).
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise ValueError(f"modulus must be an int, got {p!r}")
        if not is_prime(p):
            raise ValueError(f"modulus must be prime, got {p}")
        if p > MAX_PRIME:
            raise ValueError(f"modulus {p} exceeds the supported bound {MAX_PRIME}")
        self.p = p

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def element(self, x: int) -> int:
        """Reduce an arbitrary int to its residue in [0, p)."""
        return x % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        """Multiplicative inverse; raises ZeroDivisionError for a = 0."""
        a = a % self.p
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return pow(a, self.p - 2, self.p)

    def pow(self, a: int, e: int) -> int:
        """a**e mod p by square-and-multiply; e must be >= 0."""
        if e < 0:
            raise ValueError("exponent must be nonnegative; invert first")
        return pow(a % self.p, e, self.p)
