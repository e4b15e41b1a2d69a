"""Exact dyadic and rational arithmetic.

Dyadic numbers are the precision currency of the whole library: a prefix of
length n of any stream pins its value inside a radius-2^-n dyadic interval.
All arithmetic here is exact big-integer arithmetic; there is deliberately no
floating point anywhere in the core.
"""
from __future__ import annotations

from fractions import Fraction


class Dyadic:
    """Number of the form mantissa * 2^-exponent, kept normalized.

    Normalization removes trailing zero bits of the mantissa (zero gets
    exponent 0), so equality of values is equality of fields.
    """

    __slots__ = ("mantissa", "exponent")

    def __init__(self, mantissa: int, exponent: int = 0):
        if mantissa == 0:
            exponent = 0
        else:
            while mantissa % 2 == 0:
                mantissa //= 2
                exponent -= 1
        object.__setattr__(self, "mantissa", mantissa)
        object.__setattr__(self, "exponent", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    @staticmethod
    def from_int(n: int) -> "Dyadic":
        return Dyadic(n, 0)

    @staticmethod
    def from_fraction(q: Fraction) -> "Dyadic":
        """Convert an exactly-dyadic fraction; reject other denominators."""
        den = q.denominator
        e = den.bit_length() - 1
        if den != 1 << e:
            raise ValueError(f"{q} is not dyadic")
        return Dyadic(q.numerator, e)

    @staticmethod
    def pow2(k: int) -> "Dyadic":
        """2^-k."""
        return Dyadic(1, k)

    def to_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.mantissa, 1 << self.exponent)
        return Fraction(self.mantissa * (1 << -self.exponent))

    def _align(self, other: "Dyadic") -> tuple[int, int, int]:
        e = max(self.exponent, other.exponent)
        return (
            self.mantissa << (e - self.exponent),
            other.mantissa << (e - other.exponent),
            e,
        )

    def __add__(self, other: "Dyadic") -> "Dyadic":
        a, b, e = self._align(other)
        return Dyadic(a + b, e)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        a, b, e = self._align(other)
        return Dyadic(a - b, e)

    def __mul__(self, other: "Dyadic") -> "Dyadic":
        return Dyadic(self.mantissa * other.mantissa, self.exponent + other.exponent)

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.mantissa, self.exponent)

    def __abs__(self) -> "Dyadic":
        return Dyadic(abs(self.mantissa), self.exponent)

    def _cmp(self, other: "Dyadic") -> int:
        a, b, _ = self._align(other)
        return (a > b) - (a < b)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.mantissa == other.mantissa and self.exponent == other.exponent

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash((self.mantissa, self.exponent))

    def __str__(self) -> str:
        if self.exponent >= 0:
            return f"{self.mantissa}*2^-{self.exponent}"
        return f"{self.mantissa}*2^{-self.exponent}"

    def __repr__(self) -> str:
        return f"Dyadic({self.mantissa}, {self.exponent})"


DYADIC_ZERO = Dyadic(0)
DYADIC_ONE = Dyadic(1)


def parse_dyadic(s: str) -> Dyadic:
    """Inverse of str(Dyadic): accepts "m*2^-e" and "m*2^e"."""
    m_str, _, e_str = s.partition("*2^")
    if not e_str:
        return Dyadic(int(s), 0)
    if e_str.startswith("-"):
        return Dyadic(int(m_str), int(e_str[1:]))
    return Dyadic(int(m_str), -int(e_str))


def parse_rational(s: str) -> Fraction:
    """Parse "p/q" or a bare integer string."""
    return Fraction(s.strip())


def format_rational(q: Fraction) -> str:
    """Serialize exactly: "p/q", or just "p" for integers."""
    return str(q)


def dyadic_round(q: Fraction, bits: int) -> Dyadic:
    """Nearest multiple of 2^-bits to q (ties toward +inf); error <= 2^-(bits+1)."""
    scaled = q * (1 << bits)
    m = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    return Dyadic(m, bits)


def sqrt_bounds(q: Fraction, bits: int = 40) -> tuple[Fraction, Fraction]:
    """Rational lower/upper bounds on sqrt(q) with gap <= 2^-bits, q >= 0."""
    if q < 0:
        raise ValueError("sqrt of negative")
    import math

    p, d = q.numerator, q.denominator
    # sqrt(p/d) = sqrt(p*d)/d
    s = math.isqrt(p * d << (2 * bits))
    lo = Fraction(s, d << bits)
    hi = Fraction(s + 1, d << bits)
    return lo, hi
