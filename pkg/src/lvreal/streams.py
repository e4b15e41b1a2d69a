"""Stream representations of infinite objects and the standard pairings.

A raw stream is any callable index -> int.  The classes here add caching and
the value semantics: BitStream for elements of Cantor space, NatStream for
Baire space, SignedDigitStream and BinaryName for real numbers.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Callable, Optional

from .exact import Dyadic


def cantor_pair(n: int, k: int) -> int:
    """(n, k) -> (n+k+1)(n+k)/2 + k, the standard bijection N x N -> N."""
    if n < 0 or k < 0:
        raise ValueError("cantor_pair needs naturals")
    return (n + k + 1) * (n + k) // 2 + k


def cantor_unpair(m: int) -> tuple[int, int]:
    """Inverse of cantor_pair."""
    if m < 0:
        raise ValueError("cantor_unpair needs a natural")
    w = (isqrt(8 * m + 1) - 1) // 2
    k = m - w * (w + 1) // 2
    return w - k, k


class _CachedStream:
    """Memoizing wrapper around a producer callable index -> int.

    Values are validated once, when they enter the cache.
    """

    _allowed: Optional[frozenset] = None

    def __init__(self, producer: Callable[[int], int]):
        self._producer = producer
        self._cache: list[int] = []

    def _get(self, n: int) -> int:
        cache = self._cache
        while len(cache) <= n:
            value = self._producer(len(cache))
            if self._allowed is not None and value not in self._allowed:
                raise ValueError(f"symbol {value} at index {len(cache)} not in {set(self._allowed)}")
            cache.append(value)
        return cache[n]


class BitStream(_CachedStream):
    """Element of Cantor space: bits in {0, 1}."""

    _allowed = frozenset((0, 1))

    def bit(self, n: int) -> int:
        return self._get(n)

    def __call__(self, n: int) -> int:
        return self._get(n)

    def prefix(self, n: int) -> str:
        return "".join(str(self.bit(i)) for i in range(n))

    def shift(self, k: int) -> "BitStream":
        return BitStream(lambda n: self.bit(n + k))

    @staticmethod
    def from_bits(bits, tail: int = 0) -> "BitStream":
        seq = [int(b) for b in bits]
        return BitStream(lambda n: seq[n] if n < len(seq) else tail)

    @staticmethod
    def constant(b: int) -> "BitStream":
        return BitStream(lambda n: b)


class NatStream(_CachedStream):
    """Element of Baire space: a sequence of naturals."""

    def value(self, n: int) -> int:
        v = self._get(n)
        if v < 0:
            raise ValueError("NatStream values must be naturals")
        return v

    def __call__(self, n: int) -> int:
        return self.value(n)

    def prefix(self, n: int) -> tuple[int, ...]:
        return tuple(self.value(i) for i in range(n))


def interleave(p: Callable[[int], int], q: Callable[[int], int]) -> Callable[[int], int]:
    """Pair two streams: even positions from p, odd positions from q."""

    def paired(n: int) -> int:
        k, r = divmod(n, 2)
        return p(k) if r == 0 else q(k)

    return paired


def project_left(r: Callable[[int], int]) -> Callable[[int], int]:
    return lambda k: r(2 * k)


def project_right(r: Callable[[int], int]) -> Callable[[int], int]:
    return lambda k: r(2 * k + 1)


def interleave_words(u: str, v: str) -> str:
    """Finite analogue of interleave for equal-length binary words."""
    if len(u) != len(v):
        raise ValueError("interleave_words needs equal lengths")
    return "".join(a + b for a, b in zip(u, v))


class SignedDigitStream(_CachedStream):
    """Real in [-1, 1] as digits d_n in {-1, 0, 1}, value sum d_n 2^-(n+1).

    A prefix of length n pins the value inside [approx - 2^-n, approx + 2^-n].
    """

    _allowed = frozenset((-1, 0, 1))

    def digit(self, n: int) -> int:
        return self._get(n)

    def __call__(self, n: int) -> int:
        return self.digit(n)

    def approx(self, n: int) -> Dyadic:
        """Partial sum of the first n digits; true value within 2^-n of it."""
        total = 0
        for i in range(n):
            total += self.digit(i) << (n - i - 1)
        return Dyadic(total, n)

    @staticmethod
    def from_rational(q: Fraction) -> "SignedDigitStream":
        if not -1 <= q <= 1:
            raise ValueError("value outside [-1, 1]")
        # remainder as an integer numerator over the fixed denominator of q
        den = q.denominator
        state = [q.numerator]

        def producer(_n: int) -> int:
            r = state[0]
            if 4 * r >= den:
                d = 1
            elif 4 * r <= -den:
                d = -1
            else:
                d = 0
            state[0] = 2 * r - d * den
            return d

        return SignedDigitStream(producer)

    @staticmethod
    def constant_zero() -> "SignedDigitStream":
        return SignedDigitStream(lambda n: 0)


def sds_approx(s: SignedDigitStream, n: int) -> Dyadic:
    return s.approx(n)


def sds_from_rational(q: Fraction) -> SignedDigitStream:
    return SignedDigitStream.from_rational(q)


class BinaryName(_CachedStream):
    """Real in [0, 1] as a plain bit stream, value sum p(i) 2^-(i+1)."""

    _allowed = frozenset((0, 1))

    def bit(self, n: int) -> int:
        return self._get(n)

    def __call__(self, n: int) -> int:
        return self.bit(n)

    def approx(self, n: int) -> Dyadic:
        """Lower endpoint; the value lies in [approx, approx + 2^-n]."""
        total = 0
        for i in range(n):
            total += self.bit(i) << (n - i - 1)
        return Dyadic(total, n)

    def bracket(self, n: int) -> tuple[Fraction, Fraction]:
        lo = self.approx(n).to_fraction()
        return lo, lo + Fraction(1, 1 << n)

    @staticmethod
    def from_rational(q: Fraction) -> "BinaryName":
        if not 0 <= q <= 1:
            raise ValueError("value outside [0, 1]")
        state = {"rem": Fraction(q)}
        half = Fraction(1, 2)

        def producer(_n: int) -> int:
            r = state["rem"] * 2
            # q = 1 yields all ones, the valid name 0.111...
            if r >= 1:
                state["rem"] = r - 1
                return 1
            state["rem"] = r
            return 0

        return BinaryName(producer)

    @staticmethod
    def from_bit_stream(bits: BitStream) -> "BinaryName":
        return BinaryName(lambda n: bits.bit(n))


def binary_value(bits, n: int) -> Fraction:
    """Value of the first n bits of a bit producer under the 2^-(i+1) weights."""
    total = 0
    for i in range(n):
        total = total * 2 + bits(i)
    return Fraction(total, 1 << n)
