"""Fat-Cantor interval tables and measure-preserving space embeddings.

The interval table I_w realizes the classic Smith-Volterra-Cantor
construction: from I_w = [a, b] with |w| = n-1, a middle piece of length
delta * 2^-(2n-1) is removed, leaving

    I_w0 = [a, a + (b-a)/2 - delta/2^2n],
    I_w1 = [a + (b-a)/2 + delta/2^2n, b].

The leftover set has Lebesgue measure epsilon = 1 - delta, and the cylinder
law lambda(image of w) = 2^-|w| * epsilon makes the embedding of Cantor space
measure preserving up to the factor epsilon.

Also here: the prefix embedding of Baire space into Cantor space and the
measure bracketing of signum preimages, both used to move advice between
spaces.
"""
from __future__ import annotations

from fractions import Fraction

from .exact import Dyadic

Interval = tuple[Fraction, Fraction]


def _check_epsilon(epsilon: Fraction) -> Fraction:
    epsilon = Fraction(epsilon)
    if not 0 <= epsilon < 1:
        raise ValueError("epsilon must lie in [0, 1)")
    den = epsilon.denominator
    if den & (den - 1):
        raise ValueError("epsilon must be dyadic")
    return epsilon


class SvcTable:
    """Cached interval map w -> I_w for one value of epsilon."""

    def __init__(self, epsilon: Fraction):
        self.epsilon = _check_epsilon(epsilon)
        self.delta = 1 - self.epsilon
        self._cache: dict[str, Interval] = {"": (Fraction(0), Fraction(1))}

    def interval(self, word: str) -> Interval:
        if any(c not in "01" for c in word):
            raise ValueError(f"non-binary word {word!r}")
        if word in self._cache:
            return self._cache[word]
        a, b = self.interval(word[:-1])
        n = len(word)  # parent has length n-1
        mid = a + (b - a) / 2
        gap_half = self.delta / (1 << (2 * n))
        iv = (a, mid - gap_half) if word[-1] == "0" else (mid + gap_half, b)
        self._cache[word] = iv
        return iv

    def remaining_length(self, n: int) -> Fraction:
        """Total length at depth n: 1 - delta (1 - 2^-n), decreasing to epsilon."""
        if n < 0:
            raise ValueError("depth must be a natural")
        return 1 - self.delta * (1 - Fraction(1, 1 << n))

    def subtree_remaining_length(self, word: str, k: int) -> Fraction:
        """Sum of length(I_wv) over |v| = k, computed by recursion on the table."""
        total = Fraction(0)
        stack = [word]
        for _ in range(k):
            stack = [w + c for w in stack for c in "01"]
        for w in stack:
            a, b = self.interval(w)
            total += b - a
        return total


def svc_interval(word: str, epsilon: Fraction) -> Interval:
    return SvcTable(epsilon).interval(word)


def svc_remaining_length(epsilon: Fraction, n: int) -> Fraction:
    return SvcTable(epsilon).remaining_length(n)


def svc_embed_prefix(prefix: str, epsilon: Fraction) -> Interval:
    """Nested interval pinned down by a binary prefix; shrinks to the embedded point."""
    return SvcTable(epsilon).interval(prefix)


def baire_to_cantor_prefix(word: tuple[int, ...]) -> str:
    """(w0, w1, ..., wk) -> 1^w0 0 1^w1 0 ... 1^wk 0.

    The uniform measure of the image cylinder equals the geometric-product
    measure of the source cylinder, 2^-(sum (wi + 1)).
    """
    out = []
    for v in word:
        if v < 0:
            raise ValueError("entries must be naturals")
        out.append("1" * v + "0")
    return "".join(out)


def signum_preimage_measure(u: str, depth: int) -> tuple[Dyadic, Dyadic]:
    """Bracket the Baire-space measure of the signum preimage of u2^N.

    Coordinate i contributes exactly 1/2 when u(i) = 0 (only the value 0 maps
    to bit 0) and sum_{k=1..inf} 2^-(k+1) = 1/2 when u(i) = 1; the latter sum
    is truncated at `depth` for the lower bound.  Both bounds converge to
    2^-|u| and differ by at most |u| * 2^-depth.
    """
    if any(c not in "01" for c in u):
        raise ValueError(f"non-binary word {u!r}")
    if depth < len(u):
        raise ValueError("depth must be at least |u|")
    half = Dyadic(1, 1)
    truncated = half - Dyadic(1, depth + 1)  # sum_{k=1..depth} 2^-(k+1)
    lower = Dyadic(1)
    upper = Dyadic(1)
    for c in u:
        if c == "0":
            lower, upper = lower * half, upper * half
        else:
            lower, upper = lower * truncated, upper * half
    return lower, upper
