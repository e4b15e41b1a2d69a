"""Seeded advice-space samplers.

The entropy source is SplitMix64 (Steele, Lea & Flood's 64-bit mixer), chosen
because it is tiny, well documented and trivially reproducible across
implementations.  All randomized operations in the library derive their bits
from one of these generators; sub-computations get independent streams via
split_seed rather than by sharing generator state.

Advice spaces and their measures:

  - CantorSpace: uniform i.i.d. bits.
  - Naturals (geometric): P(n) = 2^-(n+1), realized by counting the 1-bits
    before the first 0-bit of a uniform stream.
  - NatTimesCantor: geometric natural from the head of the stream, the
    remainder of the stream as the Cantor component (product measure).
  - BaireSpace: coordinate-wise geometric naturals (product measure).
  - Naturals with the counting measure admits no sampler and is rejected.
"""
from __future__ import annotations

from dataclasses import dataclass

from .streams import BitStream, NatStream

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Deterministic 64-bit generator; the word sequence is a pure function of the seed."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix64(self._state)


def split_seed(seed: int, index: int) -> int:
    """Derived subseed for trial/restart number `index`; documented as mix64(seed + (index+1)*golden)."""
    return _mix64((seed + (index + 1) * _GOLDEN) & _MASK64)


def bit_stream_from_seed(seed: int) -> BitStream:
    """Uniform i.i.d. bits, 64 per generator word, low bit first."""
    gen = SplitMix64(seed)
    words: list[int] = [gen.next_u64()]
    first = words[0]

    def bit(n: int) -> int:
        if n < 64:  # fast path: most consumers stay inside the first word
            return (first >> n) & 1
        w, r = divmod(n, 64)
        while len(words) <= w:
            words.append(gen.next_u64())
        return (words[w] >> r) & 1

    return BitStream(bit)


def geometric_from_bits(bits: BitStream, start: int = 0) -> tuple[int, int]:
    """Count 1-bits from `start` up to the first 0-bit.

    Returns (value, next_position).  P(value = n) = 2^-(n+1) under the
    uniform measure on the bit source.
    """
    n = 0
    pos = start
    while bits.bit(pos) == 1:
        n += 1
        pos += 1
    return n, pos + 1


@dataclass(frozen=True)
class AdviceSpace:
    """One of the supported probability spaces of random advice."""

    variant: str  # "cantor" | "naturals" | "naturals_counting" | "nat_times_cantor" | "baire"

    @property
    def samplable(self) -> bool:
        return self.variant != "naturals_counting"


CANTOR = AdviceSpace("cantor")
NATURALS = AdviceSpace("naturals")
NATURALS_COUNTING = AdviceSpace("naturals_counting")
NAT_TIMES_CANTOR = AdviceSpace("nat_times_cantor")
BAIRE = AdviceSpace("baire")


def advice_sample(space: AdviceSpace, seed: int):
    """Draw one advice element; a pure, repeatable function of the seed.

    Returns a BitStream for CantorSpace, an int for Naturals, an
    (int, BitStream) pair for NatTimesCantor and a NatStream for BaireSpace.
    """
    if not space.samplable:
        raise ValueError("counting measure on the naturals admits no sampler")
    bits = bit_stream_from_seed(seed)
    if space.variant == "cantor":
        return bits
    if space.variant == "naturals":
        n, _ = geometric_from_bits(bits)
        return n
    if space.variant == "nat_times_cantor":
        n, pos = geometric_from_bits(bits)
        return n, bits.shift(pos)
    if space.variant == "baire":
        cuts: list[int] = [0]
        values: list[int] = []

        def coordinate(i: int) -> int:
            while len(values) <= i:
                v, nxt = geometric_from_bits(bits, cuts[-1])
                values.append(v)
                cuts.append(nxt)
            return values[i]

        return NatStream(coordinate)
    raise ValueError(f"unknown advice space {space.variant!r}")
