"""Choice operators as executable procedures.

Each operator here is the canonical machine for one flavor of choice: path
following with failure recognition for trees of positive measure, guess
revision with finitely many mind changes for choice on the naturals, density
search for cylinders of high relative measure, interval coding for finite
choice with probability thresholds, and the exhaustive majority vote that
derandomizes single-valued computations with success measure above 1/2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Union

from .exact import Dyadic, dyadic_round
from .trees import CoTree, NegClosedUnit

# -- path following ---------------------------------------------------------


@dataclass(frozen=True)
class PathEmitting:
    """No failure within fuel; the emitted prefix so far."""

    prefix: str


@dataclass(frozen=True)
class PathFailed:
    """The first emitted-candidate prefix of this length left the tree."""

    step: int


@dataclass(frozen=True)
class PathExhausted:
    prefix: str


PathOutcome = Union[PathEmitting, PathFailed, PathExhausted]


def wwkl_path(tree: CoTree, advice, fuel: int, out_len: Optional[int] = None) -> PathOutcome:
    """Follow the advice bits through the tree, failing at the first excluded prefix.

    A bit is emitted only after its whole prefix is confirmed to be a member
    of the tree.  For a fixed tree the successful advices are exactly the
    infinite paths; failure is recognized at the length of the bad prefix.
    """
    prefix = ""
    limit = fuel if out_len is None else min(fuel, out_len)
    for n in range(limit):
        candidate = prefix + str(advice(n))
        if not tree.member(candidate):
            return PathFailed(len(candidate))
        prefix = candidate
    if out_len is not None and len(prefix) < out_len:
        return PathExhausted(prefix)
    return PathEmitting(prefix)


# -- choice on the naturals ---------------------------------------------------


@dataclass(frozen=True)
class MindChangeLog:
    """Guesses in adoption order as (value, step adopted); first entry is free."""

    entries: tuple[tuple[int, int], ...]

    @property
    def mind_changes(self) -> int:
        return len(self.entries) - 1

    @property
    def final_guess(self) -> int:
        return self.entries[-1][0]


@dataclass(frozen=True)
class CnSelection:
    guess: int
    log: MindChangeLog
    exhausted: bool  # fuel ran out before the enumeration went silent


def cn_select(complement_enum: Iterable[int], fuel: int) -> CnSelection:
    """Track the least natural not yet enumerated.

    The guess moves exactly when the current guess shows up in the
    enumeration, and it never moves backwards; for a fair enumeration of the
    complement of a non-empty set B it stabilizes at min(B).
    """
    seen: set[int] = set()
    guess = 0
    entries = [(0, 0)]
    it = iter(complement_enum)
    consumed = 0
    while consumed < fuel:
        try:
            value = next(it)
        except StopIteration:
            return CnSelection(guess, MindChangeLog(tuple(entries)), exhausted=False)
        consumed += 1
        if value < 0:
            raise ValueError("enumeration must produce naturals")
        seen.add(value)
        if value == guess:
            while guess in seen:
                guess += 1
            entries.append((guess, consumed))
    try:
        next(it)
        more = True
    except StopIteration:
        more = False
    return CnSelection(guess, MindChangeLog(tuple(entries)), exhausted=more)


# -- density search -----------------------------------------------------------


@dataclass(frozen=True)
class DensityWitness:
    word: str
    relative_measure: Fraction
    rejected: int


def _length_lex_words():
    yield ""
    length = 1
    while True:
        for i in range(1 << length):
            yield format(i, f"0{length}b")
        length += 1


def ldl_search(tree: CoTree, k: int, fuel: int) -> Optional[DensityWitness]:
    """First word in length-lex order whose subtree has relative measure >= 1 - 2^-k.

    The certificate is exact for finite exclusion lists (the only case
    implemented); rejection needs the strict inequality, so candidates that
    sit exactly on the threshold are accepted.  Returns None when fuel ends
    before a witness appears.
    """
    threshold = 1 - Fraction(1, 1 << k)
    rejected = 0
    for count, word in enumerate(_length_lex_words()):
        if count >= fuel:
            return None
        density = tree.subtree(word).measure_exact()
        if density >= threshold:
            return DensityWitness(word, density, rejected)
        rejected += 1
    return None


# -- finite choice via intervals ---------------------------------------------


@dataclass(frozen=True)
class IntervalCode:
    """b equally long closed intervals in [0,1]; the chosen ones carry the set."""

    a: int
    b: int
    epsilon: Fraction
    chosen: tuple[int, ...]
    length: Fraction
    intervals: tuple[tuple[Fraction, Fraction], ...]  # all b of them
    name: NegClosedUnit = field(compare=False)

    def measure(self) -> Fraction:
        return self.length * len(self.chosen)


def interval_encode(chosen: Iterable[int], a: int, b: int, epsilon: Fraction) -> IntervalCode:
    """Encode a subset of {0..b-1} with |C| >= a as a union of closed intervals.

    The common length l is pinned to the midpoint of the admissible range
    (epsilon/a, 1/b), which makes the total measure a*l exceed epsilon while
    the b intervals still fit disjointly; the leftover slack is spread evenly
    so the last interval ends exactly at 1.
    """
    epsilon = Fraction(epsilon)
    if not 0 < a < b:
        raise ValueError("need 0 < a < b")
    if epsilon < 0 or Fraction(epsilon, a) >= Fraction(1, b):
        raise ValueError("need epsilon/a < 1/b")
    chosen_t = tuple(sorted(set(chosen)))
    if len(chosen_t) < a:
        raise ValueError("need |C| >= a")
    if chosen_t and (chosen_t[0] < 0 or chosen_t[-1] >= b):
        raise ValueError("C must be a subset of {0..b-1}")
    length = (Fraction(epsilon, a) + Fraction(1, b)) / 2
    gap = (1 - b * length) / (b - 1)
    intervals = tuple(
        (i * (length + gap), i * (length + gap) + length) for i in range(b)
    )
    complement: list[tuple[Fraction, Fraction]] = []
    prev_end = Fraction(-1)
    for i in chosen_t:
        lo, hi = intervals[i]
        if prev_end < lo:
            complement.append((prev_end, lo))
        prev_end = hi
    if prev_end < 1:
        complement.append((prev_end, Fraction(2)))
    return IntervalCode(
        a=a,
        b=b,
        epsilon=epsilon,
        chosen=chosen_t,
        length=length,
        intervals=intervals,
        name=NegClosedUnit.from_intervals(complement),
    )


def interval_decode(code: IntervalCode, x) -> int:
    """Recover the unique chosen index whose closed interval contains x."""
    value = x.to_fraction() if isinstance(x, Dyadic) else Fraction(x)
    for i in code.chosen:
        lo, hi = code.intervals[i]
        if lo <= value <= hi:
            return i
    raise ValueError(f"{value} is not in the encoded set")


# -- majority vote ------------------------------------------------------------

Oracle = Callable[[str], Optional[tuple[Fraction, Fraction]]]


def majority_vote(oracle: Oracle, k: int, max_depth: int) -> Optional[Dyadic]:
    """Derandomize a single-valued computation with success measure > 1/2.

    Searches depths n = 0..max_depth for a strict majority of advice words of
    length n whose oracle intervals (radius at most 2^-(k+2)) share a common
    point; one-dimensional Helly makes pairwise intersection equivalent to a
    common point, found by stabbing at interval endpoints.  Any point of the
    common intersection is within 2^-k of the true value because at least one
    majority member must be correct.  Returns None when no depth succeeds.
    """
    max_width = Fraction(1, 1 << (k + 1))
    for n in range(max_depth + 1):
        intervals: list[tuple[Fraction, Fraction]] = []
        for i in range(1 << n):
            word = format(i, f"0{n}b") if n else ""
            out = oracle(word)
            if out is None:
                continue
            lo, hi = Fraction(out[0]), Fraction(out[1])
            if hi < lo or hi - lo > max_width:
                raise ValueError("oracle interval wider than 2^-(k+1)")
            intervals.append((lo, hi))
        need = (1 << n) // 2 + 1
        if len(intervals) < need:
            continue
        hit = _best_stab(intervals, need)
        if hit is None:
            continue
        lo, hi = hit
        if hi > lo:
            return _simplest_dyadic_in(lo, hi)
        return dyadic_round(lo, k + 2)
    return None


def _best_stab(intervals, need):
    """Common intersection of some >= need intervals, or None."""
    points = sorted({p for iv in intervals for p in iv})
    for x in points:
        hitting = [iv for iv in intervals if iv[0] <= x <= iv[1]]
        if len(hitting) >= need:
            lo = max(iv[0] for iv in hitting)
            hi = min(iv[1] for iv in hitting)
            return lo, hi
    return None


def _simplest_dyadic_in(lo: Fraction, hi: Fraction) -> Dyadic:
    """Dyadic with the smallest exponent inside the positive-width interval [lo, hi]."""
    bits = 0
    while True:
        scale = 1 << bits
        m = -((-lo.numerator * scale) // lo.denominator)  # ceil(lo * scale)
        if Fraction(m, scale) <= hi:
            return Dyadic(m, bits)
        bits += 1
