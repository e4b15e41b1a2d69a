"""Zero finding for piecewise-linear functions with a sign change.

PWL functions with rational breakpoints are the exactly-evaluable test class:
sign decisions and whole zero sets are computable with no tolerance, which
gives every randomized run an independent oracle to be checked against.

Three procedures live here: deterministic trisection (which stalls on zero
plateaus, and the stall is not recognizable as a failure), the second-order
probabilistic algorithm that guesses a bit b and a point x (b = 0 bets on a
plateau and monitors the semi-decidable event f(x) != 0; b = 1 runs
trisection), and the converging tree sequence that encodes a shrinking
interval as path sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .exact import Dyadic, dyadic_round
from .streams import BitStream
from .trees import CoTree


@dataclass(frozen=True)
class PwlFunction:
    """Continuous piecewise-linear function on [0,1] with rational breakpoints."""

    breakpoints: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        pts = tuple((Fraction(t), Fraction(v)) for t, v in self.breakpoints)
        if len(pts) < 2 or pts[0][0] != 0 or pts[-1][0] != 1:
            raise ValueError("breakpoints must run from t=0 to t=1")
        if any(t1 >= t2 for (t1, _), (t2, _) in zip(pts, pts[1:])):
            raise ValueError("breakpoint abscissae must be strictly increasing")
        object.__setattr__(self, "breakpoints", pts)

    @staticmethod
    def from_json_dict(data: dict) -> "PwlFunction":
        return PwlFunction(tuple((Fraction(t), Fraction(v)) for t, v in data["breakpoints"]))

    def __call__(self, t: Fraction) -> Fraction:
        return pwl_eval(self, t)


def pwl_eval(f: PwlFunction, t: Fraction) -> Fraction:
    """Exact interpolation; rejects arguments outside [0, 1]."""
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise ValueError("argument outside [0, 1]")
    pts = f.breakpoints
    for (t1, v1), (t2, v2) in zip(pts, pts[1:]):
        if t1 <= t <= t2:
            return v1 + (v2 - v1) * (t - t1) / (t2 - t1)
    raise AssertionError("unreachable: breakpoints cover [0,1]")


ZeroItem = Union[tuple[str, Fraction], tuple[str, Fraction, Fraction]]


def pwl_zero_set(f: PwlFunction) -> list[ZeroItem]:
    """Exact zero set: ("point", t) and ("interval", a, b) items, disjoint and sorted."""
    raw: list[tuple[Fraction, Fraction]] = []  # closed intervals, points as [t, t]
    pts = f.breakpoints
    for (t1, v1), (t2, v2) in zip(pts, pts[1:]):
        if v1 == 0 and v2 == 0:
            raw.append((t1, t2))
        else:
            if v1 == 0:
                raw.append((t1, t1))
            if v2 == 0:
                raw.append((t2, t2))
            if (v1 < 0 < v2) or (v2 < 0 < v1):
                z = t1 + (t2 - t1) * (-v1) / (v2 - v1)
                raw.append((z, z))
    raw.sort()
    merged: list[tuple[Fraction, Fraction]] = []
    for lo, hi in raw:
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return [
        ("point", lo) if lo == hi else ("interval", lo, hi)
        for lo, hi in merged
    ]


def pwl_distance_to_zero_set(f: PwlFunction, value: Fraction) -> Fraction:
    """Exact distance from a point to the zero set; oracle for the zero finders."""
    best: Optional[Fraction] = None
    for item in pwl_zero_set(f):
        if item[0] == "point":
            d = abs(value - item[1])
        else:
            _, lo, hi = item
            d = max(lo - value, value - hi, Fraction(0))
        if best is None or d < best:
            best = d
    if best is None:
        raise ValueError("function has no zero")
    return best


def pwl_range(f: PwlFunction, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Exact min/max of f on [lo, hi]; extrema sit at endpoints or breakpoints."""
    values = [pwl_eval(f, lo), pwl_eval(f, hi)]
    values.extend(v for t, v in f.breakpoints if lo < t < hi)
    return min(values), max(values)


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def _check_sign_change(f: PwlFunction) -> tuple[int, int]:
    sa, sb = _sign(pwl_eval(f, Fraction(0))), _sign(pwl_eval(f, Fraction(1)))
    if sa * sb >= 0:
        raise ValueError("need f(0) * f(1) < 0")
    return sa, sb


@dataclass(frozen=True)
class Zero:
    value: Dyadic


@dataclass(frozen=True)
class Stalled:
    interval: tuple[Fraction, Fraction]


def ivt_trisect(f: PwlFunction, k: int, fuel: int) -> Union[Zero, Stalled]:
    """Trisection on an interval with a sign change.

    Each round probes the two interior third points; a nonzero sign at a
    probe shrinks the interval by a factor of at most 2/3 to the leftmost
    subinterval that keeps the sign change.  Zeros at both probes leave no
    witness to act on, so the round makes no progress and the run stalls.
    Probe evaluations are charged against fuel.
    """
    sign_a, _ = _check_sign_change(f)
    lo, hi = Fraction(0), Fraction(1)
    target = Fraction(1, 1 << (k + 1))
    spent = 0
    while hi - lo > target:
        if spent + 2 > fuel:
            return Stalled((lo, hi))
        third = (hi - lo) / 3
        c1, c2 = lo + third, lo + 2 * third
        s1, s2 = _sign(pwl_eval(f, c1)), _sign(pwl_eval(f, c2))
        spent += 2
        if s1 == 0 and s2 == 0:
            return Stalled((lo, hi))
        if s1 != 0 and sign_a * s1 < 0:
            hi = c1
        elif s1 != 0 and s2 != 0 and s1 * s2 < 0:
            lo, hi, sign_a = c1, c2, s1
        elif s2 != 0 and sign_a * s2 < 0:  # s1 unwitnessed here
            hi = c2
        elif s2 != 0:
            lo, sign_a = c2, s2
        else:  # only s1 witnessed, same sign as the left endpoint
            lo, sign_a = c1, s1
    return Zero(dyadic_round((lo + hi) / 2, k + 2))


@dataclass(frozen=True)
class IvtRun:
    kind: str  # "succeeding" | "failed" | "exhausted"
    value: Optional[Fraction]
    step: Optional[int] = None


def ivt_probabilistic(f: PwlFunction, advice: BitStream, k: int, fuel: int) -> IvtRun:
    """One run of the guess-a-bit-and-a-point algorithm.

    b = advice bit 0.  For b = 0 the guessed point x is read bit by bit while
    the semi-decidable event f(x) != 0 is monitored: the run fails at the
    first precision whose whole bracket misses zero, and succeeds once k bits
    survive.  For b = 1 trisection runs with the x bits disregarded; a stall
    is reported as exhaustion because that failure carries no finite witness.
    """
    _check_sign_change(f)
    b = advice.bit(0)
    x_bits = advice.shift(1)
    if b == 1:
        result = ivt_trisect(f, k, fuel)
        if isinstance(result, Zero):
            return IvtRun("succeeding", result.value.to_fraction())
        return IvtRun("exhausted", None)
    lo, hi = Fraction(0), Fraction(1)
    for t in range(1, min(k, fuel) + 1):
        mid = (lo + hi) / 2
        lo, hi = (mid, hi) if x_bits.bit(t - 1) == 1 else (lo, mid)
        r_lo, r_hi = pwl_range(f, lo, hi)
        if r_lo > 0 or r_hi < 0:
            return IvtRun("failed", None, step=t)
    if k > fuel:
        return IvtRun("exhausted", None)
    return IvtRun("succeeding", (lo + hi) / 2)


def ivt_tree_sequence(approximations: Sequence[tuple[Fraction, Fraction]], n: int) -> CoTree:
    """Stage-n tree of the converging encoding of a shrinking interval.

    The 0-branch is the binary-name tree of half the stage-n interval; the
    1-branch is a hedge of depth k, with k maximal such that the stage-n
    width is below 2^-k (depth 0 when the width is 1 or more).  As the
    interval shrinks to a point the hedge depth grows without bound, so the
    node-wise limit keeps the whole 1-subtree exactly in the singleton case.
    """
    approx = [(Fraction(lo), Fraction(hi)) for lo, hi in approximations[: n + 1]]
    if len(approx) < n + 1:
        raise ValueError("not enough approximations for the requested stage")
    for (lo1, hi1), (lo2, hi2) in zip(approx, approx[1:]):
        if lo2 < lo1 or hi2 > hi1:
            raise ValueError("approximations must be nested")
    lo, hi = approx[n]
    if not 0 <= lo <= hi <= 1:
        raise ValueError("approximations must be subintervals of [0, 1]")
    width = hi - lo
    if width <= 0:
        raise ValueError("stage width must be positive")
    k = 0
    while Fraction(1, 1 << (k + 1)) > width:
        k += 1
    # half the interval, named below the 0-branch
    half_lo, half_hi = lo / 2, hi / 2

    def levels(depth: int):
        if depth == 0:
            return []
        out = []
        if depth == k + 2:
            # the hedge keeps 1{0,1}^k; its minimal non-members sit one level deeper
            out.extend("1" + format(i, f"0{k + 1}b") for i in range(1 << (k + 1)))
        if depth >= 2:
            # minimal excluded words under the 0-branch: children of boundary
            # straddlers whose dyadic interval misses [half_lo, half_hi]
            for word in _straddlers(half_lo, half_hi, depth - 1):
                for c in "01":
                    child = word + c
                    if _cylinder_misses(child, half_lo, half_hi):
                        out.append(child)
        return out

    return CoTree(level_source=levels)


def _cylinder_value(word: str) -> Fraction:
    total = 0
    for c in word:
        total = total * 2 + int(c)
    return Fraction(total, 1 << len(word))


def _cylinder_misses(word: str, lo: Fraction, hi: Fraction) -> bool:
    v = _cylinder_value(word)
    return v > hi or v + Fraction(1, 1 << len(word)) < lo


def _straddlers(lo: Fraction, hi: Fraction, depth: int) -> list[str]:
    """Member words of the given depth (starting with 0) with a child outside [lo, hi]."""
    words = ["0"] if depth >= 1 else []
    for _ in range(depth - 1):
        nxt = []
        for w in words:
            for c in "01":
                child = w + c
                if not _cylinder_misses(child, lo, hi):
                    # only boundary cylinders can spawn excluded children
                    v = _cylinder_value(child)
                    if v < lo or v + Fraction(1, 1 << len(child)) > hi:
                        nxt.append(child)
        words = nxt
    return [w for w in words if not _cylinder_misses(w, lo, hi)]
