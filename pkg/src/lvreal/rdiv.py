"""Robust division and all-or-unique choice.

rdiv(x, y) = x / max(x, y) for y != 0 and is totally multi-valued on [0,1]
at y = 0; the canonical selection there is 0.  The stream version realizes
the operation with at most one mind change: it holds the provisional value 0
until positivity of max(x, y) is witnessed at some finite precision, then
switches once and refines the quotient by interval arithmetic.

The transducer pair auc_to_pcc_k / auc_to_pcc_h reduces all-or-unique choice
to choice on a proper interval: K localizes a singleton input into an
interval no longer than 2^-n (n the position of the first negative
information), and H converts any point of that interval back into the
singleton, emitting signed digits with a one-position lag so that the prefix
produced before the switch always extends to the final value.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .streams import SignedDigitStream
from .trees import NegClosedUnit


def _check_unit(value: Fraction, label: str) -> Fraction:
    value = Fraction(value)
    if not 0 <= value <= 1:
        raise ValueError(f"{label} must lie in [0, 1]")
    return value


def rdiv(x: Fraction, y: Fraction) -> Fraction:
    """Exact robust division with the canonical selection 0 at y = 0."""
    x = _check_unit(x, "x")
    y = _check_unit(y, "y")
    if y == 0:
        return Fraction(0)
    return x / max(x, y)


def rdiv_verify(x: Fraction, y: Fraction, value: Fraction, tol: Fraction = Fraction(0)) -> bool:
    """Multi-valued acceptance: any value in [0,1] at y = 0, else the quotient within tol."""
    x, y, value = Fraction(x), Fraction(y), Fraction(value)
    if y == 0:
        return 0 <= value <= 1
    return abs(value - x / max(x, y)) <= tol


@dataclass(frozen=True)
class RdivOutcome:
    value: Fraction
    mind_changes: int
    witness_precision: Optional[int]  # n with max(x,y) > 2^-n, when witnessed
    exhausted: bool


def rdiv_stream(
    x: SignedDigitStream, y: SignedDigitStream, k: int, fuel: int
) -> RdivOutcome:
    """Quotient to precision 2^-k from streams naming values in [0, 1].

    Phase one emits the provisional 0.  Once some approximation certifies
    max(x, y) > 2^-n the single mind change happens and interval arithmetic
    refines x / max(x, y) until its bracket is narrower than 2^-k.  If no
    witness ever appears (x = y = 0) the provisional value stands and the run
    reports exhaustion, which is the honest outcome: y = 0 also permits it.
    """
    target = Fraction(1, 1 << k)
    witness: Optional[int] = None
    # running numerators at scale 2^-t: approx after t digits is num / 2^t
    num_x = num_y = 0
    for t in range(1, fuel + 1):
        num_x = 2 * num_x + x.digit(t - 1)
        num_y = 2 * num_y + y.digit(t - 1)
        if witness is None:
            # x > 2^-t is certified once (num - 1)/2^t > 0, and likewise for y
            if num_x <= 1 and num_y <= 1:
                continue
            certified = Fraction(max(num_x, num_y) - 1, 1 << t)
            witness = 1
            while Fraction(1, 1 << witness) >= certified:
                witness += 1
        err = Fraction(1, 1 << t)
        ax, ay = Fraction(num_x, 1 << t), Fraction(num_y, 1 << t)
        x_lo, x_hi = max(ax - err, Fraction(0)), min(ax + err, Fraction(1))
        y_lo, y_hi = max(ay - err, Fraction(0)), min(ay + err, Fraction(1))
        # q = x / max(x, y) is nondecreasing in x and nonincreasing in y
        q_lo = x_lo / max(x_lo, y_hi) if max(x_lo, y_hi) > 0 else Fraction(0)
        q_hi = x_hi / max(x_hi, y_lo)
        if q_hi - q_lo <= target:
            return RdivOutcome(
                value=(q_lo + q_hi) / 2,
                mind_changes=1,
                witness_precision=witness,
                exhausted=False,
            )
    return RdivOutcome(
        value=Fraction(0),
        mind_changes=0 if witness is None else 1,
        witness_precision=witness,
        exhausted=True,
    )


# -- all-or-unique choice -------------------------------------------------------


@dataclass(frozen=True)
class AucInterval:
    """K's output: a proper closed interval, or the whole unit interval."""

    lo: Fraction
    hi: Fraction
    switched_at: Optional[int]  # position of the first negative information

    @property
    def is_full(self) -> bool:
        return self.switched_at is None


def auc_to_pcc_k(name: NegClosedUnit, max_items: int) -> AucInterval:
    """Localize an all-or-unique name into an interval of length <= 2^-n.

    While the name shows no negative information it is copied unchanged (the
    full-interval branch).  At the first information, at position n, reading
    continues until the uncovered region fits inside an interval of length
    2^-n, which is then emitted.  Names outside the all-or-unique discipline
    give unspecified output.
    """
    lo, hi = Fraction(0), Fraction(1)
    switched_at: Optional[int] = None
    for j in range(max_items):
        item = name.item(j)
        if item is None:
            continue
        if switched_at is None:
            switched_at = j
        a, b = item
        # clamp the uncovered hull; middle-splitting covers would violate
        # the singleton discipline and are ignored by the hull update
        if a <= lo < b:
            lo = min(b, hi)
        if a < hi <= b:
            hi = max(a, lo)
        if hi - lo <= Fraction(1, 1 << switched_at):
            return AucInterval(lo, hi, switched_at)
    if switched_at is None:
        return AucInterval(Fraction(0), Fraction(1), None)
    raise ValueError("name did not localize its singleton within the item budget")


@dataclass(frozen=True)
class AucPoint:
    value: Fraction
    digits_before_switch: int
    switched: bool


def auc_to_pcc_h(name: NegClosedUnit, y: Fraction, max_items: int) -> AucPoint:
    """Convert a chosen point of K's interval back into a point of the named set.

    Signed digits of y are emitted one position behind the name reading; at
    the first negative information (position n) the emitted m = n - 1 digits
    satisfy |x - c_m| <= 2^-m for the singleton value x because
    |x - y| <= 2^-n and the tracker keeps |y - c_m| <= 2^-(m+1) except when
    pinned at the domain boundary, where the reach interval is truncated
    anyway.  The digit stream is then extended to x; without negative
    information y itself passes through.
    """
    y = _check_unit(y, "y")
    center = Fraction(0)
    digits = 0
    for j in range(max_items):
        item = name.item(j)
        if item is not None:
            if name.known_value is None:
                raise ValueError("name revealed information but carries no singleton value")
            x = name.known_value
            reach = Fraction(1, 1 << digits)
            if abs(x - center) > reach:
                raise ValueError("all-or-unique discipline violated: prefix not extendible")
            return AucPoint(value=x, digits_before_switch=digits, switched=True)
        if j >= 1:
            center = _track_digit(center, y, digits)
            digits += 1
    return AucPoint(value=y, digits_before_switch=digits, switched=False)


def _track_digit(center: Fraction, target: Fraction, emitted: int) -> Fraction:
    """Append the signed digit that rounds `center` nearest to `target`."""
    spacing = Fraction(1, 1 << (emitted + 1))
    err = target - center
    d = round(err / spacing)
    d = max(-1, min(1, d))
    return center + d * spacing
