"""Application machines for the Las Vegas engine.

Each constructor packages a concrete algorithm as a compute/monitor pair so
that the generic runner, restart loop, estimator and composition apply to it.
"""
from __future__ import annotations

from fractions import Fraction

from .engine import LasVegasMachine
from .ivt import PwlFunction, Stalled, Zero, _check_sign_change, ivt_trisect, pwl_range
from .rdiv import auc_to_pcc_h, auc_to_pcc_k
from .sampling import CANTOR
from .streams import BitStream, binary_value
from .trees import NegClosedUnit


def ivt_machine(k: int, fuel_hint: int = 10**6) -> LasVegasMachine:
    """The guess-(b, x) zero finder over Cantor advice.

    Advice bit 0 is the guess b; the remaining bits name the point x.  With
    b = 0 the machine emits bits of x while monitoring the semi-decidable
    event f(x) != 0.  With b = 1 it runs trisection and emits the zero's
    binary digits; a stall ends the compute generator, which the runner
    reports as exhaustion (the failure that has no finite witness).
    """

    def compute(f: PwlFunction, advice: BitStream):
        _check_sign_change(f)
        if advice.bit(0) == 0:
            x_bits = advice.shift(1)
            lo, hi = Fraction(0), Fraction(1)
            t = 0
            while True:
                bit = x_bits.bit(t)
                mid = (lo + hi) / 2
                lo, hi = (mid, hi) if bit == 1 else (lo, mid)
                t += 1
                r_lo, r_hi = pwl_range(f, lo, hi)
                if r_lo > 0 or r_hi < 0:
                    while True:
                        yield None
                yield str(bit)
        else:
            result = ivt_trisect(f, k, fuel_hint)
            if isinstance(result, Stalled):
                return
            value = result.value.to_fraction()
            rem = value
            while True:
                rem *= 2
                bit = 1 if rem >= 1 else 0
                rem -= bit
                yield str(bit)

    def monitor(f: PwlFunction, advice: BitStream):
        if advice.bit(0) == 1:
            while True:
                yield 0  # a trisection stall is not recognizable
        x_bits = advice.shift(1)
        lo, hi = Fraction(0), Fraction(1)
        t = 0
        while True:
            mid = (lo + hi) / 2
            lo, hi = (mid, hi) if x_bits.bit(t) == 1 else (lo, mid)
            t += 1
            r_lo, r_hi = pwl_range(f, lo, hi)
            yield 1 if (r_lo > 0 or r_hi < 0) else 0

    return LasVegasMachine(CANTOR, compute, monitor, name="ivt")


def auc_machine(k: int, name_items: int = 256) -> LasVegasMachine:
    """All-or-unique choice through interval choice, with the choice granted.

    The input is a negative-information name of [0,1] or of a singleton.  The
    localizer turns it into a closed interval, the advice picks a point of
    that interval uniformly, and the back-converter emits the final value's
    binary digits.  Every advice leads back to the named set, so the monitor
    stays silent and the empirical success measure is 1.
    """

    def compute(name: NegClosedUnit, advice: BitStream):
        interval = auc_to_pcc_k(name, name_items)
        y = interval.lo + binary_value(advice.bit, 64) * (interval.hi - interval.lo)
        point = auc_to_pcc_h(name, y, name_items)
        rem = point.value
        while True:
            rem *= 2
            bit = 1 if rem >= 1 else 0
            rem -= bit
            yield str(bit)

    def monitor(name: NegClosedUnit, advice: BitStream):
        while True:
            yield 0

    return LasVegasMachine(CANTOR, compute, monitor, name="auc")
