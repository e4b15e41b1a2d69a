"""The Las Vegas machine protocol.

A machine is a pair of step generators over (input, advice): the compute side
emits output symbols, the monitor side emits Sierpinski bits.  Running a
machine interleaves one monitor step per compute step and classifies the run:

  - Failed(step):    the monitor fired; the advice was recognized as bad.
  - Succeeding:      the requested output length appeared, no failure so far.
  - Exhausted:       fuel ran out (or the machine declared it cannot make
                     further progress) without either of the above.

Exhausted is deliberately a third outcome: absence of failure within fuel is
not success, and restart loops resample only on recognized failure.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional, Union

from .exact import sqrt_bounds
from .sampling import CANTOR, AdviceSpace, advice_sample, split_seed
from .streams import BitStream, interleave
from .trees import CoTree

# -- outcomes -----------------------------------------------------------------


@dataclass(frozen=True)
class Succeeding:
    output: str
    steps: int

    kind = "succeeding"


@dataclass(frozen=True)
class Failed:
    step: int  # lockstep rounds completed when the monitor fired
    partial: str

    kind = "failed"


@dataclass(frozen=True)
class Exhausted:
    partial: str

    kind = "exhausted"


RunOutcome = Union[Succeeding, Failed, Exhausted]

StepGenerator = Iterator[Optional[str]]


@dataclass(frozen=True)
class LasVegasMachine:
    """compute/monitor are factories (input, advice) -> step generator.

    The compute generator yields one item per step: an output symbol (a
    one-character string) or None for an internal step; returning early means
    no further progress is possible.  The monitor generator yields 0 until
    failure becomes visible, then 1.  Both must be deterministic functions of
    (input, advice), which makes every run replayable.
    """

    advice_space: AdviceSpace
    compute: Callable[[object, object], StepGenerator]
    monitor: Callable[[object, object], Iterator[int]]
    name: str = ""


def lv_run(machine: LasVegasMachine, input_value, advice, out_len: int, fuel: int) -> RunOutcome:
    """Lockstep run: each round takes one monitor step, then one compute step."""
    compute = machine.compute(input_value, advice)
    monitor = machine.monitor(input_value, advice)
    output: list[str] = []
    monitor_live = True
    for round_no in range(1, fuel + 1):
        if monitor_live:
            try:
                if next(monitor) != 0:
                    return Failed(round_no, "".join(output))
            except StopIteration:
                monitor_live = False
        try:
            symbol = next(compute)
        except StopIteration:
            return Exhausted("".join(output))
        if symbol is not None:
            output.append(symbol)
            if len(output) >= out_len:
                return Succeeding("".join(output[:out_len]), round_no)
    return Exhausted("".join(output))


@dataclass(frozen=True)
class RestartResult:
    outcome: RunOutcome
    restarts: int
    subseed: int  # seed of the advice used by the final run


def lv_restart_loop(
    machine: LasVegasMachine,
    input_value,
    seed: int,
    fuel_per_run: int,
    max_restarts: int,
    out_len: int,
) -> RestartResult:
    """Resample advice on recognized failure only; stop at the first non-Failed run."""
    restarts = 0
    while True:
        sub = split_seed(seed, restarts)
        advice = advice_sample(machine.advice_space, sub)
        outcome = lv_run(machine, input_value, advice, out_len, fuel_per_run)
        if outcome.kind != "failed" or restarts >= max_restarts:
            return RestartResult(outcome, restarts, sub)
        restarts += 1


# -- empirical success measure -------------------------------------------------

_WILSON_Z2 = Fraction(103684, 15625)  # (2.576)^2, slightly above the exact 99% quantile


@dataclass(frozen=True)
class SuccessEstimate:
    trials: int
    succeeded: int
    failed: int
    exhausted: int
    estimate: Optional[Fraction]  # succeeded / (trials - exhausted)
    wilson99: tuple[Fraction, Fraction]

    def to_json_dict(self) -> dict:
        lo, hi = self.wilson99
        # round outward to a readable denominator; stays a valid 99% interval
        scale = 10**9
        lo = Fraction(lo.numerator * scale // lo.denominator, scale)
        hi = Fraction(-((-hi.numerator * scale) // hi.denominator), scale)
        return {
            "trials": self.trials,
            "succeeded": self.succeeded,
            "failed": self.failed,
            "exhausted": self.exhausted,
            "estimate": None if self.estimate is None else str(self.estimate),
            "wilson99": [str(max(lo, Fraction(0))), str(min(hi, Fraction(1)))],
        }


def wilson_interval_99(successes: int, n: int) -> tuple[Fraction, Fraction]:
    """Exact-rational Wilson score interval, rounded outward at the square root.

    The outward rounding and the slightly enlarged z keep the interval
    conservative while every endpoint stays an exact rational.
    """
    if n <= 0:
        return Fraction(0), Fraction(1)
    p_hat = Fraction(successes, n)
    z2 = _WILSON_Z2
    denom = 1 + z2 / n
    center = p_hat + z2 / (2 * n)
    rad_sq = z2 * (p_hat * (1 - p_hat) / n + z2 / (4 * n * n))
    _, rad_hi = sqrt_bounds(rad_sq)
    lo = max(Fraction(0), (center - rad_hi) / denom)
    hi = min(Fraction(1), (center + rad_hi) / denom)
    return lo, hi


def lv_estimate_success(
    machine: LasVegasMachine,
    input_value,
    trials: int,
    seed: int,
    fuel: int,
    out_len: int,
) -> SuccessEstimate:
    """Independent seeded trials; the estimate ignores exhausted runs."""
    succeeded = failed = exhausted = 0
    for i in range(trials):
        advice = advice_sample(machine.advice_space, split_seed(seed, i))
        outcome = lv_run(machine, input_value, advice, out_len, fuel)
        if outcome.kind == "succeeding":
            succeeded += 1
        elif outcome.kind == "failed":
            failed += 1
        else:
            exhausted += 1
    effective = trials - exhausted
    estimate = Fraction(succeeded, effective) if effective else None
    return SuccessEstimate(
        trials=trials,
        succeeded=succeeded,
        failed=failed,
        exhausted=exhausted,
        estimate=estimate,
        wilson99=wilson_interval_99(succeeded, effective),
    )


# -- composition ----------------------------------------------------------------


def lv_compose(
    m_f: LasVegasMachine,
    m_g: LasVegasMachine,
    g_out_len: int,
    bridge: Optional[Callable[[object, str], object]] = None,
) -> LasVegasMachine:
    """Independent composition f after g over the paired advice space.

    Both machines must run over Cantor space; the composed advice is a single
    bit stream whose even positions feed f and odd positions feed g (the
    measure-preserving pairing of two coin sequences).  The run is staged: g
    executes with its own monitor until it has produced g_out_len symbols,
    then `bridge(input, g_output)` becomes f's input and f takes over.  The
    composed monitor fires iff g's fires, or g ran clean and f's fires.
    """
    if m_f.advice_space != CANTOR or m_g.advice_space != CANTOR:
        raise ValueError("composition is implemented for Cantor-space advice only")
    if bridge is None:
        bridge = lambda _input, g_output: g_output

    def split_advice(advice: BitStream) -> tuple[BitStream, BitStream]:
        return BitStream(lambda n: advice.bit(2 * n)), BitStream(lambda n: advice.bit(2 * n + 1))

    def compute(input_value, advice):
        r_f, s_g = split_advice(advice)
        g_compute = m_g.compute(input_value, s_g)
        g_monitor = m_g.monitor(input_value, s_g)
        g_output: list[str] = []
        while len(g_output) < g_out_len:
            if next(g_monitor, 0) != 0:
                while True:  # g failed: idle; the composed monitor reports it
                    yield None
            symbol = next(g_compute, StopIteration)
            if symbol is StopIteration:
                return
            if symbol is not None:
                g_output.append(symbol)
            yield None
        f_input = bridge(input_value, "".join(g_output))
        yield from m_f.compute(f_input, r_f)

    def monitor(input_value, advice):
        r_f, s_g = split_advice(advice)
        g_compute = m_g.compute(input_value, s_g)
        g_monitor = m_g.monitor(input_value, s_g)
        g_output: list[str] = []
        while len(g_output) < g_out_len:
            if next(g_monitor, 0) != 0:
                while True:
                    yield 1
            symbol = next(g_compute, StopIteration)
            if symbol is StopIteration:
                while True:
                    yield 0
            if symbol is not None:
                g_output.append(symbol)
            yield 0
        f_input = bridge(input_value, "".join(g_output))
        yield from m_f.monitor(f_input, r_f)

    return LasVegasMachine(
        advice_space=CANTOR,
        compute=compute,
        monitor=monitor,
        name=f"compose({m_f.name},{m_g.name})",
    )


# -- canonical machines -----------------------------------------------------------


def wwkl_machine(tree: CoTree) -> LasVegasMachine:
    """The path-following machine: success set is exactly the path set of the tree.

    For finite trees membership along a path is incremental: a prefix that is
    already a member can only leave the tree if the extended prefix itself is
    an excluded word, so each step costs one set lookup.
    """
    steppers: dict[int, Callable[[str], bool]] = {}

    def stepper(t: CoTree) -> Callable[[str], bool]:
        cached = steppers.get(id(t))
        if cached is not None:
            return cached
        if t.finite and "" not in t.antichain():
            excluded = frozenset(t.antichain())
            max_len = max((len(w) for w in excluded), default=0)

            def is_member_step(candidate: str) -> bool:
                return len(candidate) > max_len or candidate not in excluded

        else:  # lazy, or the whole space is excluded: use the full check
            is_member_step = t.member
        steppers[id(t)] = is_member_step
        return is_member_step

    def compute(input_tree, advice):
        is_member_step = stepper(input_tree)
        prefix = ""
        n = 0
        while True:
            candidate = prefix + ("1" if advice(n) else "0")
            if not is_member_step(candidate):
                while True:
                    yield None
            prefix = candidate
            n += 1
            yield candidate[-1]

    def monitor(input_tree, advice):
        is_member_step = stepper(input_tree)
        prefix = ""
        n = 0
        while True:
            prefix = prefix + ("1" if advice(n) else "0")
            n += 1
            yield 0 if is_member_step(prefix) else 1

    return LasVegasMachine(CANTOR, compute, monitor, name="wwkl")


def identity_machine() -> LasVegasMachine:
    """Full success set; copies advice bits to the output."""

    def compute(_input, advice):
        n = 0
        while True:
            yield str(advice(n))
            n += 1

    def monitor(_input, _advice):
        while True:
            yield 0

    return LasVegasMachine(CANTOR, compute, monitor, name="id")


def always_failing_machine(at_step: int = 1) -> LasVegasMachine:
    def compute(_input, _advice):
        while True:
            yield None

    def monitor(_input, _advice):
        for _ in range(at_step - 1):
            yield 0
        while True:
            yield 1

    return LasVegasMachine(CANTOR, compute, monitor, name="fail")
