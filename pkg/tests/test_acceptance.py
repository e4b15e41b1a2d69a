"""Acceptance suite: one test per criterion, each printing its own pass line.

Run with `pytest tests/test_acceptance.py -v` to get the per-criterion
verdicts; every tolerance below is fixed, nothing is calibrated at runtime.
"""
import itertools
import random
import time
from fractions import Fraction

from lvreal import (
    BitStream,
    CANTOR,
    PathEmitting,
    PathFailed,
    PwlFunction,
    NegClosedUnit,
    Stalled,
    Zero,
    advice_sample,
    auc_machine,
    cantor_pair,
    cantor_unpair,
    ivt_probabilistic,
    ivt_trisect,
    ldl_search,
    lv_compose,
    lv_estimate_success,
    majority_vote,
    nash_2x2_family,
    nash_family_recover,
    nash_solve,
    product_amplify,
    rdiv,
    rdiv_stream,
    sds_from_rational,
    split_seed,
    svc_interval,
    svc_remaining_length,
    SvcTable,
    tree_from_excluded,
    tree_measure_exact,
    wwkl_machine,
    wwkl_path,
)


def _report(name, elapsed, budget):
    print(f"PASS {name}: {elapsed:.2f}s (budget {budget}s)")
    assert elapsed < budget, f"{name} exceeded its runtime budget"


def _random_positive_tree(rng):
    while True:
        words = {
            "".join(rng.choice("01") for _ in range(rng.randint(1, 5)))
            for _ in range(rng.randint(1, 5))
        }
        tree = tree_from_excluded(words)
        if tree_measure_exact(tree) > 0:
            return tree


def test_criterion_01_wwkl_measure_law():
    start = time.time()
    tree = tree_from_excluded(["00"])
    assert tree_measure_exact(tree) == Fraction(3, 4)
    est = lv_estimate_success(wwkl_machine(tree), tree, 10000, 42, 10**6, 8)
    assert Fraction(73, 100) <= est.estimate <= Fraction(77, 100)

    rng = random.Random(5)
    covered = 0
    for j in range(20):
        t = _random_positive_tree(rng)
        mu = tree_measure_exact(t)
        out_len = max(len(w) for w in t.antichain())
        e = lv_estimate_success(wwkl_machine(t), t, 10000, 100 + j, 10**6, out_len)
        if e.wilson99[0] <= mu <= e.wilson99[1]:
            covered += 1
    assert covered >= 19, f"Wilson coverage {covered}/20"
    _report("criterion 1 (WWKL measure law)", time.time() - start, 5)


def test_criterion_02_nash_closed_form():
    start = time.time()
    for a in (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)):
        game, expected = nash_2x2_family(a)
        pair = nash_solve(game)
        assert pair.x == (Fraction(1, 2), Fraction(1, 2))
        assert pair.y[0] == (1 + a) / (3 + a)
        assert pair.y == expected.y
        assert nash_family_recover(pair.y[0]) == a
    _report("criterion 2 (Nash closed form)", time.time() - start, 1)


def test_criterion_03_smith_volterra_cantor():
    start = time.time()
    assert svc_remaining_length(Fraction(1, 2), 10) == Fraction(1, 2) + Fraction(1, 2**11)
    assert svc_interval("0", Fraction(1, 2)) == (Fraction(0), Fraction(3, 8))
    table = SvcTable(Fraction(1, 2))
    for n in range(11):
        for bits in itertools.product("01", repeat=n):
            w = "".join(bits)
            _, b0 = table.interval(w + "0")
            a1, _ = table.interval(w + "1")
            assert b0 < a1
            assert a1 - b0 == table.delta / (1 << (2 * n + 1))
    _report("criterion 3 (Smith-Volterra-Cantor)", time.time() - start, 1)


def test_criterion_04_lebesgue_density():
    start = time.time()
    tree = tree_from_excluded(["0" * j + "1" for j in range(21) if j != 3])
    witness = ldl_search(tree, 2, fuel=10**5)
    assert witness is not None
    assert witness.word.startswith("0001")
    assert witness.relative_measure >= Fraction(3, 4)
    assert tree.subtree(witness.word).measure_exact() == witness.relative_measure
    _report("criterion 4 (Lebesgue density search)", time.time() - start, 1)


def test_criterion_05_ivt():
    start = time.time()
    line = PwlFunction(((Fraction(0), Fraction(-1)), (Fraction(1), Fraction(2))))
    result = ivt_trisect(line, 30, 10**6)
    assert isinstance(result, Zero)
    assert abs(result.value.to_fraction() - Fraction(1, 3)) <= Fraction(1, 2**30)

    flat = PwlFunction(
        ((Fraction(0), Fraction(-1)), (Fraction(2, 5), Fraction(0)),
         (Fraction(3, 5), Fraction(0)), (Fraction(1), Fraction(1)))
    )
    assert isinstance(ivt_trisect(flat, 30, 10**6), Stalled)

    counts = {"succeeding": 0, "failed": 0, "exhausted": 0}
    for i in range(1000):
        advice = advice_sample(CANTOR, split_seed(7, i))
        counts[ivt_probabilistic(flat, advice, 30, 10**5).kind] += 1
    succ, fail, exh = (counts[k] / 1000 for k in ("succeeding", "failed", "exhausted"))
    assert 0.08 <= succ <= 0.12, succ
    assert abs(fail - 0.4) <= 0.03, fail
    assert abs(exh - 0.5) <= 0.03, exh
    _report("criterion 5 (IVT)", time.time() - start, 5)


def test_criterion_06_robust_division():
    start = time.time()
    rng = random.Random(606)
    for _ in range(1000):
        x = Fraction(rng.randint(0, 1 << 12), 1 << 12)
        y = Fraction(rng.randint(1, 1 << 12), 1 << 12)
        out = rdiv_stream(sds_from_rational(x), sds_from_rational(y), 30, 10**4)
        assert not out.exhausted
        assert out.mind_changes <= 1
        assert abs(out.value - rdiv(x, y)) <= Fraction(1, 2**30)

    machine = auc_machine(k=20)
    for j in range(50):
        x = Fraction(rng.randint(0, 1 << 10), 1 << 10)
        name = NegClosedUnit.singleton(x, first_info_at=rng.randint(0, 8))
        est = lv_estimate_success(machine, name, trials=20, seed=j, fuel=10**4, out_len=20)
        assert est.succeeded == 20, (x, est)
    _report("criterion 6 (robust division)", time.time() - start, 5)


def test_criterion_07_majority_vote():
    start = time.time()
    k = 20
    radius = Fraction(1, 1 << (k + 2))
    winners = {"000", "001", "010", "011", "100"}

    def oracle(word):
        if len(word) < 3:
            return None
        center = Fraction(1, 3) if word[:3] in winners else Fraction(2, 3)
        return center - radius, center + radius

    value = majority_vote(oracle, k, max_depth=3)
    assert value is not None
    assert abs(value.to_fraction() - Fraction(1, 3)) <= Fraction(1, 1 << k)
    _report("criterion 7 (majority vote)", time.time() - start, 1)


def test_criterion_08_amplification():
    start = time.time()
    half = tree_from_excluded(["0"])
    assert tree_measure_exact(product_amplify(half, half)) == Fraction(3, 4)
    rng = random.Random(808)
    for _ in range(100):
        a, b = _random_positive_tree(rng), _random_positive_tree(rng)
        mu_a, mu_b = tree_measure_exact(a), tree_measure_exact(b)
        assert tree_measure_exact(product_amplify(a, b)) == 1 - (1 - mu_a) * (1 - mu_b)
    _report("criterion 8 (amplification)", time.time() - start, 2)


def test_criterion_09_independent_composition():
    start = time.time()
    tree_f = tree_from_excluded(["00"])  # measure 3/4
    tree_g = tree_from_excluded(["0"])  # measure 1/2
    composed = lv_compose(
        wwkl_machine(tree_f), wwkl_machine(tree_g), g_out_len=8,
        bridge=lambda _input, _g_out: tree_f,
    )
    est = lv_estimate_success(composed, tree_g, 10000, 42, 10**5, 8)
    assert abs(est.estimate - Fraction(3, 8)) <= Fraction(2, 100), est.estimate
    _report("criterion 9 (independent composition)", time.time() - start, 5)


def test_criterion_10_oracle_equivalences():
    start = time.time()
    words_pool = [
        "".join(bits) for n in (1, 2, 3) for bits in itertools.product("01", repeat=n)
    ]
    advices = []
    for bits in itertools.product((0, 1), repeat=6):
        advices.append(("".join(map(str, bits)), BitStream.from_bits(bits)))
    for mask in range(1 << len(words_pool)):
        excluded = [w for i, w in enumerate(words_pool) if mask >> i & 1]
        tree = tree_from_excluded(excluded)
        for advice_word, advice in advices:
            run = wwkl_path(tree, advice, fuel=6)
            failed = isinstance(run, PathFailed)
            assert failed == any(advice_word.startswith(u) for u in excluded)

    seen = set()
    for n in range(1000):
        for k in range(1000):
            m = cantor_pair(n, k)
            assert m not in seen
            seen.add(m)
            assert cantor_unpair(m) == (n, k)
    _report("criterion 10 (oracle equivalences)", time.time() - start, 10)
