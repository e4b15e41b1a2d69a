import itertools
from fractions import Fraction

import pytest

from lvreal import (
    SvcTable,
    baire_to_cantor_prefix,
    signum_preimage_measure,
    svc_embed_prefix,
    svc_interval,
    svc_remaining_length,
)


def test_root_interval():
    for eps in (Fraction(0), Fraction(1, 4), Fraction(1, 2)):
        assert svc_interval("", eps) == (0, 1)


def test_half_epsilon_first_level():
    assert svc_interval("0", Fraction(1, 2)) == (0, Fraction(3, 8))
    assert svc_interval("1", Fraction(1, 2)) == (Fraction(5, 8), 1)


def test_epsilon_validation():
    with pytest.raises(ValueError):
        svc_interval("0", Fraction(3, 2))
    with pytest.raises(ValueError):
        svc_interval("0", Fraction(1, 3))  # non-dyadic


def test_remaining_length_closed_form():
    assert svc_remaining_length(Fraction(1, 2), 0) == 1
    assert svc_remaining_length(Fraction(1, 2), 10) == Fraction(1, 2) + Fraction(1, 2**11)
    assert svc_remaining_length(Fraction(0), 20) == Fraction(1, 2**20)


def test_remaining_length_matches_interval_sum():
    for eps in (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
        table = SvcTable(eps)
        for n in range(9):
            total = sum(
                (lambda iv: iv[1] - iv[0])(table.interval("".join(w)))
                for w in itertools.product("01", repeat=n)
            )
            assert total == table.remaining_length(n)


def test_sibling_intervals_disjoint_with_exact_gap(rng):
    for eps in (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
        table = SvcTable(eps)
        words = ["".join(rng.choice("01") for _ in range(L)) for L in range(11) for _ in range(4)]
        for w in words:
            a0, b0 = table.interval(w + "0")
            a1, b1 = table.interval(w + "1")
            parent = table.interval(w)
            assert parent[0] == a0 and parent[1] == b1
            assert b0 < a1
            assert a1 - b0 == table.delta / (1 << (2 * len(w) + 1))


def test_nested_and_shrinking():
    table = SvcTable(Fraction(1, 2))
    a, b = table.interval("0110")
    inner = table.interval("01101")
    assert a <= inner[0] < inner[1] <= b
    assert inner[1] - inner[0] <= Fraction(1, 2**5)


def test_embed_prefix_examples():
    assert svc_embed_prefix("", Fraction(1, 4)) == (0, 1)
    assert svc_embed_prefix("0", Fraction(1, 2)) == (0, Fraction(3, 8))


def test_subtree_remaining_length_is_half_the_global_one():
    # symmetry: the depth-(k+1) total splits equally between the two subtrees
    table = SvcTable(Fraction(1, 2))
    total = table.subtree_remaining_length("0", 8)
    assert total == table.remaining_length(9) / 2
    assert total == Fraction(1, 4) + Fraction(1, 2**11)


def test_baire_to_cantor_examples():
    assert baire_to_cantor_prefix((2,)) == "110"
    assert baire_to_cantor_prefix(()) == ""
    assert baire_to_cantor_prefix((0, 1)) == "010"
    # cylinder measure law: 2^-len(image) equals the geometric product measure
    for word in ((2,), (0, 1), (3, 0, 2)):
        image = baire_to_cantor_prefix(word)
        geometric = Fraction(1)
        for v in word:
            geometric *= Fraction(1, 2 ** (v + 1))
        assert Fraction(1, 2 ** len(image)) == geometric


def test_baire_to_cantor_prefix_monotone_and_injective():
    words = [
        tuple(w)
        for length in range(6)
        for w in itertools.product(range(5), repeat=length)
    ]
    images = {}
    for w in words:
        image = baire_to_cantor_prefix(w)
        assert image not in images
        images[image] = w
        for cut in range(len(w)):
            assert image.startswith(baire_to_cantor_prefix(w[:cut]))


def test_signum_preimage_measure_examples():
    lo, hi = signum_preimage_measure("1", 20)
    assert lo.to_fraction() <= Fraction(1, 2) <= hi.to_fraction()
    assert (hi - lo).to_fraction() <= Fraction(1, 2**20)
    lo, hi = signum_preimage_measure("", 5)
    assert lo.to_fraction() == hi.to_fraction() == 1
    lo, hi = signum_preimage_measure("10", 20)
    assert lo.to_fraction() <= Fraction(1, 4) <= hi.to_fraction()
    assert (hi - lo).to_fraction() <= Fraction(1, 2**19)


def test_signum_bounds_converge():
    previous_gap = None
    for depth in (4, 8, 16, 32):
        lo, hi = signum_preimage_measure("101", depth)
        gap = (hi - lo).to_fraction()
        assert lo.to_fraction() <= Fraction(1, 8) <= hi.to_fraction()
        assert gap <= 3 * Fraction(1, 2**depth)
        if previous_gap is not None:
            assert gap < previous_gap
        previous_gap = gap
