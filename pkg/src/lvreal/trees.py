"""Closed sets given by negative information.

A CoTree names a closed subset of Cantor space by the cylinders excluded from
it; membership of a word is derived, never stored.  Trees need not be pruned:
every measure statement below is about the depth-n upper bound mu_n, which is
exact for finite exclusion lists once n reaches the longest excluded word.

NegClosedUnit plays the same role for closed subsets of the unit interval:
an enumerated list of open rational intervals exhausting the complement.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .exact import Dyadic
from .streams import interleave_words


def _check_binary(word: str) -> str:
    if any(c not in "01" for c in word):
        raise ValueError(f"non-binary word {word!r}")
    return word


def normalize_antichain(words: Iterable[str]) -> tuple[str, ...]:
    """Reduce to a prefix-free antichain and merge complete sibling pairs.

    The result excludes exactly the same cylinders as the input.
    """
    kept = sorted({_check_binary(w) for w in words}, key=len)
    antichain: list[str] = []
    for w in kept:
        if not any(w.startswith(u) for u in antichain):
            antichain.append(w)
    # merge w0/w1 pairs into w until a fixed point
    merged = True
    while merged:
        merged = False
        pool = set(antichain)
        for w in list(pool):
            if w and w[-1] == "0" and w[:-1] + "1" in pool:
                pool.discard(w)
                pool.discard(w[:-1] + "1")
                pool.add(w[:-1])
                merged = True
                break
        antichain = sorted(pool, key=lambda u: (len(u), u))
    return tuple(antichain)


class CoTree:
    """Binary tree named by excluded cylinders.

    Finite trees carry the whole normalized antichain.  Lazily enumerated
    trees supply a level source depth -> iterable of excluded words of that
    exact length and are materialized up to the queried horizon; operations
    that need exactness (tree_measure_exact) demand a finite tree.
    """

    def __init__(
        self,
        excluded: Sequence[str] = (),
        level_source: Optional[Callable[[int], Iterable[str]]] = None,
    ):
        if level_source is None:
            self._antichain: Optional[tuple[str, ...]] = normalize_antichain(excluded)
            self._levels: dict[int, tuple[str, ...]] = {}
            for w in self._antichain:
                self._levels.setdefault(len(w), ())
                self._levels[len(w)] += (w,)
            self._source = None
            self._horizon = None  # all levels beyond max are empty
        else:
            if excluded:
                raise ValueError("give either a finite list or a level source")
            self._antichain = None
            self._levels = {}
            self._source = level_source
            self._horizon = -1

    # -- enumeration ------------------------------------------------------

    @property
    def finite(self) -> bool:
        return self._antichain is not None

    def enumerate_to(self, depth: int) -> None:
        """Materialize lazy levels up to `depth` (the enumerated-so-far horizon)."""
        if self._source is None:
            return
        while self._horizon < depth:
            d = self._horizon + 1
            words = []
            for w in self._source(d):
                _check_binary(w)
                if len(w) != d:
                    raise ValueError(f"level {d} produced word of length {len(w)}")
                if not self._prefix_excluded(w, upto=d - 1):
                    words.append(w)
            self._levels[d] = tuple(sorted(set(words)))
            self._horizon = d

    def _prefix_excluded(self, word: str, upto: int) -> bool:
        for d in range(min(upto, len(word)) + 1):
            level = self._levels.get(d, ())
            if word[:d] in level:
                return True
        return False

    def antichain(self) -> tuple[str, ...]:
        if self._antichain is None:
            raise ValueError("lazy tree has no finite antichain")
        return self._antichain

    def member(self, word: str) -> bool:
        """True iff no excluded word is a prefix of `word`."""
        _check_binary(word)
        self.enumerate_to(len(word))
        return not self._prefix_excluded(word, upto=len(word))

    # -- measures ---------------------------------------------------------

    def measure_upper(self, n: int) -> Dyadic:
        """mu_n = (surviving words at depth n) * 2^-n, exactly.

        Excluded cylinders are pairwise disjoint after normalization, so the
        count is 2^n minus the sum of 2^(n-|u|) over excluded u with |u| <= n.
        """
        if n < 0:
            raise ValueError("depth must be a natural")
        self.enumerate_to(n)
        removed = 0
        for d in range(n + 1):
            removed += len(self._levels.get(d, ())) << (n - d)
        return Dyadic((1 << n) - removed, n)

    def measure_exact(self) -> Fraction:
        """mu([T]) = 1 - sum 2^-|u| over the antichain; finite trees only."""
        total = Fraction(1)
        for u in self.antichain():
            total -= Fraction(1, 1 << len(u))
        return total

    def subtree(self, word: str) -> "CoTree":
        """The tree of suffixes below `word` (finite trees only)."""
        _check_binary(word)
        rest = []
        for u in self.antichain():
            if word.startswith(u):
                return CoTree([""])  # the whole subtree is excluded
            if u.startswith(word):
                rest.append(u[len(word):])
        return CoTree(rest)

    def to_json_dict(self) -> dict:
        return {"excluded": list(self.antichain())}

    def __repr__(self) -> str:
        if self.finite:
            return f"CoTree(excluded={list(self._antichain)!r})"
        return f"CoTree(lazy, horizon={self._horizon})"


def tree_from_excluded(words: Iterable[str]) -> CoTree:
    """Constructor from a possibly redundant list of excluded words."""
    return CoTree(list(words))


def tree_from_json_dict(data: dict) -> CoTree:
    return tree_from_excluded(data["excluded"])


def tree_measure_upper(tree: CoTree, n: int) -> Dyadic:
    return tree.measure_upper(n)


def tree_measure_exact(tree: CoTree) -> Fraction:
    return tree.measure_exact()


def product_amplify(a: CoTree, b: CoTree) -> CoTree:
    """Co-tree of (A x 2^N) u (2^N x B) under bit interleaving.

    A pair fails iff both components fail, so the excluded cylinders are the
    interleavings of each excluded pair (u, v), padded to a common length.
    The measure law mu(C) = 1 - (1 - mu(A)) (1 - mu(B)) is exact.
    """
    excluded: list[str] = []
    for u in a.antichain():
        for v in b.antichain():
            length = max(len(u), len(v))
            for u_ext in _extensions(u, length):
                for v_ext in _extensions(v, length):
                    excluded.append(interleave_words(u_ext, v_ext))
    return CoTree(excluded)


def _extensions(word: str, length: int) -> list[str]:
    pad = length - len(word)
    if pad == 0:
        return [word]
    return [word + format(i, f"0{pad}b") for i in range(1 << pad)]


class NegClosedUnit:
    """Closed subset of [0,1] named by enumerating open rational intervals.

    The enumeration order is part of the name; position j holds either None
    (no information yet) or an open interval (lo, hi).  Endpoints may stick
    out of [0,1] so that relatively open pieces like [0, s) are expressible;
    the denoted set is [0,1] minus the union of the enumerated intervals.
    """

    def __init__(self, items: Callable[[int], Optional[tuple[Fraction, Fraction]]],
                 known_value: Optional[Fraction] = None):
        self._items = items
        self.known_value = known_value  # exact point for singleton names

    def item(self, j: int) -> Optional[tuple[Fraction, Fraction]]:
        it = self._items(j)
        if it is not None:
            lo, hi = it
            if lo >= hi:
                raise ValueError("complement interval needs lo < hi")
        return it

    @staticmethod
    def from_intervals(intervals: Sequence[tuple[Fraction, Fraction]]) -> "NegClosedUnit":
        seq = [(Fraction(lo), Fraction(hi)) for lo, hi in intervals]
        return NegClosedUnit(lambda j: seq[j] if j < len(seq) else None)

    @staticmethod
    def full() -> "NegClosedUnit":
        """Name of [0,1] itself: the silent enumeration."""
        return NegClosedUnit(lambda j: None)

    @staticmethod
    def singleton(x: Fraction, first_info_at: int) -> "NegClosedUnit":
        """Name of {x} whose first negative information appears at the given position.

        From that position on, alternating covers shrink the uncovered region
        to [x - 2^-s, x + 2^-s] after 2s further items.
        """
        x = Fraction(x)
        if not 0 <= x <= 1:
            raise ValueError("singleton point outside [0,1]")
        n = first_info_at

        def items(j: int):
            if j < n:
                return None
            t = j - n
            radius = Fraction(1, 1 << (t // 2 + 1))
            if t % 2 == 0:
                return (x + radius, Fraction(2))
            return (Fraction(-1), x - radius)

        return NegClosedUnit(items, known_value=x)

    def member(self, x: Fraction, items_enumerated: int) -> bool:
        """x survives the first `items_enumerated` intervals (and lies in [0,1])."""
        if not 0 <= x <= 1:
            return False
        for j in range(items_enumerated):
            it = self.item(j)
            if it is not None and it[0] < x < it[1]:
                return False
        return True
