import random

import pytest

from lvreal import tree_from_excluded, tree_measure_exact


def random_tree(rng: random.Random, max_words: int = 5, max_len: int = 6,
                require_positive: bool = False):
    """Random finite-exclusion tree; optionally resample until mu > 0."""
    while True:
        words = set()
        for _ in range(rng.randint(1, max_words)):
            length = rng.randint(1, max_len)
            words.add("".join(rng.choice("01") for _ in range(length)))
        tree = tree_from_excluded(words)
        if not require_positive or tree_measure_exact(tree) > 0:
            return tree


@pytest.fixture
def rng():
    return random.Random(20240810)
