"""Shared fixtures for the acceptance suite: state pools and word corpora."""

import random

import pytest

from tanglekit.lomonoid import count_monoid, prime_monoid
from tanglekit.states import random_state
from tanglekit.words import iter_closed_words, random_word

STATE_WIDTHS = (1, 3, 5, 7, 9)
STATES_PER_WIDTH = 200
MASTER_SEED = 20260810


@pytest.fixture(scope="session")
def monoids():
    return (count_monoid(), prime_monoid())


@pytest.fixture(scope="session")
def state_pools(monoids):
    """200 seeded random states per (monoid, width); shared by every
    relation/intertwining criterion so generation cost is paid once."""
    pools = {}
    for spec in monoids:
        for width in STATE_WIDTHS:
            rng = random.Random(f"{MASTER_SEED}/{spec.name}/{width}")
            pools[(spec.name, width)] = [
                random_state(width, rng, spec) for _ in range(STATES_PER_WIDTH)
            ]
    return pools


@pytest.fixture(scope="session")
def word_corpus():
    """Exhaustive closed symbol words of <= 8 symbols plus 1000 seeded
    random words of <= 30 symbols."""
    exhaustive = list(iter_closed_words(8))
    rng = random.Random(MASTER_SEED)
    randoms = [random_word(rng, 15) for _ in range(1000)]
    return exhaustive, randoms
