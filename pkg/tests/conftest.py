import random

import pytest

from graphcodes import is_self_dual

import helpers


@pytest.fixture(scope="session")
def family_corpus():
    return helpers.named_family_corpus()


@pytest.fixture(scope="session")
def random_graphs():
    return helpers.random_corpus()


@pytest.fixture(scope="session")
def full_corpus(family_corpus, random_graphs):
    return family_corpus + random_graphs


@pytest.fixture(scope="session")
def self_dual_graphs(full_corpus):
    return [(label, g) for label, g in full_corpus if is_self_dual(g)]


@pytest.fixture(scope="session")
def join_pairs(self_dual_graphs):
    """50 seeded pairs of self-dual corpus graphs, join order <= 24 vertices."""
    pool = [(label, g) for label, g in self_dual_graphs if g.n <= 12]
    rng = random.Random(helpers.SEED_JOIN_PAIRS)
    pairs = []
    while len(pairs) < 50:
        (l1, g1), (l2, g2) = rng.choice(pool), rng.choice(pool)
        if g1.n + g2.n <= 24:
            pairs.append(((l1, g1), (l2, g2)))
    return pairs
