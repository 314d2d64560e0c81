import pytest

from cktiles.corpus import standard_corpus

CORPUS_SEED = 1302


@pytest.fixture(scope="session")
def corpus():
    """Every test shares one deterministic corpus of built systems."""
    return standard_corpus(seed=CORPUS_SEED, circulant_pairs=24)


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Corpus systems small enough for exhaustive pairwise searches."""
    return [entry for entry in corpus if len(entry.system.omega) <= 12]
