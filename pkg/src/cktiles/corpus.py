"""Deterministic families of commuting matrix pairs for exercising the pipeline.

Generating arbitrary commuting {0,1} pairs is hard; these families are exact
and varied instead: circulant pairs (all circulants of one size commute),
(A, I) and (A, A) pairs for random essential A, identity pairs (which are
never transitive), and the single-vertex loop pairs with the exchange
specification.
"""

import random
from dataclasses import dataclass

from .textile import canonical_system, exchange_system


@dataclass(frozen=True)
class CorpusEntry:
    label: str
    matrix_a: tuple
    matrix_b: tuple
    system: object


def circulant_matrix(n, shifts):
    """The n x n {0,1} circulant with ones on the given cyclic shifts."""
    offsets = set(s % n for s in shifts)
    return [[1 if (j - i) % n in offsets else 0 for j in range(n)] for i in range(n)]


def _random_shifts(rng, n):
    count = rng.randint(1, n)
    return tuple(sorted(rng.sample(range(n), count)))


def random_essential_matrix(rng, n):
    """A random {0,1} matrix with no zero row or column."""
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][rng.randrange(n)] = 1
    for j in range(n):
        if not any(m[i][j] for i in range(n)):
            m[rng.randrange(n)][j] = 1
    for i in range(n):
        for j in range(n):
            if rng.random() < 0.25:
                m[i][j] = 1
    return m


def _freeze(matrix):
    return tuple(tuple(row) for row in matrix)


def standard_corpus(seed=1302, circulant_pairs=24, exchange_max=6):
    """The deterministic sweep of systems used by the test suite and CLI.

    Contains every exchange pair with 2 <= N <= M <= exchange_max, identity
    pairs of sizes 2 and 3, a handful of (A, I) and (A, A) pairs, and
    ``circulant_pairs`` random circulant pairs of sizes 2..5.
    """
    rng = random.Random(seed)
    entries = []
    for n in range(2, exchange_max + 1):
        for m in range(n, exchange_max + 1):
            entries.append(
                CorpusEntry(
                    label=f"exchange({n},{m})",
                    matrix_a=((n,),),
                    matrix_b=((m,),),
                    system=exchange_system(n, m),
                )
            )
    for n in (2, 3):
        identity = [[int(i == j) for j in range(n)] for i in range(n)]
        entries.append(
            CorpusEntry(
                label=f"identity({n})",
                matrix_a=_freeze(identity),
                matrix_b=_freeze(identity),
                system=canonical_system(identity, identity),
            )
        )
    for idx in range(4):
        n = rng.randint(2, 4)
        a = random_essential_matrix(rng, n)
        identity = [[int(i == j) for j in range(n)] for i in range(n)]
        entries.append(
            CorpusEntry(
                label=f"pair-with-identity[{idx}]",
                matrix_a=_freeze(a),
                matrix_b=_freeze(identity),
                system=canonical_system(a, identity),
            )
        )
    for idx in range(4):
        n = rng.randint(2, 4)
        a = random_essential_matrix(rng, n)
        entries.append(
            CorpusEntry(
                label=f"pair-with-self[{idx}]",
                matrix_a=_freeze(a),
                matrix_b=_freeze(a),
                system=canonical_system(a, a),
            )
        )
    for idx in range(circulant_pairs):
        n = rng.randint(2, 5)
        a = circulant_matrix(n, _random_shifts(rng, n))
        b = circulant_matrix(n, _random_shifts(rng, n))
        entries.append(
            CorpusEntry(
                label=f"circulant[{idx}]",
                matrix_a=_freeze(a),
                matrix_b=_freeze(b),
                system=canonical_system(a, b),
            )
        )
    return entries
