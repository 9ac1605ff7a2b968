"""Shared generators for the randomized suites (seeded, deterministic)."""

import random

from chainmat.codes import Code
from chainmat.linalg import Mat

CHAIN_SPECS = ("z:4", "z:8", "z:9", "fpu:2,2")
TABLE_SPECS = ("table:f2xy_xx_xy_yy", "table:f2xy_xx_yy")


def rng_for(name: str) -> random.Random:
    return random.Random(f"chainmat::{name}")


def random_matrix(rng, ring, k, n, labels=None) -> Mat:
    labels = labels or [str(i + 1) for i in range(n)]
    rows = [[rng.randrange(ring.size) for _ in range(n)] for _ in range(k)]
    return Mat(ring, labels, rows)


def random_code(rng, ring, k, n) -> Code:
    return Code.from_matrix(random_matrix(rng, ring, k, n))


def random_free_code(rng, ring, k, n) -> Code:
    """Random [I_k | A] with shuffled columns: free of rank k by design."""
    assert k <= n
    rows = []
    for i in range(k):
        row = [1 if j == i else 0 for j in range(k)]
        row += [rng.randrange(ring.size) for _ in range(n - k)]
        rows.append(row)
    order = list(range(n))
    rng.shuffle(order)
    labels = [str(j + 1) for j in range(n)]
    return Code.from_matrix(Mat(ring, labels, [[row[j] for j in order] for row in rows]))


def random_submodule_generators(rng, ring, k, count):
    return [tuple(rng.randrange(ring.size) for _ in range(k)) for _ in range(count)]
