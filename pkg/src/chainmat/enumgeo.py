"""Counting formulas, projective-line constructions, and size bounds for
matroid representations over chain rings."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadTorsionIndexError,
    ClosureTooLargeError,
    NotChainRingError,
)
from .linalg import Mat
from .modindep import max_closure
from .rings import Ring


@dataclass(frozen=True)
class ModuleShape:
    """Multiplicities (k_0, ..., k_{nu-1}) of the invariant-factor summands:
    k_0 free copies of R, then k_i copies of R/<theta^(nu-i)>."""

    multiplicities: tuple

    def __post_init__(self):
        if any(k < 0 for k in self.multiplicities):
            raise ValueError("multiplicities must be nonnegative")

    def component_valuations(self) -> list:
        """One valuation per summand; summand of valuation t is the ideal
        <theta^t> inside R (isomorphic to R/<theta^(nu-t)>)."""
        out = []
        for t, k in enumerate(self.multiplicities):
            out.extend([t] * k)
        return out

    def ambient_size(self, ring: Ring) -> int:
        q, nu = ring.residue_field_size, ring.nilpotency_index
        size = 1
        for t, k in enumerate(self.multiplicities):
            size *= q ** ((nu - t) * k)
        return size


def _require_chain(ring: Ring):
    if not ring.is_chain:
        raise NotChainRingError(f"{ring.spec} is not a chain ring")


def torsion_subgroup_size(shape: ModuleShape, ring: Ring, s: int) -> int:
    """|U[theta^s]| = q^(sum_i k_i min(s, nu - i))."""
    _require_chain(ring)
    q, nu = ring.residue_field_size, ring.nilpotency_index
    if len(shape.multiplicities) > nu:
        raise BadTorsionIndexError("shape has more summand kinds than the nilpotency index")
    exp = sum(k * min(s, nu - t) for t, k in enumerate(shape.multiplicities))
    return q**exp


def count_cyclic_submodules(shape: ModuleShape, ring: Ring, s: int) -> int:
    """Number of cyclic submodules of the shaped module isomorphic to
    R/<theta^s>:  (|U[theta^s]| - |U[theta^(s-1)]|) / (q^(s-1) (q-1))."""
    _require_chain(ring)
    nu = ring.nilpotency_index
    if not 1 <= s <= nu:
        raise BadTorsionIndexError(f"s={s} outside 1..{nu}")
    q = ring.residue_field_size
    num = torsion_subgroup_size(shape, ring, s) - torsion_subgroup_size(shape, ring, s - 1)
    den = q ** (s - 1) * (q - 1)
    assert num % den == 0
    return num // den


def projective_line(ring: Ring) -> list:
    """Representatives {(1, r)} u {(l, 1) : l in m}, sorted lexicographically.

    Every pair is modular independent (unit 2x2 determinant) and every
    triple is dependent; the count is |R| + |m|.
    """
    _require_chain(ring)
    vecs = [(1, r) for r in range(ring.size)]
    vecs += [(l, 1) for l in sorted(ring.maximal_ideal)]
    return sorted(vecs)


def uniform_rank2_representation(ring: Ring, n: int) -> Mat | None:
    """A 2 x n matrix representing the rank-2 uniform matroid on n
    elements, or None when n exceeds |R| + |m| (then no representation
    exists at all)."""
    _require_chain(ring)
    if n < 1:
        raise ValueError("n must be positive")
    line = projective_line(ring)
    if n > len(line):
        return None
    cols = line[:n]
    labels = [str(i + 1) for i in range(n)]
    return Mat(ring, labels, [[v[0] for v in cols], [v[1] for v in cols]])


def simple_size_bound(ring: Ring, k: int) -> int:
    """Maximal ground-set size of a simple matroid with a free rank-k
    representation: the number of cyclic submodules of R^k generated by
    primitive vectors."""
    _require_chain(ring)
    if k < 1:
        raise ValueError("k must be positive")
    q, nu = ring.residue_field_size, ring.nilpotency_index
    return q ** ((nu - 1) * (k - 1)) * (q**k - 1) // (q - 1)


def cyclic_submodules(ring: Ring, k: int) -> list:
    """All cyclic submodules of R^k as frozensets of vectors."""
    from itertools import product

    if ring.size**k > max_closure():
        raise ClosureTooLargeError(f"{ring.size}^{k} ambient vectors exceed the guard")
    mul = ring.mul
    seen = set()
    for v in product(range(ring.size), repeat=k):
        orbit = frozenset(tuple(mul(c, a) for a in v) for c in range(ring.size))
        seen.add(orbit)
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def max_antichain(sets) -> int:
    """Width of a family of sets ordered by inclusion, by exhaustive
    branch and bound."""
    sets = list(sets)
    n = len(sets)
    comparable = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and (sets[i] <= sets[j] or sets[j] <= sets[i]):
                comparable[i] |= 1 << j

    best = 0

    def grow(idx: int, chosen: int, forbidden: int, size: int):
        nonlocal best
        if size + (n - idx) <= best:
            return
        if idx == n:
            best = max(best, size)
            return
        if not forbidden >> idx & 1:
            grow(idx + 1, chosen | (1 << idx), forbidden | comparable[idx], size + 1)
        grow(idx + 1, chosen, forbidden, size)

    grow(0, 0, 0, 0)
    return best


def cyc_antichain_bound(ring: Ring, k: int) -> int:
    """Width of the inclusion order on cyclic submodules of R^k; an upper
    bound on the ground-set size of any simple representation in R^k."""
    return max_antichain(cyclic_submodules(ring, k))
