"""Modular independence and minimal-generator counts for submodules of R^k.

A family of vectors is modular independent when every vanishing linear
combination has all coefficients in the maximal ideal; equivalently the
span needs as many generators as there are vectors.  Over chain rings the
generator count is read off the Smith normal form; everywhere else it
falls back to exact submodule enumeration (|V| / |mV| as a power of the
residue field size).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import (
    ClosureTooLargeError,
    NonIntegralDimensionError,
    TooManyColumnsError,
)
from .linalg import Mat, det_rows, snf_exponents
from .rings import Ring

DEFAULT_MAX_CLOSURE = 1 << 24


def max_closure() -> int:
    """Submodule enumeration guard; CHAINMAT_MAX_CLOSURE overrides it."""
    value = os.environ.get("CHAINMAT_MAX_CLOSURE")
    return int(value) if value else DEFAULT_MAX_CLOSURE


def _vec_add(ring: Ring, u, v):
    add = ring.add
    return tuple(add(a, b) for a, b in zip(u, v))


def _vec_scale(ring: Ring, c, v):
    mul = ring.mul
    return tuple(mul(c, a) for a in v)


@dataclass(frozen=True)
class Submodule:
    """An explicit finite submodule of R^k: the full vector set plus the
    generators it was built from."""

    ring: Ring
    ambient_power: int
    vectors: frozenset
    generators: tuple = field(default=())

    def __len__(self):
        return len(self.vectors)

    def __contains__(self, v):
        return tuple(v) in self.vectors

    def __le__(self, other):
        return self.vectors <= other.vectors

    def __eq__(self, other):
        return isinstance(other, Submodule) and self.vectors == other.vectors

    def __hash__(self):
        return hash(self.vectors)


def span(ring: Ring, vectors, ambient_power=None) -> Submodule:
    """Smallest submodule of R^k containing the given vectors."""
    vectors = [tuple(v) for v in vectors]
    if ambient_power is None:
        if not vectors:
            raise ValueError("ambient power required for an empty generator list")
        ambient_power = len(vectors[0])
    k = ambient_power
    zero = (0,) * k
    current = {zero}
    limit = max_closure()
    add = ring.add
    for g in vectors:
        orbit = {_vec_scale(ring, c, g) for c in range(ring.size)}
        new = set()
        for base in current:
            for w in orbit:
                new.add(tuple(add(a, b) for a, b in zip(base, w)))
        current = new
        if len(current) > limit:
            raise ClosureTooLargeError(f"span exceeded {limit} vectors")
    return Submodule(ring, k, frozenset(current), tuple(vectors))


def ideal_multiple(sub: Submodule) -> Submodule:
    """The submodule m*V for V = sub (products with the maximal ideal,
    closed under addition via the ideal generators of m)."""
    ring = sub.ring
    k = sub.ambient_power
    zero = (0,) * k
    current = {zero}
    add = ring.add
    for g in ring.max_ideal_generators:
        layer = {_vec_scale(ring, g, v) for v in sub.vectors}
        current = {tuple(add(a, b) for a, b in zip(base, w)) for base in current for w in layer}
    return Submodule(ring, k, frozenset(current))


def sum_submodules(a: Submodule, b: Submodule) -> Submodule:
    ring = a.ring
    add = ring.add
    vecs = frozenset(
        tuple(add(x, y) for x, y in zip(u, v)) for u in a.vectors for v in b.vectors
    )
    return Submodule(ring, a.ambient_power, vecs, a.generators + b.generators)


def intersect_submodules(a: Submodule, b: Submodule) -> Submodule:
    return Submodule(a.ring, a.ambient_power, a.vectors & b.vectors)


def _log_residue(ring: Ring, ratio: int) -> int:
    q = ring.residue_field_size
    d = 0
    while ratio > 1:
        if ratio % q:
            raise NonIntegralDimensionError(
                f"quotient size {ratio} is not a power of q={q} over {ring.spec}"
            )
        ratio //= q
        d += 1
    return d


def generator_count_of_submodule(sub: Submodule) -> int:
    """dim over the residue field of V / mV, i.e. the minimal number of
    generators, computed from cardinalities."""
    msub = ideal_multiple(sub)
    return _log_residue(sub.ring, len(sub) // len(msub))


def minimal_generator_count(ring: Ring, vectors, method: str = "auto") -> int:
    """Minimal number of generators of the span of ``vectors``.

    ``method`` forces a code path: "snf" (chain rings only), "enum", or
    "auto" (SNF when the ring is a chain ring).
    """
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return 0
    if method == "auto":
        method = "snf" if ring.is_chain else "enum"
    if method == "snf":
        return len(snf_exponents(ring, vectors))
    if method == "enum":
        return generator_count_of_submodule(span(ring, vectors))
    raise ValueError(f"unknown method {method!r}")


def is_modular_independent(ring: Ring, vectors, method: str = "auto") -> bool:
    """True when every vanishing combination has all coefficients in m."""
    vectors = list(vectors)
    return minimal_generator_count(ring, vectors, method) == len(vectors)


def has_trivial_annihilator(ring: Ring, vector) -> bool:
    """Membership in psi(V): over a finite ring, exactly the vectors with
    some unit coordinate."""
    units = ring.units
    return any(a in units for a in vector)


def has_nonzero_maximal_minor(m: Mat) -> bool:
    """Sufficient test for modular independence of the columns: some
    l x l minor (l = ncols) is nonzero.  The converse fails."""
    k, l = m.nrows, m.ncols
    if l > k:
        raise TooManyColumnsError(f"{l} columns but only {k} rows")
    from itertools import combinations

    for rowsel in combinations(range(k), l):
        rows = [[m.rows[i][j] for j in range(l)] for i in rowsel]
        if det_rows(m.ring, rows) != 0:
            return True
    return False


def submodularity_gap(ring: Ring, col_vectors, x_idx, y_idx):
    """Data for the chain-ring submodularity criterion on index sets X, Y.

    Returns (lhs, rhs) where the rank function of the induced independence
    system is submodular at (X, Y) iff lhs <= rhs:
    lhs = generators of V_{X&Y}, rhs = dim (V_X n V_Y)/(mV_X n mV_Y).
    """
    vx = span(ring, [col_vectors[i] for i in x_idx], len(col_vectors[0]))
    vy = span(ring, [col_vectors[i] for i in y_idx], len(col_vectors[0]))
    vxy = span(ring, [col_vectors[i] for i in set(x_idx) & set(y_idx)], len(col_vectors[0]))
    inter = vx.vectors & vy.vectors
    minter = ideal_multiple(vx).vectors & ideal_multiple(vy).vectors
    lhs = generator_count_of_submodule(vxy)
    rhs = _log_residue(ring, len(inter) // len(minter))
    return lhs, rhs
