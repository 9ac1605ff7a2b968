"""Naive reference implementations used for differential testing.

Everything here recomputes from definitions with plain set enumeration and
shares nothing with the fast paths beyond ring arithmetic.  Slow on
purpose; sized for desk-scale inputs.
"""

from __future__ import annotations

from itertools import combinations, product

import os

from .errors import (
    ClosureTooLargeError,
    GroundSetTooLargeError,
    NonIntegralDimensionError,
    SearchSpaceTooLargeError,
)
from .linalg import Mat
from .modindep import max_closure
from .rings import Ring

DEFAULT_MAX_SCAN = 1 << 26


def _max_scan() -> int:
    value = os.environ.get("CHAINMAT_MAX_CLOSURE")
    return int(value) if value else DEFAULT_MAX_SCAN


def _naive_span(ring: Ring, vectors, k: int) -> frozenset:
    """Fixed-point closure of {0} u generators under + and scalars."""
    add, mul = ring.add, ring.mul
    zero = (0,) * k
    gens = set()
    for v in vectors:
        for c in range(ring.size):
            gens.add(tuple(mul(c, a) for a in v))
    current = {zero} | gens
    frontier = list(current)
    limit = max_closure()
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple(add(a, b) for a, b in zip(v, g))
                if w not in current:
                    current.add(w)
                    nxt.append(w)
        if len(current) > limit:
            raise ClosureTooLargeError(f"naive span exceeded {limit} vectors")
        frontier = nxt
    return frozenset(current)


def mu_by_enumeration(ring: Ring, vectors) -> int:
    """log_q(|span| / |m*span|), the minimal number of generators."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return 0
    k = len(vectors[0])
    big = _naive_span(ring, vectors, k)
    products = set()
    mul = ring.mul
    for a in ring.maximal_ideal:
        for v in big:
            products.add(tuple(mul(a, x) for x in v))
    small = _naive_span(ring, products, k)
    q = ring.residue_field_size
    ratio, d = len(big) // len(small), 0
    if len(big) % len(small):
        raise NonIntegralDimensionError(f"|V|={len(big)} not divisible by |mV|={len(small)}")
    while ratio > 1:
        if ratio % q:
            raise NonIntegralDimensionError(f"|V|/|mV|={len(big)//len(small)} is not a power of {q}")
        ratio //= q
        d += 1
    return d


def _naive_independent(ring: Ring, vectors) -> bool:
    """Definition-level test: for small coefficient spaces, scan every
    linear combination; otherwise compare the naive generator count."""
    vectors = [tuple(v) for v in vectors]
    l = len(vectors)
    if l == 0:
        return True
    if ring.size**l <= 4096:
        add, mul = ring.add, ring.mul
        k = len(vectors[0])
        zero = (0,) * k
        for coeffs in product(range(ring.size), repeat=l):
            acc = zero
            for c, v in zip(coeffs, vectors):
                acc = tuple(add(a, mul(c, b)) for a, b in zip(acc, v))
            if acc == zero and any(c in ring.units for c in coeffs):
                return False
        return True
    return mu_by_enumeration(ring, vectors) == l


def dual_by_enumeration(code) -> "object":
    """Exact dual code by scanning all of R^E against the generators."""
    from .codes import Code

    ring = code.ring
    n = len(code.labels)
    limit = _max_scan()
    if ring.size**n > limit:
        raise SearchSpaceTooLargeError(f"{ring.size}^{n} exceeds scan guard {limit}")
    add, mul = ring.add, ring.mul
    gens = [tuple(r) for r in code.generator.rows]
    kernel = []
    for x in product(range(ring.size), repeat=n):
        ok = True
        for g in gens:
            s = 0
            for a, b in zip(x, g):
                if a and b:
                    s = add(s, mul(a, b))
            if s != 0:
                ok = False
                break
        if ok:
            kernel.append(x)
    return Code.from_codeword_set(ring, code.labels, kernel)


def circuits_by_subset_scan(a: Mat):
    """Minimal modular-dependent column sets, straight from the definition."""
    from .indepsys import Clutter

    n = a.ncols
    if n > 16:
        raise GroundSetTooLargeError(f"{n} columns exceeds the subset-scan cap")
    cols = a.columns()
    ring = a.ring
    minimal = []
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            cset = set(combo)
            if any(d <= cset for d in minimal):
                continue
            if not _naive_independent(ring, [cols[i] for i in combo]):
                minimal.append(frozenset(combo))
    members = [frozenset(a.labels[i] for i in d) for d in minimal]
    return Clutter(a.labels, members)


def cyclic_submodule_census(ring: Ring, component_valuations) -> dict:
    """Brute-force count of cyclic submodules by torsion exponent.

    ``component_valuations`` lists one valuation t per summand; summand t
    is realised as the ideal <uniformizer^t> inside R.  Returns a dict
    s -> number of cyclic submodules of size q^s (s >= 1).
    """
    nu = ring.nilpotency_index
    comps = [sorted(ring.ideal_of_valuation(t)) for t in component_valuations]
    total = 1
    for c in comps:
        total *= len(c)
    if total > max_closure():
        raise ClosureTooLargeError(f"ambient module of size {total} exceeds the guard")
    ordv, upart = ring.valuation, ring.unit_part
    # Each cyclic submodule has exactly one generator whose first
    # minimal-valuation coordinate is a pure uniformizer power (unit
    # multiples sweep out the other generators), so counting those
    # canonical vectors counts the submodules.
    counts = {}
    for vec in product(*comps):
        min_ord = nu
        first = -1
        for i, a in enumerate(vec):
            if a:
                o = ordv(a)
                if o < min_ord:
                    min_ord, first = o, i
        if first < 0:
            continue
        if upart(vec[first]) == 1:
            s = nu - min_ord
            counts[s] = counts.get(s, 0) + 1
    return counts


def cyclic_submodule_census_by_sets(ring: Ring, component_valuations) -> dict:
    """Same census via explicit orbit sets (fully naive; small ambients)."""
    comps = [sorted(ring.ideal_of_valuation(t)) for t in component_valuations]
    total = 1
    for c in comps:
        total *= len(c)
    if total > 1 << 14:
        raise ClosureTooLargeError(f"ambient module of size {total} too large for set census")
    mul = ring.mul
    q = ring.residue_field_size
    modules = set()
    for vec in product(*comps):
        orbit = frozenset(tuple(mul(c, a) for a in vec) for c in range(ring.size))
        modules.add(orbit)
    counts = {}
    for mod in modules:
        size = len(mod)
        if size == 1:
            continue
        s, m = 0, size
        while m > 1:
            m //= q
            s += 1
        counts[s] = counts.get(s, 0) + 1
    return counts
