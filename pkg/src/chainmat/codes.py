"""Linear codes over finite local rings and their independence systems.

A code carries its full codeword set (desk scale), a generator matrix
whose rows are a minimal generating set, and a cached systematic form
when the code is free.  Duals come from the systematic parity-check
construction for free codes and from exact kernel enumeration otherwise.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations, product

from .errors import (
    ClosureTooLargeError,
    NotChainRingError,
    NotContractibleError,
    SearchSpaceTooLargeError,
    UnknownLabelError,
    ZeroProjectionError,
)
from .indepsys import IndependenceSystem, build_from_matrix
from .linalg import Mat, SystematicForm, systematic_form
from .modindep import Submodule, ideal_multiple, max_closure, span
from .rings import Ring

DEFAULT_MAX_SCAN = 1 << 26


def max_scan() -> int:
    value = os.environ.get("CHAINMAT_MAX_CLOSURE")
    return int(value) if value else DEFAULT_MAX_SCAN


def _minimal_generators(ring: Ring, vectors, k: int, whole: Submodule | None = None) -> list:
    """Greedy minimal generating subset: keep a vector when it falls
    outside span(kept) + m*span(all); Nakayama does the rest."""
    if whole is None:
        whole = span(ring, vectors, k)
    msub = ideal_multiple(whole)
    add = ring.add
    acc = set(msub.vectors)
    kept = []
    for v in vectors:
        v = tuple(v)
        if v in acc:
            continue
        kept.append(v)
        orbit = {tuple(ring.mul(c, a) for a in v) for c in range(ring.size)}
        acc = {tuple(add(x, y) for x, y in zip(base, w)) for base in acc for w in orbit}
    return kept


class Code:
    """An R-submodule of R^E with labelled coordinates."""

    def __init__(self, ring: Ring, labels, codewords, generator: Mat):
        self.ring = ring
        self.labels = tuple(str(l) for l in labels)
        self.codewords = frozenset(tuple(c) for c in codewords)
        self.generator = generator
        self._systematic = None
        self._systematic_known = False

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_matrix(g: Mat) -> "Code":
        ring = g.ring
        rows = [tuple(r) for r in g.rows]
        sub = span(ring, rows, g.ncols)
        if len(sub) > max_closure():
            raise ClosureTooLargeError("codeword set exceeds the closure guard")
        gens = _minimal_generators(ring, rows, g.ncols, whole=sub)
        gen = Mat(ring, g.labels, gens if gens else [(0,) * g.ncols])
        return Code(ring, g.labels, sub.vectors, gen)

    @staticmethod
    def from_codeword_set(ring: Ring, labels, codewords) -> "Code":
        """Build from an addition/scalar-closed set of words (a submodule);
        generators are chosen greedily from the sorted word list."""
        words = sorted({tuple(c) for c in codewords})
        n = len(tuple(labels))
        whole = Submodule(ring, n, frozenset(words))
        gens = _minimal_generators(ring, words, n, whole=whole)
        gen = Mat(ring, labels, gens if gens else [(0,) * n])
        return Code(ring, labels, words, gen)

    # -- basic data -----------------------------------------------------------

    @property
    def length(self) -> int:
        return len(self.labels)

    @property
    def generator_count(self) -> int:
        """mu_R(C): rows of the reduced generator matrix (0 for the zero code)."""
        rows = [r for r in self.generator.rows if any(r)]
        return len(rows)

    def systematic(self) -> SystematicForm | None:
        if not self._systematic_known:
            rows = [r for r in self.generator.rows if any(r)]
            if rows:
                self._systematic = systematic_form(Mat(self.ring, self.labels, rows))
            else:
                self._systematic = None
            self._systematic_known = True
        return self._systematic

    @property
    def is_free(self) -> bool:
        mu = self.generator_count
        if mu == 0:
            return True  # the zero module is free of rank 0
        if self.ring.is_chain:
            return self.systematic() is not None
        # over any finite local ring: free of rank mu iff the canonical
        # surjection from R^mu is injective
        return len(self.codewords) == self.ring.size**mu

    def matroid(self) -> IndependenceSystem:
        return build_from_matrix(self.generator)

    def coordinate_ideal(self, label) -> frozenset:
        """The ideal {c_e : c in C} of projections onto one coordinate."""
        j = self.labels.index(str(label))
        return frozenset(c[j] for c in self.codewords)

    def __eq__(self, other):
        return (
            isinstance(other, Code)
            and self.ring == other.ring
            and self.labels == other.labels
            and self.codewords == other.codewords
        )

    def __hash__(self):
        return hash((self.ring, self.labels, self.codewords))

    def __repr__(self):
        return f"Code({self.ring.spec}, n={self.length}, |C|={len(self.codewords)}, mu={self.generator_count})"


def code_from_matrix(g: Mat) -> Code:
    return Code.from_matrix(g)


def matroid_of_code(c: Code) -> IndependenceSystem:
    return c.matroid()


# -- duality -----------------------------------------------------------------


def dual_code(c: Code) -> Code:
    """The dual code: systematic parity-check route when free, exact
    kernel enumeration otherwise."""
    ring = c.ring
    n = c.length
    if c.generator_count == 0:
        if ring.size**n > max_scan():
            raise SearchSpaceTooLargeError(f"{ring.size}^{n} exceeds the scan guard")
        full = [v for v in product(range(ring.size), repeat=n)]
        return Code.from_codeword_set(ring, c.labels, full)
    sf = c.systematic() if ring.is_chain else None
    if sf is not None:
        return _dual_from_systematic(c, sf)
    if ring.size**n > max_scan():
        raise SearchSpaceTooLargeError(
            f"{ring.size}^{n} exceeds the kernel scan guard; code is not free"
        )
    add, mul = ring.add, ring.mul
    gens = [tuple(r) for r in c.generator.rows]
    kernel = []
    for x in product(range(ring.size), repeat=n):
        for g in gens:
            s = 0
            for a, b in zip(x, g):
                if a and b:
                    s = add(s, mul(a, b))
            if s:
                break
        else:
            kernel.append(x)
    return Code.from_codeword_set(ring, c.labels, kernel)


def _dual_from_systematic(c: Code, sf: SystematicForm) -> Code:
    ring = c.ring
    k = sf.mat.nrows
    n = c.length
    # parity-check [-A^T | I] in the permuted coordinates, then undo the
    # permutation
    a_block = [row[k:] for row in sf.mat.rows]
    neg = ring.neg
    rows_perm = []
    for i in range(n - k):
        row = [neg(a_block[j][i]) for j in range(k)]
        row += [1 if t == i else 0 for t in range(n - k)]
        rows_perm.append(row)
    pos = {label: idx for idx, label in enumerate(sf.perm)}
    order = [pos[l] for l in c.labels]
    rows = [[row[j] for j in order] for row in rows_perm]
    h = Mat(ring, c.labels, rows)
    return Code.from_matrix(h)


# -- puncturing and shortening ---------------------------------------------------


def _split_labels(c: Code, x):
    xs = frozenset(str(l) for l in x)
    for l in xs:
        if l not in c.labels:
            raise UnknownLabelError(f"unknown coordinate {l!r}")
    keep = [l for l in c.labels if l not in xs]
    keep_idx = [c.labels.index(l) for l in keep]
    return xs, keep, keep_idx


def puncture(c: Code, x) -> Code:
    """Delete the coordinates in x from every codeword."""
    xs, keep, keep_idx = _split_labels(c, x)
    rows = [[row[j] for j in keep_idx] for row in c.generator.rows]
    return Code.from_matrix(Mat(c.ring, keep, rows if rows else [[]]))


def shorten(c: Code, x) -> Code:
    """Keep only codewords vanishing on x, then delete those coordinates."""
    xs, keep, keep_idx = _split_labels(c, x)
    x_idx = [c.labels.index(l) for l in sorted(xs)]
    words = [tuple(w[j] for j in keep_idx) for w in c.codewords if all(w[j] == 0 for j in x_idx)]
    return Code.from_codeword_set(c.ring, keep, words)


# -- contraction ------------------------------------------------------------------


@dataclass(frozen=True)
class ContractionWitness:
    """Codeword certifying contractibility at one coordinate: its entry
    there is a unit multiple of the projection generator and every entry
    lies in the projection ideal."""

    label: str
    codeword: tuple
    valuation: int


def is_contractible(c: Code, label) -> ContractionWitness | None:
    """Witness codeword if the code is contractible by the coordinate,
    else None."""
    ring = c.ring
    if not ring.is_chain:
        raise NotChainRingError(f"contractibility is defined over chain rings, got {ring.spec}")
    lab = str(label)
    j = c.labels.index(lab) if lab in c.labels else None
    if j is None:
        raise UnknownLabelError(f"unknown coordinate {label!r}")
    proj = c.coordinate_ideal(lab)
    if proj == {0}:
        raise ZeroProjectionError(f"code projects to zero at {label!r}")
    t = min(ring.valuation(a) for a in proj if a)
    ideal = ring.ideal_of_valuation(t)
    for w in sorted(c.codewords):
        if w[j] and ring.valuation(w[j]) == t and all(a in ideal for a in w):
            return ContractionWitness(label=lab, codeword=w, valuation=t)
    return None


def contract_code(c: Code, x):
    """Shorten by x after certifying contractibility step by step.

    Orderings of x are searched lexicographically; the first one whose
    every step is contractible is returned with the shortened code.
    Raises NotContractibleError when no ordering works.
    """
    xs = sorted(str(l) for l in x)
    for l in xs:
        if l not in c.labels:
            raise UnknownLabelError(f"unknown coordinate {l!r}")
    if not xs:
        return c, ()
    if len(xs) > 6:
        raise NotContractibleError("ordering search capped at 6 coordinates")
    for ordering in permutations(xs):
        current = c
        ok = True
        for l in ordering:
            try:
                witness = is_contractible(current, l)
            except ZeroProjectionError:
                witness = None
            if witness is None:
                ok = False
                break
            current = shorten(current, [l])
        if ok:
            return current, ordering
    raise NotContractibleError(f"no ordering of {xs} is contractible")


# -- circuits through the dual ------------------------------------------------------


def circuits_from_dual(c: Code):
    """Circuits of the code's independence system as the minimal supports
    of dual codewords having a unit coordinate."""
    from .indepsys import Clutter

    units = c.ring.units
    dual = dual_code(c)
    supports = set()
    for w in dual.codewords:
        if any(a in units for a in w):
            supports.add(frozenset(l for l, a in zip(dual.labels, w) if a))
    return Clutter.minimize(c.labels, supports)
