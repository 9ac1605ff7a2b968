"""Independence systems on small ground sets.

Subsets are bitmasks over an ordered label tuple and the independent
family is stored explicitly, so axiom checks, circuits, duals and
isomorphism all reduce to set algebra.  Ground sets are capped at 16
elements.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .errors import (
    ContractDependentSetError,
    GroundSetTooLargeError,
    UnknownLabelError,
)
from .linalg import Mat
from .modindep import is_modular_independent

MAX_GROUND = 16
MAX_BACKTRACK = 10


def _popcount(x: int) -> int:
    return bin(x).count("1")


class IndependenceSystem:
    """Ground set plus an explicitly stored downward-closed family."""

    def __init__(self, labels, independent_masks, provenance=None):
        labels = tuple(str(l) for l in labels)
        if len(labels) > MAX_GROUND:
            raise GroundSetTooLargeError(f"{len(labels)} > {MAX_GROUND} elements")
        if len(set(labels)) != len(labels):
            raise ValueError("ground set labels must be distinct")
        fam = frozenset(independent_masks)
        if 0 not in fam:
            raise ValueError("the empty set must be independent")
        full = (1 << len(labels)) - 1
        for m in fam:
            if m & ~full:
                raise ValueError("independent mask outside the ground set")
        for m in fam:
            x = m
            while x:
                bit = x & -x
                if (m ^ bit) not in fam:
                    raise ValueError("independent family is not downward closed")
                x ^= bit
        self.labels = labels
        self.family = fam
        self.provenance = provenance
        self._index = {l: i for i, l in enumerate(labels)}
        self._rank_table = None

    # -- subset plumbing --------------------------------------------------

    def mask_of(self, subset) -> int:
        m = 0
        for l in subset:
            i = self._index.get(str(l))
            if i is None:
                raise UnknownLabelError(f"unknown label {l!r}")
            m |= 1 << i
        return m

    def subset_of(self, mask: int) -> frozenset:
        return frozenset(self.labels[i] for i in range(len(self.labels)) if mask >> i & 1)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def is_independent(self, subset) -> bool:
        return self.mask_of(subset) in self.family

    def independent_sets(self) -> list:
        return [sorted(self.subset_of(m)) for m in sorted(self.family, key=lambda m: (_popcount(m), m))]

    # -- rank --------------------------------------------------------------

    def _ranks(self):
        if self._rank_table is None:
            n = len(self.labels)
            table = [0] * (1 << n)
            fam = self.family
            for mask in range(1, 1 << n):
                if mask in fam:
                    table[mask] = _popcount(mask)
                else:
                    best = 0
                    x = mask
                    while x:
                        bit = x & -x
                        r = table[mask ^ bit]
                        if r > best:
                            best = r
                        x ^= bit
                    table[mask] = best
            self._rank_table = table
        return self._rank_table

    def rank(self, subset=None) -> int:
        mask = self.full_mask if subset is None else self.mask_of(subset)
        return self._ranks()[mask]

    def rank_mask(self, mask: int) -> int:
        return self._ranks()[mask]

    # -- derived objects -----------------------------------------------------

    def circuits(self) -> "Clutter":
        fam = self.family
        n = len(self.labels)
        members = []
        for mask in range(1, 1 << n):
            if mask in fam:
                continue
            minimal = True
            x = mask
            while x:
                bit = x & -x
                if (mask ^ bit) not in fam:
                    minimal = False
                    break
                x ^= bit
            if minimal:
                members.append(mask)
        return Clutter(self.labels, [self.subset_of(m) for m in members])

    def bases(self) -> list:
        r = self.rank()
        return [m for m in self.family if _popcount(m) == r]

    def maximal_independent_masks(self) -> list:
        fam = self.family
        n = len(self.labels)
        out = []
        for m in fam:
            if all((m | (1 << i)) not in fam for i in range(n) if not m >> i & 1):
                out.append(m)
        return out

    def is_pure(self) -> bool:
        sizes = {_popcount(m) for m in self.maximal_independent_masks()}
        return len(sizes) <= 1

    def dual(self) -> "IndependenceSystem":
        """Dual via rank complementation: X independent in the dual iff
        the complement of X still has full rank."""
        ranks = self._ranks()
        full = self.full_mask
        r_full = ranks[full]
        fam = [m for m in range(full + 1) if ranks[full & ~m] == r_full]
        return IndependenceSystem(self.labels, fam, provenance=("dual", self))

    def dual_rank(self, subset) -> int:
        """|X| + r(E - X) - r(E) (not the rank function of the dual unless
        the system is pure)."""
        mask = self.mask_of(subset)
        ranks = self._ranks()
        return _popcount(mask) + ranks[self.full_mask & ~mask] - ranks[self.full_mask]

    # -- equality ---------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, IndependenceSystem)
            and self.labels == other.labels
            and self.family == other.family
        )

    def __hash__(self):
        return hash((self.labels, self.family))

    def __repr__(self):
        return f"IndependenceSystem({list(self.labels)}, {len(self.family)} independent sets)"


class Clutter:
    """An antichain of nonempty subsets of a ground set."""

    def __init__(self, labels, members):
        labels = tuple(str(l) for l in labels)
        mems = {frozenset(str(x) for x in m) for m in members}
        for m in mems:
            if not m:
                raise ValueError("clutter members must be nonempty")
            for x in m:
                if x not in labels:
                    raise UnknownLabelError(f"unknown label {x!r}")
        for a in mems:
            for b in mems:
                if a < b:
                    raise ValueError(f"clutter is not an antichain: {set(a)} < {set(b)}")
        self.labels = labels
        self.members = frozenset(mems)

    @staticmethod
    def minimize(labels, sets) -> "Clutter":
        sets = [frozenset(str(x) for x in s) for s in sets if s]
        keep = [s for s in sets if not any(t < s for t in sets)]
        return Clutter(labels, keep)

    def delete(self, t) -> "Clutter":
        t = frozenset(str(x) for x in t)
        labels = tuple(l for l in self.labels if l not in t)
        return Clutter(labels, [m for m in self.members if not m & t])

    def contract(self, t) -> "Clutter":
        t = frozenset(str(x) for x in t)
        for m in self.members:
            if m <= t:
                raise ContractDependentSetError(
                    f"{sorted(t)} contains the member {sorted(m)}"
                )
        labels = tuple(l for l in self.labels if l not in t)
        return Clutter.minimize(labels, [m - t for m in self.members if m - t])

    def loops(self) -> frozenset:
        return frozenset(next(iter(m)) for m in self.members if len(m) == 1)

    def isthmuses(self) -> frozenset:
        touched = set()
        for m in self.members:
            touched |= m
        return frozenset(l for l in self.labels if l not in touched)

    def to_system(self) -> IndependenceSystem:
        """Independent sets = subsets containing no member."""
        n = len(self.labels)
        idx = {l: i for i, l in enumerate(self.labels)}
        member_masks = [sum(1 << idx[x] for x in m) for m in self.members]
        fam = [m for m in range(1 << n) if not any(mm & ~m == 0 for mm in member_masks)]
        return IndependenceSystem(self.labels, fam)

    def __eq__(self, other):
        return (
            isinstance(other, Clutter)
            and set(self.labels) == set(other.labels)
            and self.members == other.members
        )

    def __hash__(self):
        return hash((frozenset(self.labels), self.members))

    def __repr__(self):
        body = sorted(sorted(m) for m in self.members)
        return f"Clutter({list(self.labels)}, {body})"


@dataclass
class MatroidReport:
    """Outcome of the exchange-axiom certification."""

    is_matroid: bool
    violations: list  # pairs (I1, I2) of label frozensets with no augmentation
    rank: int
    is_simple: bool
    loops: list
    parallel_pairs: list


def build_from_matrix(a: Mat, method: str = "auto") -> IndependenceSystem:
    """Column independence system of a matrix: S independent iff the
    columns labelled by S are modular independent."""
    n = a.ncols
    if n > MAX_GROUND:
        raise GroundSetTooLargeError(f"{n} columns > {MAX_GROUND}")
    cols = a.columns()
    ring = a.ring
    fam = {0}
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            mask = sum(1 << i for i in combo)
            # a superset of a dependent set is dependent: skip unless all
            # maximal proper subsets are already known independent
            skip = False
            x = mask
            while x:
                bit = x & -x
                if (mask ^ bit) not in fam:
                    skip = True
                    break
                x ^= bit
            if skip:
                continue
            if is_modular_independent(ring, [cols[i] for i in combo], method):
                fam.add(mask)
    return IndependenceSystem(a.labels, fam, provenance=("matrix", a))


def check_matroid(m: IndependenceSystem) -> MatroidReport:
    """Exhaustive exchange-axiom check over all pairs of independent sets."""
    fam_sorted = sorted(m.family, key=lambda x: (_popcount(x), x))
    violations = []
    for i2 in fam_sorted:
        s2 = _popcount(i2)
        for i1 in fam_sorted:
            if _popcount(i1) >= s2:
                continue
            cand = i2 & ~i1
            ok = False
            x = cand
            while x:
                bit = x & -x
                if (i1 | bit) in m.family:
                    ok = True
                    break
                x ^= bit
            if not ok:
                violations.append((m.subset_of(i1), m.subset_of(i2)))
    loops = [l for i, l in enumerate(m.labels) if (1 << i) not in m.family]
    parallel = []
    for i, j in combinations(range(len(m.labels)), 2):
        if (1 << i) in m.family and (1 << j) in m.family and ((1 << i) | (1 << j)) not in m.family:
            parallel.append((m.labels[i], m.labels[j]))
    return MatroidReport(
        is_matroid=not violations,
        violations=violations,
        rank=m.rank(),
        is_simple=not loops and not parallel,
        loops=loops,
        parallel_pairs=parallel,
    )


def is_rank_submodular(m: IndependenceSystem):
    """Exhaustive submodularity check of the rank function.

    Returns (verdict, witnesses) where witnesses lists offending (X, Y).
    """
    ranks = m._ranks()
    full = m.full_mask
    witnesses = []
    for x in range(full + 1):
        rx = ranks[x]
        for y in range(x, full + 1):
            if ranks[x | y] + ranks[x & y] > rx + ranks[y]:
                witnesses.append((m.subset_of(x), m.subset_of(y)))
    return (not witnesses, witnesses)


def uniform_system(k: int, n: int, labels=None) -> IndependenceSystem:
    labels = labels if labels is not None else [str(i + 1) for i in range(n)]
    fam = [m for m in range(1 << n) if _popcount(m) <= k]
    return IndependenceSystem(labels, fam)


def _uniform_rank(m: IndependenceSystem):
    """k when the system is the uniform one of rank k, else None."""
    n = len(m.labels)
    k = m.rank()
    expected = sum(1 for mask in range(1 << n) if _popcount(mask) <= k)
    return k if len(m.family) == expected else None


def is_isomorphic(m1: IndependenceSystem, m2: IndependenceSystem):
    """A label bijection carrying one family onto the other, or None.

    Uniform systems are matched structurally at any size; everything else
    is backtracking, capped at 10 elements.
    """
    n = len(m1.labels)
    if n != len(m2.labels) or len(m1.family) != len(m2.family):
        return None
    u1, u2 = _uniform_rank(m1), _uniform_rank(m2)
    if u1 is not None or u2 is not None:
        if u1 != u2:
            return None
        return dict(zip(sorted(m1.labels), sorted(m2.labels)))
    if n > MAX_BACKTRACK:
        raise GroundSetTooLargeError(f"backtracking isomorphism capped at {MAX_BACKTRACK} elements")

    profile1 = sorted(map(_popcount, m1.family))
    profile2 = sorted(map(_popcount, m2.family))
    if profile1 != profile2:
        return None

    c1, c2 = m1.circuits(), m2.circuits()
    if sorted(map(len, c1.members)) != sorted(map(len, c2.members)):
        return None

    def signatures(m, circuits):
        sig = {}
        for i, l in enumerate(m.labels):
            incident = [len(c) for c in circuits.members if l in c]
            sig[i] = ((1 << i) not in m.family, len(incident), tuple(sorted(incident)))
        return sig

    sig1, sig2 = signatures(m1, c1), signatures(m2, c2)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None

    # rarest signatures first shrink the branching factor
    freq = {}
    for s in sig1.values():
        freq[s] = freq.get(s, 0) + 1
    order = sorted(range(n), key=lambda i: (freq[sig1[i]], sig1[i]))

    fam1, fam2 = m1.family, m2.family
    mapping = [None] * n  # index in m1 -> index in m2

    def consistent(depth: int) -> bool:
        # check every mapped subset through the newly mapped element
        a = order[depth]
        placed = order[: depth + 1]
        others = placed[:-1]
        for sub in range(1 << len(others)):
            mask1 = 1 << a
            mask2 = 1 << mapping[a]
            for j, b in enumerate(others):
                if sub >> j & 1:
                    mask1 |= 1 << b
                    mask2 |= 1 << mapping[b]
            if (mask1 in fam1) != (mask2 in fam2):
                return False
        return True

    used2 = [False] * n

    def backtrack(depth: int):
        if depth == n:
            return True
        a = order[depth]
        for b in range(n):
            if used2[b] or sig1[a] != sig2[b]:
                continue
            mapping[a] = b
            used2[b] = True
            if consistent(depth) and backtrack(depth + 1):
                return True
            used2[b] = False
            mapping[a] = None
        return False

    if not backtrack(0):
        return None
    return {m1.labels[i]: m2.labels[mapping[i]] for i in range(n)}


# -- JSON export ----------------------------------------------------------------


def system_to_json(m: IndependenceSystem, report: MatroidReport | None = None) -> str:
    if report is None:
        report = check_matroid(m)
    blob = {
        "ground": list(m.labels),
        "independent": [sorted(s) for s in m.independent_sets()],
        "circuits": sorted(sorted(c) for c in m.circuits().members),
        "rank": report.rank,
        "is_matroid": report.is_matroid,
        "violations": [[sorted(a), sorted(b)] for a, b in report.violations],
    }
    return json.dumps(blob, indent=2)


def system_from_json(text: str) -> IndependenceSystem:
    blob = json.loads(text)
    labels = blob["ground"]
    idx = {str(l): i for i, l in enumerate(labels)}
    fam = {0}
    for s in blob["independent"]:
        fam.add(sum(1 << idx[str(x)] for x in s))
    return IndependenceSystem(labels, fam)
