"""Finite commutative local rings with exact table-backed arithmetic.

Three ring families are supported:

* ``z:<p^nu>`` / ``zpn:<p>,<nu>`` -- integers modulo a prime power,
* ``fpu:<p>,<nu>`` -- truncated polynomial rings F_p[u]/<u^nu>,
* ``table:<name-or-path>`` -- rings given by explicit addition and
  multiplication tables (JSON), plus two built-in non-chain local rings
  used as counterexample material.

Elements are canonical integer indices ``0 .. size-1``; vectors are plain
tuples of indices.  Every handle is immutable after construction and all
operations are pure, so rings can be shared freely.
"""

from __future__ import annotations

import json
import os
from functools import lru_cache

from .errors import NotARingError, NotChainRingError, NotLocalError, NotPrimeError

MAX_RING_SIZE = 4096


def _factor_prime_power(m: int):
    """Return (p, nu) with m == p**nu, or None if m is not a prime power."""
    if m < 2:
        return None
    p = None
    for d in range(2, m + 1):
        if d * d > m:
            p = m if p is None else p
            break
        if m % d == 0:
            p = d
            break
    nu = 0
    rest = m
    while rest % p == 0:
        rest //= p
        nu += 1
    if rest != 1:
        return None
    return p, nu


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Ring:
    """A finite commutative local ring handle.

    Attributes
    ----------
    spec: canonical spec string the ring was built from.
    size: |R|.
    units: frozenset of unit indices (complement of the maximal ideal).
    maximal_ideal: frozenset of non-unit indices.
    is_chain: True when the ideals are linearly ordered.
    uniformizer, nilpotency_index, residue_field_size: chain-ring data
        (``uniformizer`` generates the maximal ideal; for fields it is 0
        and the nilpotency index is 1).
    """

    def __init__(self, spec, size, add_fn, mul_fn, names=None, kind="table"):
        self.spec = spec
        self.kind = kind
        self.size = size
        self.add = add_fn
        self.mul = mul_fn
        self.names = names if names is not None else [str(i) for i in range(size)]
        self.zero = 0
        self.one = 1
        self._finish_construction()

    # -- construction helpers -------------------------------------------------

    def _finish_construction(self):
        size, add, mul = self.size, self.add, self.mul
        elements = range(size)

        # Negation table (additive inverses are guaranteed by the axioms,
        # which TABLE rings have already passed at this point).
        neg = [None] * size
        for a in elements:
            for b in elements:
                if add(a, b) == 0:
                    neg[a] = b
                    break
        self._neg = neg

        units = set()
        inverse = {}
        for a in elements:
            for b in elements:
                if mul(a, b) == 1:
                    units.add(a)
                    inverse[a] = b
                    break
        self.units = frozenset(units)
        self._inverse = inverse
        m = frozenset(a for a in elements if a not in units)
        # Local <=> the non-units form an ideal.
        for a in m:
            for b in m:
                if add(a, b) not in m:
                    raise NotLocalError(
                        f"{self.spec}: non-units are not closed under addition "
                        f"({self.names[a]} + {self.names[b]} is a unit)"
                    )
            for r in elements:
                if mul(a, r) not in m:
                    raise NotLocalError(
                        f"{self.spec}: non-units are not an ideal "
                        f"({self.names[a]} * {self.names[r]} is a unit)"
                    )
        self.maximal_ideal = m
        self.residue_field_size = size // len(m) if m else size

        self._principal = {a: frozenset(mul(a, r) for r in elements) for a in elements}
        self.is_chain = self._ideals_linearly_ordered()
        if self.is_chain:
            self._init_chain_data()
        else:
            self.uniformizer = None
            self.nilpotency_index = None
        self._init_residue_labels()
        self._init_max_ideal_generators()

    def _ideals_linearly_ordered(self) -> bool:
        # In a finite ring every ideal is a finite sum of principal ideals,
        # so pairwise comparability of the principal ones decides the chain
        # property.
        ideals = set(self._principal.values())
        ideals = sorted(ideals, key=len)
        for i, small in enumerate(ideals):
            for big in ideals[i + 1 :]:
                if not small <= big:
                    return False
        return True

    def _init_chain_data(self):
        m = self.maximal_ideal
        theta = None
        for a in sorted(m):
            if self._principal[a] == m:
                theta = a
                break
        if theta is None:  # |m| == 1, i.e. a field
            theta = 0
        self.uniformizer = theta
        powers = [1]
        while powers[-1] != 0:
            powers.append(self.mul(powers[-1], theta))
            if len(powers) > self.size + 1:
                raise NotARingError(f"{self.spec}: uniformizer is not nilpotent")
        # powers[t] = theta^t; theta^nu == 0 first at index nu.
        self.nilpotency_index = len(powers) - 1 if theta != 0 else 1
        self._theta_pow = powers[: self.nilpotency_index] + [0]
        self._ideal_of_pow = [self._principal[p] for p in self._theta_pow]
        nu = self.nilpotency_index
        ordv = [nu] * self.size
        for a in range(self.size):
            if a == 0:
                continue
            t = 0
            while t < nu and a in self._ideal_of_pow[t + 1]:
                t += 1
            ordv[a] = t
        self._ord = ordv
        # unit_part[a] = smallest unit u with u * theta^ord(a) == a.
        unit_part = [None] * self.size
        for t in range(nu):
            pt = self._theta_pow[t]
            for u in sorted(self.units):
                a = self.mul(u, pt)
                if unit_part[a] is None:
                    unit_part[a] = u
        self._unit_part = unit_part

    def _init_residue_labels(self):
        # Label the cosets of m by k for the coset of k*1; with a prime
        # residue field every coset is hit exactly once.
        q = self.residue_field_size
        label = [None] * self.size
        rep = 0
        for k in range(q):
            for x in self.maximal_ideal:
                e = self.add(rep, x)
                if label[e] is None:
                    label[e] = k
            rep = self.add(rep, 1)
        if any(v is None for v in label):
            # Non-prime residue field: fall back to the minimal coset element.
            label = [None] * self.size
            nxt = 0
            for a in range(self.size):
                if label[a] is None:
                    k = nxt
                    nxt += 1
                    for x in self.maximal_ideal:
                        label[self.add(a, x)] = k
        self._residue = label

    def _init_max_ideal_generators(self):
        if self.is_chain:
            self.max_ideal_generators = (self.uniformizer,) if self.uniformizer else ()
            return
        # Greedy minimal generating set of m as an ideal: take elements whose
        # residues extend a basis of m / m^2.
        add, mul = self.add, self.mul
        m = sorted(self.maximal_ideal)
        m_sq = {0}
        frontier = {mul(a, b) for a in m for b in m}
        changed = True
        while changed:
            changed = False
            for x in list(frontier):
                for s in list(m_sq):
                    v = add(s, x)
                    if v not in m_sq:
                        m_sq.add(v)
                        changed = True
        gens = []
        acc = set(m_sq)
        for a in m:
            if a not in acc:
                gens.append(a)
                acc = {add(s, mul(r, a)) for s in acc for r in range(self.size)}
        self.max_ideal_generators = tuple(gens)

    # -- element level operations ---------------------------------------------

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def is_unit(self, a: int) -> bool:
        return a in self.units

    def inverse(self, a: int) -> int:
        return self._inverse[a]

    def valuation(self, a: int) -> int:
        """Largest t with a in <uniformizer^t>; the zero element gets nu."""
        if not self.is_chain:
            raise NotChainRingError(f"{self.spec} is not a chain ring")
        return self._ord[a]

    def unit_part(self, a: int) -> int:
        """Unit u with u * uniformizer^valuation(a) == a (a != 0)."""
        if not self.is_chain:
            raise NotChainRingError(f"{self.spec} is not a chain ring")
        if a == 0:
            raise ValueError("zero has no unit part")
        return self._unit_part[a]

    def uniformizer_power(self, t: int) -> int:
        if not self.is_chain:
            raise NotChainRingError(f"{self.spec} is not a chain ring")
        return self._theta_pow[min(t, self.nilpotency_index)]

    def ideal_of_valuation(self, t: int) -> frozenset:
        """The ideal <uniformizer^t> as a set of indices."""
        if not self.is_chain:
            raise NotChainRingError(f"{self.spec} is not a chain ring")
        return self._ideal_of_pow[min(t, self.nilpotency_index)]

    def principal_ideal(self, a: int) -> frozenset:
        return self._principal[a]

    def annihilator(self, a: int) -> frozenset:
        """{x : x*a == 0}; over a chain ring this is <theta^(nu-ord(a))>."""
        mul = self.mul
        return frozenset(x for x in range(self.size) if mul(x, a) == 0)

    def residue(self, a: int) -> int:
        """Canonical image of a in the residue field (0..q-1)."""
        return self._residue[a]

    def element_name(self, a: int) -> str:
        return self.names[a]

    def parse_element(self, token: str) -> int:
        raise NotImplementedError

    def __repr__(self):
        return f"Ring({self.spec}, size={self.size})"

    def __eq__(self, other):
        return isinstance(other, Ring) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)


class ZpnRing(Ring):
    """Integers modulo p^nu (includes prime fields for nu = 1)."""

    def __init__(self, p: int, nu: int):
        if not _is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if nu < 1:
            raise NotPrimeError("exponent must be positive")
        n = p**nu
        if n > MAX_RING_SIZE:
            raise NotPrimeError(f"ring size {n} exceeds cap {MAX_RING_SIZE}")
        self.p = p
        super().__init__(
            spec=f"zpn:{p},{nu}",
            size=n,
            add_fn=lambda a, b: (a + b) % n,
            mul_fn=lambda a, b: (a * b) % n,
            kind="zpn",
        )

    def parse_element(self, token: str) -> int:
        try:
            return int(token, 10) % self.size
        except ValueError:
            raise ValueError(f"bad element token {token!r} for {self.spec}") from None


class FpuRing(Ring):
    """F_p[u]/<u^nu>; index of sum(c_i u^i) is sum(c_i p^i)."""

    def __init__(self, p: int, nu: int):
        if not _is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if nu < 1:
            raise NotPrimeError("exponent must be positive")
        n = p**nu
        if n > MAX_RING_SIZE:
            raise NotPrimeError(f"ring size {n} exceeds cap {MAX_RING_SIZE}")
        self.p = p
        self._nu_param = nu
        coeffs = []
        for a in range(n):
            c, rest = [], a
            for _ in range(nu):
                c.append(rest % p)
                rest //= p
            coeffs.append(tuple(c))
        self._coeffs = coeffs

        def add_fn(a, b, _c=coeffs, _p=p):
            ca, cb = _c[a], _c[b]
            idx, mult = 0, 1
            for i in range(len(ca)):
                idx += ((ca[i] + cb[i]) % _p) * mult
                mult *= _p
            return idx

        def mul_fn(a, b, _c=coeffs, _p=p, _nu=nu):
            ca, cb = _c[a], _c[b]
            out = [0] * _nu
            for i in range(_nu):
                if ca[i]:
                    for j in range(_nu - i):
                        out[i + j] = (out[i + j] + ca[i] * cb[j]) % _p
            idx, mult = 0, 1
            for c in out:
                idx += c * mult
                mult *= _p
            return idx

        names = [self._poly_name(c) for c in coeffs]
        super().__init__(spec=f"fpu:{p},{nu}", size=n, add_fn=add_fn, mul_fn=mul_fn, names=names, kind="fpu")

    @staticmethod
    def _poly_name(coeffs) -> str:
        terms = []
        for i, c in enumerate(coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mon = "u" if i == 1 else f"u^{i}"
                terms.append(mon if c == 1 else f"{c}{mon}")
        return "+".join(terms) if terms else "0"

    def parse_element(self, token: str) -> int:
        try:
            return int(token, 10) % self.size
        except ValueError:
            pass
        idx = 0
        for term in token.replace(" ", "").split("+"):
            if not term:
                raise ValueError(f"bad element token {token!r} for {self.spec}")
            if "u" in term:
                head, _, tail = term.partition("u")
                c = int(head) if head else 1
                if tail.startswith("^"):
                    i = int(tail[1:])
                elif not tail:
                    i = 1
                else:
                    raise ValueError(f"bad element token {token!r} for {self.spec}")
            else:
                c, i = int(term), 0
            if i >= self._nu_param:
                continue
            idx = self.add(idx, self.mul(c % self.p, self._theta_pow[i]))
        return idx


class TableRing(Ring):
    """Ring given by explicit add/mul tables; axioms verified exhaustively."""

    def __init__(self, name: str, size: int, add_table, mul_table, names):
        self._validate_tables(name, size, add_table, mul_table)
        self._add_table = add_table
        self._mul_table = mul_table
        super().__init__(
            spec=f"table:{name}",
            size=size,
            add_fn=lambda a, b: add_table[a][b],
            mul_fn=lambda a, b: mul_table[a][b],
            names=list(names),
            kind="table",
        )

    @staticmethod
    def _validate_tables(name, size, add, mul):
        rng = range(size)
        if len(add) != size or len(mul) != size or any(len(row) != size for row in add + mul):
            raise NotARingError(f"{name}: tables are not {size}x{size}")
        for a in rng:
            if add[a][0] != a:
                raise NotARingError(f"{name}: 0 is not the additive identity")
            if mul[a][1] != a:
                raise NotARingError(f"{name}: 1 is not the multiplicative identity")
            if not any(add[a][b] == 0 for b in rng):
                raise NotARingError(f"{name}: element {a} has no additive inverse")
            for b in rng:
                if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                    raise NotARingError(f"{name}: tables are not commutative at ({a},{b})")
        for a in rng:
            for b in rng:
                for c in rng:
                    if add[add[a][b]][c] != add[a][add[b][c]]:
                        raise NotARingError(f"{name}: addition not associative at ({a},{b},{c})")
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                        raise NotARingError(f"{name}: multiplication not associative at ({a},{b},{c})")
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                        raise NotARingError(f"{name}: distributivity fails at ({a},{b},{c})")

    def parse_element(self, token: str) -> int:
        tok = token.replace(" ", "")
        for i, nm in enumerate(self.names):
            if nm.replace(" ", "") == tok:
                return i
        try:
            v = int(token, 10)
            if 0 <= v < self.size:
                return v
        except ValueError:
            pass
        raise ValueError(f"unknown element {token!r} of {self.spec}")


def _builtin_f2_monomial_ring(name: str, monomials, products):
    """Build an F_2-algebra table ring from a monomial basis.

    ``monomials`` lists the basis names (first entry "1"), ``products`` maps
    basis-index pairs to a basis index or None when the product vanishes.
    """
    k = len(monomials)
    size = 2**k

    def add(a, b):
        return a ^ b

    def mul(a, b):
        out = 0
        for i in range(k):
            if not a >> i & 1:
                continue
            for j in range(k):
                if not b >> j & 1:
                    continue
                t = products[i][j]
                if t is not None:
                    out ^= 1 << t
        return out

    names = []
    for a in range(size):
        terms = [monomials[i] for i in range(k) if a >> i & 1]
        names.append("+".join(terms) if terms else "0")
    add_table = [[add(a, b) for b in range(size)] for a in range(size)]
    mul_table = [[mul(a, b) for b in range(size)] for a in range(size)]
    return TableRing(name, size, add_table, mul_table, names)


def _builtin_tables():
    # F_2[x,y]/<x^2, xy, y^2>: basis 1, x, y.
    small = _builtin_f2_monomial_ring(
        "f2xy_xx_xy_yy",
        ["1", "x", "y"],
        [[0, 1, 2], [1, None, None], [2, None, None]],
    )
    # F_2[x,y]/<x^2, y^2>: basis 1, x, y, xy.
    big = _builtin_f2_monomial_ring(
        "f2xy_xx_yy",
        ["1", "x", "y", "xy"],
        [[0, 1, 2, 3], [1, None, 3, None], [2, 3, None, None], [3, None, None, None]],
    )
    return {"f2xy_xx_xy_yy": small, "f2xy_xx_yy": big}


_BUILTINS = None


def _load_table_ring(name_or_path: str) -> Ring:
    global _BUILTINS
    if _BUILTINS is None:
        _BUILTINS = _builtin_tables()
    if name_or_path in _BUILTINS:
        return _BUILTINS[name_or_path]
    if not os.path.exists(name_or_path):
        raise NotARingError(f"unknown table ring {name_or_path!r}")
    with open(name_or_path, encoding="utf-8") as fh:
        data = json.load(fh)
    size = data["size"]
    if size > MAX_RING_SIZE:
        raise NotARingError(f"table ring size {size} exceeds cap {MAX_RING_SIZE}")
    names = data.get("names", [str(i) for i in range(size)])
    return TableRing(os.path.basename(name_or_path), size, data["add"], data["mul"], names)


@lru_cache(maxsize=None)
def make_ring(spec: str) -> Ring:
    """Construct a ring from a spec string.

    Grammar: ``z:<prime-power>``, ``zpn:<p>,<nu>``, ``fpu:<p>,<nu>``,
    ``table:<builtin-name-or-json-path>``.
    """
    spec = spec.strip()
    head, _, rest = spec.partition(":")
    head = head.lower()
    if head == "z":
        try:
            m = int(rest, 10)
        except ValueError:
            raise NotPrimeError(f"bad ring spec {spec!r}") from None
        pw = _factor_prime_power(m)
        if pw is None:
            raise NotPrimeError(f"{m} is not a prime power")
        return ZpnRing(*pw)
    if head in ("zpn", "fpu"):
        try:
            p_s, nu_s = rest.split(",")
            p, nu = int(p_s, 10), int(nu_s, 10)
        except ValueError:
            raise NotPrimeError(f"bad ring spec {spec!r}") from None
        return ZpnRing(p, nu) if head == "zpn" else FpuRing(p, nu)
    if head == "table":
        return _load_table_ring(rest)
    raise NotPrimeError(f"unknown ring spec {spec!r}")
