"""Exact matrices over a finite local ring.

The workhorse here is the Smith normal form over chain rings: pivoting on
an entry of minimal valuation guarantees the pivot divides every remaining
entry, so one elimination pass per pivot suffices and no division by a
non-unit ever happens.  Determinants use cofactor expansion memoised over
column subsets, which never divides at all (the rings have zero divisors).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    MatrixParseError,
    NotChainRingError,
    NotSquareError,
    ScaleByNonUnitError,
    ZeroColumnError,
)
from .rings import Ring, make_ring


class Mat:
    """A k x |E| matrix over a ring with labelled columns (immutable)."""

    __slots__ = ("ring", "labels", "rows")

    def __init__(self, ring: Ring, labels, rows):
        labels = tuple(str(l) for l in labels)
        rows = tuple(tuple(r) for r in rows)
        if len(set(labels)) != len(labels):
            raise ValueError("column labels must be distinct")
        for r in rows:
            if len(r) != len(labels):
                raise ValueError("row length does not match label count")
            for a in r:
                if not (0 <= a < ring.size):
                    raise ValueError(f"entry {a} outside ring of size {ring.size}")
        self.ring = ring
        self.labels = labels
        self.rows = rows

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.labels)

    def column(self, label) -> tuple:
        j = self.labels.index(str(label))
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list:
        return [tuple(row[j] for row in self.rows) for j in range(self.ncols)]

    def submatrix(self, labels) -> "Mat":
        idx = [self.labels.index(str(l)) for l in labels]
        return Mat(self.ring, [self.labels[j] for j in idx], [[row[j] for j in idx] for row in self.rows])

    def transpose_rows(self) -> list:
        """Rows of the transpose, as raw vectors (labels are dropped)."""
        return [tuple(row[j] for row in self.rows) for j in range(self.ncols)]

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.ring == other.ring
            and self.labels == other.labels
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ring, self.labels, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(self.ring.element_name(a) for a in row) for row in self.rows)
        return f"Mat({self.ring.spec}; cols {' '.join(self.labels)}; {body})"


# -- matrix text format -------------------------------------------------------


def parse_matrix(text: str) -> Mat:
    """Parse the text format: ``ring <spec>``, ``cols <l> ...``, then rows."""
    ring = None
    labels = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if ring is None:
            if toks[0] != "ring" or len(toks) != 2:
                raise MatrixParseError("expected 'ring <spec>'", line=lineno)
            ring = make_ring(toks[1])
        elif labels is None:
            if toks[0] != "cols" or len(toks) < 2:
                raise MatrixParseError("expected 'cols <label> ...'", line=lineno)
            labels = toks[1:]
        else:
            if len(toks) != len(labels):
                raise MatrixParseError(
                    f"expected {len(labels)} entries, got {len(toks)}", line=lineno
                )
            row = []
            for colno, tok in enumerate(toks, start=1):
                try:
                    row.append(ring.parse_element(tok))
                except ValueError as exc:
                    raise MatrixParseError(str(exc), line=lineno, column=colno) from None
            rows.append(row)
    if ring is None or labels is None:
        raise MatrixParseError("matrix text must declare a ring and column labels")
    return Mat(ring, labels, rows)


def parse_matrix_file(path: str) -> Mat:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def format_matrix(m: Mat) -> str:
    lines = [f"ring {m.ring.spec}", "cols " + " ".join(m.labels)]
    for row in m.rows:
        lines.append(" ".join(m.ring.element_name(a) for a in row))
    return "\n".join(lines) + "\n"


# -- elementary row operations -------------------------------------------------


def row_reduce_ops(m: Mat, ops) -> Mat:
    """Apply a list of elementary row operations.

    Each op is one of ``("swap", i, j)``, ``("scale", i, unit)``,
    ``("addmul", i, c, j)`` meaning row_i += c * row_j.  Scaling by a
    non-unit is rejected since it can change the row span.
    """
    ring = m.ring
    rows = [list(r) for r in m.rows]
    add, mul = ring.add, ring.mul
    for op in ops:
        tag = op[0]
        if tag == "swap":
            _, i, j = op
            rows[i], rows[j] = rows[j], rows[i]
        elif tag == "scale":
            _, i, u = op
            if not ring.is_unit(u):
                raise ScaleByNonUnitError(f"{ring.element_name(u)} is not a unit")
            rows[i] = [mul(u, a) for a in rows[i]]
        elif tag == "addmul":
            _, i, c, j = op
            if i == j:
                raise ValueError("addmul must use two distinct rows")
            rows[i] = [add(a, mul(c, b)) for a, b in zip(rows[i], rows[j])]
        else:
            raise ValueError(f"unknown row operation {tag!r}")
    return Mat(ring, m.labels, rows)


# -- determinant ---------------------------------------------------------------


def det(m: Mat):
    """Determinant of a square matrix, by memoised cofactor expansion."""
    if m.nrows != m.ncols:
        raise NotSquareError(f"{m.nrows}x{m.ncols} matrix has no determinant")
    return det_rows(m.ring, [list(r) for r in m.rows])


def det_rows(ring: Ring, rows) -> int:
    n = len(rows)
    if n == 0:
        return 1
    add, mul, neg = ring.add, ring.mul, ring.neg
    cache = {}

    def minor(row_start: int, colmask: int) -> int:
        # Determinant of rows row_start.. restricted to columns in colmask.
        if colmask == 0:
            return 1
        key = colmask
        got = cache.get(key)
        if got is not None:
            return got
        r = rows[row_start]
        acc = 0
        sign = 1
        rest = colmask
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            a = r[j]
            if a != 0:
                sub = minor(row_start + 1, colmask & ~(1 << j))
                term = mul(a, sub)
                acc = add(acc, term if sign > 0 else neg(term))
            sign = -sign
        cache[key] = acc
        return acc

    # cache keyed by colmask alone: row_start is determined by popcount.
    return minor(0, (1 << n) - 1)


# -- Smith normal form ----------------------------------------------------------


@dataclass(frozen=True)
class SnfResult:
    """Invertible left/right transforms with left @ A @ right diagonal.

    ``exponents`` lists the valuations of the nonzero diagonal entries in
    nondecreasing order; the diagonal entries themselves are the matching
    uniformizer powers.
    """

    left: tuple
    right: tuple
    diagonal: tuple
    exponents: tuple


def _matmul(ring: Ring, a, b):
    add, mul = ring.add, ring.mul
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(m):
            s = 0
            for t in range(k):
                if ai[t]:
                    s = add(s, mul(ai[t], b[t][j]))
            row.append(s)
        out.append(row)
    return out


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _chain_quotient(ring: Ring, a: int, p: int) -> int:
    """c with c * p == a, valid when valuation(p) <= valuation(a), p != 0."""
    if a == 0:
        return 0
    s, t = ring.valuation(a), ring.valuation(p)
    u = ring.mul(ring.unit_part(a), ring.inverse(ring.unit_part(p)))
    return ring.mul(u, ring.uniformizer_power(s - t))


def smith_normal_form(m: Mat) -> SnfResult:
    ring = m.ring
    if not ring.is_chain:
        raise NotChainRingError(f"Smith normal form needs a chain ring, got {ring.spec}")
    work = [list(r) for r in m.rows]
    k, n = len(work), m.ncols
    left, right = _identity(k), _identity(n)
    add, mul, neg, ordv = ring.add, ring.mul, ring.neg, ring.valuation
    nu = ring.nilpotency_index

    t = 0
    while t < min(k, n):
        best, best_ord = None, nu
        for i in range(t, k):
            wi = work[i]
            for j in range(t, n):
                o = ordv(wi[j])
                if o < best_ord:
                    best, best_ord = (i, j), o
        if best is None:
            break
        bi, bj = best
        if bi != t:
            work[t], work[bi] = work[bi], work[t]
            left[t], left[bi] = left[bi], left[t]
        if bj != t:
            for row in work:
                row[t], row[bj] = row[bj], row[t]
            for row in right:
                row[t], row[bj] = row[bj], row[t]
        pivot = work[t][t]
        # clear the pivot column
        for i in range(t + 1, k):
            a = work[i][t]
            if a == 0:
                continue
            c = neg(_chain_quotient(ring, a, pivot))
            wi, wt = work[i], work[t]
            li, lt = left[i], left[t]
            for j in range(n):
                wi[j] = add(wi[j], mul(c, wt[j]))
            for j in range(k):
                li[j] = add(li[j], mul(c, lt[j]))
        # clear the pivot row
        for j in range(t + 1, n):
            a = work[t][j]
            if a == 0:
                continue
            c = neg(_chain_quotient(ring, a, pivot))
            for row in work:
                row[j] = add(row[j], mul(c, row[t]))
            for row in right:
                row[j] = add(row[j], mul(c, row[t]))
        # normalise the pivot to a pure uniformizer power
        uinv = ring.inverse(ring.unit_part(pivot))
        if uinv != 1:
            work[t] = [mul(uinv, a) for a in work[t]]
            left[t] = [mul(uinv, a) for a in left[t]]
        t += 1

    exponents = tuple(ordv(work[i][i]) for i in range(t) if work[i][i] != 0)
    return SnfResult(
        left=tuple(tuple(r) for r in left),
        right=tuple(tuple(r) for r in right),
        diagonal=tuple(tuple(r) for r in work),
        exponents=exponents,
    )


def snf_exponents(ring: Ring, vectors) -> tuple:
    """Invariant-factor exponents of the matrix whose columns are ``vectors``.

    Lean transform-free variant of :func:`smith_normal_form` for the hot
    paths (independence tests do this thousands of times).
    """
    if not ring.is_chain:
        raise NotChainRingError(f"{ring.spec} is not a chain ring")
    if not vectors:
        return ()
    k = len(vectors[0])
    work = [[v[i] for v in vectors] for i in range(k)]
    n = len(vectors)
    add, mul, neg, ordv = ring.add, ring.mul, ring.neg, ring.valuation
    nu = ring.nilpotency_index
    exps = []
    t = 0
    while t < min(k, n):
        best, best_ord = None, nu
        for i in range(t, k):
            wi = work[i]
            for j in range(t, n):
                o = ordv(wi[j])
                if o < best_ord:
                    best, best_ord = (i, j), o
                    if o == 0:
                        break
            if best_ord == 0:
                break
        if best is None:
            break
        bi, bj = best
        if bi != t:
            work[t], work[bi] = work[bi], work[t]
        if bj != t:
            for row in work:
                row[t], row[bj] = row[bj], row[t]
        pivot = work[t][t]
        for i in range(t + 1, k):
            a = work[i][t]
            if a == 0:
                continue
            c = neg(_chain_quotient(ring, a, pivot))
            wi, wt = work[i], work[t]
            for j in range(t, n):
                wi[j] = add(wi[j], mul(c, wt[j]))
        for j in range(t + 1, n):
            a = work[t][j]
            if a == 0:
                continue
            c = neg(_chain_quotient(ring, a, pivot))
            for i in range(t, k):
                work[i][j] = add(work[i][j], mul(c, work[i][t]))
        exps.append(best_ord)
        t += 1
    return tuple(exps)


# -- systematic form -------------------------------------------------------------


@dataclass(frozen=True)
class SystematicForm:
    """Column permutation and the matrix [I_k | A] it produces.

    ``perm`` lists the original column labels in their new order (identity
    block first).  Undoing the permutation recovers a generator matrix of
    the original row span.
    """

    perm: tuple
    mat: Mat


def systematic_form(m: Mat):
    """Bring a generator matrix to [I_k | A] form, or None when the row
    span is not free of rank ``nrows``."""
    ring = m.ring
    if not ring.is_chain:
        raise NotChainRingError(f"systematic form needs a chain ring, got {ring.spec}")
    k, n = m.nrows, m.ncols
    if k > n:
        return None
    rows = [list(r) for r in m.rows]
    add, mul, neg = ring.add, ring.mul, ring.neg
    pivots = []
    used = set()
    for i in range(k):
        found = None
        for j in range(n):
            if j in used:
                continue
            for r in range(i, k):
                if ring.is_unit(rows[r][j]):
                    found = (r, j)
                    break
            if found:
                break
        if not found:
            return None
        r, j = found
        rows[i], rows[r] = rows[r], rows[i]
        inv = ring.inverse(rows[i][j])
        if inv != 1:
            rows[i] = [mul(inv, a) for a in rows[i]]
        for r2 in range(k):
            if r2 == i or rows[r2][j] == 0:
                continue
            c = neg(rows[r2][j])
            rows[r2] = [add(a, mul(c, b)) for a, b in zip(rows[r2], rows[i])]
        pivots.append(j)
        used.add(j)
    order = pivots + [j for j in range(n) if j not in used]
    perm = tuple(m.labels[j] for j in order)
    out = Mat(ring, perm, [[row[j] for j in order] for row in rows])
    return SystematicForm(perm=perm, mat=out)


def is_free_generator_matrix(m: Mat) -> bool:
    """True when the rows span a free module of rank nrows (all invariant
    factor exponents zero, none missing)."""
    res = snf_exponents(m.ring, m.columns())
    return len(res) == m.nrows and all(e == 0 for e in res)


# -- minimal-generator column reduction -------------------------------------------


def minimal_generator_reduction(m: Mat, label) -> Mat:
    """Row-reduce so the column of ``label`` keeps a single nonzero entry.

    Over a chain ring the surviving entry is u * theta^t with <theta^t> the
    ideal the column generates; the row span is unchanged.
    """
    ring = m.ring
    if not ring.is_chain:
        raise NotChainRingError(f"minimal-generator reduction needs a chain ring, got {ring.spec}")
    j = m.labels.index(str(label))
    col = [row[j] for row in m.rows]
    if all(a == 0 for a in col):
        raise ZeroColumnError(f"column {label!r} is zero")
    ords = [ring.valuation(a) if a else ring.nilpotency_index for a in col]
    pivot_row = min(range(len(col)), key=lambda i: (ords[i], i))
    rows = [list(r) for r in m.rows]
    add, mul, neg = ring.add, ring.mul, ring.neg
    p = rows[pivot_row][j]
    for i in range(len(rows)):
        if i == pivot_row or rows[i][j] == 0:
            continue
        c = neg(_chain_quotient(ring, rows[i][j], p))
        rows[i] = [add(a, mul(c, b)) for a, b in zip(rows[i], rows[pivot_row])]
    return Mat(ring, m.labels, rows)
