"""Exact dense/sparse linear algebra over the ground fields.

Matrices are immutable after construction.  Elimination is deterministic:
pivots are chosen as the first nonzero entry in column order with ties
broken by row index, so identical inputs give identical outputs.

Storage is sparse (entry dict); algorithms fall back to dense row lists
once the density exceeds DENSE_THRESHOLD, since elimination fills in.
Rank of an integral matrix over the rationals goes through a fraction-free
integer elimination, which avoids Fraction overhead on the hot path.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .field import RationalField

DENSE_THRESHOLD = 0.25

_QQ = RationalField()


class Matrix:
    """An immutable rows x cols matrix over a field, stored sparsely."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, rows: int, cols: int, entries: dict | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        self.field = field
        self.rows = rows
        self.cols = cols
        ent = {}
        if entries:
            for (r, c), v in entries.items():
                if not (0 <= r < rows and 0 <= c < cols):
                    raise ValueError(f"entry ({r},{c}) outside {rows}x{cols} matrix")
                if v != field.zero:
                    ent[(r, c)] = v
        self.entries = ent

    @classmethod
    def from_rows(cls, field, row_lists):
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        ent = {}
        for r, row in enumerate(row_lists):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for c, v in enumerate(row):
                if v != field.zero:
                    ent[(r, c)] = v
        return cls(field, rows, cols, ent)

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, {(i, i): field.one for i in range(n)})

    def density(self) -> float:
        if self.rows == 0 or self.cols == 0:
            return 0.0
        return len(self.entries) / (self.rows * self.cols)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows,
                      {(c, r): v for (r, c), v in self.entries.items()})

    def is_zero(self) -> bool:
        return not self.entries

    def row_dicts(self):
        rows = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def to_lists(self):
        out = [[self.field.zero] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        f = self.field
        by_row = {}
        for (r, c), v in self.entries.items():
            by_row.setdefault(r, {})[c] = v
        other_rows = {}
        for (r, c), v in other.entries.items():
            other_rows.setdefault(r, {})[c] = v
        ent = {}
        for r, row in by_row.items():
            acc = {}
            for k, v in row.items():
                orow = other_rows.get(k)
                if not orow:
                    continue
                for c, w in orow.items():
                    acc[c] = f.add(acc.get(c, f.zero), f.mul(v, w))
            for c, v in acc.items():
                if v != f.zero:
                    ent[(r, c)] = v
        return Matrix(f, self.rows, other.cols, ent)

    def apply(self, vec: list):
        """Matrix times column vector (vector as a plain list)."""
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        f = self.field
        out = [f.zero] * self.rows
        for (r, c), v in self.entries.items():
            if vec[c] != f.zero:
                out[r] = f.add(out[r], f.mul(v, vec[c]))
        return out

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field!r}, {len(self.entries)} nonzero)"


def _integral_int_rows(m: Matrix):
    """Return integer row dicts if every entry is an integral rational, else None."""
    if m.field != _QQ:
        return None
    rows = [dict() for _ in range(m.rows)]
    for (r, c), v in m.entries.items():
        if v.denominator != 1:
            return None
        rows[r][c] = v.numerator
    return rows

def _int_forward_echelon(rows):
    """Fraction-free forward elimination on integer row dicts.

    Consumes `rows`; returns (pivot list [(col, row_dict)], in pivot order).
    Per-row gcd normalization keeps entries small.
    """
    active = [row for row in rows if row]
    pivots = []
    while active:
        col = min(min(row) for row in active)
        piv = None
        rest = []
        for row in active:
            if piv is None and col in row:
                piv = row
            else:
                rest.append(row)
        pv = piv[col]
        nxt = []
        for row in rest:
            rv = row.get(col)
            if rv is None:
                nxt.append(row)
                continue
            g = gcd(pv, rv)
            a, b = pv // g, rv // g
            new = {}
            for c in row.keys() | piv.keys():
                w = row.get(c, 0) * a - piv.get(c, 0) * b
                if w:
                    new[c] = w
            if new:
                g2 = 0
                for v in new.values():
                    g2 = gcd(g2, v)
                    if g2 == 1:
                        break
                if g2 > 1:
                    new = {c: v // g2 for c, v in new.items()}
                nxt.append(new)
        pivots.append((col, piv))
        active = nxt
    return pivots


def _int_rank_sparse(rows) -> int:
    return len(_int_forward_echelon(rows))


def _int_kernel_vectors(pivots, cols):
    """Yield kernel vectors one free column at a time (exact back-substitution)."""
    pivot_set = {c for c, _ in pivots}
    for c in range(cols):
        if c in pivot_set:
            continue
        vec = [Fraction(0)] * cols
        vec[c] = Fraction(1)
        for pc, row in reversed(pivots):
            s = Fraction(0)
            for cc, v in row.items():
                if cc > pc and vec[cc]:
                    s += v * vec[cc]
            if s:
                vec[pc] = -s / row[pc]
        yield vec


def _int_kernel_basis(rows, cols):
    """Kernel basis via integer forward echelon plus exact back-substitution."""
    return list(_int_kernel_vectors(_int_forward_echelon(rows), cols))


def _field_echelon(field, rows, aug=None):
    """In-place sparse row echelon over a field.

    rows: list of col->value dicts.  aug: optional parallel list of
    augmentation dicts carried through the same row operations.
    Returns list of (pivot_col, row_index) in elimination order.
    """
    pivots = []
    nrows = len(rows)
    used = [False] * nrows
    while True:
        col = None
        for i in range(nrows):
            if not used[i] and rows[i]:
                c = min(rows[i])
                if col is None or c < col:
                    col = c
        if col is None:
            break
        pr = None
        for i in range(nrows):
            if not used[i] and rows[i].get(col) is not None:
                pr = i
                break
        pv = rows[pr][col]
        inv = field.inv(pv)
        rows[pr] = {c: field.mul(v, inv) for c, v in rows[pr].items()}
        if aug is not None:
            aug[pr] = {c: field.mul(v, inv) for c, v in aug[pr].items()}
        for i in range(nrows):
            if i == pr:
                continue
            rv = rows[i].get(col)
            if rv is None:
                continue
            new = dict(rows[i])
            for c, v in rows[pr].items():
                w = field.sub(new.get(c, field.zero), field.mul(rv, v))
                if w == field.zero:
                    new.pop(c, None)
                else:
                    new[c] = w
            rows[i] = new
            if aug is not None:
                newa = dict(aug[i])
                for c, v in aug[pr].items():
                    w = field.sub(newa.get(c, field.zero), field.mul(rv, v))
                    if w == field.zero:
                        newa.pop(c, None)
                    else:
                        newa[c] = w
                aug[i] = newa
        used[pr] = True
        pivots.append((col, pr))
    return pivots


def _field_rank_dense(field, lists) -> int:
    nrows = len(lists)
    ncols = len(lists[0]) if nrows else 0
    rank = 0
    row = 0
    for col in range(ncols):
        pr = None
        for i in range(row, nrows):
            if lists[i][col] != field.zero:
                pr = i
                break
        if pr is None:
            continue
        lists[row], lists[pr] = lists[pr], lists[row]
        pv = lists[row][col]
        inv = field.inv(pv)
        prow = lists[row]
        for i in range(row + 1, nrows):
            rv = lists[i][col]
            if rv == field.zero:
                continue
            factor = field.mul(rv, inv)
            irow = lists[i]
            for c in range(col, ncols):
                if prow[c] != field.zero:
                    irow[c] = field.sub(irow[c], field.mul(factor, prow[c]))
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def rank(m: Matrix) -> int:
    """Exact rank."""
    int_rows = _integral_int_rows(m)
    if int_rows is not None:
        return _int_rank_sparse(int_rows)
    if m.density() > DENSE_THRESHOLD:
        return _field_rank_dense(m.field, m.to_lists())
    rows = [r for r in m.row_dicts() if r]
    return len(_field_echelon(m.field, rows))


def rref(m: Matrix):
    """Reduced row echelon form as (row dicts, pivot list sorted by column)."""
    rows = m.row_dicts()
    pivots = _field_echelon(m.field, rows)
    pivots.sort()
    return rows, pivots


def kernel_basis(m: Matrix):
    """Exact basis of the null space, as column vectors (lists), one per free column."""
    int_rows = _integral_int_rows(m)
    if int_rows is not None:
        return _int_kernel_basis(int_rows, m.cols)
    f = m.field
    rows, pivots = rref(m)
    pivot_cols = {c: r for c, r in pivots}
    basis = []
    for c in range(m.cols):
        if c in pivot_cols:
            continue
        vec = [f.zero] * m.cols
        vec[c] = f.one
        for pc, pr in pivots:
            v = rows[pr].get(c)
            if v is not None:
                vec[pc] = f.neg(v)
        basis.append(vec)
    return basis


def solve(m: Matrix, b: list):
    """Solve m x = b exactly; returns a solution vector or None if inconsistent."""
    if len(b) != m.rows:
        raise ValueError("dimension mismatch between matrix and right-hand side")
    int_rows = _integral_int_rows(m)
    if int_rows is not None and all(isinstance(v, Fraction) and v.denominator == 1
                                    for v in b):
        sent = m.cols
        for r, row in enumerate(int_rows):
            if b[r]:
                row[sent] = -b[r].numerator
        pivots = _int_forward_echelon(int_rows)
        if any(pc == sent for pc, _ in pivots):
            return None
        x = [Fraction(0)] * m.cols
        for pc, row in reversed(pivots):
            s = Fraction(row.get(sent, 0))
            for cc, v in row.items():
                if cc != sent and cc > pc and x[cc]:
                    s += v * x[cc]
            if s:
                x[pc] = -s / row[pc]
        return x
    f = m.field
    rows = m.row_dicts()
    aug = [({0: v} if v != f.zero else {}) for v in b]
    pivots = _field_echelon(f, rows, aug)
    pivot_rows = {r for _, r in pivots}
    for i in range(m.rows):
        if i not in pivot_rows and aug[i]:
            return None
    x = [f.zero] * m.cols
    for c, r in pivots:
        x[c] = aug[r].get(0, f.zero)
    return x


class IntSpan:
    """Fraction-free incremental integer row space (first-position pivots)."""

    __slots__ = ("rows",)

    def __init__(self):
        self.rows: dict[int, dict] = {}

    def add(self, vec: dict) -> bool:
        """Insert an integer vector; returns True when the span grew."""
        vec = {k: v for k, v in vec.items() if v}
        while vec:
            c = min(vec)
            row = self.rows.get(c)
            if row is None:
                g = 0
                for v in vec.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    vec = {k: v // g for k, v in vec.items()}
                self.rows[c] = vec
                return True
            a, b = row[c], vec[c]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {}
            for cc in vec.keys() | row.keys():
                w = vec.get(cc, 0) * fa - row.get(cc, 0) * fb
                if w:
                    new[cc] = w
            vec = new
        return False


class IncrementalSpan:
    """A row space grown one vector at a time, kept in reduced echelon form.

    Deterministic: pivots at the first nonzero position.  Used to pick
    cohomology representatives independent modulo a boundary space.
    """

    def __init__(self, field):
        self.field = field
        self.rows: dict[int, dict] = {}

    def _reduce(self, vec: dict):
        f = self.field
        vec = {k: v for k, v in vec.items() if v != f.zero}
        while vec:
            c = min(vec)
            row = self.rows.get(c)
            if row is None:
                return vec, c
            coef = vec[c]
            for cc, v in row.items():
                w = f.sub(vec.get(cc, f.zero), f.mul(coef, v))
                if w == f.zero:
                    vec.pop(cc, None)
                else:
                    vec[cc] = w
        return {}, None

    def contains(self, vec: dict) -> bool:
        residue, _ = self._reduce(vec)
        return not residue

    def add(self, vec: dict) -> bool:
        """Insert a vector; returns True when the span grew."""
        residue, c = self._reduce(vec)
        if c is None:
            return False
        f = self.field
        inv = f.inv(residue[c])
        self.rows[c] = {cc: f.mul(inv, v) for cc, v in residue.items()}
        return True


def solve_many(m: Matrix, rhs: "Matrix"):
    """Solve m X = rhs columnwise; returns Matrix X or None if any column is inconsistent."""
    if rhs.rows != m.rows:
        raise ValueError("dimension mismatch between matrix and right-hand sides")
    f = m.field
    rows = m.row_dicts()
    aug = [dict() for _ in range(m.rows)]
    for (r, c), v in rhs.entries.items():
        aug[r][c] = v
    pivots = _field_echelon(f, rows, aug)
    pivot_rows = {r for _, r in pivots}
    for i in range(m.rows):
        if i not in pivot_rows and aug[i]:
            return None
    ent = {}
    for c, r in pivots:
        for j, v in aug[r].items():
            if v != f.zero:
                ent[(c, j)] = v
    return Matrix(f, m.cols, rhs.cols, ent)
