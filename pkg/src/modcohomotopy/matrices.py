"""Exact integer matrices, Smith normal form, and lattice utilities.

All arithmetic uses Python ints, so entries never overflow.  The Smith
normal form here is the workhorse behind every cohomology group, kernel,
cokernel and subgroup computation in the package.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd


class IntMatrix:
    """Immutable integer matrix, stored row-major.

    >>> IntMatrix.from_rows([[1, 2], [3, 4]]).entry(1, 0)
    3
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows, cols, entries):
        rows = int(rows)
        cols = int(cols)
        data = tuple(int(e) for e in entries)
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(data) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(data)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0:
            return cls(0, 0 if cols is None else cols, [])
        m = len(rows[0])
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return cls(n, m, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def diagonal(cls, entries, rows=None, cols=None):
        entries = list(entries)
        n = len(entries)
        rows = n if rows is None else rows
        cols = n if cols is None else cols
        data = [0] * (rows * cols)
        for i, e in enumerate(entries):
            if i < rows and i < cols:
                data[i * cols + i] = e
        return cls(rows, cols, data)

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [list(c) for c in columns]
        if not columns:
            return cls(0 if rows is None else rows, 0, [])
        n = len(columns[0])
        if any(len(c) != n for c in columns):
            raise ValueError("ragged columns")
        return cls(n, len(columns),
                   [columns[j][i] for i in range(n) for j in range(len(columns))])

    def entry(self, i, j):
        return self._data[i * self.cols + j]

    def row(self, i):
        return self._data[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return tuple(self._data[i * self.cols + j] for i in range(self.rows))

    def row_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self):
        return [list(self.column(j)) for j in range(self.cols)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_zero(self):
        return all(e == 0 for e in self._data)

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         [self.entry(i, j) for j in range(self.cols) for i in range(self.rows)])

    def __mul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} * {other.shape}")
            out = [0] * (self.rows * other.cols)
            for i in range(self.rows):
                ri = self.row(i)
                base = i * other.cols
                for k, a in enumerate(ri):
                    if a:
                        rk = other.row(k)
                        for j, b in enumerate(rk):
                            if b:
                                out[base + j] += a * b
            return IntMatrix(self.rows, other.cols, out)
        return NotImplemented

    def apply(self, vector):
        """Matrix times column vector, returned as a list."""
        vector = list(vector)
        if len(vector) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum(a * b for a, b in zip(self.row(i), vector)) for i in range(self.rows)]

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        rows = [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)]
        return IntMatrix.from_rows(rows, cols=self.cols + other.cols)

    def map_entries(self, fn):
        return IntMatrix(self.rows, self.cols, [fn(e) for e in self._data])

    def mod(self, m):
        return self.map_entries(lambda e: e % m)

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.shape == other.shape
                and self._data == other._data)

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __iter__(self):
        for i in range(self.rows):
            yield self.row(i)

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols}, {list(map(list, self))})"


class SmithDecomposition:
    """U * M * V = S with U, V unimodular and S = diag(d1 | d2 | ...).

    ``u_inv`` and ``v_inv`` are tracked during the reduction, so
    M = u_inv * S * v_inv exactly.
    """

    __slots__ = ("matrix", "u", "s", "v", "u_inv", "v_inv", "diagonal")

    def __init__(self, matrix, u, s, v, u_inv, v_inv):
        self.matrix = matrix
        self.u = u
        self.s = s
        self.v = v
        self.u_inv = u_inv
        self.v_inv = v_inv
        diag = []
        for i in range(min(s.rows, s.cols)):
            d = s.entry(i, i)
            if d == 0:
                break
            diag.append(d)
        self.diagonal = tuple(diag)

    @property
    def rank(self):
        return len(self.diagonal)

    def diag_padded(self, n):
        """First n diagonal entries, padding with zeros."""
        d = list(self.diagonal)
        return d[:n] + [0] * max(0, n - len(d))


def smith_normal_form(m):
    """Smith normal form with deterministic minimal-pivot reduction.

    Pivots are chosen with minimal absolute value, ties broken by row
    then column order, so the output is reproducible.

    >>> snf = smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]]))
    >>> list(snf.diagonal)
    [2, 4]
    """
    nr, nc = m.rows, m.cols
    s = m.row_lists()
    u = IntMatrix.identity(nr).row_lists()
    ui = IntMatrix.identity(nr).row_lists()
    v = IntMatrix.identity(nc).row_lists()
    vi = IntMatrix.identity(nc).row_lists()

    def row_swap(a, b):
        s[a], s[b] = s[b], s[a]
        u[a], u[b] = u[b], u[a]
        for r in ui:
            r[a], r[b] = r[b], r[a]

    def col_swap(a, b):
        for r in s:
            r[a], r[b] = r[b], r[a]
        for r in v:
            r[a], r[b] = r[b], r[a]
        vi[a], vi[b] = vi[b], vi[a]

    def row_negate(a):
        s[a] = [-x for x in s[a]]
        u[a] = [-x for x in u[a]]
        for r in ui:
            r[a] = -r[a]

    def row_add(a, b, k):
        # row a += k * row b
        sa, sb = s[a], s[b]
        for j in range(nc):
            sa[j] += k * sb[j]
        ua, ub = u[a], u[b]
        for j in range(nr):
            ua[j] += k * ub[j]
        for r in ui:
            r[b] -= k * r[a]

    def col_add(a, b, k):
        # col a += k * col b
        for r in s:
            r[a] += k * r[b]
        for r in v:
            r[a] += k * r[b]
        vb, va = vi[b], vi[a]
        for j in range(nc):
            vb[j] -= k * va[j]

    t = 0
    limit = min(nr, nc)
    while t < limit:
        # minimal |entry| pivot in the trailing block, row-then-column ties
        pivot = None
        best = None
        for i in range(t, nr):
            si = s[i]
            for j in range(t, nc):
                a = abs(si[j])
                if a and (best is None or a < best):
                    best = a
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            row_swap(t, pi)
        if pj != t:
            col_swap(t, pj)
        if s[t][t] < 0:
            row_negate(t)

        dirty = False
        d = s[t][t]
        for i in range(t + 1, nr):
            if s[i][t]:
                row_add(i, t, -(s[i][t] // d))
                if s[i][t]:
                    dirty = True
        for j in range(t + 1, nc):
            if s[t][j]:
                col_add(j, t, -(s[t][j] // d))
                if s[t][j]:
                    dirty = True
        if dirty:
            continue

        d = s[t][t]
        offender = None
        for i in range(t + 1, nr):
            si = s[i]
            for j in range(t + 1, nc):
                if si[j] % d:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_add(t, offender, 1)
            continue
        t += 1

    return SmithDecomposition(
        m,
        IntMatrix.from_rows(u, cols=nr),
        IntMatrix.from_rows(s, cols=nc),
        IntMatrix.from_rows(v, cols=nc),
        IntMatrix.from_rows(ui, cols=nr),
        IntMatrix.from_rows(vi, cols=nc),
    )


class LinearSolver:
    """Solves A x = b over the integers, reusing one Smith decomposition."""

    def __init__(self, a):
        self.a = a
        self.snf = smith_normal_form(a)

    def solve(self, b):
        """One integer solution of A x = b, or None if none exists."""
        b = list(b)
        if len(b) != self.a.rows:
            raise ValueError("rhs length mismatch")
        c = self.snf.u.apply(b)
        diag = self.snf.diagonal
        y = [0] * self.a.cols
        for i, ci in enumerate(c):
            if i < len(diag):
                if ci % diag[i]:
                    return None
                if i < self.a.cols:
                    y[i] = ci // diag[i]
            elif ci != 0:
                return None
        return self.snf.v.apply(y)

    def contains(self, b):
        """Whether b lies in the column lattice of A."""
        return self.solve(b) is not None


def kernel_basis(a):
    """Columns spanning {x : A x = 0} as a saturated lattice."""
    snf = smith_normal_form(a)
    rank = snf.rank
    return [list(snf.v.column(j)) for j in range(rank, a.cols)]


def column_lattice_basis(a):
    """Basis of the lattice spanned by the columns of A."""
    snf = smith_normal_form(a)
    cols = []
    for i, d in enumerate(snf.diagonal):
        cols.append([d * e for e in snf.u_inv.column(i)])
    return cols


def determinant(a):
    """Exact integer determinant (Bareiss elimination)."""
    if a.rows != a.cols:
        raise ValueError("determinant of non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = a.row_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if m[i][k]), None)
            if pivot_row is None:
                return 0
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def minors_gcd(a, k):
    """gcd of all k x k minors (the k-th determinantal divisor)."""
    if k <= 0:
        return 1
    g = 0
    for rows in combinations(range(a.rows), k):
        for cols in combinations(range(a.cols), k):
            sub = IntMatrix.from_rows(
                [[a.entry(i, j) for j in cols] for i in rows], cols=k)
            g = gcd(g, determinant(sub))
            if g == 1:
                return 1
    return g
