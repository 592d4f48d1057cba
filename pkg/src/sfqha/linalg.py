"""Exact sparse linear algebra over Q(zeta8).

Vectors and rows are dicts column -> CycScalar.  Row reduction keeps the
pivot rows in reduced echelon form, with the pivot of each new row chosen
as its smallest column, so results are reproducible.
"""

from __future__ import annotations

from collections.abc import Iterable

from .scalars import ONE, CycScalar


def _axpy(row: dict, factor: CycScalar, other: dict) -> None:
    """row -= factor * other, in place, dropping zeros."""
    for c, v in other.items():
        old = row.get(c)
        new = -(factor * v) if old is None else old - factor * v
        if new.is_zero():
            row.pop(c, None)
        else:
            row[c] = new


class RowReducer:
    """Incremental reduced row echelon form."""

    def __init__(self):
        self.pivots: dict[int, dict] = {}
        self._col_rows: dict[int, set] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = {c: v for c, v in row.items() if not v.is_zero()}
        hits = [c for c in row if c in self.pivots]
        for c in hits:
            f = row.get(c)
            if f is not None:
                _axpy(row, f, self.pivots[c])
        return row

    def add(self, row: dict) -> bool:
        """Add a row; returns True if it raised the rank."""
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = row[p].inverse()
        if inv != ONE:
            row = {c: v * inv for c, v in row.items()}
        # clear column p from the existing pivot rows
        for q in list(self._col_rows.get(p, ())):
            prow = self.pivots[q]
            f = prow.get(p)
            if f is not None:
                before = set(prow)
                _axpy(prow, f, row)
                self._reindex(q, before, prow)
        self._col_rows.pop(p, None)
        self.pivots[p] = row
        for c in row:
            if c != p:
                self._col_rows.setdefault(c, set()).add(p)
        return True

    def _reindex(self, q: int, before: set, after: dict) -> None:
        for c in before - set(after):
            s = self._col_rows.get(c)
            if s is not None:
                s.discard(q)
        for c in set(after) - before:
            if c != q:
                self._col_rows.setdefault(c, set()).add(q)

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def nullspace(self, ncols: int | Iterable[int]) -> list[dict]:
        cols = range(ncols) if isinstance(ncols, int) else ncols
        free = [c for c in cols if c not in self.pivots]
        basis = []
        for f in free:
            vec = {f: ONE}
            for p, row in self.pivots.items():
                v = row.get(f)
                if v is not None:
                    vec[p] = -v
            basis.append(vec)
        return basis


def rank(rows: Iterable[dict]) -> int:
    rr = RowReducer()
    for r in rows:
        rr.add(r)
    return rr.rank


def nullspace(rows: Iterable[dict], ncols: int) -> list[dict]:
    rr = RowReducer()
    for r in rows:
        rr.add(r)
    return rr.nullspace(ncols)


def solve(rows: list[dict], rhs: list[CycScalar], ncols: int) -> dict | None:
    """One solution x of rows . x = rhs, or None if inconsistent."""
    rr = RowReducer()
    aug = ncols
    for r, b in zip(rows, rhs):
        row = dict(r)
        if not b.is_zero():
            row[aug] = b
        rr.add(row)
    if aug in rr.pivots:
        return None
    x = {}
    for p, row in rr.pivots.items():
        v = row.get(aug)
        if v is not None:
            x[p] = v
    return x


def echelon_basis(vectors: Iterable[dict]) -> RowReducer:
    """Row reducer holding a reduced basis of span(vectors)."""
    rr = RowReducer()
    for v in vectors:
        rr.add(v)
    return rr


def inverse(m: Matrix) -> Matrix:
    """Exact inverse of a square matrix by Gauss-Jordan on [m | I]."""
    from .errors import DivisionByZero
    n = m.nrows
    rr = RowReducer()
    for i in range(n):
        row = dict(m.rows.get(i, {}))
        row[n + i] = ONE
        rr.add(row)
    if any(p not in rr.pivots for p in range(n)):
        raise DivisionByZero("matrix is singular")
    rows = {}
    for i in range(n):
        r = {c - n: v for c, v in rr.pivots[i].items() if c >= n}
        if r:
            rows[i] = r
    return Matrix(n, n, rows)


class Matrix:
    """Sparse square-or-rectangular matrix as dict row -> dict col -> scalar."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: dict | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows or {}

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, {i: {i: ONE} for i in range(n)})

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> Matrix:
        return cls(n, n if m is None else m, {})

    @classmethod
    def from_dense(cls, data) -> Matrix:
        rows = {}
        n = len(data)
        m = len(data[0]) if n else 0
        for i, r in enumerate(data):
            d = {j: CycScalar.coerce(v) for j, v in enumerate(r) if CycScalar.coerce(v)}
            if d:
                rows[i] = d
        return cls(n, m, rows)

    def entry(self, i: int, j: int) -> CycScalar:
        from .scalars import ZERO
        return self.rows.get(i, {}).get(j, ZERO)

    def dense(self) -> list[list[CycScalar]]:
        from .scalars import ZERO
        return [[self.rows.get(i, {}).get(j, ZERO) for j in range(self.ncols)]
                for i in range(self.nrows)]

    def __matmul__(self, other: Matrix) -> Matrix:
        out = {}
        orows = other.rows
        for i, r in self.rows.items():
            acc: dict = {}
            for k, a in r.items():
                ok = orows.get(k)
                if not ok:
                    continue
                for j, b in ok.items():
                    old = acc.get(j)
                    v = a * b
                    acc[j] = v if old is None else old + v
            acc = {j: v for j, v in acc.items() if not v.is_zero()}
            if acc:
                out[i] = acc
        return Matrix(self.nrows, other.ncols, out)

    def __add__(self, other: Matrix) -> Matrix:
        out = {i: dict(r) for i, r in self.rows.items()}
        for i, r in other.rows.items():
            row = out.setdefault(i, {})
            for j, v in r.items():
                old = row.get(j)
                nv = v if old is None else old + v
                if nv.is_zero():
                    row.pop(j, None)
                else:
                    row[j] = nv
        return Matrix(self.nrows, self.ncols, {i: r for i, r in out.items() if r})

    def __sub__(self, other: Matrix) -> Matrix:
        return self + other.scale(CycScalar(-1))

    def scale(self, c) -> Matrix:
        c = CycScalar.coerce(c)
        if c.is_zero():
            return Matrix(self.nrows, self.ncols, {})
        return Matrix(self.nrows, self.ncols,
                      {i: {j: v * c for j, v in r.items()} for i, r in self.rows.items()})

    def apply(self, vec: dict) -> dict:
        """Matrix times column vector (dict index -> scalar)."""
        out = {}
        for i, r in self.rows.items():
            acc = None
            for j, a in r.items():
                x = vec.get(j)
                if x is not None:
                    acc = a * x if acc is None else acc + a * x
            if acc is not None and not acc.is_zero():
                out[i] = acc
        return out

    def column(self, j: int) -> dict:
        return {i: r[j] for i, r in self.rows.items() if j in r}

    def trace(self) -> CycScalar:
        from .scalars import ZERO
        t = ZERO
        for i, r in self.rows.items():
            v = r.get(i)
            if v is not None:
                t = t + v
        return t

    def is_zero(self) -> bool:
        return not any(self.rows.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        a = {i: r for i, r in self.rows.items() if r}
        b = {i: r for i, r in other.rows.items() if r}
        return self.nrows == other.nrows and self.ncols == other.ncols and a == b

    __hash__ = None

    def transpose(self) -> Matrix:
        out: dict = {}
        for i, r in self.rows.items():
            for j, v in r.items():
                out.setdefault(j, {})[i] = v
        return Matrix(self.ncols, self.nrows, out)

    def to_json(self) -> list:
        return [[x.to_json() for x in row] for row in self.dense()]

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, nnz={sum(len(r) for r in self.rows.values())})"
