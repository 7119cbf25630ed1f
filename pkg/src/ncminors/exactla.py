"""Exact linear algebra over the rationals.

Every scalar in the package is a ``gmpy2.mpq``; nothing here ever rounds.
Matrices are dense (:class:`Mat`), but elimination skips zero entries, which
matters because structure constants of path algebras are overwhelmingly 0.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from gmpy2 import mpq

Q = mpq
ZERO = mpq(0)
ONE = mpq(1)
_MPQ = type(ZERO)


def to_q(x) -> mpq:
    """Coerce an int, str ("p/q"), Fraction or mpq to an exact rational."""
    if type(x) is _MPQ:
        return x
    if isinstance(x, str):
        return mpq(x.strip())
    return mpq(x)


class Mat:
    """Dense rows x cols matrix of exact rationals.

    Treated as immutable: operations return new matrices and never mutate
    ``self.data`` in place.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: list[list[mpq]] | None = None):
        self.rows = rows
        self.cols = cols
        if data is None:
            data = [[ZERO] * cols for _ in range(rows)]
        self.data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Mat":
        data = [[to_q(x) for x in r] for r in rows]
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged rows")
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Mat":
        cols = [[to_q(x) for x in c] for c in columns]
        return cls(rows, len(cols), [[c[i] for c in cols] for i in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Mat":
        data = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            data[i][i] = ONE
        return cls(n, n, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls(rows, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> list[mpq]:
        return list(self.data[i])

    def column(self, j: int) -> list[mpq]:
        return [r[j] for r in self.data]

    def columns(self) -> list[list[mpq]]:
        return [self.column(j) for j in range(self.cols)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(map(tuple, self.data))))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.data)
        return f"Mat({self.rows}x{self.cols}: [{body}])"

    def is_zero(self) -> bool:
        return not any(x for r in self.data for x in r)

    def transpose(self) -> "Mat":
        return Mat(self.cols, self.rows, [list(c) for c in zip(*self.data)] if self.rows else
                   [[] for _ in range(self.cols)])

    T = property(transpose)

    def __add__(self, other: "Mat") -> "Mat":
        _same_shape(self, other)
        return Mat(self.rows, self.cols,
                   [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __sub__(self, other: "Mat") -> "Mat":
        _same_shape(self, other)
        return Mat(self.rows, self.cols,
                   [[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, [[-a for a in r] for r in self.data])

    def scale(self, c) -> "Mat":
        c = to_q(c)
        return Mat(self.rows, self.cols, [[c * a for a in r] for r in self.data])

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        odata = other.data
        out = []
        for r in self.data:
            acc = [ZERO] * other.cols
            for k, a in enumerate(r):
                if a:
                    ok = odata[k]
                    for j, b in enumerate(ok):
                        if b:
                            acc[j] += a * b
            out.append(acc)
        return Mat(self.rows, other.cols, out)

    def apply(self, v: Sequence[mpq]) -> list[mpq]:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        nz = [(k, x) for k, x in enumerate(v) if x]
        if not nz:
            return [ZERO] * self.rows
        return [sum([r[k] * x for k, x in nz], ZERO) for r in self.data]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Mat":
        return Mat(len(rows), len(cols), [[self.data[i][j] for j in cols] for i in rows])

    def rank(self) -> int:
        return len(rref(self)[1])


def _same_shape(a: Mat, b: Mat) -> None:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def block_diag(blocks: Sequence[Mat]) -> Mat:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = Mat.zeros(rows, cols)
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            out.data[r0 + i][c0:c0 + b.cols] = b.data[i]
        r0 += b.rows
        c0 += b.cols
    return out


def hstack(mats: Sequence[Mat], rows: int | None = None) -> Mat:
    if not mats:
        return Mat.zeros(rows or 0, 0)
    n = mats[0].rows
    return Mat(n, sum(m.cols for m in mats),
               [sum((m.data[i] for m in mats), []) for i in range(n)])


def vstack(mats: Sequence[Mat], cols: int | None = None) -> Mat:
    if not mats:
        return Mat.zeros(0, cols or 0)
    c = mats[0].cols
    return Mat(sum(m.rows for m in mats), c, [list(r) for m in mats for r in m.data])


def rref(m: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and the ordered pivot columns (leftmost pivoting)."""
    rows = [list(r) for r in m.data]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        p = next((i for i in range(r, m.rows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = ONE / prow[c]
        prow = [x * inv if x else x for x in prow]
        rows[r] = prow
        nz = [(j, x) for j, x in enumerate(prow) if x]
        for i in range(m.rows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for j, x in nz:
                        ri[j] -= f * x
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return Mat(m.rows, m.cols, rows), pivots


def rank(m: Mat) -> int:
    return len(EchelonBasis.from_vectors(m.data, m.cols))


def kernel_basis(m: Mat) -> Mat:
    """Columns form a basis of the right null space {x : m x = 0}."""
    red = EchelonBasis.from_vectors(m.data, m.cols)
    vecs = red.complement_kernel()
    return Mat.from_columns(vecs, m.cols) if vecs else Mat.zeros(m.cols, 0)


def solve(a: Mat, b: Sequence) -> list[mpq] | None:
    """Some x with a x = b, or None when the system is inconsistent."""
    if len(b) != a.rows:
        raise ValueError("right-hand side length mismatch")
    aug = Mat(a.rows, a.cols + 1, [list(r) + [to_q(x)] for r, x in zip(a.data, b)])
    red, piv = rref(aug)
    if piv and piv[-1] == a.cols:
        return None
    x = [ZERO] * a.cols
    for i, c in enumerate(piv):
        x[c] = red.data[i][a.cols]
    return x


def inverse(m: Mat) -> Mat | None:
    if m.rows != m.cols:
        return None
    n = m.rows
    aug = Mat(n, 2 * n, [list(r) + [ONE if i == j else ZERO for j in range(n)]
                         for i, r in enumerate(m.data)])
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        return None
    return Mat(n, n, [r[n:] for r in red.data])


def is_invertible(m: Mat) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


class EchelonBasis:
    """Incrementally maintained reduced echelon basis of a subspace of Q^n.

    Rows are kept fully reduced against each other, so the coordinates of a
    member vector are read off directly at the pivot positions.
    """

    __slots__ = ("n", "pivots", "rows")

    def __init__(self, n: int):
        self.n = n
        self.pivots: list[int] = []
        self.rows: list[dict[int, mpq]] = []

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[mpq]], n: int) -> "EchelonBasis":
        eb = cls(n)
        for v in vectors:
            eb.add(v)
        return eb

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, v: dict[int, mpq]) -> dict[int, mpq]:
        for p, row in zip(self.pivots, self.rows):
            f = v.get(p)
            if f:
                for j, x in row.items():
                    y = v.get(j, ZERO) - f * x
                    if y:
                        v[j] = y
                    else:
                        v.pop(j, None)
        return v

    def reduce(self, v: Sequence[mpq]) -> list[mpq]:
        d = self._reduce({j: to_q(x) for j, x in enumerate(v) if x})
        out = [ZERO] * self.n
        for j, x in d.items():
            out[j] = x
        return out

    def contains(self, v: Sequence[mpq]) -> bool:
        return not self._reduce({j: to_q(x) for j, x in enumerate(v) if x})

    def add(self, v: Sequence[mpq]) -> bool:
        """Insert v; return True when it enlarged the span."""
        d = self._reduce({j: to_q(x) for j, x in enumerate(v) if x})
        if not d:
            return False
        p = min(d)
        inv = ONE / d[p]
        d = {j: x * inv for j, x in d.items()}
        for row in self.rows:
            f = row.get(p)
            if f:
                for j, x in d.items():
                    y = row.get(j, ZERO) - f * x
                    if y:
                        row[j] = y
                    else:
                        row.pop(j, None)
        # keep rows sorted by pivot for a canonical rref
        k = 0
        while k < len(self.pivots) and self.pivots[k] < p:
            k += 1
        self.pivots.insert(k, p)
        self.rows.insert(k, d)
        return True

    def coords(self, v: Sequence[mpq]) -> list[mpq] | None:
        """Coordinates of v in terms of the echelon rows, or None if v is outside."""
        if not self.contains(v):
            return None
        return [to_q(v[p]) for p in self.pivots]

    def vectors(self) -> list[list[mpq]]:
        out = []
        for row in self.rows:
            v = [ZERO] * self.n
            for j, x in row.items():
                v[j] = x
            out.append(v)
        return out

    def complement_kernel(self) -> list[list[mpq]]:
        """Basis of {x : r . x = 0 for every row r}, one vector per free column."""
        piv = set(self.pivots)
        out = []
        for f in range(self.n):
            if f in piv:
                continue
            x = [ZERO] * self.n
            x[f] = ONE
            for p, row in zip(self.pivots, self.rows):
                c = row.get(f)
                if c:
                    x[p] = -c
            out.append(x)
        return out

    def copy(self) -> "EchelonBasis":
        eb = EchelonBasis(self.n)
        eb.pivots = list(self.pivots)
        eb.rows = [dict(r) for r in self.rows]
        return eb


def span_basis(vectors: Iterable[Sequence[mpq]], n: int) -> list[list[mpq]]:
    """Greedy subset of the given vectors forming a basis of their span (order kept)."""
    eb = EchelonBasis(n)
    out = []
    for v in vectors:
        if eb.add(v):
            out.append([to_q(x) for x in v])
    return out


def greedy_independent(vectors: Sequence[Sequence[mpq]], n: int,
                       start: EchelonBasis | None = None) -> list[int]:
    """Indices of a greedy maximal subset independent modulo ``start``."""
    eb = start.copy() if start is not None else EchelonBasis(n)
    return [i for i, v in enumerate(vectors) if eb.add(v)]


def coordinates_in(basis: Sequence[Sequence[mpq]], v: Sequence[mpq]) -> list[mpq] | None:
    """Solve sum c_i basis_i = v for an independent basis; None if v is not in the span."""
    if not basis:
        return [] if not any(v) else None
    a = Mat.from_columns(basis, len(v))
    return solve(a, v)


class CoordinateSystem:
    """Fast coordinate extraction for a fixed independent family of vectors.

    Precomputes an echelon form of the family together with the change of
    basis, so each lookup is a single reduction.
    """

    def __init__(self, basis: Sequence[Sequence[mpq]], n: int):
        self.n = n
        self.k = len(basis)
        # augment each vector with an identity tag to track combinations
        rows = [list(map(to_q, v)) + [ONE if i == j else ZERO for j in range(self.k)]
                for i, v in enumerate(basis)]
        red, piv = rref(Mat(self.k, n + self.k, rows)) if rows else (Mat(0, n + self.k), [])
        if any(p >= n for p in piv) or len(piv) != self.k:
            raise ValueError("basis vectors are linearly dependent")
        self.pivots = piv
        self.rows = [r[:n] for r in red.data]
        self.tags = [r[n:] for r in red.data]

    def coords(self, v: Sequence[mpq]) -> list[mpq] | None:
        v = [to_q(x) for x in v]
        out = [ZERO] * self.k
        rem = list(v)
        for p, row, tag in zip(self.pivots, self.rows, self.tags):
            f = rem[p]
            if f:
                for j, x in enumerate(row):
                    if x:
                        rem[j] -= f * x
                for j, x in enumerate(tag):
                    if x:
                        out[j] += f * x
        if any(rem):
            return None
        return out


def matvec_rows(rows: Sequence[Sequence[mpq]], v: Sequence[mpq]) -> list[mpq]:
    nz = [(k, x) for k, x in enumerate(v) if x]
    return [sum((r[k] * x for k, x in nz), ZERO) for r in rows]


def vec_add(a: Sequence[mpq], b: Sequence[mpq]) -> list[mpq]:
    return [x + y for x, y in zip(a, b)]


def vec_scale(c, a: Sequence[mpq]) -> list[mpq]:
    return [c * x for x in a]


def fmt_q(x) -> str:
    return str(mpq(x))
