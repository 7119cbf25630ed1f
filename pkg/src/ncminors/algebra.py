"""Finite-dimensional associative unital algebras given by structure constants.

An :class:`Algebra` of dimension n stores, for each ordered pair of basis
elements, the sparse expansion of their product.  Elements are coordinate
vectors; :class:`AlgebraElement` wraps one together with its parent.

Structural computations (radical, center, primitive idempotents, quotients,
subalgebras) live here as module-level functions.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .errors import (AssociativityViolation, NonBasicTop, NotAnIdeal, ParentMismatch,
                     UnitViolation)
from .exactla import (ONE, ZERO, CoordinateSystem, EchelonBasis, Mat, Q, kernel_basis,
                      to_q)


Vec = list  # coordinate vector of mpq


class Algebra:
    """Associative unital algebra with basis b_0..b_{n-1}.

    ``table[i][j]`` is a tuple of ``(k, c)`` pairs meaning b_i b_j = sum c b_k.
    Optional ``hints`` record facts known from the construction (vertex
    idempotents, generators, path representatives) so later computations can
    reuse them instead of rediscovering them.
    """

    def __init__(self, labels: Sequence[str], table, unit: Sequence, name: str = "",
                 hints: dict | None = None, validate: bool = True):
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.table = table
        self.unit = [to_q(x) for x in unit]
        self.name = name
        self.hints = dict(hints or {})
        self._cache: dict = {}
        if len(self.unit) != self.dim:
            raise ValueError("unit vector has wrong length")
        if validate:
            check_axioms(self)

    # -- construction helpers -------------------------------------------------
    @classmethod
    def from_dense(cls, labels, tensor, unit, **kw) -> "Algebra":
        n = len(labels)
        table = [[tuple((k, to_q(tensor[i][j][k])) for k in range(n) if tensor[i][j][k])
                  for j in range(n)] for i in range(n)]
        return cls(labels, table, unit, **kw)

    @classmethod
    def from_entries(cls, labels, entries: Iterable[tuple[int, int, int, object]], unit,
                     **kw) -> "Algebra":
        n = len(labels)
        acc: list[list[dict]] = [[{} for _ in range(n)] for _ in range(n)]
        for i, j, k, v in entries:
            v = to_q(v)
            d = acc[i][j]
            d[k] = d.get(k, ZERO) + v
        table = [[tuple(sorted((k, v) for k, v in acc[i][j].items() if v)) for j in range(n)]
                 for i in range(n)]
        return cls(labels, table, unit, **kw)

    @classmethod
    def from_products(cls, labels, product, unit, **kw) -> "Algebra":
        """Build from a function ``product(i, j) -> coordinate vector``."""
        n = len(labels)
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                v = product(i, j)
                row.append(tuple((k, to_q(x)) for k, x in enumerate(v) if x))
            table.append(row)
        return cls(labels, table, unit, **kw)

    # -- arithmetic on coordinate vectors ---------------------------------------
    def mul(self, x: Sequence, y: Sequence) -> Vec:
        out = [ZERO] * self.dim
        ynz = [(j, b) for j, b in enumerate(y) if b]
        if not ynz:
            return out
        table = self.table
        for i, a in enumerate(x):
            if not a:
                continue
            row = table[i]
            for j, b in ynz:
                ab = a * b
                for k, c in row[j]:
                    out[k] += ab * c
        return out

    def basis_vec(self, i: int) -> Vec:
        v = [ZERO] * self.dim
        v[i] = ONE
        return v

    def zero_vec(self) -> Vec:
        return [ZERO] * self.dim

    def structure_constant(self, i: int, j: int, k: int):
        for kk, c in self.table[i][j]:
            if kk == k:
                return c
        return ZERO

    def dense_tensor(self) -> list:
        n = self.dim
        t = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for k, c in self.table[i][j]:
                    t[i][j][k] = c
        return t

    def entries(self) -> list[tuple[int, int, int, object]]:
        return [(i, j, k, c) for i in range(self.dim) for j in range(self.dim)
                for k, c in self.table[i][j]]

    # -- elements -------------------------------------------------------------
    def element(self, coords: Sequence) -> "AlgebraElement":
        return AlgebraElement(self, [to_q(x) for x in coords])

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, list(self.unit))

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, self.zero_vec())

    def basis_element(self, i: int) -> "AlgebraElement":
        return AlgebraElement(self, self.basis_vec(i))

    def basis(self) -> list["AlgebraElement"]:
        return [self.basis_element(i) for i in range(self.dim)]

    def by_label(self, label: str) -> "AlgebraElement":
        try:
            return self.basis_element(self.labels.index(label))
        except ValueError:
            raise KeyError(f"no basis element labelled {label!r}") from None

    # -- regular actions --------------------------------------------------------
    def left_mult(self, i: int) -> Mat:
        """Matrix of x -> b_i x (column j holds b_i b_j)."""
        key = ("L", i)
        if key not in self._cache:
            m = Mat.zeros(self.dim, self.dim)
            for j in range(self.dim):
                for k, c in self.table[i][j]:
                    m.data[k][j] = c
            self._cache[key] = m
        return self._cache[key]

    def right_mult(self, i: int) -> Mat:
        """Matrix of x -> x b_i (column j holds b_j b_i)."""
        key = ("R", i)
        if key not in self._cache:
            m = Mat.zeros(self.dim, self.dim)
            for j in range(self.dim):
                for k, c in self.table[j][i]:
                    m.data[k][j] = c
            self._cache[key] = m
        return self._cache[key]

    def left_mult_by(self, x: Sequence) -> Mat:
        m = Mat.zeros(self.dim, self.dim)
        for i, a in enumerate(x):
            if a:
                for j in range(self.dim):
                    for k, c in self.table[i][j]:
                        m.data[k][j] += a * c
        return m

    def right_mult_by(self, x: Sequence) -> Mat:
        m = Mat.zeros(self.dim, self.dim)
        for i, a in enumerate(x):
            if a:
                for j in range(self.dim):
                    for k, c in self.table[j][i]:
                        m.data[k][j] += a * c
        return m

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(i + 1, n))

    def format_vec(self, v: Sequence) -> str:
        return format_combination(v, self.labels)

    def __repr__(self) -> str:
        nm = f" {self.name}" if self.name else ""
        return f"<Algebra{nm} dim={self.dim}>"


def format_combination(v: Sequence, labels: Sequence[str]) -> str:
    parts = []
    for x, lab in zip(v, labels):
        if not x:
            continue
        if x == 1:
            term = lab
        elif x == -1:
            term = "-" + lab
        else:
            term = f"{x}*{lab}"
        parts.append(term)
    if not parts:
        return "0"
    s = parts[0]
    for p in parts[1:]:
        s += " - " + p[1:] if p.startswith("-") else " + " + p
    return s


class AlgebraElement:
    __slots__ = ("parent", "coords")

    def __init__(self, parent: Algebra, coords: list):
        if len(coords) != parent.dim:
            raise ValueError("coordinate vector has wrong length")
        self.parent = parent
        self.coords = coords

    def _check(self, other: "AlgebraElement") -> None:
        if not isinstance(other, AlgebraElement) or other.parent is not self.parent:
            raise ParentMismatch("elements belong to different algebras")

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return AlgebraElement(self.parent, self.parent.mul(self.coords, other.coords))
        c = to_q(other)
        return AlgebraElement(self.parent, [c * x for x in self.coords])

    def __rmul__(self, other):
        c = to_q(other)
        return AlgebraElement(self.parent, [c * x for x in self.coords])

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.parent, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.parent, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.parent, [-a for a in self.coords])

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgebraElement) and other.parent is self.parent
                and other.coords == self.coords)

    def __hash__(self):
        return hash(tuple(self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_idempotent(self) -> bool:
        return self.parent.mul(self.coords, self.coords) == self.coords

    def __repr__(self) -> str:
        return self.parent.format_vec(self.coords)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    return a * b


def check_axioms(alg: Algebra) -> None:
    """Raise on the first associativity or unit failure, naming the indices."""
    n = alg.dim
    u = alg.unit
    for i in range(n):
        e = alg.basis_vec(i)
        if alg.mul(u, e) != e or alg.mul(e, u) != e:
            raise UnitViolation(i)
    table = alg.table
    for i in range(n):
        for j in range(n):
            bij = table[i][j]
            for l in range(n):
                lhs: dict = {}
                for k, c in bij:
                    for m, d in table[k][l]:
                        lhs[m] = lhs.get(m, ZERO) + c * d
                rhs: dict = {}
                for k, c in table[j][l]:
                    for m, d in table[i][k]:
                        rhs[m] = rhs.get(m, ZERO) + c * d
                if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                    raise AssociativityViolation(i, j, l)


def algebra_from_structure_constants(labels, tensor, unit, name: str = "") -> Algebra:
    """Validated algebra from a dense n x n x n tensor c[i][j][k]."""
    n = len(labels)
    if len(tensor) != n or any(len(r) != n or any(len(c) != n for c in r) for r in tensor):
        raise ValueError("tensor must have shape n x n x n")
    return Algebra.from_dense(labels, tensor, unit, name=name)


def opposite(a: Algebra) -> Algebra:
    """The opposite algebra; cached so repeated calls return the same object."""
    if "op" in a._cache:
        return a._cache["op"]
    n = a.dim
    table = [[a.table[j][i] for j in range(n)] for i in range(n)]
    hints = {}
    if "idempotents" in a.hints:
        hints["idempotents"] = a.hints["idempotents"]
    op = Algebra(a.labels, table, a.unit, name=f"{a.name}^op" if a.name else "",
                 hints=hints, validate=False)
    a._cache["op"] = op
    op._cache["op"] = a
    return op


class TwoSidedIdeal:
    """Two-sided ideal given by a spanning set of coordinate vectors."""

    def __init__(self, parent: Algebra, vectors: Iterable[Sequence], check: bool = True):
        self.parent = parent
        self._eb = EchelonBasis.from_vectors(vectors, parent.dim)
        if check and not self.is_closed():
            raise NotAnIdeal("subspace is not closed under multiplication by the algebra")

    @classmethod
    def generated_by(cls, parent: Algebra, gens: Iterable[Sequence]) -> "TwoSidedIdeal":
        """Smallest two-sided ideal containing gens (span of b x b')."""
        eb = EchelonBasis(parent.dim)
        todo = []
        for g in gens:
            if eb.add(g):
                todo.append(list(g))
        while todo:
            v = todo.pop()
            for i in range(parent.dim):
                for w in (parent.mul(parent.basis_vec(i), v), parent.mul(v, parent.basis_vec(i))):
                    if eb.add(w):
                        todo.append(w)
        ideal = cls.__new__(cls)
        ideal.parent = parent
        ideal._eb = eb
        return ideal

    @property
    def dim(self) -> int:
        return self._eb.dim

    def basis_vectors(self) -> list[Vec]:
        return self._eb.vectors()

    @property
    def basis(self) -> list[AlgebraElement]:
        return [self.parent.element(v) for v in self.basis_vectors()]

    def echelon(self) -> EchelonBasis:
        return self._eb

    def contains(self, v) -> bool:
        if isinstance(v, AlgebraElement):
            v = v.coords
        return self._eb.contains(v)

    def is_closed(self) -> bool:
        p = self.parent
        for v in self.basis_vectors():
            for i in range(p.dim):
                b = p.basis_vec(i)
                if not self._eb.contains(p.mul(b, v)) or not self._eb.contains(p.mul(v, b)):
                    return False
        return True

    def product(self, other: "TwoSidedIdeal") -> "TwoSidedIdeal":
        """The ideal spanned by products xy (it is two-sided automatically)."""
        p = self.parent
        vecs = [p.mul(x, y) for x in self.basis_vectors() for y in other.basis_vectors()]
        return TwoSidedIdeal(p, vecs, check=False)

    def power(self, k: int) -> "TwoSidedIdeal":
        out = self
        for _ in range(k - 1):
            out = out.product(self)
        return out

    def nilpotency_index(self) -> int | None:
        """Least k with I^k = 0, or None if the powers stabilise above 0."""
        if self.dim == 0:
            return 0
        cur, k = self, 1
        while cur.dim:
            nxt = cur.product(self)
            if nxt.dim == cur.dim:
                return None
            cur, k = nxt, k + 1
        return k

    def __eq__(self, other) -> bool:
        return (isinstance(other, TwoSidedIdeal) and other.parent is self.parent
                and self._eb.pivots == other._eb.pivots and self._eb.rows == other._eb.rows)

    def __repr__(self) -> str:
        return f"<TwoSidedIdeal dim={self.dim} of {self.parent!r}>"


class Quotient:
    """B/I with the projection matrix and a linear section.

    The complement basis consists of the basis vectors of B at the non-pivot
    columns of the echelon form of I, so the section is a coordinate inclusion.
    """

    def __init__(self, algebra: Algebra, projection: Mat, columns: list[int]):
        self.algebra = algebra
        self.projection = projection
        self.columns = columns

    def project(self, v: Sequence) -> Vec:
        return self.projection.apply(v)

    def lift(self, v: Sequence, ambient_dim: int) -> Vec:
        out = [ZERO] * ambient_dim
        for c, x in zip(self.columns, v):
            out[c] = to_q(x)
        return out


def quotient_algebra(b: Algebra, ideal: TwoSidedIdeal, name: str = "") -> Quotient:
    """B/I on a complement basis, together with the projection B -> B/I."""
    if ideal.parent is not b:
        raise ParentMismatch("ideal belongs to another algebra")
    eb = ideal.echelon()
    piv = set(eb.pivots)
    cols = [j for j in range(b.dim) if j not in piv]
    m = len(cols)

    def proj(v):
        r = eb.reduce(v)
        return [r[c] for c in cols]

    projection = Mat.zeros(m, b.dim)
    for j in range(b.dim):
        col = proj(b.basis_vec(j))
        for t, x in enumerate(col):
            projection.data[t][j] = x
    table = []
    for f in cols:
        row = []
        for g in cols:
            v = [ZERO] * b.dim
            for k, c in b.table[f][g]:
                v[k] += c
            row.append(tuple((t, x) for t, x in enumerate(proj(v)) if x))
        table.append(row)
    hints = {}
    if "idempotents" in b.hints:
        kept = []
        for lab, vec in b.hints["idempotents"]:
            w = proj(vec)
            if any(w):
                kept.append((lab, w))
        hints["idempotents"] = kept
    if "generators" in b.hints:
        hints["generators"] = [(lab, proj(v)) for lab, v in b.hints["generators"] if any(proj(v))]
    qa = Algebra([b.labels[c] for c in cols], table, proj(b.unit), name=name, hints=hints,
                 validate=False)
    return Quotient(qa, projection, cols)


def subalgebra(parent: Algebra, vectors: Sequence[Sequence], labels: Sequence[str],
               unit: Sequence, name: str = "", hints: dict | None = None) -> tuple[Algebra, CoordinateSystem]:
    """Algebra structure on an independent family of vectors closed under product.

    ``unit`` is the ambient vector acting as identity on the subspace (for a
    corner eBe it is e).  Returns the algebra and the coordinate system used to
    express ambient vectors in the new basis.
    """
    cs = CoordinateSystem(vectors, parent.dim)
    table = []
    for x in vectors:
        row = []
        for y in vectors:
            c = cs.coords(parent.mul(x, y))
            if c is None:
                raise NotAnIdeal("subspace is not closed under multiplication")
            row.append(tuple((k, v) for k, v in enumerate(c) if v))
        table.append(row)
    u = cs.coords(unit)
    if u is None:
        raise NotAnIdeal("unit does not lie in the subspace")
    return Algebra(labels, table, u, name=name, hints=hints, validate=False), cs


def radical(a: Algebra) -> TwoSidedIdeal:
    """Jacobson radical via the characteristic-zero trace form.

    rad A = {x : tr(L_{xy}) = 0 for all y}.  The computation is repeated on the
    quotient until the quotient has zero trace radical.
    """
    if "radical" in a._cache:
        return a._cache["radical"]
    gens: list[Vec] = []
    cur = a
    lift = None  # maps coordinates of cur back to a
    while True:
        r = _trace_radical(cur)
        if not r:
            break
        if lift is None:
            gens.extend(r)
        else:
            gens.extend(lift(v) for v in r)
        ideal = TwoSidedIdeal(a, gens, check=False)
        q = quotient_algebra(a, ideal)
        cur = q.algebra
        lift = (lambda qq: (lambda v: qq.lift(v, a.dim)))(q)
        if cur.dim == 0:
            break
    rad = TwoSidedIdeal(a, gens, check=False)
    a._cache["radical"] = rad
    return rad


def _trace_radical(a: Algebra) -> list[Vec]:
    n = a.dim
    tr = [sum((c for j in range(n) for k, c in a.table[i][j] if k == j), ZERO) for i in range(n)]
    gram = Mat.zeros(n, n)
    for i in range(n):
        for j in range(n):
            gram.data[i][j] = sum((c * tr[k] for k, c in a.table[i][j]), ZERO)
    kb = kernel_basis(gram)
    return kb.columns()


def center(a: Algebra) -> list[AlgebraElement]:
    """Basis of {z : z b = b z for every basis element b}."""
    n = a.dim
    rows = []
    for i in range(n):
        d = a.right_mult(i) - a.left_mult(i)
        rows.extend(d.data)
    m = Mat(len(rows), n, rows)
    from .exactla import rref
    red, piv = rref(kernel_basis(m).transpose())
    return [a.element(red.data[r]) for r in range(len(piv))]


def generators(a: Algebra) -> list[Vec]:
    """A list of elements generating A as a unital algebra."""
    if "generators" in a._cache:
        return a._cache["generators"]
    if "generators" in a.hints:
        gens = [list(v) for _, v in a.hints["generators"]]
    else:
        gens = []
        closure = _closure([], a)
        for i in range(a.dim):
            v = a.basis_vec(i)
            if not closure.contains(v):
                gens.append(v)
                closure = _closure(gens, a)
                if closure.dim == a.dim:
                    break
    a._cache["generators"] = gens
    return gens


def _closure(gens: list[Vec], a: Algebra) -> EchelonBasis:
    eb = EchelonBasis(a.dim)
    frontier = []
    for v in [a.unit] + gens:
        if eb.add(v):
            frontier.append(v)
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = a.mul(v, g)
                if eb.add(w):
                    nxt.append(w)
        frontier = nxt
    return eb


def is_complete_primitive_set(a: Algebra, idems: Sequence[Sequence]) -> bool:
    """Orthogonal idempotents summing to 1, each with 1-dimensional e(A/rad)e.

    Also requires one idempotent per dimension of A/rad, i.e. a basic top.
    """
    n = a.dim
    if len(idems) != n - radical(a).dim:
        return False
    total = [ZERO] * n
    for i, e in enumerate(idems):
        if not any(e):
            return False
        for j, f in enumerate(idems):
            p = a.mul(e, f)
            if p != (list(e) if i == j else [ZERO] * n):
                return False
        total = [x + y for x, y in zip(total, e)]
    if total != a.unit:
        return False
    rad = radical(a)
    for e in idems:
        eb = rad.echelon().copy()
        extra = 0
        for i in range(n):
            if eb.add(a.mul(a.mul(e, a.basis_vec(i)), e)):
                extra += 1
        if extra != 1:
            return False
    return True


def primitive_idempotents(a: Algebra) -> list[AlgebraElement]:
    """Complete set of orthogonal primitive idempotents, for split basic tops."""
    labs, vecs = primitive_idempotent_data(a)
    return [a.element(v) for v in vecs]


def idempotent_labels(a: Algebra) -> list[str]:
    return primitive_idempotent_data(a)[0]


def primitive_idempotent_data(a: Algebra) -> tuple[list[str], list[Vec]]:
    if "prim" in a._cache:
        res = a._cache["prim"]
        if isinstance(res, Exception):
            raise res
        return res
    try:
        res = _find_primitive_idempotents(a)
    except NonBasicTop as exc:
        a._cache["prim"] = exc
        raise
    a._cache["prim"] = res
    return res


def _find_primitive_idempotents(a: Algebra) -> tuple[list[str], list[Vec]]:
    if a.dim == 0:
        return [], []
    if "idempotents" in a.hints:
        labs = [lab for lab, _ in a.hints["idempotents"]]
        vecs = [list(v) for _, v in a.hints["idempotents"]]
        if is_complete_primitive_set(a, vecs):
            return labs, vecs
    # basis elements that already form a complete primitive set
    cand = [i for i in range(a.dim) if a.mul(a.basis_vec(i), a.basis_vec(i)) == a.basis_vec(i)]
    vecs = [a.basis_vec(i) for i in cand]
    if vecs and is_complete_primitive_set(a, vecs):
        return [a.labels[i] for i in cand], vecs
    return _lift_idempotents(a)


def _lift_idempotents(a: Algebra) -> tuple[list[str], list[Vec]]:
    rad = radical(a)
    q = quotient_algebra(a, rad)
    top = q.algebra
    if not top.is_commutative():
        raise NonBasicTop("semisimple quotient is not commutative (has a matrix block)")
    bar = _split_commutative(top)
    n = a.dim
    found: list[Vec] = []
    rest = list(a.unit)
    for k, eb in enumerate(bar):
        if k == len(bar) - 1:
            e = rest
        else:
            x = q.lift(eb, n)
            x = a.mul(a.mul(rest, x), rest)
            e = _newton_idempotent(a, x)
        found.append(e)
        rest = [u - v for u, v in zip(rest, e)]
    labs = []
    for i, e in enumerate(found):
        hit = [j for j in range(n) if e == a.basis_vec(j)]
        labs.append(a.labels[hit[0]] if hit else f"e{i + 1}")
    if len(set(labs)) != len(labs):
        labs = [f"e{i + 1}" for i in range(len(found))]
    return labs, found


def _newton_idempotent(a: Algebra, x: Vec) -> Vec:
    for _ in range(64):
        x2 = a.mul(x, x)
        if x2 == x:
            return x
        x3 = a.mul(x2, x)
        x = [3 * p - 2 * q for p, q in zip(x2, x3)]
    raise ArithmeticError("idempotent lifting did not converge")


def _split_commutative(c: Algebra) -> list[Vec]:
    """Primitive idempotents of a commutative semisimple algebra that is k^m."""
    m = c.dim
    if m == 1:
        return [list(c.unit)]
    rng = random.Random(20240917)
    coeff_sets = [[Q(i + 1) for i in range(m)]]
    for _ in range(24):
        coeff_sets.append([Q(rng.randint(-9, 9)) for _ in range(m)])
    for x in coeff_sets:
        lx = c.left_mult_by(x)
        poly = charpoly(lx)
        roots = rational_roots(poly)
        if sum(mult for _, mult in roots) < m:
            raise NonBasicTop("semisimple quotient does not split over the rationals")
        if len(roots) < m:
            continue
        rs = sorted(r for r, _ in roots)
        idems = []
        for j, rj in enumerate(rs):
            e = list(c.unit)
            for l, rl in enumerate(rs):
                if l == j:
                    continue
                f = [xx / (rj - rl) for xx in x]
                f = [fi - rl / (rj - rl) * ui for fi, ui in zip(f, c.unit)]
                e = c.mul(e, f)
            idems.append(e)
        return idems
    raise NonBasicTop("could not separate the semisimple quotient into simple factors")


def charpoly(m: Mat) -> list:
    """Coefficients [c_0, ..., c_n] of det(tI - m) by Faddeev-LeVerrier."""
    n = m.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    mk = Mat.zeros(n, n)
    ident = Mat.identity(n)
    for k in range(1, n + 1):
        mk = m @ mk + ident.scale(coeffs[n - k + 1])
        amk = m @ mk
        tr = sum((amk.data[i][i] for i in range(n)), ZERO)
        coeffs[n - k] = -tr / k
    return coeffs


def rational_roots(poly: Sequence) -> list[tuple[object, int]]:
    """Distinct rational roots with multiplicities of a rational polynomial."""
    p = [to_q(x) for x in poly]
    while p and not p[-1]:
        p.pop()
    roots: list[tuple[object, int]] = []
    zero_mult = 0
    while len(p) > 1 and not p[0]:
        p.pop(0)
        zero_mult += 1
    if zero_mult:
        roots.append((ZERO, zero_mult))
    if len(p) <= 1:
        return roots
    from math import lcm
    den = 1
    for x in p:
        den = lcm(den, int(x.denominator))
    ints = [int(x * den) for x in p]
    from math import gcd
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    for num in _divisors(abs(ints[0])):
        for dd in _divisors(abs(ints[-1])):
            for sgn in (1, -1):
                r = Q(sgn * num, dd)
                mult = 0
                while len(p) > 1 and _peval(p, r) == 0:
                    p = _deflate(p, r)
                    mult += 1
                if mult:
                    roots.append((r, mult))
    return roots


def _peval(p, x):
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _deflate(p, r):
    n = len(p) - 1
    out = [ZERO] * n
    acc = ZERO
    for i in range(n, 0, -1):
        acc = acc * r + p[i]
        out[i - 1] = acc
    return out


def _divisors(n: int) -> list[int]:
    if n == 0:
        return [0]
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
        if d > 10 ** 6:
            raise NonBasicTop("polynomial coefficients too large for rational root search")
    return small + large[::-1]


def simple_top_dimension(a: Algebra) -> int:
    return a.dim - radical(a).dim


def is_semisimple(a: Algebra) -> bool:
    return radical(a).dim == 0


def is_basic(a: Algebra) -> bool:
    try:
        primitive_idempotent_data(a)
        return True
    except NonBasicTop:
        return False


def parse_idempotent(a: Algebra, text: str) -> Vec:
    """Sum of primitive idempotent labels (or, for non-basic algebras, basis labels)."""
    names = [t.strip() for t in text.split("+")]
    if any(not t for t in names):
        raise ValueError(f"malformed idempotent expression {text!r}")
    try:
        labs, vecs = primitive_idempotent_data(a)
    except NonBasicTop:
        labs, vecs = [], []
    table = dict(zip(labs, vecs))
    out = a.zero_vec()
    seen = set()
    for t in names:
        if t in seen:
            raise ValueError(f"idempotent {t!r} repeated")
        seen.add(t)
        if t in table:
            v = table[t]
        elif t in a.labels and not labs:
            v = a.basis_vec(a.labels.index(t))
        else:
            raise ValueError(f"unknown primitive idempotent {t!r}; known: {', '.join(labs) or 'none'}")
        out = [x + y for x, y in zip(out, v)]
    return out
