"""Algebras assembled from smaller pieces as 2x2 matrix rings.

* :func:`endomorphism_construction` builds End_A(A + F)^op for a module F,
  in which A sits as the corner at the first summand.
* :func:`subhereditary_glue` builds [[A, H], [I, H]] for a subalgebra A of
  an algebra H with conductor I.
* :func:`triangular_algebra` builds [[Q, E], [0, L]] for a Q-L-bimodule E.
"""

from __future__ import annotations

from typing import Sequence

from .algebra import (Algebra, TwoSidedIdeal, is_semisimple, opposite,
                      primitive_idempotent_data, quotient_algebra)
from .errors import (ActionsDoNotCommute, NonBasicTop, NotAModule, NotMonomorphism,
                     QuotientNotSemisimple)
from .exactla import ZERO, CoordinateSystem, EchelonBasis, Mat, kernel_basis, rank
from .representations import Representation, hom_matrices, regular_module

__all__ = ["endomorphism_construction", "subhereditary_glue", "triangular_algebra",
           "GlueData"]


def _flat(m: Mat) -> list:
    return [x for row in m.data for x in row]


def _embed_block(mat: Mat, rows: int, cols: int, r0: int, c0: int) -> Mat:
    out = Mat.zeros(rows, cols)
    for i, row in enumerate(mat.data):
        for j, x in enumerate(row):
            out.data[r0 + i][c0 + j] = x
    return out


def _idempotent_hints(parts) -> list:
    """Primitive idempotents of block-diagonal pieces, placed in the big algebra."""
    hints = []
    for prefix, alg, place in parts:
        try:
            labs, vecs = primitive_idempotent_data(alg)
        except NonBasicTop:
            return []
        for lab, v in zip(labs, vecs):
            hints.append((prefix + lab, place(v)))
    return hints


def endomorphism_construction(a: Algebra, f: Representation) -> tuple[Algebra, list]:
    """The algebra A_F = End_A(A + F)^op and the idempotent projecting onto A.

    The basis is ordered in four blocks: A (right multiplications, labelled
    as in A), F (maps A -> F, x -> x v), F' = Hom_A(F, A) and E = End_A(F)^op.
    """
    if f.parent is not a:
        raise NotAModule("F must be a module over A")
    reg = regular_module(a)
    n, m = a.dim, f.dim
    size = n + m
    mats, labels = [], []
    # A-part: x -> x b_i on the first summand
    for i in range(n):
        mats.append(_embed_block(a.right_mult(i), size, size, 0, 0))
        labels.append(a.labels[i])
    # F-part: x -> x.v for v running over the basis of F
    for j in range(m):
        block = Mat.zeros(m, n)
        for i in range(n):
            col = f.action[i].column(j)
            for r, x in enumerate(col):
                block.data[r][i] = x
        mats.append(_embed_block(block, size, size, n, 0))
        labels.append(f"f{j + 1}")
    for k, h in enumerate(hom_matrices(f, reg)):
        mats.append(_embed_block(h, size, size, 0, n))
        labels.append(f"g{k + 1}")
    for k, h in enumerate(hom_matrices(f, f)):
        mats.append(_embed_block(h, size, size, n, n))
        labels.append(f"h{k + 1}")
    flat = [_flat(x) for x in mats]
    cs = CoordinateSystem(flat, size * size)

    def product(i, j):
        # opposite multiplication: x * y is "first x, then y"
        c = cs.coords(_flat(mats[j] @ mats[i]))
        if c is None:
            raise ArithmeticError("composite endomorphism outside the computed basis")
        return c

    ident = cs.coords(_flat(Mat.identity(size)))
    big = Algebra.from_products(labels, product, ident,
                                name=f"{a.name}_F" if a.name else "A_F")
    e = cs.coords(_flat(_embed_block(Mat.identity(n), size, size, 0, 0)))
    return big, e


class GlueData:
    """Result of :func:`subhereditary_glue`."""

    def __init__(self, algebra: Algebra, conductor: list, p_idempotent: list, blocks: dict):
        self.algebra = algebra
        self.conductor = conductor        # basis of I, as vectors in A
        self.p_idempotent = p_idempotent  # idempotent [[0,0],[0,1]] cutting out the H-column
        self.blocks = blocks              # block name -> list of basis indices


def _check_inclusion(a: Algebra, h: Algebra, inc: Mat) -> None:
    if inc.shape != (h.dim, a.dim):
        raise NotMonomorphism("inclusion matrix has the wrong shape")
    if rank(inc) != a.dim:
        raise NotMonomorphism("inclusion is not injective")
    if inc.apply(a.unit) != list(h.unit):
        raise NotMonomorphism("inclusion does not preserve the unit")
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = inc.apply(a.mul(a.basis_vec(i), a.basis_vec(j)))
            rhs = h.mul(inc.column(i), inc.column(j))
            if lhs != rhs:
                raise NotMonomorphism(f"inclusion not multiplicative on ({a.labels[i]}, {a.labels[j]})")


def conductor(a: Algebra, h: Algebra, inc: Mat) -> list:
    """Basis (in A-coordinates) of {x in A : H x lies in A}."""
    image = EchelonBasis.from_vectors(inc.columns(), h.dim)
    # x lies in the conductor iff h_i x is in the image for every i; this is
    # linear in x, so solve for the kernel of "component outside the image"
    comp = [c for c in range(h.dim) if c not in set(image.pivots)]
    rows = []
    for i in range(h.dim):
        for c in comp:
            row = []
            for j in range(a.dim):
                v = image.reduce(h.mul(h.basis_vec(i), inc.column(j)))
                row.append(v[c])
            rows.append(row)
    if not rows:
        return [a.basis_vec(j) for j in range(a.dim)]
    ker = kernel_basis(Mat.from_rows(rows, a.dim))
    return EchelonBasis.from_vectors(ker.columns(), a.dim).vectors()


def subhereditary_glue(a: Algebra, h: Algebra, inclusion: Sequence[Sequence] | Mat) -> GlueData:
    """The matrix algebra [[A, H], [I, H]] with I the conductor of A in H.

    ``inclusion`` lists the images of the basis of A in H (one column per
    basis element of A).  A/I must be semisimple.
    """
    inc = inclusion if isinstance(inclusion, Mat) else Mat.from_columns(list(inclusion), h.dim)
    _check_inclusion(a, h, inc)
    cond = conductor(a, h, inc)
    ideal = TwoSidedIdeal(a, cond)
    if not is_semisimple(quotient_algebra(a, ideal).algebra):
        raise QuotientNotSemisimple("A/I is not semisimple")
    ic = [inc.apply(v) for v in cond]   # conductor inside H
    n_a, n_h, n_i = a.dim, h.dim, len(cond)
    blocks = {"A": list(range(n_a)),
              "H12": list(range(n_a, n_a + n_h)),
              "I": list(range(n_a + n_h, n_a + n_h + n_i)),
              "H22": list(range(n_a + n_h + n_i, n_a + 2 * n_h + n_i))}
    labels = ([f"{x}|11" for x in a.labels] + [f"{x}|12" for x in h.labels]
              + [f"i{k + 1}|21" for k in range(n_i)] + [f"{x}|22" for x in h.labels])
    a_cs = CoordinateSystem(inc.columns(), h.dim)
    i_cs = CoordinateSystem(ic, h.dim)
    dim = len(labels)

    # every entry is stored as an element of H; the block decides the coordinates
    def to_h(idx):
        if idx < n_a:
            return 0, 0, inc.column(idx)
        if idx < n_a + n_h:
            return 0, 1, h.basis_vec(idx - n_a)
        if idx < n_a + n_h + n_i:
            return 1, 0, ic[idx - n_a - n_h]
        return 1, 1, h.basis_vec(idx - n_a - n_h - n_i)

    def place(r, c, v):
        out = [ZERO] * dim
        if r == 0 and c == 0:
            coords, off = a_cs.coords(v), 0
        elif r == 0 and c == 1:
            coords, off = v, n_a
        elif r == 1 and c == 0:
            coords, off = i_cs.coords(v), n_a + n_h
        else:
            coords, off = v, n_a + n_h + n_i
        if coords is None:
            raise ArithmeticError(f"product leaves block ({r + 1},{c + 1})")
        for k, x in enumerate(coords):
            out[off + k] = x
        return out

    def product(i, j):
        r1, c1, x = to_h(i)
        r2, c2, y = to_h(j)
        if c1 != r2:
            return [ZERO] * dim
        return place(r1, c2, h.mul(x, y))

    unit = place(0, 0, list(h.unit))
    p = place(1, 1, list(h.unit))
    unit = [x + y for x, y in zip(unit, p)]
    alg = Algebra.from_products(labels, product, unit,
                                name=f"{a.name}_{h.name}" if a.name and h.name else "A_H")
    return GlueData(alg, cond, p, blocks)


def triangular_algebra(q: Algebra, l: Algebra, dim_e: int, left: Sequence[Mat],
                       right: Sequence[Mat], name: str = "") -> Algebra:
    """Upper triangular matrices [[Q, E], [0, L]].

    ``left[i]`` is the matrix of the i-th basis element of Q acting on E from
    the left; ``right[j]`` is the matrix of x -> x l_j for the j-th basis
    element of L, so right[j] right[k] corresponds to l_k l_j.
    """
    Representation(q, dim_e, left, validate=True)
    Representation(opposite(l), dim_e, right, validate=True)
    for i, lm in enumerate(left):
        for j, rm in enumerate(right):
            if lm @ rm != rm @ lm:
                raise ActionsDoNotCommute(f"{q.labels[i]} and {l.labels[j]} do not commute on E")
    nq, nl = q.dim, l.dim
    dim = nq + dim_e + nl
    labels = ([f"q:{x}" for x in q.labels] + [f"m{k + 1}" for k in range(dim_e)]
              + [f"l:{x}" for x in l.labels])

    def product(i, j):
        out = [ZERO] * dim
        if i < nq and j < nq:
            for k, c in q.table[i][j]:
                out[k] = c
        elif i < nq and nq <= j < nq + dim_e:
            for r, x in enumerate(left[i].column(j - nq)):
                out[nq + r] = x
        elif nq <= i < nq + dim_e and j >= nq + dim_e:
            for r, x in enumerate(right[j - nq - dim_e].column(i - nq)):
                out[nq + r] = x
        elif i >= nq + dim_e and j >= nq + dim_e:
            for k, c in l.table[i - nq - dim_e][j - nq - dim_e]:
                out[nq + dim_e + k] = c
        return out

    unit = list(q.unit) + [ZERO] * dim_e + list(l.unit)

    def place_q(v):
        return list(v) + [ZERO] * (dim_e + nl)

    def place_l(v):
        return [ZERO] * (nq + dim_e) + list(v)

    idems = _idempotent_hints([("q:", q, place_q), ("l:", l, place_l)])
    hints = {"idempotents": idems} if idems else {}
    return Algebra.from_products(labels, product, unit, name=name, hints=hints)
