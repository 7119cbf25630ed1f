"""Left modules as representations: one action matrix per algebra basis element."""

from __future__ import annotations

import random
from typing import Sequence

from .algebra import (Algebra, generators, opposite, primitive_idempotent_data, radical)
from .errors import NonBasicTop, NotAModule, ParentMismatch
from .exactla import (ONE, ZERO, CoordinateSystem, EchelonBasis, Mat, block_diag, inverse,
                      rank, to_q)


class Representation:
    """A left module M of finite dimension over ``parent``.

    ``action[i]`` is the matrix of b_i acting on M in a fixed basis of M.
    """

    def __init__(self, parent: Algebra, dim: int, action: Sequence[Mat], name: str = "",
                 validate: bool = False):
        if len(action) != parent.dim:
            raise NotAModule("need one action matrix per basis element")
        self.parent = parent
        self.dim = dim
        self.action = list(action)
        self.name = name
        self._cache: dict = {}
        for m in self.action:
            if m.shape != (dim, dim):
                raise NotAModule("action matrix has the wrong shape")
        if validate:
            self.check()

    def check(self) -> None:
        """Raise NotAModule unless the action is a unital algebra homomorphism."""
        a = self.parent
        if self.act(a.unit) != Mat.identity(self.dim):
            raise NotAModule("unit does not act as the identity")
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = self.action[i] @ self.action[j]
                rhs = self.act_sparse(a.table[i][j])
                if lhs != rhs:
                    raise NotAModule(f"action fails on the product b{i} b{j}")

    def act(self, x: Sequence) -> Mat:
        out = [[ZERO] * self.dim for _ in range(self.dim)]
        for i, c in enumerate(x):
            if c:
                for r, row in enumerate(self.action[i].data):
                    o = out[r]
                    for k, v in enumerate(row):
                        if v:
                            o[k] += c * v
        return Mat(self.dim, self.dim, out)

    def act_sparse(self, terms) -> Mat:
        x = [ZERO] * self.parent.dim
        for k, c in terms:
            x[k] += c
        return self.act(x)

    def apply(self, x: Sequence, v: Sequence) -> list:
        """The vector x.v for an algebra element x (coordinates) and v in M."""
        out = [ZERO] * self.dim
        for i, c in enumerate(x):
            if c:
                w = self.action[i].apply(v)
                for k, y in enumerate(w):
                    if y:
                        out[k] += c * y
        return out

    def is_zero(self) -> bool:
        return self.dim == 0

    def __repr__(self) -> str:
        nm = f" {self.name}" if self.name else ""
        return f"<Representation{nm} dim={self.dim} over {self.parent!r}>"

    # -- derived data ------------------------------------------------------------
    def generator_actions(self) -> list[Mat]:
        if "gens" not in self._cache:
            self._cache["gens"] = [self.act(g) for g in generators(self.parent)]
        return self._cache["gens"]

    def idempotent_space(self, e: Sequence) -> list[list]:
        """Basis (as vectors of M) of the subspace eM."""
        m = self.act(e)
        return EchelonBasis.from_vectors(m.transpose().data, self.dim).vectors()

    def radical_vectors(self) -> list[list]:
        rad = radical(self.parent)
        eb = EchelonBasis(self.dim)
        mats = [self.act(r) for r in rad.basis_vectors()]
        for m in mats:
            for col in m.transpose().data:
                eb.add(col)
        return eb.vectors()


def regular_module(a: Algebra) -> Representation:
    return Representation(a, a.dim, [a.left_mult(i) for i in range(a.dim)], name="A")


def right_regular_module(a: Algebra) -> Representation:
    """A as a left module over the opposite algebra, b acting by x -> x b."""
    op = opposite(a)
    return Representation(op, a.dim, [a.right_mult(i) for i in range(a.dim)], name="A_A")


def zero_module(a: Algebra) -> Representation:
    return Representation(a, 0, [Mat.zeros(0, 0)] * a.dim, name="0")


def from_generator_action(a: Algebra, gen_mats: Sequence[Mat], dim: int,
                          name: str = "", validate: bool = True) -> Representation:
    """Extend matrices given on ``generators(a)`` to every basis element."""
    gens = generators(a)
    if len(gen_mats) != len(gens):
        raise NotAModule("need one matrix per algebra generator")
    # breadth-first products of generators, tracking their matrices
    words = [(list(a.unit), Mat.identity(dim))]
    eb = EchelonBasis(a.dim)
    found_vecs, found_mats = [], []
    eb.add(a.unit)
    found_vecs.append(list(a.unit))
    found_mats.append(Mat.identity(dim))
    frontier = words
    while frontier:
        nxt = []
        for v, m in frontier:
            for g, gm in zip(gens, gen_mats):
                w = a.mul(g, v)
                if eb.add(w):
                    wm = gm @ m
                    found_vecs.append(w)
                    found_mats.append(wm)
                    nxt.append((w, wm))
        frontier = nxt
    if eb.dim != a.dim:
        raise NotAModule("generators do not span the algebra")
    cs = CoordinateSystem(found_vecs, a.dim)
    action = []
    for i in range(a.dim):
        c = cs.coords(a.basis_vec(i))
        m = Mat.zeros(dim, dim)
        for coef, fm in zip(c, found_mats):
            if coef:
                m = m + fm.scale(coef)
        action.append(m)
    return Representation(a, dim, action, name=name, validate=validate)


class ModuleMap:
    """A module homomorphism; ``matrix`` is target.dim x source.dim."""

    def __init__(self, source: Representation, target: Representation, matrix: Mat,
                 validate: bool = False):
        if source.parent is not target.parent:
            raise ParentMismatch("modules over different algebras")
        if matrix.shape != (target.dim, source.dim):
            raise ValueError("matrix shape does not match the modules")
        self.source = source
        self.target = target
        self.matrix = matrix
        if validate and not self.is_homomorphism():
            raise NotAModule("matrix does not intertwine the actions")

    def is_homomorphism(self) -> bool:
        for ms, mt in zip(self.source.generator_actions(), self.target.generator_actions()):
            if self.matrix @ ms != mt @ self.matrix:
                return False
        return True

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self after other."""
        if other.target is not self.source:
            raise ParentMismatch("maps are not composable")
        return ModuleMap(other.source, self.target, self.matrix @ other.matrix)

    def rank(self) -> int:
        return rank(self.matrix)

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def is_isomorphism(self) -> bool:
        return self.source.dim == self.target.dim and self.rank() == self.source.dim

    def inverse(self) -> "ModuleMap":
        inv = inverse(self.matrix)
        if inv is None:
            raise ValueError("map is not invertible")
        return ModuleMap(self.target, self.source, inv)

    def kernel(self) -> tuple[Representation, Mat]:
        from .exactla import kernel_basis
        kb = kernel_basis(self.matrix)
        return submodule(self.source, kb.columns())

    def image(self) -> tuple[Representation, Mat]:
        return submodule(self.target, self.matrix.transpose().data)

    def cokernel(self) -> tuple[Representation, Mat]:
        return quotient_module(self.target, self.matrix.transpose().data)


def identity_map(m: Representation) -> ModuleMap:
    return ModuleMap(m, m, Mat.identity(m.dim))


def submodule(m: Representation, vectors: Sequence[Sequence], name: str = "") -> tuple[Representation, Mat]:
    """Submodule spanned by vectors (which must span an invariant subspace).

    Returns the module and the inclusion matrix (m.dim x k).
    """
    eb = EchelonBasis(m.dim)
    basis = []
    for v in vectors:
        if eb.add(v):
            basis.append([to_q(x) for x in v])
    k = len(basis)
    if k == 0:
        return zero_module(m.parent), Mat.zeros(m.dim, 0)
    cs = CoordinateSystem(basis, m.dim)
    action = []
    for am in m.action:
        cols = []
        for v in basis:
            c = cs.coords(am.apply(v))
            if c is None:
                raise NotAModule("subspace is not invariant")
            cols.append(c)
        action.append(Mat.from_columns(cols, k))
    return (Representation(m.parent, k, action, name=name),
            Mat.from_columns(basis, m.dim))


def generated_submodule(m: Representation, vectors: Sequence[Sequence]) -> tuple[Representation, Mat]:
    """Smallest submodule containing the given vectors."""
    eb = EchelonBasis(m.dim)
    todo = []
    for v in vectors:
        if eb.add(v):
            todo.append(list(v))
    gens = m.generator_actions()
    while todo:
        v = todo.pop()
        for g in gens:
            w = g.apply(v)
            if eb.add(w):
                todo.append(w)
    return submodule(m, eb.vectors())


def quotient_module(m: Representation, vectors: Sequence[Sequence], name: str = "") -> tuple[Representation, Mat]:
    """M/U for the invariant subspace U spanned by vectors, with the projection."""
    eb = EchelonBasis.from_vectors(vectors, m.dim)
    piv = set(eb.pivots)
    free = [j for j in range(m.dim) if j not in piv]
    k = len(free)
    proj = Mat.zeros(k, m.dim)
    for j in range(m.dim):
        e = [ZERO] * m.dim
        e[j] = ONE
        r = eb.reduce(e)
        for t, f in enumerate(free):
            proj.data[t][j] = r[f]
    action = []
    for am in m.action:
        # induced action on the complement basis vectors e_f
        sub = Mat.zeros(k, k)
        for t, f in enumerate(free):
            col = [am.data[r][f] for r in range(m.dim)]
            img = proj.apply(col)
            for s in range(k):
                sub.data[s][t] = img[s]
        action.append(sub)
    for v in eb.vectors():
        for am in m.action:
            if not eb.contains(am.apply(v)):
                raise NotAModule("subspace is not invariant")
    return Representation(m.parent, k, action, name=name), proj


def direct_sum(mods: Sequence[Representation], name: str = "") -> Representation:
    if not mods:
        raise ValueError("empty direct sum")
    parent = mods[0].parent
    for m in mods:
        if m.parent is not parent:
            raise ParentMismatch("modules over different algebras")
    action = [block_diag([m.action[i] for m in mods]) for i in range(parent.dim)]
    return Representation(parent, sum(m.dim for m in mods), action, name=name)


def radical_submodule(m: Representation) -> tuple[Representation, Mat]:
    return submodule(m, m.radical_vectors())


def top(m: Representation) -> tuple[Representation, Mat]:
    """M / rad(A) M with the projection."""
    return quotient_module(m, m.radical_vectors())


def projective_module(a: Algebra, e: Sequence, name: str = "") -> tuple[Representation, Mat]:
    """A e as a submodule of the regular module."""
    reg = regular_module(a)
    return submodule(reg, [a.mul(a.basis_vec(i), e) for i in range(a.dim)], name=name)


def projective_pairs(a: Algebra) -> list[tuple[Representation, Mat]]:
    """(A e_i, inclusion into A) for each primitive idempotent, cached."""
    if "projectives" not in a._cache:
        labs, idems = primitive_idempotent_data(a)
        a._cache["projectives"] = [projective_module(a, e, name=f"P({lab})")
                                   for lab, e in zip(labs, idems)]
    return a._cache["projectives"]


def indecomposable_projectives(a: Algebra) -> list[Representation]:
    return [p for p, _ in projective_pairs(a)]


def simple_modules(a: Algebra) -> list[Representation]:
    """The simples Ae_i / rad(A) e_i, one per primitive idempotent."""
    if "simples" not in a._cache:
        labs = primitive_idempotent_data(a)[0]
        out = []
        for lab, p in zip(labs, indecomposable_projectives(a)):
            s = top(p)[0]
            s.name = f"S({lab})"
            out.append(s)
        a._cache["simples"] = out
    return a._cache["simples"]


def _peirce_frame(m: Representation):
    """Basis of M adapted to M = sum e_i M, with its inverse and block sizes."""
    if "peirce" in m._cache:
        return m._cache["peirce"]
    a = m.parent
    try:
        idems = primitive_idempotent_data(a)[1]
    except NonBasicTop:
        idems = [a.unit]
    if not idems:
        idems = [a.unit]
    blocks = [m.idempotent_space(e) for e in idems]
    sizes = [len(b) for b in blocks]
    cols = [v for b in blocks for v in b]
    t = Mat.from_columns(cols, m.dim) if cols else Mat.zeros(m.dim, 0)
    tinv = inverse(t) if m.dim else Mat.zeros(0, 0)
    if tinv is None:
        raise ArithmeticError("idempotent decomposition of a module is not direct")
    offs = [sum(sizes[:i]) for i in range(len(sizes))]
    conj = []
    # per generator: the nonzero blocks (j, i) of the conjugated action
    for g in m.generator_actions():
        c = tinv @ g @ t
        blocks_ = {}
        for j in range(len(sizes)):
            for i in range(len(sizes)):
                blk = [[c.data[offs[j] + r][offs[i] + q] for q in range(sizes[i])]
                       for r in range(sizes[j])]
                if any(x for row in blk for x in row):
                    blocks_[(j, i)] = blk
        conj.append(blocks_)
    frame = (t, tinv, sizes, conj)
    m._cache["peirce"] = frame
    return frame


def hom_space(m: Representation, n: Representation) -> list[ModuleMap]:
    """Basis of Hom_A(M, N).

    Maps are block diagonal with respect to the decompositions M = sum e_i M
    and N = sum e_i N, so only those blocks are unknowns; the intertwining
    equations are imposed for algebra generators only.
    """
    return [ModuleMap(m, n, x) for x in hom_matrices(m, n)]


def _is_identity(blk) -> bool:
    return all(x == (1 if r == q else 0) for r, row in enumerate(blk) for q, x in enumerate(row))


def hom_matrices(m: Representation, n: Representation) -> list[Mat]:
    if m.parent is not n.parent:
        raise ParentMismatch("modules over different algebras")
    if m.dim == 0 or n.dim == 0:
        return []
    tm, tminv, sm, cm = _peirce_frame(m)
    tn, tninv, sn, dn = _peirce_frame(n)
    k = len(sm)
    # unknown Y_i is sn[i] x sm[i], stored row-major from offset u[i]
    u, tot = [], 0
    for i in range(k):
        u.append(tot)
        tot += sn[i] * sm[i]
    if tot == 0:
        return []
    eb = EchelonBasis(tot)
    for c, d in zip(cm, dn):
        for j, i in sorted(set(c) | set(d)):
            # Y_j C_ji = D_ji Y_i, C_ji: sm[j] x sm[i], D_ji: sn[j] x sn[i]
            cji = c.get((j, i)) or [[ZERO] * sm[i] for _ in range(sm[j])]
            dji = d.get((j, i)) or [[ZERO] * sn[i] for _ in range(sn[j])]
            if i == j and _is_identity(cji) and _is_identity(dji):
                continue
            for r in range(sn[j]):
                for s in range(sm[i]):
                    row = [ZERO] * tot
                    for l in range(sm[j]):
                        x = cji[l][s]
                        if x:
                            row[u[j] + r * sm[j] + l] += x
                    for l in range(sn[i]):
                        x = dji[r][l]
                        if x:
                            row[u[i] + l * sm[i] + s] -= x
                    if any(row):
                        eb.add(row)
    out = []
    for sol in eb.complement_kernel():
        blocks = []
        for i in range(k):
            y = Mat(sn[i], sm[i], [sol[u[i] + r * sm[i]: u[i] + (r + 1) * sm[i]]
                                   for r in range(sn[i])])
            blocks.append(y)
        out.append(tn @ block_diag(blocks) @ tminv)
    return out


def hom_dim(m: Representation, n: Representation) -> int:
    return len(hom_matrices(m, n))


def find_isomorphism(m: Representation, n: Representation, tries: int = 8) -> ModuleMap | None:
    """An explicit isomorphism M -> N, or None when none was found.

    A random combination of a Hom basis is invertible with high probability
    when M and N are isomorphic; the random choices are seeded.
    """
    if m.dim != n.dim:
        return None
    if m.dim == 0:
        return ModuleMap(m, n, Mat.zeros(0, 0))
    basis = hom_matrices(m, n)
    if not basis:
        return None
    rng = random.Random(7)
    for t in range(tries):
        coeffs = [to_q(1)] * len(basis) if t == 0 else [to_q(rng.randint(-20, 20)) for _ in basis]
        x = Mat.zeros(n.dim, m.dim)
        for c, b in zip(coeffs, basis):
            if c:
                x = x + b.scale(c)
        if rank(x) == m.dim:
            return ModuleMap(m, n, x)
    return None


def are_isomorphic(m: Representation, n: Representation) -> bool:
    return find_isomorphism(m, n) is not None


def dual_module(m: Representation) -> Representation:
    """The k-linear dual Hom_k(M, k) as a left module over the opposite algebra."""
    op = opposite(m.parent)
    return Representation(op, m.dim, [a.transpose() for a in m.action], name=f"D{m.name}")


def restrict_scalars(m: Representation, sub: Algebra, embed: Sequence[Sequence]) -> Representation:
    """M viewed over ``sub`` through the algebra map sending basis i to embed[i]."""
    return Representation(sub, m.dim, [m.act(v) for v in embed])
