"""Projective covers, minimal projective resolutions, Ext and homological dimensions.

Resolutions need a split basic top (A/rad A = k^m), so that the
indecomposable projectives are the A e_i for a complete set of primitive
orthogonal idempotents e_i.  Ext over a non-basic algebra B is computed over
a corner eBe with BeB = B, which is Morita equivalent to B.

A resolution term P_n is a direct sum of copies of A e_i, one copy per
generator.  The differential sends the generator of a copy g in P_n to
sum_{g'} a[g][g'] placed in copy g' of P_{n-1}, where a[g][g'] lies in
e_i A e_{i'}.  These coefficients are all that is needed to build the
complex Hom(P_*, N), because Hom(A e_i, N) = e_i N.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from itertools import combinations
from typing import Sequence

from .algebra import Algebra, is_basic, primitive_idempotent_data, radical
from .errors import CapExceeded, NonBasicTop
from .exactla import ZERO, CoordinateSystem, EchelonBasis, Mat, rank
from .representations import (ModuleMap, Representation, direct_sum, dual_module,
                              projective_pairs, simple_modules)

DEFAULT_CAP = 12


@total_ordering
class AtLeast:
    """A homological dimension known only to be at least ``bound``."""

    __slots__ = ("bound",)

    def __init__(self, bound: int):
        self.bound = bound

    def __eq__(self, other):
        return isinstance(other, AtLeast) and other.bound == self.bound

    def __lt__(self, other):
        if isinstance(other, AtLeast):
            return self.bound < other.bound
        return False  # an unknown value >= bound is never certified below an int

    def __hash__(self):
        return hash(("AtLeast", self.bound))

    def __str__(self):
        return f">={self.bound}"

    __repr__ = __str__


def dim_str(v) -> str:
    return str(v)


def dim_max(values) -> int | AtLeast:
    """Maximum of dimension values; an AtLeast dominates with the largest bound."""
    ints = [v for v in values if not isinstance(v, AtLeast)]
    lows = [v.bound for v in values if isinstance(v, AtLeast)]
    best = max(ints, default=0)
    if lows:
        return AtLeast(max(max(lows), best))
    return best


def is_finite(v) -> bool:
    return not isinstance(v, AtLeast)


class _ProjectiveBasics:
    """Cached data about the indecomposable projectives of an algebra."""

    def __init__(self, a: Algebra):
        self.algebra = a
        self.labels, self.idems = primitive_idempotent_data(a)
        pairs = projective_pairs(a)
        self.projectives = [p for p, _ in pairs]
        # basis of A e_i as algebra vectors: the columns of the inclusion
        self.basis = [incl.columns() for _, incl in pairs]


def _basics(a: Algebra) -> _ProjectiveBasics:
    if "proj_basics" not in a._cache:
        a._cache["proj_basics"] = _ProjectiveBasics(a)
    return a._cache["proj_basics"]


@dataclass
class ProjectiveCover:
    cover: Representation
    map: ModuleMap
    types: list[int]          # idempotent index of each summand
    generators: list[list]    # generator vectors in the covered module


def _free_module(a: Algebra, types: Sequence[int]) -> Representation:
    pb = _basics(a)
    if not types:
        from .representations import zero_module
        return zero_module(a)
    return direct_sum([pb.projectives[t] for t in types])


def _choose_generators(m: Representation) -> tuple[list[int], list[list]]:
    a = m.parent
    pb = _basics(a)
    eb = EchelonBasis.from_vectors(m.radical_vectors(), m.dim)
    types, gens = [], []
    for t, e in enumerate(pb.idems):
        for v in m.idempotent_space(e):
            if eb.add(v):
                types.append(t)
                gens.append(v)
    return types, gens


def _cover_matrix(m: Representation, types, gens) -> Mat:
    a = m.parent
    pb = _basics(a)
    cols = []
    for t, g in zip(types, gens):
        for p in pb.basis[t]:
            cols.append(m.apply(p, g))
    if not cols:
        return Mat.zeros(m.dim, 0)
    return Mat.from_columns(cols, m.dim)


def projective_cover(m: Representation) -> ProjectiveCover:
    """Minimal projective cover P -> M built from a basis of the top of M."""
    types, gens = _choose_generators(m)
    p = _free_module(m.parent, types)
    return ProjectiveCover(p, ModuleMap(p, m, _cover_matrix(m, types, gens)), types, gens)


def is_projective(m: Representation) -> bool:
    types, _ = _choose_generators(m)
    pb = _basics(m.parent)
    return sum(len(pb.basis[t]) for t in types) == m.dim


def multiplicities(types: Sequence[int], k: int) -> list[int]:
    out = [0] * k
    for t in types:
        out[t] += 1
    return out


@dataclass
class ProjectiveResolution:
    """Minimal projective resolution ... -> P_1 -> P_0 -> M.

    ``types[n]`` lists the idempotent index of each summand of P_n and
    ``coefficients[n][g][g']`` (n >= 1) is the algebra element a[g][g'].
    ``truncated`` is set when the last syzygy computed was still nonzero.
    """

    module: Representation
    types: list[list[int]] = field(default_factory=list)
    coefficients: list[list[list[list]]] = field(default_factory=list)
    terms: list[Representation] = field(default_factory=list)
    differentials: list[ModuleMap] = field(default_factory=list)
    augmentation: ModuleMap | None = None
    truncated: bool = False
    cap: int = DEFAULT_CAP

    @property
    def length(self) -> int:
        return len(self.types) - 1

    def multiplicity_vectors(self) -> list[list[int]]:
        k = len(_basics(self.module.parent).idems)
        return [multiplicities(t, k) for t in self.types]

    def proj_dim(self):
        if self.truncated:
            return AtLeast(self.cap + 1)
        return max(self.length, 0) if self.module.dim else 0

    def n_terms(self) -> int:
        return len(self.types)


def projective_resolution(m: Representation, cap: int = DEFAULT_CAP,
                          keep_maps: bool = False) -> ProjectiveResolution:
    """Iterated projective covers of syzygies.

    Computes P_0, ..., P_L where either the syzygy after P_L vanishes (then
    pd M = L) or L = cap and the next syzygy is nonzero (``truncated``).
    """
    a = m.parent
    pb = _basics(a)
    res = ProjectiveResolution(module=m, cap=cap)
    if m.dim == 0:
        return res
    cur = m
    incl = None      # inclusion of cur into the previous term
    prev_types = None
    n = 0
    while True:
        types, gens = _choose_generators(cur)
        mat = _cover_matrix(cur, types, gens)
        if incl is not None:
            coeff = []
            offs = _offsets(pb, prev_types)
            for g in gens:
                v = incl.apply(g)
                row = []
                for gp, t in enumerate(prev_types):
                    block = v[offs[gp]:offs[gp] + len(pb.basis[t])]
                    alg = [ZERO] * a.dim
                    for c, bv in zip(block, pb.basis[t]):
                        if c:
                            for j, x in enumerate(bv):
                                if x:
                                    alg[j] += c * x
                    row.append(alg)
                coeff.append(row)
            res.coefficients.append(coeff)
        else:
            res.coefficients.append([])
        res.types.append(types)
        if keep_maps:
            p = _free_module(a, types)
            res.terms.append(p)
            full = mat if incl is None else incl @ mat
            if incl is None:
                res.augmentation = ModuleMap(p, m, mat)
            else:
                res.differentials.append(ModuleMap(p, res.terms[-2], full))
        # syzygy
        p = _free_module(a, types)
        ker = ModuleMap(p, cur, mat).kernel()
        syz, syz_incl = ker
        if syz.dim == 0:
            return res
        if n == cap:
            res.truncated = True
            return res
        cur, incl, prev_types = syz, syz_incl, types
        n += 1


def _offsets(pb: _ProjectiveBasics, types: Sequence[int]) -> list[int]:
    out, acc = [], 0
    for t in types:
        out.append(acc)
        acc += len(pb.basis[t])
    return out


class _PeirceCoords:
    """Bases of e_i N and coordinates in them."""

    def __init__(self, n: Representation):
        pb = _basics(n.parent)
        self.module = n
        self.bases = [n.idempotent_space(e) for e in pb.idems]
        self.coords = [CoordinateSystem(b, n.dim) if b else None for b in self.bases]


def _peirce(n: Representation) -> _PeirceCoords:
    if "peirce_coords" not in n._cache:
        n._cache["peirce_coords"] = _PeirceCoords(n)
    return n._cache["peirce_coords"]


def hom_complex_matrix(res: ProjectiveResolution, n: Representation, deg: int) -> Mat:
    """delta^deg : Hom(P_deg, N) -> Hom(P_{deg+1}, N) in the bases e_i N."""
    pc = _peirce(n)
    src_types = res.types[deg] if deg < len(res.types) else []
    tgt_types = res.types[deg + 1] if deg + 1 < len(res.types) else []
    sdims = [len(pc.bases[t]) for t in src_types]
    tdims = [len(pc.bases[t]) for t in tgt_types]
    out = Mat.zeros(sum(tdims), sum(sdims))
    if not tgt_types or not src_types:
        return out
    coeff = res.coefficients[deg + 1]
    r0 = 0
    for g, tg in enumerate(tgt_types):
        c0 = 0
        for gp, tp in enumerate(src_types):
            a = coeff[g][gp]
            if any(a) and tdims[g] and sdims[gp]:
                act = n.act(a)
                for s, v in enumerate(pc.bases[tp]):
                    w = act.apply(v)
                    cw = pc.coords[tg].coords(w) if any(w) else [ZERO] * tdims[g]
                    if cw is None:
                        raise ArithmeticError("coefficient does not respect idempotents")
                    for r, x in enumerate(cw):
                        out.data[r0 + r][c0 + s] = x
            c0 += sdims[gp]
        r0 += tdims[g]
    return out


def _hom_dim_term(res: ProjectiveResolution, n: Representation, deg: int) -> int:
    if deg >= len(res.types):
        return 0
    pc = _peirce(n)
    return sum(len(pc.bases[t]) for t in res.types[deg])


def ext_dims_from(res: ProjectiveResolution, n: Representation, upto: int) -> list[int]:
    """dim Ext^i(M, N) for i = 0..upto, needing terms up to P_{upto+1}."""
    ranks = []
    for deg in range(upto + 1):
        if deg + 1 >= len(res.types) or deg >= len(res.types):
            ranks.append(0)
        else:
            ranks.append(rank(hom_complex_matrix(res, n, deg)))
    out = []
    for i in range(upto + 1):
        h = _hom_dim_term(res, n, i)
        out.append(h - ranks[i] - (ranks[i - 1] if i else 0))
    return out


def full_basic_corner(a: Algebra) -> list | None:
    """An idempotent e with BeB = B and eBe basic, or None.

    Only sums of pairwise orthogonal idempotent basis elements are tried, the
    smallest first; that covers matrix rings given by matrix units.
    """
    if "full_corner" not in a._cache:
        from .minors import minor, trace_ideal
        found = None
        idem = [i for i in range(a.dim) if a.mul(a.basis_vec(i), a.basis_vec(i)) == a.basis_vec(i)]
        for size in range(1, len(idem) + 1):
            for pick in combinations(idem, size):
                vs = [a.basis_vec(i) for i in pick]
                if any(a.mul(x, y) != a.zero_vec() for x in vs for y in vs if x is not y):
                    continue
                e = [sum(col, ZERO) for col in zip(*vs)]
                md = minor(a, e, verify=False)
                if trace_ideal(md).dim == a.dim and is_basic(md.a):
                    found = e
                    break
            if found is not None:
                break
        a._cache["full_corner"] = found
    return a._cache["full_corner"]


def _basic_pair(m: Representation, n: Representation) -> tuple[Representation, Representation]:
    """(M, N) itself over a basic algebra, else (eM, eN) over a full basic corner."""
    if m.parent is not n.parent:
        from .errors import ParentMismatch
        raise ParentMismatch("modules over different algebras")
    a = m.parent
    if is_basic(a):
        return m, n
    e = full_basic_corner(a)
    if e is None:
        raise NonBasicTop(f"{a.name or 'algebra'} is not basic and no sum of idempotent basis "
                          "elements gives a full basic corner")
    from .minors import functor_G, minor
    md = minor(a, e, verify=False)
    return functor_G(md, m), functor_G(md, n)


def ext_dim(m: Representation, n: Representation, i: int, cap: int = DEFAULT_CAP) -> int:
    """dim Ext^i_A(M, N) from the minimal projective resolution of M."""
    m, n = _basic_pair(m, n)
    if i > cap:
        res = projective_resolution(m, cap)
        if res.truncated:
            raise CapExceeded(f"Ext^{i} requested beyond cap {cap} with pd(M) > cap")
        return 0
    res = projective_resolution(m, i + 1)
    return ext_dims_from(res, n, i)[i]


def ext_dims(m: Representation, n: Representation, upto: int) -> list[int]:
    m, n = _basic_pair(m, n)
    res = projective_resolution(m, upto + 1)
    return ext_dims_from(res, n, upto)


def proj_dim(m: Representation, cap: int = DEFAULT_CAP):
    """Projective dimension, or AtLeast(cap + 1) if the resolution does not stop."""
    return projective_resolution(m, cap).proj_dim()


def inj_dim(m: Representation, cap: int = DEFAULT_CAP):
    """Injective dimension as the largest i with Ext^i(A/rad A, M) != 0.

    A/rad A is the sum of the simple modules.  When some simple has a
    resolution longer than the cap and Ext^cap is nonzero the value is
    reported as AtLeast(cap).
    """
    a = m.parent
    if m.dim == 0:
        return 0
    best = 0
    unknown = False
    for s in simple_modules(a):
        res = projective_resolution(s, cap + 1)
        if res.truncated or res.length > cap:
            dims = ext_dims_from(res, m, cap)
            unknown = unknown or bool(dims[cap])
        else:
            dims = ext_dims_from(res, m, res.length)
        nz = [i for i, d in enumerate(dims) if d]
        if nz:
            best = max(best, nz[-1])
    return AtLeast(cap) if unknown else best


def global_dim(a: Algebra, cap: int = DEFAULT_CAP):
    """Maximum projective dimension of the simple modules (0 for semisimple algebras)."""
    if a.dim == 0 or radical(a).dim == 0:
        return 0
    key = ("gldim", cap)
    if key not in a._cache:
        a._cache[key] = dim_max([proj_dim(s, cap) for s in simple_modules(a)])
    return a._cache[key]


def inj_dim_via_dual(m: Representation, cap: int = DEFAULT_CAP):
    """Injective dimension as pd of the dual module over the opposite algebra."""
    return proj_dim(dual_module(m), cap)


def is_minimal(res: ProjectiveResolution) -> bool:
    """Every differential coefficient lies in the radical."""
    rad = radical(res.module.parent)
    for block in res.coefficients[1:]:
        for row in block:
            for a in row:
                if any(a) and not rad.contains(a):
                    return False
    return True


def is_exact(res: ProjectiveResolution) -> bool:
    """Check exactness of a resolution built with keep_maps=True by rank counts."""
    if res.module.dim == 0:
        return True
    maps = [res.augmentation] + res.differentials
    if res.augmentation.rank() != res.module.dim:
        return False
    for k in range(len(maps) - 1):
        d_in, d_out = maps[k + 1], maps[k]
        if (d_out.matrix @ d_in.matrix).is_zero() is False:
            return False
        if d_in.rank() != d_out.source.dim - d_out.rank():
            return False
    if not res.truncated:
        last = maps[-1]
        if last.rank() != last.source.dim:
            return False
    return True
