"""Rational hereditary curves over P^1 through lattice-chain sheaves.

A curve is P^1 over Q with finitely many special points x, each carrying a
weight kappa(x) >= 2 and a composition of the rank n into kappa(x) parts.
The lattice-chain sheaf L_{x,i} agrees with L = O^n away from x and is the
i-th lattice of the local chain at x.  All such sheaves have the same
generic fibre, so every Hom sheaf between them is a line bundle O(D):

    D = (twist of source - twist of target)
        + sum_x floor((i_source(x) - i_target(x)) / kappa(x)) x,

where a sheaf written L(-E) has twist E.  Hom spaces are then sections of
O(D), composition is multiplication in Q(t), and h^1 = max(-deg D - 1, 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .algebra import Algebra
from .errors import (ChainMismatch, CurveMismatch, DivisorViolation, EmptyComposition,
                     InvalidCurve, InvalidWeights, NotCanonicalShape, PointNotSpecial,
                     RepeatedLambda, TiltingObstruction)
from .exactla import ONE, ZERO, EchelonBasis, Mat, Q, fmt_q, solve, to_q
from .p1 import (INF, Divisor, RationalFunction, SectionSpace, fmt_point, parse_point,
                 point_key, satisfies)
from .quiver import QuiverPresentation, algebra_from_quiver

__all__ = ["SpecialPoint", "WeightedP1", "ChainSheaf", "HomSpaceP1", "HomElement",
           "LocalHereditaryOrder", "Lattice", "local_order", "local_projectives_and_simples",
           "morita_canonical_form", "generating_set", "tilting_set", "hom_divisor",
           "hom_and_ext_dims", "hom_basis", "compose", "theta_maps", "point_section",
           "tilting_endomorphism_algebra", "TiltingLabeling", "CanonicalAlgebraPresentation",
           "canonical_algebra", "match_canonical", "CanonicalMatch", "compare_presentation",
           "hom_table", "compositions"]


# -- local hereditary orders ------------------------------------------------------------

def compositions(n: int) -> list[tuple[int, ...]]:
    """All compositions of n, in lexicographic order."""
    if n <= 0:
        return []
    out = []
    for cuts in range(n):
        for pos in combinations(range(1, n), cuts):
            bounds = (0,) + pos + (n,)
            out.append(tuple(b - a for a, b in zip(bounds, bounds[1:])))
    return sorted(out)


def morita_canonical_form(comp: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least cyclic rotation."""
    comp = tuple(int(c) for c in comp)
    if not comp:
        raise EmptyComposition("empty composition")
    return min(comp[i:] + comp[:i] for i in range(len(comp)))


@dataclass(frozen=True)
class LocalHereditaryOrder:
    """Block matrices over a complete DVR O, entries above the block diagonal in m.

    ``pattern[a][b]`` is the least t-adic valuation allowed in entry (a, b).
    """

    composition: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.composition)

    @property
    def k(self) -> int:
        return len(self.composition)

    def block_of(self, a: int) -> int:
        acc = 0
        for blk, size in enumerate(self.composition):
            acc += size
            if a < acc:
                return blk
        raise IndexError(a)

    @property
    def pattern(self) -> list[list[int]]:
        return [[1 if self.block_of(b) > self.block_of(a) else 0 for b in range(self.n)]
                for a in range(self.n)]

    def contains(self, valuations: Sequence[Sequence]) -> bool:
        """Membership of a matrix given by entry valuations (None for a zero entry)."""
        pat = self.pattern
        return all(v is None or v >= pat[a][b]
                   for a, row in enumerate(valuations) for b, v in enumerate(row))

    def is_lattice(self, v: Sequence[int]) -> bool:
        """Row vectors with coordinate valuations >= v form a right H-module."""
        pat = self.pattern
        return all(v[b] + pat[b][a] >= v[a] for a in range(self.n) for b in range(self.n))

    def row_lattice(self, a: int) -> tuple[int, ...]:
        """Valuation vector of the a-th row of H, a direct summand of H as right module."""
        return tuple(self.pattern[a])


def local_order(comp: Sequence[int]) -> LocalHereditaryOrder:
    comp = tuple(int(c) for c in comp)
    if not comp:
        raise EmptyComposition("empty composition")
    if any(c < 1 for c in comp):
        raise EmptyComposition("composition parts must be positive")
    return LocalHereditaryOrder(comp)


@dataclass(frozen=True)
class Lattice:
    """The lattice L_i: row vectors whose a-th coordinate has valuation >= valuation[a]."""

    index: int
    valuation: tuple[int, ...]

    def contains(self, other: "Lattice") -> bool:
        return all(x <= y for x, y in zip(self.valuation, other.valuation))


@dataclass
class LocalSimple:
    index: int
    dim: int
    projective_dimension: int
    certificate: str


def chain_lattice(order: LocalHereditaryOrder, i: int) -> Lattice:
    """L_i for any integer i, using L_{i+k} = m L_i: the last (i mod k) blocks lie in m."""
    q, r = divmod(i, order.k)
    keep = sum(order.composition[:order.k - r])
    return Lattice(i, tuple(q + (1 if a >= keep else 0) for a in range(order.n)))


def local_projectives_and_simples(order: LocalHereditaryOrder) -> tuple[list[Lattice], list[LocalSimple]]:
    """The chain L_0 > L_1 > ... > L_k = m L_0 and the simples U_i = L_i / L_{i+1}.

    pd U_i = 1 is certified as follows: L_i and L_{i+1} are rows of H (so the
    sequence 0 -> L_{i+1} -> L_i -> U_i -> 0 is a projective resolution), U_i
    is nonzero and killed by m, and a nonzero torsion module is never a summand
    of the torsion-free L_i, so the sequence does not split.
    """
    k = order.k
    lattices = [chain_lattice(order, i) for i in range(k + 1)]
    rows = {order.row_lattice(a) for a in range(order.n)}

    def projective(lat: Lattice) -> bool:
        q = min(lat.valuation)
        return tuple(v - q for v in lat.valuation) in rows and order.is_lattice(lat.valuation)

    simples = []
    for i in range(k):
        big, small = lattices[i], lattices[i + 1]
        dim = sum(y - x for x, y in zip(big.valuation, small.valuation))
        strict = big.contains(small) and dim > 0
        torsion = all(x + 1 >= y for x, y in zip(big.valuation, small.valuation))
        proj = projective(big) and projective(small)
        pd = 1 if strict and torsion and proj else -1
        cert = (f"L_{i} and L_{i + 1} are rows of H: {str(proj).lower()}; "
                f"U_{i} nonzero torsion: {str(strict and torsion).lower()}")
        simples.append(LocalSimple(i, dim, pd, cert))
    return lattices, simples


# -- curves and chain sheaves ---------------------------------------------------------------

@dataclass(frozen=True)
class SpecialPoint:
    xi: object
    weight: int
    composition: tuple[int, ...]


class WeightedP1:
    """P^1 over Q with weighted special points, the rank and the base point o."""

    def __init__(self, points: Sequence, rank: int, base_point=INF, name: str = ""):
        pts = []
        for p in points:
            if isinstance(p, SpecialPoint):
                pts.append(p)
            else:
                xi, w, comp = p
                xi = parse_point(xi) if isinstance(xi, str) else to_q(xi)
                pts.append(SpecialPoint(xi, int(w), tuple(int(c) for c in comp)))
        self.points = pts
        self.rank = int(rank)
        self.base_point = parse_point(base_point) if isinstance(base_point, str) else to_q(base_point)
        self.name = name
        self.validate()

    def validate(self) -> None:
        if self.rank < 1:
            raise InvalidCurve("rank must be positive")
        seen = set()
        for n, p in enumerate(self.points):
            if p.xi in seen:
                raise InvalidCurve(f"point {fmt_point(p.xi)} repeated")
            seen.add(p.xi)
            if p.weight < 2:
                raise InvalidCurve(f"point {fmt_point(p.xi)}: weight must be at least 2")
            if len(p.composition) != p.weight:
                raise InvalidCurve(f"point {fmt_point(p.xi)}: composition has {len(p.composition)} "
                                   f"parts, weight is {p.weight}")
            if any(c < 1 for c in p.composition) or sum(p.composition) != self.rank:
                raise InvalidCurve(f"point {fmt_point(p.xi)}: composition must be positive "
                                   f"and sum to the rank {self.rank}")
        if self.base_point in seen:
            raise InvalidCurve("the base point must not be a special point")

    @property
    def special(self) -> list:
        return [p.xi for p in self.points]

    def weight(self, x) -> int:
        for p in self.points:
            if p.xi == x:
                return p.weight
        return 1

    def label(self, x) -> str:
        for n, p in enumerate(self.points):
            if p.xi == x:
                return f"x{n + 1}"
        return f"[{fmt_point(x)}]"

    def auxiliary_points(self, count: int) -> list:
        """The first ``count`` integers 0, 1, 2, ... that are neither special nor o."""
        out, c = [], 0
        while len(out) < count:
            q = Q(c)
            if q not in self.special and q != self.base_point:
                out.append(q)
            c += 1
        return out

    def L(self) -> "ChainSheaf":
        return ChainSheaf(self, (), Divisor())

    def L_minus_o(self) -> "ChainSheaf":
        return ChainSheaf(self, (), Divisor.point(self.base_point))

    def L_twist(self, d: Divisor) -> "ChainSheaf":
        """L(-D)."""
        return ChainSheaf(self, (), d)

    def L_xi(self, x, i: int) -> "ChainSheaf":
        x = parse_point(x) if isinstance(x, str) else to_q(x)
        if x not in self.special:
            raise PointNotSpecial(f"{fmt_point(x)} is not a special point")
        if not 0 <= i <= self.weight(x):
            raise InvalidCurve(f"chain index {i} outside 0..{self.weight(x)}")
        return ChainSheaf(self, ((x, i),) if i else (), Divisor())

    def describe(self) -> list[str]:
        out = [f"rank = {self.rank}", f"base point = {fmt_point(self.base_point)}"]
        for n, p in enumerate(self.points):
            out.append(f"x{n + 1} = {fmt_point(p.xi)}, weight {p.weight}, "
                       f"composition {','.join(map(str, p.composition))}")
        return out


@dataclass(frozen=True)
class ChainSheaf:
    """L_{x,i} (chain positions at special points) twisted to L(-twist)."""

    curve: WeightedP1 = field(compare=False, hash=False)
    indices: tuple = ()
    twist: Divisor = field(default_factory=Divisor)

    def index(self, x) -> int:
        for p, i in self.indices:
            if p == x:
                return i
        return 0

    @property
    def name(self) -> str:
        base = "L"
        for p, i in sorted(self.indices, key=lambda t: point_key(t[0])):
            base += f"[{self.curve.label(p)},{i}]"
        if self.twist.coeffs:
            tw = -self.twist
            if tw == Divisor.point(self.curve.base_point, -1):
                return base + "(-o)"
            return base + f"({tw})"
        return base

    def __str__(self) -> str:
        return self.name


def _same_curve(a: ChainSheaf, b: ChainSheaf) -> WeightedP1:
    if a.curve is not b.curve:
        raise CurveMismatch("sheaves live on different curves")
    return a.curve


def hom_divisor(curve: WeightedP1, src: ChainSheaf, tgt: ChainSheaf) -> Divisor:
    """D with Hom(src, tgt) = O(D), by the lattice-chain floor rule."""
    if src.curve is not curve or tgt.curve is not curve:
        raise CurveMismatch("sheaves live on a different curve")
    d = src.twist - tgt.twist
    for x in curve.special:
        shift = (src.index(x) - tgt.index(x)) // curve.weight(x)
        if shift:
            d = d + Divisor.point(x, shift)
    return d


def hom_and_ext_dims(curve: WeightedP1, src: ChainSheaf, tgt: ChainSheaf) -> tuple[int, int]:
    deg = hom_divisor(curve, src, tgt).degree
    return max(deg + 1, 0), max(-deg - 1, 0)


_SPACES: dict = {}


def _section_space(d: Divisor) -> SectionSpace:
    key = hash(d), tuple(d.items())
    if key not in _SPACES:
        _SPACES[key] = SectionSpace(d)
    return _SPACES[key]


@dataclass
class HomSpaceP1:
    source: ChainSheaf
    target: ChainSheaf
    divisor: Divisor
    space: SectionSpace

    @property
    def basis(self) -> list[RationalFunction]:
        return self.space.basis

    @property
    def dim(self) -> int:
        return self.space.dim

    def element(self, coords: Sequence) -> "HomElement":
        f = RationalFunction([])
        for c, b in zip(coords, self.basis):
            if c:
                f = f + b * to_q(c)
        return HomElement(self, f)

    def basis_element(self, k: int) -> "HomElement":
        return HomElement(self, self.basis[k])

    def coords(self, f: RationalFunction) -> list | None:
        return self.space.coords(f)


@dataclass
class HomElement:
    space: HomSpaceP1
    function: RationalFunction

    @property
    def coords(self) -> list:
        return self.space.coords(self.function)

    def __str__(self) -> str:
        return str(self.function)


def hom_basis(curve: WeightedP1, src: ChainSheaf, tgt: ChainSheaf) -> HomSpaceP1:
    d = hom_divisor(curve, src, tgt)
    return HomSpaceP1(src, tgt, d, _section_space(d))


def compose(f: HomElement, g: HomElement) -> HomElement:
    """f after g, for g: A -> B and f: B -> C."""
    if g.space.target != f.space.source:
        raise ChainMismatch(f"cannot compose {g.space.source}->{g.space.target} "
                            f"with {f.space.source}->{f.space.target}")
    curve = _same_curve(f.space.source, g.space.source)
    target = hom_basis(curve, g.space.source, f.space.target)
    prod = f.function * g.function
    ok, where = satisfies(prod, target.divisor)
    if not ok:
        raise DivisorViolation(f"{prod} violates O({target.divisor}) at {where}")
    return HomElement(target, prod)


def point_section(curve: WeightedP1, y) -> HomElement:
    """The section of Hom(L(-o), L) = O(o) vanishing at y (normalized basis of O(o - y))."""
    y = parse_point(y) if isinstance(y, str) else to_q(y)
    if y == curve.base_point:
        raise InvalidCurve("the point must differ from the base point")
    f = _section_space(Divisor.point(curve.base_point) - Divisor.point(y)).basis[0]
    return HomElement(hom_basis(curve, curve.L_minus_o(), curve.L()), f)


def theta_maps(curve: WeightedP1, x) -> tuple[list[HomElement], HomElement]:
    """theta_{x,i}: L_{x,i} -> L_{x,i-1} and the composite theta_x in Hom(L(-o), L).

    L_{x,kappa} is identified with L(-o), so theta_{x,kappa} is the normalized
    basis section of Hom(L(-o), L_{x,kappa-1}) = O(o - x).
    """
    x = parse_point(x) if isinstance(x, str) else to_q(x)
    if x not in curve.special:
        raise PointNotSpecial(f"{fmt_point(x)} is not a special point")
    k = curve.weight(x)
    thetas = []
    for i in range(1, k + 1):
        src = curve.L_minus_o() if i == k else curve.L_xi(x, i)
        tgt = curve.L_xi(x, i - 1)
        sp = hom_basis(curve, src, tgt)
        if sp.dim != 1:
            raise TiltingObstruction(f"Hom({src}, {tgt}) has dimension {sp.dim}, expected 1")
        thetas.append(sp.basis_element(0))
    total = thetas[-1]
    for th in reversed(thetas[:-1]):
        total = compose(th, total)
    return thetas, total


def generating_set(curve: WeightedP1) -> list[ChainSheaf]:
    out = [curve.L()]
    for p in curve.points:
        out += [curve.L_xi(p.xi, i) for i in range(1, p.weight + 1)]
    return out


def tilting_set(curve: WeightedP1) -> list[ChainSheaf]:
    out = [curve.L(), curve.L_minus_o()]
    for p in curve.points:
        out += [curve.L_xi(p.xi, i) for i in range(1, p.weight)]
    return out


def hom_table(curve: WeightedP1, objects: Sequence[ChainSheaf] | None = None):
    """(objects, h0 matrix, h1 matrix) over ordered pairs."""
    objs = list(objects) if objects is not None else tilting_set(curve)
    h0 = [[hom_and_ext_dims(curve, a, b)[0] for b in objs] for a in objs]
    h1 = [[hom_and_ext_dims(curve, a, b)[1] for b in objs] for a in objs]
    return objs, h0, h1


# -- tilting endomorphism algebra ----------------------------------------------------------

@dataclass
class TiltingLabeling:
    """How the basis of End(T)^op is organized.

    ``blocks[(a, b)]`` lists the basis indices of Hom(objects[a], objects[b]);
    ``arms`` holds, per arm, the point and the algebra vectors of its arrows
    listed from L outwards (theta_{x,1}, ..., theta_{x,kappa}).
    """

    curve: WeightedP1
    objects: list[ChainSheaf]
    blocks: dict
    spaces: dict
    arms: list = field(default_factory=list)

    def index(self, obj: ChainSheaf) -> int:
        return self.objects.index(obj)


def tilting_endomorphism_algebra(curve: WeightedP1) -> tuple[Algebra, TiltingLabeling]:
    """(End T)^op for T the sum of the tilting set, with x * y = "x, then y"."""
    objs = tilting_set(curve)
    for a in objs:
        for b in objs:
            h1 = hom_and_ext_dims(curve, a, b)[1]
            if h1:
                raise TiltingObstruction(f"Ext^1({a}, {b}) has dimension {h1}")
    labels, entries, blocks, spaces = [], [], {}, {}
    for ia, a in enumerate(objs):
        for ib, b in enumerate(objs):
            sp = hom_basis(curve, a, b)
            spaces[(ia, ib)] = sp
            blocks[(ia, ib)] = []
            for k in range(sp.dim):
                blocks[(ia, ib)].append(len(labels))
                if ia == ib:
                    labels.append(f"e:{a.name}")
                else:
                    labels.append(f"{a.name}>{b.name}" + (f"#{k + 1}" if sp.dim > 1 else ""))
                entries.append((ia, ib, k))
    dim = len(labels)

    def product(i, j):
        a, b, k = entries[i]
        b2, c, l = entries[j]
        out = [ZERO] * dim
        if b != b2:
            return out
        comp = compose(spaces[(b, c)].basis_element(l), spaces[(a, b)].basis_element(k))
        coords = spaces[(a, c)].coords(comp.function)
        if coords is None:
            raise DivisorViolation("composite outside its Hom space")
        for t, x in zip(blocks[(a, c)], coords):
            out[t] = x
        return out

    unit = [ZERO] * dim
    idems = []
    for ia, a in enumerate(objs):
        sp = spaces[(ia, ia)]
        if sp.dim != 1 or sp.basis[0] != RationalFunction.constant(1):
            raise TiltingObstruction(f"End({a}) is not the scalars")
        unit[blocks[(ia, ia)][0]] = ONE
        v = [ZERO] * dim
        v[blocks[(ia, ia)][0]] = ONE
        idems.append((f"e:{a.name}", v))
    alg = Algebra.from_products(labels, product, unit, name=f"End(T){'_' + curve.name if curve.name else ''}",
                                hints={"idempotents": idems})
    lab = TiltingLabeling(curve, objs, blocks, spaces)
    lab.arms = _arms(curve, lab, dim)
    return alg, lab


def _arms(curve: WeightedP1, lab: TiltingLabeling, dim: int) -> list:
    """Arrow vectors per arm, following the weight conventions for short lists of points."""
    i_L, i_o = 0, 1
    arms = []
    for p in curve.points:
        vecs = []
        prev = i_L
        for i in range(1, p.weight + 1):
            cur = i_o if i == p.weight else lab.index(curve.L_xi(p.xi, i))
            # arrow from object `prev` to `cur` in the quiver is a map cur -> prev
            idx = lab.blocks[(cur, prev)]
            if len(idx) != 1:
                raise TiltingObstruction("arm map space is not one-dimensional")
            v = [ZERO] * dim
            v[idx[0]] = ONE
            vecs.append(v)
            prev = cur
        arms.append((p.xi, vecs))
    if len(arms) < 2:
        for y in curve.auxiliary_points(2 - len(arms)):
            sec = point_section(curve, y)
            v = [ZERO] * dim
            for t, x in zip(lab.blocks[(i_o, i_L)], sec.coords):
                v[t] = x
            arms.append((y, [v]))
    return arms


# -- canonical algebras -----------------------------------------------------------------

@dataclass
class CanonicalAlgebraPresentation:
    weights: tuple[int, ...]
    lambdas: tuple
    quiver: QuiverPresentation

    def algebra(self, name: str = "") -> Algebra:
        return algebra_from_quiver(self.quiver, name=name or self.name)

    @property
    def name(self) -> str:
        w = ",".join(map(str, self.weights))
        lam = ",".join(fmt_q(x) for x in self.lambdas)
        return f"R({w}{';' + lam if lam else ''})"

    def arm_path(self, j: int) -> tuple[str, ...]:
        """The written path alpha_{k_j j} ... alpha_{1 j} of arm j (1-based)."""
        return tuple(f"a{i}_{j}" for i in range(self.weights[j - 1], 0, -1))


def canonical_algebra(weights: Sequence[int], lambdas: Sequence = ()) -> CanonicalAlgebraPresentation:
    """Bound quiver with arms of the given lengths from s to t and the relations
    alpha_j = alpha_1 + lambda_j alpha_2 for j >= 3."""
    ws = tuple(int(k) for k in weights)
    lams = tuple(to_q(x) for x in lambdas)
    r = len(ws)
    if r < 2:
        raise InvalidWeights("need at least two arms")
    if any(k < 1 for k in ws):
        raise InvalidWeights("arm lengths must be positive")
    if r > 2 and any(k < 2 for k in ws):
        raise InvalidWeights("with more than two arms every arm needs length at least 2")
    if len(lams) != r - 2:
        raise InvalidWeights(f"need {r - 2} parameters, got {len(lams)}")
    if any(x == 0 for x in lams):
        raise RepeatedLambda("parameters must be nonzero")
    if len(set(lams)) != len(lams):
        raise RepeatedLambda("parameters must be distinct")
    vertices = ["s", "t"]
    arrows = []
    for j, k in enumerate(ws, start=1):
        inner = [f"v{j}_{i}" for i in range(1, k)]
        vertices += inner
        chain = ["s"] + inner + ["t"]
        for i in range(1, k + 1):
            arrows.append((f"a{i}_{j}", chain[i - 1], chain[i]))
    pres = CanonicalAlgebraPresentation(ws, lams, None)
    rels = []
    for j in range(3, r + 1):
        rels.append([(ONE, pres.arm_path(j)), (-ONE, pres.arm_path(1)),
                     (-lams[j - 3], pres.arm_path(2))])
    pres.quiver = QuiverPresentation(vertices, arrows, rels)
    return pres


@dataclass
class CanonicalMatch:
    weights: tuple[int, ...]
    lambdas: tuple
    presentation: CanonicalAlgebraPresentation
    canonical: Algebra
    images: list            # image in End(T) of each basis path of the canonical algebra
    theta_coords: list      # theta_{x_j} in the basis (theta_{x_1}, theta_{x_2})
    arrow_images: dict = field(default_factory=dict)

    def lines(self) -> list[str]:
        out = [f"weights = {','.join(map(str, self.weights))}",
               f"lambdas = {','.join(fmt_q(x) for x in self.lambdas) or '(none)'}",
               f"dim canonical = {self.canonical.dim}"]
        for j, (a, b) in enumerate(self.theta_coords, start=1):
            out.append(f"theta_{j} = {fmt_q(a)} theta_1 + {fmt_q(b)} theta_2")
        return out


def match_canonical(end_t: Algebra, labeling: TiltingLabeling) -> CanonicalMatch:
    """Identify End(T)^op with R(weights; lambdas) by explicit basis paths.

    Arms follow the order of the special points (auxiliary points fill up to
    two arms); the first two arms are kept as they are and arm j >= 3 is
    rescaled on its last arrow so that alpha_j = alpha_1 + lambda_j alpha_2.
    """
    arms = labeling.arms
    weights = tuple(len(vs) for _, vs in arms)
    i_L, i_o = 0, 1
    block = labeling.blocks[(i_o, i_L)]
    if len(block) != 2:
        raise NotCanonicalShape("Hom(L(-o), L) is not two-dimensional", witness=len(block))

    def prod(vecs):
        out = vecs[0]
        for v in vecs[1:]:
            out = end_t.mul(out, v)
        return out

    thetas = []
    for xi, vecs in arms:
        # the path alpha_k ... alpha_1 multiplies as alpha_k * ... * alpha_1
        th = prod(list(reversed(vecs)))
        coords = [th[t] for t in block]
        if any(th[t] for t in range(end_t.dim) if t not in block) or not any(coords):
            raise NotCanonicalShape(f"arm at {fmt_point(xi)} does not compose into Hom(L(-o), L)",
                                    witness=end_t.format_vec(th))
        thetas.append(coords)
    frame = Mat.from_columns([thetas[0], thetas[1]], 2)
    coeffs = []
    for j, th in enumerate(thetas):
        c = solve(frame, th)
        if c is None:
            raise NotCanonicalShape("theta_1 and theta_2 do not span Hom(L(-o), L)",
                                    witness=(thetas[0], thetas[1]))
        coeffs.append(c)
    lambdas = []
    scale = [ONE, ONE]
    for j in range(2, len(arms)):
        a, b = coeffs[j]
        if a == 0 or b == 0:
            raise NotCanonicalShape(f"arm {j + 1} is proportional to an earlier arm",
                                    witness=(a, b))
        lambdas.append(b / a)
        scale.append(ONE / a)
    try:
        pres = canonical_algebra(weights, lambdas)
    except (InvalidWeights, RepeatedLambda) as exc:
        raise NotCanonicalShape(str(exc), witness=lambdas) from exc
    canon = pres.algebra()
    images, arrow_image = _canonical_images(end_t, labeling, canon, arms, scale)
    _check_isomorphism(end_t, canon, images)
    return CanonicalMatch(weights, tuple(lambdas), pres, canon, images, coeffs, arrow_image)


def compare_presentation(end_t: Algebra, match: CanonicalMatch, other: Algebra) -> None:
    """Check that a quiver algebra with the canonical vertex and arrow names is End(T)^op.

    Arrows of ``other`` are sent to the arrow images found by
    :func:`match_canonical`; its basis paths must then map to a basis of
    End(T) multiplicatively.  Raises NotCanonicalShape with a witness.
    """
    pres = other.hints.get("quiver")
    if pres is None:
        raise NotCanonicalShape("the algebra has no quiver presentation", witness=other.name)
    mine = {(a.label, a.source, a.target) for a in match.presentation.quiver.arrows}
    theirs = {(a.label, a.source, a.target) for a in pres.arrows}
    if mine != theirs or set(pres.vertices) != set(match.presentation.quiver.vertices):
        raise NotCanonicalShape("quiver differs from the canonical quiver",
                                witness=sorted(mine ^ theirs))
    images = [_path_image(end_t, p, match.images, match.presentation, match.canonical,
                          match.arrow_images) for p in other.hints["paths"]]
    _check_isomorphism(end_t, other, images)


def _path_image(end_t, p, canon_images, pres, canon, arrow_image) -> list:
    if p[0] == "@":
        return list(canon_images[canon.hints["paths"].index(p)])
    v = arrow_image[p[0]]
    for a in p[1:]:
        v = end_t.mul(v, arrow_image[a])
    return v


def _canonical_images(end_t, labeling, canon, arms, scale) -> tuple[list, dict]:
    dim = end_t.dim
    vertex_image = {"s": labeling.index(labeling.curve.L()), "t": 1}
    curve = labeling.curve
    for j, (xi, vecs) in enumerate(arms, start=1):
        for i in range(1, len(vecs)):
            vertex_image[f"v{j}_{i}"] = labeling.index(curve.L_xi(xi, i))
    arrow_image = {}
    for j, (xi, vecs) in enumerate(arms, start=1):
        for i, v in enumerate(vecs, start=1):
            s = scale[j - 1] if i == len(vecs) else ONE
            arrow_image[f"a{i}_{j}"] = [x * s for x in v]
    images = []
    for p in canon.hints["paths"]:
        if p[0] == "@":
            v = [ZERO] * dim
            v[labeling.blocks[(vertex_image[p[1]],) * 2][0]] = ONE
        else:
            v = arrow_image[p[0]]
            for a in p[1:]:
                v = end_t.mul(v, arrow_image[a])
        images.append(v)
    return images, arrow_image


def _check_isomorphism(end_t: Algebra, canon: Algebra, images: list) -> None:
    if canon.dim != end_t.dim:
        raise NotCanonicalShape(f"dimensions differ: canonical {canon.dim}, End(T) {end_t.dim}",
                                witness=(canon.dim, end_t.dim))
    if len(EchelonBasis.from_vectors(images, end_t.dim)) != canon.dim:
        raise NotCanonicalShape("images of the basis paths are dependent", witness=None)

    def image(v):
        out = [ZERO] * end_t.dim
        for c, w in zip(v, images):
            if c:
                for t, x in enumerate(w):
                    if x:
                        out[t] += c * x
        return out

    if image(canon.unit) != list(end_t.unit):
        raise NotCanonicalShape("unit is not preserved", witness=end_t.format_vec(image(canon.unit)))
    for i in range(canon.dim):
        for j in range(canon.dim):
            lhs = image(canon.mul(canon.basis_vec(i), canon.basis_vec(j)))
            rhs = end_t.mul(images[i], images[j])
            if lhs != rhs:
                raise NotCanonicalShape(
                    f"product {canon.labels[i]} * {canon.labels[j]} not preserved",
                    witness=(canon.labels[i], canon.labels[j]))
