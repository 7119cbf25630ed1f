"""Bound quiver presentations and their path algebras.

Paths are written right to left as compositions: ``("b1", "a1")`` is the path
that first traverses ``a1`` and then ``b1``, printed ``b1.a1``.  With this
convention left modules over the path algebra are quiver representations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Algebra
from .errors import InvalidPresentation, PossiblyInfiniteDimensional
from .exactla import ONE, ZERO, EchelonBasis, to_q

Path = tuple  # tuple of arrow labels in written order, or ("@", vertex) for a trivial path


@dataclass(frozen=True)
class Arrow:
    label: str
    source: str
    target: str


@dataclass
class QuiverPresentation:
    vertices: list[str]
    arrows: list[Arrow]
    relations: list[list[tuple[object, tuple[str, ...]]]] = field(default_factory=list)

    def __post_init__(self):
        self.vertices = [str(v) for v in self.vertices]
        self.arrows = [a if isinstance(a, Arrow) else Arrow(*a) for a in self.arrows]
        self.relations = [[(to_q(c), tuple(p)) for c, p in rel] for rel in self.relations]
        self.validate()

    def arrow(self, label: str) -> Arrow:
        for a in self.arrows:
            if a.label == label:
                return a
        raise InvalidPresentation(f"unknown arrow {label!r}")

    def validate(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidPresentation("repeated vertex label")
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise InvalidPresentation("repeated arrow label")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise InvalidPresentation(f"arrow {a.label} uses an unknown vertex")
            if a.label in ("e" + v for v in self.vertices):
                raise InvalidPresentation(f"arrow label {a.label} clashes with a vertex idempotent")
        for n, rel in enumerate(self.relations):
            ends = set()
            for c, p in rel:
                if len(p) < 2:
                    raise InvalidPresentation(f"relation {n + 1}: path {'.'.join(p)} has length < 2")
                ends.add(self.path_ends(p))
            if len(ends) > 1:
                raise InvalidPresentation(f"relation {n + 1}: paths have different endpoints")

    def path_ends(self, p: Sequence[str]) -> tuple[str, str]:
        """(source, target) of a written path, checking composability."""
        arrows = [self.arrow(x) for x in p]
        for left, right in zip(arrows, arrows[1:]):
            if right.target != left.source:
                raise InvalidPresentation(f"path {'.'.join(p)} is not composable")
        return arrows[-1].source, arrows[0].target

    def is_acyclic(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        ready = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for a in self.arrows:
                if a.source == v:
                    indeg[a.target] -= 1
                    if indeg[a.target] == 0:
                        ready.append(a.target)
        return seen == len(self.vertices)


def enumerate_paths(pres: QuiverPresentation, max_len: int) -> list[Path]:
    """All paths of length <= max_len, ordered by (length, arrow-index sequence)."""
    idx = {a.label: n for n, a in enumerate(pres.arrows)}
    out: list[Path] = [("@", v) for v in pres.vertices]
    layer = [(a.label,) for a in pres.arrows]
    for length in range(1, max_len + 1):
        layer.sort(key=lambda p: [idx[x] for x in p])
        out.extend(layer)
        if length == max_len:
            break
        nxt = []
        for p in layer:
            tgt = pres.arrow(p[0]).target
            for a in pres.arrows:
                if a.source == tgt:
                    nxt.append((a.label,) + p)
        layer = nxt
        if not layer:
            break
    return out


def path_length(p: Path) -> int:
    return 0 if p and p[0] == "@" else len(p)


def path_label(p: Path) -> str:
    return "e" + p[1] if p[0] == "@" else ".".join(p)


def concat(pres: QuiverPresentation, p: Path, q: Path) -> Path | None:
    """p after q, or None when the composition is zero."""
    sp = p[1] if p[0] == "@" else pres.arrow(p[-1]).source
    tq = q[1] if q[0] == "@" else pres.arrow(q[0]).target
    if sp != tq:
        return None
    if p[0] == "@":
        return q
    if q[0] == "@":
        return p
    return p + q


def algebra_from_quiver(pres: QuiverPresentation, length_cap: int = 32, name: str = "") -> Algebra:
    """kQ modulo the ideal generated by the relations, on a basis of path cosets.

    For increasing N the truncation kQ/J^{N+1} is reduced modulo the span of
    all p r q.  Once every path of length N falls into that span the
    arrow ideal satisfies J^N in I, so the truncation is the algebra itself.
    """
    # an acyclic quiver has no path longer than the vertex count
    start = min(len(pres.vertices), length_cap) if pres.is_acyclic() else 1
    for n in range(max(start, 1), length_cap + 1):
        result = _try_length(pres, n)
        if result is not None:
            return _build(pres, *result, name=name)
    raise PossiblyInfiniteDimensional(length_cap)


def _try_length(pres: QuiverPresentation, n: int):
    paths = enumerate_paths(pres, n)
    # columns ordered from the largest path down so pivots fall on leading paths
    order = sorted(range(len(paths)), key=lambda t: t, reverse=True)
    col = {paths[t]: c for c, t in enumerate(order)}
    eb = EchelonBasis(len(paths))
    for rel in pres.relations:
        for p in paths:
            for q in paths:
                vec = {}
                for c, r in rel:
                    w = concat(pres, r, q)
                    if w is None:
                        continue
                    w = concat(pres, p, w)
                    if w is None or path_length(w) > n:
                        continue
                    vec[col[w]] = vec.get(col[w], ZERO) + c
                if any(vec.values()):
                    dense = [ZERO] * len(paths)
                    for k, v in vec.items():
                        dense[k] = v
                    eb.add(dense)
    top = [p for p in paths if path_length(p) == n]
    for p in top:
        v = [ZERO] * len(paths)
        v[col[p]] = ONE
        if not eb.contains(v):
            return None
    return paths, col, eb


def _build(pres, paths, col, eb, name=""):
    piv = set(eb.pivots)
    basis_paths = [p for p in paths if col[p] not in piv]
    pos = {p: t for t, p in enumerate(basis_paths)}
    n = len(paths)

    def normal_form(w):
        if w is None:
            return ()
        c = col.get(w)
        if c is None:  # longer than the truncation: lies in the ideal
            return ()
        v = [ZERO] * n
        v[c] = ONE
        r = eb.reduce(v)
        out = []
        for p in basis_paths:
            x = r[col[p]]
            if x:
                out.append((pos[p], x))
        return tuple(sorted(out))

    table = [[normal_form(concat(pres, p, q)) for q in basis_paths] for p in basis_paths]
    dim = len(basis_paths)
    unit = [ZERO] * dim
    for v in pres.vertices:
        unit[pos[("@", v)]] = ONE
    labels = [path_label(p) for p in basis_paths]

    def vec_of(w):
        out = [ZERO] * dim
        for k, x in normal_form(w):
            out[k] = x
        return out

    idems = [("e" + v, vec_of(("@", v))) for v in pres.vertices]
    gens = idems + [(a.label, vec_of((a.label,))) for a in pres.arrows]
    hints = {"idempotents": idems, "generators": gens, "paths": basis_paths,
             "quiver": pres}
    return Algebra(labels, table, unit, name=name, hints=hints, validate=True)
