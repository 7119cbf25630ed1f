"""Reading and writing the ``.alg`` and ``.curve`` text formats.

Both are line based: ``[section]`` headers, ``key = value`` lines, ``#``
comments.  The grammar is in ``docs/formats.md``.  Parsing keeps line and
column numbers so every diagnostic can point at the offending token.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import Algebra
from .errors import InvalidCurve, InvalidPresentation, ParseError
from .exactla import ONE, fmt_q, to_q
from .hcurve import WeightedP1
from .p1 import fmt_point, parse_point
from .quiver import QuiverPresentation, algebra_from_quiver

__all__ = ["AlgebraSpec", "CurveSpec", "parse_algebra", "parse_curve", "load_algebra",
           "load_curve", "emit_algebra", "emit_curve", "spec_from_algebra", "spec_from_curve",
           "FORMAT_VERSION"]

FORMAT_VERSION = "1"

_NUMBER = re.compile(r"[+-]?\d+(?:/\d+)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_TERM_TOKENS = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<path>[A-Za-z_][A-Za-z0-9_']*"
                          r"(?:\.[A-Za-z_][A-Za-z0-9_']*)*)|(?P<op>[+\-*])|(?P<bad>\S))")


@dataclass
class _Line:
    key: str
    value: str
    line: int
    col: int        # column where the value starts


@dataclass
class _Section:
    name: str
    line: int
    entries: list = field(default_factory=list)


class _Source:
    def __init__(self, text: str, path: str):
        self.path = path
        self.sections: list[_Section] = []
        for n, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0].rstrip()
            if not body.strip():
                continue
            stripped = body.lstrip()
            indent = len(body) - len(stripped)
            if stripped.startswith("["):
                if not stripped.endswith("]"):
                    self.fail(n, indent + 1, "section header must end with ']'")
                name = stripped[1:-1].strip()
                if not _IDENT.fullmatch(name):
                    self.fail(n, indent + 2, f"malformed section name {name!r}")
                self.sections.append(_Section(name, n))
                continue
            if "=" not in stripped:
                self.fail(n, indent + 1, "expected 'key = value'")
            if not self.sections:
                self.fail(n, indent + 1, "key outside of any section")
            key, value = stripped.split("=", 1)
            key = key.strip()
            if not _IDENT.fullmatch(key):
                self.fail(n, indent + 1, f"malformed key {key!r}")
            col = indent + len(stripped) - len(value.lstrip()) + 1 if value.strip() else len(body) + 1
            self.sections[-1].entries.append(_Line(key, value.strip(), n, col))

    def fail(self, line: int, col: int, rule: str):
        raise ParseError(self.path, line, col, rule)

    def single(self, sec: _Section, allowed: dict[str, bool], repeated: set = frozenset()) -> dict:
        """Check keys of a section; ``allowed`` maps key -> required."""
        out: dict = {}
        for e in sec.entries:
            if e.key not in allowed:
                self.fail(e.line, 1, f"unknown key {e.key!r} in [{sec.name}]")
            if e.key in repeated:
                out.setdefault(e.key, []).append(e)
            elif e.key in out:
                self.fail(e.line, 1, f"key {e.key!r} given twice in [{sec.name}]")
            else:
                out[e.key] = e
        for k, req in allowed.items():
            if req and k not in out:
                self.fail(sec.line, 1, f"[{sec.name}] is missing the key {k!r}")
        return out

    def rational(self, e: _Line, text: str | None = None, offset: int = 0):
        text = e.value if text is None else text
        if not _NUMBER.fullmatch(text):
            self.fail(e.line, e.col + offset, f"expected a rational number 'p/q', got {text!r}")
        try:
            return to_q(text)
        except (ValueError, ZeroDivisionError):
            self.fail(e.line, e.col + offset, f"invalid rational {text!r}")

    def integer(self, e: _Line, minimum: int | None = None) -> int:
        if not re.fullmatch(r"[+-]?\d+", e.value):
            self.fail(e.line, e.col, f"expected an integer for {e.key!r}, got {e.value!r}")
        v = int(e.value)
        if minimum is not None and v < minimum:
            self.fail(e.line, e.col, f"{e.key} must be at least {minimum}")
        return v


def _items(value: str) -> list[tuple[str, int]]:
    """Comma or blank separated items with their 0-based offsets."""
    return [(m.group(), m.start()) for m in re.finditer(r"[^,\s]+", value)]


def _meta(src: _Source, allowed_sections: set) -> tuple[str, list[_Section]]:
    if not src.sections or src.sections[0].name != "meta":
        src.fail(src.sections[0].line if src.sections else 1, 1, "file must start with a [meta] section")
    for s in src.sections:
        if s.name not in allowed_sections | {"meta"}:
            src.fail(s.line, 2, f"unknown section [{s.name}]")
        if s.name == "meta" and s is not src.sections[0]:
            src.fail(s.line, 2, "[meta] given twice")
    meta = src.single(src.sections[0], {"format": True, "name": False, "field": False})
    if meta["format"].value != FORMAT_VERSION:
        src.fail(meta["format"].line, meta["format"].col,
                 f"unsupported format {meta['format'].value!r}, expected {FORMAT_VERSION}")
    if "field" in meta and meta["field"].value != "Q":
        src.fail(meta["field"].line, meta["field"].col, "only field = Q is supported")
    name = meta["name"].value if "name" in meta else ""
    return name, src.sections[1:]


# -- algebras ---------------------------------------------------------------------------

@dataclass
class AlgebraSpec:
    """A parsed ``.alg`` file: a quiver presentation or a structure-constant table."""

    name: str
    quiver: QuiverPresentation | None = None
    labels: list[str] = field(default_factory=list)
    unit: list = field(default_factory=list)
    entries: list = field(default_factory=list)    # (i, j, k, value), 0-based

    def build(self, validate: bool = True) -> Algebra:
        """The algebra; ``validate=False`` skips the associativity and unit check."""
        if self.quiver is not None:
            return algebra_from_quiver(self.quiver, name=self.name)
        return Algebra.from_entries(self.labels, self.entries, self.unit, name=self.name,
                                    validate=validate)

    def key(self) -> tuple:
        """Comparable form used by round-trip checks."""
        if self.quiver is not None:
            q = self.quiver
            return (self.name, "quiver", tuple(q.vertices),
                    tuple((a.label, a.source, a.target) for a in q.arrows),
                    tuple(tuple(r) for r in q.relations))
        return (self.name, "sc", tuple(self.labels), tuple(self.unit),
                tuple(sorted(self.entries)))


def _parse_terms(src: _Source, e: _Line, text: str, offset: int) -> list:
    """Signed rational combination of dot-written paths, or the literal 0."""
    terms, sign, coef, expect_term = [], ONE, None, True
    pos = 0
    while pos < len(text):
        m = _TERM_TOKENS.match(text, pos)
        if m is None or m.end() == pos:
            break
        col = offset + m.start(m.lastgroup)
        pos = m.end()
        kind = m.lastgroup
        if kind == "bad":
            src.fail(e.line, e.col + col, f"unexpected character {m.group('bad')!r}")
        if kind == "op":
            op = m.group("op")
            if op == "*":
                if coef is None:
                    src.fail(e.line, e.col + col, "'*' must follow a coefficient")
                continue
            if coef is not None:
                src.fail(e.line, e.col + col, "a coefficient must be followed by a path")
            sign = sign * (ONE if op == "+" else -ONE)
            expect_term = True
            continue
        if kind == "num":
            if coef is not None:
                src.fail(e.line, e.col + col, "two coefficients in a row")
            coef = src.rational(e, m.group("num"), col)
            continue
        if not expect_term:
            src.fail(e.line, e.col + col, "missing '+' or '-' between terms")
        path = tuple(m.group("path").split("."))
        terms.append((sign * (ONE if coef is None else coef), path))
        sign, coef, expect_term = ONE, None, False
    if coef is not None:
        if coef == 0 and not terms:
            return []
        src.fail(e.line, e.col + offset + len(text), "a coefficient must be followed by a path")
    if expect_term and terms:
        src.fail(e.line, e.col + offset + len(text), "expression ends with an operator")
    if not terms and text.strip():
        src.fail(e.line, e.col + offset, "expected a combination of paths or 0")
    return terms


def _parse_relation(src: _Source, e: _Line) -> list:
    if e.value.count("=") != 1:
        src.fail(e.line, e.col, "a relation has the form 'lhs = rhs'")
    lhs, rhs = e.value.split("=")
    left = _parse_terms(src, e, lhs, 0)
    right = _parse_terms(src, e, rhs, len(lhs) + 1)
    acc: dict = {}
    order = []
    for c, p in left + [(-c, p) for c, p in right]:
        if p not in acc:
            order.append(p)
        acc[p] = acc.get(p, 0) + c
    rel = [(acc[p], p) for p in order if acc[p]]
    if not rel:
        src.fail(e.line, e.col, "relation is trivially zero")
    return rel


def _parse_quiver(src: _Source, sec: _Section, name: str) -> AlgebraSpec:
    keys = src.single(sec, {"vertices": True, "arrow": False, "relation": False},
                      repeated={"arrow", "relation"})
    ve = keys["vertices"]
    vertices = []
    for v, off in _items(ve.value):
        if not re.fullmatch(r"[A-Za-z0-9_]+", v):
            src.fail(ve.line, ve.col + off, f"malformed vertex label {v!r}")
        if v in vertices:
            src.fail(ve.line, ve.col + off, f"vertex {v!r} repeated")
        vertices.append(v)
    if not vertices:
        src.fail(ve.line, ve.col, "at least one vertex is required")
    arrows = []
    for e in keys.get("arrow", []):
        m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_']*)\s*:\s*([A-Za-z0-9_]+)\s*->\s*([A-Za-z0-9_]+)", e.value)
        if not m:
            src.fail(e.line, e.col, "an arrow has the form 'label: source -> target'")
        for g in (2, 3):
            if m.group(g) not in vertices:
                src.fail(e.line, e.col + m.start(g), f"unknown vertex {m.group(g)!r}")
        if any(a[0] == m.group(1) for a in arrows):
            src.fail(e.line, e.col, f"arrow {m.group(1)!r} repeated")
        arrows.append((m.group(1), m.group(2), m.group(3)))
    labels = {a[0] for a in arrows}
    relations = []
    for e in keys.get("relation", []):
        rel = _parse_relation(src, e)
        for _, p in rel:
            for a in p:
                if a not in labels:
                    src.fail(e.line, e.col + e.value.find(a), f"unknown arrow {a!r}")
        relations.append((e, rel))
    try:
        pres = QuiverPresentation(vertices, arrows, [r for _, r in relations])
    except InvalidPresentation as exc:
        line = relations[0][0].line if relations else sec.line
        src.fail(line, 1, f"invalid presentation: {exc}")
    return AlgebraSpec(name, quiver=pres)


def _parse_sc(src: _Source, sec: _Section, name: str) -> AlgebraSpec:
    keys = src.single(sec, {"dim": True, "labels": False, "unit": True, "entry": False},
                      repeated={"entry"})
    n = src.integer(keys["dim"], minimum=1)
    if "labels" in keys:
        le = keys["labels"]
        labels = [x for x, _ in _items(le.value)]
        if len(labels) != n:
            src.fail(le.line, le.col, f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            src.fail(le.line, le.col, "labels must be distinct")
        for lab, off in _items(le.value):
            if "=" in lab:
                src.fail(le.line, le.col + off, f"malformed label {lab!r}")
    else:
        labels = [f"b{i + 1}" for i in range(n)]
    ue = keys["unit"]
    items = _items(ue.value)
    if len(items) != n:
        src.fail(ue.line, ue.col, f"unit needs {n} coordinates, got {len(items)}")
    unit = [src.rational(ue, x, off) for x, off in items]
    entries, seen = [], set()
    for e in keys.get("entry", []):
        parts = _items(e.value)
        if len(parts) != 4:
            src.fail(e.line, e.col, "an entry has the form 'i j k value'")
        idx = []
        for x, off in parts[:3]:
            if not re.fullmatch(r"\d+", x) or not 1 <= int(x) <= n:
                src.fail(e.line, e.col + off, f"index {x!r} outside 1..{n}")
            idx.append(int(x) - 1)
        if tuple(idx) in seen:
            src.fail(e.line, e.col, "entry given twice")
        seen.add(tuple(idx))
        val = src.rational(e, parts[3][0], parts[3][1])
        if val:
            entries.append((idx[0], idx[1], idx[2], val))
    return AlgebraSpec(name, labels=labels, unit=unit, entries=entries)


def parse_algebra(text: str, path: str = "<string>") -> AlgebraSpec:
    src = _Source(text, path)
    name, rest = _meta(src, {"quiver", "structure_constants"})
    if len(rest) != 1:
        src.fail(rest[1].line if len(rest) > 1 else len(text.splitlines()) + 1, 1,
                 "exactly one of [quiver] or [structure_constants] is required")
    sec = rest[0]
    if sec.name == "quiver":
        return _parse_quiver(src, sec, name)
    return _parse_sc(src, sec, name)


def load_algebra(path) -> Algebra:
    """Parse and build; structural failures of the table are reported with the path."""
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(str(p), 0, 0, f"cannot read file: {exc.strerror}") from exc
    spec = parse_algebra(text, str(p))
    return spec.build()


def _fmt_term(c, p, first: bool) -> str:
    path = ".".join(p)
    mag = -c if c < 0 else c
    body = path if mag == 1 else f"{fmt_q(mag)} {path}"
    if first:
        return ("-" if c < 0 else "") + body
    return ("- " if c < 0 else "+ ") + body


def emit_algebra(spec: AlgebraSpec) -> str:
    out = ["[meta]", f"format = {FORMAT_VERSION}"]
    if spec.name:
        out.append(f"name = {spec.name}")
    out.append("field = Q")
    out.append("")
    if spec.quiver is not None:
        q = spec.quiver
        out += ["[quiver]", "vertices = " + ", ".join(q.vertices)]
        out += [f"arrow = {a.label}: {a.source} -> {a.target}" for a in q.arrows]
        for rel in q.relations:
            terms = " ".join(_fmt_term(c, p, i == 0) for i, (c, p) in enumerate(rel))
            out.append(f"relation = {terms} = 0")
    else:
        out += ["[structure_constants]", f"dim = {len(spec.labels)}",
                "labels = " + " ".join(spec.labels),
                "unit = " + " ".join(fmt_q(x) for x in spec.unit)]
        out += [f"entry = {i + 1} {j + 1} {k + 1} {fmt_q(v)}" for i, j, k, v in sorted(spec.entries)]
    return "\n".join(out) + "\n"


def spec_from_algebra(a: Algebra) -> AlgebraSpec:
    """Structure-constant spec of an algebra, or its quiver presentation when known."""
    pres = a.hints.get("quiver")
    if pres is not None:
        return AlgebraSpec(a.name, quiver=pres)
    return AlgebraSpec(a.name, labels=list(a.labels), unit=list(a.unit),
                       entries=[(i, j, k, v) for i, j, k, v in a.entries()])


# -- curves --------------------------------------------------------------------------

@dataclass
class CurveSpec:
    name: str
    rank: int
    base_point: object
    points: list        # (xi, weight, composition)

    def build(self) -> WeightedP1:
        return WeightedP1(self.points, self.rank, self.base_point, name=self.name)

    def key(self) -> tuple:
        return (self.name, self.rank, self.base_point,
                tuple((x, w, tuple(c)) for x, w, c in self.points))


def _point(src: _Source, e: _Line):
    try:
        if e.value.lower() == "inf":
            return parse_point("inf")
        return parse_point(src.rational(e))
    except (ValueError, ZeroDivisionError):
        src.fail(e.line, e.col, f"expected a rational number or 'inf', got {e.value!r}")


def parse_curve(text: str, path: str = "<string>") -> CurveSpec:
    src = _Source(text, path)
    name, rest = _meta(src, {"curve", "point"})
    curves = [s for s in rest if s.name == "curve"]
    if len(curves) != 1:
        src.fail(curves[1].line if len(curves) > 1 else 1, 1, "exactly one [curve] section is required")
    if rest[0].name != "curve":
        src.fail(rest[0].line, 2, "[curve] must come before the [point] sections")
    ck = src.single(curves[0], {"rank": True, "base_point": False})
    rank = src.integer(ck["rank"], minimum=1)
    base = _point(src, ck["base_point"]) if "base_point" in ck else parse_point("inf")
    points = []
    for sec in rest[1:]:
        pk = src.single(sec, {"xi": True, "weight": True, "composition": True})
        xi = _point(src, pk["xi"])
        w = src.integer(pk["weight"], minimum=2)
        ce = pk["composition"]
        comp = []
        for x, off in _items(ce.value):
            if not re.fullmatch(r"\d+", x) or int(x) < 1:
                src.fail(ce.line, ce.col + off, f"composition parts are positive integers, got {x!r}")
            comp.append(int(x))
        if len(comp) != w:
            src.fail(ce.line, ce.col, f"composition has {len(comp)} parts, weight is {w}")
        if sum(comp) != rank:
            src.fail(ce.line, ce.col, f"composition sums to {sum(comp)}, rank is {rank}")
        if xi in [p[0] for p in points]:
            src.fail(pk["xi"].line, pk["xi"].col, f"point {fmt_point(xi)} repeated")
        if xi == base:
            src.fail(pk["xi"].line, pk["xi"].col, "a special point must differ from the base point")
        points.append((xi, w, tuple(comp)))
    spec = CurveSpec(name, rank, base, points)
    try:
        spec.build()
    except InvalidCurve as exc:
        src.fail(curves[0].line, 1, str(exc))
    return spec


def load_curve(path) -> WeightedP1:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(str(p), 0, 0, f"cannot read file: {exc.strerror}") from exc
    return parse_curve(text, str(p)).build()


def emit_curve(spec: CurveSpec) -> str:
    out = ["[meta]", f"format = {FORMAT_VERSION}"]
    if spec.name:
        out.append(f"name = {spec.name}")
    out += ["", "[curve]", f"rank = {spec.rank}", f"base_point = {fmt_point(spec.base_point)}"]
    for xi, w, comp in spec.points:
        out += ["", "[point]", f"xi = {fmt_point(xi)}", f"weight = {w}",
                "composition = " + ",".join(map(str, comp))]
    return "\n".join(out) + "\n"


def spec_from_curve(c: WeightedP1) -> CurveSpec:
    return CurveSpec(c.name, c.rank, c.base_point,
                     [(p.xi, p.weight, tuple(p.composition)) for p in c.points])

