from pathlib import Path

import pytest

from ncminors.algebra import check_axioms
from ncminors.errors import ParseError
from ncminors.fileformats import (emit_algebra, emit_curve, load_algebra, parse_algebra,
                                  parse_curve, spec_from_algebra)

DATA = Path(__file__).resolve().parent.parent / "data"
# tampered fixtures parse and fail only semantically, so they round-trip too
UNPARSEABLE = {"unknown_vertex.alg"}
ALG_FILES = sorted(DATA.glob("*.alg")) + sorted(
    p for p in (DATA / "negative").glob("*.alg") if p.name not in UNPARSEABLE)
CURVE_FILES = sorted(DATA.glob("*.curve"))

HEADER = "[meta]\nformat = 1\n"


@pytest.mark.parametrize("path", ALG_FILES, ids=lambda p: p.name)
def test_algebra_round_trip(path):
    spec = parse_algebra(path.read_text(), str(path))
    again = parse_algebra(emit_algebra(spec))
    assert again.key() == spec.key()


@pytest.mark.parametrize("path", CURVE_FILES, ids=lambda p: p.name)
def test_curve_round_trip(path):
    spec = parse_curve(path.read_text(), str(path))
    again = parse_curve(emit_curve(spec))
    assert again.key() == spec.key()
    spec.build()


@pytest.mark.parametrize("path", sorted(DATA.glob("*.alg")), ids=lambda p: p.name)
def test_shipped_algebras_are_valid(path):
    check_axioms(load_algebra(path))


@pytest.mark.parametrize("name", sorted(UNPARSEABLE))
def test_unparseable_fixtures_are_rejected(name):
    path = DATA / "negative" / name
    with pytest.raises(ParseError):
        parse_algebra(path.read_text(), str(path))


def test_built_algebra_round_trips_through_text(lam):
    spec = spec_from_algebra(lam)
    a = parse_algebra(emit_algebra(spec)).build()
    assert a.dim == lam.dim and a.labels == lam.labels
    assert a.dense_tensor() == lam.dense_tensor()


def test_structure_constants_equal_quiver_version():
    q = load_algebra(DATA / "lambda.alg")
    s = load_algebra(DATA / "lambda_sc.alg")
    assert q.dense_tensor() == s.dense_tensor()


def _error(text, parser=parse_algebra):
    with pytest.raises(ParseError) as info:
        parser(text, "x.alg")
    return info.value


def test_unknown_key_rejected():
    e = _error(HEADER + "[quiver]\nvertices = 1\ncolour = red\n")
    assert e.line == 5 and "colour" in e.rule


def test_unknown_vertex_has_column():
    e = _error(HEADER + "[quiver]\nvertices = 1, 2\narrow = a: 1 -> 3\n")
    assert (e.line, e.column) == (5, 17)
    assert "unknown vertex" in e.rule
    assert str(e).startswith("x.alg:5:17:")


def test_missing_meta_and_bad_version():
    assert "meta" in _error("[quiver]\nvertices = 1\n").rule
    assert "format" in _error("[meta]\nformat = 2\n[quiver]\nvertices = 1\n").rule


def test_exactly_one_body_section():
    e = _error(HEADER + "[quiver]\nvertices = 1\n[structure_constants]\ndim = 1\n")
    assert "structure_constants" in e.rule or "quiver" in e.rule


def test_bad_rational():
    e = _error(HEADER + "[structure_constants]\ndim = 1\nunit = 1\nentry = 1 1 1 1/0\n")
    assert e.line == 6


def test_entry_index_out_of_range():
    e = _error(HEADER + "[structure_constants]\ndim = 1\nunit = 1\nentry = 1 2 1 1\n")
    assert e.line == 6


def test_relation_parsing():
    text = HEADER + ("[quiver]\nvertices = s, t, u, v, w\n"
                     "arrow = a1: s -> u\narrow = a2: u -> t\narrow = b1: s -> v\n"
                     "arrow = b2: v -> t\narrow = c1: s -> w\narrow = c2: w -> t\n"
                     "relation = c2.c1 - a2.a1 - 3/2 b2.b1 = 0\n")
    spec = parse_algebra(text)
    assert spec.build().dim == 5 + 6 + 3 - 1
    assert "3/2" in emit_algebra(spec)


def test_relation_must_be_composable():
    text = HEADER + "[quiver]\nvertices = 1, 2\narrow = a: 1 -> 2\nrelation = a.a = 0\n"
    assert _error(text).line == 6


def test_curve_errors():
    base = HEADER + "[curve]\nrank = 2\nbase_point = inf\n"
    e = _error(base + "[point]\nxi = 0\nweight = 2\ncomposition = 1,2\n", parse_curve)
    assert "composition" in e.rule
    e = _error(base + "[point]\nxi = 0\nweight = 2\n", parse_curve)
    assert "composition" in e.rule
    e = _error(base + "[point]\nxi = inf\nweight = 2\ncomposition = 1,1\n", parse_curve)
    assert "base point" in e.rule
