import pytest

import oracles
from ncminors import (algebra_from_structure_constants, center, multiply, opposite,
                      primitive_idempotents, radical, regular_module, simple_modules)
from ncminors.algebra import Algebra, check_axioms, is_semisimple, quotient_algebra
from ncminors.corpus import CORPUS, kronecker, semisimple_pair
from ncminors.errors import (AssociativityViolation, NonBasicTop, ParentMismatch,
                             PossiblyInfiniteDimensional, UnitViolation)
from ncminors.exactla import ONE
from ncminors.quiver import QuiverPresentation, algebra_from_quiver
from ncminors.representations import hom_space


def _dense_mat2():
    n = 2
    t = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    for i in range(n):
        for j in range(n):
            for l in range(n):
                t[i * n + j][j * n + l][i * n + l] = 1
    return t


def test_field_from_tensor():
    k = algebra_from_structure_constants(["1"], [[[1]]], [1])
    assert k.dim == 1


def test_matrix_units():
    m = algebra_from_structure_constants(["E11", "E12", "E21", "E22"], _dense_mat2(), [1, 0, 0, 1])
    assert m.dim == 4


def test_broken_associativity_named():
    t = _dense_mat2()
    t[1][2][0] = 2          # E12 * E21 = 2 E11
    with pytest.raises(AssociativityViolation) as info:
        algebra_from_structure_constants(["E11", "E12", "E21", "E22"], t, [1, 0, 0, 1])
    assert any(str(i) in str(info.value) for i in range(4))


def test_broken_unit_named():
    with pytest.raises(UnitViolation):
        algebra_from_structure_constants(["x"], [[[2]]], [1])


def test_quiver_examples(lam, dual):
    assert algebra_from_quiver(QuiverPresentation(["1"], [])).dim == 1
    kr = kronecker()
    assert kr.dim == 4 and kr.labels == ["e1", "e2", "a1", "a2"]
    assert lam.dim == 9
    assert dual.dim == 2


def test_quiver_infinite_dimension_is_loud():
    pres = QuiverPresentation(["1"], [("x", "1", "1")])
    with pytest.raises(PossiblyInfiniteDimensional):
        algebra_from_quiver(pres, length_cap=6)


def test_lambda_path_count_matches_enumeration(lam):
    n = oracles.monomial_path_count(
        ["1", "2", "3"],
        [("a1", "1", "2"), ("a2", "1", "2"), ("b1", "2", "3"), ("b2", "2", "3")],
        [("b1", "a1"), ("b2", "a2")])
    assert n == lam.dim == 9


def test_multiply(lam):
    one = lam.one()
    a1 = lam.by_label("a1")
    assert multiply(one, a1) == a1
    assert multiply(lam.by_label("e1"), lam.by_label("e2")).is_zero()
    assert multiply(lam.by_label("b1"), a1).is_zero()
    assert not multiply(lam.by_label("b1"), lam.by_label("a2")).is_zero()


def test_multiply_parent_mismatch(lam, dual):
    with pytest.raises(ParentMismatch):
        multiply(lam.one(), dual.one())


def test_radical_examples(lam, dual):
    assert radical(semisimple_pair()).dim == 0
    r = radical(dual)
    assert r.dim == 1 and r.contains(dual.by_label("x").coords)
    r = radical(lam)
    assert r.dim == 6
    for lab in ["a1", "a2", "b1", "b2", "b1.a2", "b2.a1"]:
        assert r.contains(lam.by_label(lab).coords)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_radical_nilpotent_and_quotient_semisimple(name):
    a = CORPUS[name]()
    r = radical(a)
    assert r.nilpotency_index() is not None and r.nilpotency_index() <= max(a.dim, 1)
    q = quotient_algebra(a, r).algebra
    assert radical(q).dim == 0


def test_center(lam, mat2, dual):
    assert len(center(dual)) == dual.dim
    z = center(mat2)
    assert len(z) == 1
    assert z[0].coords[0] == z[0].coords[3] and z[0].coords[1] == z[0].coords[2] == 0
    assert len(center(lam)) == oracles.center_dim(lam) == 1


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_center_matches_oracle(name):
    a = CORPUS[name]()
    assert len(center(a)) == oracles.center_dim(a)


def test_primitive_idempotents(lam, mat2):
    es = primitive_idempotents(semisimple_pair())
    assert len(es) == 2
    es = primitive_idempotents(lam)
    assert [e.coords for e in es] == [lam.by_label(f"e{i}").coords for i in (1, 2, 3)]
    with pytest.raises(NonBasicTop):
        primitive_idempotents(mat2)


def test_simples_and_regular(lam, dual):
    k = CORPUS["k"]()
    assert regular_module(k).dim == 1 and len(simple_modules(k)) == 1
    assert [s.dim for s in simple_modules(lam)] == [1, 1, 1]
    assert [s.dim for s in simple_modules(dual)] == [1]


def test_hom_space_examples(lam):
    s = simple_modules(lam)
    assert len(hom_space(s[0], s[0])) == 1
    assert len(hom_space(s[0], s[1])) == 0
    reg = regular_module(lam)
    assert len(hom_space(reg, reg)) == 9


def test_hom_from_regular_is_module_dim(lam):
    reg = regular_module(lam)
    for m in simple_modules(lam) + [reg]:
        assert len(hom_space(reg, m)) == m.dim


def test_opposite(dual, mat2, lam):
    assert opposite(dual).dense_tensor() == dual.dense_tensor()
    assert opposite(opposite(lam)).dense_tensor() == lam.dense_tensor()
    op = opposite(mat2)
    check_axioms(op)
    assert op.dim == 4


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_corpus_satisfies_axioms(name):
    check_axioms(CORPUS[name]())


def test_semisimple_detection(mat2, lam):
    assert is_semisimple(mat2)
    assert not is_semisimple(lam)
    assert isinstance(lam, Algebra) and ONE == 1
