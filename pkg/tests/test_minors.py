import pytest

import oracles
from ncminors import (endomorphism_construction, functor_F, functor_G, functor_H, minor,
                      recollement_report, regular_module, simple_modules, subhereditary_glue,
                      trace_ideal, triangular_algebra)
from ncminors.algebra import TwoSidedIdeal, check_axioms, parse_idempotent, quotient_algebra
from ncminors.corpus import (a2_path, dual_numbers, field_k, glue_data, kronecker,
                             matrix_algebra, semisimple_pair)
from ncminors.errors import (ActionsDoNotCommute, NotAnIdeal, NotIdempotent,
                             NotMonomorphism, QuotientNotSemisimple, ZeroIdempotent)
from ncminors.exactla import Mat
from ncminors.identify import identify_path_algebra
from ncminors.minors import quotient_by_trace
from ncminors.representations import (Representation, are_isomorphic, direct_sum,
                                      indecomposable_projectives, zero_module)


def _e(a, text):
    return parse_idempotent(a, text)


def test_minor_of_matrix_ring(mat2):
    e11 = mat2.basis_vec(0)
    md = minor(mat2, e11)
    assert md.a.dim == 1
    assert md.endomorphism_check.passed


def test_minor_lambda_is_kronecker(lam):
    md = minor(lam, _e(lam, "e1+e2"))
    assert md.a.dim == 4
    ok, text = identify_path_algebra(md.a)
    assert ok and text.startswith("Kronecker")
    dim, _ = oracles.corner_data(lam, _e(lam, "e1+e2"))
    assert dim == 4


def test_minor_at_unit_is_whole_algebra(lam):
    md = minor(lam, lam.unit)
    assert md.a.dim == lam.dim
    check_axioms(md.a)


def test_minor_rejects_bad_idempotents(lam):
    with pytest.raises(NotIdempotent):
        minor(lam, lam.by_label("a1").coords)
    with pytest.raises(ZeroIdempotent):
        minor(lam, lam.zero_vec())


def test_functor_g(lam):
    md = minor(lam, _e(lam, "e3"))
    s1 = simple_modules(lam)[0]
    assert functor_G(md, s1).dim == 0
    md12 = minor(lam, _e(lam, "e1+e2"))
    p = md12.module_P()
    assert are_isomorphic(functor_G(md12, p), regular_module(md12.a))
    s = simple_modules(lam)
    both = direct_sum([s[0], s[1]])
    assert functor_G(md12, both).dim == functor_G(md12, s[0]).dim + functor_G(md12, s[1]).dim


def test_g_dim_is_rank_of_e(lam):
    md = minor(lam, _e(lam, "e1+e3"))
    for m in simple_modules(lam) + indecomposable_projectives(lam) + [regular_module(lam)]:
        assert functor_G(md, m).dim == m.act(md.e).rank()


def test_functor_f(lam):
    md = minor(lam, _e(lam, "e1+e2"))
    assert are_isomorphic(functor_F(md, regular_module(md.a)), md.module_P())
    s_a = simple_modules(md.a)
    # the simple at the source vertex of the Kronecker quiver
    dims = sorted(functor_F(md, s).dim for s in s_a)
    assert dims == [1, 3]
    assert functor_F(md, zero_module(md.a)).dim == 0


def test_functor_h(lam):
    md = minor(lam, _e(lam, "e1+e2"))
    reg = regular_module(md.a)
    assert are_isomorphic(functor_G(md, functor_H(md, reg)), reg)
    assert functor_H(md, zero_module(md.a)).dim == 0
    for s in simple_modules(md.a):
        h = functor_H(md, s)
        assert are_isomorphic(functor_G(md, h), s)
        # H(S) has no composition factor killed by e at the top of its socle
        assert h.dim >= 1


def test_trace_ideal_examples(lam, mat2):
    assert trace_ideal(minor(lam, lam.unit)).dim == lam.dim
    assert trace_ideal(minor(mat2, mat2.basis_vec(0))).dim == 4
    i = trace_ideal(minor(lam, _e(lam, "e3")))
    assert i.dim == 5 == oracles.trace_ideal_dim(lam, _e(lam, "e3"))
    for lab in ["e3", "b1", "b2", "b1.a2", "b2.a1"]:
        assert i.contains(lam.by_label(lab).coords)


def test_trace_ideal_is_idempotent(lam):
    for text in ["e1", "e2", "e3", "e1+e2", "e2+e3"]:
        i = trace_ideal(minor(lam, _e(lam, text)))
        assert i.product(i) == i


def test_quotients(lam):
    zero = TwoSidedIdeal(lam, [])
    assert quotient_algebra(lam, zero).algebra.dim == 9
    whole = TwoSidedIdeal(lam, [lam.basis_vec(i) for i in range(lam.dim)])
    assert quotient_algebra(lam, whole).algebra.dim == 0
    q = quotient_by_trace(minor(lam, _e(lam, "e3"))).algebra
    assert q.dim == 4
    assert identify_path_algebra(q)[1].startswith("Kronecker")


def test_quotient_rejects_non_ideal(lam):
    with pytest.raises(NotAnIdeal):
        TwoSidedIdeal(lam, [lam.by_label("e1").coords])


def test_recollement_matrix_ring(mat2):
    r = recollement_report(minor(mat2, mat2.basis_vec(0)))
    assert r.all_passed, r.lines()


@pytest.mark.parametrize("text", ["e1+e2", "e3"])
def test_recollement_lambda(lam, text):
    md = minor(lam, _e(lam, text))
    r = recollement_report(md)
    assert r.all_passed, r.lines()
    killed = [s for s in simple_modules(lam) if functor_G(md, s).dim == 0]
    if text == "e1+e2":
        assert len(killed) == 1 and killed[0].act(lam.by_label("e3").coords).rank() == 1


def test_endomorphism_construction_regular(dual):
    big, e = endomorphism_construction(dual, regular_module(dual))
    assert big.dim == 4 * dual.dim
    md = minor(big, e)
    assert md.a.dim == dual.dim and md.endomorphism_check.passed


def test_endomorphism_construction_zero(dual):
    big, e = endomorphism_construction(dual, zero_module(dual))
    assert big.dim == dual.dim
    assert minor(big, e).a.dim == dual.dim


def test_endomorphism_construction_dual_simple(dual):
    # A = k[x]/(x^2), F = k: corners A (2), F (1), Hom_A(F, A) (1), End F (1)
    big, e = endomorphism_construction(dual, simple_modules(dual)[0])
    assert big.dim == 5
    check_axioms(big)
    assert minor(big, e).endomorphism_check.passed


def test_glue_degenerate():
    h = a2_path()
    g = subhereditary_glue(h, h, [h.basis_vec(i) for i in range(h.dim)])
    assert len(g.conductor) == h.dim
    assert g.algebra.dim == 4 * h.dim


def test_glue_fixture():
    g = glue_data()
    assert len(g.conductor) == 1
    assert g.algebra.dim == 9
    check_axioms(g.algebra)


def test_glue_dual_numbers_in_k_times_k_is_not_a_subalgebra():
    # x^2 = 0 has no nonzero image in the reduced algebra k x k
    with pytest.raises(NotMonomorphism):
        subhereditary_glue(dual_numbers(), semisimple_pair(), [[1, 1], [1, -1]])


def _truncated_poly(n):
    from ncminors.exactla import ONE
    from ncminors.quiver import QuiverPresentation, algebra_from_quiver
    return algebra_from_quiver(QuiverPresentation(["1"], [("x", "1", "1")],
                                                  [[(ONE, ("x",) * n)]]))


def test_glue_rejects_non_semisimple_quotient():
    # k[x]/(x^3) inside Mat(3, k) via a Jordan block: the conductor is 0
    a = _truncated_poly(3)
    h = matrix_algebra(3)
    images = {"e1": [1, 0, 0, 0, 1, 0, 0, 0, 1],
              "x": [0, 1, 0, 0, 0, 1, 0, 0, 0],
              "x.x": [0, 0, 1, 0, 0, 0, 0, 0, 0]}
    with pytest.raises(QuotientNotSemisimple):
        subhereditary_glue(a, h, [images[lab] for lab in a.labels])


def test_glue_k_times_k_in_itself():
    h = semisimple_pair()
    g = subhereditary_glue(h, h, [[1, 0], [0, 1]])
    assert g.algebra.dim == 8


def test_triangular_examples():
    k = field_k()
    kr = kronecker()
    prod = triangular_algebra(k, k, 0, [Mat.zeros(0, 0)], [Mat.zeros(0, 0)])
    assert prod.dim == 2
    a2 = triangular_algebra(k, k, 1, [Mat.identity(1)], [Mat.identity(1)])
    assert a2.dim == 3
    assert identify_path_algebra(a2)[1].startswith("A2")
    # E = k^2 as a right Kronecker module: x.e1 = x on the first coordinate, x.a1 moves it
    right = {"e1": [[1, 0], [0, 0]], "e2": [[0, 0], [0, 1]], "a1": [[0, 1], [0, 0]],
             "a2": [[0, 0], [0, 0]]}
    t = triangular_algebra(k, kr, 2, [Mat.identity(2)], [Mat.from_rows(right[x]) for x in kr.labels])
    assert t.dim == 7
    check_axioms(t)


def test_triangular_requires_commuting_actions(dual):
    up = Mat.from_rows([[0, 1], [0, 0]])
    down = Mat.from_rows([[0, 0], [1, 0]])
    with pytest.raises(ActionsDoNotCommute):
        triangular_algebra(dual, dual, 2, [Mat.identity(2), up], [Mat.identity(2), down])


def test_right_module_check_uses_opposite():
    k = field_k()
    kr = kronecker()
    bad = [Mat.identity(2)] * 4
    with pytest.raises(Exception):
        triangular_algebra(k, kr, 2, [Mat.identity(2)], bad)
    assert Representation(k, 1, [Mat.identity(1)], validate=True).dim == 1
