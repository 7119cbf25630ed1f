import pytest

from ncminors import (WeightedP1, canonical_algebra, generating_set, global_dim,
                      hom_and_ext_dims, hom_basis, hom_divisor, local_order,
                      local_projectives_and_simples, match_canonical, morita_canonical_form,
                      theta_maps, tilting_endomorphism_algebra, tilting_set)
from ncminors.algebra import check_axioms
from ncminors.errors import (ChainMismatch, CurveMismatch, EmptyComposition, InvalidCurve,
                             InvalidWeights, NotCanonicalShape, PointNotSpecial, RepeatedLambda)
from ncminors.exactla import to_q
from ncminors.hcurve import compare_presentation, compose, compositions, hom_table
from ncminors.identify import identify_path_algebra
from ncminors.p1 import INF, Divisor, RationalFunction, sections


def curve(points, rank=2, weight=2):
    return WeightedP1([(p, weight, (1,) * weight) for p in points], rank, name="test")


@pytest.fixture(scope="module")
def w222():
    return curve([0, 1, 2])


# -- local orders

def test_local_order_single_block():
    h = local_order((3,))
    assert h.pattern == [[0] * 3] * 3


def test_local_order_two_blocks():
    h = local_order((1, 1))
    assert h.pattern == [[0, 1], [0, 0]]
    assert h.contains([[0, 1], [0, 0]])
    assert not h.contains([[0, 0], [0, 0]])


def test_local_order_two_one():
    assert local_order((2, 1)).pattern == [[0, 0, 1], [0, 0, 1], [0, 0, 0]]


def test_local_order_rejects_empty():
    with pytest.raises(EmptyComposition):
        local_order(())


def test_lattice_chain_single_block():
    lats, simples = local_projectives_and_simples(local_order((2,)))
    assert [l.valuation for l in lats] == [(0, 0), (1, 1)]
    assert [s.dim for s in simples] == [2]


def test_lattice_chain_one_one():
    lats, simples = local_projectives_and_simples(local_order((1, 1)))
    assert [l.valuation for l in lats] == [(0, 0), (0, 1), (1, 1)]
    assert [s.dim for s in simples] == [1, 1]
    assert all(s.projective_dimension == 1 for s in simples)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_simples_have_pd_one(n):
    comps = compositions(n)
    assert len(comps) == 2 ** (n - 1)
    for comp in comps:
        _, simples = local_projectives_and_simples(local_order(comp))
        assert [s.projective_dimension for s in simples] == [1] * len(comp)
        assert sum(s.dim for s in simples) == n


def test_morita_canonical_form():
    assert morita_canonical_form((1, 2, 1)) == (1, 1, 2)
    assert morita_canonical_form((3,)) == (3,)
    assert morita_canonical_form((2, 2)) == (2, 2)


# -- curves and sheaves

def test_curve_validation():
    with pytest.raises(InvalidCurve):
        curve([0, 0])
    with pytest.raises(InvalidCurve):
        WeightedP1([(0, 1, (2,))], 2)
    with pytest.raises(InvalidCurve):
        WeightedP1([(0, 2, (1, 2))], 2)
    with pytest.raises(InvalidCurve):
        WeightedP1([(0, 2, (1, 1))], 2, base_point=0)


def test_set_sizes():
    assert len(tilting_set(curve([]))) == 2
    assert len(tilting_set(curve([0]))) == 3
    assert len(tilting_set(curve([0, 1, 2]))) == 5
    assert len(generating_set(curve([0, 1, 2]))) == 1 + 3 * 2


def test_hom_divisor_cases(w222):
    o, x = w222.base_point, to_q(0)
    L, Lo = w222.L(), w222.L_minus_o()
    assert hom_divisor(w222, L, L) == Divisor()
    assert hom_divisor(w222, Lo, L) == Divisor.point(o)
    assert hom_divisor(w222, L, w222.L_xi(0, 1)) == Divisor.point(x, -1)
    assert hom_divisor(w222, w222.L_xi(0, 2), w222.L_xi(0, 1)) == Divisor()
    assert hom_and_ext_dims(w222, Lo, L) == (2, 0)
    assert hom_and_ext_dims(w222, L, w222.L_xi(0, 1)) == (0, 0)


def test_negative_degree_has_h1(w222):
    far = w222.L_twist(Divisor.point(INF, 2))
    assert hom_divisor(w222, w222.L(), far) == Divisor.point(INF, -2)
    assert hom_and_ext_dims(w222, w222.L(), far) == (0, 1)
    assert hom_and_ext_dims(w222, far, far) == (1, 0)


def test_curve_mismatch(w222):
    other = curve([0, 1, 2])
    with pytest.raises(CurveMismatch):
        hom_divisor(w222, w222.L(), other.L())


def test_section_bases():
    assert [str(f) for f in sections(Divisor())] == ["1"]
    assert [str(f) for f in sections(Divisor.point(INF))] == ["1", "t"]
    d = Divisor({to_q(0): 1, to_q(1): 1})
    assert [str(f) for f in sections(d)] == ["1", "1/t", "1/(t - 1)"]


def test_hom_basis_dimensions(w222):
    objs = tilting_set(w222)
    for a in objs:
        for b in objs:
            assert hom_basis(w222, a, b).dim == hom_and_ext_dims(w222, a, b)[0]


def test_compose_identity_and_mismatch(w222):
    L, Lo = w222.L(), w222.L_minus_o()
    f = hom_basis(w222, Lo, L).basis_element(1)
    one = hom_basis(w222, L, L).basis_element(0)
    assert compose(one, f).function == f.function
    with pytest.raises(ChainMismatch):
        compose(f, one)


def test_theta_is_linear_factor(w222):
    for xi in [0, 1, 2]:
        thetas, total = theta_maps(w222, xi)
        assert len(thetas) == 2
        assert total.function == RationalFunction([1, -to_q(xi)])      # t - xi
    with pytest.raises(PointNotSpecial):
        theta_maps(w222, 7)


def test_any_two_thetas_span(w222):
    from ncminors.exactla import Mat, rank
    coords = [theta_maps(w222, xi)[1].coords for xi in [0, 1, 2]]
    for i in range(3):
        for j in range(i + 1, 3):
            assert rank(Mat.from_rows([coords[i], coords[j]])) == 2


def test_hom_table_w222(w222):
    objs, h0, h1 = hom_table(w222)
    assert [o.name for o in objs] == ["L", "L(-o)", "L[x1,1]", "L[x2,1]", "L[x3,1]"]
    assert h0 == [[1, 0, 0, 0, 0],
                  [2, 1, 1, 1, 1],
                  [1, 0, 1, 0, 0],
                  [1, 0, 0, 1, 0],
                  [1, 0, 0, 0, 1]]
    assert all(v == 0 for row in h1 for v in row)


# -- tilting algebras and canonical algebras

def test_empty_curve_gives_kronecker():
    a, lab = tilting_endomorphism_algebra(curve([], rank=1, weight=2))
    assert a.dim == 4
    ok, text = identify_path_algebra(a)
    assert ok and text.startswith("Kronecker")


def test_single_point_matches_r21():
    c = curve([0])
    a, lab = tilting_endomorphism_algebra(c)
    m = match_canonical(a, lab)
    assert m.weights == (2, 1) and m.canonical.dim == a.dim == 7


def test_three_points_dim_13(w222):
    a, lab = tilting_endomorphism_algebra(w222)
    check_axioms(a)
    m = match_canonical(a, lab)
    assert a.dim == 13 and m.weights == (2, 2, 2)


def test_two_points_no_parameters():
    a, lab = tilting_endomorphism_algebra(curve([0, 1]))
    m = match_canonical(a, lab)
    assert m.weights == (2, 2) and m.lambdas == ()


@pytest.mark.parametrize("mu", [2, 3, -1, "1/2", "5/3"])
def test_lambda_from_point(mu):
    mu = to_q(mu)
    a, lab = tilting_endomorphism_algebra(curve([0, 1, mu]))
    m = match_canonical(a, lab)
    assert m.lambdas == (mu / (1 - mu),)


def test_canonical_examples():
    r11 = canonical_algebra((1, 1)).algebra()
    assert identify_path_algebra(r11)[1].startswith("Kronecker")
    r32 = canonical_algebra((3, 2)).algebra()
    assert r32.dim == 14 and identify_path_algebra(r32)[0]
    r = canonical_algebra((2, 2, 2), (to_q("-3/2"),)).algebra()
    assert r.dim == 13 and global_dim(r) == 2


def test_canonical_errors():
    with pytest.raises(InvalidWeights):
        canonical_algebra((1, 2, 2), (2,))
    with pytest.raises(InvalidWeights):
        canonical_algebra((2, 2, 2), ())
    with pytest.raises(RepeatedLambda):
        canonical_algebra((2, 2, 2, 2), (2, 2))


def test_presentation_comparison_negative_control():
    c = curve([0, 1, 3])
    a, lab = tilting_endomorphism_algebra(c)
    m = match_canonical(a, lab)
    compare_presentation(a, m, canonical_algebra((2, 2, 2), (to_q("-3/2"),)).algebra())
    with pytest.raises(NotCanonicalShape) as info:
        compare_presentation(a, m, canonical_algebra((2, 2, 2), (3,)).algebra())
    assert info.value.witness is not None
