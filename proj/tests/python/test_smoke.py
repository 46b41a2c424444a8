"""Smoke tests for the python bindings: exact values mirrored from the C++
suites, driven through the python surface."""

from fractions import Fraction

import pytest

import ccstats as cc


@pytest.fixture(scope="module")
def f3():
    return cc.Field(3)


def test_field_arithmetic(f3):
    assert f3.q == 3
    assert f3.mul(2, 2) == 1
    f4 = cc.Field(2, 2)
    assert list(f4.modulus) == [1, 1, 1]
    alpha = 2
    assert f4.mul(alpha, alpha) == 3  # alpha^2 = alpha + 1
    with pytest.raises(ValueError):
        cc.Field(4)
    with pytest.raises(ValueError):
        f3.div(1, 0)


def test_classifier():
    f7 = cc.Field(7)
    cubes = cc.PowerClassifier(f7, 3)
    assert cubes.sigma == 3
    assert {a for a in range(1, 7) if cubes.is_mth_power(a)} == {1, 6}


def test_poly_and_decomposition(f3):
    f = cc.Poly(f3, [0, 1, 2, 1])  # x(x+1)^2
    assert f.eval(2) == (2 * 3 * 3) % 3 == 0
    parts = cc.squarefree_decompose(f)
    assert [(str(g), m) for g, m in parts] == [("0,1", 1), ("1,1", 2)]
    decomp = cc.powerfree_decompose(f, 3)
    assert isinstance(decomp, cc.PowerFreeDecomposition)
    assert decomp.reassemble() == f
    assert decomp.weighted_degree([1, 2]) == 3
    cube = cc.powerfree_decompose(cc.Poly(f3, [0, 0, 0, 1]), 3)
    assert isinstance(cube, cc.NotPowerFree)
    assert str(cube.factor) == "0,1"


def test_family_counts(f3):
    spec = cc.FamilySpec(f3, 4, [1, 2, 3], 4)
    assert cc.count_family(spec) == 78
    assert len(cc.enumerate_family(spec)) == 78
    assert cc.count_constrained(spec, [0], [1]) == 25
    main = cc.predicted_constrained_count(spec, 1, "theorem-c")
    assert main == Fraction(2106, 80)
    assert 25 - main == Fraction(-53, 40)
    with pytest.raises(cc.UnsupportedError):
        cc.predicted_constrained_count(cc.FamilySpec(f3, 3, [1, 3], 4), 0, "theorem-c")


def test_counting_formulas(f3):
    assert cc.count_squarefree(f3, 5) == 162
    assert cc.count_powerfree(cc.Field(2), 5, 4) == 28


def test_bijection(f3):
    x = cc.Poly(f3, [0, 1])
    one = cc.Poly(f3, [1])
    t1, t2 = cc.key_bijection(one, one, x)
    assert t1 == x and t2 == x
    g1, g2, g3 = cc.key_bijection_inverse(x, x)
    assert g1 == one and g2 == one and g3 == x


def test_curve_and_genus():
    f7 = cc.Field(7)
    squares = cc.PowerClassifier(f7, 2)
    quintic = cc.Poly(f7, [1, 6, 0, 2, 0, 1])
    curve = cc.CurveSpec(quintic, squares)
    assert cc.count_points(curve) == sum(
        cc.fiber_size(curve, x) for x in range(7)
    )
    decomp = cc.powerfree_decompose(quintic, 2)
    report = cc.genus(decomp, 2, f7)
    assert report["genus"] == 2
    assert report["valid_hypotheses"]
    assert cc.genus_weight(4, 4) == [3, 2, 3]


def test_limit_models(f3):
    rv = cc.rv_quartic_weight(5, 2, 2)
    assert rv.p0 == Fraction(125, 312)
    assert rv.p1 == Fraction(31, 156)
    assert rv.psigma == Fraction(125, 312)
    generic = cc.rv_from_psi(5, 2, Fraction(624, 125))
    assert (generic.p0, generic.p1, generic.psigma) == (rv.p0, rv.p1, rv.psigma)

    table = cc.convolve(rv, 5)
    assert table[10] == Fraction(125, 312) ** 5
    assert sum(table.values()) == 1


def test_distribution_and_tv(f3):
    cls = cc.PowerClassifier(f3, 2)
    spec = cc.FamilySpec(f3, 4, [1, 2, 3], 4)
    hist = cc.empirical_distribution(spec, cls)
    assert sum(hist.values()) == 78
    limit = cc.convolve(cc.rv_quartic_weight(3, 2, 2), 3)
    assert cc.total_variation(hist, limit) == Fraction(113603, 3328000)


def test_sampling_determinism(f3):
    spec = cc.FamilySpec(f3, 4, [1, 2, 3], 6)
    a = cc.sample_family(spec, 200, seed=11)
    b = cc.sample_family(spec, 200, seed=11, jobs=4)
    assert a == b
    assert all(spec.is_member(f) for f in a)
    with pytest.raises(cc.UnsupportedError):
        cc.sample_family(cc.FamilySpec(f3, 3, [2, 3], 6), 5, seed=1)


def test_zeta(f3):
    assert cc.zeta_closed(f3, 2) == Fraction(3, 2)
    assert cc.restricted_sqfree_closed(f3, 2) == Fraction(13, 9)
    assert cc.restricted_sqfree_closed(f3, 2, [0]) == Fraction(13, 10)
    assert cc.restricted_sqfree_partial(f3, 2, [], 4) == Fraction(350, 243)
    assert cc.restricted_sqfree_counts(f3, 1, 6) == [1, 2, 4, 14, 40, 122, 364]
    diff = cc.restricted_sqfree_closed(f3, 2) - cc.restricted_sqfree_partial(f3, 2, [], 4)
    assert diff == Fraction(1, 243) == cc.tail_bound(f3, 2, 4)


def test_tilde_expand():
    f7 = cc.Field(7)
    comps = [cc.Poly(f7, [c, 1]) for c in range(7)]
    assert cc.tilde_expand([1, 2, 3], comps) == [1, 2, 3, 3, 4, 5, 6]
