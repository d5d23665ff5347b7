import pytest
from hypothesis import given, settings

from singcurve import gluing, intpoly
from singcurve.errors import BudgetExceeded, ValidationError
from singcurve.gluing import BranchSpec, SingularCurveModel, SingularityPrescription
from singcurve.zeta import elliptic_zeta_from_count, genus0_zeta, zeta_from_numerator

from strategies import models

S = SingularityPrescription.of


@pytest.mark.parametrize("pairs,delta", [([(2, 1)], 1), ([(1, 1), (1, 1)], 1), ([(1, 3)], 2), ([(3, 2), (1, 1)], 6)])
def test_delta_of(pairs, delta):
    assert gluing.delta_of(S(*pairs)) == delta


def test_delta_zero_rejected():
    with pytest.raises(ValidationError, match="delta = 0"):
        S((1, 1))
    with pytest.raises(ValidationError):
        SingularityPrescription(())
    with pytest.raises(ValidationError):
        BranchSpec(0, 1)


def test_validate_budget():
    p1 = genus0_zeta(2)
    gluing.validate(SingularCurveModel(p1, (S((2, 1)),)))
    with pytest.raises(BudgetExceeded) as info:
        gluing.validate(SingularCurveModel(p1, (S((2, 1)), S((2, 1)))))
    assert (info.value.degree, info.value.requested, info.value.available) == (2, 2, 1)
    gluing.validate(SingularCurveModel(genus0_zeta(4), tuple(S((2, 1)) for _ in range(6))))


def test_budget_counts_branches_within_one_singularity():
    with pytest.raises(BudgetExceeded):
        gluing.validate(SingularCurveModel(genus0_zeta(2), (S((1, 1), (1, 1), (1, 1), (1, 1)),)))


def test_arithmetic_genus():
    assert gluing.arithmetic_genus(SingularCurveModel(genus0_zeta(2))) == 0
    assert gluing.arithmetic_genus(SingularCurveModel(genus0_zeta(2), (S((2, 1)),))) == 1
    e = elliptic_zeta_from_count(2, 4)
    assert gluing.arithmetic_genus(SingularCurveModel(e, (S((1, 3)),))) == 3


def test_rational_points_examples():
    m = SingularCurveModel(genus0_zeta(2), (S((2, 1)),))
    assert gluing.rational_points(m, 1) == 4
    assert gluing.rational_points(m, 2) == 4
    m3 = SingularCurveModel(genus0_zeta(3), (S((2, 1)), S((2, 1))))
    assert gluing.rational_points(m3, 1) == 6


def test_singular_zeta_factor_examples():
    base = genus0_zeta(4)
    assert gluing.singular_zeta_factor(SingularCurveModel(base, (S((2, 1)),))) == (1, 1)
    assert gluing.singular_zeta_factor(SingularCurveModel(base, (S((1, 1), (1, 1)),))) == (1, -1)
    assert gluing.singular_zeta_factor(SingularCurveModel(base, (S((1, 3)),))) == (1,)
    # multiplicities never enter the factor
    assert gluing.singular_zeta_factor(SingularCurveModel(base, (S((2, 3)),))) == (1, 1)


def test_construct_principal():
    m = gluing.construct_principal(genus0_zeta(3), {2: 2})
    assert gluing.arithmetic_genus(m) == 2 and gluing.rational_points(m, 1) == 6
    e = gluing.construct_principal(elliptic_zeta_from_count(2, 4), {2: 2})
    assert gluing.arithmetic_genus(e) == 3 and gluing.rational_points(e, 1) == 6
    same = gluing.construct_principal(elliptic_zeta_from_count(2, 4), {2: 0, 3: 0})
    assert same.singularities == () and gluing.rational_points(same, 1) == 4


def test_construct_principal_general_formula():
    base = genus0_zeta(3)
    m = gluing.construct_principal(base, {2: 3, 3: 2, 4: 1})
    assert gluing.arithmetic_genus(m) == 3 + 2 * 2 + 3 * 1
    assert gluing.rational_points(m, 1) == 4 + 3 + 2 + 1


def test_construct_principal_rejects():
    with pytest.raises(BudgetExceeded):
        gluing.construct_principal(genus0_zeta(2), {2: 2})
    with pytest.raises(ValidationError):
        gluing.construct_principal(genus0_zeta(2), {1: 1})
    with pytest.raises(ValidationError):
        gluing.construct_principal(genus0_zeta(2), {2: -1})


def test_report_p1_f2():
    r = gluing.report(SingularCurveModel(genus0_zeta(2), (S((2, 1)),)))
    assert r.is_maximal and r.pi == 1 and r.point_counts[0] == 4 and r.zeta_factor == (1, 1)
    assert r.is_delta_optimal == "yes" and r.bound_A == 4


def test_report_genus1_f2_two_gluings():
    r = gluing.report(gluing.construct_principal(elliptic_zeta_from_count(2, 4), {2: 2}))
    assert r.point_counts[0] == 6 and r.nqg == 5 and r.bound_B == 7
    assert r.is_delta_optimal == "no" and not r.is_maximal


def test_report_maximal_elliptic_f4():
    # a maximal elliptic curve over F_4 has no degree-2 points to glue
    base = elliptic_zeta_from_count(4, 9)
    with pytest.raises(BudgetExceeded):
        gluing.report(SingularCurveModel(base, (S((2, 1)),)))
    r = gluing.report(SingularCurveModel(base, (S((1, 2)),)))
    assert r.is_delta_optimal == "no"


def test_report_unknown_for_higher_genus():
    base = zeta_from_numerator(4, [1, 1, 6, 4, 16])
    model = SingularCurveModel(base, (S((2, 1)),))
    assert gluing.report(model).is_delta_optimal == "unknown"
    assert gluing.report(model, external_nqg=10).is_delta_optimal == "no"
    with pytest.raises(ValidationError):
        gluing.report(model, external_nqg=5)


def test_report_dict_round_trip():
    r = gluing.report(SingularCurveModel(genus0_zeta(2), (S((2, 1)),)))
    assert gluing.CurveReport.from_dict(r.to_dict()) == r


@given(models())
@settings(max_examples=200, deadline=None)
def test_zeta_count_equivalence(model):
    assert gluing.zeta_point_counts(model, 6) == gluing.point_counts(model, 6)


@given(models())
@settings(max_examples=200, deadline=None)
def test_degree_law(model):
    factor = gluing.singular_zeta_factor(model)
    dx = gluing.delta_x(model)
    assert intpoly.degree(factor) == dx
    excess = gluing.arithmetic_genus(model) - model.g
    assert dx <= excess
    all_simple = all(b.multiplicity == 1 for s in model.singularities for b in s.branches)
    assert (dx == excess) == all_simple


@given(models())
@settings(max_examples=200, deadline=None)
def test_factor_divides_product_of_cyclotomic_pieces(model):
    full = intpoly.product(intpoly.one_minus_t_pow(b.degree) for s in model.singularities for b in s.branches)
    intpoly.exact_div(full, gluing.singular_zeta_factor(model))


@given(models())
@settings(max_examples=200, deadline=None)
def test_monotone_bound(model):
    r = gluing.report(model)
    assert r.point_counts[0] <= r.bound_A
    assert r.delta_x <= r.pi - r.g


@given(models())
@settings(max_examples=200, deadline=None)
def test_delta_optimal_structure(model):
    r = gluing.report(model)
    if r.is_delta_optimal == "yes":
        assert all(s.branches == (BranchSpec(2, 1),) for s in model.singularities)
        assert r.zeta_factor == intpoly.power((1, 1), r.pi - r.g)


def test_principal_degree2_factor_shape():
    for q in (2, 3, 4, 5):
        for a2 in range((q * q - q) // 2 + 1):
            m = gluing.construct_principal(genus0_zeta(q), {2: a2})
            assert gluing.singular_zeta_factor(m) == intpoly.power((1, 1), a2)
