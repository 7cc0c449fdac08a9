import pytest

from afweyl import affine_group
from dahaop import (DiffOpForm, NotInvariant, RatX, antidominant_leading_coefficient, braid_order,
                    check_braid, check_center, check_cross, check_omega, check_quadratic,
                    check_symmetry_criterion, check_Y, check_YT, daha, opform_T, opform_Y, monomial_samples)
from macpoly import orbit_sum
from ring import ONE, U, LaurentPoly
from rootsys import build


def X(*e, c=ONE):
    return LaurentPoly.monomial(e, c)


def all_pass(results):
    assert results
    failed = [name for name, ok in results if not ok]
    assert failed == []


def test_braid_order():
    assert braid_order(-1, -1) == 3
    assert braid_order(-1, -2) == 4
    assert braid_order(-1, -3) == 6
    assert braid_order(0, 0) == 2
    assert braid_order(-2, -2) is None


def test_T_on_a1_monomials():
    rep = daha(build('A', 1, 1))
    t = U ** 4
    assert rep.apply_T(1, rep.one()) == LaurentPoly.constant(t, 1)
    assert rep.apply_T(1, X(2)) == X(-2, c=t) + X(2, c=t - 1 / t)
    assert rep.apply_T(1, X(-2)) == X(2, c=1 / t)
    assert rep.apply_T_inv(1, rep.apply_T(1, X(4))) == X(4)


def test_T_rejects_half_weights():
    rep = daha(build('A', 1, 1))
    with pytest.raises(ValueError):
        rep.apply_T(1, X(1))


def test_Y_on_a1():
    rep = daha(build('A', 1, 1))
    # Y^b = pi T_1
    assert rep.apply_Y((1,), rep.one()) == LaurentPoly.constant(U ** 4, 1)
    assert rep.apply_Y((1,), X(2)) == X(2, c=U ** 8) + X(-2, c=1 - U ** -8)
    f = X(2) + X(-4, c=U)
    assert rep.apply_Y((-1,), rep.apply_Y((1,), f)) == f
    assert rep.apply_Y_signed((-1,), f) == rep.apply_Y((-1,), f)


@pytest.mark.parametrize('kind,rank,k', [('A', 1, 1), ('A', 1, 2), ('A', 2, 1), ('B', 2, 1)])
def test_hecke_relations(kind, rank, k):
    rs = build(kind, rank, k)
    rep = daha(rs)
    mons = monomial_samples(rs, 2)
    all_pass(check_quadratic(rep, mons))
    all_pass(check_omega(rep, mons) or [('no Omega', True)])
    all_pass(check_cross(rep, mons, monomial_samples(rs, 1)))
    if rank > 1:
        all_pass(check_braid(rep, mons))


@pytest.mark.parametrize('kind,rank,k', [('A', 1, 1), ('A', 2, 1), ('B', 2, 1)])
def test_Y_relations(kind, rank, k):
    rs = build(kind, rank, k)
    rep = daha(rs)
    samples = monomial_samples(rs, 1)
    all_pass(check_Y(rep, samples))
    all_pass(check_YT(rep, samples))
    all_pass(check_center(rep, samples))


def test_unequal_parameters_b2():
    rs = build('B', 2, 2, 1)
    rep = daha(rs)
    samples = monomial_samples(rs, 1)
    all_pass(check_quadratic(rep, samples))
    all_pass(check_braid(rep, samples))
    all_pass(check_Y(rep, samples))


def test_symmetry_criterion():
    rs = build('A', 2, 1)
    rep = daha(rs)
    cands = [orbit_sum(rs, (1, 0)), orbit_sum(rs, (1, 1)), X(2, 0), X(2, 0) + X(0, 2)]
    all_pass(check_symmetry_criterion(rep, cands))
    assert rep.apply_T(1, orbit_sum(rs, (1, 0))) == orbit_sum(rs, (1, 0)).scale(rep.t[1])


def test_apply_fY_needs_invariant_operator():
    rep = daha(build('A', 2, 1))
    with pytest.raises(NotInvariant):
        rep.apply_fY({(1, 0): 1}, rep.one())


def test_eigenvalue_on_constants():
    rs = build('A', 1, 2)
    rep = daha(rs)
    fy = rep.orbit_operator((1,))
    assert rep.apply_fY(fy, rep.one()) == LaurentPoly.constant(rep.eigenvalue(fy, (0,)), 1)


def test_q_antisymmetrizer_a1():
    rs = build('A', 1, 1)
    rep = daha(rs)
    t = U ** 4
    assert rep.q_antisymmetrize(rep.one()).is_zero()
    expected = (X(2, c=t ** -2) - X(-2)).scale(1 / (1 + t ** -2))
    p = rep.q_antisymmetrize(X(2))
    assert p == expected
    assert rep.apply_T(1, p) == p.scale(-1 / t)
    assert rep.antisymmetrize(X(2)) == (X(2) - X(-2)).scale(ONE / 2)


def test_q_antisymmetrizer_needs_equal_k():
    rep = daha(build('B', 2, 2, 1))
    with pytest.raises(ValueError):
        rep.q_antisymmetrize(rep.one())


@pytest.mark.parametrize('kind,rank', [('A', 1), ('A', 2)])
def test_operator_forms_agree_with_the_representation(kind, rank):
    rs = build(kind, rank, 1)
    rep = daha(rs)
    aff = affine_group(rs)
    samples = monomial_samples(rs, 1)
    for i in range(rank + 1):
        form = opform_T(rs, aff.simple_reflection(i))
        assert all(form.apply(f) == rep.apply_T(i, f) for f in samples)
    for y in [(1,) * rank, (-1,) + (0,) * (rank - 1)]:
        form = opform_Y(rs, y)
        assert all(form.apply(f) == rep.apply_Y(y, f) for f in samples)


def test_antidominant_leading_coefficient_a1():
    rs = build('A', 1, 1)
    aff = affine_group(rs)
    t = U ** 4
    one = LaurentPoly.constant(ONE, 1)
    x = X(-4)
    lead = opform_Y(rs, (-1,)).coefficient(aff.translation((-1,)))
    expected = RatX(x.scale(t) - one.scale(1 / t), x - one)
    assert lead == expected
    assert antidominant_leading_coefficient(rs, (-1,)) == expected


def test_res_of_a1_operator():
    rs = build('A', 1, 1)
    aff = affine_group(rs)
    t = U ** 4
    res = opform_Y(rs, (1,)).res()
    assert res.equals(DiffOpForm(rs, {aff.translation((1,)): RatX.const(t, 1)}))
