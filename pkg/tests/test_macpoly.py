import pytest

from dahaop import NotInvariant
from macpoly import (ct_identity_check, cherednik_norm_check, d_k, d_k_product, d_k_sum,
                     dominant_weights_of_height, expand_in_orbit_sums, expected_proportionality, inner_cherednik,
                     inner_k, macdonald, macdonald_operator, norm_check, norm_formula_rhs, operator_diagonal,
                     orbit_sum, proportionality, q_binomial, type_a_check, weyl_character)
from ring import ONE, U, ZERO, LaurentPoly
from rootsys import build

Q = U ** 4  # q for A1


def const(c, rank=1):
    return LaurentPoly.constant(c, rank)


def test_orbit_sums_and_expansion():
    rs = build('A', 2)
    m = orbit_sum(rs, (1, 0))
    assert len(m) == 3
    f = orbit_sum(rs, (1, 1)).scale(U) + orbit_sum(rs, (0, 0)).scale(3)
    assert expand_in_orbit_sums(rs, f) == {(1, 1): U, (0, 0): 3 * ONE}
    with pytest.raises(NotInvariant):
        expand_in_orbit_sums(rs, LaurentPoly.monomial((2, 0)))
    with pytest.raises(ValueError):
        orbit_sum(rs, (-1, 0))


def test_inner_products_a1():
    rs = build('A', 1, 2)
    one = const(ONE)
    m = orbit_sum(rs, (1,))
    assert inner_k(rs, one, one) == 1 + Q ** 2 + Q ** 4
    assert inner_k(rs, m, m) == 1 + Q ** 4
    rs1 = build('A', 1, 1)
    assert inner_cherednik(rs1, one, one) == -(Q + 1 / Q)


def test_d_k():
    rs = build('A', 1, 1)
    assert d_k(rs) == Q + 1 / Q
    for kind, rank, kl, ks in [('A', 2, 2, 2), ('B', 2, 1, 2), ('G', 2, 1, 1)]:
        rs = build(kind, rank, kl, ks)
        assert d_k_sum(rs) == d_k_product(rs)
    assert d_k(build('A', 2, 0)) == 6


def test_macdonald_a1_k2():
    rs = build('A', 1, 2)
    p = macdonald(rs, (2,))
    assert p.coeffs[(2,)] == ONE
    assert p.coeffs[(0,)] == (1 + Q ** 2) ** 2 / (1 + Q ** 2 + Q ** 4)
    assert macdonald(rs, (1,)).coeffs == {(1,): ONE}
    assert p.is_iota_stable()


@pytest.mark.parametrize('kind,rank,kl,ks', [('A', 1, 2, 2), ('A', 2, 1, 1), ('A', 2, 2, 2), ('B', 2, 2, 1)])
def test_gram_and_eigen_agree(kind, rank, kl, ks):
    rs = build(kind, rank, kl, ks)
    for lam in dominant_weights_of_height(rs, 2):
        assert macdonald(rs, lam, 'gram').same_as(macdonald(rs, lam, 'eigen'))


def test_k_one_gives_weyl_characters():
    rs = build('A', 2, 1)
    for lam in dominant_weights_of_height(rs, 2):
        assert macdonald(rs, lam).to_laurent() == weyl_character(rs, lam)
    a1 = build('A', 1, 1)
    assert weyl_character(a1, (2,)) == LaurentPoly.monomial((4,)) + const(ONE) + LaurentPoly.monomial((-4,))


def test_k_zero_gives_orbit_sums():
    rs = build('B', 2, 0)
    for lam in dominant_weights_of_height(rs, 2):
        assert macdonald(rs, lam).to_laurent() == orbit_sum(rs, lam)


@pytest.mark.parametrize('kind,rank,kl,ks', [('A', 1, 3, 3), ('A', 2, 2, 2), ('B', 2, 1, 2), ('B', 2, 2, 1)])
def test_norm_formula(kind, rank, kl, ks):
    rs = build(kind, rank, kl, ks)
    for lam in dominant_weights_of_height(rs, 2):
        p = macdonald(rs, lam)
        assert norm_check(rs, p).ok
        assert cherednik_norm_check(rs, p).ok


def test_norm_formula_values_a1():
    rs = build('A', 1, 2)
    assert norm_formula_rhs(rs, (0,)) == 1 + Q ** 2 + Q ** 4
    assert norm_formula_rhs(rs, (1,)) == 1 + Q ** 4


def test_orthogonality():
    rs = build('A', 2, 2)
    lams = dominant_weights_of_height(rs, 2)
    ps = {lam: macdonald(rs, lam).to_laurent() for lam in lams}
    for a in lams:
        for b in lams:
            if a != b:
                assert inner_k(rs, ps[a], ps[b]) == ZERO


def test_ct_identity_a1():
    rs = build('A', 1, 1)
    results = ct_identity_check(rs)
    assert all(r.ok for r in results)
    by_name = {r.name: r for r in results}
    assert by_name['q-binomial form'].monomial == Q
    assert by_name['q-binomial form'].lhs == 1 + Q ** 2


@pytest.mark.parametrize('kind,rank,k', [('A', 1, 4), ('A', 2, 2), ('B', 2, 2), ('G', 2, 1)])
def test_ct_identity(kind, rank, k):
    assert all(r.ok for r in ct_identity_check(build(kind, rank, k)))


def test_type_a_product_form():
    r = type_a_check(2, 1, 4)
    assert r.ok
    assert r.lhs == 1 + Q ** 2
    assert r.monomial == Q
    assert type_a_check(3, 2, 6).ok


def test_q_binomial():
    assert q_binomial(2, 1, 4) == Q + 1 / Q
    assert q_binomial(4, 2, 4) == (Q ** 2 + Q ** -2) * (Q ** 2 + 1 + Q ** -2)


def test_macdonald_operator_a1():
    rs = build('A', 1, 1)
    assert macdonald_operator(rs, 0, const(ONE)) == const(1 + Q ** 2)
    assert operator_diagonal(rs, 0, (0,)) == 1 + Q ** 2
    with pytest.raises(ValueError):
        macdonald_operator(build('G', 2), 0, const(ONE, 2))


def test_proportionality():
    rs = build('A', 1, 1)
    inputs = [orbit_sum(rs, (j,)) for j in range(4)]
    c, ok = proportionality(rs, 0, inputs)
    assert ok
    assert c == 1 / Q
    assert c == expected_proportionality(rs, 0)
    a2 = build('A', 2, 2)
    c, ok = proportionality(a2, 0, [orbit_sum(a2, lam) for lam in dominant_weights_of_height(a2, 2)])
    assert ok
    assert c == expected_proportionality(a2, 0)


def test_macdonald_operator_is_diagonal_on_P():
    rs = build('A', 2, 2)
    for lam in dominant_weights_of_height(rs, 2):
        p = macdonald(rs, lam).to_laurent()
        for r in rs.minuscule_coweights():
            assert macdonald_operator(rs, r, p) == p.scale(operator_diagonal(rs, r, lam))


def test_unknown_method():
    with pytest.raises(ValueError):
        macdonald(build('A', 1), (1,), 'power')
