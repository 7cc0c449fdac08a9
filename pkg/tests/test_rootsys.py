from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ring import QExponentError, U
from rootsys import CapExceeded, UnsupportedRootSystem, build, parse_type


def test_parse_type():
    assert parse_type('b2') == ('B', 2)
    assert parse_type(' G2 ') == ('G', 2)
    with pytest.raises(UnsupportedRootSystem):
        parse_type('X')


@pytest.mark.parametrize('kind,rank,npos,degrees,order', [
    ('A', 1, 1, [2], 2),
    ('A', 2, 3, [2, 3], 6),
    ('A', 3, 6, [2, 3, 4], 24),
    ('B', 2, 4, [2, 4], 8),
    ('G', 2, 6, [2, 6], 12),
])
def test_tables(kind, rank, npos, degrees, order):
    rs = build(kind, rank)
    assert len(rs.positive_roots) == npos
    assert rs.degrees == degrees
    assert rs.weyl_order == order
    assert len(rs.weyl_group()) == order


def test_q_denominators():
    assert build('A', 1).q_denominator == 4
    assert build('A', 2).q_denominator == 6
    assert build('A', 1).q(1) == U ** 4
    with pytest.raises(QExponentError):
        build('A', 1).q(Fraction(1, 3))


@pytest.mark.parametrize('kind,rank', [('A', 1), ('A', 2), ('A', 3), ('B', 2), ('G', 2)])
def test_minuscule_count_matches_cartan_determinant(kind, rank):
    rs = build(kind, rank)
    assert len(rs.minuscule_coweights()) + 1 == rs.cartan_determinant()


def test_minuscule_examples():
    assert build('A', 2).minuscule_coweights() == [0, 1]
    assert build('G', 2).minuscule_coweights() == []


def test_unsupported_and_caps():
    with pytest.raises(UnsupportedRootSystem):
        build('A', 9)
    with pytest.raises(CapExceeded):
        build('A', 3, caps={'max_rank': 2})


def test_with_k_shares_tables():
    rs = build('A', 2, 1)
    assert rs.with_k(2) is build('A', 2, 2)
    assert rs.with_k(2).k_long == 2


def test_rho_k():
    assert build('A', 1, 2).rho_k2 == (4,)
    assert build('A', 2, 1).rho_k2 == (2, 2)
    assert build('A', 2).rho_vee == (1, 1)


def test_pairings_a1():
    rs = build('A', 1)
    # q^{2(b, omega)} = q
    assert rs.q_exponent((1,), (2,)) == 4
    assert rs.coroot(rs.theta) == (2,)
    assert rs.pair_weight_coroot(rs.root_weight(rs.theta), rs.theta) == 2


def test_orbits():
    rs = build('A', 2)
    orb = rs.orbit((2, 0))
    assert orb[0] == (2, 0)
    assert len(orb) == 3
    assert build('A', 1).orbit((2,)) == [(2,), (-2,)]


def test_dominant_weights_below():
    assert build('A', 1).dominant_weights_below((2,)) == [(2,), (0,)]
    a2 = build('A', 2)
    assert a2.dominant_weights_below((1, 0)) == [(1, 0)]
    assert a2.dominant_weights_below((1, 1)) == [(1, 1), (0, 0)]
    assert a2.dominant_weights_below((3, 0)) == [(3, 0), (1, 1), (0, 0)]


@pytest.mark.parametrize('kind,rank', [('A', 2), ('B', 2), ('G', 2)])
def test_inversion_sets_and_longest_element(kind, rank):
    rs = build(kind, rank)
    for w in rs.weyl_group():
        assert len(rs.inversion_set(w)) == w.length
    assert rs.longest_element().length == len(rs.positive_roots)


def test_reflections_are_involutions():
    rs = build('B', 2)
    for c in rs.positive_roots:
        s = rs.reflection(c)
        assert rs.compose(s, s) == rs.identity
        assert s.root(c) == tuple(-x for x in c)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3))
def test_orbit_size_divides_weyl_order(a, b):
    rs = build('B', 2)
    orb = rs.orbit((2 * a, 2 * b))
    assert rs.weyl_order % len(orb) == 0
    assert all(rs.dominant_weight2(e) == (2 * a, 2 * b) for e in orb)


def test_pair_examples():
    a2 = build('A', 2)
    w1 = a2.weight((1, 0))
    assert a2.pair(w1, w1) == Fraction(2, 3)
    b2 = build('B', 2)
    theta = b2.root(b2.theta)
    assert b2.pair(theta, theta) == 4


@pytest.mark.parametrize('kind,rank', [('A', 2), ('B', 2), ('G', 2), ('A', 3)])
def test_rho_pairs_to_one_with_simple_coroots(kind, rank):
    rs = build(kind, rank)
    for i in range(rank):
        simple = tuple(1 if j == i else 0 for j in range(rank))
        assert rs.pair_weight_coroot(rs.rho2, simple) == 1


@pytest.mark.parametrize('kind,rank,kl,ks', [('A', 2, 2, 2), ('B', 2, 2, 1), ('G', 2, 1, 3)])
def test_rho_k_minus_its_image(kind, rank, kl, ks):
    rs = build(kind, rank, kl, ks)
    for w in rs.weyl_group():
        lhs = tuple(a - b for a, b in zip(rs.rho_k2, rs.inverse(w).weight(rs.rho_k2)))
        rhs = [0] * rank
        for c in rs.inversion_set(w):
            rhs = [x + rs.k_of(c) * y for x, y in zip(rhs, rs.root_weight(c))]
        assert lhs == tuple(rhs)


def test_dominant_representative():
    rs = build('A', 2)
    dom, w = rs.dominant_representative(rs.weight((-1, 0)))
    assert rs.omega_coords(dom) == (0, 1)
    assert w.weight((0, 2)) == (-2, 0) or w.weight((-2, 0)) == (0, 2)
    dom, _ = rs.dominant_representative(rs.coweight((1, -2)))
    assert dom.is_coweight
    assert rs.b_coords(dom) == (1, 1)


def test_dominance_and_order():
    rs = build('A', 2)
    assert rs.dominance_leq(rs.weight((0, 0)), rs.weight((1, 1)))
    assert not rs.dominance_leq(rs.weight((1, 1)), rs.weight((0, 0)))
    assert not rs.dominance_leq(rs.weight((0, 0)), rs.weight((1, 0)))
    a1 = build('A', 1)
    # same orbit: antidominant weights come first, dominant coweights come first
    assert a1.prec(a1.weight((-1,)), a1.weight((1,)))
    assert not a1.prec(a1.weight((1,)), a1.weight((-1,)))
    assert a1.prec(a1.coweight((1,)), a1.coweight((-1,)))
    assert not a1.prec(a1.coweight((-1,)), a1.coweight((1,)))
    # smaller orbits come first either way
    assert a1.prec(a1.weight((0,)), a1.weight((-2,)))
    assert a1.prec(a1.coweight((0,)), a1.coweight((2,)))


@pytest.mark.parametrize('kind,rank,e', [('A', 2, (2, 0)), ('A', 2, (2, 2)), ('B', 2, (2, 2)), ('G', 2, (0, 2))])
def test_orbit_has_one_dominance_maximum(kind, rank, e):
    rs = build(kind, rank)
    orb = rs.orbit(e)
    maxima = [v for v in orb if all(rs.leq2(x, v) for x in orb)]
    assert maxima == [rs.dominant_weight2(e)]
