import pytest

from macpoly import norm_formula_rhs, orbit_sum
from ring import U
from rootsys import CapExceeded, build
from shiftop import (ShiftContext, c_k, chat_k, ladder, shift_context, verify_adjoint,
                     verify_antisymmetrizer_bridge, verify_expansion, verify_ladder, verify_norm_recursion,
                     verify_preservation, verify_shift, verify_vanishing)

Q = U ** 4  # q for A1


def test_constants_a1():
    rs = build('A', 1, 1)
    assert c_k(rs, (0,)) == Q - 1 / Q
    assert chat_k(rs, (0,)) == Q ** 3 - Q ** -3


def test_G_on_a1():
    rs = build('A', 1, 1)
    ctx = shift_context(rs)
    g = ctx.apply_G(orbit_sum(rs, (1,)))
    assert g.constant_term() == Q ** 2 - 1
    assert len(g) == 1


def test_context_requirements():
    with pytest.raises(ValueError):
        ShiftContext(build('B', 2, 2, 1))
    with pytest.raises(CapExceeded):
        ShiftContext(build('B', 3, 1))


@pytest.mark.parametrize('k', [2, 3])
def test_ladder_matches_norm_formula(k):
    for kind, rank in [('A', 1), ('A', 2)]:
        rs = build(kind, rank, k)
        for lam in [(0,) * rank, (1,) + (0,) * (rank - 1)]:
            assert ladder(rs, lam, k) == norm_formula_rhs(rs, lam)


def test_ladder_starts_at_one():
    rs = build('A', 1, 1)
    assert ladder(rs, (3,), 1) == 1
    with pytest.raises(ValueError):
        ladder(rs, (0,), 0)


@pytest.mark.parametrize('kind,rank,k', [('A', 1, 1), ('A', 1, 2), ('A', 2, 1)])
def test_shift_identities(kind, rank, k):
    rs = build(kind, rank, k)
    for lam in [(0,) * rank, (1,) * rank]:
        assert all(r.ok for r in verify_shift(rs, lam))
        assert all(r.ok for r in verify_norm_recursion(rs, lam))
        assert all(r.ok for r in verify_ladder(rs, lam))
    assert verify_vanishing(rs, (0,) * rank).ok
    with pytest.raises(ValueError):
        verify_vanishing(rs, (1,) * rank)


@pytest.mark.parametrize('kind,rank,k', [('A', 1, 1), ('A', 2, 1), ('A', 1, 2)])
def test_preservation_adjoint_and_bridge(kind, rank, k):
    rs = build(kind, rank, k)
    sym = [orbit_sum(rs, (0,) * rank), orbit_sum(rs, (1,) + (0,) * (rank - 1))]
    for f in sym:
        assert all(r.ok for r in verify_preservation(rs, f))
        assert all(r.ok for r in verify_antisymmetrizer_bridge(rs, f))
        for g in sym:
            assert verify_adjoint(rs, f, g).ok


def test_expansion():
    for kind, rank, k in [('A', 1, 2), ('A', 2, 1), ('B', 2, 1)]:
        rs = build(kind, rank, k)
        assert all(r.ok for r in verify_expansion(rs, rs.rho_k2))
        assert all(r.ok for r in verify_expansion(rs, (2,) * rank))
