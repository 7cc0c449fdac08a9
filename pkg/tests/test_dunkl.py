import pytest

from dunkl import DunklContext, resolve_normalization, run_all


def test_divided_difference():
    ctx = DunklContext(2)
    x1, x2 = ctx.x
    assert ctx.apply_b(1, 2, x1 ** 2) == -(x1 + x2)
    assert ctx.apply_b(1, 2, x1 * x2) == ctx.R.zero
    with pytest.raises(ValueError):
        ctx.apply_b(1, 1, x1)


def test_dunkl_on_x1():
    ctx = DunklContext(2)
    assert ctx.apply_D(1, ctx.x[0]) == ctx.R.one * (1 + ctx.k)
    assert ctx.apply_D(1, ctx.R.one) == ctx.R.zero


def test_sum_squares_a1():
    ctx = DunklContext(2)
    x1, x2 = ctx.x
    assert ctx.sum_squares(x1 ** 2 + x2 ** 2) == ctx.R.one * (4 + 4 * ctx.k)


def test_normalization_coefficient():
    ctx = DunklContext(3)
    c, ok = resolve_normalization(ctx, ctx.symmetric_basis(3))
    assert ok
    assert c == 2 * ctx.k


def test_symmetric_basis():
    ctx = DunklContext(3)
    basis = ctx.symmetric_basis(2)
    assert all(ctx.is_symmetric(f) for f in basis)
    # 1, e1, e1^2, e2
    assert len(basis) == 4


@pytest.mark.parametrize('n,degree', [(2, 3), (3, 3)])
def test_run_all_passes(n, degree):
    results = run_all(n, degree)
    assert results
    failed = [name for name, ok in results if not ok]
    assert failed == []


def test_needs_two_variables():
    with pytest.raises(ValueError):
        DunklContext(1)
    with pytest.raises(IndexError):
        DunklContext(3).apply_shat(3, DunklContext(3).R.one)
