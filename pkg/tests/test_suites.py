import pytest

from suites import VerificationCase, run_case, suite_antisym


@pytest.mark.parametrize('rank,k', [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_antisym_suite_passes(rank, k):
    records = run_case(VerificationCase('antisym', 'A', rank, k, k, degree=2))
    assert records
    failed = [r['check'] for r in records if r['verdict'] != 'PASS']
    assert failed == []
    checks = {r['check'] for r in records}
    assert 'P^q_- kills (T_i + t^-1)g' in checks
    assert 'P^q_- T_i = -t^-1 P^q_-' in checks


def test_antisym_needs_equal_k():
    with pytest.raises(ValueError):
        suite_antisym(VerificationCase('antisym', 'B', 2, 2, 1))
    records = run_case(VerificationCase('antisym', 'B', 2, 2, 1))
    assert [r['check'] for r in records] == ['error']
    assert records[0]['verdict'] == 'FAIL'
