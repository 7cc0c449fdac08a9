import json

import pytest

import cache as cache_mod
import macpoly
from cache import CacheFormatError, PolyCache, cache_path, from_json, to_json
from macpoly import ConsistencyError, MacdonaldPoly, macdonald
from ring import ONE
from rootsys import build


def test_cache_path(tmp_path):
    rs = build('B', 2, 2, 1)
    assert cache_path(str(tmp_path), rs, (1, 0)) == str(tmp_path / 'B2_k2-1_1-0.json')


def test_store_and_load(tmp_path):
    rs = build('A', 2, 2)
    cache = PolyCache(str(tmp_path))
    p = cache.get(rs, (1, 1))
    assert (tmp_path / 'A2_k2-2_1-1.json').exists()
    loaded = cache.load(rs, (1, 1))
    assert loaded is not None
    assert loaded.same_as(p)
    assert loaded.same_as(macdonald(rs, (1, 1)))


def test_json_layout():
    rs = build('A', 1, 2)
    data = to_json(macdonald(rs, (2,)))
    assert data['D'] == 4
    assert data['k'] == [2, 2]
    assert [c['exponent'] for c in data['coeffs']] == [[4], [0]]
    assert data['coeffs'][0]['coeff'] == '1'


def test_rejects_other_format_or_parameters():
    rs = build('A', 1, 2)
    data = to_json(macdonald(rs, (2,)))
    with pytest.raises(CacheFormatError):
        from_json(rs, dict(data, format_version=99))
    with pytest.raises(CacheFormatError):
        from_json(build('A', 1, 3), data)
    with pytest.raises(CacheFormatError):
        from_json(rs, dict(data, coeffs=[{'exponent': [3], 'coeff': '1'}]))
    with pytest.raises(CacheFormatError):
        from_json(rs, {'format_version': 1})


def test_corrupt_entries_are_recomputed(tmp_path):
    rs = build('A', 1, 1)
    cache = PolyCache(str(tmp_path))
    path = tmp_path / 'A1_k1-1_2.json'
    path.write_text('{not json')
    assert cache.load(rs, (2,)) is None
    data = to_json(macdonald(rs, (2,)))
    data['coeffs'][1]['coeff'] = '5'
    path.write_text(json.dumps(data))
    assert cache.load(rs, (2,)) is None
    p = cache.get(rs, (2,))
    assert p.same_as(macdonald(rs, (2,)))
    assert cache.load(rs, (2,)) is not None


def test_disabled_cache():
    cache = PolyCache(None)
    rs = build('A', 1, 1)
    assert cache.load(rs, (1,)) is None
    assert cache.get(rs, (1,)).coeffs == macdonald(rs, (1,)).coeffs


def test_coefficients_are_never_evaluated(tmp_path):
    rs = build('A', 1, 1)
    data = to_json(macdonald(rs, (2,)))
    data['coeffs'][1]['coeff'] = "__import__('os').system('true')*0+1"
    with pytest.raises(CacheFormatError):
        from_json(rs, data)
    (tmp_path / 'A1_k1-1_2.json').write_text(json.dumps(data))
    assert PolyCache(str(tmp_path)).load(rs, (2,)) is None


def test_cache_hit_runs_missing_method(tmp_path, monkeypatch):
    rs = build('A', 2, 1)
    cache = PolyCache(str(tmp_path))
    assert cache.get(rs, (1, 1), 'gram').method == 'gram'
    calls = []

    def counting(rs, lam, method='gram'):
        calls.append(method)
        return macpoly.macdonald(rs, lam, method)

    monkeypatch.setattr(cache_mod, 'macdonald', counting)
    p = cache.get(rs, (1, 1), 'both')
    assert calls == ['eigen']
    assert p.method == 'both'
    assert cache.load(rs, (1, 1)).method == 'both'
    assert cache.get(rs, (1, 1), 'eigen').method == 'eigen'
    assert cache.get(rs, (1, 1), 'gram').method == 'gram'
    assert calls == ['eigen']
    with pytest.raises(ValueError):
        cache.get(rs, (1, 1), 'guess')


def test_cache_hit_disagreeing_method(tmp_path, monkeypatch):
    rs = build('A', 1, 1)
    cache = PolyCache(str(tmp_path))
    cache.get(rs, (2,), 'eigen')
    monkeypatch.setattr(cache_mod, 'macdonald', lambda rs, lam, method='gram': MacdonaldPoly(rs, lam, {lam: ONE}, method))
    with pytest.raises(ConsistencyError):
        cache.get(rs, (2,), 'gram')
