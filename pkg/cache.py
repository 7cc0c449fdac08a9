"""
On-disk cache of computed Macdonald polynomials, one JSON file per (type, k, lambda).
Entries are revalidated on load; a stale or mismatched entry is ignored and recomputed.
"""

import json
import logging
import os
from typing import Dict, Optional, Sequence

from macpoly import ConsistencyError, MacdonaldPoly, macdonald, norm_check, orbit_sum
from ring import ONE, parse_scalar, render_scalar
from rootsys import RootSystemData

logger = logging.getLogger('maclab.cache')

FORMAT_VERSION = 1

# constructions each stored method stands for
METHODS = {'gram': {'gram'}, 'eigen': {'eigen'}, 'both': {'gram', 'eigen'}}


class CacheFormatError(ValueError):
    pass


def cache_path(directory: str, rs: RootSystemData, lam: Sequence[int]) -> str:
    name = f"{rs.kind}{rs.rank}_k{rs.k_long}-{rs.k_short}_{'-'.join(str(int(x)) for x in lam)}.json"
    return os.path.join(directory, name)


def to_json(p: MacdonaldPoly) -> Dict:
    rs = p.rs
    return {
        'format_version': FORMAT_VERSION,
        'type': rs.label,
        'D': rs.q_denominator,
        'lambda': list(p.lam),
        'k': [rs.k_long, rs.k_short],
        'method': p.method,
        'coeffs': [{'exponent': [2 * x for x in mu], 'coeff': render_scalar(p.coeffs[mu])}
                   for mu in sorted(p.coeffs, reverse=True)],
    }


def from_json(rs: RootSystemData, data: Dict) -> MacdonaldPoly:
    """Rebuild a MacdonaldPoly, rejecting entries written for another system or format."""
    try:
        if data['format_version'] != FORMAT_VERSION:
            raise CacheFormatError(f"format_version {data['format_version']} != {FORMAT_VERSION}")
        if data['D'] != rs.q_denominator:
            raise CacheFormatError(f"q denominator {data['D']} != {rs.q_denominator}")
        if list(data['k']) != [rs.k_long, rs.k_short]:
            raise CacheFormatError(f"k {data['k']} != {[rs.k_long, rs.k_short]}")
        lam = tuple(int(x) for x in data['lambda'])
        coeffs = {}
        for term in data['coeffs']:
            e = term['exponent']
            if len(e) != rs.rank or any(x % 2 for x in e):
                raise CacheFormatError(f'bad exponent {e}')
            coeffs[tuple(x // 2 for x in e)] = parse_scalar(term['coeff'])
        method = data.get('method', 'gram')
        if method not in METHODS:
            raise CacheFormatError(f'unknown method {method!r}')
    except CacheFormatError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise CacheFormatError(f'malformed cache entry: {e}')
    if coeffs.get(lam) != ONE:
        raise CacheFormatError(f'leading coefficient of {list(lam)} is not 1')
    return MacdonaldPoly(rs, lam, coeffs, method)


def revalidate(rs: RootSystemData, p: MacdonaldPoly) -> bool:
    """Norm formula where k >= 1, else P must be the orbit sum itself."""
    if min(rs.k_long, rs.k_short) >= 1:
        return norm_check(rs, p).ok
    return p.to_laurent() == orbit_sum(rs, p.lam)


class PolyCache:
    """Directory-backed store; a directory of None disables caching."""

    def __init__(self, directory: Optional[str]):
        self.directory = directory
        if directory:
            os.makedirs(directory, exist_ok=True)

    def load(self, rs: RootSystemData, lam: Sequence[int]) -> Optional[MacdonaldPoly]:
        if not self.directory:
            return None
        path = cache_path(self.directory, rs, lam)
        if not os.path.exists(path):
            return None
        try:
            with open(path, 'r') as f:
                p = from_json(rs, json.load(f))
        except (json.JSONDecodeError, CacheFormatError) as e:
            logger.warning(f'Ignoring cache entry {path}: {e}')
            return None
        if not revalidate(rs, p):
            logger.warning(f'Cache entry {path} fails revalidation, recomputing')
            return None
        logger.info(f'Loaded {path}')
        return p

    def store(self, p: MacdonaldPoly):
        if not self.directory:
            return
        path = cache_path(self.directory, p.rs, p.lam)
        with open(path, 'w') as f:
            json.dump(to_json(p), f, indent=2)
        logger.info(f'Saved {path}')

    def get(self, rs: RootSystemData, lam: Sequence[int], method: str = 'gram') -> MacdonaldPoly:
        """Cached P_lam; constructions named by method but missing from the entry are run and compared."""
        if method not in METHODS:
            raise ValueError(f'unknown method {method!r}')
        p = self.load(rs, lam)
        if p is None:
            p = macdonald(rs, lam, method)
            self.store(p)
            return p
        have, wanted = METHODS[p.method], METHODS[method]
        for name in sorted(wanted - have):
            fresh = macdonald(rs, lam, name)
            if not fresh.same_as(p):
                raise ConsistencyError(f'{rs.label} {rs.k_label}: cached {p.method} entry and {name} method '
                                       f'disagree on {list(p.lam)}')
            logger.info(f'Cached {p.method} entry for {list(p.lam)} confirmed by the {name} method')
        if wanted <= have:
            return MacdonaldPoly(rs, p.lam, p.coeffs, method)
        merged = MacdonaldPoly(rs, p.lam, p.coeffs, 'both')
        self.store(merged)
        return MacdonaldPoly(rs, p.lam, p.coeffs, method)
