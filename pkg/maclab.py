"""
Command-line driver: compute Macdonald polynomials and run verification suites.

    python maclab.py poly --type A1 --k 1 --weight 2
    python maclab.py verify norm --type A1,A2,B2 --k 1..3 --maxheight 3
    python maclab.py verify daha-relations --type A1 --degree 3 --out json --report out.json
    python maclab.py ct --type G2 --k 1..2
    python maclab.py dunkl --n 3 --degree 4
    python maclab.py info --type B2
"""

import argparse
import json
import logging
import os
import sys
from typing import Dict, List, Optional, Sequence, Tuple

import yaml

from afweyl import AffineConsistencyError
from cache import PolyCache
from macpoly import ConsistencyError, SingularSystem, norm_check, orbit_sum
from ring import NotDivisible
from rootsys import DEFAULT_CAPS, CapExceeded, UnsupportedRootSystem, build, parse_type
from suites import SUITE_NAMES, VerificationCase, run_cases

logger = logging.getLogger('maclab')

DEFAULTS = {
    'caps': dict(DEFAULT_CAPS),
    'run': {'jobs': 1, 'cache_dir': None, 'out': 'text', 'timing': False},
    'defaults': {'types': ['A1'], 'k': '1', 'maxheight': 2, 'degree': 3, 'dunkl_n': 3, 'dunkl_degree': 4},
}


def load_config(path: str = 'config.yaml') -> Dict:
    if not os.path.exists(path):
        return {}
    with open(path, 'r') as f:
        return yaml.safe_load(f) or {}


def resolve(flag, env_name: Optional[str], cfg: Dict, section: str, key: str, cast=str):
    """Flag, then environment, then config.yaml, then the built-in default."""
    if flag is not None:
        return flag
    if env_name and os.environ.get(env_name):
        return cast(os.environ[env_name])
    value = cfg.get(section, {}).get(key)
    if value is not None:
        return value
    return DEFAULTS[section][key]


def parse_k_range(text: str) -> List[int]:
    """'2' -> [2], '1..3' -> [1, 2, 3], '1,3' -> [1, 3]."""
    text = str(text).strip()
    if '..' in text:
        lo, hi = text.split('..', 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(',') if x.strip()]


def parse_weight(text: str, rank: int) -> Tuple[int, ...]:
    lam = tuple(int(x) for x in str(text).split(','))
    if len(lam) != rank or any(x < 0 for x in lam):
        raise ValueError(f'weight {text!r} is not a dominant weight of rank {rank}')
    return lam


def parse_types(text, rank: Optional[int]) -> List[Tuple[str, int]]:
    labels = text if isinstance(text, list) else str(text).split(',')
    out = []
    for label in labels:
        label = label.strip()
        if label.isalpha():
            if rank is None:
                raise UnsupportedRootSystem(f"'{label}' needs --rank")
            out.append((label.upper(), rank))
        else:
            out.append(parse_type(label))
    return out


def k_pairs(args, cfg: Dict) -> List[Tuple[int, int]]:
    if args.klong is not None or args.kshort is not None:
        kl = args.klong if args.klong is not None else args.kshort
        ks = args.kshort if args.kshort is not None else kl
        return [(kl, ks)]
    return [(k, k) for k in parse_k_range(resolve(args.k, None, cfg, 'defaults', 'k'))]


def render_text(header: Dict, records: Sequence[Dict]) -> str:
    lines = [f"# q = u**D, {', '.join(f'{t}: D={d}' for t, d in header.get('q_denominators', {}).items())}"]
    for r in records:
        line = f"{r['verdict']}  {r['case']}  {r['check']}"
        if r.get('lhs') is not None:
            line += f"  lhs={r['lhs']}  rhs={r['rhs']}"
        if r.get('monomial') is not None:
            line += f"  monomial={r['monomial']}"
        if r.get('seconds') is not None:
            line += f"  [{r['seconds']}s]"
        lines.append(line)
    failed = sum(1 for r in records if r['verdict'] != 'PASS')
    lines.append(f'# {len(records)} checks, {failed} failed')
    return '\n'.join(lines) + '\n'


def write_report(header: Dict, records: Sequence[Dict], out: str, report: Optional[str]):
    if out == 'json':
        failed = sum(1 for r in records if r['verdict'] != 'PASS')
        text = json.dumps({'header': header, 'records': list(records),
                           'summary': {'total': len(records), 'failed': failed}}, indent=2) + '\n'
    else:
        text = render_text(header, records)
    if report:
        with open(report, 'w') as f:
            f.write(text)
        logger.info(f'Report written to {report}')
    else:
        sys.stdout.write(text)


def exit_status(records: Sequence[Dict]) -> int:
    return 0 if all(r['verdict'] == 'PASS' for r in records) else 1


# -- verbs ------------------------------------------------------------------------

def cmd_poly(args, cfg: Dict, caps: Dict) -> Tuple[Dict, List[Dict]]:
    cache = PolyCache(resolve(args.cache_dir, 'MACLAB_CACHE_DIR', cfg, 'run', 'cache_dir'))
    header, records = {'q_denominators': {}}, []
    for kind, rank in parse_types(resolve(args.type, None, cfg, 'defaults', 'types'), args.rank):
        for kl, ks in k_pairs(args, cfg):
            rs = build(kind, rank, kl, ks, caps=caps)
            header['q_denominators'][rs.label] = rs.q_denominator
            lam = parse_weight(args.weight, rank)
            p = cache.get(rs, lam, args.method)
            if min(kl, ks) >= 1:
                check = norm_check(rs, p).as_record()
            else:
                ok = p.to_laurent() == orbit_sum(rs, lam)
                check = {'check': f'P = m {list(lam)}', 'lhs': None, 'rhs': None,
                         'verdict': 'PASS' if ok else 'FAIL'}
            records.append({
                'case': f'poly:{rs.label}:k={kl},{ks}:{list(lam)}',
                'suite': 'poly',
                'inputs': {'type': rs.label, 'k_long': kl, 'k_short': ks, 'lambda': list(lam), 'method': p.method},
                'coeffs': p.records(),
                **check,
            })
    return header, records


def build_cases(args, cfg: Dict, caps: Dict, suite: str) -> Tuple[Dict, List[VerificationCase]]:
    caps_t = tuple(sorted(caps.items()))
    if suite == 'dunkl':
        n = args.n if args.n is not None else cfg.get('defaults', {}).get('dunkl_n', DEFAULTS['defaults']['dunkl_n'])
        degree = args.degree if args.degree is not None else \
            cfg.get('defaults', {}).get('dunkl_degree', DEFAULTS['defaults']['dunkl_degree'])
        return {}, [VerificationCase('dunkl', n=int(n), degree=int(degree), caps=caps_t)]
    header, cases = {'q_denominators': {}}, []
    maxheight = int(resolve(args.maxheight, None, cfg, 'defaults', 'maxheight'))
    degree = int(resolve(args.degree, None, cfg, 'defaults', 'degree'))
    for kind, rank in parse_types(resolve(args.type, None, cfg, 'defaults', 'types'), args.rank):
        for kl, ks in k_pairs(args, cfg):
            rs = build(kind, rank, kl, ks, caps=caps)
            header['q_denominators'][rs.label] = rs.q_denominator
            cases.append(VerificationCase(suite, kind, rank, kl, ks, maxheight=maxheight, degree=degree,
                                          method=args.method, caps=caps_t))
    return header, cases


def cmd_verify(args, cfg: Dict, caps: Dict, suite: str) -> Tuple[Dict, List[Dict]]:
    header, cases = build_cases(args, cfg, caps, suite)
    jobs = int(resolve(args.jobs, 'MACLAB_JOBS', cfg, 'run', 'jobs', cast=int))
    timing = bool(resolve(args.timing, None, cfg, 'run', 'timing'))
    return header, run_cases(cases, jobs=jobs, timing=timing)


def cmd_info(args, cfg: Dict, caps: Dict):
    out = resolve(args.out, None, cfg, 'run', 'out')
    summaries = []
    for kind, rank in parse_types(resolve(args.type, None, cfg, 'defaults', 'types'), args.rank):
        summaries.append(build(kind, rank, caps=caps).summary())
    if out == 'json':
        text = json.dumps(summaries, indent=2) + '\n'
    else:
        text = ''.join('\n'.join(f'{key}: {value}' for key, value in s.items()) + '\n\n' for s in summaries)
    if args.report:
        with open(args.report, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def add_common(p: argparse.ArgumentParser, with_suite_flags: bool = True):
    p.add_argument('--type', help='Root systems, e.g. A1,A2,B2 (or a letter together with --rank)')
    p.add_argument('--rank', type=int, help='Rank when --type is a bare letter')
    p.add_argument('--out', choices=['text', 'json'], help='Report format')
    p.add_argument('--report', help='Write the report to this file instead of stdout')
    p.add_argument('--config', default='config.yaml', help='Configuration file')
    p.add_argument('-v', '--verbose', action='store_true', help='Debug logging')
    if not with_suite_flags:
        return
    p.add_argument('--k', help="Equal parameters: '2', '1..3' or '1,3'")
    p.add_argument('--klong', type=int, help='Parameter on long roots')
    p.add_argument('--kshort', type=int, help='Parameter on short roots')
    p.add_argument('--method', choices=['gram', 'eigen', 'both'], default='gram',
                   help='Construction of Macdonald polynomials')
    p.add_argument('--maxheight', type=int, help='Largest height of dominant weights')
    p.add_argument('--degree', type=int, help='Bound on test monomials (or Dunkl polynomial degree)')
    p.add_argument('--n', type=int, help='Number of variables for the Dunkl suite')
    p.add_argument('--jobs', type=int, help='Worker processes')
    p.add_argument('--cache-dir', help='Directory for cached polynomial tables')
    p.add_argument('--timing', action='store_true', default=None, help='Add wall time to records')


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Exact Macdonald polynomial and DAHA verification')
    sub = parser.add_subparsers(dest='verb', required=True)
    p = sub.add_parser('poly', help='Compute one Macdonald polynomial')
    add_common(p)
    p.add_argument('--weight', required=True, help="Dominant weight in fundamental-weight coordinates, e.g. '1,0'")
    p = sub.add_parser('verify', help='Run a verification suite')
    p.add_argument('suite', choices=SUITE_NAMES)
    add_common(p)
    p = sub.add_parser('ct', help='Constant-term identities')
    add_common(p)
    p = sub.add_parser('dunkl', help='Rational Dunkl operator suite')
    add_common(p)
    p = sub.add_parser('info', help='Root system summary')
    add_common(p, with_suite_flags=False)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format='[%(asctime)s] %(levelname)s: %(message)s')
    cfg = load_config(args.config)
    caps = dict(DEFAULT_CAPS)
    caps.update(cfg.get('caps') or {})

    try:
        if args.verb == 'info':
            cmd_info(args, cfg, caps)
            return 0
        out = resolve(args.out, None, cfg, 'run', 'out')
        if args.verb == 'poly':
            header, records = cmd_poly(args, cfg, caps)
        else:
            header, records = cmd_verify(args, cfg, caps, args.suite if args.verb == 'verify' else args.verb)
    except (UnsupportedRootSystem, CapExceeded, ValueError) as e:
        parser.error(str(e))
    except (NotDivisible, SingularSystem, ConsistencyError, AffineConsistencyError) as e:
        parser.error(f'{type(e).__name__}: {e}')
    write_report(header, records, out, args.report)
    return exit_status(records)


if __name__ == '__main__':
    sys.exit(main())
