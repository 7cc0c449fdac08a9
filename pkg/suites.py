"""
Verification suites. Each suite turns one VerificationCase into report records
{case, suite, inputs, check, lhs, rhs, verdict, monomial?, seconds?}.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy.polys.matrices import DomainMatrix

import dunkl
from afweyl import affine_group
from dahaop import (DiffOpForm, RatX, antidominant_leading_coefficient, check_braid, check_center,
                    check_cross, check_omega, check_quadratic, check_symmetry_criterion, check_Y,
                    check_YT, daha, opform_T, opform_Y, monomial_samples)
from macpoly import (CheckResult, cherednik_norm_check, d_k_product, d_k_sum, dominant_weights_of_height,
                     equality, expand_in_orbit_sums, expected_proportionality, inner_cherednik, inner_k,
                     macdonald, macdonald_operator, norm_check, operator_diagonal, orbit_sum,
                     proportionality, ct_identity_check, weyl_character)
from ring import ONE, QFIELD, ZERO, LaurentPoly, scalar_iota
from rootsys import RootSystemData, build
from shiftop import (verify_adjoint, verify_antisymmetrizer_bridge, verify_expansion, verify_ladder,
                     verify_norm_recursion, verify_preservation, verify_shift, verify_vanishing)

logger = logging.getLogger('maclab.suites')

SUITE_NAMES = ('norm', 'ct', 'daha-relations', 'shift', 'dunkl', 'adjoint', 'antisym', 'minuscule')

Check = Union[CheckResult, Tuple[str, bool]]


@dataclass(frozen=True)
class VerificationCase:
    suite: str
    kind: str = 'A'
    rank: int = 1
    k_long: int = 1
    k_short: Optional[int] = None
    maxheight: int = 2
    degree: int = 3
    method: str = 'gram'
    n: int = 3
    caps: Tuple = field(default=())

    def __post_init__(self):
        if self.suite not in SUITE_NAMES:
            raise ValueError(f'unknown suite {self.suite!r}')

    @property
    def rs(self) -> RootSystemData:
        return build(self.kind, self.rank, self.k_long, self.k_short, caps=dict(self.caps))

    @property
    def case_id(self) -> str:
        if self.suite == 'dunkl':
            return f'dunkl:n={self.n}:d={self.degree}'
        ks = self.k_long if self.k_short is None else self.k_short
        return f'{self.suite}:{self.kind}{self.rank}:k={self.k_long},{ks}'

    def inputs(self) -> Dict:
        if self.suite == 'dunkl':
            return {'n': self.n, 'degree': self.degree}
        ks = self.k_long if self.k_short is None else self.k_short
        return {'type': f'{self.kind}{self.rank}', 'k_long': self.k_long, 'k_short': ks,
                'maxheight': self.maxheight, 'degree': self.degree, 'method': self.method}


def make_record(case: VerificationCase, check: Check) -> Dict:
    rec = {'case': case.case_id, 'suite': case.suite, 'inputs': case.inputs()}
    if isinstance(check, CheckResult):
        rec.update(check.as_record())
    else:
        name, ok = check
        rec.update({'check': name, 'lhs': None, 'rhs': None, 'verdict': 'PASS' if ok else 'FAIL'})
    return rec


def symmetric_inputs(rs: RootSystemData, maxheight: int) -> List[LaurentPoly]:
    return [orbit_sum(rs, lam) for lam in dominant_weights_of_height(rs, maxheight)]


def _min_k(rs: RootSystemData) -> int:
    return min(rs.k_long, rs.k_short)


# -- suites ------------------------------------------------------------------------

def suite_norm(case: VerificationCase) -> List[Check]:
    rs = case.rs
    out: List[Check] = []
    polys = {}
    for lam in dominant_weights_of_height(rs, case.maxheight):
        p = macdonald(rs, lam, case.method)
        polys[lam] = p.to_laurent()
        out.append((f'unitriangular {list(lam)}', p.coeffs.get(lam) == ONE))
        out.append((f'iota-stable {list(lam)}', p.is_iota_stable()))
        if _min_k(rs) >= 1:
            out.append(norm_check(rs, p))
            out.append(cherednik_norm_check(rs, p))
        if (rs.k_long, rs.k_short) == (1, 1):
            out.append((f'P = Weyl character {list(lam)}', polys[lam] == weyl_character(rs, lam)))
        if (rs.k_long, rs.k_short) == (0, 0):
            out.append((f'P = m {list(lam)}', polys[lam] == orbit_sum(rs, lam)))
    ortho_k, ortho_c = True, True
    for a, b in combinations(sorted(polys), 2):
        ortho_k = ortho_k and not inner_k(rs, polys[a], polys[b])
        ortho_c = ortho_c and not inner_cherednik(rs, polys[a], polys[b])
    out.append(('orthogonality <,>_k', ortho_k))
    out.append(("orthogonality <,>'_k", ortho_c))
    return out


def suite_ct(case: VerificationCase) -> List[Check]:
    rs = case.rs
    out: List[Check] = []
    if _min_k(rs) >= 1:
        out += ct_identity_check(rs)
        out.append(equality('d_k sum = product', d_k_sum(rs), d_k_product(rs)))
    else:
        out.append(equality('d_k at k = 0', d_k_sum(rs), QFIELD(rs.weyl_order)))
    return out


def check_opforms(rs: RootSystemData, samples: Sequence[LaurentPoly]) -> List[Check]:
    rep = daha(rs)
    aff = affine_group(rs)
    out: List[Check] = []
    ok = all(opform_T(rs, aff.simple_reflection(i)).apply(f) == rep.apply_T(i, f)
             for i in range(rs.rank + 1) for f in samples)
    out.append(('operator form of T_i agrees', ok))
    units = [tuple(1 if j == r else 0 for j in range(rs.rank)) for r in range(rs.rank)]
    for y in units + [tuple(-x for x in u) for u in units]:
        form = opform_Y(rs, y)
        out.append((f'operator form of Y^{list(y)} agrees', all(form.apply(f) == rep.apply_Y(y, f) for f in samples)))
        if all(x <= 0 for x in y):
            lead = form.coefficient(aff.translation(y))
            expected = antidominant_leading_coefficient(rs, y)
            out.append((f'leading coefficient of Y^{list(y)}', lead is not None and lead == expected))
    return out


def suite_daha(case: VerificationCase) -> List[Check]:
    rs = case.rs
    rep = daha(rs)
    mons = monomial_samples(rs, case.degree)
    samples = monomial_samples(rs, 1)
    out: List[Check] = []
    out += check_quadratic(rep, mons)
    out += check_braid(rep, mons)
    out += check_omega(rep, mons)
    out += check_cross(rep, mons, samples)
    out += check_Y(rep, samples)
    out += check_YT(rep, samples)
    out += check_center(rep, samples)
    candidates = symmetric_inputs(rs, 2) + samples + [samples[0] + samples[-1].scale(2)]
    out += check_symmetry_criterion(rep, candidates)
    out += check_opforms(rs, samples)
    return out


def suite_shift(case: VerificationCase) -> List[Check]:
    rs = case.rs
    if not rs.equal_k or rs.k_long < 1:
        raise ValueError(f'{rs.label} {rs.k_label}: shift suite needs equal k >= 1')
    out: List[Check] = []
    lams = dominant_weights_of_height(rs, case.maxheight)
    for lam in lams:
        out += verify_shift(rs, lam)
        out += verify_norm_recursion(rs, lam)
        out += verify_ladder(rs, lam)
        if not all(x >= 1 for x in lam):
            out.append(verify_vanishing(rs, lam))
    sym = symmetric_inputs(rs, 1)
    for f in sym:
        out += verify_preservation(rs, f)
        out += verify_antisymmetrizer_bridge(rs, f)
    for f in sym:
        for g in sym:
            out.append(verify_adjoint(rs, f, g))
    out += verify_expansion(rs, rs.rho_k2)
    return out


def _self_adjoint_operator(rs: RootSystemData, r: int) -> Dict[Tuple[int, ...], int]:
    rep = daha(rs)
    b = tuple(1 if j == r else 0 for j in range(rs.rank))
    fy = dict(rep.orbit_operator(b))
    fy.update(rep.orbit_operator(tuple(-x for x in b)))
    return fy


def suite_adjoint(case: VerificationCase) -> List[Check]:
    rs = case.rs
    rep = daha(rs)
    samples = monomial_samples(rs, 1)
    out: List[Check] = []
    iota_ok, t_ok, y_ok = True, True, True
    units = [tuple(1 if j == r else 0 for j in range(rs.rank)) for r in range(rs.rank)]
    for f in samples:
        for g in samples:
            iota_ok = iota_ok and inner_cherednik(rs, f, g) == scalar_iota(inner_cherednik(rs, g, f))
            for i in range(rs.rank + 1):
                t_ok = t_ok and inner_cherednik(rs, rep.apply_T(i, f), g) == inner_cherednik(rs, f, rep.apply_T_inv(i, g))
            for y in units:
                neg = tuple(-x for x in y)
                y_ok = y_ok and inner_cherednik(rs, rep.apply_Y(y, f), g) == inner_cherednik(rs, f, rep.apply_Y(neg, g))
    out += [("<f,g>' = iota <g,f>'", iota_ok), ('T_i* = T_i^-1', t_ok), ('(Y^lam)* = Y^-lam', y_ok)]

    lams = dominant_weights_of_height(rs, case.maxheight)
    sym = {lam: orbit_sum(rs, lam) for lam in lams}
    for r in range(rs.rank):
        fy = _self_adjoint_operator(rs, r)
        ok = all(inner_k(rs, rep.apply_fY(fy, sym[a]), sym[b]) == inner_k(rs, sym[a], rep.apply_fY(fy, sym[b]))
                 for a in lams for b in lams)
        out.append((f'L_f self-adjoint, f from b_{r + 1}', ok))

    fy = rep.orbit_operator(tuple([1] * rs.rank))
    for lam in lams:
        img = expand_in_orbit_sums(rs, rep.apply_fY(fy, sym[lam]))
        diag = img.get(lam, ZERO)
        lower = all(nu == lam or rs.leq2(tuple(2 * x for x in nu), tuple(2 * x for x in lam)) for nu in img)
        out.append(equality(f'diagonal of f(Y) on m_{list(lam)}', diag, rep.eigenvalue(fy, lam)))
        out.append((f'f(Y) m_{list(lam)} triangular', lower))
    wsum = rep.weyl_sum_operator(rs.rho_vee)
    for lam in lams:
        p = macdonald(rs, lam, case.method).to_laurent()
        ok = rep.apply_fY(wsum, p) == p.scale(rep.eigenvalue(wsum, lam))
        out.append((f'P_{list(lam)} eigenfunction', ok))
    return out


def filtration_basis(rs: RootSystemData, d: int) -> List[Tuple[int, ...]]:
    """Exponents whose dominant representative has height <= d."""
    out = set()
    for lam in dominant_weights_of_height(rs, d):
        out.update(rs.orbit(tuple(2 * x for x in lam)))
    return sorted(out)


def _operator_rows(basis: Sequence[Tuple[int, ...]], images: Sequence[LaurentPoly]) -> List[List]:
    """Matrix with one column per input, one row per output exponent in the basis."""
    index = {e: i for i, e in enumerate(basis)}
    rows = [[ZERO] * len(images) for _ in basis]
    for j, img in enumerate(images):
        for e, c in img.terms.items():
            rows[index[e]][j] = c
    return rows


def _rank(rows: List[List]) -> int:
    if not rows or not rows[0]:
        return 0
    return DomainMatrix(rows, (len(rows), len(rows[0])), QFIELD.to_domain()).rank()


def suite_antisym(case: VerificationCase) -> List[Check]:
    rs = case.rs
    if not rs.equal_k:
        raise ValueError(f'{rs.label} {rs.k_label}: q-antisymmetrizer needs equal k')
    rep = daha(rs)
    t = rep.t[1]
    samples = monomial_samples(rs, 1)
    out: List[Check] = [('P_-(1) = 0', rep.antisymmetrize(rep.one()).is_zero())]
    proj_ok, kill_ok, div_ok, img_ok = True, True, True, True
    for f in samples:
        pf = rep.q_antisymmetrize(f)
        proj_ok = proj_ok and rep.q_antisymmetrize(pf) == pf
        img_ok = img_ok and all(rep.apply_T(i, pf) == pf.scale(-1 / t) for i in range(1, rs.rank + 1))
        for i in range(1, rs.rank + 1):
            tf = rep.apply_T(i, f)
            kill_ok = kill_ok and rep.q_antisymmetrize(tf + f.scale(1 / t)).is_zero()
            div_ok = div_ok and rep.q_antisymmetrize(tf) == pf.scale(-1 / t)
    out += [('P^q_- is a projector', proj_ok), ('P^q_- kills (T_i + t^-1)g', kill_ok),
            ('P^q_- T_i = -t^-1 P^q_-', div_ok),
            ('image of P^q_- is anti-invariant', img_ok)]
    for d in range(0, min(case.degree, 3) + 1):
        basis = filtration_basis(rs, d)
        mons = [LaurentPoly.monomial(e) for e in basis]
        a = _operator_rows(basis, [rep.q_antisymmetrize(f) for f in mons])
        b = _operator_rows(basis, [rep.antisymmetrize(f) for f in mons])
        ra, rb, rab = _rank(a), _rank(b), _rank(a + b)
        out.append((f'ker P^q_- = ker P_- at filtration {d}', ra == rb == rab))
    for f in symmetric_inputs(rs, 1):
        out += verify_antisymmetrizer_bridge(rs, f)
    return out


def _a1_res_checks(rs: RootSystemData) -> List[Check]:
    """Res of Y^rho and of Y^rho + Y^-rho against their closed forms."""
    aff = affine_group(rs)
    n = rs.rank
    t = rs.t(rs.theta)
    one = LaurentPoly.constant(ONE, n)
    x = LaurentPoly.monomial(rs.root_weight(rs.theta))
    xinv = x.bar()
    rho, mrho = (1,), (-1,)
    up, down = opform_Y(rs, rho), opform_Y(rs, mrho)
    out: List[Check] = []
    expected = DiffOpForm(rs, {aff.translation(rho): RatX.const(t, n)})
    out.append(('Res Y^rho = t tau(rho)', up.res().equals(expected)))
    closed = DiffOpForm(rs, {
        aff.translation(rho): RatX(x.scale(t) - one.scale(1 / t), x - one),
        aff.translation(mrho): RatX(xinv.scale(t) - one.scale(1 / t), xinv - one),
    })
    total = (up + down).res()
    out.append(('Res(Y^rho + Y^-rho) closed form', total.equals(closed)))
    rep = daha(rs)
    fy = rep.orbit_operator(rho)
    ok = all(total.apply(f) == rep.apply_fY(fy, f) for f in symmetric_inputs(rs, 3))
    out.append(('Res form acts as f(Y) on symmetric inputs', ok))
    return out


def suite_minuscule(case: VerificationCase) -> List[Check]:
    rs = case.rs
    out: List[Check] = []
    lams = dominant_weights_of_height(rs, case.maxheight)
    sym = {lam: orbit_sum(rs, lam) for lam in lams}
    minuscule = rs.minuscule_coweights()
    for r in minuscule:
        c, ok = proportionality(rs, r, list(sym.values()))
        out.append((f'sum_w Y^(w b_{r + 1}) proportional to D', ok))
        if c is not None:
            out.append(equality(f'proportionality constant for b_{r + 1}', c, expected_proportionality(rs, r)))
        for lam in lams:
            img = expand_in_orbit_sums(rs, macdonald_operator(rs, r, sym[lam]))
            out.append(equality(f'D_{r + 1} diagonal on m_{list(lam)}', img.get(lam, ZERO),
                                operator_diagonal(rs, r, lam)))
            p = macdonald(rs, lam, case.method).to_laurent()
            out.append((f'D_{r + 1} P_{list(lam)} eigen', macdonald_operator(rs, r, p) == p.scale(operator_diagonal(rs, r, lam))))
    for r1, r2 in combinations(minuscule, 2):
        ok = all(macdonald_operator(rs, r1, macdonald_operator(rs, r2, f))
                 == macdonald_operator(rs, r2, macdonald_operator(rs, r1, f)) for f in sym.values())
        out.append((f'D_{r1 + 1} D_{r2 + 1} commute', ok))
    if rs.kind == 'A' and rs.rank == 1:
        out += _a1_res_checks(rs)
    return out


def suite_dunkl(case: VerificationCase) -> List[Check]:
    return dunkl.run_all(case.n, case.degree)


SUITES = {
    'norm': suite_norm,
    'ct': suite_ct,
    'daha-relations': suite_daha,
    'shift': suite_shift,
    'dunkl': suite_dunkl,
    'adjoint': suite_adjoint,
    'antisym': suite_antisym,
    'minuscule': suite_minuscule,
}


# -- running ----------------------------------------------------------------------

def run_case(case: VerificationCase, timing: bool = False) -> List[Dict]:
    logger.info(f'Running {case.case_id}')
    start = time.time()
    try:
        records = [make_record(case, c) for c in SUITES[case.suite](case)]
    except Exception as e:
        logger.error(f'{case.case_id} failed: {e}')
        records = [{'case': case.case_id, 'suite': case.suite, 'inputs': case.inputs(), 'check': 'error',
                    'lhs': type(e).__name__, 'rhs': str(e), 'verdict': 'FAIL'}]
    elapsed = time.time() - start
    if timing:
        for rec in records:
            rec['seconds'] = round(elapsed, 3)
    failed = sum(1 for r in records if r['verdict'] != 'PASS')
    logger.info(f'Finished {case.case_id}: {len(records)} checks, {failed} failed, {elapsed:.1f}s')
    return records


def _run_case_args(args) -> List[Dict]:
    return run_case(*args)


def run_cases(cases: Iterable[VerificationCase], jobs: int = 1, timing: bool = False) -> List[Dict]:
    """Run every case, in a process pool when jobs > 1; records come back sorted by case id."""
    cases = sorted(cases, key=lambda c: c.case_id)
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_run_case_args, [(c, timing) for c in cases]))
    else:
        batches = [run_case(c, timing) for c in cases]
    records = [r for batch in batches for r in batch]
    return sorted(records, key=lambda r: r['case'])
