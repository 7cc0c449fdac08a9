"""
Macdonald polynomials and the identities around them.

Dominant weights are passed as fundamental-weight coordinates (undoubled);
LaurentPoly exponents stay doubled as everywhere else.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import ring as poly_ring

from dahaop import NotInvariant, daha
from ring import (ONE, QFIELD, ZERO, LaurentPoly, Scalar, U, ct_product, exact_div, is_monomial,
                  qbracket, render_scalar, scalar_iota, translate, w_action,
                  weight_functions)
from rootsys import RootSystemData

logger = logging.getLogger('maclab.macpoly')

Dominant = Tuple[int, ...]


class ConsistencyError(RuntimeError):
    pass


class SingularSystem(RuntimeError):
    pass


@dataclass
class CheckResult:
    """One verified identity: both sides, the verdict and a monomial factor if measured."""
    name: str
    lhs: Scalar
    rhs: Scalar
    ok: bool
    monomial: Optional[Scalar] = None

    def as_record(self) -> Dict:
        out = {'check': self.name, 'lhs': render_scalar(self.lhs), 'rhs': render_scalar(self.rhs),
               'verdict': 'PASS' if self.ok else 'FAIL'}
        if self.monomial is not None:
            out['monomial'] = render_scalar(self.monomial)
        return out


def equality(name: str, lhs: Scalar, rhs: Scalar) -> CheckResult:
    return CheckResult(name, lhs, rhs, lhs == rhs)


# -- orbit sums and inner products ----------------------------------------------

def _doubled(lam: Sequence[int]) -> Tuple[int, ...]:
    return tuple(2 * int(x) for x in lam)


def orbit_sum(rs: RootSystemData, lam: Sequence[int]) -> LaurentPoly:
    if any(x < 0 for x in lam):
        raise ValueError(f'{list(lam)} is not dominant')
    return LaurentPoly({e: ONE for e in rs.orbit(_doubled(lam))}, rank=rs.rank)


def expand_in_orbit_sums(rs: RootSystemData, f: LaurentPoly) -> Dict[Dominant, Scalar]:
    if not daha(rs).is_invariant(f):
        raise NotInvariant('polynomial is not W-invariant')
    out: Dict[Dominant, Scalar] = {}
    rem = f
    while not rem.is_zero():
        e = max((e for e in rem.terms if all(x >= 0 for x in e)), key=lambda e: (sum(e), e))
        lam = tuple(x // 2 for x in e)
        c = rem.terms[e]
        out[lam] = c
        rem = rem - orbit_sum(rs, lam).scale(c)
    return out


def inner_k(rs: RootSystemData, f: LaurentPoly, g: LaurentPoly) -> Scalar:
    """(1/|W|) [f g-bar Delta_k]_0."""
    delta = weight_functions(rs)['Delta']
    return ct_product(f * g.bar(), delta) / rs.weyl_order


def inner_cherednik(rs: RootSystemData, f: LaurentPoly, g: LaurentPoly) -> Scalar:
    """[f (g-bar)^iota mu_k]_0."""
    mu = weight_functions(rs)['mu']
    return ct_product(f * g.bar().iota(), mu)


def d_k_sum(rs: RootSystemData) -> Scalar:
    tot = ZERO
    for w in rs.weyl_group():
        tot += rs.q(-2 * sum(rs.k_of(c) for c in rs.inversion_set(w)))
    return rs.q(rs.sum_k) * tot


def d_k_product(rs: RootSystemData) -> Scalar:
    out = ONE
    for c in rs.positive_roots:
        a = rs.pair_weight_coroot(rs.rho_k2, c)
        k = rs.k_of(c)
        out *= (rs.q(a + k) - rs.q(-a - k)) / (rs.q(a) - rs.q(-a))
    return out


def d_k(rs: RootSystemData) -> Scalar:
    """d_k by the Weyl-group sum, cross-checked against the product whenever every k_alpha >= 1."""
    s = d_k_sum(rs)
    if min(rs.k_long, rs.k_short) >= 1:
        p = d_k_product(rs)
        if s != p:
            raise ConsistencyError(f'{rs.label} {rs.k_label}: d_k routes disagree')
    return s


# -- Macdonald polynomials -------------------------------------------------------

@dataclass
class MacdonaldPoly:
    rs: RootSystemData = field(repr=False)
    lam: Dominant
    coeffs: Dict[Dominant, Scalar]
    method: str = 'gram'

    @property
    def k(self) -> Tuple[int, int]:
        return (self.rs.k_long, self.rs.k_short)

    def to_laurent(self) -> LaurentPoly:
        out = LaurentPoly.zero(self.rs.rank)
        for mu in sorted(self.coeffs):
            out = out + orbit_sum(self.rs, mu).scale(self.coeffs[mu])
        return out

    def is_iota_stable(self) -> bool:
        return all(scalar_iota(c) == c for c in self.coeffs.values())

    def same_as(self, other: 'MacdonaldPoly') -> bool:
        return self.lam == other.lam and self.coeffs == other.coeffs

    def records(self) -> List[Dict]:
        return [{'mu': list(mu), 'coeff': render_scalar(self.coeffs[mu])} for mu in sorted(self.coeffs, reverse=True)]


def _solve(rows: List[List[Scalar]], rhs: List[Scalar]) -> List[Scalar]:
    """Exact solution of rows x = rhs; rows may be stacked (overdetermined but consistent)."""
    m = len(rows[0]) if rows else 0
    if m == 0:
        return []
    K = QFIELD.to_domain()
    aug = DomainMatrix([list(r) + [b] for r, b in zip(rows, rhs)], (len(rows), m + 1), K)
    red, pivots = aug.rref()
    if len(pivots) < m or m in pivots:
        raise SingularSystem(f'{len(pivots)} pivots for {m} unknowns')
    red = red.to_list()
    x = [ZERO] * m
    for i, j in enumerate(pivots):
        x[j] = red[i][m] / red[i][j]
    return x


@lru_cache(maxsize=None)
def macdonald_gram(rs: RootSystemData, lam: Dominant) -> MacdonaldPoly:
    """P_lam = m_lam + sum x_nu m_nu with <P_lam, m_kappa>_k = 0 for every kappa < lam."""
    lam = tuple(int(x) for x in lam)
    below = rs.dominant_weights_below(lam)
    lower = below[1:]
    if not lower:
        return MacdonaldPoly(rs, lam, {lam: ONE}, 'gram')
    m = {mu: orbit_sum(rs, mu) for mu in below}
    rows = [[inner_k(rs, m[nu], m[kappa]) for nu in lower] for kappa in lower]
    rhs = [-inner_k(rs, m[lam], m[kappa]) for kappa in lower]
    x = _solve(rows, rhs)
    coeffs = {lam: ONE}
    coeffs.update({nu: c for nu, c in zip(lower, x) if c})
    logger.debug(f'{rs.label} {rs.k_label}: Gram system of size {len(lower)} for {list(lam)}')
    return MacdonaldPoly(rs, lam, coeffs, 'gram')


def operator_candidates(rs: RootSystemData) -> List[Dict[Tuple[int, ...], int]]:
    """Orbit sums of the fundamental coweights, then the orbit of rho^vee."""
    rep = daha(rs)
    out = []
    for r in range(rs.rank):
        out.append(rep.orbit_operator(tuple(1 if j == r else 0 for j in range(rs.rank))))
    out.append(rep.orbit_operator(rs.rho_vee))
    return out


def operator_matrix(rs: RootSystemData, fy, basis: Sequence[Dominant]) -> List[List[Scalar]]:
    """Columns: f(Y) m_mu expanded in the basis; entries outside it are an error."""
    rep = daha(rs)
    index = {mu: j for j, mu in enumerate(basis)}
    mat = [[ZERO] * len(basis) for _ in basis]
    for j, mu in enumerate(basis):
        img = expand_in_orbit_sums(rs, rep.apply_fY(fy, orbit_sum(rs, mu)))
        for nu, c in img.items():
            if nu not in index:
                raise ConsistencyError(f'f(Y) m_{list(mu)} leaves the span below {list(basis[0])}')
            mat[index[nu]][j] = c
    return mat


def _eigen_rows(mat, c_lam) -> Tuple[List[List[Scalar]], List[Scalar]]:
    n = len(mat)
    rows = [[mat[i][j] - (c_lam if i == j else ZERO) for j in range(1, n)] for i in range(1, n)]
    rhs = [-mat[i][0] for i in range(1, n)]
    return rows, rhs


@lru_cache(maxsize=None)
def macdonald_eigen(rs: RootSystemData, lam: Dominant) -> MacdonaldPoly:
    """Unitriangular eigenvector of f(Y) on span{m_mu : mu <= lam}."""
    lam = tuple(int(x) for x in lam)
    below = rs.dominant_weights_below(lam)
    if len(below) == 1:
        return MacdonaldPoly(rs, lam, {lam: ONE}, 'eigen')
    rep = daha(rs)
    cands = operator_candidates(rs)
    eig = [[rep.eigenvalue(fy, mu) for mu in below] for fy in cands]
    chosen = next((j for j, ev in enumerate(eig) if all(v != ev[0] for v in ev[1:])), None)
    if chosen is not None:
        rows, rhs = _eigen_rows(operator_matrix(rs, cands[chosen], below), eig[chosen][0])
    else:
        pair = next(((a, b) for a, b in combinations(range(len(cands)), 2)
                     if all((eig[a][i], eig[b][i]) != (eig[a][0], eig[b][0]) for i in range(1, len(below)))), None)
        if pair is None:
            raise SingularSystem(f'{rs.label} {rs.k_label}: no operator separates {list(lam)}')
        logger.warning(f'{rs.label} {rs.k_label}: stacking two operators for {list(lam)}')
        rows, rhs = [], []
        for j in pair:
            r, b = _eigen_rows(operator_matrix(rs, cands[j], below), eig[j][0])
            rows += r
            rhs += b
    x = _solve(rows, rhs)
    coeffs = {lam: ONE}
    coeffs.update({nu: c for nu, c in zip(below[1:], x) if c})
    return MacdonaldPoly(rs, lam, coeffs, 'eigen')


def macdonald(rs: RootSystemData, lam: Sequence[int], method: str = 'gram') -> MacdonaldPoly:
    lam = tuple(int(x) for x in lam)
    if method == 'gram':
        return macdonald_gram(rs, lam)
    if method == 'eigen':
        return macdonald_eigen(rs, lam)
    if method == 'both':
        a, b = macdonald_gram(rs, lam), macdonald_eigen(rs, lam)
        if not a.same_as(b):
            raise ConsistencyError(f'{rs.label} {rs.k_label}: Gram and eigen methods disagree on {list(lam)}')
        return MacdonaldPoly(rs, lam, a.coeffs, 'both')
    raise ValueError(f'unknown method {method!r}')


# -- Macdonald operators D_pi ----------------------------------------------------

def macdonald_operator(rs: RootSystemData, r: int, f: LaurentPoly) -> LaurentPoly:
    """
    D_pi(f) = sum_w w( prod_{(pi,alpha)=1} (1 - t_alpha^2 X^alpha)/(1 - X^alpha) tau(pi) f )
    for the minuscule coweight pi = b_r, evaluated over the Weyl denominator.
    """
    if r not in rs.minuscule_coweights():
        raise ValueError(f'b_{r + 1} is not minuscule in {rs.label}')
    n = rs.rank
    pi = tuple(1 if j == r else 0 for j in range(n))
    one = LaurentPoly.constant(ONE, n)
    num = translate(rs, pi, f)
    for c in rs.positive_roots:
        a = rs.root_weight(c)
        half = tuple(x // 2 for x in a)
        mhalf = tuple(-x for x in half)
        if rs.pair_coweight_root(pi, c) == 1:
            # 1/(1 - X^a) = -X^{-a/2} / (X^{a/2} - X^{-a/2})
            num = num * (one - LaurentPoly.monomial(a, rs.q(2 * rs.k_of(c))))
            num = num.shift(mhalf, -ONE)
        else:
            num = num * (LaurentPoly.monomial(half) - LaurentPoly.monomial(mhalf))
    alt = LaurentPoly.zero(n)
    for w in rs.weyl_group():
        alt = alt + w_action(rs, w, num).scale(w.sign)
    return exact_div(rs, alt, weight_functions(rs)['delta'])


def operator_diagonal(rs: RootSystemData, r: int, lam: Sequence[int]) -> Scalar:
    """q^{2(pi, rho_k)} sum_w q^{2(pi, w(lam + rho_k))}."""
    pi = tuple(1 if j == r else 0 for j in range(rs.rank))
    e = tuple(2 * int(x) + y for x, y in zip(lam, rs.rho_k2))
    tot = ZERO
    for w in rs.weyl_group():
        tot += U ** rs.q_exponent(pi, w.weight(e))
    return U ** rs.q_exponent(pi, rs.rho_k2) * tot


# -- norm formula and constant-term identities ------------------------------------

def norm_formula_rhs(rs: RootSystemData, lam: Sequence[int]) -> Scalar:
    e = tuple(2 * int(x) + y for x, y in zip(lam, rs.rho_k2))
    out = ONE
    for c in rs.positive_roots:
        a = rs.pair_weight_coroot(e, c)
        for i in range(1, rs.k_of(c)):
            out *= (1 - rs.q(2 * a + 2 * i)) / (1 - rs.q(2 * a - 2 * i))
    return out


def norm_bracket_form(rs: RootSystemData, lam: Sequence[int]) -> Scalar:
    """The same product written with [n] = (q^n - q^-n)/(q - q^-1)."""
    e = tuple(2 * int(x) + y for x, y in zip(lam, rs.rho_k2))
    out = rs.q(rs.sum_k_km1)
    for c in rs.positive_roots:
        a = rs.pair_weight_coroot(e, c)
        for i in range(1, rs.k_of(c)):
            out *= _qbr(rs, a + i) / _qbr(rs, a - i)
    return out


def _qbr(rs: RootSystemData, x) -> Scalar:
    return (rs.q(x) - rs.q(-x)) / (rs.q(1) - rs.q(-1))


def q_factorial(n: int, D: int) -> Scalar:
    out = ONE
    for i in range(1, n + 1):
        out *= qbracket(i, D)
    return out


def q_binomial(a: int, b: int, D: int) -> Scalar:
    return q_factorial(a, D) / (q_factorial(b, D) * q_factorial(a - b, D))


def ct_identity_check(rs: RootSystemData) -> List[CheckResult]:
    """(1/|W|)[Delta_k]_0 against its product, and the q-binomial form up to a monomial."""
    n = rs.rank
    results = []
    lhs = weight_functions(rs)['Delta'].constant_term() / rs.weyl_order
    results.append(equality('constant term', lhs, norm_bracket_form(rs, (0,) * n)))
    if rs.equal_k:
        k = rs.k_long
        one = LaurentPoly.constant(ONE, n)
        prod = one
        for c in rs.positive_roots:
            a = rs.root_weight(c)
            ma = tuple(-x for x in a)
            for i in range(k):
                prod = prod * (one - LaurentPoly.monomial(a, rs.q(2 * i)))
                prod = prod * (one - LaurentPoly.monomial(ma, rs.q(2 * i + 2)))
        bracket = prod.constant_term()
        rhs = ONE
        for d in rs.degrees:
            rhs *= q_binomial(k * d, k, rs.q_denominator)
        ratio = bracket / rhs
        results.append(CheckResult('q-binomial form', bracket, rhs, is_monomial(ratio), ratio))
        if rs.kind == 'A':
            results.append(type_a_check(rs.rank + 1, k, rs.q_denominator))
    return results


def type_a_check(n: int, k: int, D: int) -> CheckResult:
    """[prod_{i<j} prod_l (1 - q^{2l} x_i/x_j)(1 - q^{2l+2} x_j/x_i)]_0 against [nk]!/[k]!^n, in x-variables."""
    R, q, *xs = poly_ring(['q'] + [f'x{i}' for i in range(1, n + 1)], ZZ)
    # x_i x_j clears (1 - c x_i/x_j)(1 - d x_j/x_i)
    prod = R.one
    for i, j in combinations(range(n), 2):
        for l in range(k):
            prod *= (xs[j] - q ** (2 * l) * xs[i]) * (xs[i] - q ** (2 * l + 2) * xs[j])
    target = tuple([k * (n - 1)] * n)
    bracket = ZERO
    for mono, c in prod.terms():
        if tuple(mono[1:]) == target:
            bracket += int(c) * U ** (D * mono[0])
    rhs = q_factorial(n * k, D) / q_factorial(k, D) ** n
    ratio = bracket / rhs
    return CheckResult(f'type A_{n - 1} x-variable form', bracket, rhs, is_monomial(ratio), ratio)


def weyl_character(rs: RootSystemData, lam: Sequence[int]) -> LaurentPoly:
    e = tuple(2 * int(x) + 2 for x in lam)
    alt = LaurentPoly.zero(rs.rank)
    for w in rs.weyl_group():
        alt = alt + LaurentPoly.monomial(w.weight(e), w.sign)
    return exact_div(rs, alt, weight_functions(rs)['delta'])


def cherednik_norm_check(rs: RootSystemData, p: MacdonaldPoly) -> CheckResult:
    """<P,P>' = (-1)^{sum k} q^{-sum k(k-1)} d_k <P, P^iota>_k."""
    f = p.to_laurent()
    lhs = inner_cherednik(rs, f, f)
    rhs = (-1) ** rs.sum_k * rs.q(-rs.sum_k_km1) * d_k(rs) * inner_k(rs, f, f.iota())
    return equality(f'Cherednik norm {list(p.lam)}', lhs, rhs)


def norm_check(rs: RootSystemData, p: MacdonaldPoly) -> CheckResult:
    f = p.to_laurent()
    return equality(f'norm {list(p.lam)}', inner_k(rs, f, f), norm_formula_rhs(rs, p.lam))


def dominant_weights_of_height(rs: RootSystemData, maxheight: int) -> List[Dominant]:
    """Dominant lam with sum of fundamental-weight coordinates <= maxheight."""
    out = [tuple(c) for c in product(range(maxheight + 1), repeat=rs.rank) if sum(c) <= maxheight]
    return sorted(out, key=lambda c: (sum(c), c))


def proportionality(rs: RootSystemData, r: int, inputs: Sequence[LaurentPoly]) -> Tuple[Optional[Scalar], bool]:
    """c with sum_w Y^{w(pi)} f = c D_pi f for every input, if one constant works."""
    rep = daha(rs)
    fy = rep.weyl_sum_operator(tuple(1 if j == r else 0 for j in range(rs.rank)))
    c = None
    ok = True
    for f in inputs:
        lhs = rep.apply_fY(fy, f)
        rhs = macdonald_operator(rs, r, f)
        if rhs.is_zero():
            ok = ok and lhs.is_zero()
            continue
        e = max(rhs.terms)
        ratio = lhs.coeff(e) / rhs.terms[e]
        if c is None:
            c = ratio
        ok = ok and c == ratio and lhs == rhs.scale(c)
    return c, ok


def expected_proportionality(rs: RootSystemData, r: int) -> Scalar:
    """prod over alpha > 0 with (pi, alpha) = 1 of t_alpha^-1."""
    out = ONE
    for c in rs.positive_roots:
        if c[r] == 1:
            out /= rs.t(c)
    return out
