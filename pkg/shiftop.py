"""
Shift operators G = X^-1 Y and G^ = Y^ X for equal parameters k, where

    X  = phi_{-k}        = prod (q^-k X^{a/2} - q^k X^{-a/2})
    Y  = phi^v_{-k}(Y)   = prod (q^-k Y^{a^v/2} - q^k Y^{-a^v/2})
    Y^ = phi^v_k(Y)      = prod (q^k Y^{a^v/2} - q^-k Y^{-a^v/2})

and the ladder k -> k+1 they induce on norms of Macdonald polynomials.
"""

import logging
from functools import lru_cache
from itertools import product
from typing import Dict, List, Sequence, Tuple

from dahaop import daha
from macpoly import (CheckResult, d_k, equality, inner_cherednik, inner_k, macdonald_gram,
                     norm_formula_rhs)
from ring import ONE, ZERO, LaurentPoly, Scalar, U, exact_div, weight_functions
from rootsys import CapExceeded, RootSystemData

logger = logging.getLogger('maclab.shiftop')

Coweight = Tuple[int, ...]


class ShiftContext:
    """Cached pieces of the shift operators for one root system at parameter k."""

    def __init__(self, rs: RootSystemData):
        if not rs.equal_k:
            raise ValueError(f'{rs.label} {rs.k_label}: shift operators need equal k')
        n_pos = len(rs.positive_roots)
        if n_pos > rs.caps['max_positive_roots']:
            raise CapExceeded(f'{rs.label}: {n_pos} positive roots exceed max_positive_roots')
        self.rs = rs
        self.k = rs.k_long
        self.rep = daha(rs)
        self.phi_neg = weight_functions(rs)['phi_neg']
        self.upper = self._expand(-self.k)
        self.upper_hat = self._expand(self.k)

    def _expand(self, s: int) -> List[Tuple[Coweight, Scalar]]:
        """prod (q^s Y^{a^v/2} - q^-s Y^{-a^v/2}) over subsets E: Y^{rho^v - sum_{not E} a^v}."""
        rs = self.rs
        coroots = [rs.coroot(c) for c in rs.positive_roots]
        acc: Dict[Coweight, Scalar] = {}
        for choice in product((True, False), repeat=len(coroots)):
            mu = list(rs.rho_vee)
            c = ONE
            for keep, av in zip(choice, coroots):
                if keep:
                    c *= rs.q(s)
                else:
                    c *= -rs.q(-s)
                    mu = [x - y for x, y in zip(mu, av)]
            mu = tuple(mu)
            acc[mu] = acc.get(mu, ZERO) + c
        return [(mu, acc[mu]) for mu in sorted(acc) if acc[mu]]

    def evaluate(self, which: str, nu2: Sequence[int]) -> Scalar:
        """The expansion with Y^mu -> q^{2(mu, nu)}, nu given by doubled weight coordinates."""
        terms = self.upper if which == 'upper' else self.upper_hat
        return sum((c * U ** self.rs.q_exponent(mu, nu2) for mu, c in terms), ZERO)

    def apply_upper(self, f: LaurentPoly) -> LaurentPoly:
        return self.rep.apply_Y_combination(self.upper, f)

    def apply_upper_hat(self, f: LaurentPoly) -> LaurentPoly:
        return self.rep.apply_Y_combination(self.upper_hat, f)

    def apply_X(self, f: LaurentPoly) -> LaurentPoly:
        return self.phi_neg * f

    def apply_G(self, f: LaurentPoly) -> LaurentPoly:
        return exact_div(self.rs, self.apply_upper(f), self.phi_neg)

    def apply_Ghat(self, f: LaurentPoly) -> LaurentPoly:
        return self.apply_upper_hat(self.apply_X(f))


@lru_cache(maxsize=None)
def shift_context(rs: RootSystemData) -> ShiftContext:
    return ShiftContext(rs)


def _pairings(rs: RootSystemData, lam: Sequence[int], mult: int) -> List:
    """(alpha^v, lam + mult rho) for every positive root."""
    e = tuple(2 * int(x) + 2 * mult for x in lam)
    return [rs.pair_weight_coroot(e, c) for c in rs.positive_roots]


def c_k(rs: RootSystemData, lam: Sequence[int]) -> Scalar:
    k = rs.k_long
    out = ONE
    for a in _pairings(rs, lam, k + 1):
        out *= rs.q(-k + a) - rs.q(k - a)
    return out


def chat_k(rs: RootSystemData, lam: Sequence[int]) -> Scalar:
    k = rs.k_long
    out = ONE
    for a in _pairings(rs, lam, k + 1):
        out *= rs.q(k + a) - rs.q(-k - a)
    return out


def ladder_factor(rs: RootSystemData, lam: Sequence[int], k: int) -> Scalar:
    """M_{k+1}(lam) / M_k(lam + rho)."""
    out = ONE
    for a in _pairings(rs, lam, k + 1):
        out *= (1 - rs.q(2 * a + 2 * k)) / (1 - rs.q(2 * a - 2 * k))
    return out


def ladder(rs: RootSystemData, lam: Sequence[int], k: int) -> Scalar:
    """M_k(lam) from M_1 = 1 by repeated shifts."""
    if k < 1:
        raise ValueError('ladder starts at k = 1')
    if k == 1:
        return ONE
    lam = tuple(int(x) for x in lam)
    return ladder_factor(rs, lam, k - 1) * ladder(rs, tuple(x + 1 for x in lam), k - 1)


def _shift_rho(lam: Sequence[int]) -> Tuple[int, ...]:
    return tuple(int(x) + 1 for x in lam)


def verify_shift(rs: RootSystemData, lam: Sequence[int]) -> List[CheckResult]:
    """G P^(k)_{lam+rho} = q^{k|R+|} c_k(lam) P^(k+1)_lam and G^ P^(k+1)_lam = q^{-k|R+|} c^_k(lam) P^(k)_{lam+rho}."""
    ctx = shift_context(rs)
    k, npos = ctx.k, len(rs.positive_roots)
    up = rs.with_k(k + 1)
    lam = tuple(int(x) for x in lam)
    p_k = macdonald_gram(rs, _shift_rho(lam)).to_laurent()
    p_up = macdonald_gram(up, lam).to_laurent()
    out = []
    g = ctx.apply_G(p_k)
    expected = p_up.scale(rs.q(k * npos) * c_k(rs, lam))
    top = tuple(2 * x for x in lam)
    out.append(CheckResult(f'G P_{list(_shift_rho(lam))}', g.coeff(top), expected.coeff(top), g == expected))
    gh = ctx.apply_Ghat(p_up)
    expected = p_k.scale(rs.q(-k * npos) * chat_k(rs, lam))
    top = tuple(2 * x for x in _shift_rho(lam))
    out.append(CheckResult(f'G^ P_{list(lam)}', gh.coeff(top), expected.coeff(top), gh == expected))
    return out


def verify_vanishing(rs: RootSystemData, lam: Sequence[int]) -> CheckResult:
    """G P^(k)_lam = 0 when lam - rho is not dominant."""
    lam = tuple(int(x) for x in lam)
    if all(x >= 1 for x in lam):
        raise ValueError(f'{list(lam)} - rho is dominant')
    g = shift_context(rs).apply_G(macdonald_gram(rs, lam).to_laurent())
    return CheckResult(f'G P_{list(lam)} = 0', ZERO, ZERO, g.is_zero())


def verify_preservation(rs: RootSystemData, f: LaurentPoly) -> List[CheckResult]:
    """G f and G^ f are symmetric; X f is killed by every T_i + t^-1."""
    ctx = shift_context(rs)
    rep = ctx.rep
    xf = ctx.apply_X(f)
    t = rep.t[1]
    anti = all((rep.apply_T(i, xf) + xf.scale(1 / t)).is_zero() for i in range(1, rs.rank + 1))
    return [
        CheckResult('G f symmetric', ONE, ONE, rep.is_invariant(ctx.apply_G(f))),
        CheckResult('G^ f symmetric', ONE, ONE, rep.is_invariant(ctx.apply_Ghat(f))),
        CheckResult('X f anti-invariant', ONE, ONE, anti),
    ]


def verify_adjoint(rs: RootSystemData, f: LaurentPoly, g: LaurentPoly) -> CheckResult:
    """<G f, g>'_{k+1} = d_{k+1}/d_k <f, G^ g>'_k."""
    ctx = shift_context(rs)
    up = rs.with_k(ctx.k + 1)
    lhs = inner_cherednik(up, ctx.apply_G(f), g)
    rhs = d_k(up) / d_k(rs) * inner_cherednik(rs, f, ctx.apply_Ghat(g))
    return equality('shift adjointness', lhs, rhs)


def verify_norm_recursion(rs: RootSystemData, lam: Sequence[int]) -> List[CheckResult]:
    """Both sides of the k -> k+1 recursions for M'_k and M_k, from directly computed polynomials."""
    k = rs.k_long
    npos = len(rs.positive_roots)
    up = rs.with_k(k + 1)
    lam = tuple(int(x) for x in lam)
    lam_rho = _shift_rho(lam)
    p_up = macdonald_gram(up, lam).to_laurent()
    p_k = macdonald_gram(rs, lam_rho).to_laurent()
    mp_up = inner_cherednik(up, p_up, p_up)
    mp_k = inner_cherednik(rs, p_k, p_k)
    rhs = (-1) ** npos * d_k(up) / d_k(rs) * chat_k(rs, lam) / c_k(rs, lam) * mp_k
    m_up = inner_k(up, p_up, p_up)
    m_k = inner_k(rs, p_k, p_k)
    return [
        equality(f"M' recursion {list(lam)}", mp_up, rhs),
        equality(f'M recursion {list(lam)}', m_up, ladder_factor(rs, lam, k) * m_k),
    ]


def verify_ladder(rs: RootSystemData, lam: Sequence[int]) -> List[CheckResult]:
    """M_k(lam) from the ladder against the norm formula and the direct inner product."""
    k = rs.k_long
    m = ladder(rs, lam, k)
    p = macdonald_gram(rs, tuple(int(x) for x in lam)).to_laurent()
    return [
        equality(f'ladder vs norm formula {list(lam)}', m, norm_formula_rhs(rs, lam)),
        equality(f'ladder vs inner product {list(lam)}', m, inner_k(rs, p, p)),
    ]


def verify_antisymmetrizer_bridge(rs: RootSystemData, f: LaurentPoly) -> List[CheckResult]:
    """P_-(Y - Y^) f = 0 and the q-antisymmetrizer of (Y - Y^) f vanishes."""
    ctx = shift_context(rs)
    diff = ctx.apply_upper(f) - ctx.apply_upper_hat(f)
    classical = ctx.rep.antisymmetrize(diff)
    quantum = ctx.rep.q_antisymmetrize(diff)
    return [
        CheckResult('P_-(Y - Y^) f = 0', ZERO, ZERO, classical.is_zero()),
        CheckResult('P^q_-(Y - Y^) f = 0', ZERO, ZERO, quantum.is_zero()),
    ]


def verify_expansion(rs: RootSystemData, nu2: Sequence[int]) -> List[CheckResult]:
    """The subset expansions evaluated at q^{2(., nu)} reproduce their products."""
    ctx = shift_context(rs)
    out = []
    for which, s in (('upper', -ctx.k), ('upper_hat', ctx.k)):
        prod = ONE
        for c in rs.positive_roots:
            a = rs.pair_weight_coroot(nu2, c)
            prod *= rs.q(s + a) - rs.q(-s - a)
        out.append(equality(f'{which} expansion', ctx.evaluate(which, nu2), prod))
    return out
