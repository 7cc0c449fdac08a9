"""
Rational Dunkl operators for S_n acting on Q(k, h)[x_1, ..., x_n].

Indices follow the usual notation and start at 1: b_12, D_1, s^_1.

    b_ij f = (s_ij f - f) / (x_i - x_j)
    D_i    = d/dx_i - k sum_{j != i} b_ij
    s^_i   = s_{i,i+1} + h b_{i,i+1}
"""

import logging
from itertools import combinations, product
from typing import Callable, Dict, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.fields import field
from sympy.polys.rings import PolyElement, ring

logger = logging.getLogger('maclab.dunkl')

RatPoly = PolyElement


class DunklContext:
    """Polynomial ring, parameters k and h, and the operators for fixed n."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError('Dunkl operators need n >= 2')
        self.n = n
        self.KH, self.k, self.h = field('k,h', QQ)
        self.R, *self.x = ring([f'x{i}' for i in range(1, n + 1)], self.KH.to_domain())

    # -- building blocks ------------------------------------------------------

    def monomial(self, exps: Sequence[int]) -> RatPoly:
        return self.R({tuple(int(e) for e in exps): self.KH.one})

    def _idx(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f'index {i} outside 1..{self.n}')
        return i - 1

    def apply_s(self, i: int, j: int, f: RatPoly) -> RatPoly:
        a, b = self._idx(i), self._idx(j)
        out = {}
        for m, c in f.terms():
            m = list(m)
            m[a], m[b] = m[b], m[a]
            out[tuple(m)] = c
        return self.R(out)

    def apply_b(self, i: int, j: int, f: RatPoly) -> RatPoly:
        """Divided difference (s_ij f - f)/(x_i - x_j), one monomial at a time."""
        if i == j:
            raise ValueError('b_ij needs i != j')
        a, b = self._idx(i), self._idx(j)
        out: Dict[Tuple[int, ...], object] = {}
        for m, c in f.terms():
            p, r = m[a], m[b]
            if p == r:
                continue
            lo, span, sign = min(p, r), abs(p - r), (-1 if p > r else 1)
            for s in range(span):
                e = list(m)
                e[a], e[b] = lo + s, lo + span - 1 - s
                e = tuple(e)
                out[e] = out.get(e, self.KH.zero) + sign * c
        return self.R({e: c for e, c in out.items() if c})

    def partial(self, i: int, f: RatPoly) -> RatPoly:
        return f.diff(self.x[self._idx(i)])

    def apply_D(self, i: int, f: RatPoly) -> RatPoly:
        out = self.partial(i, f)
        for j in range(1, self.n + 1):
            if j != i:
                out = out - self.apply_b(i, j, f).mul_ground(self.k)
        return out

    def apply_shat(self, i: int, f: RatPoly) -> RatPoly:
        if not 1 <= i < self.n:
            raise IndexError(f's^_{i} needs 1 <= i <= {self.n - 1}')
        return self.apply_s(i, i + 1, f) + self.apply_b(i, i + 1, f).mul_ground(self.h)

    def sum_squares(self, f: RatPoly) -> RatPoly:
        out = self.R.zero
        for i in range(1, self.n + 1):
            out = out + self.apply_D(i, self.apply_D(i, f))
        return out

    def m2_rat(self, f: RatPoly, coefficient) -> RatPoly:
        """sum d_i^2 f + coefficient * sum_{i<j} (d_i - d_j) f / (x_i - x_j)."""
        out = self.R.zero
        for i in range(1, self.n + 1):
            out = out + self.partial(i, self.partial(i, f))
        for i, j in combinations(range(1, self.n + 1), 2):
            g = self.partial(i, f) - self.partial(j, f)
            out = out + g.exquo(self.x[i - 1] - self.x[j - 1]).mul_ground(coefficient)
        return out

    def is_symmetric(self, f: RatPoly) -> bool:
        return all(self.apply_s(i, i + 1, f) == f for i in range(1, self.n))

    # -- test inputs ------------------------------------------------------------

    def monomials(self, degree: int) -> List[RatPoly]:
        return [self.monomial(e) for e in product(range(degree + 1), repeat=self.n) if sum(e) <= degree]

    def elementary(self, r: int) -> RatPoly:
        out = self.R.zero
        for idx in combinations(range(self.n), r):
            e = [0] * self.n
            for a in idx:
                e[a] = 1
            out = out + self.monomial(e)
        return out

    def symmetric_basis(self, degree: int) -> List[RatPoly]:
        """Products of elementary symmetric polynomials of total degree <= degree."""
        out = [self.R.one]
        for total in range(1, degree + 1):
            for parts in _partitions(total, self.n):
                p = self.R.one
                for r in parts:
                    p = p * self.elementary(r)
                out.append(p)
        seen, uniq = set(), []
        for p in out:
            key = tuple(sorted(p.terms()))
            if key not in seen:
                seen.add(key)
                uniq.append(p)
        return uniq


# -- relation checks ------------------------------------------------------------

def _partitions(total: int, largest: int):
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def _all(tests: Sequence[RatPoly], pred: Callable[[RatPoly], bool]) -> bool:
    return all(pred(f) for f in tests)


def check_commuting(ctx: DunklContext, tests: Sequence[RatPoly]) -> List[Tuple[str, bool]]:
    out = []
    for i, j in combinations(range(1, ctx.n + 1), 2):
        ok = _all(tests, lambda f: ctx.apply_D(i, ctx.apply_D(j, f)) == ctx.apply_D(j, ctx.apply_D(i, f)))
        out.append((f'[D_{i}, D_{j}] = 0', ok))
    return out


def check_equivariance(ctx: DunklContext, tests: Sequence[RatPoly]) -> List[Tuple[str, bool]]:
    """s_ab D_i s_ab = D_{s_ab(i)}."""
    out = []
    for a, b in combinations(range(1, ctx.n + 1), 2):
        for i in range(1, ctx.n + 1):
            wi = b if i == a else a if i == b else i
            ok = _all(tests, lambda f: ctx.apply_s(a, b, ctx.apply_D(i, ctx.apply_s(a, b, f))) == ctx.apply_D(wi, f))
            out.append((f's_{a}{b} D_{i} s_{a}{b} = D_{wi}', ok))
    return out


def check_yang_baxter(ctx: DunklContext, tests: Sequence[RatPoly]) -> List[Tuple[str, bool]]:
    out = []
    for i, j, l in combinations(range(1, ctx.n + 1), 3):
        def comm(p, q, f):
            return ctx.apply_b(*p, ctx.apply_b(*q, f)) - ctx.apply_b(*q, ctx.apply_b(*p, f))
        ok = _all(tests, lambda f: (comm((i, j), (i, l), f) + comm((i, j), (j, l), f)
                                + comm((i, l), (j, l), f)).is_zero)
        out.append((f'Yang-Baxter for b on {i},{j},{l}', ok))
    return out


def check_b_symmetric(ctx: DunklContext, sym: Sequence[RatPoly]) -> List[Tuple[str, bool]]:
    ok = all(ctx.apply_b(i, j, f).is_zero for f in sym for i, j in combinations(range(1, ctx.n + 1), 2))
    return [('b_ij kills symmetric polynomials', ok)]


def check_degenerate_hecke(ctx: DunklContext, tests: Sequence[RatPoly]) -> List[Tuple[str, bool]]:
    """x_{i+1} s^_i - s^_i x_i = s^_i x_{i+1} - x_i s^_i = h, s^_i^2 = 1 and the braid relation."""
    out = []
    h = ctx.h
    for i in range(1, ctx.n):
        xi, xj = ctx.x[i - 1], ctx.x[i]
        ok1 = _all(tests, lambda f: xj * ctx.apply_shat(i, f) - ctx.apply_shat(i, xi * f) == f.mul_ground(h))
        ok2 = _all(tests, lambda f: ctx.apply_shat(i, xj * f) - xi * ctx.apply_shat(i, f) == f.mul_ground(h))
        ok3 = _all(tests, lambda f: ctx.apply_shat(i, ctx.apply_shat(i, f)) == f)
        out += [(f'x_{i + 1} s^_{i} - s^_{i} x_{i} = h', ok1), (f's^_{i} x_{i + 1} - x_{i} s^_{i} = h', ok2),
                (f's^_{i}^2 = 1', ok3)]
    for i in range(1, ctx.n - 1):
        j = i + 1

        def word(seq, f):
            for a in reversed(seq):
                f = ctx.apply_shat(a, f)
            return f
        ok = _all(tests, lambda f: word((i, j, i), f) == word((j, i, j), f))
        out.append((f's^_{i} s^_{j} s^_{i} = s^_{j} s^_{i} s^_{j}', ok))
    out.append(('s^_i 1 = 1', all(ctx.apply_shat(i, ctx.R.one) == ctx.R.one for i in range(1, ctx.n))))
    return out


def resolve_normalization(ctx: DunklContext, sym: Sequence[RatPoly]) -> Tuple[object, bool]:
    """Find the coefficient c with sum D_i^2 = M_2 (coefficient c) on the symmetric inputs."""
    k = ctx.k
    for c in (2 * k, -k, k, -2 * k):
        if all(ctx.sum_squares(f) == ctx.m2_rat(f, c) for f in sym):
            logger.info(f'sum D_i^2 matches M_2 with coefficient {c.as_expr()}')
            return c, True
    return None, False


def res_sum_squares(ctx: DunklContext, sym: Sequence[RatPoly]) -> List[Tuple[str, bool]]:
    coefficient, ok = resolve_normalization(ctx, sym)
    label = coefficient.as_expr() if coefficient is not None else 'none'
    preserved = all(ctx.is_symmetric(ctx.sum_squares(f)) for f in sym)
    return [(f'sum D_i^2 = M_2 with coefficient {label}', ok),
            ('sum D_i^2 preserves symmetric polynomials', preserved)]


def run_all(n: int, degree: int) -> List[Tuple[str, bool]]:
    ctx = DunklContext(n)
    tests = ctx.monomials(degree)
    sym = ctx.symmetric_basis(degree)
    logger.info(f'Dunkl suite n={n} degree={degree}: {len(tests)} monomials, {len(sym)} symmetric inputs')
    out = []
    out += check_commuting(ctx, tests)
    out += check_equivariance(ctx, tests)
    if n >= 3:
        out += check_yang_baxter(ctx, tests)
    out += check_b_symmetric(ctx, sym)
    out += check_degenerate_hecke(ctx, tests)
    out += res_sum_squares(ctx, sym)
    return out
