"""
Exact coefficient field Q(u) (q = u^D per root system) and the Laurent
polynomial ring C_q[X] extended by the half-weights X^{alpha/2}.

Exponents are tuples of doubled fundamental-weight coordinates.
"""

import logging
import re
from fractions import Fraction
from functools import lru_cache
from operator import add, neg, sub
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import ZZ
from sympy.polys.fields import FracElement, field

logger = logging.getLogger('maclab.ring')

QFIELD, U = field('u', ZZ)
Scalar = FracElement
ONE = QFIELD.one
ZERO = QFIELD.zero

Exponent = Tuple[int, ...]


class NotDivisible(ArithmeticError):
    pass


class QExponentError(ValueError):
    pass


def to_scalar(x) -> Scalar:
    if isinstance(x, FracElement):
        return x
    if isinstance(x, Fraction):
        return QFIELD(x.numerator) / QFIELD(x.denominator)
    return QFIELD(int(x))


def scalar_iota(s: Scalar) -> Scalar:
    """u -> 1/u, rewritten as a ratio of polynomials."""
    if not s:
        return s
    num, den = s.numer, s.denom
    a, b = num.degree(), den.degree()
    ring = QFIELD.ring
    num_rev = ring({(a - e[0],): c for e, c in num.terms()})
    den_rev = ring({(b - e[0],): c for e, c in den.terms()})
    return QFIELD.new(num_rev, den_rev) * U ** (b - a)


def _poly_text(p) -> str:
    terms = sorted(p.terms(), key=lambda t: -t[0][0])
    if not terms:
        return '0'
    out = []
    for (e,), c in terms:
        c = int(c)
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = 'u' if e == 1 else f'u**{e}'
            body = mono if mag == 1 else f'{mag}*{mono}'
        if not out:
            out.append(body if c > 0 else f'-{body}')
        else:
            out.append(f'+ {body}' if c > 0 else f'- {body}')
    return ' '.join(out)


def render_scalar(s: Scalar) -> str:
    """Canonical text: expanded numerator over expanded denominator, descending powers of u."""
    num = _poly_text(s.numer)
    if s.denom == QFIELD.ring.one:
        return num
    return f'({num})/({_poly_text(s.denom)})'


_TERM = re.compile(r'\s*([+-]?)\s*(?:(\d+)\*)?(?:(u)(?:\*\*(\d+))?|(\d+))\s*')
_RATIO = re.compile(r'\s*\((.+)\)\s*/\s*\((.+)\)\s*')


def _parse_poly(text: str):
    """Integer polynomial in u written as by _poly_text; anything else is rejected."""
    terms: Dict[Tuple[int], int] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (pos and not m.group(1)):
            raise ValueError(f'cannot parse {text!r} as a polynomial in u')
        sign, mult, var, power, const = m.groups()
        if var:
            c, e = int(mult or 1), int(power or 1)
        else:
            if mult:
                raise ValueError(f'cannot parse {text!r} as a polynomial in u')
            c, e = int(const), 0
        terms[(e,)] = terms.get((e,), 0) + (-c if sign == '-' else c)
        pos = m.end()
    if not terms:
        raise ValueError('empty polynomial')
    return QFIELD.ring.from_dict({e: ZZ(c) for e, c in terms.items() if c})


def parse_scalar(text: str) -> Scalar:
    """Inverse of render_scalar. No evaluation: only integer polynomials in u are accepted."""
    m = _RATIO.fullmatch(text)
    if m:
        den = _parse_poly(m.group(2))
        if not den:
            raise ZeroDivisionError(f'zero denominator in {text!r}')
        return QFIELD.new(_parse_poly(m.group(1)), den)
    return QFIELD.new(_parse_poly(text), QFIELD.ring.one)


def specialize_q1(s: Scalar) -> Optional[Fraction]:
    """Value at u = 1, or None where the denominator vanishes."""
    num = sum(int(c) for _, c in s.numer.terms())
    den = sum(int(c) for _, c in s.denom.terms())
    if den == 0:
        return None
    return Fraction(num, den)


def is_monomial(s: Scalar) -> bool:
    return len(s.numer.terms()) == 1 and len(s.denom.terms()) == 1


def qbracket(n: int, u_per_q: int) -> Scalar:
    """[n] = (q^n - q^-n)/(q - q^-1) with q = u^u_per_q."""
    q = U ** u_per_q
    return (q ** n - q ** (-n)) / (q - q ** (-1))


class LaurentPoly:
    """Finite map exponent -> nonzero Scalar."""

    __slots__ = ('terms', 'rank')

    def __init__(self, terms: Optional[Dict[Exponent, Scalar]] = None, rank: int = 0):
        self.terms: Dict[Exponent, Scalar] = {}
        for e, c in (terms or {}).items():
            c = to_scalar(c)
            if c:
                self.terms[tuple(e)] = c
        if self.terms:
            rank = len(next(iter(self.terms)))
        self.rank = rank

    @classmethod
    def monomial(cls, e: Sequence[int], c=ONE) -> 'LaurentPoly':
        return cls({tuple(int(x) for x in e): to_scalar(c)}, rank=len(e))

    @classmethod
    def constant(cls, c, rank: int) -> 'LaurentPoly':
        return cls({(0,) * rank: to_scalar(c)}, rank=rank)

    @classmethod
    def zero(cls, rank: int) -> 'LaurentPoly':
        return cls({}, rank=rank)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f'LaurentPoly({self.render()})'

    def render(self) -> str:
        if not self.terms:
            return '0'
        parts = []
        for e in sorted(self.terms, reverse=True):
            parts.append(f'[{render_scalar(self.terms[e])}]X{list(e)}')
        return ' + '.join(parts)

    def _coerce(self, other) -> 'LaurentPoly':
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly.constant(other, self.rank)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            other = self._coerce(other)
        return self.terms == other.terms

    def __ne__(self, other) -> bool:
        return not self == other

    __hash__ = None

    def __add__(self, other) -> 'LaurentPoly':
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly(out, rank=self.rank or other.rank)

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly({e: -c for e, c in self.terms.items()}, rank=self.rank)

    def __sub__(self, other) -> 'LaurentPoly':
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> 'LaurentPoly':
        return self._coerce(other) - self

    def scale(self, c) -> 'LaurentPoly':
        c = to_scalar(c)
        if not c:
            return LaurentPoly.zero(self.rank)
        return LaurentPoly({e: v * c for e, v in self.terms.items()}, rank=self.rank)

    def __mul__(self, other) -> 'LaurentPoly':
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        out: Dict[Exponent, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(add, e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return LaurentPoly(out, rank=self.rank or other.rank)

    def __rmul__(self, other) -> 'LaurentPoly':
        return self.scale(other)

    def __pow__(self, n: int) -> 'LaurentPoly':
        out = LaurentPoly.constant(ONE, self.rank)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, e: Sequence[int], c=ONE) -> 'LaurentPoly':
        """Multiply by c X^e."""
        c = to_scalar(c)
        return LaurentPoly({tuple(map(add, k, e)): v * c for k, v in self.terms.items()}, rank=self.rank)

    def coeff(self, e: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(e), ZERO)

    def bar(self) -> 'LaurentPoly':
        return LaurentPoly({tuple(map(neg, e)): c for e, c in self.terms.items()}, rank=self.rank)

    def iota(self) -> 'LaurentPoly':
        return LaurentPoly({e: scalar_iota(c) for e, c in self.terms.items()}, rank=self.rank)

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * self.rank, ZERO)

    def exponents(self) -> List[Exponent]:
        return sorted(self.terms)

    def in_weight_lattice(self) -> bool:
        return all(x % 2 == 0 for e in self.terms for x in e)


def bar(f: LaurentPoly) -> LaurentPoly:
    return f.bar()


def iota(f: LaurentPoly) -> LaurentPoly:
    return f.iota()


def constant_term(f: LaurentPoly) -> Scalar:
    return f.constant_term()


def ct_product(a: LaurentPoly, b: LaurentPoly) -> Scalar:
    """[a b]_0 without forming the product."""
    if len(a) > len(b):
        a, b = b, a
    tot = ZERO
    for e, c in a.terms.items():
        d = b.terms.get(tuple(map(neg, e)))
        if d is not None:
            tot += c * d
    return tot


def w_action(rs, w, f: LaurentPoly) -> LaurentPoly:
    """
    Action of a finite Weyl element or of tau(lambda) w (an extended affine
    element) on f: X^mu -> q^{2(lambda, w mu)} X^{w mu}.
    """
    finite = getattr(w, 'finite', w)
    y = getattr(w, 'translation', None)
    out = {}
    for e, c in f.terms.items():
        img = finite.weight(e)
        if y is not None and any(y):
            c = c * U ** rs.q_exponent(y, img)
        out[img] = c
    return LaurentPoly(out, rank=f.rank)


def translate(rs, y: Sequence[int], f: LaurentPoly) -> LaurentPoly:
    """tau(lambda) f for the coweight lambda with b-coordinates y."""
    return LaurentPoly({e: c * U ** rs.q_exponent(y, e) for e, c in f.terms.items()}, rank=f.rank)


def exact_div(rs, f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """
    h with g h = f. Leading terms are taken in lex order on simple-root
    coordinates; quotient exponents must stay inside the box forced by the
    Newton polytopes of f and g, otherwise NotDivisible.
    """
    if g.is_zero():
        raise ZeroDivisionError('exact_div by zero polynomial')
    if f.is_zero():
        return LaurentPoly.zero(g.rank)
    qp = rs.qp

    def key(e):
        return tuple(int(x) for x in np.asarray(e, dtype=np.int64) @ qp)

    n = g.rank
    fexp, gexp = list(f.terms), list(g.terms)
    lo = [min(e[j] for e in fexp) - min(e[j] for e in gexp) for j in range(n)]
    hi = [max(e[j] for e in fexp) - max(e[j] for e in gexp) for j in range(n)]
    if any(a > b for a, b in zip(lo, hi)):
        raise NotDivisible('Newton box of the quotient is empty')
    lead = max(gexp, key=key)
    lead_c = g.terms[lead]
    rem = dict(f.terms)
    quot: Dict[Exponent, Scalar] = {}
    while rem:
        e = max(rem, key=key)
        qe = tuple(map(sub, e, lead))
        if any(x < a or x > b for x, a, b in zip(qe, lo, hi)):
            raise NotDivisible(f'remainder term X^{list(e)} cannot be cancelled')
        c = rem[e] / lead_c
        quot[qe] = c
        for e2, c2 in g.terms.items():
            t = tuple(map(add, qe, e2))
            v = rem.get(t, ZERO) - c * c2
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return LaurentPoly(quot, rank=n)


def binomial(rs, e: Sequence[int], c1, e2: Sequence[int], c2) -> LaurentPoly:
    """c1 X^e + c2 X^e2."""
    return LaurentPoly.monomial(e, c1) + LaurentPoly.monomial(e2, c2)


def product(factors: Iterable[LaurentPoly], rank: int) -> LaurentPoly:
    out = LaurentPoly.constant(ONE, rank)
    for f in factors:
        out = out * f
    return out


@lru_cache(maxsize=None)
def weight_functions(rs) -> Dict[str, LaurentPoly]:
    """Delta_k, mu_k, delta, phi_k and phi_{-k} for the parameters carried by rs."""
    n = rs.rank
    one = LaurentPoly.constant(ONE, n)
    delta_k, mu_k, delta, phi, phi_neg = one, one, one, one, one
    for c in rs.positive_roots:
        k = rs.k_of(c)
        a = rs.root_weight(c)
        half = tuple(x // 2 for x in a)
        mhalf = tuple(-x for x in half)
        ma = tuple(-x for x in a)
        for i in range(k):
            delta_k = delta_k * (one - LaurentPoly.monomial(a, rs.q(2 * i)))
            delta_k = delta_k * (one - LaurentPoly.monomial(ma, rs.q(2 * i)))
        for i in range(1 - k, k + 1):
            mu_k = mu_k * binomial(rs, half, rs.q(i), mhalf, -rs.q(-i))
        delta = delta * binomial(rs, half, ONE, mhalf, -ONE)
        phi = phi * binomial(rs, half, rs.q(k), mhalf, -rs.q(-k))
        phi_neg = phi_neg * binomial(rs, half, rs.q(-k), mhalf, -rs.q(k))
    logger.debug(f'{rs.label} {rs.k_label}: Delta_k has {len(delta_k)} terms, mu_k {len(mu_k)}')
    return {'Delta': delta_k, 'mu': mu_k, 'delta': delta, 'phi': phi, 'phi_neg': phi_neg}


def to_records(rs, f: LaurentPoly) -> Dict:
    return {
        'D': rs.q_denominator,
        'terms': [{'exponent': list(e), 'coeff': render_scalar(f.terms[e])} for e in sorted(f.terms)],
    }


def from_records(data: Dict, rank: int) -> LaurentPoly:
    return LaurentPoly({tuple(t['exponent']): parse_scalar(t['coeff']) for t in data['terms']}, rank=rank)
