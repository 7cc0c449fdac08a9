"""
Root system tables for reduced irreducible root systems.

Everything the rest of the library needs about a root system lives on a
RootSystemData object: Cartan matrix, the invariant form (short roots have
squared length 2), positive roots, the Weyl group and the k-parameters.

Coordinate conventions used by the hot paths:
  - roots: integer tuples in the simple-root basis
  - weights (exponents of X): doubled fundamental-weight coordinates, so
    that X^{alpha/2} has integer coordinates
  - coweights: integer coordinates in the basis b_i dual to the simple roots
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix
from sympy.liealgebras.cartan_matrix import CartanMatrix

from ring import U, QExponentError, Scalar

logger = logging.getLogger('maclab.rootsys')

DEFAULT_CAPS = {
    'max_rank': 4,
    'max_weyl_order': 1152,
    'max_word_length': 40,
    'max_positive_roots': 6,
}

SUPPORTED_RANKS = {
    'A': (1, 2, 3, 4),
    'B': (2, 3, 4),
    'C': (3, 4),
    'D': (4,),
    'F': (4,),
    'G': (2,),
}

WEIGHT_TAGS = ('P', 'Q', 'halfP')
COWEIGHT_TAGS = ('Pv', 'Qv')


class UnsupportedRootSystem(ValueError):
    pass


class CapExceeded(ValueError):
    pass


class LatticeMismatch(ValueError):
    pass


def parse_type(label: str) -> Tuple[str, int]:
    """'B2' -> ('B', 2)."""
    m = re.fullmatch(r'\s*([A-Ga-g])\s*(\d+)\s*', label)
    if not m:
        raise UnsupportedRootSystem(f"Cannot parse root system label '{label}'")
    return m.group(1).upper(), int(m.group(2))


@dataclass(frozen=True)
class Weight:
    """A vector of V in the simple-root basis, tagged with its lattice."""
    coords: Tuple[Fraction, ...]
    tag: str = 'ambient'

    def _tag_with(self, other: 'Weight') -> str:
        return self.tag if self.tag == other.tag else 'ambient'

    def __add__(self, other: 'Weight') -> 'Weight':
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self._tag_with(other))

    def __sub__(self, other: 'Weight') -> 'Weight':
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self._tag_with(other))

    def __neg__(self) -> 'Weight':
        return Weight(tuple(-a for a in self.coords), self.tag)

    def scale(self, c) -> 'Weight':
        return Weight(tuple(Fraction(c) * a for a in self.coords), 'ambient')

    @property
    def is_coweight(self) -> bool:
        return self.tag in COWEIGHT_TAGS


@dataclass(frozen=True, eq=False)
class FiniteWeylElt:
    """
    Element of the finite Weyl group.

    action acts on simple-root coordinates, on_weights on fundamental-weight
    coordinates and on_coweights on b-coordinates (all column vectors).
    word is a shortest word: w = s_{word[0]} s_{word[1]} ...
    """
    word: Tuple[int, ...]
    action: np.ndarray
    on_weights: np.ndarray
    on_coweights: np.ndarray
    key: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if len(self.word) % 2 else 1

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteWeylElt) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"W({''.join('s%d' % (i + 1) for i in self.word) or 'e'})"

    def weight(self, e: Sequence[int]) -> Tuple[int, ...]:
        return tuple(int(x) for x in self.on_weights @ np.asarray(e, dtype=np.int64))

    def coweight(self, y: Sequence[int]) -> Tuple[int, ...]:
        return tuple(int(x) for x in self.on_coweights @ np.asarray(y, dtype=np.int64))

    def root(self, c: Sequence[int]) -> Tuple[int, ...]:
        return tuple(int(x) for x in self.action @ np.asarray(c, dtype=np.int64))


class RootSystemData:
    """Immutable tables for one reduced irreducible root system with parameters k."""

    def __init__(self, kind: str, rank: int, k_long: int = 1, k_short: Optional[int] = None,
                 caps: Optional[Dict] = None):
        self.caps = dict(DEFAULT_CAPS)
        self.caps.update(caps or {})
        kind = kind.upper()
        if kind not in SUPPORTED_RANKS or rank not in SUPPORTED_RANKS[kind]:
            raise UnsupportedRootSystem(f"Unsupported root system {kind}{rank}")
        if rank > self.caps['max_rank']:
            raise CapExceeded(f"{kind}{rank}: rank {rank} exceeds cap {self.caps['max_rank']}")
        if k_short is None:
            k_short = k_long
        if k_long < 0 or k_short < 0:
            raise ValueError("k parameters must be nonnegative")
        self.kind = kind
        self.rank = rank
        self.k_long = int(k_long)
        self.k_short = int(k_short)

        n = rank
        if rank == 1:
            self.cartan = np.array([[2]], dtype=np.int64)
        else:
            self.cartan = np.array(CartanMatrix(f"{kind}{rank}").tolist(), dtype=np.int64)
        self.sym = self._symmetrizer(self.cartan)
        # (alpha_i, alpha_j) = a_ij * D_j, short roots have length 2
        self.form = self.cartan * self.sym[np.newaxis, :]
        if not np.array_equal(self.form, self.form.T):
            raise UnsupportedRootSystem(f"{self.label}: Cartan matrix is not symmetrizable")

        ainv = Matrix(self.cartan.tolist()).inv()
        m = reduce(lcm, (int(x.q) for x in ainv), 1)
        self.q_denominator = 2 * m
        self.ainv = [[Fraction(int(ainv[i, j].p), int(ainv[i, j].q)) for j in range(n)] for i in range(n)]
        # u-exponent of q^{2(lambda, mu)}: e^T QP y for doubled weight coords e, coweight coords y
        self.qp = np.array([[int(self.ainv[i][j] * self.q_denominator) for j in range(n)]
                            for i in range(n)], dtype=np.int64)

        self._gens_root, self._gens_weight, self._gens_coweight = self._generators()
        self.positive_roots = self._positive_roots()
        self._root_index = {c: i for i, c in enumerate(self.positive_roots)}
        self.theta = max(self.positive_roots, key=lambda c: (sum(c), c))
        self.degrees = self._degrees()
        self.weyl_order = int(np.prod(self.degrees))
        self._max_len = max(self.root_length2(c) for c in self.positive_roots)
        logger.debug(f"Built {self.label}: |R+|={len(self.positive_roots)}, |W|={self.weyl_order}, "
                     f"D={self.q_denominator}")

    # -- construction helpers --------------------------------------------

    @staticmethod
    def _symmetrizer(a: np.ndarray) -> np.ndarray:
        n = a.shape[0]
        d = [Fraction(0)] * n
        d[0] = Fraction(1)
        todo = [0]
        while todo:
            i = todo.pop()
            for j in range(n):
                if j != i and a[i, j] != 0 and d[j] == 0:
                    # a_ij d_j = a_ji d_i
                    d[j] = d[i] * int(a[j, i]) / int(a[i, j])
                    todo.append(j)
        lo = min(d)
        scaled = [x / lo for x in d]
        return np.array([int(x) for x in scaled], dtype=np.int64)

    def _generators(self):
        n, a = self.rank, self.cartan
        gr, gw, gc = [], [], []
        for i in range(n):
            s = np.eye(n, dtype=np.int64)
            w = np.eye(n, dtype=np.int64)
            c = np.eye(n, dtype=np.int64)
            for j in range(n):
                s[i, j] -= a[j, i]
                w[j, i] -= a[i, j]
                c[j, i] -= a[j, i]
            gr.append(s)
            gw.append(w)
            gc.append(c)
        return gr, gw, gc

    def _positive_roots(self) -> List[Tuple[int, ...]]:
        n = self.rank
        simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for c in frontier:
                for i in range(n):
                    img = tuple(int(x) for x in self._gens_root[i] @ np.asarray(c))
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        pos = [c for c in seen if all(x >= 0 for x in c)]
        if 2 * len(pos) != len(seen):
            raise UnsupportedRootSystem(f"{self.label}: root closure is not symmetric")
        return sorted(pos, key=lambda c: (sum(c), c))

    def _degrees(self) -> List[int]:
        heights: Dict[int, int] = {}
        for c in self.positive_roots:
            heights[sum(c)] = heights.get(sum(c), 0) + 1
        top = max(heights)
        exps = []
        for h in range(1, top + 1):
            mult = heights.get(h, 0) - heights.get(h + 1, 0)
            exps.extend([h] * mult)
        return sorted(m + 1 for m in exps)

    # -- basic data --------------------------------------------------------

    @property
    def label(self) -> str:
        return f"{self.kind}{self.rank}"

    @property
    def k_label(self) -> str:
        if self.is_simply_laced:
            return f"k={self.k_long}"
        return f"k=({self.k_long},{self.k_short})"

    @property
    def is_simply_laced(self) -> bool:
        return bool(np.all(self.sym == 1))

    @property
    def equal_k(self) -> bool:
        return self.is_simply_laced or self.k_long == self.k_short

    def with_k(self, k_long: int, k_short: Optional[int] = None) -> 'RootSystemData':
        return build(self.kind, self.rank, k_long, k_short, caps=self.caps)

    def root_length2(self, c: Sequence[int]) -> int:
        v = np.asarray(c, dtype=np.int64)
        return int(v @ self.form @ v)

    def is_long(self, c: Sequence[int]) -> bool:
        return self.root_length2(c) == self._max_len

    def k_of(self, c: Sequence[int]) -> int:
        return self.k_long if self.is_long(c) else self.k_short

    def q(self, x) -> Scalar:
        """q^x as a Scalar, for rational x with x*D integral."""
        e = Fraction(x) * self.q_denominator
        if e.denominator != 1:
            raise QExponentError(f"q^{x} is not a power of u with D={self.q_denominator}")
        return U ** int(e)

    def t(self, c: Sequence[int]) -> Scalar:
        return self.q(self.k_of(c))

    def root_weight(self, c: Sequence[int]) -> Tuple[int, ...]:
        """Doubled fundamental-weight coordinates of the root c."""
        return tuple(int(2 * x) for x in np.asarray(c, dtype=np.int64) @ self.cartan)

    def coroot(self, c: Sequence[int]) -> Tuple[int, ...]:
        """b-coordinates of the coroot of c."""
        v = np.asarray(c, dtype=np.int64)
        row = v @ self.form
        l2 = int(v @ self.form @ v)
        return tuple(int(2 * x // l2) for x in row)

    def pair_coweight_root(self, y: Sequence[int], c: Sequence[int]) -> int:
        return int(sum(a * b for a, b in zip(y, c)))

    def pair_root_coroot(self, c: Sequence[int], d: Sequence[int]) -> int:
        """(c, d^vee) for roots c, d."""
        return self.pair_coweight_root(self.coroot(d), c)

    def pair_weight_coroot(self, e: Sequence[int], c: Sequence[int]) -> Fraction:
        """(mu, c^vee) for doubled weight coords e."""
        return Fraction(sum(int(a) * int(b) for a, b in zip(e, self._coroot_in_simple_coroots(c))), 2)

    def _coroot_in_simple_coroots(self, c: Sequence[int]) -> Tuple[int, ...]:
        # alpha^vee = 2 alpha / (alpha, alpha) and alpha_i^vee = alpha_i / D_i
        l2 = self.root_length2(c)
        return tuple(int(2 * ci * int(self.sym[i]) // l2) for i, ci in enumerate(c))

    def q_exponent(self, y: Sequence[int], e: Sequence[int]) -> int:
        """u-exponent of q^{2(lambda, mu)}, lambda with b-coords y, mu with doubled weight coords e."""
        return int(np.asarray(e, dtype=np.int64) @ self.qp @ np.asarray(y, dtype=np.int64))

    @cached_property
    def rho2(self) -> Tuple[int, ...]:
        return tuple([2] * self.rank)

    @cached_property
    def rho_k2(self) -> Tuple[int, ...]:
        """Doubled weight coordinates of rho_k = 1/2 sum k_alpha alpha."""
        tot = np.zeros(self.rank, dtype=np.int64)
        for c in self.positive_roots:
            tot += self.k_of(c) * (np.asarray(c, dtype=np.int64) @ self.cartan)
        return tuple(int(x) for x in tot)

    @cached_property
    def rho_vee(self) -> Tuple[int, ...]:
        return tuple([1] * self.rank)

    @property
    def sum_k(self) -> int:
        return sum(self.k_of(c) for c in self.positive_roots)

    @property
    def sum_k_km1(self) -> int:
        return sum(self.k_of(c) * (self.k_of(c) - 1) for c in self.positive_roots)

    def height(self, e: Sequence[int]) -> Fraction:
        """Sum of fundamental-weight coordinates of a weight given by doubled coords."""
        return Fraction(sum(e), 2)

    # -- Weight conversions --------------------------------------------------

    def weight(self, omega: Sequence, tag: str = 'P') -> Weight:
        """Weight from fundamental-weight coordinates."""
        n = self.rank
        coords = tuple(sum(Fraction(omega[i]) * self.ainv[i][j] for i in range(n)) for j in range(n))
        return Weight(coords, tag)

    def weight2(self, e: Sequence[int]) -> Weight:
        """Weight from doubled fundamental-weight coordinates."""
        tag = 'P' if all(x % 2 == 0 for x in e) else 'halfP'
        return self.weight([Fraction(x, 2) for x in e], tag)

    def coweight(self, y: Sequence, tag: str = 'Pv') -> Weight:
        """Coweight from b-coordinates; b_i = omega_i / D_i."""
        n = self.rank
        coords = tuple(sum(Fraction(y[i]) * self.ainv[i][j] / int(self.sym[i]) for i in range(n))
                       for j in range(n))
        return Weight(coords, tag)

    def root(self, c: Sequence[int]) -> Weight:
        return Weight(tuple(Fraction(x) for x in c), 'Q')

    def omega_coords(self, w: Weight) -> Tuple[Fraction, ...]:
        n = self.rank
        return tuple(sum(w.coords[j] * int(self.cartan[j, i]) for j in range(n)) for i in range(n))

    def b_coords(self, w: Weight) -> Tuple[Fraction, ...]:
        n = self.rank
        return tuple(sum(w.coords[j] * int(self.form[j, i]) for j in range(n)) for i in range(n))

    def doubled(self, w: Weight) -> Tuple[int, ...]:
        out = []
        for x in self.omega_coords(w):
            if (2 * x).denominator != 1:
                raise LatticeMismatch(f"{w} is not in 1/2 P")
            out.append(int(2 * x))
        return tuple(out)

    def integral_coweight(self, w: Weight) -> Tuple[int, ...]:
        out = []
        for x in self.b_coords(w):
            if x.denominator != 1:
                raise LatticeMismatch(f"{w} is not a coweight")
            out.append(int(x))
        return tuple(out)

    def validate(self, w: Weight) -> bool:
        if w.tag == 'P':
            vals = self.omega_coords(w)
        elif w.tag == 'halfP':
            vals = tuple(2 * x for x in self.omega_coords(w))
        elif w.tag == 'Q':
            vals = w.coords
        elif w.tag == 'Pv':
            vals = self.b_coords(w)
        elif w.tag == 'Qv':
            vals = tuple(x * int(d) for x, d in zip(w.coords, self.sym))
        else:
            return True
        return all(Fraction(x).denominator == 1 for x in vals)

    def pair(self, lam: Weight, mu: Weight) -> Fraction:
        n = self.rank
        return sum((lam.coords[i] * int(self.form[i, j]) * mu.coords[j]
                    for i in range(n) for j in range(n)), Fraction(0))

    # -- Weyl group --------------------------------------------------------

    def _key(self, on_weights: np.ndarray) -> Tuple[int, ...]:
        return tuple(int(x) for x in on_weights @ np.ones(self.rank, dtype=np.int64))

    @cached_property
    def _weyl(self) -> Tuple[List[FiniteWeylElt], Dict[Tuple[int, ...], FiniteWeylElt]]:
        if self.weyl_order > self.caps['max_weyl_order']:
            raise CapExceeded(f"{self.label}: |W|={self.weyl_order} exceeds cap {self.caps['max_weyl_order']}")
        n = self.rank
        ident = np.eye(n, dtype=np.int64)
        e = FiniteWeylElt((), ident, ident, ident, self._key(ident))
        elements = [e]
        index = {e.key: e}
        frontier = [e]
        while frontier:
            nxt = []
            for g in frontier:
                for i in range(n):
                    ow = self._gens_weight[i] @ g.on_weights
                    key = self._key(ow)
                    if key in index:
                        continue
                    h = FiniteWeylElt((i,) + g.word, self._gens_root[i] @ g.action, ow,
                                      self._gens_coweight[i] @ g.on_coweights, key)
                    index[key] = h
                    elements.append(h)
                    nxt.append(h)
            frontier = nxt
        if len(elements) != self.weyl_order:
            raise UnsupportedRootSystem(f"{self.label}: Weyl group closure has {len(elements)} elements, "
                                        f"expected {self.weyl_order}")
        logger.debug(f"{self.label}: enumerated {len(elements)} Weyl group elements")
        return elements, index

    def weyl_group(self) -> List[FiniteWeylElt]:
        return self._weyl[0]

    @property
    def identity(self) -> FiniteWeylElt:
        return self._weyl[0][0]

    def element_from_word(self, word: Sequence[int]) -> FiniteWeylElt:
        ow = np.eye(self.rank, dtype=np.int64)
        for i in word:
            ow = ow @ self._gens_weight[i]
        return self._weyl[1][self._key(ow)]

    def compose(self, a: FiniteWeylElt, b: FiniteWeylElt) -> FiniteWeylElt:
        return self._weyl[1][self._key(a.on_weights @ b.on_weights)]

    def inverse(self, a: FiniteWeylElt) -> FiniteWeylElt:
        return self.element_from_word(tuple(reversed(a.word)))

    def simple_reflection(self, i: int) -> FiniteWeylElt:
        return self.element_from_word((i,))

    def reflection(self, c: Sequence[int]) -> FiniteWeylElt:
        """The reflection s_alpha for the root with simple coordinates c."""
        av = self._coroot_in_simple_coroots(c)
        # s_alpha(rho) = rho - (rho, alpha^vee) alpha, in weight coordinates
        shift = sum(av)
        img = np.ones(self.rank, dtype=np.int64) - shift * (np.asarray(c, dtype=np.int64) @ self.cartan)
        return self._weyl[1][tuple(int(x) for x in img)]

    def longest_element(self) -> FiniteWeylElt:
        return max(self.weyl_group(), key=lambda w: w.length)

    def inversion_set(self, w: FiniteWeylElt) -> List[Tuple[int, ...]]:
        """R^+ cap w^{-1} R^-."""
        return [c for c in self.positive_roots if any(x < 0 for x in w.root(c))]

    def is_root(self, c: Sequence[int]) -> bool:
        c = tuple(c)
        return c in self._root_index or tuple(-x for x in c) in self._root_index

    def is_positive_root(self, c: Sequence[int]) -> bool:
        return tuple(c) in self._root_index

    # -- orbits and orders ---------------------------------------------------

    def orbit(self, e: Sequence[int]) -> List[Tuple[int, ...]]:
        """W-orbit of a weight in doubled coordinates, dominant element first."""
        start = tuple(int(x) for x in e)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(self.rank):
                    img = tuple(int(x) for x in self._gens_weight[i] @ np.asarray(v, dtype=np.int64))
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        return sorted(seen, key=lambda v: (not all(x >= 0 for x in v), tuple(-x for x in v)))

    def coweight_orbit(self, y: Sequence[int]) -> List[Tuple[int, ...]]:
        start = tuple(int(x) for x in y)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(self.rank):
                    img = tuple(int(x) for x in self._gens_coweight[i] @ np.asarray(v, dtype=np.int64))
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        return sorted(seen)

    def _ascend(self, v: Sequence, gens) -> Tuple[Tuple, List[int]]:
        v = [Fraction(x) for x in v]
        applied: List[int] = []
        while True:
            neg = [i for i, x in enumerate(v) if x < 0]
            if not neg:
                return tuple(v), applied
            i = neg[0]
            g = gens[i]
            v = [sum(int(g[r, s]) * v[s] for s in range(self.rank)) for r in range(self.rank)]
            applied.append(i)
            if len(applied) > 10 * len(self.positive_roots) + 10:
                raise RuntimeError(f"{self.label}: dominant ascent did not terminate")

    def dominant_representative(self, lam: Weight) -> Tuple[Weight, FiniteWeylElt]:
        if lam.is_coweight:
            v, applied = self._ascend(self.b_coords(lam), self._gens_coweight)
            dom = self.coweight(v, lam.tag)
        else:
            v, applied = self._ascend(self.omega_coords(lam), self._gens_weight)
            dom = self.weight(v, lam.tag)
        return dom, self.element_from_word(tuple(reversed(applied)))

    def dominant_weight2(self, e: Sequence[int]) -> Tuple[int, ...]:
        v, _ = self._ascend(e, self._gens_weight)
        return tuple(int(x) for x in v)

    def dominant_coweight(self, y: Sequence[int]) -> Tuple[int, ...]:
        v, _ = self._ascend(y, self._gens_coweight)
        return tuple(int(x) for x in v)

    def _check_family(self, lam: Weight, mu: Weight):
        fams = {('co' if w.is_coweight else 'w') for w in (lam, mu) if w.tag != 'ambient'}
        if len(fams) > 1:
            raise LatticeMismatch(f"Cannot compare {lam.tag} with {mu.tag}")

    def dominance_leq(self, lam: Weight, mu: Weight) -> bool:
        """lam <= mu iff mu - lam is a nonnegative integer combination of simple (co)roots."""
        self._check_family(lam, mu)
        diff = [b - a for a, b in zip(lam.coords, mu.coords)]
        if lam.is_coweight or mu.is_coweight:
            diff = [x * int(d) for x, d in zip(diff, self.sym)]
        return all(x >= 0 and x.denominator == 1 for x in diff)

    def prec(self, lam: Weight, mu: Weight) -> bool:
        """
        Strict order: lam^+ < mu^+, or lam^+ == mu^+ and lam < mu (weights)
        resp. lam > mu (coweights).
        """
        self._check_family(lam, mu)
        lp, _ = self.dominant_representative(lam)
        mp, _ = self.dominant_representative(mu)
        if lp.coords != mp.coords:
            return self.dominance_leq(lp, mp)
        if lam.coords == mu.coords:
            return False
        if lam.is_coweight:
            return self.dominance_leq(mu, lam)
        return self.dominance_leq(lam, mu)

    def leq2(self, a: Sequence[int], b: Sequence[int]) -> bool:
        """Dominance a <= b for doubled weight coordinates."""
        return self.dominance_leq(self.weight2(a), self.weight2(b))

    def dominant_weights_below(self, lam: Sequence[int]) -> List[Tuple[int, ...]]:
        """
        All dominant weights mu <= lam, lam given by (undoubled) fundamental-weight
        coordinates. Sorted with lam first, then decreasing height.
        """
        lam = tuple(int(x) for x in lam)
        if any(x < 0 for x in lam):
            raise ValueError(f"{lam} is not dominant")
        n = self.rank
        simple = [sum(Fraction(lam[i]) * self.ainv[i][j] for i in range(n)) for j in range(n)]
        bounds = [int(x) for x in simple]
        found = []
        for c in np.ndindex(*[b + 1 for b in bounds]):
            mu = [lam[j] - sum(int(c[i]) * int(self.cartan[i, j]) for i in range(n)) for j in range(n)]
            if all(x >= 0 for x in mu):
                found.append(tuple(mu))
        # decreasing simple-root height refines dominance
        return sorted(found, key=lambda v: (-self.simple_height(v), tuple(-x for x in v)))

    def simple_height(self, omega: Sequence) -> Fraction:
        n = self.rank
        return sum((Fraction(omega[i]) * self.ainv[i][j] for i in range(n) for j in range(n)), Fraction(0))

    def minuscule_coweights(self) -> List[int]:
        """Indices r of the nonzero minuscule fundamental coweights b_r."""
        return [r for r in range(self.rank) if all(c[r] <= 1 for c in self.positive_roots)]

    def cartan_determinant(self) -> int:
        return int(Matrix(self.cartan.tolist()).det())

    def summary(self) -> Dict:
        return {
            'type': self.label,
            'k_long': self.k_long,
            'k_short': self.k_short,
            'cartan': self.cartan.tolist(),
            'form': self.form.tolist(),
            'positive_roots': [list(c) for c in self.positive_roots],
            'theta': list(self.theta),
            'degrees': self.degrees,
            'weyl_order': self.weyl_order,
            'q_denominator': self.q_denominator,
            'minuscule_coweights': [r + 1 for r in self.minuscule_coweights()],
        }


@lru_cache(maxsize=None)
def _build(kind: str, rank: int, k_long: int, k_short: int, caps: Tuple) -> RootSystemData:
    return RootSystemData(kind, rank, k_long, k_short, caps=dict(caps))


def build(kind: str, rank: int, k_long: int = 1, k_short: Optional[int] = None,
          caps: Optional[Dict] = None) -> RootSystemData:
    """Shared RootSystemData per (type, k, caps), so downstream caches are reused."""
    merged = dict(DEFAULT_CAPS)
    merged.update(caps or {})
    k_short = k_long if k_short is None else k_short
    return _build(kind.upper(), int(rank), int(k_long), int(k_short), tuple(sorted(merged.items())))
