"""
Extended affine Weyl group W~ = W x| tau(P^vee).

Nodes are numbered 0..n: node 0 is the affine simple root alpha_0 = -theta + delta,
node i >= 1 is the finite simple root alpha_i (index i-1 in rootsys tables).
Elements are kept in the normal form tau(translation) * finite.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from rootsys import CapExceeded, FiniteWeylElt, RootSystemData

logger = logging.getLogger('maclab.afweyl')


class AffineConsistencyError(RuntimeError):
    pass


@dataclass(frozen=True)
class AffineRoot:
    """alpha + level * delta, alpha given in simple-root coordinates."""
    finite_part: Tuple[int, ...]
    level: int

    def is_positive(self) -> bool:
        if self.level != 0:
            return self.level > 0
        return all(x >= 0 for x in self.finite_part)

    def __neg__(self) -> 'AffineRoot':
        return AffineRoot(tuple(-x for x in self.finite_part), -self.level)


@dataclass(frozen=True, eq=False)
class ExtAffineWeylElt:
    translation: Tuple[int, ...]
    finite: FiniteWeylElt

    def __eq__(self, other) -> bool:
        return (isinstance(other, ExtAffineWeylElt) and self.translation == other.translation
                and self.finite == other.finite)

    def __hash__(self) -> int:
        return hash((self.translation, self.finite.key))

    def __repr__(self) -> str:
        return f'tau({list(self.translation)}){self.finite!r}'


class ExtendedAffineWeylGroup:
    """Group operations, lengths and reduced words for one root system."""

    def __init__(self, rs: RootSystemData):
        self.rs = rs
        self.n = rs.rank
        self.zero = (0,) * rs.rank
        self.e = ExtAffineWeylElt(self.zero, rs.identity)
        self.omega = self._omega_elements()
        self._omega_by_translation = {w.translation: r for r, w in self.omega.items()}

    # -- construction --------------------------------------------------------

    def element(self, translation: Sequence[int], finite: Optional[FiniteWeylElt] = None) -> ExtAffineWeylElt:
        return ExtAffineWeylElt(tuple(int(x) for x in translation), finite or self.rs.identity)

    def translation(self, y: Sequence[int]) -> ExtAffineWeylElt:
        return self.element(y)

    def simple_root(self, i: int) -> AffineRoot:
        if i == 0:
            return AffineRoot(tuple(-x for x in self.rs.theta), 1)
        return AffineRoot(tuple(1 if j == i - 1 else 0 for j in range(self.n)), 0)

    def reflection(self, root: AffineRoot) -> ExtAffineWeylElt:
        """s_{alpha + k delta} = tau(-k alpha^vee) s_alpha."""
        av = self.rs.coroot(root.finite_part)
        return self.element(tuple(-root.level * x for x in av), self.rs.reflection(root.finite_part))

    def simple_reflection(self, i: int) -> ExtAffineWeylElt:
        if i == 0:
            # s_0 = tau(theta^vee) s_theta
            return self.element(self.rs.coroot(self.rs.theta), self.rs.reflection(self.rs.theta))
        return self.element(self.zero, self.rs.simple_reflection(i - 1))

    def omega_element(self, r: int) -> ExtAffineWeylElt:
        """pi_r, the length-zero element over b_r; r = 0 is the identity."""
        if r not in self.omega:
            raise KeyError(f'{self.rs.label}: b_{r} is not minuscule')
        return self.omega[r]

    def _omega_elements(self) -> Dict[int, ExtAffineWeylElt]:
        out = {0: self.e}
        for r in self.rs.minuscule_coweights():
            b = tuple(1 if j == r else 0 for j in range(self.n))
            found = [w for w in self.rs.weyl_group() if self.length(self.element(b, w)) == 0]
            if len(found) != 1:
                raise AffineConsistencyError(f'{self.rs.label}: {len(found)} length-zero elements over b_{r + 1}')
            out[r + 1] = self.element(b, found[0])
        return out

    # -- group law -------------------------------------------------------------

    def multiply(self, a: ExtAffineWeylElt, b: ExtAffineWeylElt) -> ExtAffineWeylElt:
        moved = a.finite.coweight(b.translation)
        return self.element(tuple(x + y for x, y in zip(a.translation, moved)),
                            self.rs.compose(a.finite, b.finite))

    def inverse(self, a: ExtAffineWeylElt) -> ExtAffineWeylElt:
        winv = self.rs.inverse(a.finite)
        return self.element(tuple(-x for x in winv.coweight(a.translation)), winv)

    def product(self, elements: Sequence[ExtAffineWeylElt]) -> ExtAffineWeylElt:
        out = self.e
        for x in elements:
            out = self.multiply(out, x)
        return out

    def from_word(self, r: int, word: Sequence[int]) -> ExtAffineWeylElt:
        return self.product([self.omega_element(r)] + [self.simple_reflection(i) for i in word])

    # -- action and length ------------------------------------------------------

    def act_on_affine_root(self, w: ExtAffineWeylElt, root: AffineRoot) -> AffineRoot:
        """tau(lambda) w: alpha + k delta -> w alpha + (k - (lambda, w alpha)) delta."""
        img = w.finite.root(root.finite_part)
        if not self.rs.is_root(img):
            raise AffineConsistencyError(f'{w!r} maps {root} outside the root system')
        level = root.level - self.rs.pair_coweight_root(w.translation, img)
        return AffineRoot(img, level)

    def length(self, w: ExtAffineWeylElt) -> int:
        """l(w tau(lam)) = sum_{alpha > 0} |(lam, alpha) + chi(w alpha)|."""
        lam = self.rs.inverse(w.finite).coweight(w.translation)
        total = 0
        for c in self.rs.positive_roots:
            chi = 0 if self.rs.is_positive_root(w.finite.root(c)) else 1
            total += abs(self.rs.pair_coweight_root(lam, c) + chi)
        return total

    def brute_force_inversions(self, w: ExtAffineWeylElt, max_level: Optional[int] = None) -> List[AffineRoot]:
        """Positive affine roots sent to negative ones, by scanning levels."""
        rs = self.rs
        if max_level is None:
            max_level = max(abs(rs.pair_coweight_root(w.translation, c)) for c in rs.positive_roots) + 2
        found = []
        for c in rs.positive_roots:
            for sign in (1, -1):
                beta = tuple(sign * x for x in c)
                for k in range(0, max_level + 1):
                    root = AffineRoot(beta, k)
                    if root.is_positive() and not self.act_on_affine_root(w, root).is_positive():
                        found.append(root)
        return found

    def omega_index(self, w: ExtAffineWeylElt) -> int:
        r = self._omega_by_translation.get(w.translation)
        if r is None or self.omega[r] != w:
            raise AffineConsistencyError(f'{w!r} is not in Omega')
        return r

    def omega_permutation(self, r: int) -> Dict[int, int]:
        """i -> j with pi_r(alpha_i) = alpha_j."""
        pi = self.omega[r]
        simple = {self.simple_root(i): i for i in range(self.n + 1)}
        out = {}
        for i in range(self.n + 1):
            img = self.act_on_affine_root(pi, self.simple_root(i))
            if img not in simple:
                raise AffineConsistencyError(f'pi_{r} does not permute the affine simple roots')
            out[i] = simple[img]
        return out

    def reduced_word(self, w: ExtAffineWeylElt, prefer: str = 'smallest') -> Tuple[int, List[int]]:
        """
        (r, word) with w = pi_r s_{word[0]} s_{word[1]} ... , found by peeling right
        descents; the smallest descent index is taken unless prefer='largest'.
        """
        cur = w
        peeled: List[int] = []
        nodes = list(range(self.n + 1))
        if prefer == 'largest':
            nodes.reverse()
        target = self.length(w)
        if target > self.rs.caps['max_word_length']:
            raise CapExceeded(f'length {target} exceeds max_word_length')
        while len(peeled) < target:
            for i in nodes:
                if not self.act_on_affine_root(cur, self.simple_root(i)).is_positive():
                    cur = self.multiply(cur, self.simple_reflection(i))
                    peeled.append(i)
                    break
            else:
                raise AffineConsistencyError(f'no descent found for {cur!r} of positive length')
        return self.omega_index(cur), list(reversed(peeled))

    def associated_root_sequence(self, w: ExtAffineWeylElt, word: Sequence[int]) -> List[AffineRoot]:
        """alpha^(1) = alpha_{i_1}, alpha^(2) = s_{i_1}(alpha_{i_2}), ... for w = pi_r s_{i_l} ... s_{i_1}."""
        if len(word) != self.length(w):
            raise ValueError(f'word {list(word)} is not reduced for {w!r}')
        prefix = self.e
        roots = []
        for i in reversed(word):
            roots.append(self.act_on_affine_root(prefix, self.simple_root(i)))
            prefix = self.multiply(prefix, self.simple_reflection(i))
        if len(set(roots)) != len(roots):
            raise ValueError(f'word {list(word)} is not reduced for {w!r}')
        rest = self.multiply(w, self.inverse(self.product([self.simple_reflection(i) for i in word])))
        if rest not in self.omega.values():
            raise ValueError(f'word {list(word)} does not spell {w!r} up to Omega')
        return roots

    def ball(self, radius: int) -> List[ExtAffineWeylElt]:
        """All products pi_r s_{i_1} ... s_{i_m} with m <= radius."""
        seen = set(self.omega.values())
        frontier = list(self.omega.values())
        for _ in range(radius):
            nxt = []
            for w in frontier:
                for i in range(self.n + 1):
                    v = self.multiply(w, self.simple_reflection(i))
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        return sorted(seen, key=lambda w: (self.length(w), w.translation, w.finite.key))


@lru_cache(maxsize=None)
def affine_group(rs: RootSystemData) -> ExtendedAffineWeylGroup:
    return ExtendedAffineWeylGroup(rs)
