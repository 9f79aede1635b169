"""Cyclic codes of length n over F_q described through basic dual zeros.

A code is keyed by its monic generator ``g | x^n - 1``.  Its basic dual zero
``BZ(C^perp)`` is the set of coset leaders ``j`` whose minimal polynomial
``m_{alpha^j}`` divides ``h*``, the reciprocal of the check polynomial
``h = (x^n - 1)/g``.  Hull dimension, LCD, LCP and intersection dimension
are all read off that leader set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator
import random

from .cosets import CosetTable, build_table
from .errors import CoefficientNotInSubfield, FieldMismatch, LengthMismatch, NotADivisor
from .field_tower import FieldElement, FieldTower, tower_for
from .poly import Polynomial, gcd, is_self_reciprocal, lcm, reciprocal

BasicDualZero = frozenset


class CodeSpace:
    """All cyclic codes of one length ``n`` over one field F_q."""

    def __init__(self, q: int, n: int):
        self.tower: FieldTower = tower_for(q, n)
        self.table: CosetTable = build_table(q, n)
        self.q = q
        self.n = n
        self.field = self.tower.small
        self.xn1 = Polynomial.x_n_minus_1(self.field, n)

    def __repr__(self) -> str:
        return f"CodeSpace(q={self.q}, n={self.n})"

    @property
    def leaders(self) -> tuple[int, ...]:
        return self.table.leaders

    @property
    def is_primitive_length(self) -> bool:
        """Whether ``n = q^m - 1``."""
        return self.n == self.q**self.tower.m - 1

    def minpoly(self, leader: int) -> Polynomial:
        """``prod_{s in B_leader} (x - alpha^s)``, coerced to F_q."""
        return self._minpolys[leader]

    @cached_property
    def _minpolys(self) -> dict[int, Polynomial]:
        T = self.tower
        out = {}
        for j, coset in self.table.cosets.items():
            big = Polynomial.from_roots(T.big, (T.alpha_power(s).value for s in coset.elements))
            small = []
            for c in big.coeffs:
                elem = FieldElement(T.big, c)
                if not T.is_in_subfield(elem):
                    raise CoefficientNotInSubfield(f"m_{j} has coefficient {c} outside F_{self.q}")
                small.append(T.coerce_to_subfield(elem).value)
            out[j] = Polynomial(self.field, small)
        return out

    def factor_xn_minus_1(self) -> dict[int, Polynomial]:
        """Monic irreducible factors of ``x^n - 1``, keyed by coset leader."""
        return dict(self._minpolys)

    def product(self, leaders: Iterable[int]) -> Polynomial:
        out = Polynomial(self.field, [1])
        for j in leaders:
            out = out * self.minpoly(j)
        return out

    def code(self, gen: Polynomial) -> "CyclicCode":
        return code_from_generator(self, gen)

    def code_from_leaders(self, leaders: Iterable[int]) -> "CyclicCode":
        """The code generated by ``prod m_{alpha^j}`` over ``leaders``."""
        return CyclicCode(self, self.product(sorted(set(leaders))))

    def zero_code(self) -> "CyclicCode":
        return CyclicCode(self, self.xn1)

    def full_space(self) -> "CyclicCode":
        return CyclicCode(self, Polynomial(self.field, [1]))

    def all_codes(self) -> Iterator["CyclicCode"]:
        """Every cyclic code, in binary counting order over sorted leaders.

        Bit ``i`` of the counter selects ``m_{alpha^{leaders[i]}}`` as a factor
        of the generator.
        """
        for mask in range(2 ** len(self.leaders)):
            yield self.code_from_mask(mask)

    def code_from_mask(self, mask: int) -> "CyclicCode":
        return self.code_from_leaders(j for i, j in enumerate(self.leaders) if mask >> i & 1)

    def random_code(self, rng: random.Random) -> "CyclicCode":
        return self.code_from_mask(rng.getrandbits(len(self.leaders)))


@lru_cache(maxsize=64)
def code_space(q: int, n: int) -> CodeSpace:
    return CodeSpace(q, n)


@dataclass(frozen=True, eq=False)
class CyclicCode:
    space: CodeSpace
    gen: Polynomial

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def q(self) -> int:
        return self.space.q

    @property
    def dim(self) -> int:
        return self.n - self.gen.degree

    @cached_property
    def check_polynomial(self) -> Polynomial:
        return self.space.xn1 // self.gen

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclicCode):
            return NotImplemented
        return (self.q, self.n, self.gen) == (other.q, other.n, other.gen)

    def __hash__(self) -> int:
        return hash((self.q, self.n, self.gen))

    def __repr__(self) -> str:
        return f"CyclicCode(q={self.q}, n={self.n}, gen={self.gen})"


def code_from_generator(space: CodeSpace, gen: Polynomial) -> CyclicCode:
    if gen.field != space.field:
        raise FieldMismatch(f"generator over {gen.field!r}, expected {space.field!r}")
    if gen.is_zero():
        raise NotADivisor("the zero polynomial does not divide x^n - 1")
    rem = space.xn1 % gen
    if not rem.is_zero():
        raise NotADivisor(f"{gen} does not divide x^{space.n} - 1 (remainder {rem})")
    return CyclicCode(space, gen.monic())


def code_from_bz_dual(space: CodeSpace, bz: Iterable[int]) -> CyclicCode:
    """The code ``C`` with ``BZ(C^perp) = bz``."""
    bz = set(bz)
    bad = bz - set(space.leaders)
    if bad:
        raise ValueError(f"not coset leaders: {sorted(bad)}")
    h_star = space.product(sorted(bz))
    h = reciprocal(h_star)
    return CyclicCode(space, space.xn1 // h)


def dual_code(code: CyclicCode) -> CyclicCode:
    return CyclicCode(code.space, reciprocal(code.check_polynomial).monic())


def basic_dual_zero(code: CyclicCode) -> BasicDualZero:
    h_star = reciprocal(code.check_polynomial)
    sp = code.space
    return frozenset(j for j in sp.leaders if sp.minpoly(j).divides(h_star))


def _check_pair(c: CyclicCode, d: CyclicCode) -> None:
    if c.n != d.n:
        raise LengthMismatch(f"lengths {c.n} and {d.n}")
    if c.q != d.q:
        raise FieldMismatch(f"fields F_{c.q} and F_{d.q}")


def hull_generator(code: CyclicCode) -> Polynomial:
    """Generator of ``C ∩ C^perp``: the lcm of the two generators."""
    return lcm(code.gen, dual_code(code).gen)


def hull_split(code: CyclicCode) -> tuple[frozenset[int], frozenset[int]]:
    """Canonical split of ``BZ(C^perp)``.

    The first part holds leaders that are self-paired or whose negation is
    also in the set; the second holds the rest.
    """
    bz = basic_dual_zero(code)
    neg = code.space.table.neg_pair
    unpaired = frozenset(j for j in bz if neg[j] not in bz)
    return bz - unpaired, unpaired


def hull_dimension(code: CyclicCode) -> int:
    _, unpaired = hull_split(code)
    return sum(code.space.table.size(j) for j in unpaired)


def is_lcd(code: CyclicCode) -> bool:
    bz = basic_dual_zero(code)
    neg = code.space.table.neg_pair
    return all(neg[j] == j or neg[j] in bz for j in bz)


def is_lcd_by_generator(code: CyclicCode) -> bool:
    """LCD test through self-reciprocity of the generator."""
    return is_self_reciprocal(code.gen)


def is_one_dim_hull(code: CyclicCode) -> tuple[bool, int | None]:
    """Whether the hull is one-dimensional, with the responsible leader.

    For ``n = q^m - 1`` this looks for the unique leader ``j`` in
    ``BZ(C^perp)`` with ``|B_j| = 1``, ``B_j != B_{-j}`` and the remaining
    leaders closed under negation.  Other lengths use the hull dimension.
    """
    sp = code.space
    table = sp.table
    if not sp.is_primitive_length:
        _, unpaired = hull_split(code)
        if hull_dimension(code) == 1:
            (j,) = unpaired
            return True, j
        return False, None

    bz = basic_dual_zero(code)
    candidates = []
    for j in sorted(bz):
        if table.size(j) != 1 or table.neg_pair[j] == j:
            continue
        rest = bz - {j}
        if all(table.neg_pair[h] == h or table.neg_pair[h] in rest for h in rest):
            candidates.append(j)
    if len(candidates) == 1:
        return True, candidates[0]
    return False, None


def is_lcp(c: CyclicCode, d: CyclicCode) -> bool:
    """``C ⊕ D = F_q^n``, decided by ``BZ(C^perp) = T \\ BZ(D^perp)``."""
    _check_pair(c, d)
    leaders = frozenset(c.space.leaders)
    return basic_dual_zero(c) == leaders - basic_dual_zero(d)


def intersection_code(c: CyclicCode, d: CyclicCode) -> CyclicCode:
    _check_pair(c, d)
    return CyclicCode(c.space, lcm(c.gen, d.gen))


def intersection_dimension(c: CyclicCode, d: CyclicCode) -> int:
    _check_pair(c, d)
    shared = basic_dual_zero(c) & basic_dual_zero(d)
    return sum(c.space.table.size(j) for j in shared)


def generator_gcd_hull_dimension(code: CyclicCode) -> int:
    """Hull dimension as ``deg gcd(g, h*)``; an internal cross-check."""
    return gcd(code.gen, reciprocal(code.check_polynomial)).degree
