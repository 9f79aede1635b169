"""q-cyclotomic cosets modulo n."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotCoprime


@dataclass(frozen=True)
class CyclotomicCoset:
    leader: int
    elements: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, a: int) -> bool:
        return a in self.elements


def _check(q: int, n: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd(n={n}, q={q}) != 1")


def coset_of(a: int, q: int, n: int) -> CyclotomicCoset:
    """Orbit ``a, aq, aq^2, ...`` of ``a`` under multiplication by ``q`` mod ``n``."""
    _check(q, n)
    a %= n
    elems = [a]
    x = (a * q) % n
    while x != a:
        elems.append(x)
        x = (x * q) % n
    return CyclotomicCoset(leader=min(elems), elements=tuple(elems))


@dataclass(frozen=True)
class CosetTable:
    """Partition of Z_n into q-cyclotomic cosets, indexed by leader."""

    q: int
    n: int
    cosets: dict[int, CyclotomicCoset]
    leader_of: tuple[int, ...]
    neg_pair: dict[int, int]

    @property
    def leaders(self) -> tuple[int, ...]:
        return tuple(self.cosets)

    def __len__(self) -> int:
        return len(self.cosets)

    def size(self, leader: int) -> int:
        return self.cosets[leader].size

    def coset_of(self, a: int) -> CyclotomicCoset:
        return self.cosets[self.leader_of[a % self.n]]

    def is_self_paired(self, leader: int) -> bool:
        return self.neg_pair[leader] == leader

    def split_t1_t2(self) -> tuple[list[int], list[tuple[int, int]]]:
        """Self-paired leaders, and the pairs ``(j, -j)`` of distinct cosets.

        Each pair is listed once with its smaller leader first.
        """
        self_paired = [j for j in self.cosets if self.neg_pair[j] == j]
        pairs = [(j, self.neg_pair[j]) for j in self.cosets if j < self.neg_pair[j]]
        return self_paired, pairs


def build_table(q: int, n: int) -> CosetTable:
    _check(q, n)
    leader_of = [-1] * n
    cosets: dict[int, CyclotomicCoset] = {}
    for a in range(n):
        if leader_of[a] >= 0:
            continue
        c = coset_of(a, q, n)
        # scanning upward, a is the smallest member of its new coset
        cosets[a] = c
        for x in c.elements:
            leader_of[x] = a
    neg_pair = {j: leader_of[(-j) % n] for j in cosets}
    return CosetTable(q=q, n=n, cosets=cosets, leader_of=tuple(leader_of), neg_pair=neg_pair)
