"""Trace description of cyclic codes of length ``n = q^m - 1``.

A codeword is the evaluation vector of
``x -> Tr_{q^m/q}(sum_j lambda_j x^{i_j})`` at ``x = alpha^0, ..., alpha^{n-1}``;
this order makes the image closed under cyclic shift.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence
import random

from .cosets import CosetTable, build_table
from .errors import (
    DuplicateCoset,
    ExponentZero,
    FieldMismatch,
    LengthNotQmMinus1,
    NotNormal,
    SameCoset,
)
from .field_tower import FieldElement, FieldTower
from .oracle import GfMatrix, rank


def _require_primitive_length(tower: FieldTower) -> None:
    if tower.n != tower.q**tower.m - 1:
        raise LengthNotQmMinus1(f"n={tower.n} but q^m - 1 = {tower.q**tower.m - 1}")


@lru_cache(maxsize=64)
def _table(q: int, n: int) -> CosetTable:
    return build_table(q, n)


def cosets_for(tower: FieldTower) -> CosetTable:
    return _table(tower.q, tower.n)


@dataclass(frozen=True, eq=False)
class TraceSpec:
    tower: FieldTower
    exponents: tuple[int, ...]
    coeffs: tuple[FieldElement, ...]

    def __post_init__(self):
        _require_primitive_length(self.tower)
        if len(self.exponents) != len(self.coeffs):
            raise ValueError("exponents and coefficients differ in length")
        for c in self.coeffs:
            if c.field != self.tower.big:
                raise FieldMismatch(f"coefficient {c!r} is not in {self.tower.big!r}")
        table = cosets_for(self.tower)
        seen = [table.leader_of[i % self.tower.n] for i in self.exponents]
        if len(set(seen)) != len(seen):
            raise DuplicateCoset(f"exponents {self.exponents} share a cyclotomic coset")


def _evaluate(spec: TraceSpec, x: int) -> int:
    """``Tr_{q^m/q}(sum lambda_j x^{i_j})`` as an encoding in ``big``."""
    F = spec.tower.big
    acc = 0
    for i, lam in zip(spec.exponents, spec.coeffs):
        acc = F.add(acc, F.mul(lam.value, F.pow(x, i)))
    return spec.tower.trace_value(acc, 1)


def trace_codeword(spec: TraceSpec) -> tuple[int, ...]:
    """Evaluation vector over F_q (encodings in ``tower.small``)."""
    T = spec.tower
    return tuple(T.coerce_value(_evaluate(spec, T.alpha_power(k).value)) for k in range(T.n))


def field_basis(tower: FieldTower) -> list[FieldElement]:
    """``1, alpha, ..., alpha^{m-1}``: an F_q-basis of F_{q^m} when alpha is primitive."""
    return [tower.alpha_power(i) for i in range(tower.m)]


def trace_code(tower: FieldTower, bz: Iterable[int]) -> GfMatrix:
    """Generator matrix spanning the trace code with exponent set ``bz``.

    The code is F_q-linear in each ``lambda_j``, so it is spanned by one row
    per exponent and per basis element of F_{q^m} over F_q.
    """
    _require_primitive_length(tower)
    rows = []
    for j in sorted(set(bz)):
        for b in field_basis(tower):
            rows.append(list(trace_codeword(TraceSpec(tower, (j,), (b,)))))
    return GfMatrix(tower.small, tower.n, rows)


def _check_nonzero_exponents(spec: TraceSpec) -> None:
    for i in spec.exponents:
        if i % spec.tower.n == 0:
            raise ExponentZero("exponents must be nonzero modulo n")


def vanishing_criterion(spec: TraceSpec) -> bool:
    """Predicted: the trace form vanishes iff every coefficient is killed by
    the trace down to the field fixed by its coset.

    For a coset of full size ``m`` that trace is the identity, so the
    coefficient must be zero.
    """
    _check_nonzero_exponents(spec)
    T = spec.tower
    table = cosets_for(T)
    for i, lam in zip(spec.exponents, spec.coeffs):
        delta = table.coset_of(i).size
        if T.trace_value(lam.value, delta) != 0:
            return False
    return True


def vanishes_directly(spec: TraceSpec) -> bool:
    """Evaluate the trace form at every ``x`` in F_{q^m}, zero included."""
    _check_nonzero_exponents(spec)
    return all(_evaluate(spec, x) == 0 for x in range(spec.tower.big.order))


def random_spec(tower: FieldTower, rng: random.Random, terms: int | None = None,
                degenerate: float = 0.5) -> TraceSpec:
    """Random spec over distinct nonzero cosets, two or more terms when possible.

    With probability ``degenerate`` each coefficient is drawn from the kernel
    of the relevant relative trace, so vanishing cases are well represented.
    """
    table = cosets_for(tower)
    leaders = [j for j in table.leaders if j != 0]
    k = terms if terms is not None else rng.randint(min(2, len(leaders)), len(leaders))
    chosen = rng.sample(leaders, k)
    exps, coeffs = [], []
    for j in chosen:
        coset = table.cosets[j]
        exps.append(rng.choice(coset.elements))
        coeffs.append(_random_coeff(tower, coset.size, rng, degenerate))
    return TraceSpec(tower, tuple(exps), tuple(coeffs))


@lru_cache(maxsize=256)
def _trace_kernel(tower: FieldTower, k: int) -> tuple[int, ...]:
    return tuple(v for v in range(tower.big.order) if tower.trace_value(v, k) == 0)


def _random_coeff(tower: FieldTower, delta: int, rng: random.Random, degenerate: float):
    if rng.random() < degenerate:
        return FieldElement(tower.big, rng.choice(_trace_kernel(tower, delta)))
    return FieldElement(tower.big, rng.randrange(tower.big.order))


def trace_vector(tower: FieldTower, beta: FieldElement, k: int) -> list[int]:
    """``(Tr(beta x^k))`` over ``x = alpha^0, ..., alpha^{n-1}``."""
    return list(trace_codeword(TraceSpec(tower, (k,), (beta,))))


def independence_check(tower: FieldTower, beta: FieldElement, k: int, l: int) -> bool:
    """Whether the trace vectors of ``beta x^k`` and ``beta x^l`` are independent."""
    _require_primitive_length(tower)
    if not tower.is_normal(beta):
        raise NotNormal(f"{beta!r} is not a normal element")
    table = cosets_for(tower)
    if table.leader_of[k % tower.n] == table.leader_of[l % tower.n]:
        raise SameCoset(f"{k} and {l} lie in one cyclotomic coset")
    m = GfMatrix(tower.small, tower.n, [trace_vector(tower, beta, k), trace_vector(tower, beta, l)])
    return rank(m) == 2


def cross_coset_pairs(tower: FieldTower, include_zero: bool = False) -> list[tuple[int, int]]:
    leaders: Sequence[int] = [j for j in cosets_for(tower).leaders if include_zero or j]
    return [(a, b) for idx, a in enumerate(leaders) for b in leaders[idx + 1:]]
