"""Verification suites pitting the basic-dual-zero formulas against the oracle.

Each suite returns a :class:`CheckResult` with pass/fail counts and the first
counterexample found.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import random

from . import oracle
from .cyclic_core import (
    CodeSpace,
    basic_dual_zero,
    code_from_bz_dual,
    hull_dimension,
    is_lcd,
    is_lcd_by_generator,
    is_one_dim_hull,
)
from .field_tower import FieldElement, FieldTower
from .poly import is_self_reciprocal
from .trace_repr import (
    TraceSpec,
    cross_coset_pairs,
    independence_check,
    random_spec,
    trace_code,
    vanishes_directly,
    vanishing_criterion,
)


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: dict | None = None
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, good: bool, witness: dict | None = None) -> None:
        if good:
            self.passed += 1
        else:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = witness

    def as_dict(self) -> dict:
        d = {"passed": self.passed, "failed": self.failed}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        d.update(self.extra)
        return d


def check_factorization(sp: CodeSpace) -> CheckResult:
    res = CheckResult("factorization")
    prod = sp.product(sp.leaders)
    res.record(prod == sp.xn1, {"product": list(prod.coeffs)})
    return res


def check_self_reciprocal_pairing(sp: CodeSpace) -> CheckResult:
    res = CheckResult("self_reciprocal_iff_self_paired")
    for j in sp.leaders:
        sr = is_self_reciprocal(sp.minpoly(j))
        res.record(sr == sp.table.is_self_paired(j), {"leader": j})
    return res


def check_codes(sp: CodeSpace) -> list[CheckResult]:
    """Hull formula, LCD and one-dimensional-hull tests over every code."""
    hull = CheckResult("hull_dimension_vs_oracle")
    lcd = CheckResult("lcd_agreement")
    one = CheckResult("one_dim_hull_agreement")
    lcd_count = one_count = 0
    for code in sp.all_codes():
        gen = list(code.gen.coeffs)
        formula = hull_dimension(code)
        brute = oracle.hull_dim(oracle.code_matrix(code))
        hull.record(formula == brute, {"generator": gen, "formula": formula, "oracle": brute})
        flags = (is_lcd(code), is_lcd_by_generator(code), brute == 0)
        lcd.record(len(set(flags)) == 1, {"generator": gen, "flags": list(flags)})
        odh, _ = is_one_dim_hull(code)
        one.record(odh == (brute == 1), {"generator": gen, "one_dim_hull": odh, "oracle": brute})
        lcd_count += flags[2]
        one_count += brute == 1
    total = 2 ** len(sp.leaders)
    lcd.extra = {"lcd_count": lcd_count, "codes": total}
    one.extra = {"one_dim_hull_count": one_count, "codes": total}
    return [hull, lcd, one]


def check_trace_code(tower: FieldTower, sp: CodeSpace) -> CheckResult:
    res = CheckResult("trace_code_equals_generator_code")
    leaders = sp.leaders
    for mask in range(2 ** len(leaders)):
        bz = [j for i, j in enumerate(leaders) if mask >> i & 1]
        code = code_from_bz_dual(sp, bz)
        good = oracle.codes_equal(trace_code(tower, bz), oracle.code_matrix(code))
        good = good and basic_dual_zero(code) == frozenset(bz)
        res.record(good, {"bz_dual": bz})
    return res


def check_vanishing(tower: FieldTower, samples: int = 1000, seed: int = 0) -> CheckResult:
    res = CheckResult("trace_vanishing_criterion")
    F = tower.big
    for i in range(1, tower.n):
        for lam in range(F.order):
            spec = TraceSpec(tower, (i,), (FieldElement(F, lam),))
            res.record(vanishing_criterion(spec) == vanishes_directly(spec),
                       {"exponents": [i], "coeffs": [lam]})
    rng = random.Random(seed)
    for _ in range(samples):
        spec = random_spec(tower, rng)
        res.record(vanishing_criterion(spec) == vanishes_directly(spec),
                   {"exponents": list(spec.exponents), "coeffs": [c.value for c in spec.coeffs]})
    return res


def check_normal_independence(tower: FieldTower) -> CheckResult:
    res = CheckResult("normal_trace_vectors_independent")
    beta = tower.find_normal_element()
    for k, l in cross_coset_pairs(tower):
        res.record(independence_check(tower, beta, k, l), {"beta": beta.value, "k": k, "l": l})
    res.extra = {"beta": beta.value}
    return res


def run_code_suite(sp: CodeSpace) -> list[CheckResult]:
    return [check_factorization(sp), check_self_reciprocal_pairing(sp), *check_codes(sp)]


def run_trace_suite(sp: CodeSpace, samples: int = 1000, seed: int = 0) -> list[CheckResult]:
    tower = sp.tower
    return [
        check_trace_code(tower, sp),
        check_vanishing(tower, samples, seed),
        check_normal_independence(tower),
    ]
