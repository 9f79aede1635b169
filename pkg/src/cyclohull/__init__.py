"""Hull dimension, LCD and LCP tests for cyclic codes via basic dual zeros."""

from .cosets import CosetTable, CyclotomicCoset, build_table, coset_of
from .cyclic_core import (
    CodeSpace,
    CyclicCode,
    basic_dual_zero,
    code_from_bz_dual,
    code_from_generator,
    code_space,
    dual_code,
    hull_dimension,
    hull_generator,
    intersection_code,
    intersection_dimension,
    is_lcd,
    is_lcp,
    is_one_dim_hull,
)
from .field_tower import GF, FieldElement, FieldTower, build_tower, tower_for
from .poly import Polynomial, gcd, is_self_reciprocal, lcm, parse_poly, reciprocal

__version__ = "0.1.0"
