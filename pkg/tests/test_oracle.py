import itertools
import random

import pytest

from cyclohull import oracle
from cyclohull.cyclic_core import code_space
from cyclohull.errors import DimensionMismatch, FieldMismatch
from cyclohull.field_tower import GF
from cyclohull.oracle import GfMatrix
from cyclohull.poly import Polynomial

F2 = GF(2)
F4 = GF(2, (1, 1, 1))


def test_generator_matrix_shapes():
    sp = code_space(2, 7)
    zero = oracle.code_matrix(sp.zero_code())
    assert (zero.rows, zero.cols) == (0, 7)
    full = oracle.code_matrix(sp.full_space())
    assert oracle.rank(full) == 7
    ham = oracle.generator_matrix(Polynomial(F2, [1, 1, 0, 1]), 7)
    assert (ham.rows, ham.cols) == (4, 7)
    assert ham.entries[1] == [0, 1, 1, 0, 1, 0, 0]
    assert oracle.rank(ham) == 4
    assert oracle.rank(oracle.nullspace(ham)) == 3


def test_rank_zero_and_errors():
    z = GfMatrix(F2, 4, [[0] * 4] * 3)
    assert oracle.rank(z) == 0
    assert oracle.nullspace(z).rows == 4
    with pytest.raises(DimensionMismatch):
        GfMatrix(F2, 3, [[1, 0]])
    with pytest.raises(DimensionMismatch):
        oracle.intersect_dim(GfMatrix(F2, 3, [[1, 0, 0]]), GfMatrix(F2, 4, [[1, 0, 0, 0]]))
    with pytest.raises(FieldMismatch):
        oracle.intersect_dim(GfMatrix(F2, 2, [[1, 0]]), GfMatrix(F4, 2, [[1, 0]]))


def _row_space(m):
    """All vectors in the row space, by enumeration."""
    F = m.field
    out = set()
    for coeffs in itertools.product(range(F.order), repeat=m.rows):
        v = [0] * m.cols
        for c, row in zip(coeffs, m.entries):
            v = [F.add(a, F.mul(c, b)) for a, b in zip(v, row)]
        out.add(tuple(v))
    return out


def _random_matrix(F, rng, rows, cols):
    return GfMatrix(F, cols, [[rng.randrange(F.order) for _ in range(cols)] for _ in range(rows)])


@pytest.mark.parametrize("F", [F2, GF(3), F4, GF(5)])
def test_linear_algebra_against_enumeration(F):
    rng = random.Random(1)
    for _ in range(30):
        cols = rng.randint(1, 5)
        a = _random_matrix(F, rng, rng.randint(0, 3), cols)
        b = _random_matrix(F, rng, rng.randint(0, 3), cols)
        sa, sb = _row_space(a), _row_space(b)
        ra = oracle.rank(a)
        assert F.order**ra == len(sa)
        assert _row_space(oracle.rref(a)) == sa
        assert F.order ** oracle.intersect_dim(a, b) == len(sa & sb)
        assert oracle.intersect_dim(a, b) == oracle.intersect_dim(b, a)
        assert oracle.codes_equal(a, b) == (sa == sb)
        assert oracle.contains(a, b) == (sb <= sa)
        ns = oracle.nullspace(a)
        assert ra + oracle.rank(ns) == cols
        for v in ns.entries:
            for row in a.entries:
                acc = 0
                for x, y in zip(v, row):
                    acc = F.add(acc, F.mul(x, y))
                assert acc == 0


def test_hamming_hull():
    ham = oracle.generator_matrix(Polynomial(F2, [1, 1, 0, 1]), 7)
    assert oracle.hull_dim(ham) == 3
    assert oracle.dual_dim(ham) == 3


def test_binary_length_9_hulls_are_zero():
    sp = code_space(2, 9)
    for code in sp.all_codes():
        assert oracle.hull_dim(oracle.code_matrix(code)) == 0


@pytest.mark.parametrize("q,n", [(2, 7), (3, 8), (4, 15)])
def test_cyclic_generator_ranks(q, n):
    sp = code_space(q, n)
    rng = random.Random(3)
    for _ in range(20):
        code = sp.random_code(rng)
        g = oracle.code_matrix(code)
        assert oracle.rank(g) == code.dim
        assert oracle.dual_dim(g) == n - code.dim
        assert oracle.intersect_dim(g, g) == code.dim
