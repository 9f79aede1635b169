"""Brute-force linear algebra over F_q.

Everything here works on explicit matrices: codes are row spaces, duals are
null spaces, intersections come from the rank identity
``dim(A ∩ B) = dim A + dim B - dim(A + B)``.  Nothing in this module looks
at cyclotomic cosets or basic dual zeros, so it can referee the formulas in
:mod:`cyclohull.cyclic_core`.
"""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field
from typing import Sequence

from .errors import DimensionMismatch, FieldMismatch
from .field_tower import GF, FieldElement
from .poly import Polynomial


@dataclass
class GfMatrix:
    """Row-major matrix of field encodings."""

    field: GF
    cols: int
    entries: list[list[int]] = dc_field(default_factory=list)

    def __post_init__(self):
        for r in self.entries:
            if len(r) != self.cols:
                raise DimensionMismatch(f"row of length {len(r)} in a {self.cols}-column matrix")

    @property
    def rows(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return FieldElement(self.field, self.entries[i][j])

    def stack(self, other: "GfMatrix") -> "GfMatrix":
        _compatible(self, other)
        return GfMatrix(self.field, self.cols, [list(r) for r in self.entries + other.entries])

    def __repr__(self) -> str:
        return f"GfMatrix({self.rows}x{self.cols} over {self.field!r})"


def _compatible(a: GfMatrix, b: GfMatrix) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    if a.cols != b.cols:
        raise DimensionMismatch(f"{a.cols} vs {b.cols} columns")


def generator_matrix(gen: Polynomial, n: int) -> GfMatrix:
    """Rows ``x^i g(x)`` for ``i < n - deg g``."""
    k = n - gen.degree
    coeffs = list(gen.coeffs)
    rows = [[0] * i + coeffs + [0] * (n - len(coeffs) - i) for i in range(max(k, 0))]
    return GfMatrix(gen.field, n, rows)


def code_matrix(code) -> GfMatrix:
    """Generator matrix of anything carrying ``gen`` and ``n``."""
    return generator_matrix(code.gen, code.n)


def _reduce(m: GfMatrix) -> tuple[list[list[int]], list[int]]:
    F = m.field
    p = F.p
    prime = F.degree == 1
    rows = [list(r) for r in m.entries]
    pivots: list[int] = []
    r = 0
    for col in range(m.cols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][col])
        if prime:
            pr = [(v * inv) % p for v in rows[r]]
        else:
            pr = [F.mul(v, inv) for v in rows[r]]
        rows[r] = pr
        for i in range(len(rows)):
            c = rows[i][col]
            if i != r and c:
                if prime:
                    rows[i] = [(a - c * b) % p for a, b in zip(rows[i], pr)]
                else:
                    rows[i] = [F.sub(a, F.mul(c, b)) for a, b in zip(rows[i], pr)]
        pivots.append(col)
        r += 1
    return rows[:r], pivots


def rref(m: GfMatrix) -> GfMatrix:
    """Reduced row echelon form with zero rows dropped."""
    rows, _ = _reduce(m)
    return GfMatrix(m.field, m.cols, rows)


def rank(m: GfMatrix) -> int:
    return len(_reduce(m)[1])


def nullspace(m: GfMatrix) -> GfMatrix:
    """Basis of ``{x : M x^T = 0}`` as rows."""
    F = m.field
    rows, pivots = _reduce(m)
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    basis = []
    for f in free:
        v = [0] * m.cols
        v[f] = 1
        for row, pc in zip(rows, pivots):
            v[pc] = F.neg(row[f])
        basis.append(v)
    return GfMatrix(F, m.cols, basis)


def dual(m: GfMatrix) -> GfMatrix:
    return nullspace(m)


def dual_dim(m: GfMatrix) -> int:
    return rank(nullspace(m))


def intersect_dim(a: GfMatrix, b: GfMatrix) -> int:
    _compatible(a, b)
    return rank(a) + rank(b) - rank(a.stack(b))


def hull_dim(m: GfMatrix) -> int:
    return intersect_dim(m, nullspace(m))


def contains(a: GfMatrix, b: GfMatrix) -> bool:
    """Whether row(b) is a subspace of row(a)."""
    _compatible(a, b)
    return rank(a) == rank(a.stack(b))


def codes_equal(a: GfMatrix, b: GfMatrix) -> bool:
    return contains(a, b) and contains(b, a)


def in_row_space(m: GfMatrix, v: Sequence[int]) -> bool:
    return contains(m, GfMatrix(m.field, m.cols, [list(v)]))


def is_lcp(a: GfMatrix, b: GfMatrix) -> bool:
    """``row(a) ⊕ row(b)`` is the whole space."""
    return rank(a) + rank(b) == a.cols and intersect_dim(a, b) == 0
