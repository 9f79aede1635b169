"""Dense univariate polynomials over a :class:`~cyclohull.field_tower.GF`.

Coefficients are stored low degree first as integer encodings, trailing
zeros stripped; the zero polynomial has no coefficients.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .errors import BothZero, DivisionByZero, FieldMismatch, ZeroConstantTerm
from .field_tower import GF, FieldElement


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs: Iterable[int | FieldElement] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise FieldMismatch(f"coefficient from {c.field!r}, expected {field!r}")
                c = c.value
            elif field.degree == 1:
                c %= field.p
            elif not 0 <= c < field.order:
                raise ValueError(f"{c} does not encode an element of {field!r}")
            cs.append(c)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def monomial(cls, field: GF, degree: int, coeff: int = 1) -> "Polynomial":
        return cls(field, [0] * degree + [coeff])

    @classmethod
    def x_n_minus_1(cls, field: GF, n: int) -> "Polynomial":
        return cls(field, [field.neg(1)] + [0] * (n - 1) + [1])

    @classmethod
    def from_roots(cls, field: GF, roots: Iterable[int]) -> "Polynomial":
        """``prod (x - r)`` over the given root encodings."""
        F = field
        out = [1]
        for r in roots:
            shifted = [0] + out
            scaled = [F.mul(c, r) for c in out] + [0]
            out = [F.sub(a, b) for a, b in zip(shifted, scaled)]
        return cls(F, out)

    # -- basic protocol ------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def coefficient(self, i: int) -> FieldElement:
        c = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return FieldElement(self.field, c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)

    def _check(self, other: "Polynomial") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial(F, [F.add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)])

    def __neg__(self) -> "Polynomial":
        F = self.field
        return Polynomial(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Polynomial(F, out)

    def scale(self, c: int) -> "Polynomial":
        F = self.field
        return Polynomial(F, [F.mul(c, x) for x in self.coeffs])

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        inv_lead = F.inv(b[-1])
        quot = [0] * max(len(rem) - db, 0)
        for top in range(len(rem) - 1, db - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            c = F.mul(c, inv_lead)
            shift = top - db
            quot[shift] = c
            for i, y in enumerate(b):
                if y:
                    rem[shift + i] = F.sub(rem[shift + i], F.mul(c, y))
        return Polynomial(F, quot), Polynomial(F, rem[:db] if db > 0 else [])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def divides(self, other: "Polynomial") -> bool:
        """Whether ``self`` divides ``other``."""
        return (other % self).is_zero()

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead))

    def __call__(
        self, a: FieldElement, embed: Callable[[int], FieldElement] | None = None
    ) -> FieldElement:
        """Horner evaluation at ``a``.

        When ``a`` lives in a larger field, ``embed`` maps each coefficient
        encoding into that field.
        """
        if a.field != self.field and embed is None:
            raise FieldMismatch(f"no embedding of {self.field!r} into {a.field!r}")
        F = a.field
        acc = 0
        for c in reversed(self.coeffs):
            cv = c if embed is None else embed(c).value
            acc = F.add(F.mul(acc, a.value), cv)
        return FieldElement(F, acc)

    evaluate = __call__

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"


def parse_poly(field: GF, text: str) -> Polynomial:
    """Parse comma-separated coefficient encodings, low degree first."""
    parts = [s.strip() for s in text.strip().split(",") if s.strip()]
    if not parts:
        raise ValueError("empty polynomial text")
    try:
        values = [int(s) for s in parts]
    except ValueError:
        raise ValueError(f"bad polynomial text {text!r}") from None
    for v in values:
        if not 0 <= v < field.order:
            raise ValueError(f"coefficient {v} out of range for {field!r}")
    return Polynomial(field, values)


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        raise BothZero("lcm needs two nonzero polynomials")
    return ((a * b) // gcd(a, b)).monic()


def reciprocal(f: Polynomial) -> Polynomial:
    """``f*(x) = x^deg(f) f(1/x) / f(0)``."""
    if f.is_zero() or f.coeffs[0] == 0:
        raise ZeroConstantTerm(f"{f} has zero constant term")
    F = f.field
    return Polynomial(F, reversed(f.coeffs)).scale(F.inv(f.coeffs[0]))


def is_self_reciprocal(f: Polynomial) -> bool:
    return reciprocal(f) == f
