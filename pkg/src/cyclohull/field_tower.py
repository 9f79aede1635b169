"""Finite fields F_{p^k} and the tower F_p < F_q < F_{q^m}.

Elements are carried around as plain integers: the coordinate vector
``(c_0, ..., c_{k-1})`` in the power basis of the modulus root is encoded as
``sum(c_i * p**i)``.  :class:`GF` does arithmetic on those integers, and
:class:`FieldElement` wraps an integer together with its field for the
public, operator-friendly API.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from .errors import (
    DivisionByZero,
    FieldMismatch,
    InternalSearchExhausted,
    NotADivisor,
    NotCoprime,
    NotInSubfield,
    NotPrime,
)

# ---------------------------------------------------------------------------
# integer helpers


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization, ``{prime: exponent}``."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def prime_power(q: int) -> tuple[int, int]:
    """Split a prime power ``q`` into ``(p, e)``."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    f = factorize(q)
    if len(f) != 1:
        raise NotPrime(f"{q} is not a prime power")
    ((p, e),) = f.items()
    return p, e


def multiplicative_order(a: int, n: int) -> int:
    """Smallest ``m >= 1`` with ``a**m == 1 (mod n)``."""
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) != 1")
    m, x = 1, a % n
    while x != 1:
        x = (x * a) % n
        m += 1
    return m


# ---------------------------------------------------------------------------
# polynomials over the prime field, as lists of residues (low degree first)


def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pf_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _pf_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _pf_mod(_trim(prod), f, p)


def _pf_mod(a: list[int], f: list[int], p: int) -> list[int]:
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df and a:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - df
        for i, y in enumerate(f):
            a[shift + i] = (a[shift + i] - c * y) % p
        _trim(a)
    return a


def _pf_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pf_mod(a, b, p)
    return a


def is_irreducible(f: list[int] | tuple[int, ...], p: int) -> bool:
    """Ben-Or test: ``gcd(f, x^(p^i) - x) == 1`` for ``i <= deg f / 2``."""
    f = _trim(list(f))
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    xp = x
    for _ in range(d // 2):
        # xp <- xp^p mod f
        acc = [1]
        base, k = xp, p
        while k:
            if k & 1:
                acc = _pf_mulmod(acc, base, f, p)
            base = _pf_mulmod(base, base, f, p)
            k >>= 1
        xp = acc
        if len(_pf_gcd(f, _pf_sub(xp, x, p), p)) != 1:
            return False
    return True


def first_irreducible(p: int, d: int) -> tuple[int, ...]:
    """First monic irreducible of degree ``d`` in increasing encoding order.

    Candidates ``x^d + c_{d-1}x^{d-1} + ... + c_0`` are scanned by the
    integer ``sum(c_i p^i)``.
    """
    for code in range(p**d):
        low = [(code // p**i) % p for i in range(d)]
        f = low + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise InternalSearchExhausted(f"no irreducible of degree {d} over F_{p}")


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [(a - c * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# fields


class GF:
    """The field F_{p^k} = F_p[z]/(modulus); prime fields have no modulus.

    All arithmetic methods take and return integer encodings.
    """

    _MEMO_LIMIT = 1024

    def __init__(self, p: int, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if modulus is not None:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) < 3 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree >= 2")
        self.p = p
        self.modulus = modulus
        self.degree = 1 if modulus is None else len(modulus) - 1
        self.order = p**self.degree
        self._memo: dict[tuple[int, int], int] | None = (
            {} if self.order <= self._MEMO_LIMIT else None
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GF)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        if self.modulus is None:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.degree}, modulus={list(self.modulus)})"

    def __call__(self, value: int) -> "FieldElement":
        value = int(value)
        if not 0 <= value < self.order:
            raise ValueError(f"{value} does not encode an element of {self!r}")
        return FieldElement(self, value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, v) for v in range(self.order)]

    # -- coordinates ---------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.degree):
            out.append(a % p)
            a //= p
        return out

    def from_digits(self, ds) -> int:
        v = 0
        for c in reversed(list(ds)):
            v = v * self.p + (c % self.p)
        return v

    # -- arithmetic on encodings --------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.degree == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        return self.from_digits(x + y for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        if self.degree == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self.from_digits(-x for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.degree == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        memo = self._memo
        if memo is not None:
            key = (a, b) if a <= b else (b, a)
            r = memo.get(key)
            if r is None:
                r = memo[key] = self._mul_poly(a, b)
            return r
        return self._mul_poly(a, b)

    def _mul_poly(self, a: int, b: int) -> int:
        p, k, f = self.p, self.degree, self.modulus
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top] % p
            if c:
                for i in range(k):
                    prod[top - k + i] -= c * f[i]
        return self.from_digits(prod[:k])

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("0 has no inverse")
            return 1 if e == 0 else 0
        e %= self.order - 1
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self!r}")
        if self.degree == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))


class FieldElement:
    """An element of a :class:`GF`, with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            # integers act through the prime subfield
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p if self.field.degree == 1 else (
                self.value == other
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field.digits(self.value))


# ---------------------------------------------------------------------------
# the tower


@dataclass(frozen=True, eq=False)
class FieldTower:
    """F_p < F_q < F_{q^m} with a fixed primitive ``n``-th root of unity.

    ``big`` realizes F_{q^m} as a degree ``e*m`` extension of F_p; ``small``
    realizes F_q as F_p[y]/(minimal polynomial of ``subfield_gen``), so that
    ``y -> subfield_gen`` is the embedding used by :meth:`embed` and
    :meth:`coerce_to_subfield`.
    """

    p: int
    e: int
    m: int
    n: int
    big: GF
    small: GF
    subfield_gen: FieldElement
    alpha: FieldElement

    @property
    def q(self) -> int:
        return self.p**self.e

    def __repr__(self) -> str:
        return f"FieldTower(q={self.q}, m={self.m}, n={self.n})"

    def _check_big(self, a: FieldElement) -> None:
        if a.field != self.big:
            raise FieldMismatch(f"expected an element of {self.big!r}")

    def _check_divisor(self, k: int) -> None:
        if k < 1 or self.m % k:
            raise NotADivisor(f"{k} does not divide m={self.m}")

    def alpha_power(self, i: int) -> FieldElement:
        return FieldElement(self.big, self._alpha_powers[i % self.n])

    @cached_property
    def _alpha_powers(self) -> list[int]:
        F, a = self.big, self.alpha.value
        out = [1]
        for _ in range(self.n - 1):
            out.append(F.mul(out[-1], a))
        return out

    def frobenius(self, a: FieldElement, k: int = 1) -> FieldElement:
        """``a ** (q ** k)``."""
        self._check_big(a)
        v = a.value
        for _ in range(k % self.m):
            v = self.big.pow(v, self.q)
        return FieldElement(self.big, v)

    def relative_trace(self, a: FieldElement, k: int = 1) -> FieldElement:
        """Trace from F_{q^m} down to F_{q^k}; ``k`` must divide ``m``."""
        self._check_divisor(k)
        self._check_big(a)
        return FieldElement(self.big, self.trace_value(a.value, k))

    def trace_value(self, v: int, k: int = 1) -> int:
        """:meth:`relative_trace` on encodings, without argument checks."""
        F = self.big
        step = self.q**k
        acc, x = v, v
        for _ in range(self.m // k - 1):
            x = F.pow(x, step)
            acc = F.add(acc, x)
        return acc

    def trace(self, a: FieldElement) -> FieldElement:
        """Absolute-to-F_q trace, coerced into ``small``."""
        return self.coerce_to_subfield(self.relative_trace(a, 1))

    def is_in_subfield(self, a: FieldElement, k: int = 1) -> bool:
        self._check_divisor(k)
        self._check_big(a)
        return self.big.pow(a.value, self.q**k) == a.value

    @cached_property
    def _embedding(self) -> list[int]:
        F, g = self.big, self.subfield_gen.value
        gpow = [1]
        for _ in range(self.e - 1):
            gpow.append(F.mul(gpow[-1], g))
        table = []
        for v in range(self.small.order):
            acc = 0
            for c, gp in zip(self.small.digits(v), gpow):
                if c:
                    acc = F.add(acc, F.mul(c, gp))
            table.append(acc)
        return table

    @cached_property
    def _coercion(self) -> dict[int, int]:
        return {b: s for s, b in enumerate(self._embedding)}

    def coerce_value(self, v: int) -> int:
        """:meth:`coerce_to_subfield` on encodings."""
        try:
            return self._coercion[v]
        except KeyError:
            raise NotInSubfield(f"{v} is not in F_{self.q}") from None

    def embed(self, b: FieldElement | int) -> FieldElement:
        """Map an element of ``small`` (or its encoding) into ``big``."""
        if isinstance(b, FieldElement):
            if b.field != self.small:
                raise FieldMismatch(f"expected an element of {self.small!r}")
            b = b.value
        return FieldElement(self.big, self._embedding[b])

    def coerce_to_subfield(self, a: FieldElement) -> FieldElement:
        """Express an element of the F_q copy inside ``big`` over ``small``."""
        self._check_big(a)
        return FieldElement(self.small, self.coerce_value(a.value))

    def is_normal(self, beta: FieldElement) -> bool:
        """Whether the Frobenius orbit of ``beta`` is an F_q-basis.

        F_q-independence of the ``m`` conjugates is tested as F_p-independence
        of the ``e*m`` products ``gamma^s * beta^(q^i)``.
        """
        self._check_big(beta)
        if beta.value == 0:
            return False
        F = self.big
        gpow = [F.pow(self.subfield_gen.value, s) for s in range(self.e)]
        rows = []
        conj = beta.value
        for _ in range(self.m):
            for gp in gpow:
                rows.append(F.digits(F.mul(gp, conj)))
            conj = F.pow(conj, self.q)
        return _rank_mod_p(rows, self.p) == self.e * self.m

    @cached_property
    def normal_element(self) -> FieldElement:
        for v in range(1, self.big.order):
            beta = FieldElement(self.big, v)
            if self.is_normal(beta):
                if self.trace_value(v) == 0:
                    raise InternalSearchExhausted("normal element with zero trace")
                return beta
        raise InternalSearchExhausted("no normal element found")

    def find_normal_element(self) -> FieldElement:
        """First normal element of F_{q^m} over F_q in encoding order."""
        return self.normal_element


def _find_generator(F: GF) -> int:
    N = F.order - 1
    primes = list(factorize(N))
    for g in range(1, F.order):
        if all(F.pow(g, N // r) != 1 for r in primes):
            return g
    raise InternalSearchExhausted(f"no multiplicative generator in {F!r}")


def _find_subfield_gen(F: GF, p: int, e: int) -> int:
    q = p**e
    for v in range(1, F.order):
        if F.pow(v, q) != v:
            continue
        powers = [1]
        for _ in range(e - 1):
            powers.append(F.mul(powers[-1], v))
        if _rank_mod_p([F.digits(x) for x in powers], p) == e:
            return v
    raise InternalSearchExhausted(f"no generator of F_{q} inside {F!r}")


def build_tower(p: int, e: int, n: int) -> FieldTower:
    """Build F_p < F_{p^e} < F_{q^m} with ``m = ord_n(q)`` and ``alpha`` of order ``n``."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1 or n < 1:
        raise ValueError("e and n must be positive")
    q = p**e
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd(n={n}, q={q}) != 1")
    m = multiplicative_order(q, n)
    d = e * m
    big = GF(p) if d == 1 else GF(p, first_irreducible(p, d))

    g = _find_generator(big)
    alpha = big.pow(g, (big.order - 1) // n)
    if big.pow(alpha, n) != 1 or any(big.pow(alpha, n // r) == 1 for r in factorize(n)):
        raise InternalSearchExhausted(f"alpha has wrong order (n={n})")

    if e == 1:
        gamma = 1
        small = GF(p)
    else:
        gamma = _find_subfield_gen(big, p, e)
        # minimal polynomial of gamma over F_p: prod (x - gamma^(p^k))
        poly = [1]
        conj = gamma
        for _ in range(e):
            shifted = [0] + poly
            scaled = [big.mul(c, conj) for c in poly] + [0]
            poly = [big.sub(a, b) for a, b in zip(shifted, scaled)]
            conj = big.pow(conj, p)
        if any(c >= p for c in poly):
            raise InternalSearchExhausted("subfield generator has bad minimal polynomial")
        small = GF(p, tuple(poly))

    return FieldTower(
        p=p,
        e=e,
        m=m,
        n=n,
        big=big,
        small=small,
        subfield_gen=FieldElement(big, gamma),
        alpha=FieldElement(big, alpha),
    )


def tower_for(q: int, n: int) -> FieldTower:
    """:func:`build_tower` keyed by the prime power ``q``."""
    p, e = prime_power(q)
    return build_tower(p, e, n)
