"""Exact scalars: rationals, real quadratic field elements, and root finding.

Rationals are :class:`fractions.Fraction` throughout (always in lowest terms
with a positive denominator).  Irrational values live in a single real
quadratic field Q(sqrt(d)) and are represented by :class:`QuadExt`.  Nothing
in this module ever rounds.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction, "QuadExt"]


class FieldMismatchError(ValueError):
    """Arithmetic between elements of two different quadratic fields."""


class ZeroPolynomialError(ValueError):
    pass


class NegativeInputError(ValueError):
    pass


def _factor(n: int) -> dict[int, int]:
    """Trial-division factorization of a positive integer."""
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_part(n: int) -> int:
    """Product of the primes dividing ``n`` to an odd power."""
    if n < 1:
        raise ValueError(f"squarefree_part needs n >= 1, got {n}")
    out = 1
    for p, e in _factor(n).items():
        if e % 2:
            out *= p
    return out


def split_square(n: int) -> tuple[int, int]:
    """Write ``n >= 0`` as ``k*k*m`` with ``m`` squarefree; return ``(k, m)``."""
    if n == 0:
        return 0, 0
    m = squarefree_part(n)
    return math.isqrt(n // m), m


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, QuadExt):
        if x.coef:
            raise TypeError(f"{x} is not rational")
        return x.rat
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


class QuadExt:
    """The real number ``rat + coef*sqrt(d)`` with ``d`` squarefree.

    Canonical form: a zero coefficient forces ``d = 0``, and a perfect-square
    radicand is folded into the rational part, so equal values always have
    equal fields and hash alike.  A rational QuadExt compares and hashes equal
    to the corresponding ``Fraction``.
    """

    __slots__ = ("rat", "coef", "d")

    def __init__(self, rat=0, coef=0, d: int = 0):
        rat = _as_fraction(rat)
        coef = _as_fraction(coef)
        if d < 0:
            raise ValueError("only real quadratic fields are supported")
        if coef and d:
            k, m = split_square(d)
            coef *= k
            d = m
            if d == 1:
                rat += coef
                coef = Fraction(0)
        if not coef or not d:
            coef = Fraction(0)
            d = 0
        self.rat = rat
        self.coef = coef
        self.d = d

    @classmethod
    def _raw(cls, rat: Fraction, coef: Fraction, d: int) -> "QuadExt":
        obj = object.__new__(cls)
        if not coef:
            d = 0
        obj.rat, obj.coef, obj.d = rat, coef, d
        return obj

    @classmethod
    def sqrt(cls, x) -> "QuadExt":
        """Exact nonnegative square root of a nonnegative rational."""
        x = _as_fraction(x)
        if x < 0:
            raise NegativeInputError(f"sqrt of negative {x}")
        # sqrt(p/q) = sqrt(p*q)/q
        k, m = split_square(x.numerator * x.denominator)
        return cls(0, Fraction(k, x.denominator), m)

    @property
    def is_rational(self) -> bool:
        return self.d == 0

    def _lift(self, other) -> tuple["QuadExt", int]:
        if not isinstance(other, QuadExt):
            other = QuadExt._raw(_as_fraction(other), Fraction(0), 0)
        if self.d and other.d and self.d != other.d:
            raise FieldMismatchError(f"Q(sqrt({self.d})) vs Q(sqrt({other.d}))")
        return other, self.d or other.d

    def __add__(self, other):
        try:
            o, d = self._lift(other)
        except TypeError:
            return NotImplemented
        return QuadExt._raw(self.rat + o.rat, self.coef + o.coef, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt._raw(-self.rat, -self.coef, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o, d = self._lift(other)
        except TypeError:
            return NotImplemented
        return QuadExt._raw(self.rat - o.rat, self.coef - o.coef, d)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        try:
            o, d = self._lift(other)
        except TypeError:
            return NotImplemented
        a, b, c, e = self.rat, self.coef, o.rat, o.coef
        return QuadExt._raw(a * c + b * e * d, a * e + b * c, d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm ``rat**2 - d*coef**2``; zero only for the zero element."""
        return self.rat * self.rat - self.d * self.coef * self.coef

    def conjugate(self) -> "QuadExt":
        return QuadExt._raw(self.rat, -self.coef, self.d)

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("QuadExt division by zero")
        return QuadExt._raw(self.rat / n, -self.coef / n, self.d)

    def __truediv__(self, other):
        try:
            o, _ = self._lift(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o, _ = self._lift(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadExt._raw(Fraction(1), Fraction(0), 0)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def sign(self) -> int:
        a, b = self.rat, self.coef
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with d*b^2
        diff = a * a - self.d * b * b
        return sa if diff > 0 else sb

    def __bool__(self):
        return bool(self.rat) or bool(self.coef)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.rat == other.rat and self.coef == other.coef and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.d == 0 and self.rat == other
        return NotImplemented

    def __hash__(self):
        if self.d == 0:
            return hash(self.rat)
        return hash((self.rat, self.coef, self.d))

    def _cmp(self, other) -> int:
        diff = self.__sub__(other)
        if diff is NotImplemented:
            return NotImplemented  # type: ignore[return-value]
        return diff.sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __float__(self):
        return float(self.rat) + float(self.coef) * math.sqrt(self.d)

    def to_mpf(self):
        import mpmath

        r = mpmath.mpf(self.rat.numerator) / self.rat.denominator
        if self.d:
            r += mpmath.mpf(self.coef.numerator) / self.coef.denominator * mpmath.sqrt(self.d)
        return r

    def __repr__(self):
        return f"QuadExt({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def to_quad(x: Scalar) -> QuadExt:
    return x if isinstance(x, QuadExt) else QuadExt(x)


def sign(x: Scalar) -> int:
    if isinstance(x, QuadExt):
        return x.sign()
    return (x > 0) - (x < 0)


def field_of(values: Iterable[Scalar]) -> int:
    """Common radicand of a collection of scalars (0 when all rational)."""
    d = 0
    for v in values:
        if isinstance(v, QuadExt) and v.d:
            if d and v.d != d:
                raise FieldMismatchError(f"Q(sqrt({d})) vs Q(sqrt({v.d}))")
            d = v.d
    return d


def simplify(x: Scalar) -> Scalar:
    """Demote rational QuadExt values to Fraction."""
    if isinstance(x, QuadExt) and x.d == 0:
        return x.rat
    if isinstance(x, int):
        return Fraction(x)
    return x


# --- text encoding -------------------------------------------------------

def _fmt_frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x: Scalar) -> str:
    """``p/q`` (``p`` when q=1) or ``p/q+r/s*sqrt(d)``."""
    if isinstance(x, QuadExt):
        if x.d == 0:
            return _fmt_frac(x.rat)
        op = "+" if x.coef > 0 else "-"
        return f"{_fmt_frac(x.rat)}{op}{_fmt_frac(abs(x.coef))}*sqrt({x.d})"
    return _fmt_frac(Fraction(x))


_QUAD_RE = re.compile(
    r"^\s*(?P<rat>[+-]?\d+(?:/\d+)?)\s*(?P<op>\+-|\+|-)\s*(?P<coef>\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(?P<d>\d+)\s*\)\s*$"
)


def parse_scalar(text: str) -> Scalar:
    """Inverse of :func:`format_scalar`; returns a Fraction or a QuadExt."""
    m = _QUAD_RE.match(text)
    if m:
        coef = Fraction(m["coef"])
        if m["op"] in ("-", "+-"):
            coef = -coef
        return simplify(QuadExt(Fraction(m["rat"]), coef, int(m["d"])))
    try:
        return Fraction(text.strip())
    except ValueError:
        raise ValueError(f"not an exact scalar: {text!r}") from None


# --- roots -----------------------------------------------------------------

class Degenerate:
    """Marker for an identically-zero quadratic (every s is a root)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "DEGENERATE"


DEGENERATE = Degenerate()


def solve_quadratic_exact(A, B, C) -> list[Scalar] | Degenerate:
    """All real roots of ``A*s**2 + B*s + C = 0``, ascending.

    Rational roots come back as Fraction, irrational ones as QuadExt over the
    squarefree part of the discriminant.
    """
    A, B, C = Fraction(A), Fraction(B), Fraction(C)
    if A == 0:
        if B == 0:
            return DEGENERATE if C == 0 else []
        return [-C / B]
    disc = B * B - 4 * A * C
    if disc < 0:
        return []
    if disc == 0:
        return [-B / (2 * A)]
    root = QuadExt.sqrt(disc)
    lo = (-B - root) / (2 * A)
    hi = (-B + root) / (2 * A)
    roots = sorted([simplify(lo), simplify(hi)])
    return roots


def sqrt_rational_exact(x) -> Fraction | None:
    """Exact rational square root, or None when ``x`` is not a rational square."""
    x = Fraction(x)
    if x < 0:
        raise NegativeInputError(f"sqrt of negative {x}")
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class IntPoly:
    """Polynomial with integer coefficients, stored in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "IntPoly":
        return IntPoly([-x for x in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([other * x for x in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return IntPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in _factor(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return divs


def rational_roots(p: IntPoly | Sequence[int]) -> list[Fraction]:
    """Every rational root of an integer polynomial, deduplicated and ascending."""
    if not isinstance(p, IntPoly):
        p = IntPoly(p)
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has every rational as a root")
    coeffs = list(p.coeffs)
    roots: set[Fraction] = set()
    if coeffs[0] == 0:
        roots.add(Fraction(0))
        while coeffs[0] == 0:
            coeffs.pop(0)
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
    coeffs = [c // g for c in coeffs]
    n = len(coeffs) - 1
    if n >= 1:
        lead, const = abs(coeffs[-1]), abs(coeffs[0])
        for num in _divisors(const):
            for den in _divisors(lead):
                if math.gcd(num, den) != 1:
                    continue
                for sgn in (1, -1):
                    # den**n * p(num/den), all integer
                    val = sum(c * (sgn * num) ** i * den ** (n - i) for i, c in enumerate(coeffs))
                    if val == 0:
                        roots.add(Fraction(sgn * num, den))
    return sorted(roots)
