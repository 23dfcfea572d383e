"""Integer predicates for the closed forms of N that admit known tilings."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .exact import _factor, squarefree_part


class FormKind(enum.Enum):
    SQUARE = "Square"
    SUM_TWO_SQUARES = "SumTwoSquares"
    TWICE_SQUARE = "TwiceSquare"
    THRICE_SQUARE = "ThriceSquare"
    SIX_TIMES_SQUARE = "SixTimesSquare"


_MULTIPLIER = {
    FormKind.SQUARE: 1,
    FormKind.TWICE_SQUARE: 2,
    FormKind.THRICE_SQUARE: 3,
    FormKind.SIX_TIMES_SQUARE: 6,
}

_LABEL = {
    FormKind.SQUARE: "n²",
    FormKind.SUM_TWO_SQUARES: "e²+f²",
    FormKind.TWICE_SQUARE: "2n²",
    FormKind.THRICE_SQUARE: "3n²",
    FormKind.SIX_TIMES_SQUARE: "6n²",
}


_ORDER = [FormKind.SQUARE, FormKind.TWICE_SQUARE, FormKind.THRICE_SQUARE,
          FormKind.SIX_TIMES_SQUARE, FormKind.SUM_TWO_SQUARES]


@dataclass(frozen=True)
class NForm:
    """A closed form matched by N with its witness ``(e, f)`` or ``(n, 0)``."""

    kind: FormKind
    witness: tuple[int, int]

    def value(self) -> int:
        e, f = self.witness
        if self.kind is FormKind.SUM_TWO_SQUARES:
            return e * e + f * f
        return _MULTIPLIER[self.kind] * e * e

    def describe(self) -> str:
        e, f = self.witness
        if self.kind is FormKind.SUM_TWO_SQUARES:
            return f"{_LABEL[self.kind]} ({e},{f})"
        return f"{_LABEL[self.kind]} (n={e})"

    def sort_key(self):
        # multiples of a square first, then the two-square split
        return _ORDER.index(self.kind), self.witness


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def is_sum_of_two_squares(n: int) -> tuple[int, int] | None:
    """Witness ``(e, f)`` with ``e*e + f*f == n`` and ``e >= f >= 1``; largest e wins."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    e = math.isqrt(n - 1)
    while e * e * 2 >= n:
        rest = n - e * e
        f = math.isqrt(rest)
        if f >= 1 and f * f == rest:
            return e, f
        e -= 1
    return None


def sum_of_two_squares_criterion(n: int) -> bool:
    """Squarefree part has no prime factor congruent to 3 mod 4 (zero parts allowed)."""
    return all(p % 4 != 3 for p in _factor(squarefree_part(n)))


def forms_of(n: int) -> list[NForm]:
    """Every form among n², e²+f², 2n², 3n², 6n² that ``n`` matches."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = []
    for kind, mult in _MULTIPLIER.items():
        if n % mult == 0 and is_square(n // mult):
            out.append(NForm(kind, (math.isqrt(n // mult), 0)))
    w = is_sum_of_two_squares(n)
    if w is not None:
        out.append(NForm(FormKind.SUM_TWO_SQUARES, w))
    return sorted(out, key=NForm.sort_key)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return _factor(n) == {n: 1}
