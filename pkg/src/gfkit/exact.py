"""Exact scalars: integers, reduced rationals, and the small combinatorial helpers.

Integers are Python ints and rationals are :class:`fractions.Fraction`, which
already keeps values reduced with a positive denominator.  Everything else in
the package works over these two types.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_TEXT = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def rational(p: int, q: int = 1) -> Fraction:
    """Return p/q in lowest terms with q > 0.

    Raises ZeroDivisionError when q == 0.
    """
    if q == 0:
        raise ZeroDivisionError(f"rational({p}, 0): zero denominator")
    return Fraction(p, q)


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse the canonical "p/q" (or bare "p") text form.

    Decimal and exponent notations are rejected on purpose.
    """
    match = _RATIONAL_TEXT.match(text.strip())
    if match is None:
        raise ValueError(f"invalid rational {text!r}; expected p or p/q")
    num, den = match.groups()
    return rational(int(num), int(den) if den is not None else 1)


def format_rational(value: RationalLike) -> str:
    """Canonical text: "p/q", or "p" when the denominator is 1."""
    return str(as_rational(value))


def is_integer(value: RationalLike) -> bool:
    return as_rational(value).denominator == 1


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), with 0 for k outside [0, n]."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling_factorial(z: RationalLike, n: int) -> Fraction:
    """z (z-1) ... (z-n+1); the empty product for n == 0 is 1."""
    if n < 0:
        raise ValueError(f"falling factorial length must be >= 0, got {n}")
    z = as_rational(z)
    out = Fraction(1)
    for k in range(n):
        out *= z - k
    return out
