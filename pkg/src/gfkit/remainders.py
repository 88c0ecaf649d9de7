"""Normalized Maclaurin remainders.

For a series f with c_{n+1} != 0, the n-th normalized remainder drops the
degree <= n part, divides by x^{n+1} and rescales so the constant term is 1:

    T_n[f](x) = (f(x) - sum_{k<=n} c_k x^k) / (c_{n+1} x^{n+1})

Two named specializations are provided with closed-form coefficients:
``exp_remainder(r)`` is T_r[e^x] and ``log_remainder(r)`` is
(-1)^r (r+1)/x^r [ln(1+x)/x - sum_{j<r} (-1)^j x^j/(j+1)], which equals
T_r[ln(1+x)] and T_{r-1}[ln(1+x)/x] (for r >= 1) under the general definition.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import series as ps
from .exact import factorial
from .series import PowerSeries, SeriesError, TruncationError


class DegenerateRemainderError(SeriesError):
    """The (n+1)-th Maclaurin coefficient vanishes, so T_n is undefined."""


def normalized_remainder(f: PowerSeries, n: int) -> PowerSeries:
    if n < 0:
        raise ValueError(f"remainder index must be >= 0, got {n}")
    if n + 1 > f.order:
        raise TruncationError(f"T_{n} needs a series of order >= {n + 1}, got {f.order}")
    lead = f.coeffs[n + 1]
    if not lead:
        raise DegenerateRemainderError(f"coefficient of x^{n + 1} is 0; T_{n} is undefined")
    return PowerSeries(c / lead for c in f.coeffs[n + 1 :])


def exp_remainder(r: int, order: int) -> PowerSeries:
    """T_r[e^x]; coefficient k is (r+1)! / (k+r+1)!."""
    _check(r, order)
    top = factorial(r + 1)
    return PowerSeries(Fraction(top, factorial(k + r + 1)) for k in range(order + 1))


def log_remainder(r: int, order: int) -> PowerSeries:
    """T_r[ln(1+x)]; coefficient j is (r+1) (-1)^j / (r+1+j)."""
    _check(r, order)
    return PowerSeries(Fraction((r + 1) * (-1) ** j, r + 1 + j) for j in range(order + 1))


def log1p_over_x(order: int) -> PowerSeries:
    """ln(1+x)/x = sum (-1)^k x^k/(k+1)."""
    return ps.shift_divide(ps.log1p(order + 1), 1)


class Base(enum.Enum):
    EXP = "exp"
    LOG1P = "log1p"
    LOG1P_OVER_X = "log1p_over_x"

    def series(self, order: int) -> PowerSeries:
        if self is Base.EXP:
            return ps.exp_cx(1, order)
        if self is Base.LOG1P:
            return ps.log1p(order)
        return log1p_over_x(order)


@dataclass(frozen=True)
class RemainderSpec:
    base: Base
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"remainder index must be >= 0, got {self.n}")

    def series(self, order: int) -> PowerSeries:
        """T_n[base] to the given order via the general definition."""
        return normalized_remainder(self.base.series(order + self.n + 1), self.n)

    def __str__(self) -> str:
        label = {Base.EXP: "e^x", Base.LOG1P: "ln(1+x)", Base.LOG1P_OVER_X: "ln(1+x)/x"}[self.base]
        return f"T_{self.n}[{label}]"


def _check(r: int, order: int) -> None:
    if r < 0:
        raise ValueError(f"remainder index must be >= 0, got {r}")
    if order < 0:
        raise TruncationError(f"truncation order must be >= 0, got {order}")
