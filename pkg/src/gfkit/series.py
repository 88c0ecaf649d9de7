"""Truncated formal power series over the rationals.

A :class:`PowerSeries` stores the ordinary coefficients c_0..c_N of
sum c_k x^k together with its truncation order N.  Binary operations truncate
to the smaller order and never extend a series silently.  Exponential
generating function coefficients are a view, k! * c_k.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import RationalLike, as_rational, factorial, format_rational, parse_rational


class SeriesError(ValueError):
    """Base class for precondition failures of series operations."""


class TruncationError(SeriesError):
    """The requested result needs more terms than the series carries."""


class NotInvertibleError(SeriesError):
    pass


class NotDivisibleError(SeriesError):
    pass


class PowerSeries:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike]):
        cs = tuple(as_rational(c) for c in coeffs)
        if not cs:
            raise TruncationError("a power series needs at least the constant term")
        self._coeffs = cs

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return coefficient(self, k)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        # Equal on the common prefix: a truncation never disagrees with its source.
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(len(self), len(other))
        return self._coeffs[:n] == other._coeffs[:n]

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        inner = ", ".join(format_rational(c) for c in self._coeffs)
        return f"PowerSeries([{inner}])"

    def __str__(self) -> str:
        return format_series(self)

    def __add__(self, other: PowerSeries | RationalLike) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            other = constant(other, self.order)
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> PowerSeries:
        return scale(self, -1)

    def __sub__(self, other: PowerSeries | RationalLike) -> PowerSeries:
        return self + (-other)

    def __rsub__(self, other: RationalLike) -> PowerSeries:
        return (-self) + other

    def __mul__(self, other: PowerSeries | RationalLike) -> PowerSeries:
        if isinstance(other, PowerSeries):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> PowerSeries:
        return integer_pow(self, exponent)

    def truncate(self, order: int) -> PowerSeries:
        if order < 0 or order > self.order:
            raise TruncationError(f"cannot truncate order {self.order} series to order {order}")
        return PowerSeries(self._coeffs[: order + 1])

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all are zero."""
        for k, c in enumerate(self._coeffs):
            if c:
                return k
        return None

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [format_rational(c) for c in self._coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> PowerSeries:
        coeffs = [parse_rational(c) for c in data["coeffs"]]
        if len(coeffs) != data["order"] + 1:
            raise ValueError(f"order {data['order']} does not match {len(coeffs)} coefficients")
        return cls(coeffs)


def format_series(a: PowerSeries, show_order: bool = True, var: str = "x") -> str:
    """Render as "c0 + c1*x + c2*x^2 + ... (order N)", skipping zero terms."""
    parts: list[str] = []
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = format_rational(abs(c))
        if k == 0:
            term = mag
        else:
            power = var if k == 1 else f"{var}^{k}"
            term = power if mag == "1" else f"{mag}*{power}"
        if not parts:
            parts.append(term if sign == "+" else f"-{term}")
        else:
            parts.append(f"{sign} {term}")
    text = " ".join(parts) if parts else "0"
    if show_order:
        text += f" (order {a.order})"
    return text


# -- builders -----------------------------------------------------------------


def zero(order: int) -> PowerSeries:
    return constant(0, order)


def one(order: int) -> PowerSeries:
    return constant(1, order)


def constant(c: RationalLike, order: int) -> PowerSeries:
    _check_order(order)
    return PowerSeries([c] + [0] * order)


def monomial(c: RationalLike, degree: int, order: int) -> PowerSeries:
    _check_order(order)
    if degree < 0:
        raise ValueError(f"monomial degree must be >= 0, got {degree}")
    coeffs: list[RationalLike] = [0] * (order + 1)
    if degree <= order:
        coeffs[degree] = c
    return PowerSeries(coeffs)


def exp_cx(c: RationalLike, order: int) -> PowerSeries:
    """e^{c x} = sum c^k x^k / k!."""
    _check_order(order)
    c = as_rational(c)
    return PowerSeries(c**k / factorial(k) for k in range(order + 1))


def log1p(order: int) -> PowerSeries:
    """ln(1 + x) = sum_{k>=1} (-1)^{k-1} x^k / k."""
    _check_order(order)
    return PowerSeries([0] + [Fraction((-1) ** (k - 1), k) for k in range(1, order + 1)])


def log_geometric(order: int) -> PowerSeries:
    """ln(1 / (1 - x)) = sum_{k>=1} x^k / k."""
    _check_order(order)
    return PowerSeries([0] + [Fraction(1, k) for k in range(1, order + 1)])


def geometric_pow(r: RationalLike, order: int) -> PowerSeries:
    """(1 / (1 - x))^r for rational r, as exp(r ln(1/(1-x)))."""
    return exp_series(scale(log_geometric(order), r))


BUILDERS = ("exp_cx", "log1p", "log_geometric", "geometric_pow", "monomial", "constant")


def build(kind: str, order: int, **params) -> PowerSeries:
    """Dispatch to a named builder; ``params`` carry c, r or d as needed."""
    if kind == "exp_cx":
        return exp_cx(params.get("c", 1), order)
    if kind == "log1p":
        return log1p(order)
    if kind == "log_geometric":
        return log_geometric(order)
    if kind == "geometric_pow":
        return geometric_pow(params["r"], order)
    if kind == "monomial":
        return monomial(params.get("c", 1), params["d"], order)
    if kind == "constant":
        return constant(params.get("c", 1), order)
    raise ValueError(f"unknown series kind {kind!r}")


# -- ring operations -----------------------------------------------------------


def add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order) + 1
    return PowerSeries(x + y for x, y in zip(a.coeffs[:n], b.coeffs[:n]))


def scale(a: PowerSeries, c: RationalLike) -> PowerSeries:
    c = as_rational(c)
    return PowerSeries(c * x for x in a.coeffs)


def mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the smaller order."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        ai = ac[i]
        if not ai:
            continue
        for j in range(n + 1 - i):
            bj = bc[j]
            if bj:
                out[i + j] += ai * bj
    return PowerSeries(out)


def integer_pow(a: PowerSeries, exponent: int) -> PowerSeries:
    """a**exponent for an integer exponent >= 0, at the order of ``a``."""
    if exponent < 0:
        raise ValueError(f"integer_pow needs exponent >= 0, got {exponent}")
    n = a.order
    if exponent == 0:
        return one(n)
    v = a.valuation()
    if v is None or v * exponent > n:
        return zero(n)
    # Factor out x^v, raise the unit part, shift back.
    unit = PowerSeries(a.coeffs[v : v + n - v * exponent + 1])
    powered = _unit_power(unit, exponent)
    return PowerSeries([0] * (v * exponent) + list(powered.coeffs))


def _unit_power(b: PowerSeries, exponent: int) -> PowerSeries:
    # Power recurrence for b_0 != 0: k b0 p_k = sum_j ((e+1) j - k) b_j p_{k-j}.
    bc = b.coeffs
    b0 = bc[0]
    p = [b0**exponent]
    for k in range(1, b.order + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if bc[j]:
                acc += ((exponent + 1) * j - k) * bc[j] * p[k - j]
        p.append(acc / (k * b0))
    return PowerSeries(p)


def reciprocal(a: PowerSeries) -> PowerSeries:
    """1/a via b_0 = 1/a_0, b_k = -(1/a_0) sum_{j=1}^k a_j b_{k-j}."""
    ac = a.coeffs
    if not ac[0]:
        raise NotInvertibleError("series with zero constant term has no reciprocal")
    inv0 = 1 / ac[0]
    b = [inv0]
    for k in range(1, a.order + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if ac[j]:
                acc += ac[j] * b[k - j]
        b.append(-inv0 * acc)
    return PowerSeries(b)


def derivative(a: PowerSeries) -> PowerSeries:
    if a.order < 1:
        raise TruncationError("derivative of an order-0 series carries no terms")
    return PowerSeries((k + 1) * c for k, c in enumerate(a.coeffs[1:]))


def nth_derivative(a: PowerSeries, m: int) -> PowerSeries:
    for _ in range(m):
        a = derivative(a)
    return a


def log_series(a: PowerSeries) -> PowerSeries:
    """ln(a) for c_0 = 1, solving a * L' = a' term by term."""
    ac = a.coeffs
    if ac[0] != 1:
        raise SeriesError(f"log_series needs constant term 1, got {format_rational(ac[0])}")
    out = [Fraction(0)]
    for k in range(1, a.order + 1):
        acc = k * ac[k]
        for j in range(1, k):
            if ac[k - j]:
                acc -= j * out[j] * ac[k - j]
        out.append(acc / k)
    return PowerSeries(out)


def exp_series(a: PowerSeries) -> PowerSeries:
    """e^a for c_0 = 0, solving E' = a' E term by term."""
    ac = a.coeffs
    if ac[0] != 0:
        raise SeriesError(f"exp_series needs constant term 0, got {format_rational(ac[0])}")
    out = [Fraction(1)]
    for k in range(1, a.order + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if ac[j]:
                acc += j * ac[j] * out[k - j]
        out.append(acc / k)
    return PowerSeries(out)


def rational_pow(a: PowerSeries, alpha: RationalLike) -> PowerSeries:
    """a**alpha = exp(alpha ln a) for a series with constant term 1."""
    if a.coeffs[0] != 1:
        raise SeriesError(f"rational_pow needs constant term 1, got {format_rational(a.coeffs[0])}")
    return exp_series(scale(log_series(a), alpha))


def shift_divide(a: PowerSeries, r: int) -> PowerSeries:
    """Divide by x^r; the dropped coefficients must all vanish."""
    if r < 0:
        raise ValueError(f"shift must be >= 0, got {r}")
    if r > a.order:
        raise TruncationError(f"cannot divide an order {a.order} series by x^{r}")
    for k in range(r):
        if a.coeffs[k]:
            raise NotDivisibleError(f"coefficient of x^{k} is {format_rational(a.coeffs[k])}, not 0")
    return PowerSeries(a.coeffs[r:])


def compose_neg(a: PowerSeries) -> PowerSeries:
    """a(-x)."""
    return PowerSeries(c if k % 2 == 0 else -c for k, c in enumerate(a.coeffs))


# -- coefficient access --------------------------------------------------------


def coefficient(a: PowerSeries, k: int) -> Fraction:
    if not 0 <= k <= a.order:
        raise IndexError(f"coefficient index {k} outside 0..{a.order}")
    return a.coeffs[k]


def egf_coefficient(a: PowerSeries, k: int) -> Fraction:
    return math.factorial(k) * coefficient(a, k)


def from_egf(values: Sequence[RationalLike]) -> PowerSeries:
    """Series whose k-th EGF coefficient is values[k]."""
    return PowerSeries(as_rational(v) / factorial(k) for k, v in enumerate(values))


def _check_order(order: int) -> None:
    if order < 0:
        raise TruncationError(f"truncation order must be >= 0, got {order}")
