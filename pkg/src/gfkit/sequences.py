"""Combinatorial sequences extracted from their generating functions.

Every family here is read off a truncated series built with
:mod:`gfkit.series`; the required truncation order is derived from the
requested index, so callers never pass one.  Integer-valued families are
checked for a unit denominator on extraction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from . import series as ps
from .exact import RationalLike, as_rational, binomial, factorial, format_rational, parse_rational
from .remainders import exp_remainder, log1p_over_x, normalized_remainder
from .series import PowerSeries

Index = Union[int, Fraction]


class Family(enum.Enum):
    STIRLING2 = "stirling2"
    STIRLING1 = "stirling1"
    BERNOULLI = "bernoulli"
    HOWARD_S = "howard_S"
    HOWARD_s = "howard_s"
    HOWARD_A = "howard_A"
    RSTIRLING1 = "rstirling1"
    RSTIRLING2 = "rstirling2"
    SEQ_F = "F"
    SEQ_Q = "Q"


INTEGER_FAMILIES = frozenset({Family.STIRLING2, Family.STIRLING1, Family.RSTIRLING1, Family.RSTIRLING2})

# Index names per family, in the order the functions below take them.
INDEX_NAMES = {
    Family.STIRLING2: ("m", "n"),
    Family.STIRLING1: ("j", "l"),
    Family.BERNOULLI: ("k",),
    Family.HOWARD_S: ("r", "l", "j"),
    Family.HOWARD_s: ("r", "l", "j"),
    Family.HOWARD_A: ("r", "t", "j"),
    Family.RSTIRLING1: ("k", "m", "r"),
    Family.RSTIRLING2: ("k", "m", "r"),
    Family.SEQ_F: ("r", "s", "m", "k"),
    Family.SEQ_Q: ("r", "s", "m", "k"),
}

SEQUENCE_ENTRY_SCHEMA = {
    "type": "object",
    "required": ["family", "indices", "value"],
    "additionalProperties": False,
    "properties": {
        "family": {"enum": [f.value for f in Family]},
        "indices": {
            "type": "array",
            "items": {
                "anyOf": [
                    {"type": "integer"},
                    {"type": "string", "pattern": r"^[+-]?\d+(/\d+)?$"},
                ]
            },
        },
        "value": {"type": "string", "pattern": r"^-?\d+(/\d+)?$"},
    },
}


@dataclass(frozen=True)
class SequenceEntry:
    family: Family
    indices: tuple[Index, ...]
    value: Fraction

    def __post_init__(self):
        if self.family in INTEGER_FAMILIES and self.value.denominator != 1:
            raise ValueError(f"{self.family.value}{self.indices} has non-integer value {self.value}")

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "indices": [_index_to_json(i) for i in self.indices],
            "value": format_rational(self.value),
        }

    @classmethod
    def from_json(cls, data: dict) -> SequenceEntry:
        indices = tuple(i if isinstance(i, int) else parse_rational(i) for i in data["indices"])
        return cls(Family(data["family"]), indices, parse_rational(data["value"]))

    def csv_row(self) -> list[str]:
        return [format_rational(i) for i in self.indices] + [format_rational(self.value)]

    def __str__(self) -> str:
        args = ", ".join(format_rational(i) for i in self.indices)
        return f"{self.family.value}({args}) = {format_rational(self.value)}"


def _index_to_json(i: Index):
    if isinstance(i, Fraction):
        return i.numerator if i.denominator == 1 else format_rational(i)
    return i


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} extracted as non-integer {value}")
    return value.numerator


def _nonneg(**kwargs: int) -> None:
    for name, v in kwargs.items():
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")


# -- second kind -----------------------------------------------------------------


def stirling2_sum(m: int, n: int) -> int:
    """S(m, n) = (1/n!) sum_k (-1)^k C(n,k) (n-k)^m, and 0 for n > m."""
    _nonneg(m=m, n=n)
    if n > m:
        return 0
    total = sum((-1) ** k * binomial(n, k) * (n - k) ** m for k in range(n + 1))
    q, rem = divmod(total, factorial(n))
    if rem:
        raise ArithmeticError(f"alternating sum for S({m},{n}) not divisible by {n}!")
    return q


def stirling2_gf(m: int, n: int) -> int:
    """S(m, n) as m!/n! times the x^m coefficient of (e^x - 1)^n."""
    _nonneg(m=m, n=n)
    if n > m:
        return 0
    power = ps.integer_pow(ps.exp_cx(1, m) - 1, n)
    return _integral(ps.egf_coefficient(power, m) / factorial(n), f"S({m},{n})")


# -- first kind --------------------------------------------------------------------


def stirling1(j: int, l: int) -> int:
    """Signed s(j, l) from [ln(1+x)/x]^l = sum s(i+l,l)/C(i+l,l) x^i/i!."""
    _nonneg(j=j, l=l)
    if j < l:
        return 0
    i = j - l
    power = ps.integer_pow(log1p_over_x(i), l)
    return _integral(binomial(j, l) * ps.egf_coefficient(power, i), f"s({j},{l})")


# -- Bernoulli ----------------------------------------------------------------------


def bernoulli(k: int) -> Fraction:
    """B_k from x/(e^x - 1), so B_1 = -1/2."""
    _nonneg(k=k)
    return ps.egf_coefficient(ps.reciprocal(exp_remainder(0, k)), k)


def bernoulli_list(n: int) -> list[Fraction]:
    """B_0..B_n from a single reciprocal."""
    _nonneg(n=n)
    inv = ps.reciprocal(exp_remainder(0, n))
    return [ps.egf_coefficient(inv, k) for k in range(n + 1)]


# -- Howard's associated numbers ----------------------------------------------------


def howard_S(r: int, l: int, j: int) -> Fraction:
    """S_r(j + (r+1) l, l), read off (T_r[e^x])^l.

    (T_r[e^x])^l = l! [(r+1)!]^l / [(r+1) l]!
                   * sum_j S_r(j+(r+1)l, l) / C(j+(r+1)l, j) * x^j/j!
    """
    _nonneg(r=r, l=l, j=j)
    power = ps.integer_pow(exp_remainder(r, j), l)
    lead = (r + 1) * l
    scale = Fraction(factorial(lead), factorial(l) * factorial(r + 1) ** l)
    return ps.egf_coefficient(power, j) * binomial(j + lead, j) * scale


def howard_s(r: int, l: int, j: int) -> Fraction:
    """s_r(j, l) from [ln(1/(1-x)) - sum_{i<=r} x^i/i]^l = l! sum s_r(j,l) x^j/j!."""
    _nonneg(r=r, l=l, j=j)
    if j < (r + 1) * l:
        return Fraction(0)
    tail = PowerSeries([0] * (r + 1) + list(ps.log_geometric(j).coeffs[r + 1 :]))
    power = ps.integer_pow(tail, l)
    return ps.egf_coefficient(power, j) / factorial(l)


def howard_A(r: int, t: RationalLike, j: int) -> Fraction:
    """A_{r,j}(t) from e^{xt} / T_{r-1}[e^x]; r = 1 gives Bernoulli polynomials."""
    _nonneg(j=j)
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"howard_A needs r >= 1, got {r!r}")
    gf = ps.mul(ps.exp_cx(t, j), ps.reciprocal(exp_remainder(r - 1, j)))
    return ps.egf_coefficient(gf, j)


# -- r-Stirling numbers -------------------------------------------------------------


def rstirling1(k: int, m: int, r: int) -> int:
    """[k+r, m+r]_r from (1/m!) (1/(1-z))^r (ln(1/(1-z)))^m; zero for m < 0."""
    _nonneg(k=k, r=r)
    if m < 0 or k < m:
        return 0
    gf = ps.mul(ps.geometric_pow(r, k), ps.integer_pow(ps.log_geometric(k), m))
    return _integral(ps.egf_coefficient(gf, k) / factorial(m), f"[{k + r},{m + r}]_{r}")


def rstirling1_rewrite(k: int, m: int, r: int) -> int:
    """[k+r, m+r]_r from the alternating form (1/(1+z))^r [ln(1+z)/z]^m.

    That series is sum_i (-1)^i [i+m+r, m+r]_r / C(i+m, m) z^i/i!.
    """
    _nonneg(k=k, r=r)
    if m < 0 or k < m:
        return 0
    i = k - m
    inverse = ps.rational_pow(_inverse_one_plus_z(i), r)
    gf = ps.mul(inverse, ps.integer_pow(log1p_over_x(i), m))
    value = (-1) ** i * binomial(k, m) * ps.egf_coefficient(gf, i)
    return _integral(value, f"[{k + r},{m + r}]_{r}")


def rstirling2(k: int, m: int, r: int) -> int:
    """{k+r, m+r}_r from (1/m!) e^{rz} (e^z - 1)^m; zero for m < 0."""
    _nonneg(k=k, r=r)
    if m < 0 or k < m:
        return 0
    gf = ps.mul(ps.exp_cx(r, k), ps.integer_pow(ps.exp_cx(1, k) - 1, m))
    return _integral(ps.egf_coefficient(gf, k) / factorial(m), f"{{{k + r},{m + r}}}_{r}")


def rstirling2_rewrite(k: int, m: int, r: int) -> int:
    """{k+r, m+r}_r from e^{rz} (T_0[e^z])^m = sum_i {i+m+r, m+r}_r / C(i+m, m) z^i/i!."""
    _nonneg(k=k, r=r)
    if m < 0 or k < m:
        return 0
    i = k - m
    gf = ps.mul(ps.exp_cx(r, i), ps.integer_pow(exp_remainder(0, i), m))
    return _integral(binomial(k, m) * ps.egf_coefficient(gf, i), f"{{{k + r},{m + r}}}_{r}")


# -- the open-problem sequences -----------------------------------------------------

LOG_BASES = ("log1p", "log1p_over_x")


def seq_F(r: RationalLike, s: int, m: RationalLike, k: int, log_base: str = "log1p") -> Fraction:
    """F(r, s, m, k): k-th EGF coefficient of (1/(1+z))^r (T_s[ln(1+z)])^m.

    ``log_base="log1p_over_x"`` uses T_s[ln(1+z)/z] under the general
    remainder definition instead, which is T_{s+1}[ln(1+z)].
    """
    _nonneg(s=s, k=k)
    if log_base == "log1p":
        base = ps.log1p(k + s + 1)
    elif log_base == "log1p_over_x":
        base = log1p_over_x(k + s + 1)
    else:
        raise ValueError(f"log_base must be one of {LOG_BASES}, got {log_base!r}")
    remainder = normalized_remainder(base, s)
    gf = ps.mul(ps.rational_pow(_inverse_one_plus_z(k), r), ps.rational_pow(remainder, m))
    return ps.egf_coefficient(gf, k)


def seq_Q(r: RationalLike, s: int, m: RationalLike, k: int) -> Fraction:
    """Q(r, s, m, k): k-th EGF coefficient of e^{rz} (T_s[e^z])^m."""
    _nonneg(s=s, k=k)
    gf = ps.mul(ps.exp_cx(r, k), ps.rational_pow(exp_remainder(s, k), m))
    return ps.egf_coefficient(gf, k)


# -- tables -------------------------------------------------------------------------


def table(
    family: Family,
    *,
    k_max: int = 20,
    m_max: int = 20,
    r: RationalLike = 0,
    s: int = 0,
    m: RationalLike = 1,
    t: RationalLike = 0,
) -> Iterator[SequenceEntry]:
    """Entries of one family over a rectangle of indices, in a fixed order.

    Triangular families (stirling1, stirling2) use ``m_max`` for the top row;
    single-row families use ``k_max``; two-parameter families sweep the
    second index to ``m_max`` and the first to ``k_max``.
    """
    _nonneg(k_max=k_max, m_max=m_max)
    if family is Family.STIRLING2:
        for top in range(m_max + 1):
            for n in range(top + 1):
                yield SequenceEntry(family, (top, n), Fraction(stirling2_gf(top, n)))
    elif family is Family.STIRLING1:
        for top in range(m_max + 1):
            for l in range(top + 1):
                yield SequenceEntry(family, (top, l), Fraction(stirling1(top, l)))
    elif family is Family.BERNOULLI:
        for k, b in enumerate(bernoulli_list(k_max)):
            yield SequenceEntry(family, (k,), b)
    elif family in (Family.HOWARD_S, Family.HOWARD_s):
        ri = _int_param(r, "r")
        fn = howard_S if family is Family.HOWARD_S else howard_s
        for l in range(m_max + 1):
            for j in range(k_max + 1):
                yield SequenceEntry(family, (ri, l, j), fn(ri, l, j))
    elif family is Family.HOWARD_A:
        ri = _int_param(r, "r")
        t = as_rational(t)
        for j in range(k_max + 1):
            yield SequenceEntry(family, (ri, t, j), howard_A(ri, t, j))
    elif family in (Family.RSTIRLING1, Family.RSTIRLING2):
        ri = _int_param(r, "r")
        fn = rstirling1 if family is Family.RSTIRLING1 else rstirling2
        for mm in range(m_max + 1):
            for k in range(k_max + 1):
                yield SequenceEntry(family, (k, mm, ri), Fraction(fn(k, mm, ri)))
    elif family in (Family.SEQ_F, Family.SEQ_Q):
        r, m = as_rational(r), as_rational(m)
        fn = seq_F if family is Family.SEQ_F else seq_Q
        for k in range(k_max + 1):
            yield SequenceEntry(family, (r, s, m, k), fn(r, s, m, k))
    else:  # pragma: no cover - the enum is closed
        raise ValueError(f"unknown family {family!r}")


def _inverse_one_plus_z(order: int) -> PowerSeries:
    return ps.reciprocal(ps.add(ps.one(order), ps.monomial(1, 1, order)))


def _int_param(value: RationalLike, name: str) -> int:
    q = as_rational(value)
    if q.denominator != 1 or q < 0:
        raise ValueError(f"{name} must be a nonnegative integer here, got {format_rational(q)}")
    return q.numerator
