"""Exhaustive exact checks of the alternating binomial-power identities.

Each check produces an :class:`IdentityReport` listing every instance with
both sides' exact values.  A report is green iff every instance matches.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import sequences as sq
from . import series as ps
from .exact import binomial, factorial, format_rational
from .remainders import exp_remainder
from .series import TruncationError


class IdentityId(enum.Enum):
    ID12 = "ID12"
    ID67 = "ID67"
    ID84 = "ID84"
    ID85 = "ID85"
    ID67R = "ID67R"
    ID84R = "ID84R"
    ID85R = "ID85R"
    BINOMIAL_SERIES = "BINOMIAL_SERIES"
    DERIV_LIMIT = "DERIV_LIMIT"
    CROSS_CHECKS = "CROSS_CHECKS"


@dataclass(frozen=True)
class Instance:
    params: dict
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "params": self.params,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "pass": self.passed,
        }


@dataclass
class IdentityReport:
    identity: IdentityId
    range: dict
    instances: list[Instance] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.instances)

    @property
    def failures(self) -> list[Instance]:
        return [i for i in self.instances if not i.passed]

    def add(self, params: dict, lhs, rhs) -> None:
        self.instances.append(Instance(params, Fraction(lhs), Fraction(rhs)))

    def extend(self, other: IdentityReport) -> None:
        self.instances.extend(other.instances)

    def to_json(self) -> dict:
        return {
            "identity": self.identity.value,
            "range": self.range,
            "instances": len(self.instances),
            "failures": [i.to_json() for i in self.failures],
            "pass": self.passed,
        }

    def summary(self) -> str:
        bounds = ", ".join(f"{k}={v}" for k, v in self.range.items())
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failing)"
        return f"{self.identity.value:<16} {bounds:<28} {len(self.instances):>6} instances  {status}"


# -- the sums ------------------------------------------------------------------------


def alternating_power_sum(m: int, n: int) -> int:
    """sum_{k=0}^n C(n,k) (n-k)^m (-1)^k, with 0^0 = 1."""
    if m < 0 or n < 0:
        raise ValueError(f"alternating_power_sum needs m, n >= 0, got ({m}, {n})")
    return sum(binomial(n, k) * (n - k) ** m * (-1) ** k for k in range(n + 1))


def reflected_power_sum(m: int, n: int) -> int:
    """sum_{k=0}^n C(n,k) k^m (-1)^k, the k -> n-k form."""
    if m < 0 or n < 0:
        raise ValueError(f"reflected_power_sum needs m, n >= 0, got ({m}, {n})")
    return sum(binomial(n, k) * k**m * (-1) ** k for k in range(n + 1))


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def verify_identity(identity: IdentityId | str, n_max: int) -> IdentityReport:
    identity = IdentityId(identity)
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    report = IdentityReport(identity, {"n_max": n_max})
    for n in range(n_max + 1):
        if identity is IdentityId.ID12:
            lhs = sum(binomial(n, k) * (-1) ** k for k in range(n + 1))
            report.add({"n": n}, lhs, 1 if n == 0 else 0)
        elif identity is IdentityId.ID84:
            for m in range(n):
                report.add({"m": m, "n": n}, alternating_power_sum(m, n), 0)
        elif identity is IdentityId.ID67:
            report.add({"n": n}, alternating_power_sum(n, n), factorial(n))
        elif identity is IdentityId.ID85:
            report.add({"n": n}, alternating_power_sum(n + 1, n), n * factorial(n + 1) // 2)
        elif identity is IdentityId.ID84R:
            for m in range(n):
                report.add({"m": m, "n": n}, reflected_power_sum(m, n), 0)
        elif identity is IdentityId.ID67R:
            report.add({"n": n}, reflected_power_sum(n, n), _sign(n) * factorial(n))
        elif identity is IdentityId.ID85R:
            rhs = _sign(n) * n * factorial(n + 1) // 2
            report.add({"n": n}, reflected_power_sum(n + 1, n), rhs)
        else:
            raise ValueError(f"{identity.value} is not a closed-form identity; use its own verifier")
    return report


# -- series-level checks ---------------------------------------------------------------


def binomial_expansion_series(n: int, order: int) -> ps.PowerSeries:
    """sum_k C(n,k) (-1)^k e^{(n-k) x}, term by term."""
    total = ps.zero(order)
    for k in range(n + 1):
        total = total + ps.scale(ps.exp_cx(n - k, order), binomial(n, k) * (-1) ** k)
    return total


def verify_binomial_series(n: int, order: int) -> IdentityReport:
    """Coefficientwise check of sum_k C(n,k)(-1)^k e^{(n-k)x} = (e^x - 1)^n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    report = IdentityReport(IdentityId.BINOMIAL_SERIES, {"n": n, "order": order})
    lhs = binomial_expansion_series(n, order)
    rhs = ps.integer_pow(ps.exp_cx(1, order) - 1, n)
    for j in range(order + 1):
        report.add({"n": n, "coefficient": j}, lhs.coeffs[j], rhs.coeffs[j])
    return report


def stirling_power_series(n: int, order: int) -> ps.PowerSeries:
    """sum_k S(k+n,n)/C(k+n,n) x^{k+n}/k!, assembled from the alternating sum."""
    coeffs: list = [0] * (order + 1)
    for k in range(order - n + 1):
        coeffs[k + n] = Fraction(sq.stirling2_sum(k + n, n), binomial(k + n, n) * factorial(k))
    return ps.PowerSeries(coeffs)


def verify_derivative_limit(m: int, n: int, order: int, power: ps.PowerSeries | None = None) -> IdentityReport:
    """Differentiate the expansion of (e^x - 1)^n m times and read off x = 0.

    The constant term is compared with the alternating power sum and with
    n! S(m, n) (zero when n > m).  ``power`` may pass a precomputed
    (e^x - 1)^n of at least the given order.
    """
    if m < 0 or n < 0:
        raise ValueError(f"m, n must be >= 0, got ({m}, {n})")
    if order < m + n:
        raise TruncationError(f"order {order} < m + n = {m + n}")
    if power is None:
        power = ps.integer_pow(ps.exp_cx(1, order) - 1, n)
    else:
        power = power.truncate(order)
    report = IdentityReport(IdentityId.DERIV_LIMIT, {"m": m, "n": n, "order": order})
    # Stirling-coefficient form of the same series must agree before differentiating.
    expanded = stirling_power_series(n, order)
    for j in range(order + 1):
        report.add({"m": m, "n": n, "check": "series", "coefficient": j}, power.coeffs[j], expanded.coeffs[j])
    limit = ps.nth_derivative(power, m).coeffs[0]
    lhs_limit = ps.nth_derivative(binomial_expansion_series(n, order), m).coeffs[0]
    closed = factorial(n) * sq.stirling2_sum(m, n) if m >= n else 0
    report.add({"m": m, "n": n, "check": "sum"}, limit, alternating_power_sum(m, n))
    report.add({"m": m, "n": n, "check": "lhs_limit"}, lhs_limit, limit)
    report.add({"m": m, "n": n, "check": "closed_form"}, limit, closed)
    return report


def verify_derivative_limits(mn_max: int, pad: int = 5) -> IdentityReport:
    """verify_derivative_limit(m, n, m + n + pad) for all m, n <= mn_max."""
    report = IdentityReport(IdentityId.DERIV_LIMIT, {"mn_max": mn_max, "pad": pad})
    top = 2 * mn_max + pad
    e1 = ps.exp_cx(1, top) - 1
    for n in range(mn_max + 1):
        power = ps.integer_pow(e1, n)
        for m in range(mn_max + 1):
            report.extend(verify_derivative_limit(m, n, m + n + pad, power))
    return report


def verify_binomial_series_range(n_max: int, order: int) -> IdentityReport:
    report = IdentityReport(IdentityId.BINOMIAL_SERIES, {"n_max": n_max, "order": order})
    for n in range(n_max + 1):
        report.extend(verify_binomial_series(n, order))
    return report


# -- cross-family reductions --------------------------------------------------------------

DEFAULT_BOUNDS = {
    "stirling2": 40,
    "reduction": 25,
    "rstirling_r": 3,
    "rstirling_m": 5,
    "rstirling_k": 20,
    "open_r": 3,
    "open_m": 4,
    "open_k": 15,
    "bernoulli": 40,
}


def cross_check_suite(bounds: dict | None = None) -> IdentityReport:
    """Every cross-family reduction and two-route equality, aggregated."""
    b = dict(DEFAULT_BOUNDS)
    if bounds:
        unknown = set(bounds) - set(b)
        if unknown:
            raise ValueError(f"unknown bounds {sorted(unknown)}")
        b.update(bounds)
    if any(v < 0 for v in b.values()):
        raise ValueError("bounds must be nonnegative")
    report = IdentityReport(IdentityId.CROSS_CHECKS, dict(sorted(b.items())))

    def check(name: str, params: Iterable[tuple], lhs: Callable, rhs: Callable) -> None:
        for p in params:
            report.add({"check": name, "at": list(p)}, lhs(*p), rhs(*p))

    N = b["stirling2"]
    check("stirling2_gf=sum", ((m, n) for m in range(N + 1) for n in range(m + 1)), sq.stirling2_gf, sq.stirling2_sum)
    check("S(n+1,n)=n(n+1)/2", ((n,) for n in range(N)), lambda n: sq.stirling2_sum(n + 1, n), lambda n: n * (n + 1) // 2)

    R = b["reduction"]
    pairs = [(j, l) for j in range(R + 1) for l in range(R + 1)]
    check("s_0=(-1)^(j+l)s", pairs, lambda j, l: sq.howard_s(0, l, j), lambda j, l: _sign(j + l) * sq.stirling1(j, l))
    check(
        "S_0=S",
        ((m, k) for m in range(R + 1) for k in range(R + 1) if k + m <= R),
        lambda m, k: sq.howard_S(0, m, k),
        lambda m, k: sq.stirling2_sum(k + m, m),
    )
    check("[k,m]_0=|s|", pairs, lambda k, m: sq.rstirling1(k, m, 0), lambda k, m: _sign(k + m) * sq.stirling1(k, m))
    check("{k,m}_0=S", pairs, lambda k, m: sq.rstirling2(k, m, 0), sq.stirling2_sum)

    rr, rm, rk = b["rstirling_r"], b["rstirling_m"], b["rstirling_k"]
    triples = [(k, m, r) for r in range(rr + 1) for m in range(rm + 1) for k in range(rk + 1)]
    check("rstirling1 vertical=rewrite", triples, sq.rstirling1, sq.rstirling1_rewrite)
    check("rstirling2 vertical=rewrite", triples, sq.rstirling2, sq.rstirling2_rewrite)

    orr, om, ok = b["open_r"], b["open_m"], b["open_k"]
    check(
        "F(0,0,m,k)=s(k+m,m)/C(k+m,m)",
        ((m, k) for m in range(om + 1) for k in range(ok + 1)),
        lambda m, k: sq.seq_F(0, 0, m, k),
        lambda m, k: Fraction(sq.stirling1(k + m, m), binomial(k + m, m)),
    )
    check(
        "F(r,0,m,k)=(-1)^k[k+m+r,m+r]_r/C(k+m,m)",
        ((r, m, k) for r in range(orr + 1) for m in range(om + 1) for k in range(ok + 1)),
        lambda r, m, k: sq.seq_F(r, 0, m, k),
        lambda r, m, k: Fraction(_sign(k) * sq.rstirling1(k + m, m, r), binomial(k + m, m)),
    )
    check(
        "Q(r,0,m,k)={k+m+r,m+r}_r/C(k+m,m)",
        ((r, m, k) for r in range(orr + 1) for m in range(om + 1) for k in range(ok + 1)),
        lambda r, m, k: sq.seq_Q(r, 0, m, k),
        lambda r, m, k: Fraction(sq.rstirling2(k + m, m, r), binomial(k + m, m)),
    )

    B = b["bernoulli"]
    bern = sq.bernoulli_list(B)
    check("B_(2k+1)=0", ((k,) for k in range(1, (B - 1) // 2 + 1)), lambda k: bern[2 * k + 1], lambda k: 0)
    unit = ps.mul(exp_remainder(0, B), ps.reciprocal(exp_remainder(0, B)))
    check("((e^x-1)/x)(x/(e^x-1))=1", ((j,) for j in range(B + 1)), lambda j: unit.coeffs[j], lambda j: int(j == 0))
    check("A_(1,k)(0)=B_k", ((k,) for k in range(min(B, 20) + 1)), lambda k: sq.howard_A(1, 0, k), lambda k: bern[k])
    return report


# -- everything ------------------------------------------------------------------------

CLOSED_FORM_IDS = (
    IdentityId.ID12,
    IdentityId.ID84,
    IdentityId.ID67,
    IdentityId.ID85,
    IdentityId.ID84R,
    IdentityId.ID67R,
    IdentityId.ID85R,
)


def verify_all(n_max: int = 50, series_max: int = 15, order: int = 64, bounds: dict | None = None) -> list[IdentityReport]:
    reports = [verify_identity(i, n_max) for i in CLOSED_FORM_IDS]
    reports.append(verify_binomial_series_range(series_max, order))
    reports.append(verify_derivative_limits(series_max))
    reports.append(cross_check_suite(bounds))
    return reports
