"""Exact generating-function toolkit for Stirling-type numbers.

Truncated power series over the rationals, normalized Maclaurin remainders,
the Stirling/Bernoulli/Howard/r-Stirling families read off their generating
functions, and exhaustive checks of the alternating binomial-power identities.
"""

from .exact import binomial, factorial, falling_factorial, format_rational, parse_rational, rational
from .identities import IdentityId, IdentityReport, alternating_power_sum, verify_identity
from .remainders import RemainderSpec, exp_remainder, log_remainder, normalized_remainder
from .sequences import (
    Family,
    SequenceEntry,
    bernoulli,
    howard_A,
    howard_S,
    howard_s,
    rstirling1,
    rstirling2,
    seq_F,
    seq_Q,
    stirling1,
    stirling2_gf,
    stirling2_sum,
)
from .series import PowerSeries

__all__ = [
    "Family",
    "IdentityId",
    "IdentityReport",
    "PowerSeries",
    "RemainderSpec",
    "SequenceEntry",
    "alternating_power_sum",
    "bernoulli",
    "binomial",
    "exp_remainder",
    "factorial",
    "falling_factorial",
    "format_rational",
    "howard_A",
    "howard_S",
    "howard_s",
    "log_remainder",
    "normalized_remainder",
    "parse_rational",
    "rational",
    "rstirling1",
    "rstirling2",
    "seq_F",
    "seq_Q",
    "stirling1",
    "stirling2_gf",
    "stirling2_sum",
    "verify_identity",
]
