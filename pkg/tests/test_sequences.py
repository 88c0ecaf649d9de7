from fractions import Fraction as F

import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gfkit import series as ps
from gfkit.exact import binomial
from gfkit.remainders import exp_remainder, log_remainder
from gfkit.sequences import (
    SEQUENCE_ENTRY_SCHEMA,
    Family,
    SequenceEntry,
    bernoulli,
    bernoulli_list,
    howard_A,
    howard_S,
    howard_s,
    rstirling1,
    rstirling1_rewrite,
    rstirling2,
    rstirling2_rewrite,
    seq_F,
    seq_Q,
    stirling1,
    stirling2_gf,
    stirling2_sum,
    table,
)
from oracles import (
    bernoulli_oracle,
    cycle_counts,
    partition_counts,
    stirling1_recurrence,
    stirling2_recurrence,
)

S2 = stirling2_recurrence(30)
S1 = stirling1_recurrence(30)


# -- second kind


@pytest.mark.parametrize("n", range(12))
def test_stirling2_diagonals(n):
    assert stirling2_sum(n, n) == 1
    assert stirling2_sum(n + 1, n) == n * (n + 1) // 2
    assert stirling2_gf(n, n) == 1


def test_stirling2_examples():
    assert stirling2_sum(4, 2) == (16 - 2) // 2 == 7
    assert stirling2_gf(3, 2) == 3
    assert stirling2_gf(2, 3) == 0
    assert stirling2_sum(2, 3) == 0


def test_stirling2_against_recurrence():
    for m in range(31):
        for n in range(m + 1):
            assert stirling2_sum(m, n) == S2[m][n]
            assert stirling2_gf(m, n) == S2[m][n]


def test_stirling2_against_partitions():
    for m in range(8):
        counts = partition_counts(m, 0, 1)
        for n in range(m + 1):
            assert stirling2_gf(m, n) == counts.get(n, 0)


# -- first kind


def test_stirling1_examples():
    assert stirling1(3, 2) == -3
    assert stirling1(3, 1) == 2
    assert all(stirling1(l, l) == 1 for l in range(10))


def test_stirling1_against_recurrence():
    for j in range(26):
        for l in range(j + 1):
            assert stirling1(j, l) == S1[j][l]


def test_stirling1_is_signed_cycle_count():
    for j in range(7):
        counts = cycle_counts(j, 0, 1)
        for l in range(j + 1):
            assert stirling1(j, l) == (-1) ** (j + l) * counts.get(l, 0)


# -- Bernoulli


def test_bernoulli_examples():
    assert bernoulli(0) == 1
    assert bernoulli(1) == F(-1, 2)
    assert bernoulli(3) == 0
    assert bernoulli(4) == F(-1, 30)


def test_bernoulli_against_akiyama_tanigawa():
    assert bernoulli_list(40) == bernoulli_oracle(40)
    assert [bernoulli(k) for k in range(15)] == bernoulli_oracle(14)


def test_bernoulli_odd_vanish():
    values = bernoulli_list(41)
    assert all(values[2 * k + 1] == 0 for k in range(1, 21))


# -- Howard


def test_howard_S_reduces_to_stirling2():
    assert howard_S(0, 2, 1) == 3
    for m in range(10):
        for j in range(10):
            assert howard_S(0, m, j) == S2[j + m][m]
    assert all(howard_S(r, 0, 0) == 1 for r in range(5))


def test_howard_S_counts_partitions_with_large_blocks():
    # S_r(n, l): partitions of an n-set into l blocks of size > r
    for r in range(1, 4):
        for l in range(1, 4):
            for j in range(0, 10 - (r + 1) * l + 1):
                n = j + (r + 1) * l
                assert howard_S(r, l, j) == partition_counts(n, 0, r + 1).get(l, 0)


def test_howard_s_examples():
    assert howard_s(0, 1, 3) == 2
    assert howard_s(1, 1, 1) == 0
    assert howard_s(0, 2, 3) == 3


def test_howard_s_sign_relation():
    for j in range(14):
        for l in range(14):
            assert howard_s(0, l, j) == (-1) ** (j + l) * S1[j][l]


def test_howard_s_counts_permutations_with_long_cycles():
    for r in range(1, 3):
        for l in range(1, 4):
            for j in range(8):
                assert howard_s(r, l, j) == cycle_counts(j, 0, r + 1).get(l, 0)


def test_howard_A_is_bernoulli_polynomial_at_r1():
    b = bernoulli_oracle(12)
    for t in (F(0), F(1), F(1, 3), F(-2)):
        for k in range(12):
            expected = sum(binomial(k, i) * b[i] * t ** (k - i) for i in range(k + 1))
            assert howard_A(1, t, k) == expected
    assert howard_A(1, 1, 1) == F(1, 2)
    assert [howard_A(1, 0, k) for k in range(13)] == b


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_howard_A_generating_function(r):
    t = F(2, 5)
    n = 10
    gf = ps.from_egf([howard_A(r, t, j) for j in range(n + 1)])
    assert ps.mul(gf, exp_remainder(r - 1, n)) == ps.exp_cx(t, n)
    assert howard_A(r, t, 0) == 1


def test_howard_A_rejects_r0():
    with pytest.raises(ValueError):
        howard_A(0, 0, 1)


# -- r-Stirling


def test_rstirling1_examples():
    # [3, 2]_1: k = 2, m = 1, r = 1
    assert rstirling1(2, 1, 1) == 3
    assert rstirling1(3, 2, 1) == 6
    assert rstirling1(5, -1, 2) == 0
    for k in range(10):
        for m in range(10):
            assert rstirling1(k, m, 0) == abs(S1[k][m])


def test_rstirling1_counts_permutations():
    for r in range(4):
        for k in range(7 - r + 1):
            counts = cycle_counts(k + r, r, 1)
            for m in range(k + 1):
                assert rstirling1(k, m, r) == counts.get(m + r, 0)


def test_rstirling2_examples():
    assert rstirling2(2, 1, 1) == 3
    assert [rstirling2(k, 1, 1) for k in range(1, 10)] == [2**k - 1 for k in range(1, 10)]
    assert rstirling2(4, -2, 3) == 0
    for k in range(10):
        for m in range(10):
            assert rstirling2(k, m, 0) == S2[k][m]


def test_rstirling2_counts_partitions():
    for r in range(4):
        for k in range(8 - r + 1):
            counts = partition_counts(k + r, r, 1)
            for m in range(k + 1):
                assert rstirling2(k, m, r) == counts.get(m + r, 0)


def test_rstirling_rewrites_agree():
    for r in range(4):
        for m in range(6):
            for k in range(21):
                assert rstirling1(k, m, r) == rstirling1_rewrite(k, m, r)
                assert rstirling2(k, m, r) == rstirling2_rewrite(k, m, r)


# -- open-problem sequences


def test_seq_F_examples():
    assert seq_F(0, 0, 1, 2) == F(2, 3)
    assert all(seq_F(0, s, 0, 0) == 1 for s in range(3))
    assert [seq_F(0, s, 0, k) for s in range(3) for k in range(1, 5)] == [0] * 12


def test_seq_F_reduces_to_first_kind():
    for m in range(5):
        for k in range(16):
            assert seq_F(0, 0, m, k) == F(S1[k + m][m], binomial(k + m, m))
    for r in range(4):
        for m in range(5):
            for k in range(12):
                assert seq_F(r, 0, m, k) == F((-1) ** k * rstirling1(k + m, m, r), binomial(k + m, m))


def test_seq_Q_examples():
    assert seq_Q(0, 0, 1, 2) == F(1, 3)
    assert seq_Q(F(1, 3), 2, F(1, 2), 0) == 1


def test_seq_Q_reduces_to_r_stirling2():
    for r in range(4):
        for m in range(5):
            for k in range(16):
                assert seq_Q(r, 0, m, k) == F(rstirling2(k + m, m, r), binomial(k + m, m))


def test_seq_Q_half_power_squares_back():
    n = 12
    for s in range(3):
        half = ps.from_egf([seq_Q(0, s, F(1, 2), k) for k in range(n + 1)])
        assert ps.mul(half, half) == exp_remainder(s, n)


def test_seq_F_half_power_squares_back():
    n = 12
    for s in range(3):
        half = ps.from_egf([seq_F(0, s, F(1, 2), k) for k in range(n + 1)])
        assert ps.mul(half, half) == log_remainder(s, n)


def test_seq_F_rational_r_factor():
    # (1/(1+z))^{1/3} cubed is 1/(1+z) = sum (-1)^k z^k
    n = 10
    g = ps.from_egf([seq_F(F(1, 3), 0, 0, k) for k in range(n + 1)])
    assert ps.integer_pow(g, 3).coeffs == tuple((-1) ** k for k in range(n + 1))


def test_seq_F_log_base_flag_shifts_index():
    for s in range(3):
        for k in range(8):
            assert seq_F(F(1, 2), s, 2, k, log_base="log1p_over_x") == seq_F(F(1, 2), s + 1, 2, k)
    with pytest.raises(ValueError):
        seq_F(0, 0, 1, 1, log_base="sin")


@given(
    st.fractions(min_value=-3, max_value=3, max_denominator=7),
    st.integers(0, 3),
    st.fractions(min_value=-3, max_value=3, max_denominator=7),
)
def test_open_sequences_start_at_one(r, s, m):
    assert seq_F(r, s, m, 0) == 1
    assert seq_Q(r, s, m, 0) == 1


# -- entries and tables


def test_entry_json_round_trip_and_schema():
    entries = [
        SequenceEntry(Family.STIRLING2, (4, 2), F(7)),
        SequenceEntry(Family.SEQ_F, (F(1, 3), 0, F(1, 2), 3), seq_F(F(1, 3), 0, F(1, 2), 3)),
        SequenceEntry(Family.BERNOULLI, (4,), F(-1, 30)),
    ]
    for e in entries:
        data = e.to_json()
        jsonschema.validate(data, SEQUENCE_ENTRY_SCHEMA)
        assert SequenceEntry.from_json(data) == e
    assert entries[0].to_json() == {"family": "stirling2", "indices": [4, 2], "value": "7"}
    assert entries[1].to_json()["indices"][:2] == ["1/3", 0]


def test_entry_integrality_enforced():
    with pytest.raises(ValueError):
        SequenceEntry(Family.STIRLING1, (3, 2), F(1, 2))


def test_entry_text_and_csv():
    e = SequenceEntry(Family.BERNOULLI, (4,), F(-1, 30))
    assert str(e) == "bernoulli(4) = -1/30"
    assert e.csv_row() == ["4", "-1/30"]


def test_table_stirling2():
    rows = {e.indices: e.value for e in table(Family.STIRLING2, m_max=5)}
    assert rows[(4, 2)] == 7
    assert len(rows) == 21


@pytest.mark.parametrize("family", list(Family))
def test_every_family_tabulates(family):
    kwargs = {"k_max": 4, "m_max": 3}
    if family is Family.HOWARD_A:
        kwargs["r"] = 1
    entries = list(table(family, **kwargs))
    assert entries
    assert all(e.family is family for e in entries)


def test_table_rejects_fractional_r_for_integer_families():
    with pytest.raises(ValueError):
        list(table(Family.RSTIRLING1, r=F(1, 2)))
