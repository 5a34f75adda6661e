"""Sequence construction, closed-form kernels, and the table API."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wythoff import (
    CapacityError,
    RangeError,
    SeqKind,
    beatty_p,
    beatty_q,
    build_recursive,
    floor_inv_phi,
)

# First terms, frozen from an independent hand application of the
# smallest-unused rule: p(1)=1 forces q(1)=2; the smallest unused is
# then 3, and so on.
P_FIRST = [1, 3, 4, 6, 8, 9, 11, 12, 14, 16]
Q_FIRST = [2, 5, 7, 10, 13, 15, 18, 20, 23, 26]


def naive_pairs(n_max):
    """Set-based reference construction, deliberately simple and slow."""
    used = set()
    p, q = [0], [0]
    for n in range(1, n_max + 1):
        m = 1
        while m in used:
            m += 1
        p.append(m)
        q.append(m + n)
        used.add(m)
        used.add(m + n)
    return p, q


class TestBuildRecursive:
    def test_first_ten_pairs(self):
        t = build_recursive(10)
        assert t.p[1:] == P_FIRST
        assert t.q[1:] == Q_FIRST

    def test_first_five(self):
        t = build_recursive(5)
        assert t.p[1:] == [1, 3, 4, 6, 8]
        assert t.q[1:] == [2, 5, 7, 10, 13]

    def test_matches_naive_construction(self):
        t = build_recursive(200)
        p, q = naive_pairs(200)
        assert t.p == p
        assert t.q == q

    def test_span_is_last_q(self):
        t = build_recursive(37)
        assert t.span == t.q[37]

    def test_rejects_nonpositive(self):
        with pytest.raises(RangeError):
            build_recursive(0)
        with pytest.raises(RangeError):
            build_recursive(-3)

    def test_single_entry(self):
        t = build_recursive(1)
        assert (t.p[1], t.q[1]) == (1, 2)
        assert t.span == 2


class TestClosedForm:
    def test_known_values(self):
        assert beatty_p(4) == 6
        assert beatty_p(10) == 16
        assert beatty_q(10) == 26
        assert floor_inv_phi(100) == 61

    def test_first_ten(self):
        assert [beatty_p(n) for n in range(1, 11)] == P_FIRST
        assert [beatty_q(n) for n in range(1, 11)] == Q_FIRST

    def test_rejects_nonpositive(self):
        for fn in (beatty_p, beatty_q, floor_inv_phi):
            with pytest.raises(RangeError):
                fn(0)

    @given(st.integers(min_value=1, max_value=10**15))
    def test_q_is_p_plus_n(self, n):
        assert beatty_q(n) == beatty_p(n) + n

    @given(st.integers(min_value=1, max_value=10**6))
    def test_strictly_increasing_with_small_steps(self, n):
        step = beatty_p(n + 1) - beatty_p(n)
        assert step in (1, 2)

    @given(st.integers(min_value=1, max_value=10**9))
    def test_inverse_counts_lower_values(self, n):
        # floor_inv_phi(m + 1) counts lower-sequence values <= m, so
        # applying it just past the n-th lower value recovers n.
        assert floor_inv_phi(beatty_p(n) + 1) == n

    @given(st.integers(min_value=1, max_value=10**6))
    def test_complementarity_pointwise(self, m):
        # every integer is hit by exactly one of the two sequences
        lowers = floor_inv_phi(m + 1)  # lower values <= m
        uppers = m - lowers  # upper values <= m, if the two partition
        is_lower = lowers >= 1 and beatty_p(lowers) == m
        is_upper = uppers >= 1 and beatty_q(uppers) == m
        assert is_lower != is_upper


@pytest.fixture(scope="module")
def table():
    return build_recursive(500)


class TestPairTable:
    def test_classify_lower(self, table):
        m = table.classify_integer(4)
        assert m.kind is SeqKind.P
        assert m.index == 3

    def test_classify_upper(self, table):
        m = table.classify_integer(13)
        assert m.kind is SeqKind.Q
        assert m.index == 5
        first = table.classify_integer(2)
        assert (first.kind, first.index) == (SeqKind.Q, 1)

    def test_classify_covers_span(self, table):
        for v in range(1, table.span + 1):
            m = table.classify_integer(v)
            if m.kind is SeqKind.P:
                assert beatty_p(m.index) == v
            else:
                assert m.index <= table.n_max
                assert table.q[m.index] == v

    def test_classify_indices_past_n_max(self, table):
        # lower values between p(n_max) and q(n_max) carry indices
        # beyond n_max; they must still be correct
        v = table.span - 1  # q(n)-1 = p(p(n)) is always a lower value
        m = table.classify_integer(v)
        assert m.kind is SeqKind.P
        assert m.index > table.n_max
        assert beatty_p(m.index) == v

    def test_classify_out_of_range(self, table):
        with pytest.raises(RangeError):
            table.classify_integer(0)
        with pytest.raises(RangeError):
            table.classify_integer(table.span + 1)

    def test_error_term_zero_small(self, table):
        for n in range(1, 7):
            rec = table.error_term(n)
            assert rec.e == 0
            assert rec.p_n == rec.floor_phi_n

    def test_error_term_range(self, table):
        with pytest.raises(RangeError):
            table.error_term(0)
        with pytest.raises(RangeError):
            table.error_term(table.n_max + 1)

    def test_next_p_via_count(self, table):
        assert table.next_p_via_count(1) == 3
        assert table.next_p_via_count(2) == 4
        assert table.next_p_via_count(5) == 9
        for n in range(1, 400):
            assert table.next_p_via_count(n) == table.p[n + 1]

    def test_next_p_range(self, table):
        with pytest.raises(RangeError):
            table.next_p_via_count(0)
        with pytest.raises(RangeError):
            table.next_p_via_count(table.n_max)

    def test_accessors_check_range(self, table):
        assert table.p_at(10) == 16
        assert table.q_at(10) == 26
        with pytest.raises(RangeError):
            table.p_at(0)
        with pytest.raises(RangeError):
            table.q_at(table.n_max + 1)

    def test_copy_is_independent(self, table):
        dup = table.copy()
        dup.p[3] += 7
        assert table.p[3] == 4
        assert dup.p[3] == 11
        assert dup.q == table.q


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=300))
def test_recursion_agrees_with_closed_form(n_max):
    t = build_recursive(n_max)
    assert t.p[1:] == [beatty_p(n) for n in range(1, n_max + 1)]
    assert t.q[1:] == [beatty_q(n) for n in range(1, n_max + 1)]
