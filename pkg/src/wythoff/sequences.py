"""The coupled Wythoff sequences: mex recursion and exact closed form.

Two independent constructions of the same pair of sequences live here.

``build_recursive`` materializes the lower sequence p = 1, 3, 4, 6, 8, ...
and the upper sequence q = 2, 5, 7, 10, 13, ... by the minimal-excludant
rule: p(1) = 1, q(n) = p(n) + n, and p(n+1) is the smallest positive
integer not yet used by either sequence.  Together the two sequences
partition the positive integers, and the builder records a membership
index over the full covered span.

``beatty_p`` / ``beatty_q`` compute the same values in closed form as
floor(n*phi) and floor(n*phi^2), where phi is the golden ratio, using
exact integer arithmetic only (no floating point at any width).  The two
routes are deliberately kept independent so each can serve as an oracle
for the other; ``error_term`` measures their pointwise difference.
"""

from __future__ import annotations

from array import array
from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum
from math import isqrt

from .errors import CapacityError, RangeError

_P_MARK = 1
_Q_MARK = 2


class SeqKind(Enum):
    """Which of the two sequences an integer belongs to."""

    P = "P"
    Q = "Q"


@dataclass(frozen=True)
class Membership:
    """Classification of one integer: the sequence it sits in, and where."""

    kind: SeqKind
    index: int


@dataclass(frozen=True)
class ErrorRecord:
    """Pointwise gap between the recursive p and the closed form.

    ``e = p_n - floor_phi_n``.  Provably |e| <= 1 for genuine tables;
    empirically e = 0 everywhere tested.
    """

    n: int
    p_n: int
    floor_phi_n: int
    e: int


def beatty_p(n: int) -> int:
    """floor(n*phi) by exact integer arithmetic, for n >= 1.

    With phi = (1 + sqrt5)/2, floor(n*phi) = (n + isqrt(5*n^2)) // 2.
    sqrt5 is irrational, so 5*n^2 is never a perfect square beyond the
    integer part and the floor can never be off by one.  Valid for
    arbitrarily large n (Python integers are unbounded).
    """
    if n < 1:
        raise RangeError(f"n must be >= 1, got {n}")
    return (n + isqrt(5 * n * n)) // 2


def beatty_q(n: int) -> int:
    """floor(n*phi^2) for n >= 1; equals beatty_p(n) + n since phi^2 = phi + 1."""
    return beatty_p(n) + n


def floor_inv_phi(n: int) -> int:
    """floor(n/phi) for n >= 1; equals beatty_p(n) - n since 1/phi = phi - 1."""
    return beatty_p(n) - n


class PairTable:
    """Materialized prefix of the coupled sequences with a membership index.

    ``p`` and ``q`` are 1-indexed lists (slot 0 is an unused sentinel)
    holding the first ``n_max`` terms of each sequence.  The membership
    index covers every integer in [1, span] where ``span = q(n_max)``;
    within that span each integer belongs to exactly one sequence.
    Membership indices for the lower sequence may exceed ``n_max``: the
    lower sequence runs ahead of the part of the prefix whose upper
    partner is still in range.

    Tables are built by :func:`build_recursive`; a completed table is
    treated as immutable and is safe to share across threads.
    """

    __slots__ = ("n_max", "p", "q", "span", "_kind", "_kind_index")

    def __init__(
        self,
        n_max: int,
        p: list[int],
        q: list[int],
        kind: bytearray,
        kind_index: array,
    ):
        self.n_max = n_max
        self.p = p
        self.q = q
        self.span = q[n_max]
        self._kind = kind
        self._kind_index = kind_index

    def __repr__(self) -> str:
        return f"PairTable(n_max={self.n_max}, span={self.span})"

    def copy(self) -> "PairTable":
        """Independent deep copy (useful for fault-injection self-tests)."""
        return PairTable(
            self.n_max,
            list(self.p),
            list(self.q),
            bytearray(self._kind),
            array("q", self._kind_index),
        )

    def p_at(self, n: int) -> int:
        """p(n) with a range check, 1 <= n <= n_max."""
        if not 1 <= n <= self.n_max:
            raise RangeError(f"index {n} outside [1, {self.n_max}]")
        return self.p[n]

    def q_at(self, n: int) -> int:
        """q(n) with a range check, 1 <= n <= n_max."""
        if not 1 <= n <= self.n_max:
            raise RangeError(f"index {n} outside [1, {self.n_max}]")
        return self.q[n]

    def classify_integer(self, m: int) -> Membership:
        """The unique (kind, index) with p(index) = m or q(index) = m."""
        if not 1 <= m <= self.span:
            raise RangeError(f"{m} outside the indexed span [1, {self.span}]")
        kind = SeqKind.P if self._kind[m] == _P_MARK else SeqKind.Q
        return Membership(kind, self._kind_index[m])

    def error_term(self, n: int) -> ErrorRecord:
        """Gap record between the recursive p(n) and floor(n*phi)."""
        if not 1 <= n <= self.n_max:
            raise RangeError(f"index {n} outside [1, {self.n_max}]")
        p_n = self.p[n]
        target = beatty_p(n)
        return ErrorRecord(n, p_n, target, p_n - target)

    def next_p_via_count(self, n: int) -> int:
        """p(n+1) computed by the self-referential counting rule.

        Returns n + 1 plus the number of i in [1, n] that appear among
        p(1)..p(n).  The value is computed from the counting rule alone
        so it can be checked against the stored p(n+1) by the identity
        suite rather than assumed equal.
        """
        if not 1 <= n < self.n_max:
            raise RangeError(f"index {n} outside [1, {self.n_max - 1}]")
        count = bisect_right(self.p, n, 1, n + 1) - 1
        return count + n + 1


def build_recursive(n_max: int) -> PairTable:
    """Build the first n_max pairs by the minimal-excludant recursion.

    A rolling cursor tracks the smallest integer not yet assigned to
    either sequence, giving O(q(n_max)) construction time.  After the
    n_max recorded pairs, the recursion keeps assigning lower-sequence
    members until the membership index covers all of [1, q(n_max)]
    (upper values past the span are irrelevant to membership below it).

    The occupancy structure is preallocated at 3*n_max + 2 cells, which
    the step bound p(n+1) - p(n) <= 2 guarantees is enough; exceeding it
    raises :class:`CapacityError`.
    """
    if n_max < 1:
        raise RangeError(f"n_max must be >= 1, got {n_max}")
    cap = 3 * n_max + 2
    kind = bytearray(cap + 2)
    kidx = array("q", bytes(8 * (cap + 2)))
    p = [0] * (n_max + 1)
    q = [0] * (n_max + 1)

    cursor = 1
    for n in range(1, n_max + 1):
        p[n] = cursor
        qn = cursor + n
        if qn > cap:
            raise CapacityError(f"q({n}) = {qn} exceeds the index bound {cap}")
        if kind[qn]:
            raise CapacityError(f"occupancy collision at {qn}; table corrupt")
        q[n] = qn
        kind[cursor] = _P_MARK
        kidx[cursor] = n
        kind[qn] = _Q_MARK
        kidx[qn] = n
        cursor += 1
        while kind[cursor]:
            cursor += 1

    span = q[n_max]
    m = n_max
    while cursor <= span:
        m += 1
        kind[cursor] = _P_MARK
        kidx[cursor] = m
        cursor += 1
        while kind[cursor]:
            cursor += 1

    return PairTable(n_max, p, q, kind[: span + 1], kidx[: span + 1])
