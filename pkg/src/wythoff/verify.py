"""Exhaustive identity suite tying the independent engines together.

Every structural fact the package relies on is registered here as a
named identity with a checker that scans its maximal valid sub-range of
[1, n_max] and reports counterexamples.  The checkers deliberately read
only the public sequence arrays (never the membership cache), so a
corrupted table entry is always visible to them; `fault_injected_reports`
turns that into a self-test of the suite itself.

Registry identifiers are short stable codes (L1, C2, ..., game-equiv,
prime-claim) used verbatim by the command-line interface; descriptions
carry the human-readable statement.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from time import perf_counter
from typing import Callable

from .errors import RangeError, UnknownIdentityError, WythoffError
from .game import solve_retrograde
from .primes import build_prime_gap, check_prime_claim, sieve_limit_for
from .sequences import PairTable, beatty_p, build_recursive

MAX_COUNTEREXAMPLES = 10


@dataclass(frozen=True)
class Counterexample:
    """One failing instance: the index n plus expected/actual values."""

    n: int
    expected: int | str
    actual: int | str

    def to_dict(self) -> dict:
        return {"n": self.n, "expected": self.expected, "actual": self.actual}


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity over the effective range [lo, hi].

    hi < lo marks an empty (vacuously passing) range.  ``passed`` is
    true exactly when ``counterexamples`` is empty; the stored list is
    capped at MAX_COUNTEREXAMPLES entries.  ``elapsed`` is wall-clock
    seconds and is excluded from the machine serialization so identical
    inputs serialize identically.
    """

    identity_id: str
    lo: int
    hi: int
    passed: bool
    counterexamples: tuple[Counterexample, ...]
    elapsed: float

    def to_dict(self) -> dict:
        return {
            "identity": self.identity_id,
            "lo": self.lo,
            "hi": self.hi,
            "passed": self.passed,
            "counterexamples": [ce.to_dict() for ce in self.counterexamples],
        }


@dataclass(frozen=True)
class Identity:
    """Registry entry: stable id, human statement, and the checker.

    ``kind`` selects the checker signature: "table" checkers take
    (PairTable, n_max), "game" checkers take a solver cap, and "prime"
    checkers take a prime-index bound.  ``conjecture`` marks identities
    that are empirically supported but unproven, so their failures are
    reported as conjecture counterexamples rather than engine bugs.
    """

    identity_id: str
    description: str
    kind: str
    check: Callable
    conjecture: bool = False


def _scan(lo: int, hi: int, instance: Callable) -> list[Counterexample]:
    """Collect counterexamples of instance(n) over [lo, hi], capped."""
    ces: list[Counterexample] = []
    for n in range(lo, hi + 1):
        ce = instance(n)
        if ce is not None:
            ces.append(ce)
            if len(ces) >= MAX_COUNTEREXAMPLES:
                break
    return ces


def _index_bound(values: list[int], n_max: int) -> int:
    """Largest i <= n_max with values[i] <= n_max (values 1-indexed ascending)."""
    return bisect_right(values, n_max, 1, n_max + 1) - 1


def _is_lower_value(p: list[int], n_max: int, m: int) -> bool:
    """Whether m appears among p[1..n_max], by binary search on the array."""
    i = bisect_left(p, m, 1, n_max + 1)
    return i <= n_max and p[i] == m


def _check_p_increasing(table: PairTable, n_max: int):
    p = table.p

    def instance(n):
        if p[n] >= p[n + 1]:
            return Counterexample(n, f"> {p[n]}", p[n + 1])
        return None

    return 1, n_max - 1, _scan(1, n_max - 1, instance)


def _check_no_adjacent_q(table: PairTable, n_max: int):
    q = table.q

    def instance(n):
        gap = q[n + 1] - q[n]
        if gap < 2:
            return Counterexample(n, "gap >= 2", gap)
        return None

    return 1, n_max - 1, _scan(1, n_max - 1, instance)


def _check_partition(table: PairTable, n_max: int):
    top = table.p[n_max]
    marks = bytearray(top + 1)
    ces: list[Counterexample] = []
    for value in table.p[1 : n_max + 1]:
        if value <= top:
            if marks[value]:
                ces.append(Counterexample(value, "exactly one sequence", "both"))
                if len(ces) >= MAX_COUNTEREXAMPLES:
                    return 1, top, ces
            else:
                marks[value] = 1
    for value in table.q[1 : n_max + 1]:
        if value <= top:
            if marks[value]:
                ces.append(Counterexample(value, "exactly one sequence", "both"))
                if len(ces) >= MAX_COUNTEREXAMPLES:
                    return 1, top, ces
            else:
                marks[value] = 1
    for value in range(1, top + 1):
        if not marks[value]:
            ces.append(Counterexample(value, "exactly one sequence", "neither"))
            if len(ces) >= MAX_COUNTEREXAMPLES:
                break
    return 1, top, ces


def _check_p_steps(table: PairTable, n_max: int):
    p = table.p

    def instance(n):
        step = p[n + 1] - p[n]
        if step not in (1, 2):
            return Counterexample(n, "step in {1, 2}", step)
        return None

    return 1, n_max - 1, _scan(1, n_max - 1, instance)


def _check_q_steps(table: PairTable, n_max: int):
    q = table.q

    def instance(n):
        step = q[n + 1] - q[n]
        if step not in (2, 3):
            return Counterexample(n, "step in {2, 3}", step)
        return None

    return 1, n_max - 1, _scan(1, n_max - 1, instance)


def _check_no_triple_p(table: PairTable, n_max: int):
    p = table.p

    def instance(n):
        if p[n + 1] == p[n] + 1 and p[n + 2] == p[n] + 2:
            return Counterexample(
                n, "no three consecutive", f"{p[n]}, {p[n] + 1}, {p[n] + 2}"
            )
        return None

    return 1, n_max - 2, _scan(1, n_max - 2, instance)


def _check_q_from_pp(table: PairTable, n_max: int):
    p, q = table.p, table.q
    hi = _index_bound(p, n_max)

    def instance(n):
        want = p[p[n]] + 1
        if q[n] != want:
            return Counterexample(n, want, q[n])
        return None

    return 1, hi, _scan(1, hi, instance)


def _check_step_two_iff_member(table: PairTable, n_max: int):
    p = table.p

    def instance(n):
        step = p[n + 1] - p[n]
        member = _is_lower_value(p, n_max, n)
        if (step == 2) != member:
            return Counterexample(
                n, "step 2 iff n in lower sequence", f"step={step}, member={member}"
            )
        return None

    return 1, n_max - 1, _scan(1, n_max - 1, instance)


def _check_next_p_count(table: PairTable, n_max: int):
    p = table.p

    def instance(n):
        want = table.next_p_via_count(n)
        if p[n + 1] != want:
            return Counterexample(n, want, p[n + 1])
        return None

    return 1, n_max - 1, _scan(1, n_max - 1, instance)


def _check_q_at_p(table: PairTable, n_max: int):
    p, q = table.p, table.q
    hi = _index_bound(p, n_max)

    def instance(n):
        want = p[n] + q[n] - 1
        if q[p[n]] != want:
            return Counterexample(n, want, q[p[n]])
        return None

    return 1, hi, _scan(1, hi, instance)


def _check_p_at_q(table: PairTable, n_max: int):
    p, q = table.p, table.q
    hi = _index_bound(q, n_max)

    def instance(n):
        want = p[n] + q[n]
        if p[q[n]] != want:
            return Counterexample(n, want, p[q[n]])
        return None

    return 1, hi, _scan(1, hi, instance)


def _check_pair_at_q(table: PairTable, n_max: int):
    p, q = table.p, table.q
    hi = _index_bound(q, n_max)

    def instance(n):
        want = (p[n] + q[n], p[n] + 2 * q[n])
        got = (p[q[n]], q[q[n]])
        if got != want:
            return Counterexample(n, f"({want[0]}, {want[1]})", f"({got[0]}, {got[1]})")
        return None

    return 1, hi, _scan(1, hi, instance)


def _check_cross_composition(table: PairTable, n_max: int):
    p, q = table.p, table.q
    hi = _index_bound(q, n_max)

    def instance(n):
        want = q[p[n]] + 1
        if p[q[n]] != want:
            return Counterexample(n, want, p[q[n]])
        return None

    return 1, hi, _scan(1, hi, instance)


def _check_error_bounded(table: PairTable, n_max: int):
    p = table.p

    def instance(n):
        e = p[n] - beatty_p(n)
        if e not in (-1, 0, 1):
            return Counterexample(n, "e in {-1, 0, 1}", e)
        return None

    return 1, n_max, _scan(1, n_max, instance)


def _check_error_zero(table: PairTable, n_max: int):
    p = table.p

    def instance(n):
        e = p[n] - beatty_p(n)
        if e != 0:
            return Counterexample(n, 0, e)
        return None

    return 1, n_max, _scan(1, n_max, instance)


def _check_game_equivalence(cap: int):
    table = build_recursive(cap // 2 + 2)
    expected = {(0, 0)}
    for n in range(1, table.n_max + 1):
        if table.q[n] <= cap:
            expected.add((table.p[n], table.q[n]))
    solved = solve_retrograde(cap)
    actual = {(st.a, st.b) for st in solved.losing_states}
    ces: list[Counterexample] = []
    for a, b in sorted(actual - expected):
        ces.append(Counterexample(a, "not losing", f"solver: ({a}, {b}) losing"))
        if len(ces) >= MAX_COUNTEREXAMPLES:
            return 0, cap, ces
    for a, b in sorted(expected - actual):
        ces.append(Counterexample(a, f"({a}, {b}) losing", "solver: not losing"))
        if len(ces) >= MAX_COUNTEREXAMPLES:
            break
    return 0, cap, ces


def _check_prime_gap_claim(prime_n_max: int):
    if prime_n_max < 3:
        return 3, prime_n_max, []
    table = build_prime_gap(sieve_limit_for(prime_n_max))
    ces: list[Counterexample] = []
    for n in range(3, prime_n_max + 1):
        ev = check_prime_claim(table, n)
        if not ev.holds:
            ces.append(Counterexample(n, ev.p_n - 1, ev.q_at_index))
            if len(ces) >= MAX_COUNTEREXAMPLES:
                break
    return 3, prime_n_max, ces


REGISTRY: dict[str, Identity] = {
    ident.identity_id: ident
    for ident in (
        Identity("L1", "lower sequence strictly increasing", "table", _check_p_increasing),
        Identity("C2", "no two adjacent integers in the upper sequence", "table", _check_no_adjacent_q),
        Identity("L2", "the two sequences partition the positive integers", "table", _check_partition),
        Identity("L3", "lower-sequence steps are 1 or 2", "table", _check_p_steps),
        Identity("C-dq", "upper-sequence steps are 2 or 3", "table", _check_q_steps),
        Identity("C-no3p", "no three consecutive integers in the lower sequence", "table", _check_no_triple_p),
        Identity("L4", "q(n) = p(p(n)) + 1", "table", _check_q_from_pp),
        Identity("L5", "step after n is 2 exactly when n is a lower value", "table", _check_step_two_iff_member),
        Identity("C3", "p(n+1) = n + 1 + |{i <= n : i in lower sequence}|", "table", _check_next_p_count),
        Identity("C-qp", "q(p(n)) = p(n) + q(n) - 1", "table", _check_q_at_p),
        Identity("L-pq", "p(q(n)) = p(n) + q(n)", "table", _check_p_at_q),
        Identity("C-pair", "p(q(n)) = p(n) + q(n) and q(q(n)) = p(n) + 2q(n)", "table", _check_pair_at_q),
        Identity("C-final", "p(q(n)) = q(p(n)) + 1", "table", _check_cross_composition),
        Identity("L-E", "recursive minus closed form lies in {-1, 0, 1}", "table", _check_error_bounded),
        Identity("E-zero", "recursive equals closed form exactly", "table", _check_error_zero, conjecture=True),
        Identity("game-equiv", "retrograde losing set equals the pair set", "game", _check_game_equivalence),
        Identity("prime-claim", "composite(prime(n) - n - 1) = prime(n) - 1", "prime", _check_prime_gap_claim),
    )
}

IDENTITY_IDS: tuple[str, ...] = tuple(REGISTRY)


def verify_identity(
    identity_id: str, n_max: int, table: PairTable | None = None
) -> VerificationReport:
    """Run one registered identity over its valid sub-range of [1, n_max].

    For "game" identities n_max is the solver's pile cap; for "prime"
    identities it bounds the prime index.  A prebuilt table may be
    passed to share construction work across table identities; it must
    cover at least n_max entries.
    """
    ident = REGISTRY.get(identity_id)
    if ident is None:
        raise UnknownIdentityError(
            f"unknown identity {identity_id!r}; known: {', '.join(IDENTITY_IDS)}"
        )
    if n_max < 1:
        raise RangeError(f"n_max must be >= 1, got {n_max}")
    start = perf_counter()
    if ident.kind == "table":
        if table is None:
            table = build_recursive(n_max)
        elif table.n_max < n_max:
            raise RangeError(
                f"supplied table covers {table.n_max} entries, need {n_max}"
            )
        lo, hi, ces = ident.check(table, n_max)
    else:
        lo, hi, ces = ident.check(n_max)
    elapsed = perf_counter() - start
    return VerificationReport(identity_id, lo, hi, not ces, tuple(ces), elapsed)


def verify_all(
    n_max: int, game_cap: int, prime_n_max: int
) -> list[VerificationReport]:
    """Run the whole registry; engine errors become failed reports.

    Table identities share one table built at n_max; "game" identities
    run at game_cap and "prime" identities at prime_n_max.  The result
    list always covers the registry in order, never aborting early.
    """
    if n_max < 1 or game_cap < 1 or prime_n_max < 1:
        raise RangeError("all range arguments must be >= 1")
    table: PairTable | None
    try:
        table = build_recursive(n_max)
    except WythoffError:
        table = None
    bounds = {"table": n_max, "game": game_cap, "prime": prime_n_max}
    reports = []
    for ident in REGISTRY.values():
        try:
            reports.append(verify_identity(ident.identity_id, bounds[ident.kind], table))
        except WythoffError as exc:
            failure = Counterexample(0, "no error", f"{type(exc).__name__}: {exc}")
            reports.append(
                VerificationReport(ident.identity_id, 1, 0, False, (failure,), 0.0)
            )
    return reports


def fault_injected_reports(
    n_max: int = 1000, index: int = 17, delta: int = 1
) -> list[VerificationReport]:
    """Re-run the table identities on a copy with p(index) shifted by delta.

    Self-test of the suite's sensitivity: a genuine table passes
    everything, so a single corrupted entry must flip at least one
    report to failed, otherwise the checkers have gone vacuous.
    """
    if delta == 0:
        raise RangeError("delta must be nonzero to inject a fault")
    if not 1 <= index <= n_max:
        raise RangeError(f"index {index} outside [1, {n_max}]")
    corrupt = build_recursive(n_max).copy()
    corrupt.p[index] += delta
    return [
        verify_identity(ident.identity_id, n_max, corrupt)
        for ident in REGISTRY.values()
        if ident.kind == "table"
    ]


def report_text(report: VerificationReport) -> str:
    """One human-readable line: id, range, status, counterexample count."""
    if report.hi < report.lo:
        span = f"[{report.lo}, {report.hi}] (empty)"
    else:
        span = f"[{report.lo}, {report.hi}]"
    if report.passed:
        status = "passed"
    elif REGISTRY[report.identity_id].conjecture:
        status = "FAILED (conjecture counterexample)"
    else:
        status = "FAILED"
    line = (
        f"{report.identity_id:<12} {span:<20} {status:<8} "
        f"{len(report.counterexamples)} counterexample(s)  "
        f"{report.elapsed * 1000:.1f} ms"
    )
    if report.counterexamples:
        first = report.counterexamples[0]
        line += f"  first: n={first.n}, expected {first.expected}, got {first.actual}"
    return line
