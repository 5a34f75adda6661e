"""Two-pile subtraction game: rules, a retrograde solver, and fast play.

A state is an unordered pair of pile sizes, kept canonically as
``(a, b)`` with ``a <= b``.  A move removes chips from one pile, or the
same number from both; whoever takes the last chip wins, so the player
to move from ``(0, 0)`` has already lost.

Three independent engines answer "who wins here?":

* :func:`solve_retrograde` sweeps all states up to a cap in increasing
  total-chip order and derives outcomes purely from the move rule.  It
  knows nothing about the sequence machinery and serves as the oracle
  of record at desk scale.
* :func:`classify_closed_form` decides a single state in O(1) integer
  operations: the losing states are exactly the pairs
  ``(floor(d*phi), floor(d*phi^2))`` over d >= 0.
* :func:`best_move` produces a winning move in O(1) by aiming at the
  unique losing state reachable along each move family, again using
  only closed-form arithmetic.
"""

from __future__ import annotations

from array import array
from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum

from .errors import CapacityError, IllegalMoveError, NoWinningMoveError, RangeError
from .sequences import beatty_p


class MoveKind(Enum):
    """Move families: pile A is the smaller pile, pile B the larger."""

    TAKE_A = "take_a"
    TAKE_B = "take_b"
    TAKE_BOTH = "take_both"


class Outcome(Enum):
    """Value of a state for the player about to move."""

    LOSING = "losing"
    WINNING = "winning"


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    amount: int

    def __post_init__(self):
        if self.amount < 1:
            raise IllegalMoveError(f"move amount must be >= 1, got {self.amount}")


@dataclass(frozen=True, order=True)
class GameState:
    """Canonical game state: 0 <= a <= b."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.a > self.b:
            raise RangeError(f"state must satisfy 0 <= a <= b, got ({self.a}, {self.b})")

    @classmethod
    def of(cls, x: int, y: int) -> "GameState":
        """Canonicalize an unordered pair of pile sizes."""
        return cls(min(x, y), max(x, y))

    @property
    def total(self) -> int:
        return self.a + self.b

    @property
    def diff(self) -> int:
        return self.b - self.a


@dataclass(frozen=True)
class Classification:
    """Outcome of a state; winning states may carry one witness move.

    The retrograde solver always attaches a witness; the closed-form
    classifier leaves it to :func:`best_move` on demand.
    """

    state: GameState
    outcome: Outcome
    witness: Move | None = None


def legal_moves(state: GameState) -> list[Move]:
    """All legal moves from ``state``, in a fixed deterministic order.

    Take-from-A for 1..a, then take-from-B for 1..b, then take-from-both
    for 1..a.  Empty exactly at (0, 0).
    """
    a, b = state.a, state.b
    moves = [Move(MoveKind.TAKE_A, k) for k in range(1, a + 1)]
    moves += [Move(MoveKind.TAKE_B, k) for k in range(1, b + 1)]
    moves += [Move(MoveKind.TAKE_BOTH, k) for k in range(1, a + 1)]
    return moves


def apply_move(state: GameState, move: Move) -> GameState:
    """Resulting canonical state, or IllegalMoveError if the move overdraws."""
    a, b, k = state.a, state.b, move.amount
    if move.kind is MoveKind.TAKE_A:
        if k > a:
            raise IllegalMoveError(f"cannot take {k} from a pile of {a}")
        return GameState.of(a - k, b)
    if move.kind is MoveKind.TAKE_B:
        if k > b:
            raise IllegalMoveError(f"cannot take {k} from a pile of {b}")
        return GameState.of(a, b - k)
    if k > a:
        raise IllegalMoveError(f"cannot take {k} from both piles of ({a}, {b})")
    return GameState(a - k, b - k)


class RetrogradeTable:
    """Solved outcomes for every state with larger pile <= cap.

    Backed by flat triangular arrays indexed by (a, b - a); winning
    entries store the witness move found first under the search order
    take-from-both, take-from-A, take-from-B, each with ascending
    amount.  Built by :func:`solve_retrograde`.
    """

    __slots__ = ("cap", "losing_states", "_off", "_outcome", "_wkind", "_wamt")

    _CODE_TO_KIND = {1: MoveKind.TAKE_BOTH, 2: MoveKind.TAKE_A, 3: MoveKind.TAKE_B}

    def __init__(
        self,
        cap: int,
        losing_states: list[GameState],
        off: list[int],
        outcome: bytearray,
        wkind: bytearray,
        wamt: array,
    ):
        self.cap = cap
        self.losing_states = losing_states
        self._off = off
        self._outcome = outcome
        self._wkind = wkind
        self._wamt = wamt

    def __repr__(self) -> str:
        return f"RetrogradeTable(cap={self.cap}, losing={len(self.losing_states)})"

    def classify(self, state: GameState) -> Classification:
        """Stored classification; CapacityError beyond the solved cap."""
        if state.b > self.cap:
            raise CapacityError(
                f"state ({state.a}, {state.b}) outside solved range (cap {self.cap})"
            )
        i = self._off[state.a] + state.diff
        if not self._outcome[i]:
            return Classification(state, Outcome.LOSING)
        move = Move(self._CODE_TO_KIND[self._wkind[i]], self._wamt[i])
        return Classification(state, Outcome.WINNING, move)


def solve_retrograde(cap: int) -> RetrogradeTable:
    """Solve every state with larger pile <= cap by increasing chip total.

    All moves strictly shrink the total, so sweeping totals upward sees
    every successor before the states that reach it.  Per-coordinate
    partner lists and per-difference diagonal lists make each winning
    test a constant-time inspection of the smallest recorded entry,
    giving O(cap^2) overall work for the O(cap^2) states.
    """
    if cap < 0:
        raise RangeError(f"cap must be >= 0, got {cap}")

    size = (cap + 1) * (cap + 2) // 2
    off = [0] * (cap + 1)
    for a in range(1, cap + 1):
        off[a] = off[a - 1] + (cap - a + 2)
    outcome = bytearray(size)
    wkind = bytearray(size)
    wamt = array("q", bytes(8 * size))

    losing: list[GameState] = []
    # partners[v]: other coordinates of losing states containing v, ascending.
    partners: list[list[int]] = [[] for _ in range(cap + 1)]
    # diag[d]: smaller coordinates of losing states with difference d, ascending.
    diag: list[list[int]] = [[] for _ in range(cap + 1)]

    for s in range(2 * cap + 1):
        for a in range(max(0, s - cap), s // 2 + 1):
            b = s - a
            d = b - a
            i = off[a] + d

            dl = diag[d]
            if dl and dl[0] < a:
                outcome[i] = 1
                wkind[i] = 1
                wamt[i] = a - dl[bisect_left(dl, a) - 1]
                continue
            pb = partners[b]
            if pb and pb[0] < a:
                outcome[i] = 1
                wkind[i] = 2
                wamt[i] = a - pb[bisect_left(pb, a) - 1]
                continue
            pa = partners[a]
            if pa and pa[0] < b:
                outcome[i] = 1
                wkind[i] = 3
                wamt[i] = b - pa[bisect_left(pa, b) - 1]
                continue

            st = GameState(a, b)
            losing.append(st)
            diag[d].append(a)
            partners[a].append(b)
            if b != a:
                partners[b].append(a)

    return RetrogradeTable(cap, losing, off, outcome, wkind, wamt)


def _pair_partner(v: int) -> int:
    """The other pile size of the unique losing state containing v.

    Every positive integer appears in exactly one losing pair.  The
    count of lower-sequence values <= v is i = floor((v+1)/phi); v is
    the i-th lower value iff floor(i*phi) = v, in which case its partner
    is v + i.  Otherwise v is an upper value and its partner is i.
    """
    if v == 0:
        return 0
    i = beatty_p(v + 1) - (v + 1)
    if beatty_p(i) == v:
        return v + i
    return i


def is_losing(state: GameState) -> bool:
    """Closed-form membership test for the losing set."""
    d = state.diff
    if d == 0:
        return state.a == 0
    return state.a == beatty_p(d)


def classify_closed_form(state: GameState) -> Classification:
    """O(1) outcome for a single state; no witness (see best_move)."""
    if is_losing(state):
        return Classification(state, Outcome.LOSING)
    return Classification(state, Outcome.WINNING)


def best_move(state: GameState) -> Move:
    """A winning move in O(1), or NoWinningMoveError from losing states.

    Along each move family at most one reachable state is losing: the
    same-difference pair below (take-from-both), the pair completing the
    larger pile (take-from-A), and the pair completing the smaller pile
    (take-from-B).  Candidates are tried in that order, mirroring the
    retrograde solver's witness search, and each is re-verified with the
    closed-form test before being returned.
    """
    if is_losing(state):
        raise NoWinningMoveError(f"({state.a}, {state.b}) is losing; every move loses")
    a, b = state.a, state.b
    d = state.diff

    target_a = beatty_p(d) if d else 0
    if target_a < a and is_losing(GameState(target_a, target_a + d)):
        return Move(MoveKind.TAKE_BOTH, a - target_a)

    other = _pair_partner(b)
    if other < a and is_losing(GameState(other, b)):
        return Move(MoveKind.TAKE_A, a - other)

    other = _pair_partner(a)
    if other < b and is_losing(GameState.of(a, other)):
        return Move(MoveKind.TAKE_B, b - other)

    raise NoWinningMoveError(
        f"no winning move found from ({a}, {b}); classification inconsistent"
    )  # unreachable if the closed form is sound
