"""Complementary golden-ratio sequences, the take-away game they solve,
a prime analogue, and a machine-checked identity suite."""

from .errors import (
    CapacityError,
    IllegalMoveError,
    NoWinningMoveError,
    RangeError,
    UnknownIdentityError,
    WythoffError,
)
from .game import (
    Classification,
    GameState,
    Move,
    MoveKind,
    Outcome,
    RetrogradeTable,
    apply_move,
    best_move,
    classify_closed_form,
    is_losing,
    legal_moves,
    solve_retrograde,
)
from .primes import (
    PrimeClaimEvidence,
    PrimeGapTable,
    build_prime_gap,
    check_prime_claim,
    sieve_limit_for,
)
from .sequences import (
    ErrorRecord,
    Membership,
    PairTable,
    SeqKind,
    beatty_p,
    beatty_q,
    build_recursive,
    floor_inv_phi,
)
from .verify import (
    IDENTITY_IDS,
    REGISTRY,
    Counterexample,
    Identity,
    VerificationReport,
    fault_injected_reports,
    report_text,
    verify_all,
    verify_identity,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "Classification",
    "Counterexample",
    "ErrorRecord",
    "GameState",
    "IDENTITY_IDS",
    "Identity",
    "IllegalMoveError",
    "Membership",
    "Move",
    "MoveKind",
    "NoWinningMoveError",
    "Outcome",
    "PairTable",
    "PrimeClaimEvidence",
    "PrimeGapTable",
    "RangeError",
    "REGISTRY",
    "RetrogradeTable",
    "SeqKind",
    "UnknownIdentityError",
    "VerificationReport",
    "WythoffError",
    "apply_move",
    "beatty_p",
    "beatty_q",
    "best_move",
    "build_prime_gap",
    "build_recursive",
    "check_prime_claim",
    "classify_closed_form",
    "fault_injected_reports",
    "floor_inv_phi",
    "is_losing",
    "legal_moves",
    "report_text",
    "sieve_limit_for",
    "solve_retrograde",
    "verify_all",
    "verify_identity",
    "__version__",
]
