"""Exception types shared across the toolkit."""


class WythoffError(Exception):
    """Base class for all toolkit errors."""


class RangeError(WythoffError, IndexError):
    """An index or argument lies outside its valid range."""


class CapacityError(WythoffError):
    """A requested table or solver would exceed its configured bound."""


class IllegalMoveError(WythoffError, ValueError):
    """A move that is not legal in the given game state."""


class NoWinningMoveError(WythoffError):
    """A winning move was requested from a state that has none."""


class UnknownIdentityError(WythoffError, KeyError):
    """An identity name that is not in the verification registry."""
