"""Exception types raised by tournament constructors and counters."""


class TournamentError(ValueError):
    """Base class for all errors raised by this package."""


class ConflictingArc(TournamentError):
    """A pair of vertices was given more than one orientation."""


class IncompleteTournament(TournamentError):
    """Some pair of vertices was left without an orientation."""


class BadVertex(TournamentError):
    """A vertex index is out of range or a self-loop was requested."""


class LengthMismatch(TournamentError):
    """A serialized record does not carry exactly n*(n-1)/2 orientation bits."""


class BadFormat(TournamentError):
    """A serialized record is structurally malformed."""


class NotATournament(TournamentError):
    """The described orientation relation is not complete and antisymmetric."""


class BadParameter(TournamentError):
    """A numeric parameter violates a constructor's requirements."""


class BadPermutation(TournamentError):
    """A relabeling map is not a bijection on the vertex set."""


class NotAnArc(TournamentError):
    """An edge-level operation was applied to a non-arc."""


class WrongOrder(TournamentError):
    """An operation restricted to 5-vertex tournaments got another order."""
