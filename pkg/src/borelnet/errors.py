"""Exception hierarchy for borelnet."""


class BorelError(Exception):
    """Base class for all library errors."""


class InadmissibleMoveError(BorelError, ValueError):
    pass


class DegreeMismatchError(BorelError, ValueError):
    pass


class NotAdmissibleError(BorelError, ValueError):
    """The Hilbert polynomial has no Gotzmann decomposition."""


class DegreeBoundError(BorelError, ValueError):
    """deg p >= n, so no subscheme of P^n has this Hilbert polynomial."""


class ParseError(BorelError, ValueError):
    pass


class NotBorelError(BorelError, ValueError):
    """A monomial set is not closed under increasing moves."""


class PivotNotMinimalError(BorelError, ValueError):
    pass


class IncompatibleError(BorelError, ValueError):
    pass


class MismatchedSourceError(BorelError, ValueError):
    pass


class InvariantError(BorelError, RuntimeError):
    """An internal consistency check failed; this indicates a bug."""
