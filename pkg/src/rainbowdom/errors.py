"""Exception types raised by the toolkit."""


class RainbowDomError(Exception):
    """Base class for all domain errors."""


class LoopEdge(RainbowDomError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(RainbowDomError):
    """The same unordered vertex pair appears more than once."""


class IndexOutOfRange(RainbowDomError):
    """A vertex index is outside 0..n-1."""


class ParameterTooSmall(RainbowDomError):
    """A family parameter is below the smallest admissible value."""


class IdentityInConnectionSet(RainbowDomError):
    """The connection set of a Cayley graph contains the identity."""


class NotInverseClosed(RainbowDomError):
    """The connection set of a Cayley graph is not closed under inverses."""


class SizeMismatch(RainbowDomError):
    """A color assignment has a different length than the graph order."""


class ColorOutOfRange(RainbowDomError):
    """A color lies outside 1..k, or k itself is out of the supported range."""


class BadOrder(RainbowDomError):
    """The two color counts of a monotone bound are not strictly increasing."""


class KOutOfRange(RainbowDomError):
    """The color count is outside the range a formula is stated for."""


class UnsupportedK(RainbowDomError):
    """No closed form is available for this color count."""


class TranscriptionMismatch(RainbowDomError):
    """A built-in coloring pattern failed its validity or weight self-check."""


class NotCubic(RainbowDomError):
    """The classifier requires a connection set of size three."""


class NotConnected(RainbowDomError):
    """The classifier requires a connected Cayley graph."""


class InvalidInput(RainbowDomError):
    """An operation received input violating its precondition."""
