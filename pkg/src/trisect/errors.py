"""Error types shared across the package.

All domain errors derive from TrisectError (a ValueError), so callers can
catch one base class.  The CLI maps DiagramError (bad input data) to exit
code 1 and every other TrisectError (precondition failures) to exit 2.
"""


class TrisectError(ValueError):
    """Base class for every domain error raised by this package."""


class NotUnimodular(TrisectError):
    """A form or matrix required to have determinant +-1 does not."""


class NotSL3(TrisectError):
    """Input is not a 3x3 integer matrix of determinant 1."""


class NotSL2(TrisectError):
    """Input is not a 2x2 integer matrix of determinant 1."""


class FormUndefined(TrisectError):
    """Symmetric-form invariants requested for a non-symmetric input."""


class DiagramError(TrisectError):
    """A diagram file or in-memory diagram violates the data contract."""


class VectorLength(DiagramError):
    """A curve class vector has the wrong length for the surface genus."""


class BoundaryNotSupported(TrisectError):
    """Operation defined only for closed trisections was given b > 0."""


class NotNeighbors(TrisectError):
    """Farey operation requires neighboring (distance +-1) fractions."""


class CellDecompositionMismatch(TrisectError):
    """Pasting inputs do not share a compatible boundary decomposition."""


class CannotDestabilize(TrisectError):
    """Destabilization would drive a genus or sector count negative."""


class IllegalMove(TrisectError):
    """A curve-slide move was applied to a state outside its domain."""


class NotApplicable(TrisectError):
    """A reduction was requested for parameters it does not cover."""


class MalformedWord(TrisectError):
    """A slide word contains letters outside the two-letter alphabet, or a
    reduction was started from a non-initial state."""
