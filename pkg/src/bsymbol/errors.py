"""Exception types shared across the package."""


class BSymbolError(Exception):
    """Base class for all domain errors raised by this package."""


class UnsupportedField(BSymbolError):
    """Requested field size is not a supported prime power."""


class DimensionMismatch(BSymbolError):
    """Vectors or matrices with inconsistent shapes or fields."""


class SingularMatrix(BSymbolError):
    """A square matrix expected to be invertible is not."""


class BadWindow(BSymbolError):
    """Read-window size b outside 1 <= b <= n."""


class BudgetExceeded(BSymbolError):
    """Codeword enumeration would exceed the configured budget."""


class NotApplicable(BSymbolError):
    """Operation requires k >= b."""


class NotFaithful(BSymbolError):
    """Operation requires a faithful code (every window spans a b-space)."""


class PrefixMismatch(BSymbolError):
    """Concatenation requires the first b-1 columns to coincide."""


class EndStartMismatch(BSymbolError):
    """Chain concatenation requires end of first == start of second."""


class SpanViolation(BSymbolError):
    """Chain start/end vectors do not span the required (b-1)-space."""


class NoPrimitiveFound(BSymbolError):
    """No primitive polynomial available for the requested (q, k)."""


class NotInCatalog(BSymbolError):
    """No bundled generator matrix for the requested parameters."""


class DegenerateCase(BSymbolError):
    """Bound is vacuous for the given parameters (e.g. k == b)."""


class OutOfRange(BSymbolError):
    """Parameters outside the range covered by the exact-value theorems."""


class ModelTooLarge(BSymbolError):
    """ILP export would exceed the configured variable cap."""


class GmatFormatError(BSymbolError):
    """Malformed GMAT matrix file."""


class InvariantViolation(BSymbolError):
    """An internally recomputed quantity contradicts a guaranteed identity."""
