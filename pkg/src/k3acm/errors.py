"""Exception hierarchy for the workbench.

Every error the public API can raise derives from WorkbenchError, so callers
(and the CLI) can distinguish "your input is bad" from a genuine bug.
"""


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


# ---- lattice construction / arithmetic -------------------------------------

class NonSymmetricError(WorkbenchError):
    """Gram matrix is not symmetric."""


class BadDimensionsError(WorkbenchError):
    """Gram matrix, label list or coordinate vector has the wrong shape."""


class OddK3DiagonalError(WorkbenchError):
    """A lattice flagged as K3 must have an even diagonal."""


class WrongSignatureError(WorkbenchError):
    """A lattice flagged as K3 must have signature (1, rank-1)."""


class NonPositiveAmpleError(WorkbenchError):
    """The distinguished ample class must have positive self-intersection."""


class DimensionMismatchError(WorkbenchError):
    """Operands live in lattices of different rank."""


class DegenerateFormError(WorkbenchError):
    """The bilinear form is degenerate where a nondegenerate one is required."""


class PreconditionError(WorkbenchError):
    """An operation's documented precondition does not hold."""


# ---- numerology -------------------------------------------------------------

class OddSquareError(WorkbenchError):
    """A self-intersection number that must be even is odd."""


class UnsupportedRankError(WorkbenchError):
    """Operation is only implemented for rank-2 bundles."""


class BadParametersError(WorkbenchError):
    """Numeric parameters outside the documented domain."""


class NegativeDimensionError(WorkbenchError):
    """A dimension count would come out negative."""


# ---- classifier --------------------------------------------------------------

class ConflictingAssumptionsError(WorkbenchError):
    """The same divisor class is assumed both effective and empty."""


class TrivialClassError(WorkbenchError):
    """The zero class was passed where a nontrivial class is required."""


class NotEffectiveCandidateError(WorkbenchError):
    """Candidate class has empty linear system, so it cannot be classified."""


class NotAcmInputError(WorkbenchError):
    """Operation requires a class already classified as aCM."""


# ---- casework ----------------------------------------------------------------

class BoxTooSmallError(WorkbenchError):
    """An enumeration survivor touches the search box boundary."""


class MalformedScriptError(WorkbenchError):
    """A derivation script violates the structural rules."""


# ---- configuration -----------------------------------------------------------

class ConfigError(WorkbenchError):
    """A configuration file is malformed."""
