"""
Exception hierarchy for the engine.

Every error raised on purpose by cd_analysis derives from CdAnalysisError, so the command line
can tell computation failures (exit 1) apart from programming errors. Where a builtin exception
has the same meaning, the class also derives from it.
"""


class CdAnalysisError(Exception):
    """Base class for all engine errors."""


# algebra / transcend
class ZeroArgument(CdAnalysisError, ZeroDivisionError):
    """An operation needs a nonzero argument (inverse, ln, polar, ...)."""


class IndexOutOfRange(CdAnalysisError, IndexError):
    pass


class EmbeddingError(CdAnalysisError, ValueError):
    """Down-embedding of an element that has nonzero high coefficients."""


class DegenerateAngles(CdAnalysisError):
    """An intermediate sine vanished while inverting an iterated exponential."""


# rotor
class LevelMismatch(CdAnalysisError, ValueError):
    pass


class RePartMismatch(CdAnalysisError, ValueError):
    pass


# qcx
class OutOfDomain(CdAnalysisError, ValueError):
    pass


class SeedSingularity(CdAnalysisError):
    pass


class DivergenceRadius(CdAnalysisError):
    pass


class StepUnderflow(CdAnalysisError):
    """A finite-difference perturbation vanished in floating point."""


# contour
class NoConvergence(CdAnalysisError):
    pass


class EvaluationFailure(CdAnalysisError):
    pass


class BranchFailure(CdAnalysisError):
    pass


class ZeroOnPath(CdAnalysisError):
    pass


class UnwrapAmbiguity(CdAnalysisError):
    pass


# xform
class DomainOfConvergence(CdAnalysisError, ValueError):
    pass


class QuadratureFailure(CdAnalysisError):
    pass


class EmptyStrip(CdAnalysisError, ValueError):
    pass


class TruncationTooSmall(CdAnalysisError):
    pass


# special
class PoleAt(CdAnalysisError):
    pass


class PoleAtOne(PoleAt):
    pass


class DomainOfRepresentation(CdAnalysisError, ValueError):
    pass


class NonPositive(CdAnalysisError, ValueError):
    pass


# cli
class ExpressionError(CdAnalysisError, ValueError):
    """Malformed expression or unknown identifier in a command-line formula."""
