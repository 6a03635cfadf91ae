"""Exception types shared across the package."""


class EvopuError(Exception):
    """Base class for all package-specific errors."""


# -- sequences / genetic code ------------------------------------------------

class InvalidSymbol(EvopuError):
    pass


class StopCodonPresent(EvopuError):
    pass


class LengthMismatch(EvopuError):
    pass


class EnumerationCapExceeded(EvopuError):
    pass


# -- mutation / emergence model ----------------------------------------------

class SameNucleotide(EvopuError):
    pass


class IdenticalSequences(EvopuError):
    pass


class UnknownSequence(EvopuError):
    pass


class InvalidProbability(EvopuError):
    pass


# -- candidate generation ------------------------------------------------------

class EmptyObservedSet(EvopuError):
    pass


class UnknownAminoSequence(EvopuError):
    pass


# -- features ------------------------------------------------------------------

class UnknownResidue(EvopuError):
    pass


# -- classifiers / training -----------------------------------------------------

class DimensionMismatch(EvopuError):
    pass


class MissingEncodings(EvopuError):
    pass


class InvalidQ(EvopuError):
    pass


class InvalidBounds(EvopuError):
    pass


class NonFiniteLoss(EvopuError):
    def __init__(self, epoch, loss):
        super().__init__(f"non-finite loss {loss!r} at epoch {epoch}")
        self.epoch = epoch
        self.loss = loss


# -- metrics / baselines ----------------------------------------------------------

class SingleClass(EvopuError):
    pass


class NoPositives(EvopuError):
    pass


class DegenerateInput(EvopuError):
    pass


class NoReliableNegatives(EvopuError):
    pass


class InsufficientData(EvopuError):
    pass


# -- simulator --------------------------------------------------------------------

class UniverseCapExceeded(EvopuError):
    pass


class EmptyObservation(EvopuError):
    pass


# -- pipeline -----------------------------------------------------------------------

class ParseError(EvopuError):
    pass


class InvalidSweepParameter(EvopuError):
    pass


class PipelineStageError(EvopuError):
    """Wraps a module error with the pipeline stage where it occurred."""

    def __init__(self, stage, cause):
        super().__init__(f"[{stage}] {cause}")
        self.stage = stage
        self.cause = cause
