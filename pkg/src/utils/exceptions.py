"""
Exception hierarchy for the Blowup Drawing Lab
"""


class LabError(Exception):
    """Base class for all errors raised by the lab"""


class GraphStructureError(LabError, ValueError):
    """A graph or rotation system violates its structural invariants"""


class EmbeddingError(LabError):
    """An embedding cannot be used for the requested operation"""


class ConstructionError(LabError, ValueError):
    """A graph operator received invalid parameters or input"""


class DecompositionError(LabError):
    """A decomposition certificate is invalid or cannot be produced"""


class DrawingError(LabError):
    """A drawing constructor rejected its certificate"""


class VerificationError(LabError):
    """A verification routine received input outside its domain"""


class InternalConsistencyError(LabError):
    """A constructed object failed a check that holds by construction"""


class FormatError(LabError):
    """A serialized document cannot be decoded"""


class BudgetExhausted(LabError):
    """Raised inside exact searches when the node or time budget runs out"""
