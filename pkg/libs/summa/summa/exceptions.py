class SummaException(Exception):
    pass


class DimensionError(SummaException, ValueError):
    """Shapes, extents or argument values do not fit the operation"""


class StructuralError(SummaException, ValueError):
    """A partition block groups slots with different extents"""


class HypothesisError(SummaException, ValueError):
    """A hypothesis of the inequality being exercised is violated.

    Attributes:
        hypothesis: short human-readable name of the violated hypothesis, e.g.
            "|1/p| < 1 (Hardy-Littlewood range)"
    """

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        message = f"hypothesis violated: {hypothesis}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class ResourceError(SummaException, RuntimeError):
    """Tensor or enumeration budget exceeded"""


class UnsupportedError(SummaException, NotImplementedError):
    pass


class DegenerateFamilyError(SummaException, ArithmeticError):
    """A probe family produced a form with zero norm"""


class NumericalError(SummaException, ArithmeticError):
    """A numerical routine broke an invariant it relies on"""
