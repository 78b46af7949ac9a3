"""Exception types shared across the package."""


class TrisasakiError(Exception):
    """Base class for all package errors."""


# Scalar layer.  Division by zero reuses the builtin so that ``1 / zero``
# raises the same thing whether the operand is exact or a float.
DivisionByZero = ZeroDivisionError


class NotRepresentable(TrisasakiError):
    """A square root does not exist inside Q(sqrt 2)."""


class UnknownScalarFormat(TrisasakiError):
    """A scalar string could not be parsed."""


# Lie algebra layer.
class DimensionMismatch(TrisasakiError):
    """Vector or matrix size does not match the algebra dimension."""


class NotClosed(TrisasakiError):
    """A commutator of the given matrices falls outside their span."""

    def __init__(self, i, j, message=None):
        self.pair = (i, j)
        super().__init__(message or f"commutator of basis elements {i}, {j} not in span")


class LinearlyDependentBasis(TrisasakiError):
    """The given matrices are not linearly independent."""


# Clifford layer.
class UnsupportedSignature(TrisasakiError):
    """Only Cl^0(3,q) with q in {0, 1, 2} is implemented."""


class NoNondegenerateSolution(TrisasakiError):
    """The equivariant-map solution space has no nondegenerate element."""


class PermutationMismatch(TrisasakiError):
    """The invariant form differs across even permutations."""


# Model layer.
class ParameterSignMismatch(TrisasakiError):
    """alpha*delta has the wrong sign for the requested family."""


class InvalidDeformationParameters(TrisasakiError):
    """Deformation parameters violate a > 0, c^2 = a + b > 0."""


class FrameConstructionFailed(TrisasakiError):
    """No orthonormal adapted frame could be built."""


# Geometry layer.
class SingularMetric(TrisasakiError):
    """The metric matrix is not invertible."""


class NotSymmetricBase(TrisasakiError):
    """Operation requires a model built over a symmetric base."""


# Serialization layer.
class SchemaViolation(TrisasakiError):
    """A model file violates the JSON schema; carries a JSON-pointer path."""

    def __init__(self, pointer, message):
        self.pointer = pointer
        super().__init__(f"{pointer}: {message}")
