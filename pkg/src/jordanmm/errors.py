"""Exception types shared across the package."""


class JordanmmError(ValueError):
    """Base class for all package-specific errors."""


class AlgebraError(JordanmmError):
    """Shape, size or ground-algebra mismatch between operands."""


class ValidationError(JordanmmError):
    """A document or element failed validation.

    Carries optional line/column info when raised while parsing text input.
    """

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class SpectralError(JordanmmError):
    """Characteristic cubic has no all-real root triple within tolerance."""


class GeometryError(JordanmmError):
    """Invalid projective construction (zero vector, coincident points, ...).

    ``associator_norm`` is set when an octonionic vector was rejected
    because its entries do not associate.
    """

    def __init__(self, message, associator_norm=None):
        super().__init__(message)
        self.associator_norm = associator_norm
