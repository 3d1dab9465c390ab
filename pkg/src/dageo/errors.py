"""Exceptions shared by the geometry kernel."""


class DegenerateConfigurationError(ValueError):
    """A construction's preconditions are violated (coincident points,
    singular sides, collinear defining triples, and the like)."""


class IrrationalIntersectionError(ValueError):
    """An intersection exists but is not rational, so the exact kernel
    cannot represent it."""


class GeneratorExhaustedError(RuntimeError):
    """Rejection sampling hit its retry limit without producing an
    admissible configuration."""
