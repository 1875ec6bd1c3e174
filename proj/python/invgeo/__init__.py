"""Finite inverse monoids, metric presheaves and their geometry."""

from ._core import (
    CapacityError,
    EtaleAction,
    Error,
    InverseMonoid,
    ParseError,
    PartialBijection,
    PreconditionError,
    SizeMismatchError,
    TheoremViolation,
    ValidationError,
    cayley_dot,
    cayley_metric,
    check_edge_pairing,
    example,
    example_names,
    is_quasi_generating,
    qi_constants,
    schutzenberger_components,
    validate_cms_metric,
)

__all__ = [
    "CapacityError",
    "EtaleAction",
    "Error",
    "InverseMonoid",
    "ParseError",
    "PartialBijection",
    "PreconditionError",
    "SizeMismatchError",
    "TheoremViolation",
    "ValidationError",
    "cayley_dot",
    "cayley_metric",
    "check_edge_pairing",
    "example",
    "example_names",
    "is_quasi_generating",
    "qi_constants",
    "schutzenberger_components",
    "validate_cms_metric",
]
