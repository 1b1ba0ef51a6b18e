"""Guarding orthogonal polygons under rectangle visibility."""

from ._core import (
    Polygon,
    RGuardError,
    balanced_pieces,
    generate,
    guard,
    hidden_guard,
    min_guards,
    pyramids,
    r_visible,
    run_cli,
    slabs,
    validate,
    verify_cover,
    verify_hidden,
)

__all__ = [
    "Polygon",
    "RGuardError",
    "balanced_pieces",
    "generate",
    "guard",
    "hidden_guard",
    "min_guards",
    "pyramids",
    "r_visible",
    "run_cli",
    "slabs",
    "validate",
    "verify_cover",
    "verify_hidden",
]
