"""Exact liftability checks for lines in toric degenerations of hypersurfaces."""

from ._core import (
    DegenliftError,
    Family,
    ParseError,
    cubic_census,
    disk_profile,
    kuranishi,
    lift,
    load_family,
    log_tangent_membership,
    parse_family,
    quintic_census,
    run,
)

__all__ = [
    "DegenliftError",
    "Family",
    "ParseError",
    "cubic_census",
    "disk_profile",
    "kuranishi",
    "lift",
    "load_family",
    "log_tangent_membership",
    "parse_family",
    "quintic_census",
    "run",
]
