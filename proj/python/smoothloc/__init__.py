"""Sublocales, smooth sublocales and Bruns-Lakser completions of finite frames."""

from ._smoothloc import (
    Error,
    Frame,
    IOFailure,
    NotALattice,
    NotDistributive,
    ParseError,
    admissible_upper_sets,
    lift,
    modules,
    run_suite,
)

__all__ = [
    "Error",
    "Frame",
    "IOFailure",
    "NotALattice",
    "NotDistributive",
    "ParseError",
    "admissible_upper_sets",
    "lift",
    "modules",
    "run_suite",
]
