"""Finite posets, Dedekind-MacNeille completions and extensions of maps."""

from ._core import (
    CycleError,
    Error,
    HypothesisError,
    InvalidSelectorError,
    NotASubsetError,
    ParseError,
    Poset,
    PosetMap,
    SizeCapError,
    UnknownCheckError,
    UnknownElementError,
    ValidationError,
    __version__,
    check_ids,
    cofinal_subsets,
    completion,
    completion_dot,
    cut_closure,
    is_cut,
    parse_instance,
    phi_bar,
    phi_L,
    phi_sharp,
    phi_tilde,
    run_check,
)

__all__ = [
    "CycleError",
    "Error",
    "HypothesisError",
    "InvalidSelectorError",
    "NotASubsetError",
    "ParseError",
    "Poset",
    "PosetMap",
    "SizeCapError",
    "UnknownCheckError",
    "UnknownElementError",
    "ValidationError",
    "__version__",
    "check_ids",
    "cofinal_subsets",
    "completion",
    "completion_dot",
    "cut_closure",
    "is_cut",
    "parse_instance",
    "phi_bar",
    "phi_L",
    "phi_sharp",
    "phi_tilde",
    "run_check",
]
