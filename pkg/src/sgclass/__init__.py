"""Exact class-group and ideal arithmetic for numerical semigroups,
imaginary quadratic orders, and the graded rings built from both."""

from .domains import (
    CoefficientDomain,
    CoeffIdeal,
    QuadForm,
    class_group,
    parse_domain,
    reduced_forms,
)
from .errors import (
    CapabilityError,
    ExponentCapError,
    ExtractionError,
    MismatchError,
    ParseError,
)
from .graded import (
    GradedElement,
    HomogeneousIdeal,
    IdealPair,
    decompose_class,
    extract_pair,
    parse_element,
    transfer_criterion_report,
)
from .ideals import (
    FractionalIdeal,
    ideal_from_generators,
    search_nonprincipal_t_invertible,
)
from .semigroups import MonoidDescriptor, NumericalSemigroup, from_generators, parse_monoid
from .suites import run_suites

__all__ = [
    "CapabilityError",
    "CoeffIdeal",
    "CoefficientDomain",
    "ExponentCapError",
    "ExtractionError",
    "FractionalIdeal",
    "GradedElement",
    "HomogeneousIdeal",
    "IdealPair",
    "MismatchError",
    "MonoidDescriptor",
    "NumericalSemigroup",
    "ParseError",
    "QuadForm",
    "class_group",
    "decompose_class",
    "extract_pair",
    "from_generators",
    "ideal_from_generators",
    "parse_domain",
    "parse_element",
    "parse_monoid",
    "reduced_forms",
    "run_suites",
    "search_nonprincipal_t_invertible",
    "transfer_criterion_report",
]
