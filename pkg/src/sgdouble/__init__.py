"""Numerical semigroup arithmetic, relative ideals, duplication, and doubles."""

from .doubles import (
    DoubleCertificate,
    DoubleFamily,
    HalfTypeReport,
    OddConditionReport,
    enumerate_even_doubles,
    enumerate_odd_doubles,
    enumerate_symmetric_doubles,
    even_double_check,
    half_type_report,
    odd_double_check,
    odd_necessary_conditions,
    symmetric_double_check,
    witness_even_double,
)
from .duplication import (
    DuplicationSpec,
    decompose,
    duplicate,
    duplication_canonical_ideal,
    duplication_frobenius,
    half,
    normalize_params,
)
from .errors import SemigroupError
from .ideals import (
    RelativeIdeal,
    canonical_ideal,
    is_numerical_semigroup_set,
    maximal_ideal,
    naturals_ideal,
    relative_ideal,
)
from .semigroup import (
    NATURALS,
    ClassificationReport,
    NumericalSemigroup,
    canonical_key,
    classify,
)

__all__ = [
    "NATURALS",
    "ClassificationReport",
    "DoubleCertificate",
    "DoubleFamily",
    "DuplicationSpec",
    "HalfTypeReport",
    "NumericalSemigroup",
    "OddConditionReport",
    "RelativeIdeal",
    "SemigroupError",
    "canonical_ideal",
    "canonical_key",
    "classify",
    "decompose",
    "duplicate",
    "duplication_canonical_ideal",
    "duplication_frobenius",
    "enumerate_even_doubles",
    "enumerate_odd_doubles",
    "enumerate_symmetric_doubles",
    "even_double_check",
    "half",
    "half_type_report",
    "is_numerical_semigroup_set",
    "maximal_ideal",
    "naturals_ideal",
    "normalize_params",
    "odd_double_check",
    "odd_necessary_conditions",
    "relative_ideal",
    "symmetric_double_check",
    "witness_even_double",
]

__version__ = "0.1.0"
