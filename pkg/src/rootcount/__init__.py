"""Rational approximants to integer roots by symbol substitution and counting."""
from .approximation import (
    INFINITY,
    UNDEFINED,
    ApproximantRow,
    abs_error,
    approximants,
    decimal,
    ratio,
    reference_digits,
    stream_rows,
)
from .counts import incidence, matrix_power, power_counts, step
from .spectral import (
    FixedPointDecimal,
    dominant_eigenvalue_root_family,
    integer_root_floor,
    is_primitive,
    perron_vector_root_family,
    power_iteration,
)
from .words import (
    DomainError,
    RuleSet,
    count,
    format_rules,
    iterate_words,
    make_root_rules,
    parse_rules,
    rewrite,
)

__version__ = "0.1.0"
