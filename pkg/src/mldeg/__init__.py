"""Exact computation of maximum likelihood degrees on projective varieties."""

from .errors import (
    GenericityError,
    InconsistencyError,
    MldegError,
    NotZeroDimensionalError,
    PolyParseError,
    RingMismatchError,
    SchemaError,
    UnsupportedInputError,
)
from .poly import (
    DEGREVLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    dehomogenize,
    div_exact,
    gradient,
    homogeneity_degree,
    homogenize,
    is_homogeneous,
    lift,
    parse_polynomial,
    polynomial_gcd,
    primitive_part,
    restrict,
    squarefree_part,
)

__version__ = "0.1.0"
