"""Cyclotomic ring, field and optimal normal basis multipliers."""

from ._core import (
    DimensionMismatch,
    Error,
    InvalidCoordinate,
    InvalidDimension,
    NoNormalBasis,
    NotFoldable,
    NotPrime,
    OddDimensionRequired,
    OracleUnavailable,
    ParseError,
    UnsupportedCombination,
    algorithms,
    expected_counts,
    fields_equal,
    format_vector,
    measure,
    multiply,
    normal_basis_exists,
    parse_vector,
    render_table,
    sqrt_perm,
    subring_closure,
    table_rows,
    verify,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
