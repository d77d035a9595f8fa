"""Exact counts of rank-two lattice models over ramified p-adic base fields.

The heavy lifting lives in the compiled extension; this package re-exports
its operations under a stable name.
"""

from ._core import (
    census,
    census_count,
    coefficients,
    count,
    dimension,
    example_decomposition,
    oracle_count,
    partition_sizes,
    verify,
    zeta_factors,
)

__all__ = [
    "census",
    "census_count",
    "coefficients",
    "count",
    "dimension",
    "example_decomposition",
    "oracle_count",
    "partition_sizes",
    "verify",
    "zeta_factors",
]
