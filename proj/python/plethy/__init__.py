"""Exact restriction coefficients of polynomial GL_n representations to S_n.

Partitions go in and come out as tuples of weakly decreasing positive ints;
exponent vectors as tuples of ints. All values are exact (Python ints, or
fractions.Fraction for the rare rational coefficient).
"""

from ._plethy import (
    brute_force_restriction,
    ch_ind,
    corollary_sign_multiplicity,
    corollary_trivial_multiplicity,
    count_pk,
    count_qk,
    enumerate_partitions,
    enumerate_vector_partitions,
    littlewood_restriction,
    murnaghan_nakayama,
    plethysm,
    restriction_table,
)

__all__ = [
    "brute_force_restriction",
    "ch_ind",
    "corollary_sign_multiplicity",
    "corollary_trivial_multiplicity",
    "count_pk",
    "count_qk",
    "enumerate_partitions",
    "enumerate_vector_partitions",
    "littlewood_restriction",
    "murnaghan_nakayama",
    "plethysm",
    "restriction_table",
]

__version__ = "0.1.0"
