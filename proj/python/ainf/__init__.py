"""Exact verification of A-infinity structures built from a non-derivation
differential: graded algebras over exact rationals, the derived operations
m_n, Stasheff/order/compatibility checks, the bar-complex operations and the
Hochschild/Connes-B application."""

from ainf._core import (
    Algebra,
    load_algebra,
    parse_algebra,
    koszul_sign,
    derived_op,
    stasheff_defect_max,
    assoc_vs_delta_square_max,
    associative_order,
    compat_holds,
    delta_cohomology,
    induced_on_cohomology_zero,
    hochschild_dims,
    run_suite,
)

__all__ = [
    "Algebra",
    "load_algebra",
    "parse_algebra",
    "koszul_sign",
    "derived_op",
    "stasheff_defect_max",
    "assoc_vs_delta_square_max",
    "associative_order",
    "compat_holds",
    "delta_cohomology",
    "induced_on_cohomology_zero",
    "hochschild_dims",
    "run_suite",
]
