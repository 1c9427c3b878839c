"""Numerical semigroups: gluings, gap sets, classification and GSI catalogs."""

from ._core import (
    CatalogEntry,
    CatalogStats,
    CharacteristicSequenceReport,
    ClassificationReport,
    EvenBounds,
    GluingSpec,
    GsiCatalog,
    GsiGapPartition,
    NumericalSemigroup,
    SemigroupError,
    analyze_characteristic_sequence,
    catalog_stats,
    classify,
    enumerate_gsi_up_to,
    even_bounds,
    evens_from_seed,
    evens_reachable_from_frobenius,
    evens_with_gamma_floor,
    find_all_gsi_with_even_frobenius,
    find_gsi_with_even_frobenius,
    frobenius_two_generators,
    glue,
    glue_spec,
    gsi_frobenius,
    gsi_gaps,
    gsi_genus,
    is_complete_intersection,
    is_free,
    is_gsi,
    is_si_by_gluing,
    is_strongly_increasing,
    is_telescopic,
    make_gluing_spec,
    naturals,
    parse_generators,
    realizable_even_scan,
    reorder_characteristic,
    s_family,
    semigroups_with_frobenius,
    validate_gsi,
)

__all__ = [
    "CatalogEntry",
    "CatalogStats",
    "CharacteristicSequenceReport",
    "ClassificationReport",
    "EvenBounds",
    "GluingSpec",
    "GsiCatalog",
    "GsiGapPartition",
    "NumericalSemigroup",
    "SemigroupError",
    "analyze_characteristic_sequence",
    "catalog_stats",
    "classify",
    "enumerate_gsi_up_to",
    "even_bounds",
    "evens_from_seed",
    "evens_reachable_from_frobenius",
    "evens_with_gamma_floor",
    "find_all_gsi_with_even_frobenius",
    "find_gsi_with_even_frobenius",
    "frobenius_two_generators",
    "glue",
    "glue_spec",
    "gsi_frobenius",
    "gsi_gaps",
    "gsi_genus",
    "is_complete_intersection",
    "is_free",
    "is_gsi",
    "is_si_by_gluing",
    "is_strongly_increasing",
    "is_telescopic",
    "make_gluing_spec",
    "naturals",
    "parse_generators",
    "realizable_even_scan",
    "reorder_characteristic",
    "s_family",
    "semigroups_with_frobenius",
    "validate_gsi",
]
