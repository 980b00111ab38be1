"""Curvature verification laboratory for hypersurface spectra."""

from ._core import (
    catalog_build,
    catalog_names,
    check,
    classify,
    evaluate_catalog,
    identity_ids,
    standard_catalog,
)

__all__ = [
    "catalog_build",
    "catalog_names",
    "check",
    "classify",
    "evaluate_catalog",
    "identity_ids",
    "standard_catalog",
]
