"""Catalog of counting families bound to oracle-checkable class specs."""

from . import families
from .registry import (
    CatalogEntry,
    OracleOnlyClassError,
    UnknownClassError,
    all_class_ids,
    classify_discrepancy,
    formula_class_ids,
    manifest,
    resolve_class,
    write_manifest,
)

__all__ = [
    "CatalogEntry",
    "OracleOnlyClassError",
    "UnknownClassError",
    "all_class_ids",
    "classify_discrepancy",
    "families",
    "formula_class_ids",
    "manifest",
    "resolve_class",
    "write_manifest",
]
