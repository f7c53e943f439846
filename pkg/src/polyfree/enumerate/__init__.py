from .coset import CosetTable, EnumerationLimit, todd_coxeter, table_from_action
from .schreier import reidemeister_schreier, schreier_edges, schreier_generators
from .folding import FoldedGraph, membership, stallings_fold
from .lowindex import (
    LowIndexResult,
    characteristic_core,
    conjugates,
    intersect_tables,
    low_index_subgroups,
)

__all__ = [
    "CosetTable",
    "EnumerationLimit",
    "FoldedGraph",
    "LowIndexResult",
    "characteristic_core",
    "conjugates",
    "intersect_tables",
    "low_index_subgroups",
    "membership",
    "reidemeister_schreier",
    "schreier_edges",
    "schreier_generators",
    "stallings_fold",
    "table_from_action",
    "todd_coxeter",
]
