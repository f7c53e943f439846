from .coxeter import ArtinType, CoxeterMatrix, UnsupportedType, artin_presentation, coxeter_matrix, odd_components
from .derive import (
    ConstraintError,
    DerivationCert,
    RuleError,
    Step,
    apply_rule,
    check_derivation,
    derive_poly_free,
    tower_route,
)
from .facts import Fact, fact_registry, get_fact
from .propfi import PropFiDemo, prop_fi_demo
from .table import AllcockRow, allcock_table, allcock_table_json, table_row

__all__ = [
    "AllcockRow",
    "ArtinType",
    "ConstraintError",
    "CoxeterMatrix",
    "DerivationCert",
    "Fact",
    "PropFiDemo",
    "RuleError",
    "Step",
    "UnsupportedType",
    "allcock_table",
    "allcock_table_json",
    "apply_rule",
    "artin_presentation",
    "check_derivation",
    "coxeter_matrix",
    "derive_poly_free",
    "fact_registry",
    "get_fact",
    "odd_components",
    "prop_fi_demo",
    "table_row",
    "tower_route",
]
