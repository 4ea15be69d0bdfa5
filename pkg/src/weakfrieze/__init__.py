"""Exact computations with friezes and weak friezes on polygon dissections."""

from .semifield import (
    RATIONAL, TROPICAL, PositiveRational, Semifield, TropicalInt,
    semifield_by_name, sf_add, sf_inv, sf_mul, sf_sum,
)
from .polygon import (
    Dissection, InvalidInput, Polygon, cells, crosses, crossing_comparator,
    diag, dissections, ears, triangulations, validate_dissection,
)
from .tpath import (
    Not, enumerate_tpaths, is_tpath, reverse, tpath_sum, tpath_weight,
    tpaths_with_prefix,
)
from .frieze import (
    DiagonalMap, GluingError, TheoremAReport, cc_frieze, glue_many, glue_pair,
    is_frieze, is_weak_frieze, propagate, ptolemy_holds,
    satisfies_tpath_formula, trivial_map, verify_theorem_a,
)
from .pattern import (
    NonUnitEdge, PatternGrid, check_unimodular, emit_json, emit_svg, emit_text,
    render_pattern,
)

__version__ = "0.1.0"
