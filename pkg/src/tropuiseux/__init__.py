"""Parametric tropical zeroes of min-plus polynomials as Newton-Puiseux expressions."""
from .arith import Rational, RationalParseError, rat_format, rat_parse
from .kernels import BACKEND
from .newton import (
    CellSignature,
    NewtonPolygon,
    build_polygon,
    cell_witness,
    classify_cell,
    enumerate_cells,
    polygon_roots,
)
from .polynomial import TropicalPolynomial, eval_tropical, is_tropical_zero, oracle_roots
from .puiseux import (
    QuotientForm,
    build_g_expr,
    build_g_expr_dual,
    eval_expr,
    expr_max,
    expr_min,
    expr_neg,
    expr_scale,
    expr_sum,
    substitute,
    to_quotient_form,
)
from .roots import all_roots, continuation_value, g_numeric, g_numeric_dual

__version__ = "0.1.0"
