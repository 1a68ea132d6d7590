"""Exact arithmetic for skew constacyclic and quasi-twisted codes.

Everything is integer-encoded and deterministic: finite fields with
fixed Conway-style moduli, twisted polynomial division, canonical-basis
linear codes with exact minimum weights, orbit-built quasi-twisted
constructions, and commutative shadow codes for distance bounds.
"""

from .field import Automorphism, BudgetExceeded, Field, FieldError
from .skewpoly import SkewPoly, render_poly
from .linear import LinearCode, Matrix, SemiLinearMap
from .constacyclic import (
    ConstacyclicSpec,
    SkewCyclicCode,
    dual_generator,
    enumerate_right_divisors,
    self_dual_check,
)
from .sqt import (
    SqtSpec,
    derive_alpha,
    emit_shorthand,
    one_generator_code,
    parse_shorthand,
    pcm,
    sqt_assemble,
    sqt_one_generator,
)
from .bounds import (
    BchBoundQuery,
    BracketContext,
    bch_bound,
    best_bch_bound,
    bracket_code,
    bracket_map,
    distance_transfer,
    mds_scan,
    vandermonde_full_rank,
)
from .catalog import TABLE, reproduce, reproduce_all

__version__ = "0.1.0"

__all__ = [
    "Automorphism",
    "BchBoundQuery",
    "BracketContext",
    "BudgetExceeded",
    "ConstacyclicSpec",
    "Field",
    "FieldError",
    "LinearCode",
    "Matrix",
    "SemiLinearMap",
    "SkewCyclicCode",
    "SkewPoly",
    "SqtSpec",
    "TABLE",
    "bch_bound",
    "best_bch_bound",
    "bracket_code",
    "bracket_map",
    "derive_alpha",
    "distance_transfer",
    "dual_generator",
    "emit_shorthand",
    "enumerate_right_divisors",
    "mds_scan",
    "one_generator_code",
    "parse_shorthand",
    "pcm",
    "render_poly",
    "reproduce",
    "reproduce_all",
    "self_dual_check",
    "sqt_assemble",
    "sqt_one_generator",
    "vandermonde_full_rank",
]
