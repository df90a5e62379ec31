"""Binary Goppa codes, their weight distributions, and derived codes."""

from .code import (
    CodeRecord,
    EnumerationRefused,
    LinearCode,
    WeightDistribution,
    macwilliams_dual,
)
from .derive import (
    DerivationStep,
    apply_chain,
    construction_x,
    extend_parity,
    find_puncture_position,
    lengthen_zero,
    puncture,
    shorten,
)
from .field import GF2m, get_field
from .gf2 import BitMatrix, binary_expand, nullspace, row_space_equal, rref
from .goppa import GoppaSpec, build_goppa_code, build_parity_check, definitional_member, goppa_code, max_support
from .poly import Polynomial, norm_poly, parse_poly, trace_poly

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "CodeRecord",
    "DerivationStep",
    "EnumerationRefused",
    "GF2m",
    "GoppaSpec",
    "LinearCode",
    "Polynomial",
    "WeightDistribution",
    "apply_chain",
    "binary_expand",
    "build_goppa_code",
    "build_parity_check",
    "construction_x",
    "definitional_member",
    "extend_parity",
    "find_puncture_position",
    "get_field",
    "goppa_code",
    "lengthen_zero",
    "macwilliams_dual",
    "max_support",
    "norm_poly",
    "nullspace",
    "parse_poly",
    "puncture",
    "row_space_equal",
    "rref",
    "shorten",
    "trace_poly",
]
