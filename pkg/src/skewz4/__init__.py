"""Skew-cyclic codes with derivation over Z4 + vZ4 and the Z4 codes derived from them."""

from .cyclic import (
    RCode,
    closure_check,
    enumerate_span,
    free_code_from_divisor,
    parity_check_matrix,
    shift,
    subcode_generators,
)
from .kernels import BACKEND
from .poly import SkewPoly, is_central, right_divide, right_divides_xn_minus_1, x_pow_times
from .ring import DerivationKind, RingElem, delta, gray_weight, inverse, is_unit, theta
from .textform import parse_elem, parse_poly, render_poly
from .z4 import CodeParams, Z4Code, gray_image, plotkin_sum, residue_code, torsion_code

__version__ = "0.1.0"
