"""Exact computations in the Hodge ring, the Poincaré ring and the rational Chern-Hodge ring."""

from .errors import HodgeRingError, InputError, InternalInvariantError, UnsupportedModeError, ValidationError
from .exactring import QQ, ZZ, PolyRing, Polynomial, Zmod
from .hodge import HirPolynomial, HodgePolynomial, decompose_ABC, decompose_ELS, genus_maps, validate_hodge
from .poincare import PoincarePolynomial, decompose_WXYZ, kahler_image, normal_form_I, validate_poincare
from .bordism import BordismClassQ, chern_numbers, pontryagin_numbers, todd_genus
from .chernhodge import ChernHodgeElementQ, ch_basis_q, ch_rank
from .classify import Functional, Report, classify, classify_betti, classify_hodge, classify_mixed

__version__ = "0.1.0"

__all__ = [
    "HodgeRingError",
    "InputError",
    "InternalInvariantError",
    "UnsupportedModeError",
    "ValidationError",
    "QQ",
    "ZZ",
    "Zmod",
    "PolyRing",
    "Polynomial",
    "HodgePolynomial",
    "HirPolynomial",
    "decompose_ABC",
    "decompose_ELS",
    "genus_maps",
    "validate_hodge",
    "PoincarePolynomial",
    "decompose_WXYZ",
    "kahler_image",
    "normal_form_I",
    "validate_poincare",
    "BordismClassQ",
    "chern_numbers",
    "pontryagin_numbers",
    "todd_genus",
    "ChernHodgeElementQ",
    "ch_basis_q",
    "ch_rank",
    "Functional",
    "Report",
    "classify",
    "classify_betti",
    "classify_hodge",
    "classify_mixed",
]
