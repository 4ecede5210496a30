"""Well-rounded twists of ideal lattices in imaginary quadratic fields."""
from .criteria import BasisPair, cos_theta, f1_coeff, f2_coeff, is_good, twist_beta, twist_embed
from .enumeration import GoodTuple, all_good_tuples, extend_to_good, extendable_pairs
from .field import FieldDesc, QuadElem, SurdValue, elem_mul, elem_norm, im_coeff, re
from .ideal import IdealTriple, canonical_basis, ring_of_integers, vol_sq
from .oracle import brute_force_good_tuples
from .similarity import TwistClass, classify, cos_abs_key

__all__ = [
    "BasisPair",
    "FieldDesc",
    "GoodTuple",
    "IdealTriple",
    "QuadElem",
    "SurdValue",
    "TwistClass",
    "all_good_tuples",
    "brute_force_good_tuples",
    "canonical_basis",
    "classify",
    "cos_abs_key",
    "cos_theta",
    "elem_mul",
    "elem_norm",
    "extend_to_good",
    "extendable_pairs",
    "f1_coeff",
    "f2_coeff",
    "im_coeff",
    "is_good",
    "re",
    "ring_of_integers",
    "twist_beta",
    "twist_embed",
    "vol_sq",
]
