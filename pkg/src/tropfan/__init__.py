"""Tropical Plücker polynomials, their linearity fans and F_{k,n}"""

from src.tropfan.fans import (
    build_F,
    build_F_cross_checked,
    distinct_nontrivial,
    fan_of_polynomials,
    linearity_witness,
    trop_phi2,
    tropical_plucker_family,
)
from src.tropfan.initial_forms import (
    GR24_RELATION,
    GR24_SUBSETS,
    SignedPolynomial,
    init_form,
    pos_membership_gr24,
)
from src.tropfan.tropical import TropicalPolynomial, linearity_fan, trop_eval, tropicalize

__all__ = [
    "GR24_RELATION",
    "GR24_SUBSETS",
    "SignedPolynomial",
    "TropicalPolynomial",
    "build_F",
    "build_F_cross_checked",
    "distinct_nontrivial",
    "fan_of_polynomials",
    "init_form",
    "linearity_fan",
    "linearity_witness",
    "pos_membership_gr24",
    "trop_eval",
    "trop_phi2",
    "tropical_plucker_family",
    "tropicalize",
]
