"""Expose the Chern class calculus."""

from .symmetric import (  # noqa: F401
    chern_classes_ring,
    elementary_symmetric,
    expand_in_elementary,
    is_symmetric,
    roots_ring,
    substitute_elementary,
)
from .classes import (  # noqa: F401
    ChernRing,
    ThomClassPolynomial,
    expand_product_h,
    multiplicativity_check,
    symmetrize_product,
    tensor_first_chern,
    thom_class_multiplicativity,
    thom_class_poly,
    whitney_sum,
)
from .projective import ProjectiveClass, projective_ring_reduce  # noqa: F401

__all__ = [
    "ChernRing",
    "ProjectiveClass",
    "ThomClassPolynomial",
    "chern_classes_ring",
    "elementary_symmetric",
    "expand_in_elementary",
    "expand_product_h",
    "is_symmetric",
    "multiplicativity_check",
    "projective_ring_reduce",
    "roots_ring",
    "substitute_elementary",
    "symmetrize_product",
    "tensor_first_chern",
    "thom_class_multiplicativity",
    "thom_class_poly",
    "whitney_sum",
]
