"""Loopcore module - Cayley-table loops, identities, nuclei and canonical forms."""

from .constructions import (
    cyclic_group,
    dihedral_group,
    direct_product,
    elementary_abelian,
    group_from_permutations,
    quaternion_group,
    small_groups,
    symmetric_group,
)
from .identities import (
    Identity,
    IdentityCheck,
    check_identity,
    is_abelian_group,
    is_associative,
    is_commutative,
    is_right_bol,
)
from .isomorphism import are_isomorphic, canonical_form, canonical_key, canonical_labeling
from .loop import Loop
from .structure import (
    Autotopism,
    Side,
    bol_autotopism,
    center,
    commutant,
    element_order,
    exponent,
    full_nucleus,
    has_central_squares,
    is_autotopism,
    is_normal_subloop,
    is_power_associative,
    left_multiplication_group,
    nuclei,
    nucleus,
    right_multiplication_group,
    right_power_period,
    squares_are_trivial,
    subloop_generated,
)

__all__ = [
    "Autotopism",
    "Identity",
    "IdentityCheck",
    "Loop",
    "Side",
    "are_isomorphic",
    "bol_autotopism",
    "canonical_form",
    "canonical_key",
    "canonical_labeling",
    "center",
    "check_identity",
    "commutant",
    "cyclic_group",
    "dihedral_group",
    "direct_product",
    "element_order",
    "elementary_abelian",
    "exponent",
    "full_nucleus",
    "group_from_permutations",
    "has_central_squares",
    "is_abelian_group",
    "is_associative",
    "is_autotopism",
    "is_commutative",
    "is_normal_subloop",
    "is_power_associative",
    "is_right_bol",
    "left_multiplication_group",
    "nuclei",
    "nucleus",
    "quaternion_group",
    "right_multiplication_group",
    "right_power_period",
    "small_groups",
    "squares_are_trivial",
    "subloop_generated",
    "symmetric_group",
]
