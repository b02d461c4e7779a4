"""Permutation arithmetic, stabilizer chains, orbits and coset actions."""

from .cosets import centralizer_of_element, coset_action
from .group import (
    OrbitPartition,
    PermGroup,
    derived_subgroup,
    direct_product,
    format_group,
    is_primitive,
    is_solvable,
    is_transitive,
    load_group,
    minimal_block,
    normal_closure,
    orbits,
    parse_group,
    symmetric_generators,
    trivial_group,
    wreath_imprimitive,
    wreath_product_action,
)
from .perm import Perm, compose, format_cycles, identity, inverse, parse_cycles
from .schreier import (
    Bsgs,
    element_enumeration,
    element_matrix,
    membership,
    pointwise_stabilizer,
    schreier_sims,
)

__all__ = [
    "Bsgs", "OrbitPartition", "Perm", "PermGroup", "centralizer_of_element",
    "compose", "coset_action", "derived_subgroup", "direct_product", "element_enumeration",
    "element_matrix", "format_cycles", "format_group", "identity", "inverse",
    "is_primitive", "is_solvable", "is_transitive", "load_group", "membership", "minimal_block",
    "normal_closure", "orbits", "parse_cycles", "parse_group", "pointwise_stabilizer",
    "schreier_sims", "symmetric_generators", "trivial_group",
    "wreath_imprimitive", "wreath_product_action",
]
