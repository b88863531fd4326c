# Modulo Order - L-subconjuntos, conjuntos L-ordenados, L-dcpos y continuidad de Scott
from .lsubset import (
    Carrier, LSubset, lsubset, from_labels, constant_subset, zero_subset, point_subset,
    scalar_tensor, join_subsets, weighted_join, restrict_subset, extend_by_zero,
    subdeg, sub_values, enumerate_lsubsets, enumerate_constrained, count_lsubsets,
)
from .lordered import (
    LOrderedSet, from_triples, classical_order, validate_l_order, down_set, up_set,
    is_lower_set, is_upper_set, is_directed, is_ideal, supremum, infimum,
    sup_index, inf_index, family_order, powerset_order, residuation_order, compose_tables,
)
from .dcpo import (
    PointMap, lower_sets, ideals, directed_subsets, is_l_dcpo, require_l_dcpo,
    zadeh_forward, is_order_preserving, is_scott_continuous, check_iso_via, find_l_order_iso,
)
