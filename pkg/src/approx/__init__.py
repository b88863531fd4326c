# Modulo Approx - L-relaciones aproximables, transpuestas de Scott y equivalencia
from .models import ApproxRelation, ScottMap, relation_from_triples
from .relations import (
    validate_approximable, require_approximable, identity_relation, compose_relations,
    apply_to_closed, apply_values,
)
from .functor import (
    psi_of, theta_of, check_scott_map, identity_scott_map, compose_scott_maps,
    approximable_relations, scott_maps, check_composition_associativity, check_equivalence_suite,
)
