# Modulo Closure - espacios de cerradura, cerrados dirigidos y subespacios densos
from .models import (
    ClosureOperator, TableBackedOperator, PointGeneratedOperator, ClosureSpace,
    identity_operator, close, point_closures,
)
from .validation import (
    validate_generalized, is_interpolative, is_l_closure_space, validate_space,
    require_generalized, require_interpolative,
)
from .directed import (
    is_directed_closed, dir_closed_sets, check_fixed_point_characterization,
    canonical_approximant, directed_family_over_psi,
    check_continuity_theorem, check_algebraicity_theorem, find_directed_closed_index,
)
from .constructions import (
    closure_of_domain, closure_of_algebraic, down_closure_space, restrict_to_subspace,
    is_dense_subspace, restriction_isomorphism, check_representation_three,
)
