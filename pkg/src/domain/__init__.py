# Modulo Domain - way-below, continuidad, compactos y algebraicidad
from .way_below import (
    CacheDominios, cache_dominios, way_below, way_below_alt, compact_elements, k_subset, k_values,
)
from .analysis import (
    DomainAnalysis, analyze_domain, is_continuous, is_algebraic,
    check_compactness_criteria, check_way_below_lemmas, check_basis_lemma,
    way_below_image_order, k_image_order, check_canonical_isos,
)
