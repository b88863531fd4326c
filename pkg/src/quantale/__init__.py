# Modulo Quantale - quantales finitos, residuacion y catalogo de fixtures
from .models import FiniteQuantale, residuate, is_integral
from .validation import validate_quantale, check_residuation_laws
from .fixtures import fixture_quantale, CATALOGO_BASE

__all__ = [
    'FiniteQuantale', 'residuate', 'is_integral',
    'validate_quantale', 'check_residuation_laws',
    'fixture_quantale', 'CATALOGO_BASE',
]
