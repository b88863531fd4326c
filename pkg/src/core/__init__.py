# Modulo Core - Resultados de verificacion, errores y utilidades compartidas
from .errors import (
    WorkbenchError, StructuralError, CarrierMismatchError, UnknownPointError,
    UnknownFixtureError, UnknownSuiteError, UnknownObjectError, ParseError, ResourceCapError,
    PreconditionError, IntegralityError, AxiomError,
)
from .models import CheckResult, CheckStatus

__all__ = [
    'WorkbenchError', 'StructuralError', 'CarrierMismatchError', 'UnknownPointError',
    'UnknownFixtureError', 'UnknownSuiteError', 'UnknownObjectError', 'ParseError', 'ResourceCapError',
    'PreconditionError', 'IntegralityError', 'AxiomError',
    'CheckResult', 'CheckStatus',
]
