"""
Jerarquia de errores del banco de trabajo.

Cada error lleva un `codigo` estable (para reportes) y el `exit_code` que
usa la CLI: 1 falla matematica, 2 error de entrada o compuerta.
Las fallas de axiomas NO son excepciones: los verificadores devuelven
CheckResult con testigo. Las excepciones quedan para estructura, topes
y rechazos explicitos.
"""
from typing import List, Optional


class WorkbenchError(Exception):
    """Error base del banco de trabajo"""
    codigo = "ERROR"
    exit_code = 2

    def __init__(self, mensaje: str):
        super().__init__(mensaje)
        self.mensaje = mensaje


class StructuralError(WorkbenchError):
    """Tabla incompleta, etiqueta desconocida o documento mal formado"""
    codigo = "ESTRUCTURA"


class CarrierMismatchError(StructuralError):
    """Se combinaron L-subconjuntos de carriers distintos"""
    codigo = "CARRIER_DISTINTO"


class UnknownPointError(StructuralError):
    """Punto que no pertenece al carrier"""
    codigo = "PUNTO_DESCONOCIDO"


class ParseError(StructuralError):
    """Documento de definicion ilegible"""
    codigo = "PARSEO"


class _UnknownIdError(StructuralError):
    """Identificador desconocido con sugerencias del catalogo"""

    def __init__(self, identificador: str, sugerencias: Optional[List[str]] = None):
        self.identificador = identificador
        self.sugerencias = sugerencias or []
        mensaje = f"{self.tipo} desconocido: '{identificador}'"
        if self.sugerencias:
            mensaje += f" (quiza: {', '.join(self.sugerencias)})"
        super().__init__(mensaje)


class UnknownFixtureError(_UnknownIdError):
    codigo = "FIXTURE_DESCONOCIDO"
    tipo = "Fixture"


class UnknownSuiteError(_UnknownIdError):
    codigo = "SUITE_DESCONOCIDA"
    tipo = "Suite"


class UnknownObjectError(_UnknownIdError):
    codigo = "OBJETO_DESCONOCIDO"
    tipo = "Objeto"


class ResourceCapError(WorkbenchError):
    """La enumeracion requerida excede el tope configurado"""
    codigo = "TOPE_EXCEDIDO"

    def __init__(self, cantidad: int, tope: int, que: str = "L-subconjuntos"):
        self.cantidad = cantidad
        self.tope = tope
        super().__init__(f"Enumeracion de {que} excede el tope: {cantidad:,} > {tope:,}")


class PreconditionError(WorkbenchError):
    """Rechazo explicito: la entrada no cumple la precondicion de la operacion"""
    codigo = "PRECONDICION"


class IntegralityError(PreconditionError):
    """La operacion solo esta definida sobre quantales integrales (u = 1)"""
    codigo = "NO_INTEGRAL"


class AxiomError(WorkbenchError):
    """Una estructura que debia validar no valida"""
    codigo = "AXIOMA"
    exit_code = 1

    def __init__(self, mensaje: str, resultado=None):
        super().__init__(mensaje)
        self.resultado = resultado
