"""
Modelo uniforme de resultados de verificacion.

Todos los verificadores de axiomas (quantale, L-orden, GC/IT/LC/DC, AP,
suites) devuelven un CheckResult: bandera + testigo opcional + traza
legible, con hijos para reportes compuestos.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable, List, Optional


class CheckStatus(Enum):
    """Estado de una verificacion"""
    PASS = "pass"
    FAIL = "fail"
    SAMPLED = "sampled"    # paso, pero sobre una muestra (no exhaustivo)
    REFUSED = "refused"    # precondicion no satisfecha, no se verifico


def render_value(valor: Any) -> Any:
    """Convertir un testigo a algo serializable en JSON"""
    if valor is None or isinstance(valor, (bool, int, float, str)):
        return valor
    if isinstance(valor, (tuple, list)):
        return [render_value(v) for v in valor]
    if isinstance(valor, dict):
        return {str(k): render_value(v) for k, v in valor.items()}
    return str(valor)


@dataclass
class CheckResult:
    """Resultado de una verificacion (hoja o compuesto)"""
    label: str
    status: CheckStatus = CheckStatus.PASS
    witness: Optional[tuple] = None
    trace: str = ""
    children: List['CheckResult'] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Paso (exhaustiva o muestralmente)"""
        return self.status in (CheckStatus.PASS, CheckStatus.SAMPLED)

    def __bool__(self) -> bool:
        return self.passed

    @classmethod
    def ok(cls, label: str, trace: str = "") -> 'CheckResult':
        return cls(label=label, status=CheckStatus.PASS, trace=trace)

    @classmethod
    def fail(cls, label: str, witness: tuple, trace: str = "") -> 'CheckResult':
        return cls(label=label, status=CheckStatus.FAIL, witness=tuple(witness), trace=trace)

    @classmethod
    def sampled(cls, label: str, trace: str = "") -> 'CheckResult':
        return cls(label=label, status=CheckStatus.SAMPLED, trace=trace)

    @classmethod
    def refused(cls, label: str, trace: str) -> 'CheckResult':
        return cls(label=label, status=CheckStatus.REFUSED, trace=trace)

    @classmethod
    def all_of(cls, label: str, children: Iterable['CheckResult'], trace: str = "") -> 'CheckResult':
        """
        Combinar hijos: FAIL si alguno falla, REFUSED si alguno fue rechazado,
        SAMPLED si alguno fue muestral, PASS en otro caso.
        """
        hijos = list(children)
        estados = {h.status for h in hijos}
        if CheckStatus.FAIL in estados:
            estado = CheckStatus.FAIL
        elif CheckStatus.REFUSED in estados:
            estado = CheckStatus.REFUSED
        elif CheckStatus.SAMPLED in estados:
            estado = CheckStatus.SAMPLED
        else:
            estado = CheckStatus.PASS
        resultado = cls(label=label, status=estado, trace=trace, children=hijos)
        falla = resultado.first_failure()
        if falla is not None and falla is not resultado:
            resultado.witness = falla.witness
        return resultado

    def first_failure(self) -> Optional['CheckResult']:
        """Primera hoja fallida en orden canonico (profundidad primero)"""
        if self.status != CheckStatus.FAIL:
            return None
        for hijo in self.children:
            falla = hijo.first_failure()
            if falla is not None:
                return falla
        return self

    def find(self, label: str) -> Optional['CheckResult']:
        """Buscar un resultado por etiqueta en el arbol"""
        if self.label == label:
            return self
        for hijo in self.children:
            encontrado = hijo.find(label)
            if encontrado is not None:
                return encontrado
        return None

    def to_dict(self) -> dict:
        """Convertir a diccionario para reportes"""
        return {
            'label': self.label,
            'status': self.status.value,
            'witness': render_value(self.witness),
            'trace': self.trace,
            'children': [h.to_dict() for h in self.children],
        }

    def describe(self, nivel: int = 0) -> str:
        """Representacion legible con sangria"""
        sangria = "  " * nivel
        linea = f"{sangria}[{self.status.value.upper():7}] {self.label}"
        if self.witness is not None and self.status == CheckStatus.FAIL and not self.children:
            linea += f" testigo={render_value(self.witness)}"
        if self.trace:
            linea += f" - {self.trace}"
        lineas = [linea]
        for hijo in self.children:
            lineas.append(hijo.describe(nivel + 1))
        return "\n".join(lineas)


# Alias: un reporte de validacion es un CheckResult compuesto
ValidationReport = CheckResult
