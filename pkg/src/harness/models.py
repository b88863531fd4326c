"""
Modelos del harness: configuracion de generacion y reportes de suite.
"""
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Tuple

from config.settings import settings
from src.core.models import CheckResult, CheckStatus


@dataclass(frozen=True)
class GenConfig:
    """Configuracion de generacion; GenConfig identico => estructuras identicas"""
    seed: int = field(default_factory=lambda: settings.semilla)
    quantale: str = "boolean"
    min_size: int = 1
    max_size: int = 4
    instances: int = field(default_factory=lambda: settings.instancias_suite)
    cap: int = field(default_factory=lambda: settings.cap_enumeracion)
    budget: int = field(default_factory=lambda: settings.presupuesto_suite)
    attempts: int = field(default_factory=lambda: settings.intentos_generador)
    workers: int = field(default_factory=lambda: settings.workers)

    def with_quantale(self, quantale: str) -> 'GenConfig':
        return replace(self, quantale=quantale)

    def to_dict(self) -> Dict[str, Any]:
        # workers no forma parte del reporte: el resultado no depende de el
        return {
            'seed': self.seed,
            'quantale': self.quantale,
            'min_size': self.min_size,
            'max_size': self.max_size,
            'instances': self.instances,
            'cap': self.cap,
            'budget': self.budget,
            'attempts': self.attempts,
        }


@dataclass
class InstanceResult:
    """Resultado de una instancia de suite"""
    index: int
    descriptor: str
    result: CheckResult
    serialization: Optional[Dict] = None   # documento para reproducir fallas

    def to_dict(self) -> Dict[str, Any]:
        datos = {
            'index': self.index,
            'descriptor': self.descriptor,
            'result': self.result.to_dict(),
        }
        if self.serialization is not None:
            datos['instance'] = self.serialization
        return datos


@dataclass
class SuiteReport:
    """Reporte de una suite: instancias en orden canonico y tiempos por fase"""
    suite: str
    config: GenConfig
    instances: List[InstanceResult] = field(default_factory=list)
    phases: Dict[str, float] = field(default_factory=dict)
    refusal: Optional[str] = None

    @property
    def summary(self) -> CheckResult:
        if self.refusal is not None:
            return CheckResult.refused(self.suite, self.refusal)
        return CheckResult.all_of(self.suite, [i.result for i in self.instances])

    @property
    def status(self) -> CheckStatus:
        return self.summary.status

    def counts(self) -> Dict[str, int]:
        conteo = {estado.value: 0 for estado in CheckStatus}
        for instancia in self.instances:
            conteo[instancia.result.status.value] += 1
        return conteo

    def failures(self) -> List[Tuple[InstanceResult, CheckResult]]:
        fallas = []
        for instancia in self.instances:
            falla = instancia.result.first_failure()
            if falla is not None:
                fallas.append((instancia, falla))
        return fallas

    def exit_code(self) -> int:
        """0 todo pasa, 1 alguna falla, 2 rechazo, 3 muestreo sin fallas"""
        estado = self.status
        if estado == CheckStatus.FAIL:
            return 1
        if estado == CheckStatus.REFUSED:
            return 2
        if estado == CheckStatus.SAMPLED:
            return 3
        return 0

    def to_dict(self) -> Dict[str, Any]:
        """Documento legible por maquina; sin tiempos para ser determinista"""
        return {
            'suite': self.suite,
            'config': self.config.to_dict(),
            'status': self.status.value,
            'counts': self.counts(),
            'refusal': self.refusal,
            'instances': [i.to_dict() for i in self.instances],
        }
