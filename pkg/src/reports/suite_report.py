"""
Reportes de suite en texto legible y en JSON.

El JSON omite los tiempos por fase: para una GenConfig fija sus bytes
no dependen de la corrida ni del numero de workers.
"""
import json
from pathlib import Path
from typing import Tuple

from loguru import logger

from src.core.models import CheckStatus, render_value
from src.harness.models import SuiteReport


def suite_text(reporte: SuiteReport) -> str:
    """Resumen legible: encabezado, conteos, fallos con testigo y tiempos"""
    lineas = [
        f"Suite {reporte.suite}: {reporte.status.value.upper()}",
        "  " + " ".join(f"{k}={v}" for k, v in reporte.config.to_dict().items()),
    ]
    if reporte.refusal:
        lineas.append(f"  Rechazada: {reporte.refusal}")
        return "\n".join(lineas)
    conteo = reporte.counts()
    lineas.append("  Instancias: " + ", ".join(f"{k} {v}" for k, v in conteo.items() if v))
    for instancia, falla in reporte.failures():
        lineas.append(
            f"  FALLA #{instancia.index} [{instancia.descriptor}] {falla.label}: "
            f"testigo={render_value(falla.witness)} {falla.trace}".rstrip())
    muestreadas = [i for i in reporte.instances if i.result.status == CheckStatus.SAMPLED]
    if muestreadas:
        lineas.append(f"  Muestreo: {len(muestreadas)} instancias verificadas sobre muestra o omitidas por tope")
    for fase, segundos in reporte.phases.items():
        lineas.append(f"  {fase}: {segundos:.2f} s")
    return "\n".join(lineas)


def suite_detail(reporte: SuiteReport) -> str:
    """Arbol completo de verificaciones por instancia"""
    bloques = [suite_text(reporte)]
    for instancia in reporte.instances:
        bloques.append(f"#{instancia.index} {instancia.descriptor}\n{instancia.result.describe(1)}")
    return "\n".join(bloques)


def suite_json(reporte: SuiteReport) -> str:
    return json.dumps(reporte.to_dict(), ensure_ascii=False, indent=2, sort_keys=True)


def guardar_reporte(reporte: SuiteReport, output_dir: Path) -> Tuple[Path, Path]:
    """
    Escribir los reportes de texto y JSON de una suite.

    Returns:
        (ruta_txt, ruta_json)
    """
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    base = f"suite_{reporte.suite}_{reporte.config.seed}"
    ruta_txt = output_dir / f"{base}.txt"
    ruta_json = output_dir / f"{base}.json"
    ruta_txt.write_text(suite_detail(reporte) + "\n", encoding='utf-8')
    ruta_json.write_text(suite_json(reporte) + "\n", encoding='utf-8')
    logger.info(f"Reportes de suite guardados: {ruta_txt.name}, {ruta_json.name}")
    return ruta_txt, ruta_json
