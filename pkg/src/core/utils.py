"""
Utilidades compartidas: topes de enumeracion, sugerencias de nombres y
sub-semillas deterministas.
"""
import hashlib
import random
from typing import Iterable, List, Optional

from rapidfuzz import process

from config.settings import settings
from src.core.errors import ResourceCapError


def check_cap(cantidad: int, tope: Optional[int] = None, que: str = "L-subconjuntos") -> int:
    """
    Verificar que una enumeracion cabe en el tope configurado.

    Returns:
        La cantidad, si cabe

    Raises:
        ResourceCapError: con la cantidad calculada
    """
    limite = settings.cap_enumeracion if tope is None else tope
    if cantidad > limite:
        raise ResourceCapError(cantidad, limite, que)
    return cantidad


def sugerir(nombre: str, opciones: Iterable[str], limite: int = 2) -> List[str]:
    """Nombres del catalogo mas parecidos a `nombre` (score >= 60)"""
    opciones = list(opciones)
    if not opciones:
        return []
    encontrados = process.extract(nombre, opciones, limit=limite, score_cutoff=60)
    return [opcion for opcion, _score, _idx in encontrados]


def sub_seed(semilla: int, *etiquetas) -> int:
    """Derivar una sub-semilla de 64 bits para un sub-flujo con nombre"""
    entrada = ":".join([str(semilla)] + [str(e) for e in etiquetas]).encode('utf-8')
    return int.from_bytes(hashlib.sha256(entrada).digest()[:8], byteorder='big')


def rng_for(semilla: int, *etiquetas) -> random.Random:
    """Generador determinista para un sub-flujo con nombre"""
    return random.Random(sub_seed(semilla, *etiquetas))
