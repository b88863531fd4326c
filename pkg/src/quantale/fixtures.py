"""
Catalogo de quantales de prueba.

Identificadores:
    boolean                     Q2 = ({0,1}, ⊗ = ∧)
    lukasiewicz-N               cadena de N elementos con a⊗b = max(0, a+b-1)
    goedel-N                    cadena de N elementos con a⊗b = min(a, b)
    nonintegral-3               cadena 0 < u < 1 con unidad u y 1⊗1 = 1
    product-<familia>-MxN       producto de dos cadenas (familia lukasiewicz o goedel)
"""
import re
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List

from loguru import logger

from src.core.errors import AxiomError, UnknownFixtureError
from src.core.utils import sugerir
from src.quantale.models import FiniteQuantale
from src.quantale.validation import validate_quantale


FAMILIAS: Dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    'lukasiewicz': lambda a, b: max(Fraction(0), a + b - 1),
    'goedel': min,
}

CATALOGO_BASE = ['boolean', 'lukasiewicz-3', 'goedel-3', 'nonintegral-3']

_PATRON_CADENA = re.compile(r'^(lukasiewicz|goedel)-(\d+)$')
_PATRON_PRODUCTO = re.compile(r'^product-(lukasiewicz|goedel)-(\d+)x(\d+)$')


def _cadena(n: int) -> List[Fraction]:
    return [Fraction(i, n - 1) for i in range(n)]


def _etiqueta(valor: Fraction) -> str:
    return str(valor)


def chain_quantale(familia: str, n: int, name: str = None) -> FiniteQuantale:
    """Cadena {0, 1/(n-1), ..., 1} con t-norma de la familia"""
    if n < 2:
        raise UnknownFixtureError(f"{familia}-{n}", ["cadenas con N >= 2"])
    t = FAMILIAS[familia]
    valores = _cadena(n)
    etiquetas = [_etiqueta(v) for v in valores]
    orden = [(etiquetas[i], etiquetas[i + 1]) for i in range(n - 1)]
    tensor = {(_etiqueta(a), _etiqueta(b)): _etiqueta(t(a, b)) for a in valores for b in valores}
    return FiniteQuantale(etiquetas, orden, tensor, "1", name=name or f"{familia}-{n}")


def product_quantale(familia: str, m: int, n: int) -> FiniteQuantale:
    """Producto de cadenas con orden y tensor componente a componente"""
    t = FAMILIAS[familia]
    izq, der = _cadena(m), _cadena(n)
    pares = [(a, b) for a in izq for b in der]

    def etiqueta(par) -> str:
        return f"({_etiqueta(par[0])},{_etiqueta(par[1])})"

    orden = [(etiqueta(p), etiqueta(q)) for p in pares for q in pares
             if p[0] <= q[0] and p[1] <= q[1]]
    tensor = {(etiqueta(p), etiqueta(q)): etiqueta((t(p[0], q[0]), t(p[1], q[1])))
              for p in pares for q in pares}
    return FiniteQuantale([etiqueta(p) for p in pares], orden, tensor, "(1,1)",
                          name=f"product-{familia}-{m}x{n}")


def boolean_quantale() -> FiniteQuantale:
    tensor = {(a, b): str(int(a == b == "1")) for a in "01" for b in "01"}
    return FiniteQuantale(["0", "1"], [("0", "1")], tensor, "1", name="boolean")


def nonintegral_quantale() -> FiniteQuantale:
    """Cadena 0 < u < 1: u es la unidad, 1⊗1 = 1, 0 absorbe"""
    etiquetas = ["0", "u", "1"]
    tensor = {}
    for a in etiquetas:
        for b in etiquetas:
            if "0" in (a, b):
                tensor[(a, b)] = "0"
            elif a == "u":
                tensor[(a, b)] = b
            elif b == "u":
                tensor[(a, b)] = a
            else:
                tensor[(a, b)] = "1"
    return FiniteQuantale(etiquetas, [("0", "u"), ("u", "1")], tensor, "u", name="nonintegral-3")


def _construir(name: str) -> FiniteQuantale:
    if name == 'boolean':
        return boolean_quantale()
    if name == 'nonintegral-3':
        return nonintegral_quantale()
    cadena = _PATRON_CADENA.match(name)
    if cadena:
        return chain_quantale(cadena.group(1), int(cadena.group(2)))
    producto = _PATRON_PRODUCTO.match(name)
    if producto:
        return product_quantale(producto.group(1), int(producto.group(2)), int(producto.group(3)))
    raise UnknownFixtureError(name, sugerir(name, CATALOGO_BASE + ['product-goedel-2x2']))


@lru_cache(maxsize=None)
def fixture_quantale(name: str) -> FiniteQuantale:
    """
    Quantale del catalogo, re-validado al construir.

    Raises:
        UnknownFixtureError: identificador fuera del catalogo
        AxiomError: si el fixture no valida (no deberia ocurrir)
    """
    Q = _construir(name)
    reporte = validate_quantale(Q)
    if not reporte.passed:
        raise AxiomError(f"Fixture {name} no valida como quantale", reporte)
    logger.debug(f"Fixture de quantale cargado: {name}")
    return Q
