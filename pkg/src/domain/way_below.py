"""
Relacion way-below (⇓x), elementos compactos y k(x).

⇓x se calcula por la forma de ideales:
    ⇓x(y) = ⋀_I e(x, ⊔I) -> I(y)
y la forma sobre dirigidos queda como oraculo:
    ⇓x(y) = ⋀_D e(x, ⊔D) -> ⋁_d D(d)⊗e(y, d)
"""
from typing import Dict, Hashable, Tuple

from loguru import logger

from src.core.errors import PreconditionError
from src.order.dcpo import directed_subsets, ideals, require_l_dcpo
from src.order.lordered import LOrderedSet, sup_index
from src.order.lsubset import LSubset

Tabla = Tuple[Tuple[int, ...], ...]


def _sup_obligatorio(P: LOrderedSet, valores) -> int:
    s = sup_index(P, valores)
    if s is None:
        raise PreconditionError(f"{P.name} no es un L-dcpo: dirigido sin supremo")
    return s


def _tabla_ideales(P: LOrderedSet) -> Tabla:
    Q, e, n = P.quantale, P.e, P.size
    res, meet = Q.res_table, Q.meet_table
    acumulado = [[Q.top] * n for _ in range(n)]
    for I in ideals(P):
        s = _sup_obligatorio(P, I)
        for x in range(n):
            r = res[e[x][s]]
            fila = acumulado[x]
            for y in range(n):
                fila[y] = meet[fila[y]][r[I[y]]]
    return tuple(tuple(f) for f in acumulado)


def _tabla_dirigidos(P: LOrderedSet) -> Tabla:
    Q, e, n = P.quantale, P.e, P.size
    res, meet, join, mul = Q.res_table, Q.meet_table, Q.join_table, Q.tensor_table
    acumulado = [[Q.top] * n for _ in range(n)]
    for D in directed_subsets(P):
        s = _sup_obligatorio(P, D)
        abajo = []
        for y in range(n):
            v = Q.bottom
            for d in range(n):
                v = join[v][mul[D[d]][e[y][d]]]
            abajo.append(v)
        for x in range(n):
            r = res[e[x][s]]
            fila = acumulado[x]
            for y in range(n):
                fila[y] = meet[fila[y]][r[abajo[y]]]
    return tuple(tuple(f) for f in acumulado)


class CacheDominios:
    """
    Cache en memoria de ⇓ y K(P) por L-orden.
    La clave es la firma estructural (carrier, e, quantale) del L-orden.
    """

    def __init__(self):
        self._ideales: Dict[LOrderedSet, Tabla] = {}
        self._dirigidos: Dict[LOrderedSet, Tabla] = {}
        self._compactos: Dict[LOrderedSet, Tuple[int, ...]] = {}

    def way_below(self, P: LOrderedSet) -> Tabla:
        """Tabla completa de ⇓ (forma de ideales)"""
        if P not in self._ideales:
            require_l_dcpo(P, "way-below")
            self._ideales[P] = _tabla_ideales(P)
            logger.debug(f"⇓ calculado para {P.name} ({P.size} puntos)")
        return self._ideales[P]

    def way_below_alt(self, P: LOrderedSet) -> Tabla:
        """Tabla completa de ⇓ (forma de dirigidos)"""
        if P not in self._dirigidos:
            require_l_dcpo(P, "way-below")
            self._dirigidos[P] = _tabla_dirigidos(P)
        return self._dirigidos[P]

    def compact_indices(self, P: LOrderedSet) -> Tuple[int, ...]:
        """Indices x con ⇓x(x) >= u"""
        if P not in self._compactos:
            tabla = self.way_below(P)
            Q = P.quantale
            self._compactos[P] = tuple(x for x in range(P.size) if Q.geq_unit(tabla[x][x]))
        return self._compactos[P]

    def limpiar(self):
        self._ideales.clear()
        self._dirigidos.clear()
        self._compactos.clear()

    def estadisticas(self) -> dict:
        return {
            'tablas_ideales': len(self._ideales),
            'tablas_dirigidos': len(self._dirigidos),
            'compactos': len(self._compactos),
        }


# Instancia global (una por proceso)
cache_dominios = CacheDominios()


def way_below(P: LOrderedSet, x: Hashable) -> LSubset:
    """
    ⇓x por la forma de ideales.

    Raises:
        PreconditionError: si P no es un L-dcpo
        ResourceCapError: si la enumeracion excede el tope
    """
    i = P.carrier.index(x)
    return LSubset(P.carrier, cache_dominios.way_below(P)[i], P.quantale)


def way_below_alt(P: LOrderedSet, x: Hashable) -> LSubset:
    """⇓x por la forma sobre todos los dirigidos"""
    i = P.carrier.index(x)
    return LSubset(P.carrier, cache_dominios.way_below_alt(P)[i], P.quantale)


def compact_elements(P: LOrderedSet) -> Tuple[Hashable, ...]:
    """K(P) = {x : ⇓x(x) >= u}"""
    return tuple(P.points[x] for x in cache_dominios.compact_indices(P))


def k_values(P: LOrderedSet, x: int) -> Tuple[int, ...]:
    compactos = set(cache_dominios.compact_indices(P))
    Q = P.quantale
    return tuple(P.e[y][x] if y in compactos else Q.bottom for y in range(P.size))


def k_subset(P: LOrderedSet, x: Hashable) -> LSubset:
    """k(x)(y) = e(y, x) si y ∈ K(P), 0 en otro caso"""
    return LSubset(P.carrier, k_values(P, P.carrier.index(x)), P.quantale)
