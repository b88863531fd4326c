"""
Enumeracion de ideales y dirigidos, reconocimiento de L-dcpos, mapeos
entre carriers, extension de Zadeh, continuidad de Scott e isomorfismos.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Hashable, Mapping, Optional, Sequence, Tuple

from loguru import logger
from networkx.algorithms.isomorphism import DiGraphMatcher
import networkx as nx

from config.settings import settings
from src.core.errors import PreconditionError, ResourceCapError, StructuralError
from src.core.models import CheckResult
from src.order.lordered import LOrderedSet, directed_values, sup_index
from src.order.lsubset import Carrier, LSubset, enumerate_constrained, enumerate_values


MODOS = ("ideal", "directed")


# ----------------------------------------------------------------------
# Enumeracion (cacheada por firma estructural del L-orden)
# ----------------------------------------------------------------------

def lower_sets(P: LOrderedSet) -> Tuple[Tuple[int, ...], ...]:
    """Todos los conjuntos inferiores, en orden lexicografico"""
    return _lower_sets(P, settings.cap_enumeracion)


@lru_cache(maxsize=128)
def _lower_sets(P: LOrderedSet, tope: int) -> Tuple[Tuple[int, ...], ...]:
    e, leq, mul = P.e, P.quantale.leq_table, P.quantale.tensor_table

    def admisible(k: int, s: list) -> bool:
        for j in range(k + 1):
            if not leq[mul[s[k]][e[j][k]]][s[j]] or not leq[mul[s[j]][e[k][j]]][s[k]]:
                return False
        return True

    return tuple(enumerate_constrained(P.size, P.quantale, admisible, tope))


def ideals(P: LOrderedSet) -> Tuple[Tuple[int, ...], ...]:
    """Ideales (dirigidos e inferiores) como vectores de valores"""
    return _ideals(P, settings.cap_enumeracion)


@lru_cache(maxsize=128)
def _ideals(P: LOrderedSet, tope: int) -> Tuple[Tuple[int, ...], ...]:
    resultado = tuple(s for s in _lower_sets(P, tope) if directed_values(P, s))
    logger.debug(f"{P.name}: {len(resultado)} ideales")
    return resultado


def directed_subsets(P: LOrderedSet) -> Tuple[Tuple[int, ...], ...]:
    """Todos los L-subconjuntos dirigidos"""
    return _directed(P, settings.cap_enumeracion)


@lru_cache(maxsize=64)
def _directed(P: LOrderedSet, tope: int) -> Tuple[Tuple[int, ...], ...]:
    resultado = tuple(d for d in enumerate_values(P.size, P.quantale, tope) if directed_values(P, d))
    logger.debug(f"{P.name}: {len(resultado)} dirigidos")
    return resultado


def quantified_family(P: LOrderedSet, mode: str = "ideal") -> Tuple[Tuple[int, ...], ...]:
    """Familia sobre la que cuantifican las definiciones (ideales o dirigidos)"""
    if mode not in MODOS:
        raise StructuralError(f"Modo desconocido: {mode} (use {', '.join(MODOS)})")
    return ideals(P) if mode == "ideal" else directed_subsets(P)


def as_subset(P: LOrderedSet, valores: Sequence[int]) -> LSubset:
    return LSubset(P.carrier, tuple(valores), P.quantale)


# ----------------------------------------------------------------------
# L-dcpo
# ----------------------------------------------------------------------

def is_l_dcpo(P: LOrderedSet, mode: str = "ideal") -> CheckResult:
    """
    Todo dirigido tiene supremo. Por defecto se cuantifica sobre ideales
    (equivalente); mode="directed" recorre todos los dirigidos.

    Raises:
        ResourceCapError: si |L|^|P| excede el tope
    """
    for valores in quantified_family(P, mode):
        if sup_index(P, valores) is None:
            return CheckResult.fail("l-dcpo", (as_subset(P, valores),),
                                    f"{'ideal' if mode == 'ideal' else 'dirigido'} sin supremo")
    return CheckResult.ok("l-dcpo", f"{P.name} ({mode})")


def require_l_dcpo(P: LOrderedSet, que: str = "operacion"):
    """Rechazo explicito si P no es L-dcpo"""
    resultado = is_l_dcpo(P)
    if not resultado.passed:
        raise PreconditionError(f"{que}: {P.name} no es un L-dcpo (testigo {resultado.witness[0]})")


# ----------------------------------------------------------------------
# Mapeos entre carriers
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class PointMap:
    """Mapeo total entre carriers; imagenes como indices del destino"""
    source: Carrier
    target: Carrier
    images: Tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.source.size:
            raise StructuralError(f"Mapeo no total sobre {self.source.name}")
        if any(not 0 <= i < self.target.size for i in self.images):
            raise StructuralError(f"Imagen fuera de {self.target.name}")

    def __call__(self, point: Hashable) -> Hashable:
        return self.target.points[self.images[self.source.index(point)]]

    @classmethod
    def from_mapping(cls, source: Carrier, target: Carrier, mapeo: Mapping[Hashable, Hashable]) -> 'PointMap':
        faltantes = [p for p in source.points if p not in mapeo]
        if faltantes:
            raise StructuralError(f"Mapeo sin imagen para {faltantes}")
        return cls(source, target, tuple(target.index(mapeo[p]) for p in source.points))

    @classmethod
    def identity(cls, carrier: Carrier) -> 'PointMap':
        return cls(carrier, carrier, tuple(range(carrier.size)))

    def then(self, other: 'PointMap') -> 'PointMap':
        """other ∘ self"""
        if self.target != other.source:
            raise StructuralError(f"Composicion invalida: {self.target.name} != {other.source.name}")
        return PointMap(self.source, other.target, tuple(other.images[i] for i in self.images))

    def is_bijection(self) -> bool:
        return self.source.size == self.target.size and len(set(self.images)) == self.source.size

    def as_dict(self) -> Dict[Hashable, Hashable]:
        return {p: self.target.points[i] for p, i in zip(self.source.points, self.images)}


def zadeh_values(f: PointMap, a: Sequence[int], Q) -> Tuple[int, ...]:
    join = Q.join_table
    valores = [Q.bottom] * f.target.size
    for x, v in enumerate(a):
        y = f.images[x]
        valores[y] = join[valores[y]][v]
    return tuple(valores)


def zadeh_forward(f: PointMap, A: LSubset) -> LSubset:
    """f→(A)(y) = ⋁_{f(x)=y} A(x)"""
    if A.carrier != f.source:
        raise StructuralError(f"Zadeh: A sobre {A.carrier.name}, mapeo desde {f.source.name}")
    return LSubset(f.target, zadeh_values(f, A.values, A.quantale), A.quantale)


def is_order_preserving(f: PointMap, P: LOrderedSet, R: LOrderedSet) -> CheckResult:
    """e_P(x, y) <= e_R(f(x), f(y))"""
    leq = P.quantale.leq_table
    for x in range(P.size):
        for y in range(P.size):
            if not leq[P.e[x][y]][R.e[f.images[x]][f.images[y]]]:
                return CheckResult.fail("order-preserving", (P.points[x], P.points[y]),
                                        "e_P(x,y) > e_Q(f(x),f(y))")
    return CheckResult.ok("order-preserving")


def is_scott_continuous(f: PointMap, P: LOrderedSet, R: LOrderedSet, mode: str = "ideal") -> CheckResult:
    """
    f preserva el L-orden y f(⊔D) = ⊔f→(D) para todo dirigido D (o ideal).

    Raises:
        PreconditionError: si P o R no son L-dcpos o difieren en quantale
    """
    if P.quantale != R.quantale:
        raise PreconditionError("Scott: los L-ordenes usan quantales distintos")
    if f.source != P.carrier or f.target != R.carrier:
        raise StructuralError("Scott: el mapeo no va de P a Q")
    require_l_dcpo(P, "Scott")
    require_l_dcpo(R, "Scott")

    orden = is_order_preserving(f, P, R)
    if not orden.passed:
        return CheckResult.all_of("scott-continuous", [orden])

    Q = P.quantale
    sup = CheckResult.ok("directed-sups")
    for valores in quantified_family(P, mode):
        s = sup_index(P, valores)
        t = sup_index(R, zadeh_values(f, valores, Q))
        if t is None or f.images[s] != t:
            sup = CheckResult.fail("directed-sups", (as_subset(P, valores),), "f(⊔D) != ⊔f→(D)")
            break
    return CheckResult.all_of("scott-continuous", [orden, sup])


# ----------------------------------------------------------------------
# Isomorfismos
# ----------------------------------------------------------------------

def check_iso_via(f: PointMap, P: LOrderedSet, R: LOrderedSet) -> CheckResult:
    """f es biyeccion y e_P(x, y) = e_Q(f(x), f(y))"""
    if not f.is_bijection():
        return CheckResult.fail("iso", (), "el mapeo no es biyectivo")
    for x in range(P.size):
        for y in range(P.size):
            if P.e[x][y] != R.e[f.images[x]][f.images[y]]:
                return CheckResult.fail("iso", (P.points[x], P.points[y]), "e_P(x,y) != e_Q(f(x),f(y))")
    return CheckResult.ok("iso")


def _grafo_grados(P: LOrderedSet) -> nx.DiGraph:
    grafo = nx.DiGraph()
    for x in range(P.size):
        grafo.add_node(x, grado=P.e[x][x])
    for x in range(P.size):
        for y in range(P.size):
            if x != y:
                grafo.add_edge(x, y, grado=P.e[x][y])
    return grafo


def find_l_order_iso(P: LOrderedSet, R: LOrderedSet) -> Optional[PointMap]:
    """
    Buscar una biyeccion que preserve e exactamente.

    Raises:
        ResourceCapError: si |P| excede settings.max_iso
    """
    if P.quantale != R.quantale:
        raise PreconditionError("Isomorfismo: los L-ordenes usan quantales distintos")
    if max(P.size, R.size) > settings.max_iso:
        raise ResourceCapError(max(P.size, R.size), settings.max_iso, "puntos para busqueda de isomorfismo")
    if P.size != R.size:
        return None
    matcher = DiGraphMatcher(
        _grafo_grados(P), _grafo_grados(R),
        node_match=lambda a, b: a['grado'] == b['grado'],
        edge_match=lambda a, b: a['grado'] == b['grado'],
    )
    for correspondencia in matcher.isomorphisms_iter():
        return PointMap(P.carrier, R.carrier, tuple(correspondencia[x] for x in range(P.size)))
    return None
