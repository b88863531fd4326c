"""
Conjuntos L-ordenados: validacion, conjuntos inferiores/superiores,
dirigidos, ideales, supremos e infimos.
"""
from typing import Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from loguru import logger

from src.core.errors import CarrierMismatchError, StructuralError
from src.core.models import CheckResult
from src.core.utils import check_cap
from src.order.lsubset import (
    Carrier, LSubset, enumerate_lsubsets, sub_values,
)
from src.quantale.models import FiniteQuantale


class LOrderedSet:
    """
    Carrier con un L-orden e guardado como tabla densa de indices.

    La construccion no valida los axiomas; usar validate_l_order.
    """

    def __init__(self, carrier: Carrier, e: Sequence[Sequence[int]], quantale: FiniteQuantale):
        n = carrier.size
        if len(e) != n or any(len(fila) != n for fila in e):
            raise StructuralError(f"Tabla e de {carrier.name} no es {n}x{n}")
        self.carrier = carrier
        self.quantale = quantale
        self.e: Tuple[Tuple[int, ...], ...] = tuple(tuple(fila) for fila in e)
        self._signature = (carrier, self.e, quantale.signature)
        self._hash = hash(self._signature)

    @property
    def name(self) -> str:
        return self.carrier.name

    @property
    def size(self) -> int:
        return self.carrier.size

    @property
    def points(self) -> Tuple[Hashable, ...]:
        return self.carrier.points

    def degree(self, x: Hashable, y: Hashable) -> int:
        """e(x, y)"""
        return self.e[self.carrier.index(x)][self.carrier.index(y)]

    def column(self, j: int) -> Tuple[int, ...]:
        """Valores e(., j)"""
        return tuple(fila[j] for fila in self.e)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LOrderedSet):
            return NotImplemented
        return self._signature == other._signature

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"LOrderedSet({self.name}, |P|={self.size}, L={self.quantale.name})"

    def check_subset(self, S: LSubset):
        if S.carrier != self.carrier:
            raise CarrierMismatchError(
                f"L-subconjunto sobre {S.carrier.name} usado en {self.carrier.name}")


def from_triples(
    name: str,
    points: Sequence[Hashable],
    triples: Iterable[Tuple[Hashable, Hashable, str]],
    Q: FiniteQuantale,
) -> LOrderedSet:
    """
    Construir desde triples (x, y, grado). Pares omitidos valen 0 y la
    diagonal omitida vale u.
    """
    carrier = Carrier(name, points)
    n = carrier.size
    e = [[Q.unit if i == j else Q.bottom for j in range(n)] for i in range(n)]
    for x, y, grado in triples:
        e[carrier.index(x)][carrier.index(y)] = Q.index(grado)
    return LOrderedSet(carrier, e, Q)


def classical_order(name: str, points: Sequence[Hashable], leq_pairs: Iterable[Tuple[Hashable, Hashable]],
                    Q: FiniteQuantale) -> LOrderedSet:
    """Orden crisp: e = u sobre la cerradura reflexiva-transitiva de los pares, 0 fuera"""
    carrier = Carrier(name, points)
    grafo = nx.DiGraph()
    grafo.add_nodes_from(range(carrier.size))
    grafo.add_edges_from((carrier.index(a), carrier.index(b)) for a, b in leq_pairs)
    cerradura = nx.transitive_closure(grafo, reflexive=True)
    n = carrier.size
    e = [[Q.unit if cerradura.has_edge(i, j) else Q.bottom for j in range(n)] for i in range(n)]
    return LOrderedSet(carrier, e, Q)


def validate_l_order(P: LOrderedSet) -> CheckResult:
    """Reflexividad (>= u), transitividad (⊗) y antisimetria"""
    Q, e, n, pts = P.quantale, P.e, P.size, P.points
    leq, mul, meet = Q.leq_table, Q.tensor_table, Q.meet_table
    hijos: List[CheckResult] = []

    refl = CheckResult.ok("reflexivity")
    for x in range(n):
        if not Q.geq_unit(e[x][x]):
            refl = CheckResult.fail("reflexivity", (pts[x],), "e(x,x) < u")
            break
    hijos.append(refl)

    trans = CheckResult.ok("transitivity")
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if not leq[mul[e[x][y]][e[y][z]]][e[x][z]]:
                    trans = CheckResult.fail("transitivity", (pts[x], pts[y], pts[z]),
                                             "e(x,y)⊗e(y,z) > e(x,z)")
                    break
            if not trans:
                break
        if not trans:
            break
    hijos.append(trans)

    anti = CheckResult.ok("antisymmetry")
    for x in range(n):
        for y in range(x + 1, n):
            if Q.geq_unit(meet[e[x][y]][e[y][x]]):
                anti = CheckResult.fail("antisymmetry", (pts[x], pts[y]), "e(x,y)∧e(y,x) >= u con x != y")
                break
        if not anti:
            break
    hijos.append(anti)
    return CheckResult.all_of("l-order", hijos, P.name)


# ----------------------------------------------------------------------
# Conjuntos principales
# ----------------------------------------------------------------------

def down_set(P: LOrderedSet, x: Hashable) -> LSubset:
    """↓x(y) = e(y, x)"""
    return LSubset(P.carrier, P.column(P.carrier.index(x)), P.quantale)


def up_set(P: LOrderedSet, x: Hashable) -> LSubset:
    """↑x(y) = e(x, y)"""
    return LSubset(P.carrier, P.e[P.carrier.index(x)], P.quantale)


def _lower_violation(P: LOrderedSet, s: Sequence[int]) -> Optional[Tuple[int, int]]:
    """Primer par (y, x) con S(x)⊗e(y,x) > S(y)"""
    e, leq, mul = P.e, P.quantale.leq_table, P.quantale.tensor_table
    n = P.size
    for y in range(n):
        for x in range(n):
            if not leq[mul[s[x]][e[y][x]]][s[y]]:
                return y, x
    return None


def _upper_violation(P: LOrderedSet, s: Sequence[int]) -> Optional[Tuple[int, int]]:
    """Primer par (x, y) con S(x)⊗e(x,y) > S(y)"""
    e, leq, mul = P.e, P.quantale.leq_table, P.quantale.tensor_table
    n = P.size
    for x in range(n):
        for y in range(n):
            if not leq[mul[s[x]][e[x][y]]][s[y]]:
                return x, y
    return None


def is_lower_set(P: LOrderedSet, S: LSubset) -> CheckResult:
    P.check_subset(S)
    par = _lower_violation(P, S.values)
    if par is None:
        return CheckResult.ok("lower-set")
    return CheckResult.fail("lower-set", (P.points[par[0]], P.points[par[1]]), "S(x)⊗e(y,x) > S(y)")


def is_upper_set(P: LOrderedSet, S: LSubset) -> CheckResult:
    P.check_subset(S)
    par = _upper_violation(P, S.values)
    if par is None:
        return CheckResult.ok("upper-set")
    return CheckResult.fail("upper-set", (P.points[par[0]], P.points[par[1]]), "S(x)⊗e(x,y) > S(y)")


# ----------------------------------------------------------------------
# Dirigidos e ideales
# ----------------------------------------------------------------------

def _d1_holds(P: LOrderedSet, d: Sequence[int]) -> bool:
    Q = P.quantale
    return Q.geq_unit(Q.join_all(d))


def _d2_violation(P: LOrderedSet, d: Sequence[int]) -> Optional[Tuple[int, int]]:
    """Primer par (x, y) con D(x)⊗D(y) > ⋁_z D(z)⊗e(x,z)⊗e(y,z)"""
    Q, e, n = P.quantale, P.e, P.size
    leq, mul, join = Q.leq_table, Q.tensor_table, Q.join_table
    soporte = [z for z in range(n) if d[z] != Q.bottom]
    for x in range(n):
        if d[x] == Q.bottom:
            continue
        for y in range(n):
            izquierda = mul[d[x]][d[y]]
            if izquierda == Q.bottom:
                continue
            derecha = Q.bottom
            for z in soporte:
                derecha = join[derecha][mul[mul[d[z]][e[x][z]]][e[y][z]]]
            if not leq[izquierda][derecha]:
                return x, y
    return None


def directed_values(P: LOrderedSet, d: Sequence[int]) -> bool:
    """Predicado rapido de dirigido sobre un vector de valores"""
    return _d1_holds(P, d) and _d2_violation(P, d) is None


def is_directed(P: LOrderedSet, D: LSubset) -> CheckResult:
    """
    (D1) ⋁D(x) >= u literal (no no-vacuidad clasica) y
    (D2) D(x)⊗D(y) <= ⋁_z D(z)⊗e(x,z)⊗e(y,z).
    """
    P.check_subset(D)
    Q = P.quantale
    d1 = CheckResult.ok("D1")
    if not _d1_holds(P, D.values):
        d1 = CheckResult.fail("D1", (Q.label(Q.join_all(D.values)),), "⋁D(x) < u")
    par = _d2_violation(P, D.values)
    d2 = CheckResult.ok("D2")
    if par is not None:
        d2 = CheckResult.fail("D2", (P.points[par[0]], P.points[par[1]]),
                              "D(x)⊗D(y) > ⋁_z D(z)⊗e(x,z)⊗e(y,z)")
    return CheckResult.all_of("directed", [d1, d2])


def is_ideal(P: LOrderedSet, I: LSubset) -> CheckResult:
    """Dirigido y conjunto inferior"""
    return CheckResult.all_of("ideal", [is_directed(P, I), is_lower_set(P, I)])


# ----------------------------------------------------------------------
# Supremos e infimos
# ----------------------------------------------------------------------

def _unico(P: LOrderedSet, objetivo: Tuple[int, ...], por_fila: bool, que: str) -> Optional[int]:
    """Unico punto cuya fila (o columna) de e coincide con el objetivo"""
    n = P.size
    encontrados = [x for x in range(n)
                   if (P.e[x] if por_fila else P.column(x)) == objetivo]
    if len(encontrados) > 1:
        raise StructuralError(
            f"{que} no unico en {P.name}: {[P.points[x] for x in encontrados]} (orden no antisimetrico)")
    return encontrados[0] if encontrados else None


def sup_index(P: LOrderedSet, a: Sequence[int]) -> Optional[int]:
    """x0 con e(x0, y) = sub(A, ↓y) para todo y"""
    Q = P.quantale
    objetivo = tuple(sub_values(Q, a, P.column(y)) for y in range(P.size))
    return _unico(P, objetivo, True, "Supremo")


def inf_index(P: LOrderedSet, a: Sequence[int]) -> Optional[int]:
    """x0 con e(y, x0) = sub(A, ↑y) para todo y"""
    Q = P.quantale
    objetivo = tuple(sub_values(Q, a, P.e[y]) for y in range(P.size))
    return _unico(P, objetivo, False, "Infimo")


def supremum(P: LOrderedSet, A: LSubset) -> Optional[Hashable]:
    """Supremo de A o None si no existe (la ausencia es un valor)"""
    P.check_subset(A)
    x = sup_index(P, A.values)
    return None if x is None else P.points[x]


def infimum(P: LOrderedSet, A: LSubset) -> Optional[Hashable]:
    """Infimo de A o None si no existe"""
    P.check_subset(A)
    x = inf_index(P, A.values)
    return None if x is None else P.points[x]


# ----------------------------------------------------------------------
# Ordenes construidos
# ----------------------------------------------------------------------

def family_order(family: Iterable[LSubset], name: str, ordenar: bool = False) -> LOrderedSet:
    """
    (τ, sub) para una familia de L-subconjuntos de un mismo carrier.

    Duplicados se eliminan; con `ordenar` la familia queda en orden
    lexicografico de valores.
    """
    vistos, miembros = set(), []
    for A in family:
        if A not in vistos:
            vistos.add(A)
            miembros.append(A)
    if not miembros:
        raise StructuralError(f"Familia vacia para {name}")
    if ordenar:
        miembros.sort(key=lambda A: A.values)
    Q = miembros[0].quantale
    e = [[sub_values(Q, A.values, B.values) for B in miembros] for A in miembros]
    return LOrderedSet(Carrier(name, miembros), e, Q)


def powerset_order(carrier: Carrier, Q: FiniteQuantale, tope: Optional[int] = None) -> LOrderedSet:
    """(L^X, sub) completo"""
    n = Q.size ** carrier.size
    check_cap(n, tope)
    logger.debug(f"Construyendo (L^X, sub) para {carrier.name}: {n} puntos")
    return family_order(enumerate_lsubsets(carrier, Q, tope), f"L^{carrier.name}")


def residuation_order(Q: FiniteQuantale) -> LOrderedSet:
    """(L, e_L) con e_L(x, y) = x -> y"""
    carrier = Carrier(Q.name, Q.elements)
    return LOrderedSet(carrier, Q.res_table, Q)


def compose_tables(Q: FiniteQuantale, R: Sequence[Sequence[int]], S: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    """
    Composicion de L-relaciones: (S∘R)(x, z) = ⋁_y R(x, y)⊗S(y, z).

    Args:
        Q: Quantale comun
        R: Tabla |X| x |Y|
        S: Tabla |Y| x |Z|
    """
    mul, join = Q.tensor_table, Q.join_table
    filas = len(R)
    medio = len(S)
    columnas = len(S[0]) if S else 0
    resultado = []
    for x in range(filas):
        fila = []
        for z in range(columnas):
            acumulado = Q.bottom
            for y in range(medio):
                acumulado = join[acumulado][mul[R[x][y]][S[y][z]]]
            fila.append(acumulado)
        resultado.append(tuple(fila))
    return tuple(resultado)
