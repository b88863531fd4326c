"""
Oraculo clasico para L = Q2.

Con L = {0, 1} las nociones valuadas colapsan a las clasicas. Aqui se
recalculan por fuerza bruta, sobre subconjuntos de puntos y sin usar
el calculo valuado, y se comparan contra este.
"""
from itertools import chain, combinations
from typing import FrozenSet, List, Optional, Sequence, Tuple

from src.core.errors import PreconditionError
from src.core.models import CheckResult
from src.domain.analysis import is_algebraic
from src.domain.way_below import cache_dominios
from src.closure.constructions import down_closure_space
from src.closure.directed import dir_closed_sets
from src.order.dcpo import find_l_order_iso, is_l_dcpo
from src.order.lordered import LOrderedSet, classical_order, directed_values, is_lower_set, sup_index
from src.order.lsubset import LSubset

ORACULOS = ("directed", "ideal", "supremum", "waybelow", "algebraic", "closedsets")

Subconjunto = FrozenSet[int]


class PosetClasico:
    """Orden parcial clasico extraido de un L-orden booleano"""

    def __init__(self, P: LOrderedSet):
        Q = P.quantale
        if Q.size != 2 or not Q.integral:
            raise PreconditionError(f"El oraculo clasico requiere L = Q2 (llego {Q.name})")
        self.n = P.size
        self.leq = [[P.e[x][y] == Q.top for y in range(self.n)] for x in range(self.n)]

    def subconjuntos(self) -> List[Subconjunto]:
        puntos = range(self.n)
        return [frozenset(c) for c in chain.from_iterable(combinations(puntos, k) for k in range(self.n + 1))]

    def es_dirigido(self, D: Subconjunto) -> bool:
        if not D:
            return False
        return all(any(self.leq[a][c] and self.leq[b][c] for c in D) for a in D for b in D)

    def es_inferior(self, D: Subconjunto) -> bool:
        return all(y in D for x in D for y in range(self.n) if self.leq[y][x])

    def supremo(self, D: Subconjunto) -> Optional[int]:
        cotas = [c for c in range(self.n) if all(self.leq[d][c] for d in D)]
        minimas = [c for c in cotas if all(self.leq[c][o] for o in cotas)]
        return minimas[0] if minimas else None

    def way_below(self, y: int, x: int) -> bool:
        """y << x: todo dirigido con supremo >= x contiene un d >= y"""
        for D in self.subconjuntos():
            if not self.es_dirigido(D):
                continue
            s = self.supremo(D)
            if s is not None and self.leq[x][s] and not any(self.leq[y][d] for d in D):
                return False
        return True

    def compactos(self) -> List[int]:
        return [x for x in range(self.n) if self.way_below(x, x)]

    def algebraico(self) -> bool:
        K = self.compactos()
        for x in range(self.n):
            abajo = frozenset(k for k in K if self.leq[k][x])
            if not self.es_dirigido(abajo) or self.supremo(abajo) != x:
                return False
        return True


def _valores(P: LOrderedSet, D: Subconjunto) -> Tuple[int, ...]:
    Q = P.quantale
    return tuple(Q.top if i in D else Q.bottom for i in range(P.size))


def _comparar_conjuntos(P: LOrderedSet, C: PosetClasico, etiqueta: str, clasico, valuado) -> CheckResult:
    for D in C.subconjuntos():
        v = _valores(P, D)
        if clasico(D) != valuado(v):
            return CheckResult.fail(etiqueta, (LSubset(P.carrier, v, P.quantale),),
                                    f"clasico={clasico(D)} valuado={valuado(v)}")
    return CheckResult.ok(etiqueta, f"{2 ** C.n} subconjuntos")


def _oraculo_dirigidos(P: LOrderedSet, C: PosetClasico) -> CheckResult:
    return _comparar_conjuntos(P, C, "directed", C.es_dirigido, lambda v: directed_values(P, v))


def _oraculo_ideales(P: LOrderedSet, C: PosetClasico) -> CheckResult:
    def valuado(v: Sequence[int]) -> bool:
        return directed_values(P, v) and is_lower_set(P, LSubset(P.carrier, v, P.quantale)).passed

    return _comparar_conjuntos(P, C, "ideal", lambda D: C.es_dirigido(D) and C.es_inferior(D), valuado)


def _oraculo_supremos(P: LOrderedSet, C: PosetClasico) -> CheckResult:
    return _comparar_conjuntos(P, C, "supremum", C.supremo, lambda v: sup_index(P, v))


def _oraculo_way_below(P: LOrderedSet, C: PosetClasico) -> CheckResult:
    tabla = cache_dominios.way_below(P)
    for x in range(C.n):
        for y in range(C.n):
            if (tabla[x][y] == P.quantale.top) != C.way_below(y, x):
                return CheckResult.fail("waybelow", (P.points[x], P.points[y]),
                                        f"⇓x(y)={P.quantale.label(tabla[x][y])} difiere de y << x clasico")
    return CheckResult.ok("waybelow")


def _oraculo_algebraico(P: LOrderedSet, C: PosetClasico) -> CheckResult:
    valuado = is_algebraic(P).passed
    clasico = C.algebraico()
    if valuado != clasico:
        return CheckResult.fail("algebraic", (P.name,), f"clasico={clasico} valuado={valuado}")
    return CheckResult.ok("algebraic", f"algebraico={clasico}")


def _oraculo_cerrados(P: LOrderedSet, C: PosetClasico) -> CheckResult:
    """𝔠 de (P, ↓) contra el reticulo clasico de ideales ordenado por inclusion"""
    ideales = [D for D in C.subconjuntos() if C.es_dirigido(D) and C.es_inferior(D)]
    nombres = ["{" + ",".join(str(P.points[i]) for i in sorted(D)) + "}" for D in ideales]
    pares = [(nombres[a], nombres[b]) for a, A in enumerate(ideales) for b, B in enumerate(ideales) if A <= B]
    clasico = classical_order(f"Idl({P.name})", nombres, pares, P.quantale)
    cerrados = dir_closed_sets(down_closure_space(P))
    if find_l_order_iso(cerrados, clasico) is None:
        return CheckResult.fail("closedsets", (P.name,),
                                f"|𝔠|={cerrados.size} no isomorfo a {len(ideales)} ideales clasicos")
    return CheckResult.ok("closedsets", f"{len(ideales)} ideales")


_ORACULOS = {
    "directed": _oraculo_dirigidos,
    "ideal": _oraculo_ideales,
    "supremum": _oraculo_supremos,
    "waybelow": _oraculo_way_below,
    "algebraic": _oraculo_algebraico,
    "closedsets": _oraculo_cerrados,
}


def classical_oracle(suite: str, P: LOrderedSet) -> CheckResult:
    """
    Comparar el calculo valuado contra el clasico sobre un L-orden de Q2.

    Args:
        suite: Uno de ORACULOS o "all"
        P: L-orden sobre Q2

    Raises:
        PreconditionError: si L no es Q2 o la suite no existe
    """
    C = PosetClasico(P)
    if suite == "all":
        nombres = ORACULOS
    elif suite in _ORACULOS:
        nombres = (suite,)
    else:
        raise PreconditionError(f"Oraculo desconocido: {suite} (use {', '.join(ORACULOS)} o all)")
    if any(n in ("waybelow", "algebraic") for n in nombres) and not is_l_dcpo(P).passed:
        raise PreconditionError(f"{P.name} no es L-dcpo: way-below sin definir")
    return CheckResult.all_of(f"oracle-{suite}", [_ORACULOS[n](P, C) for n in nombres], P.name)
