"""
Generadores aleatorios deterministas de estructuras.

Toda aleatoriedad sale del random.Random que recibe cada generador
(derivado con sub-semillas sha256 de la GenConfig). Cada estructura
emitida se revalida; nada se confia a la construccion.
"""
import random
from typing import Optional

import networkx as nx
from loguru import logger

from src.core.errors import PreconditionError, ResourceCapError
from src.approx.functor import scott_maps, theta_of
from src.approx.models import ApproxRelation, ScottMap
from src.closure.constructions import closure_of_domain, down_closure_space
from src.closure.directed import dir_closed_sets
from src.closure.models import ClosureSpace, PointGeneratedOperator
from src.closure.validation import is_interpolative, is_l_closure_space, validate_generalized
from src.domain.analysis import is_continuous
from src.harness.models import GenConfig
from src.order.dcpo import PointMap, is_l_dcpo, is_scott_continuous
from src.order.lordered import LOrderedSet, validate_l_order
from src.order.lsubset import Carrier
from src.quantale.fixtures import fixture_quantale

ROUTES = ("domain", "lclosure", "random")


def _puntos(n: int):
    return [f"p{i}" for i in range(n)]


def _reparar_transitividad(Q, e):
    """e(x,z) := e(x,z) ∨ ⋁_y e(x,y)⊗e(y,z) hasta punto fijo"""
    n = len(e)
    join, mul = Q.join_table, Q.tensor_table
    cambio = True
    while cambio:
        cambio = False
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    v = join[e[x][z]][mul[e[x][y]][e[y][z]]]
                    if v != e[x][z]:
                        e[x][z] = v
                        cambio = True
    return e


def gen_l_ordered_set(cfg: GenConfig, rng: random.Random, size: Optional[int] = None,
                      name: str = "P") -> LOrderedSet:
    """
    L-orden aleatorio: esqueleto clasico (DAG cerrado con networkx), grados
    >= u sobre el esqueleto, grados arbitrarios fuera de el, reparacion de
    transitividad y rechazo si falla la antisimetria.

    Raises:
        PreconditionError: si se agota el presupuesto de rechazo
    """
    Q = fixture_quantale(cfg.quantale)
    altos = [a for a in range(Q.size) if Q.geq_unit(a)]
    bajos = [a for a in range(Q.size) if not Q.geq_unit(a)]
    for intento in range(cfg.attempts):
        n = size if size is not None else rng.randint(cfg.min_size, cfg.max_size)
        grafo = nx.DiGraph()
        grafo.add_nodes_from(range(n))
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.4:
                    grafo.add_edge(i, j)
        esqueleto = nx.transitive_closure(grafo, reflexive=True)
        e = [[Q.bottom] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if esqueleto.has_edge(i, j):
                    e[i][j] = rng.choice(altos)
                elif bajos and rng.random() < 0.35:
                    e[i][j] = rng.choice(bajos)
        e = _reparar_transitividad(Q, e)
        P = LOrderedSet(Carrier(name, _puntos(n)), e, Q)
        if validate_l_order(P).passed:
            if intento:
                logger.debug(f"L-orden generado tras {intento + 1} intentos")
            return P
    raise PreconditionError(f"Presupuesto de rechazo agotado generando L-ordenes sobre {Q.name}")


def gen_l_dcpo(cfg: GenConfig, rng: random.Random, name: str = "P") -> LOrderedSet:
    """
    L-dcpo aleatorio: L-orden aleatorio aceptado si es L-dcpo; si no,
    la familia de cerrados dirigidos de (P, ↓) para un P de a lo sumo dos
    puntos, que siempre lo es.
    """
    for _ in range(max(1, cfg.attempts // 10)):
        P = gen_l_ordered_set(cfg, rng, name=name)
        if is_l_dcpo(P).passed:
            return P
    P = gen_l_ordered_set(cfg, rng, size=min(2, cfg.max_size), name=name)
    P = dir_closed_sets(_validado(down_closure_space(P)))
    if not is_l_dcpo(P).passed:
        raise PreconditionError(f"{P.name} no es L-dcpo")
    return P


def _validado(S: ClosureSpace) -> ClosureSpace:
    validate_generalized(S)
    is_interpolative(S)
    return S


def _espacio_aleatorio(cfg: GenConfig, rng: random.Random, l_cerradura: bool = False) -> Optional[ClosureSpace]:
    """Rechazo: C_x aleatorios hasta que el espacio sea interpolativo (y de L-cerradura si se pide)"""
    Q = fixture_quantale(cfg.quantale)
    for _ in range(cfg.attempts):
        n = rng.randint(cfg.min_size, cfg.max_size)
        carrier = Carrier("X", _puntos(n))
        cierres = [[rng.randrange(Q.size) for _ in range(n)] for _ in range(n)]
        S = ClosureSpace(carrier, PointGeneratedOperator(carrier, Q, cierres))
        if not (validate_generalized(S).passed and is_interpolative(S).passed):
            continue
        if not l_cerradura or is_l_closure_space(S).passed:
            return S
    return None


def gen_interpolative_space(cfg: GenConfig, rng: random.Random, route: str = "domain") -> ClosureSpace:
    """
    Espacio interpolativo aleatorio.

    Rutas:
        domain      (P, ⋁A(x)⊗⇓x) para un L-dcpo continuo aleatorio P
        lclosure    de L-cerradura: C_x aleatorios filtrados por LC o, a
                    cara o cruz y como respaldo, (P, ↓) de un L-orden aleatorio
        random      C_x aleatorios con rechazo

    Raises:
        PreconditionError: ruta desconocida o presupuesto agotado
    """
    if route not in ROUTES:
        raise PreconditionError(f"Ruta desconocida: {route} (use {', '.join(ROUTES)})")
    if route == "lclosure":
        if rng.random() < 0.5:
            S = _espacio_aleatorio(cfg, rng, l_cerradura=True)
            if S is not None:
                return S
            logger.debug("Rechazo LC sin exito: se usa (P, ↓)")
        S = _validado(down_closure_space(gen_l_ordered_set(cfg, rng, name="X")))
        if not is_l_closure_space(S).passed:
            raise PreconditionError(f"{S.name} no es de L-cerradura")
        return S
    if route == "domain":
        for _ in range(max(1, cfg.attempts // 10)):
            try:
                P = gen_l_dcpo(cfg, rng, name="X")
                if is_continuous(P).passed:
                    return closure_of_domain(P)
            except ResourceCapError as e:
                logger.debug(f"Candidato descartado: {e.mensaje}")
        logger.warning("Ruta domain sin exito: se usa rechazo sobre C_x aleatorios")
    S = _espacio_aleatorio(cfg, rng)
    if S is None:
        raise PreconditionError(f"Presupuesto de rechazo agotado generando espacios sobre {cfg.quantale}")
    return S


def gen_approx_relation(cfg: GenConfig, rng: random.Random, X: ClosureSpace, Y: ClosureSpace) -> Optional[ApproxRelation]:
    """
    Θ_ψ para un ψ Scott continuo elegido al azar: uniforme si los mapeos
    caben en el presupuesto, por muestreo de mapeos si no.
    """
    mapas = scott_maps(X, Y, cfg.budget)
    if mapas:
        return theta_of(rng.choice(mapas))
    CX, CY = dir_closed_sets(X), dir_closed_sets(Y)
    for _ in range(cfg.attempts):
        f = PointMap(CX.carrier, CY.carrier, tuple(rng.randrange(CY.size) for _ in range(CX.size)))
        if is_scott_continuous(f, CX, CY).passed:
            return theta_of(ScottMap(X, Y, f))
    return None
