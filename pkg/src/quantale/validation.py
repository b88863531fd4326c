"""
Validacion de axiomas de quantale y de las leyes de residuacion (Q1-Q7).
"""
from itertools import combinations
from typing import Callable, Iterable, List, Optional, Tuple

from loguru import logger

from config.settings import settings
from src.core.models import CheckResult
from src.core.utils import rng_for
from src.quantale.models import FiniteQuantale


def _buscar(label: str, casos: Iterable[tuple], falla: Callable[..., bool],
            Q: FiniteQuantale, trace: str) -> CheckResult:
    """Primer caso (en orden canonico) donde `falla` es verdadero"""
    for caso in casos:
        if falla(*caso):
            return CheckResult.fail(label, tuple(Q.label(c) for c in caso), trace)
    return CheckResult.ok(label)


def _pares(n: int):
    return ((a, b) for a in range(n) for b in range(n))


def _triples(n: int):
    return ((a, b, c) for a in range(n) for b in range(n) for c in range(n))


def validate_quantale(Q: FiniteQuantale) -> CheckResult:
    """
    Reporte de axiomas: reticulo completo, conmutatividad, asociatividad,
    unidad, distributividad sobre joins, monotonia y adjuncion.

    La distributividad sobre joins arbitrarios se reduce, en el caso
    finito, a joins binarios mas a⊗0 = 0.
    """
    n, mul, leq, u = Q.size, Q.tensor_table, Q.leq_table, Q.unit
    hijos = [Q.lattice_check]

    hijos.append(_buscar(
        "commutativity", _pares(n), lambda a, b: mul[a][b] != mul[b][a], Q, "a⊗b != b⊗a"))
    hijos.append(_buscar(
        "associativity", _triples(n), lambda a, b, c: mul[a][mul[b][c]] != mul[mul[a][b]][c],
        Q, "a⊗(b⊗c) != (a⊗b)⊗c"))
    hijos.append(_buscar(
        "unit", ((a,) for a in range(n)), lambda a: mul[a][u] != a or mul[u][a] != a, Q, "a⊗u != a"))
    hijos.append(_buscar(
        "monotonicity", _triples(n), lambda a, b, c: leq[a][b] and not leq[mul[a][c]][mul[b][c]],
        Q, "a <= b pero a⊗c > b⊗c"))

    if not Q.is_lattice:
        motivo = "requiere reticulo completo"
        hijos.append(CheckResult.refused("distributivity", motivo))
        hijos.append(CheckResult.refused("adjunction", motivo))
    else:
        join, bottom = Q.join_table, Q.bottom
        cero = _buscar("distributivity", ((a,) for a in range(n)),
                       lambda a: mul[a][bottom] != bottom, Q, "a⊗0 != 0")
        if cero.passed:
            cero = _buscar(
                "distributivity", _triples(n),
                lambda a, b, c: mul[a][join[b][c]] != join[mul[a][b]][mul[a][c]],
                Q, "a⊗(b∨c) != (a⊗b)∨(a⊗c)")
        hijos.append(cero)
        res = Q.res_table
        hijos.append(_buscar(
            "adjunction", _triples(n),
            lambda a, b, c: leq[mul[a][c]][b] != leq[c][res[a][b]],
            Q, "a⊗c <= b no equivale a c <= a->b"))

    reporte = CheckResult.all_of("quantale", hijos, f"{Q.name} |L|={n}")
    if reporte.passed:
        logger.debug(f"Quantale {Q.name} valido")
    else:
        falla = reporte.first_failure()
        logger.info(f"Quantale {Q.name} no valida: {falla.label if falla else reporte.status.value}")
    return reporte


def _subconjuntos(Q: FiniteQuantale) -> Tuple[List[Tuple[int, ...]], bool]:
    """Subconjuntos de L: todos si |L| <= 4, muestreados en otro caso"""
    n = Q.size
    if n <= 4:
        return [c for k in range(n + 1) for c in combinations(range(n), k)], False
    rng = rng_for(settings.semilla, "leyes", Q.name)
    muestras = [()]
    for _ in range(settings.muestras_leyes):
        muestras.append(tuple(i for i in range(n) if rng.random() < 0.5))
    return muestras, True


def check_residuation_laws(Q: FiniteQuantale) -> CheckResult:
    """
    Leyes Q1-Q7 de la residuacion. Son teoremas en todo quantale valido;
    sirven de oraculo para la tabla derivada.
    """
    if not Q.is_lattice:
        return CheckResult.refused("residuation-laws", "requiere reticulo completo")

    n, mul, leq, res = Q.size, Q.tensor_table, Q.leq_table, Q.res_table
    u, bottom, top = Q.unit, Q.bottom, Q.top
    hijos = [
        _buscar("Q1", _pares(n), lambda a, b: leq[u][res[a][b]] != leq[a][b], Q,
                "u <= a->b no equivale a a <= b"),
        _buscar("Q2", ((a,) for a in range(n)), lambda a: res[bottom][a] != top, Q, "0->a != 1"),
        _buscar("Q3", ((a,) for a in range(n)), lambda a: res[u][a] != a, Q, "u->a != a"),
        _buscar("Q4", _pares(n), lambda a, b: not leq[mul[a][res[a][b]]][b], Q, "a⊗(a->b) > b"),
        _buscar("Q5", _triples(n), lambda a, b, c: res[a][res[b][c]] != res[mul[a][b]][c], Q,
                "a->(b->c) != (a⊗b)->c"),
    ]

    subconjuntos, muestreado = _subconjuntos(Q)
    q6: Optional[CheckResult] = None
    q7: Optional[CheckResult] = None
    for s in subconjuntos:
        for b in range(n):
            if q6 is None and res[Q.join_all(s)][b] != Q.meet_all(res[a][b] for a in s):
                q6 = CheckResult.fail("Q6", ([Q.label(a) for a in s], Q.label(b)),
                                      "(⋁a_i)->b != ⋀(a_i->b)")
            if q7 is None and res[b][Q.meet_all(s)] != Q.meet_all(res[b][a] for a in s):
                q7 = CheckResult.fail("Q7", (Q.label(b), [Q.label(a) for a in s]),
                                      "a->(⋀b_j) != ⋀(a->b_j)")
    traza = f"{len(subconjuntos)} subconjuntos muestreados" if muestreado else ""
    for etiqueta, resultado in (("Q6", q6), ("Q7", q7)):
        if resultado is not None:
            hijos.append(resultado)
        elif muestreado:
            hijos.append(CheckResult.sampled(etiqueta, traza))
        else:
            hijos.append(CheckResult.ok(etiqueta))
    return CheckResult.all_of("residuation-laws", hijos, Q.name)
