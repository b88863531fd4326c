"""
Validadores de espacios de cerradura: generalizado (GC1, GC2),
interpolativo (IT1-IT3) y L-cerradura (LC1, LC3 / criterio puntual).

Cada validador registra su resultado en la bandera correspondiente del
espacio. Estrategia por representacion:
    - tabla: verificacion exhaustiva sobre pares (tope settings.cap_pares)
    - por puntos: GC1 es estructural (se muestrea como asercion) y GC2 se
      reduce a ⋁_y C_x(y)⊗C_y <= C_x
"""
from typing import Iterator, List, Tuple

from loguru import logger

from config.settings import settings
from src.core.errors import PreconditionError
from src.core.models import CheckResult
from src.core.utils import check_cap, rng_for
from src.closure.models import ClosureSpace, PointGeneratedOperator, TableBackedOperator
from src.order.lsubset import LSubset, enumerate_values, sub_values


def _subset(S: ClosureSpace, valores) -> LSubset:
    return LSubset(S.carrier, tuple(valores), S.quantale)


def _pares_muestra(S: ClosureSpace) -> Tuple[Iterator[Tuple[tuple, tuple]], bool]:
    """Pares (A, B) para GC1: exhaustivo si caben en la muestra, aleatorio si no"""
    Q, n = S.quantale, S.size
    total = Q.size ** (2 * n)
    if total <= settings.muestras_gc1:
        todos = list(enumerate_values(n, Q))
        return ((A, B) for A in todos for B in todos), True
    rng = rng_for(settings.semilla, "gc1", S.name)
    pares = [
        (tuple(rng.randrange(Q.size) for _ in range(n)), tuple(rng.randrange(Q.size) for _ in range(n)))
        for _ in range(settings.muestras_gc1)
    ]
    return iter(pares), False


def _verificar_pares(S: ClosureSpace, pares) -> Tuple[CheckResult, CheckResult]:
    """GC1 y la cota sub(A, ⟨B⟩) <= sub(⟨A⟩, ⟨B⟩) sobre los pares dados"""
    Q = S.quantale
    leq = Q.leq_table
    cerrar = S.operator.close_values
    gc1 = CheckResult.ok("GC1")
    sub_cerrado = CheckResult.ok("GC-sub")
    for A, B in pares:
        cA, cB = cerrar(A), cerrar(B)
        derecha = sub_values(Q, cA, cB)
        if gc1.passed and not leq[sub_values(Q, A, B)][derecha]:
            gc1 = CheckResult.fail("GC1", (_subset(S, A), _subset(S, B)), "sub(A,B) > sub(⟨A⟩,⟨B⟩)")
        if sub_cerrado.passed and not leq[sub_values(Q, A, cB)][derecha]:
            sub_cerrado = CheckResult.fail("GC-sub", (_subset(S, A), _subset(S, B)),
                                           "sub(A,⟨B⟩) > sub(⟨A⟩,⟨B⟩)")
        if not gc1.passed and not sub_cerrado.passed:
            break
    return gc1, sub_cerrado


def _verificar_puntual(S: ClosureSpace, subconjuntos) -> CheckResult:
    """⟨A⟩(x) <= sub(⟨u_x⟩, ⟨A⟩)"""
    Q = S.quantale
    leq = Q.leq_table
    C = S.point_closure_table
    for A in subconjuntos:
        cA = S.operator.close_values(A)
        for x in range(S.size):
            if not leq[cA[x]][sub_values(Q, C[x], cA)]:
                return CheckResult.fail("GC-point", (_subset(S, A), S.points[x]), "⟨A⟩(x) > sub(⟨u_x⟩,⟨A⟩)")
    return CheckResult.ok("GC-point")


def _gc2_por_puntos(S: ClosureSpace) -> CheckResult:
    """⋁_y C_x(y)⊗C_y <= C_x, testigo (x, a)"""
    Q = S.quantale
    leq, mul, join = Q.leq_table, Q.tensor_table, Q.join_table
    C = S.point_closure_table
    n = S.size
    for x in range(n):
        for a in range(n):
            v = Q.bottom
            for y in range(n):
                v = join[v][mul[C[x][y]][C[y][a]]]
            if not leq[v][C[x][a]]:
                return CheckResult.fail("GC2", (S.points[x], S.points[a]), "⋁_y C_x(y)⊗C_y(a) > C_x(a)")
    return CheckResult.ok("GC2")


def _gc2_por_tabla(S: ClosureSpace, todos) -> CheckResult:
    leq = S.quantale.leq_table
    cerrar = S.operator.close_values
    for A in todos:
        cA = cerrar(A)
        if not all(leq[a][b] for a, b in zip(cerrar(cA), cA)):
            return CheckResult.fail("GC2", (_subset(S, A),), "⟨⟨A⟩⟩ > ⟨A⟩")
    return CheckResult.ok("GC2")


def validate_generalized(S: ClosureSpace) -> CheckResult:
    """
    Verificar GC1 y GC2, mas las consecuencias
    sub(A, ⟨B⟩) <= sub(⟨A⟩, ⟨B⟩) y ⟨A⟩(x) <= sub(⟨u_x⟩, ⟨A⟩).

    Raises:
        ResourceCapError: operador por tabla con |L|^(2|X|) sobre el tope de pares
        StructuralError: operador por tabla no total
    """
    Q, n = S.quantale, S.size
    op = S.operator
    if isinstance(op, TableBackedOperator):
        check_cap(Q.size ** (2 * n), settings.cap_pares, "pares de L-subconjuntos")
        todos = list(enumerate_values(n, Q))
        gc1, sub_cerrado = _verificar_pares(S, ((A, B) for A in todos for B in todos))
        gc2 = _gc2_por_tabla(S, todos)
        puntual = _verificar_puntual(S, todos)
    else:
        pares, exhaustivo = _pares_muestra(S)
        gc1, sub_cerrado = _verificar_pares(S, pares)
        if gc1.passed:
            gc1.trace = "estructural" if exhaustivo else f"estructural; {settings.muestras_gc1} pares muestreados"
        gc2 = _gc2_por_puntos(S)
        rng = rng_for(settings.semilla, "gc-point", S.name)
        muestra = [tuple(rng.randrange(Q.size) for _ in range(n)) for _ in range(settings.muestras_gc1)]
        puntual = _verificar_puntual(S, muestra)
    resultado = CheckResult.all_of("generalized", [gc1, gc2, sub_cerrado, puntual], S.name)
    S.flags["generalized"] = resultado
    logger.debug(f"{S.name} generalizado: {resultado.status.value}")
    return resultado


def _requerir(S: ClosureSpace, bandera: str, validador, que: str):
    resultado = S.flags[bandera] or validador(S)
    if not resultado.passed:
        falla = resultado.first_failure()
        etiqueta = falla.label if falla is not None else bandera
        raise PreconditionError(f"{que}: {S.name} no es {bandera} (falla {etiqueta})")


def require_generalized(S: ClosureSpace, que: str = "operacion"):
    _requerir(S, "generalized", validate_generalized, que)


def require_interpolative(S: ClosureSpace, que: str = "operacion"):
    _requerir(S, "interpolative", is_interpolative, que)


def is_interpolative(S: ClosureSpace) -> CheckResult:
    """
    IT1: ⋁_t ⟨u_x⟩(t) >= u
    IT2: ⟨u_x⟩(y) <= ⋁_t ⟨u_x⟩(t)⊗⟨u_t⟩(y)
    IT3: ⟨u_x⟩(a)⊗⟨u_x⟩(b) <= ⋁_t ⟨u_x⟩(t)⊗⟨u_t⟩(a)⊗⟨u_t⟩(b)

    Raises:
        PreconditionError: si el espacio no es generalizado
    """
    require_generalized(S, "interpolacion")
    Q, n, pts = S.quantale, S.size, S.points
    leq, mul, join = Q.leq_table, Q.tensor_table, Q.join_table
    C = S.point_closure_table
    hijos: List[CheckResult] = []

    it1 = CheckResult.ok("IT1")
    for x in range(n):
        if not Q.geq_unit(Q.join_all(C[x])):
            it1 = CheckResult.fail("IT1", (pts[x],), "⋁_t ⟨u_x⟩(t) < u")
            break
    hijos.append(it1)

    it2 = CheckResult.ok("IT2")
    for x in range(n):
        for y in range(n):
            v = Q.bottom
            for t in range(n):
                v = join[v][mul[C[x][t]][C[t][y]]]
            if not leq[C[x][y]][v]:
                it2 = CheckResult.fail("IT2", (pts[x], pts[y]), "⟨u_x⟩(y) > ⋁_t ⟨u_x⟩(t)⊗⟨u_t⟩(y)")
                break
        if not it2:
            break
    hijos.append(it2)

    it3 = CheckResult.ok("IT3")
    for x in range(n):
        for a in range(n):
            for b in range(n):
                v = Q.bottom
                for t in range(n):
                    v = join[v][mul[mul[C[x][t]][C[t][a]]][C[t][b]]]
                if not leq[mul[C[x][a]][C[x][b]]][v]:
                    it3 = CheckResult.fail("IT3", (pts[x], pts[a], pts[b]),
                                           "⟨u_x⟩(a)⊗⟨u_x⟩(b) > ⋁_t ⟨u_x⟩(t)⊗⟨u_t⟩(a)⊗⟨u_t⟩(b)")
                    break
            if not it3:
                break
        if not it3:
            break
    hijos.append(it3)

    resultado = CheckResult.all_of("interpolative", hijos, S.name)
    S.flags["interpolative"] = resultado
    logger.debug(f"{S.name} interpolativo: {resultado.status.value}")
    return resultado


def is_l_closure_space(S: ClosureSpace) -> CheckResult:
    """
    Por puntos: criterio ⟨u_x⟩(x) >= u para todo x.
    Por tabla: LC1 (A <= ⟨A⟩) y LC3 (⟨⟨A⟩⟩ = ⟨A⟩) sobre todo L^X.
    Si pasa, se verifica ademas que el espacio es interpolativo.
    """
    require_generalized(S, "L-cerradura")
    Q, n, pts = S.quantale, S.size, S.points
    hijos: List[CheckResult] = []
    if isinstance(S.operator, PointGeneratedOperator):
        C = S.point_closure_table
        lc1 = CheckResult.ok("LC1", "criterio puntual")
        for x in range(n):
            if not Q.geq_unit(C[x][x]):
                lc1 = CheckResult.fail("LC1", (pts[x],), "⟨u_x⟩(x) < u")
                break
        hijos.append(lc1)
    else:
        leq = Q.leq_table
        cerrar = S.operator.close_values
        lc1 = CheckResult.ok("LC1")
        lc3 = CheckResult.ok("LC3")
        for A in enumerate_values(n, Q):
            cA = cerrar(A)
            if lc1.passed and not all(leq[a][b] for a, b in zip(A, cA)):
                lc1 = CheckResult.fail("LC1", (_subset(S, A),), "A > ⟨A⟩")
            if lc3.passed and cerrar(cA) != cA:
                lc3 = CheckResult.fail("LC3", (_subset(S, A),), "⟨⟨A⟩⟩ != ⟨A⟩")
        hijos.extend([lc1, lc3])
    if all(h.passed for h in hijos):
        hijos.append(is_interpolative(S))
    resultado = CheckResult.all_of("l-closure", hijos, S.name)
    S.flags["lclosure"] = resultado
    return resultado


def validate_space(S: ClosureSpace) -> CheckResult:
    """Reporte combinado: generalizado, interpolativo y L-cerradura"""
    generalizado = validate_generalized(S)
    if not generalizado.passed:
        motivo = "no es generalizado"
        return CheckResult.all_of("closure-space", [
            generalizado, CheckResult.refused("interpolative", motivo), CheckResult.refused("l-closure", motivo),
        ])
    interpolativo = is_interpolative(S)
    l_cerradura = is_l_closure_space(S)
    falla = l_cerradura.first_failure()
    if falla is not None and falla.label in ("LC1", "LC3"):
        # solo bandera: un espacio interpolativo no necesita ser L-cerradura
        l_cerradura = CheckResult.ok(
            "l-closure-flag", f"no es L-cerradura ({falla.label} en {falla.witness})")
    return CheckResult.all_of("closure-space", [generalizado, interpolativo, l_cerradura])
