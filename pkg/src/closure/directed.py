"""
Conjuntos cerrados dirigidos (DC1-DC4), la familia 𝔠(X) ordenada por
sub, la caracterizacion de punto fijo y el aproximante canonico.
"""
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from config.settings import settings
from src.core.errors import AxiomError
from src.core.models import CheckResult
from src.closure.models import ClosureSpace, point_closures
from src.closure.validation import require_interpolative
from src.domain.analysis import is_algebraic, is_continuous
from src.domain.way_below import cache_dominios
from src.order.dcpo import is_l_dcpo
from src.order.lordered import LOrderedSet, directed_values, family_order, is_directed, sup_index, validate_l_order
from src.order.lsubset import LSubset, enumerate_constrained


def _violaciones_dc(S: ClosureSpace, u: Sequence[int]) -> List[CheckResult]:
    """DC1-DC4 sobre un vector de valores; testigos en puntos"""
    Q, n, pts = S.quantale, S.size, S.points
    leq, mul, join = Q.leq_table, Q.tensor_table, Q.join_table
    C = S.point_closure_table
    hijos = []

    dc1 = CheckResult.ok("DC1")
    if not Q.geq_unit(Q.join_all(u)):
        dc1 = CheckResult.fail("DC1", (), "⋁U < u")
    hijos.append(dc1)

    dc2 = CheckResult.ok("DC2")
    for x in range(n):
        for y in range(n):
            if not leq[mul[u[x]][C[x][y]]][u[y]]:
                dc2 = CheckResult.fail("DC2", (pts[x], pts[y]), "U(x)⊗⟨u_x⟩(y) > U(y)")
                break
        if not dc2:
            break
    hijos.append(dc2)

    dc3 = CheckResult.ok("DC3")
    for x in range(n):
        v = Q.bottom
        for y in range(n):
            v = join[v][mul[u[y]][C[y][x]]]
        if not leq[u[x]][v]:
            dc3 = CheckResult.fail("DC3", (pts[x],), "U(x) > ⋁_y U(y)⊗⟨u_y⟩(x)")
            break
    hijos.append(dc3)

    dc4 = CheckResult.ok("DC4")
    for x in range(n):
        for y in range(n):
            v = Q.bottom
            for z in range(n):
                v = join[v][mul[mul[u[z]][C[z][x]]][C[z][y]]]
            if not leq[mul[u[x]][u[y]]][v]:
                dc4 = CheckResult.fail("DC4", (pts[x], pts[y]), "U(x)⊗U(y) > ⋁_z U(z)⊗⟨u_z⟩(x)⊗⟨u_z⟩(y)")
                break
        if not dc4:
            break
    hijos.append(dc4)
    return hijos


def is_directed_closed(S: ClosureSpace, U: LSubset) -> CheckResult:
    """
    Verificar DC1-DC4 para U.

    Raises:
        PreconditionError: si S no es interpolativo
        CarrierMismatchError: si U no es de X
    """
    require_interpolative(S, "cerrado dirigido")
    S.check_subset(U)
    return CheckResult.all_of("directed-closed", _violaciones_dc(S, U.values), U.render())


def _es_cerrado_dirigido(S: ClosureSpace, u: Sequence[int]) -> bool:
    return all(h.passed for h in _violaciones_dc(S, u))


def dir_closed_sets(S: ClosureSpace) -> LOrderedSet:
    """
    (𝔠(X), sub): todos los U de L^X que pasan DC1-DC4, en orden
    lexicografico de valores.

    Raises:
        PreconditionError: si S no es interpolativo
        ResourceCapError: si |L|^|X| excede el tope
        AxiomError: si el resultado no valida como L-orden
    """
    require_interpolative(S, "𝔠(X)")
    return _dir_closed_sets(S, settings.cap_enumeracion)


@lru_cache(maxsize=128)
def _dir_closed_sets(S: ClosureSpace, tope: int) -> LOrderedSet:
    Q = S.quantale
    leq, mul = Q.leq_table, Q.tensor_table
    C = S.point_closure_table

    # DC2 es una condicion por pares: poda en la busqueda
    def admisible(k: int, s: list) -> bool:
        for j in range(k + 1):
            if not leq[mul[s[j]][C[j][k]]][s[k]] or not leq[mul[s[k]][C[k][j]]][s[j]]:
                return False
        return True

    miembros = [
        LSubset(S.carrier, u, Q)
        for u in enumerate_constrained(S.size, Q, admisible, tope)
        if _es_cerrado_dirigido(S, u)
    ]
    if not miembros:
        raise AxiomError(f"𝔠({S.name}) vacio: el espacio no deberia ser interpolativo")
    orden = family_order(miembros, f"C({S.name})")
    validacion = validate_l_order(orden)
    if not validacion.passed:
        raise AxiomError(f"𝔠({S.name}) no valida como L-orden", validacion)
    logger.debug(f"𝔠({S.name}): {orden.size} cerrados dirigidos")
    return orden


def check_fixed_point_characterization(S: ClosureSpace, U: LSubset) -> bool:
    """
    U = ⋁_x U(x) ⊗ ⟨u_x⟩.

    Para U = 0_X ambos lados son 0 aunque U no cumple DC1; la discrepancia
    se registra como advertencia.
    """
    require_interpolative(S, "punto fijo")
    S.check_subset(U)
    Q = S.quantale
    join, mul = Q.join_table, Q.tensor_table
    C = S.point_closure_table
    derecha = [Q.bottom] * S.size
    for x, a in enumerate(U.values):
        fila = mul[a]
        derecha = [join[r][fila[c]] for r, c in zip(derecha, C[x])]
    igual = tuple(derecha) == U.values
    if igual and not Q.geq_unit(U.height()):
        logger.warning(f"{S.name}: {U.render()} es punto fijo pero no cumple DC1")
    return igual


def _aproximante_valores(S: ClosureSpace, U: LSubset, destino: Sequence[LSubset]) -> Tuple[int, ...]:
    """𝒟_U(V) = ⋁_{⟨u_x⟩ = V} U(x) sobre la familia destino"""
    Q = S.quantale
    join = Q.join_table
    posicion = {V.values: i for i, V in enumerate(destino)}
    valores = [Q.bottom] * len(destino)
    for x, C in enumerate(S.point_closure_table):
        if C not in posicion:
            raise AxiomError(f"{S.name}: ⟨u_{S.points[x]}⟩ no esta en la familia destino")
        i = posicion[C]
        valores[i] = join[valores[i]][U.values[x]]
    return tuple(valores)


def canonical_approximant(S: ClosureSpace, U: LSubset) -> LSubset:
    """𝒟_U como L-subconjunto de 𝔠(X)"""
    S.check_subset(U)
    orden = dir_closed_sets(S)
    return LSubset(orden.carrier, _aproximante_valores(S, U, orden.points), S.quantale)


def directed_family_over_psi(S: ClosureSpace, U: LSubset) -> Tuple[LOrderedSet, LSubset, CheckResult]:
    """
    Familia 𝒟 sobre Ψ(X) con ⋁_V 𝒟(V) ⊗ V = U, reconstruida y verificada.

    Returns:
        (Ψ(X) con sub, 𝒟, verificacion de dirigido y de join)
    """
    require_interpolative(S, "familia sobre Ψ(X)")
    S.check_subset(U)
    familia, _ = point_closures(S)
    psi = family_order(familia, f"Ψ({S.name})")
    D = LSubset(psi.carrier, _aproximante_valores(S, U, familia), S.quantale)
    Q = S.quantale
    join, mul = Q.join_table, Q.tensor_table
    union = [Q.bottom] * S.size
    for d, V in zip(D.values, familia):
        union = [join[r][mul[d][v]] for r, v in zip(union, V.values)]
    recupera = CheckResult.ok("psi-join")
    if tuple(union) != U.values:
        recupera = CheckResult.fail("psi-join", (U,), "⋁ 𝒟(V)⊗V != U")
    return psi, D, CheckResult.all_of("psi-family", [is_directed(psi, D), recupera])


# ----------------------------------------------------------------------
# Teoremas sobre 𝔠(X) como verificaciones
# ----------------------------------------------------------------------

def check_continuity_theorem(S: ClosureSpace) -> CheckResult:
    """
    𝔠(X) es un L-dcpo continuo; para cada U, 𝒟_U es dirigido con
    supremo U y 𝒟_U <= ⇓U.
    """
    orden = dir_closed_sets(S)
    dcpo = is_l_dcpo(orden)
    if not dcpo.passed:
        return CheckResult.all_of("continuity-theorem", [dcpo])
    continuo = is_continuous(orden)
    W = cache_dominios.way_below(orden)
    leq = S.quantale.leq_table
    aproximante = CheckResult.ok("approximant")
    for i, U in enumerate(orden.points):
        d = _aproximante_valores(S, U, orden.points)
        if not directed_values(orden, d):
            aproximante = CheckResult.fail("approximant", (U,), "𝒟_U no es dirigido")
        elif sup_index(orden, d) != i:
            aproximante = CheckResult.fail("approximant", (U,), "⊔𝒟_U != U")
        elif not all(leq[a][b] for a, b in zip(d, W[i])):
            aproximante = CheckResult.fail("approximant", (U,), "𝒟_U > ⇓U")
        if not aproximante:
            break
    return CheckResult.all_of("continuity-theorem", [dcpo, continuo, aproximante], f"|𝔠|={orden.size}")


def check_algebraicity_theorem(S: ClosureSpace) -> CheckResult:
    """Para L-cerradura: 𝔠(X) algebraico y Ψ(X) ⊆ K(𝔠(X))"""
    orden = dir_closed_sets(S)
    dcpo = is_l_dcpo(orden)
    if not dcpo.passed:
        return CheckResult.all_of("algebraicity-theorem", [dcpo])
    algebraico = is_algebraic(orden)
    compactos = {orden.points[k].values for k in cache_dominios.compact_indices(orden)}
    contenidos = CheckResult.ok("psi-compact")
    for x, C in enumerate(S.point_closure_table):
        if C not in compactos:
            contenidos = CheckResult.fail("psi-compact", (S.points[x],), "⟨u_x⟩ no es compacto en 𝔠(X)")
            break
    return CheckResult.all_of("algebraicity-theorem", [dcpo, algebraico, contenidos])


def find_directed_closed_index(orden: LOrderedSet, valores: Sequence[int]) -> Optional[int]:
    """Indice de un vector de valores en el carrier de 𝔠(X)"""
    for i, V in enumerate(orden.points):
        if V.values == tuple(valores):
            return i
    return None
