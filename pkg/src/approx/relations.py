"""
Validacion de L-relaciones aproximables (AP1-AP5), identidad,
composicion y aplicacion a cerrados dirigidos.
"""
from typing import List

from loguru import logger

from src.core.errors import AxiomError, PreconditionError, StructuralError
from src.core.models import CheckResult
from src.approx.models import ApproxRelation
from src.closure.directed import is_directed_closed
from src.closure.models import ClosureSpace
from src.closure.validation import require_interpolative
from src.order.lordered import compose_tables
from src.order.lsubset import LSubset


def check_ap_axioms(R: ApproxRelation) -> List[CheckResult]:
    X, Y, Q, T = R.source, R.target, R.quantale, R.theta
    leq, mul, join = Q.leq_table, Q.tensor_table, Q.join_table
    CX, CY = X.point_closure_table, Y.point_closure_table
    nx_, ny = X.size, Y.size
    px, py = X.points, Y.points
    hijos = []

    ap1 = CheckResult.ok("AP1")
    for x in range(nx_):
        if not Q.geq_unit(Q.join_all(T[x])):
            ap1 = CheckResult.fail("AP1", (px[x],), "⋁_y Θ(x,y) < u")
            break
    hijos.append(ap1)

    ap2 = CheckResult.ok("AP2")
    for xp in range(nx_):
        for x in range(nx_):
            fila = mul[CX[xp][x]]
            for y in range(ny):
                if not leq[fila[T[x][y]]][T[xp][y]]:
                    ap2 = CheckResult.fail("AP2", (px[xp], px[x], py[y]), "⟨u_x'⟩(x)⊗Θ(x,y) > Θ(x',y)")
                    break
            if not ap2:
                break
        if not ap2:
            break
    hijos.append(ap2)

    ap3 = CheckResult.ok("AP3")
    for x in range(nx_):
        for y in range(ny):
            fila = mul[T[x][y]]
            for yp in range(ny):
                if not leq[fila[CY[y][yp]]][T[x][yp]]:
                    ap3 = CheckResult.fail("AP3", (px[x], py[y], py[yp]), "Θ(x,y)⊗⟨u_y⟩(y') > Θ(x,y')")
                    break
            if not ap3:
                break
        if not ap3:
            break
    hijos.append(ap3)

    # Θ'(x, y) = ⋁_{x', y'} ⟨u_x⟩(x')⊗Θ(x',y')⊗⟨u_y'⟩(y)
    ambos_lados = [[Q.bottom] * ny for _ in range(nx_)]
    for x in range(nx_):
        for y in range(ny):
            v = Q.bottom
            for xp in range(nx_):
                for yp in range(ny):
                    v = join[v][mul[mul[CX[x][xp]][T[xp][yp]]][CY[yp][y]]]
            ambos_lados[x][y] = v
    automatico = X.flag("lclosure") == "pass" and Y.flag("lclosure") == "pass"
    ap4 = CheckResult.ok("AP4", "se cumple automaticamente entre espacios de L-cerradura" if automatico else "")
    for x in range(nx_):
        for y in range(ny):
            if not leq[T[x][y]][ambos_lados[x][y]]:
                ap4 = CheckResult.fail("AP4", (px[x], py[y]), "Θ(x,y) > ⋁ ⟨u_x⟩(x')⊗Θ(x',y')⊗⟨u_y'⟩(y)")
                break
        if not ap4:
            break
    hijos.append(ap4)

    ap5 = CheckResult.ok("AP5")
    for x in range(nx_):
        for y1 in range(ny):
            for y2 in range(ny):
                v = Q.bottom
                for y3 in range(ny):
                    v = join[v][mul[mul[T[x][y3]][CY[y3][y1]]][CY[y3][y2]]]
                if not leq[mul[T[x][y1]][T[x][y2]]][v]:
                    ap5 = CheckResult.fail("AP5", (px[x], py[y1], py[y2]),
                                           "Θ(x,y1)⊗Θ(x,y2) > ⋁_y3 Θ(x,y3)⊗⟨u_y3⟩(y1)⊗⟨u_y3⟩(y2)")
                    break
            if not ap5:
                break
        if not ap5:
            break
    hijos.append(ap5)

    if all(h.passed for h in hijos):
        hijos.append(_igualdades(R, ambos_lados))
    return hijos


def _igualdades(R: ApproxRelation, ambos_lados) -> CheckResult:
    """Θ(x,y) = ⋁_x' ⟨u_x⟩(x')⊗Θ(x',y) = ⋁_y' Θ(x,y')⊗⟨u_y'⟩(y) = ambos lados"""
    X, Y, Q, T = R.source, R.target, R.quantale, R.theta
    mul, join = Q.tensor_table, Q.join_table
    CX, CY = X.point_closure_table, Y.point_closure_table
    for x in range(X.size):
        for y in range(Y.size):
            izquierda = derecha = Q.bottom
            for xp in range(X.size):
                izquierda = join[izquierda][mul[CX[x][xp]][T[xp][y]]]
            for yp in range(Y.size):
                derecha = join[derecha][mul[T[x][yp]][CY[yp][y]]]
            if not T[x][y] == izquierda == derecha == ambos_lados[x][y]:
                return CheckResult.fail("AP-equalities", (X.points[x], Y.points[y]),
                                        "Θ(x,y) no coincide con sus expresiones laterales")
    return CheckResult.ok("AP-equalities")


def validate_approximable(R: ApproxRelation) -> CheckResult:
    """
    Verificar AP1-AP5 y, si pasan, las igualdades laterales derivadas.

    Raises:
        PreconditionError: si algun espacio no es interpolativo
    """
    require_interpolative(R.source, "relacion aproximable")
    require_interpolative(R.target, "relacion aproximable")
    resultado = CheckResult.all_of("approximable", check_ap_axioms(R), R.name)
    R.validated = resultado
    logger.debug(f"{R.name} aproximable: {resultado.status.value}")
    return resultado


def require_approximable(R: ApproxRelation, que: str = "operacion"):
    resultado = R.validated or validate_approximable(R)
    if not resultado.passed:
        raise PreconditionError(f"{que}: {R.name} no es aproximable (falla {resultado.first_failure().label})")


def _validada(R: ApproxRelation, que: str) -> ApproxRelation:
    resultado = validate_approximable(R)
    if not resultado.passed:
        raise AxiomError(f"{que}: {R.name} no es aproximable", resultado)
    return R


def identity_relation(S: ClosureSpace) -> ApproxRelation:
    """id_X(x, y) = ⟨u_x⟩(y)"""
    require_interpolative(S, "identidad")
    return _validada(ApproxRelation(S, S, S.point_closure_table, f"id[{S.name}]"), "identidad")


def compose_relations(upsilon: ApproxRelation, theta: ApproxRelation) -> ApproxRelation:
    """
    Υ∘Θ (x, z) = ⋁_y Θ(x, y) ⊗ Υ(y, z).

    Raises:
        StructuralError: si el destino de Θ no es el origen de Υ
        PreconditionError: si alguna no es aproximable
    """
    if theta.target != upsilon.source:
        raise StructuralError(
            f"Composicion invalida: {theta.name} llega a {theta.target.name}, {upsilon.name} sale de {upsilon.source.name}")
    require_approximable(theta, "composicion")
    require_approximable(upsilon, "composicion")
    tabla = compose_tables(theta.quantale, theta.theta, upsilon.theta)
    compuesta = ApproxRelation(theta.source, upsilon.target, tabla, f"{upsilon.name}∘{theta.name}")
    return _validada(compuesta, "composicion")


def apply_values(R: ApproxRelation, valores) -> tuple:
    """Θ̃ sobre vectores: ⋁_x U(x) ⊗ Θ(x, ·)"""
    Q = R.quantale
    join, mul = Q.join_table, Q.tensor_table
    resultado = [Q.bottom] * R.target.size
    for a, fila in zip(valores, R.theta):
        m = mul[a]
        resultado = [join[r][m[t]] for r, t in zip(resultado, fila)]
    return tuple(resultado)


def apply_to_closed(R: ApproxRelation, U: LSubset) -> LSubset:
    """
    Θ̃(U)(y) = ⋁_x U(x) ⊗ Θ(x, y), con U cerrado dirigido de X.

    Raises:
        PreconditionError: si Θ no es aproximable o U no es cerrado dirigido
        AxiomError: si el resultado no es cerrado dirigido en Y
    """
    require_approximable(R, "Θ̃")
    dc = is_directed_closed(R.source, U)
    if not dc.passed:
        raise PreconditionError(f"{U.render()} no es cerrado dirigido en {R.source.name} (falla {dc.first_failure().label})")
    V = LSubset(R.target.carrier, apply_values(R, U.values), R.quantale)
    imagen = is_directed_closed(R.target, V)
    if not imagen.passed:
        raise AxiomError(f"Θ̃({U.render()}) no es cerrado dirigido en {R.target.name}", imagen)
    return V
