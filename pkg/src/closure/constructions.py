"""
Construcciones entre dominios y espacios de cerradura:
P -> (P, ⋁A(x)⊗⇓x), P algebraico -> (K(P), ↓), restriccion a subespacios
y subespacios densos.
"""
from typing import Hashable, Iterable, Optional, Tuple

from loguru import logger

from src.core.errors import AxiomError, IntegralityError, PreconditionError, StructuralError
from src.core.models import CheckResult
from src.closure.directed import check_algebraicity_theorem, dir_closed_sets, find_directed_closed_index
from src.closure.models import ClosureSpace, PointGeneratedOperator, TableBackedOperator
from src.closure.validation import (
    is_interpolative, is_l_closure_space, require_interpolative, validate_generalized,
)
from src.domain.analysis import is_algebraic, is_continuous
from src.domain.way_below import cache_dominios
from src.order.dcpo import PointMap, check_iso_via, find_l_order_iso
from src.order.lordered import LOrderedSet
from src.order.lsubset import Carrier, enumerate_values


def _exigir(resultado: CheckResult, que: str):
    if not resultado.passed:
        raise AxiomError(f"{que}: la construccion no valida", resultado)


def closure_of_domain(P: LOrderedSet) -> ClosureSpace:
    """
    Espacio (P, ⟨·⟩) con ⟨A⟩ = ⋁_x A(x) ⊗ ⇓x.

    Raises:
        PreconditionError: si P no es continuo
        AxiomError: si el espacio resultante no es interpolativo
    """
    continuo = is_continuous(P)
    if not continuo.passed:
        raise PreconditionError(f"{P.name} no es continuo (testigo {continuo.witness})")
    W = cache_dominios.way_below(P)
    S = ClosureSpace(P.carrier, PointGeneratedOperator(P.carrier, P.quantale, W), f"⇓{P.name}")
    _exigir(validate_generalized(S), S.name)
    _exigir(is_interpolative(S), S.name)
    logger.info(f"Espacio {S.name} construido desde el dominio continuo {P.name}")
    return S


def _k_carrier(P: LOrderedSet) -> Tuple[Carrier, Tuple[int, ...]]:
    compactos = cache_dominios.compact_indices(P)
    return P.carrier.sub_carrier([P.points[k] for k in compactos]), compactos


def closure_of_algebraic(P: LOrderedSet) -> ClosureSpace:
    """
    Espacio (K(P), ↓) con ⟨A⟩ = ⋁_{k ∈ K(P)} A(k) ⊗ ↓k|_K(P).

    Raises:
        PreconditionError: si P no es algebraico
        AxiomError: si el resultado no es un espacio de L-cerradura
    """
    algebraico = is_algebraic(P)
    if not algebraico.passed:
        raise PreconditionError(f"{P.name} no es algebraico (testigo {algebraico.witness})")
    sub, compactos = _k_carrier(P)
    cierres = [[P.e[j][k] for j in compactos] for k in compactos]
    S = ClosureSpace(sub, PointGeneratedOperator(sub, P.quantale, cierres), f"↓K({P.name})")
    _exigir(validate_generalized(S), S.name)
    _exigir(is_l_closure_space(S), S.name)
    logger.info(f"Espacio {S.name} construido sobre {sub.size} compactos de {P.name}")
    return S


def down_closure_space(P: LOrderedSet) -> ClosureSpace:
    """(P, ↓) con C_x = ↓x; espacio de L-cerradura para cualquier L-orden"""
    cierres = [P.column(x) for x in range(P.size)]
    return ClosureSpace(P.carrier, PointGeneratedOperator(P.carrier, P.quantale, cierres), f"↓{P.name}")


def restrict_to_subspace(S: ClosureSpace, puntos: Iterable[Hashable]) -> ClosureSpace:
    """
    (Y, ⟨·⟩|_Y). Por puntos: C'_y = C_y|_Y. Por tabla: ⟨B⟩|_Y es la
    cerradura de la extension por cero de B, restringida a Y.

    Raises:
        StructuralError: Y vacio
        UnknownPointError: punto fuera de X
    """
    puntos = list(puntos)
    if not puntos:
        raise StructuralError(f"Subespacio vacio de {S.name}")
    sub = S.carrier.sub_carrier(puntos)
    indices = [S.carrier.index(p) for p in sub.points]
    Q = S.quantale
    if isinstance(S.operator, PointGeneratedOperator):
        cierres = [[S.operator.closures[y][z] for z in indices] for y in indices]
        op = PointGeneratedOperator(sub, Q, cierres)
    else:
        tabla = {}
        for B in enumerate_values(sub.size, Q):
            extendido = [Q.bottom] * S.size
            for i, v in zip(indices, B):
                extendido[i] = v
            cerrado = S.operator.close_values(tuple(extendido))
            tabla[B] = tuple(cerrado[i] for i in indices)
        op = TableBackedOperator(sub, Q, tabla)
    return ClosureSpace(sub, op, f"{S.name}|{sub.size}")


def is_dense_subspace(S: ClosureSpace, puntos: Iterable[Hashable]) -> CheckResult:
    """
    ⟨u_x⟩(a) <= ⋁_{y ∈ Y} ⟨u_x⟩(y) ⊗ ⟨u_y⟩(a) para todo x, a de X.

    Raises:
        IntegralityError: si L no es integral
        PreconditionError: si S no es interpolativo
    """
    Q = S.quantale
    if not Q.integral:
        raise IntegralityError(f"Subespacios densos requieren un quantale integral ({Q.name} no lo es)")
    require_interpolative(S, "subespacio denso")
    Y = [S.carrier.index(p) for p in puntos]
    leq, mul, join = Q.leq_table, Q.tensor_table, Q.join_table
    C = S.point_closure_table
    for x in range(S.size):
        for a in range(S.size):
            v = Q.bottom
            for y in Y:
                v = join[v][mul[C[x][y]][C[y][a]]]
            if not leq[C[x][a]][v]:
                return CheckResult.fail("DS", (S.points[x], S.points[a]),
                                        "⟨u_x⟩(a) > ⋁_y ⟨u_x⟩(y)⊗⟨u_y⟩(a)")
    return CheckResult.ok("DS")


def restriction_isomorphism(S: ClosureSpace, puntos: Iterable[Hashable]) -> Tuple[Optional[PointMap], CheckResult]:
    """
    E -> E|_Y de 𝔠(X) en 𝔠(Y): cerrado, biyectivo y con sub preservado.

    Returns:
        (mapeo o None, verificacion "restriction-iso")
    """
    puntos = list(puntos)
    SY = restrict_to_subspace(S, puntos)
    CX = dir_closed_sets(S)
    CY = dir_closed_sets(SY)
    indices = [S.carrier.index(p) for p in SY.points]
    imagenes = []
    for E in CX.points:
        j = find_directed_closed_index(CY, [E.values[i] for i in indices])
        if j is None:
            return None, CheckResult.all_of("restriction-iso", [
                CheckResult.fail("restriction-closed", (E,), "E|_Y no esta en 𝔠(Y)")])
        imagenes.append(j)
    f = PointMap(CX.carrier, CY.carrier, tuple(imagenes))
    return f, CheckResult.all_of("restriction-iso", [CheckResult.ok("restriction-closed"), check_iso_via(f, CX, CY)])


def check_representation_three(S: ClosureSpace, puntos: Iterable[Hashable],
                               P: Optional[LOrderedSet] = None) -> CheckResult:
    """
    Suficiencia: si Y es denso en S y (Y, ⟨·⟩|_Y) es de L-cerradura,
    entonces 𝔠(X) ≅ 𝔠(Y) es algebraico (y ≅ P si se da P).
    """
    puntos = list(puntos)
    hijos = [is_dense_subspace(S, puntos)]
    SY = restrict_to_subspace(S, puntos)
    validate_generalized(SY)
    hijos.append(is_l_closure_space(SY))
    if all(h.passed for h in hijos):
        _, iso = restriction_isomorphism(S, puntos)
        hijos.append(iso)
        hijos.append(check_algebraicity_theorem(SY))
        hijos.append(is_algebraic(dir_closed_sets(S)))
        if P is not None:
            f = find_l_order_iso(dir_closed_sets(S), P)
            hijos.append(CheckResult.ok("iso-P") if f is not None
                         else CheckResult.fail("iso-P", (P.name,), "𝔠(X) no es isomorfo a P"))
    return CheckResult.all_of("representation-three", hijos)
