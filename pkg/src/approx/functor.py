"""
Transpuestas ψ_Θ / Θ_ψ, el funtor X -> (𝔠(X), sub), Θ -> ψ_Θ, y la
verificacion ejecutable de la equivalencia (fiel, pleno, esencialmente
sobreyectivo) sobre instancias finitas.
"""
from itertools import product
from typing import List, Optional, Sequence

from loguru import logger

from config.settings import settings
from src.core.errors import AxiomError, PreconditionError, StructuralError
from src.core.models import CheckResult, CheckStatus
from src.core.utils import rng_for
from src.approx.models import ApproxRelation, ScottMap
from src.approx.relations import (
    check_ap_axioms, apply_values, compose_relations, identity_relation, require_approximable,
)
from src.closure.constructions import closure_of_domain
from src.closure.directed import dir_closed_sets, find_directed_closed_index
from src.closure.models import ClosureSpace
from src.closure.validation import require_interpolative
from src.order.dcpo import PointMap, find_l_order_iso, is_scott_continuous
from src.order.lordered import LOrderedSet


def psi_of(R: ApproxRelation) -> ScottMap:
    """
    ψ_Θ : 𝔠(X) -> 𝔠(Y), U -> Θ̃(U), verificado Scott continuo.

    Raises:
        PreconditionError: si Θ no es aproximable
        AxiomError: si la imagen sale de 𝔠(Y) o ψ no es Scott continuo
    """
    require_approximable(R, "ψ_Θ")
    CX, CY = dir_closed_sets(R.source), dir_closed_sets(R.target)
    imagenes = []
    for U in CX.points:
        j = find_directed_closed_index(CY, apply_values(R, U.values))
        if j is None:
            raise AxiomError(f"Θ̃({U.render()}) no esta en 𝔠({R.target.name})")
        imagenes.append(j)
    f = PointMap(CX.carrier, CY.carrier, tuple(imagenes))
    scott = is_scott_continuous(f, CX, CY)
    if not scott.passed:
        raise AxiomError(f"ψ de {R.name} no es Scott continuo", scott)
    return ScottMap(R.source, R.target, f, f"ψ[{R.name}]")


def check_scott_map(psi: ScottMap) -> CheckResult:
    CX, CY = dir_closed_sets(psi.source), dir_closed_sets(psi.target)
    if psi.mapping.source != CX.carrier or psi.mapping.target != CY.carrier:
        raise StructuralError(f"{psi.name} no va de 𝔠({psi.source.name}) a 𝔠({psi.target.name})")
    return is_scott_continuous(psi.mapping, CX, CY)


def theta_of(psi: ScottMap) -> ApproxRelation:
    """
    Θ_ψ(x, y) = ψ(⟨u_x⟩)(y).

    Raises:
        PreconditionError: si ψ no es Scott continuo
        AxiomError: si Θ_ψ no es aproximable
    """
    scott = check_scott_map(psi)
    if not scott.passed:
        raise PreconditionError(f"{psi.name} no es Scott continuo (falla {scott.first_failure().label})")
    X = psi.source
    CX = dir_closed_sets(X)
    filas = []
    for x, C in enumerate(X.point_closure_table):
        i = find_directed_closed_index(CX, C)
        if i is None:
            raise AxiomError(f"⟨u_{X.points[x]}⟩ no esta en 𝔠({X.name})")
        filas.append(psi.mapping.target.points[psi.mapping.images[i]].values)
    R = ApproxRelation(X, psi.target, filas, f"Θ[{psi.name}]")
    resultado = CheckResult.all_of("approximable", check_ap_axioms(R), R.name)
    R.validated = resultado
    if not resultado.passed:
        raise AxiomError(f"{R.name} no es aproximable", resultado)
    return R


def identity_scott_map(S: ClosureSpace) -> ScottMap:
    C = dir_closed_sets(S)
    return ScottMap(S, S, PointMap.identity(C.carrier), f"id[𝔠({S.name})]")


def compose_scott_maps(g: ScottMap, f: ScottMap) -> ScottMap:
    """g ∘ f"""
    if f.target != g.source:
        raise StructuralError(f"Composicion invalida: {f.name} llega a {f.target.name}, {g.name} sale de {g.source.name}")
    return ScottMap(f.source, g.target, f.mapping.then(g.mapping), f"{g.name}∘{f.name}")


# ----------------------------------------------------------------------
# Equivalencia
# ----------------------------------------------------------------------

def approximable_relations(X: ClosureSpace, Y: ClosureSpace, presupuesto: Optional[int] = None):
    """
    Todas las relaciones aproximables X -> Y (en orden lexicografico de
    tabla), o None si |L|^(|X||Y|) excede el presupuesto.
    """
    limite = settings.presupuesto_suite if presupuesto is None else presupuesto
    require_interpolative(X, "relaciones aproximables")
    require_interpolative(Y, "relaciones aproximables")
    Q = X.quantale
    celdas = X.size * Y.size
    if Q.size ** celdas > limite:
        return None
    resultado = []
    for valores in product(range(Q.size), repeat=celdas):
        tabla = [valores[i * Y.size:(i + 1) * Y.size] for i in range(X.size)]
        R = ApproxRelation(X, Y, tabla, f"Θ{len(resultado)}[{X.name}->{Y.name}]")
        verificacion = check_ap_axioms(R)
        if all(h.passed for h in verificacion):
            R.validated = CheckResult.all_of("approximable", verificacion, R.name)
            resultado.append(R)
    return resultado


def scott_maps(X: ClosureSpace, Y: ClosureSpace, presupuesto: Optional[int] = None):
    """Todos los ψ Scott continuos 𝔠(X) -> 𝔠(Y), o None si |𝔠Y|^|𝔠X| excede el presupuesto"""
    limite = settings.presupuesto_suite if presupuesto is None else presupuesto
    CX, CY = dir_closed_sets(X), dir_closed_sets(Y)
    if CY.size ** CX.size > limite:
        return None
    resultado = []
    for imagenes in product(range(CY.size), repeat=CX.size):
        f = PointMap(CX.carrier, CY.carrier, imagenes)
        if is_scott_continuous(f, CX, CY).passed:
            resultado.append(ScottMap(X, Y, f))
    return resultado


def _muestra_relaciones(X: ClosureSpace, Y: ClosureSpace, n: int) -> List[ApproxRelation]:
    """Relaciones aproximables via Θ_ψ de mapeos monotonos muestreados"""
    CX, CY = dir_closed_sets(X), dir_closed_sets(Y)
    rng = rng_for(settings.semilla, "equiv", X.name, Y.name)
    vistas = {}
    for _ in range(n * 10):
        if len(vistas) >= n:
            break
        f = PointMap(CX.carrier, CY.carrier, tuple(rng.randrange(CY.size) for _ in range(CX.size)))
        if is_scott_continuous(f, CX, CY).passed:
            R = theta_of(ScottMap(X, Y, f))
            vistas.setdefault(R.theta, R)
    return [vistas[k] for k in sorted(vistas)]


def check_composition_associativity(thetas: Sequence[ApproxRelation], upsilons: Sequence[ApproxRelation],
                                    omegas: Sequence[ApproxRelation], limite: Optional[int] = None) -> CheckResult:
    """
    (Ω∘Υ)∘Θ = Ω∘(Υ∘Θ) sobre las ternas Θ x Υ x Ω: todas si caben en
    `limite` (por defecto settings.muestras_leyes), una muestra sembrada si no.
    """
    limite = settings.muestras_leyes if limite is None else limite
    total = len(thetas) * len(upsilons) * len(omegas)
    if total <= limite:
        ternas = list(product(thetas, upsilons, omegas))
    else:
        rng = rng_for(settings.semilla, "associativity", total)
        ternas = [(rng.choice(thetas), rng.choice(upsilons), rng.choice(omegas)) for _ in range(limite)]
    for theta, ups, omega in ternas:
        izquierda = compose_relations(compose_relations(omega, ups), theta)
        if izquierda != compose_relations(omega, compose_relations(ups, theta)):
            return CheckResult.fail("associativity", (theta.name, ups.name, omega.name), "(Ω∘Υ)∘Θ != Ω∘(Υ∘Θ)")
    trace = f"{len(ternas)} ternas"
    if total <= limite:
        return CheckResult.ok("associativity", trace)
    return CheckResult.sampled("associativity", trace)


def check_equivalence_suite(X: ClosureSpace, Y: ClosureSpace, presupuesto: Optional[int] = None,
                            P: Optional[LOrderedSet] = None) -> CheckResult:
    """
    Evidencia de equivalencia del funtor F sobre el par (X, Y):
    fiel, pleno, leyes de funtor, identidades, viajes redondos y, si se
    da un dominio continuo P, F(⇓P) ≅ P.
    """
    hijos: List[CheckResult] = []
    relaciones = approximable_relations(X, Y, presupuesto)
    exhaustivo_rel = relaciones is not None
    if relaciones is None:
        logger.warning(f"Relaciones {X.name}->{Y.name} exceden el presupuesto: muestreo")
        relaciones = _muestra_relaciones(X, Y, settings.muestras_leyes)

    mapas = scott_maps(X, Y, presupuesto)
    exhaustivo_map = mapas is not None

    def estado(etiqueta: str, exhaustivo: bool, trace: str = "") -> CheckResult:
        return CheckResult.ok(etiqueta, trace) if exhaustivo else CheckResult.sampled(etiqueta, trace)

    # fiel + viaje Θ -> ψ -> Θ
    psis = {}
    fiel = estado("faithful", exhaustivo_rel, f"{len(relaciones)} relaciones")
    ida_vuelta = estado("theta-psi-theta", exhaustivo_rel)
    for R in relaciones:
        psi = psi_of(R)
        if psi in psis and fiel.passed:
            fiel = CheckResult.fail("faithful", (R.name, psis[psi].name), "Θ distintas con el mismo ψ_Θ")
        psis.setdefault(psi, R)
        if ida_vuelta.passed and theta_of(psi) != R:
            ida_vuelta = CheckResult.fail("theta-psi-theta", (R.name,), "Θ_{ψ_Θ} != Θ")
    hijos.extend([fiel, ida_vuelta])

    # pleno + viaje ψ -> Θ -> ψ
    if exhaustivo_map:
        pleno = estado("full", exhaustivo_rel, f"{len(mapas)} mapeos Scott")
        for psi in mapas:
            if psi_of(theta_of(psi)) != psi:
                pleno = CheckResult.fail("full", (psi.mapping.images,), "ψ_{Θ_ψ} != ψ")
                break
            if exhaustivo_rel and psi not in psis:
                pleno = CheckResult.fail("full", (psi.mapping.images,), "ψ no proviene de ninguna Θ")
                break
        if pleno.passed and exhaustivo_rel and len(mapas) != len(psis):
            pleno = CheckResult.fail("full", (len(mapas), len(psis)), "sin biyeccion relaciones/mapeos")
    else:
        logger.warning(f"Mapeos 𝔠({X.name})->𝔠({Y.name}) exceden el presupuesto: viaje redondo sobre ψ_Θ")
        pleno = CheckResult.sampled("full", "viaje redondo ψ_{Θ_ψ} = ψ sobre ψ_Θ")
        for psi in psis:
            if psi_of(theta_of(psi)) != psi:
                pleno = CheckResult.fail("full", (psi.mapping.images,), "ψ_{Θ_ψ} != ψ")
                break
    hijos.append(pleno)

    # leyes de funtor e identidades
    idX, idY = identity_relation(X), identity_relation(Y)
    funtor_id = CheckResult.ok("functor-identity")
    if psi_of(idX) != identity_scott_map(X):
        funtor_id = CheckResult.fail("functor-identity", (X.name,), "F(id_X) != id_𝔠(X)")
    hijos.append(funtor_id)

    identidades = CheckResult.ok("identity-laws")
    composicion = estado("functor-composition", exhaustivo_rel)
    endos = approximable_relations(Y, Y, presupuesto)
    endos_exhaustivo = endos is not None
    if endos is None:
        endos = _muestra_relaciones(Y, Y, 4)
        composicion = CheckResult.sampled("functor-composition")
    for R in relaciones:
        if compose_relations(R, idX) != R or compose_relations(idY, R) != R:
            identidades = CheckResult.fail("identity-laws", (R.name,), "Θ∘id != Θ o id∘Θ != Θ")
            break
    for R in relaciones[:settings.muestras_leyes]:
        for ups in endos[:8]:
            if psi_of(compose_relations(ups, R)) != compose_scott_maps(psi_of(ups), psi_of(R)):
                composicion = CheckResult.fail("functor-composition", (R.name, ups.name), "F(Υ∘Θ) != F(Υ)∘F(Θ)")
                break
        if not composicion:
            break
    asociativa = check_composition_associativity(relaciones, endos, endos)
    if asociativa.status == CheckStatus.PASS and not (exhaustivo_rel and endos_exhaustivo):
        asociativa = CheckResult.sampled("associativity", asociativa.trace)
    hijos.extend([identidades, composicion, asociativa])

    if P is not None:
        imagen = dir_closed_sets(closure_of_domain(P))
        sobre = CheckResult.ok("essentially-surjective")
        if find_l_order_iso(imagen, P) is None:
            sobre = CheckResult.fail("essentially-surjective", (P.name,), "F(⇓P) no es isomorfo a P")
        hijos.append(sobre)
    return CheckResult.all_of("equivalence", hijos, f"{X.name} -> {Y.name}")
