"""
Suites de teoremas: cada suite genera instancias deterministas y agrupa
las verificaciones correspondientes en un SuiteReport.

Las instancias son independientes: con workers > 1 se reparten en un
ProcessPoolExecutor y el reporte se arma en orden canonico de indice.
"""
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Any, Callable, Dict, List, Optional, Tuple

from loguru import logger

from config.settings import settings
from src.core.errors import AxiomError, PreconditionError, ResourceCapError, UnknownSuiteError
from src.core.models import CheckResult, render_value
from src.core.utils import rng_for, sugerir
from src.approx.functor import check_equivalence_suite, psi_of, theta_of
from src.approx.relations import apply_to_closed, validate_approximable
from src.closure.constructions import (
    check_representation_three, closure_of_algebraic, closure_of_domain, is_dense_subspace,
    restrict_to_subspace, restriction_isomorphism,
)
from src.closure.directed import (
    check_algebraicity_theorem, check_continuity_theorem, dir_closed_sets, find_directed_closed_index,
)
from src.domain.analysis import (
    check_basis_lemma, check_compactness_criteria, check_way_below_lemmas, is_algebraic, is_continuous,
)
from src.domain.way_below import cache_dominios, compact_elements
from src.formats.serializer import to_document
from src.harness.generators import gen_approx_relation, gen_interpolative_space, gen_l_dcpo, gen_l_ordered_set
from src.harness.models import GenConfig, InstanceResult, SuiteReport
from src.harness.oracle import classical_oracle
from src.order.dcpo import PointMap, check_iso_via
from src.order.lordered import (
    LOrderedSet, down_set, is_lower_set, is_upper_set, powerset_order, residuation_order,
    supremum, up_set, validate_l_order,
)
from src.quantale.fixtures import fixture_quantale
from src.quantale.validation import check_residuation_laws, validate_quantale

# (descriptor, resultado, objeto serializable para reproducir)
Instancia = Tuple[str, CheckResult, Any]


@dataclass
class Entrada:
    """Ultima estructura generada por la instancia; se serializa si algo falla despues"""
    objeto: Any = None


SuiteFn = Callable[[GenConfig, random.Random, int, Entrada], Instancia]


# ----------------------------------------------------------------------
# core
# ----------------------------------------------------------------------

def _suite_core(cfg: GenConfig, rng: random.Random, indice: int, entrada: Entrada) -> Instancia:
    Q = fixture_quantale(cfg.quantale)
    entrada.objeto = Q
    if indice == 0:
        hijos = [validate_quantale(Q), check_residuation_laws(Q), validate_l_order(residuation_order(Q))]
        return f"quantale {Q.name}", CheckResult.all_of("core", hijos), Q
    P = gen_l_ordered_set(cfg, rng)
    entrada.objeto = P
    principales = []
    for x in P.points:
        principales += [is_lower_set(P, down_set(P, x)), is_upper_set(P, up_set(P, x))]
        if supremum(P, down_set(P, x)) != x:
            principales.append(CheckResult.fail("sup-down-set", (x,), "⊔↓x != x"))
    potencia = powerset_order(P.carrier.sub_carrier(P.points[:2]), Q)
    hijos = [
        validate_l_order(P),
        CheckResult.all_of("principal-sets", principales),
        validate_l_order(potencia),
    ]
    return f"{P.name} |P|={P.size}", CheckResult.all_of("core", hijos), P


# ----------------------------------------------------------------------
# oracle / waybelow
# ----------------------------------------------------------------------

def _suite_oracle(cfg: GenConfig, rng: random.Random, indice: int, entrada: Entrada) -> Instancia:
    P = gen_l_ordered_set(replace(cfg, max_size=min(cfg.max_size, 5)), rng)
    entrada.objeto = P
    return f"{P.name} |P|={P.size}", classical_oracle("all", P), P


def _suite_waybelow(cfg: GenConfig, rng: random.Random, indice: int, entrada: Entrada) -> Instancia:
    P = gen_l_dcpo(cfg, rng)
    entrada.objeto = P
    ideales, dirigidos = cache_dominios.way_below(P), cache_dominios.way_below_alt(P)
    formas = CheckResult.ok("waybelow-forms")
    for x in range(P.size):
        for y in range(P.size):
            if ideales[x][y] != dirigidos[x][y]:
                formas = CheckResult.fail("waybelow-forms", (P.points[x], P.points[y]),
                                          "forma de ideales != forma de dirigidos")
                break
        if not formas:
            break
    algebraico = is_algebraic(P)
    implicacion = CheckResult.ok("algebraic-continuous")
    if algebraico.passed and not is_continuous(P).passed:
        implicacion = CheckResult.fail("algebraic-continuous", (P.name,), "algebraico pero no continuo")
    hijos = [
        formas,
        check_way_below_lemmas(P),
        check_compactness_criteria(P),
        check_basis_lemma(P),
        implicacion,
    ]
    return f"{P.name} |P|={P.size}", CheckResult.all_of("waybelow", hijos), P


# ----------------------------------------------------------------------
# Teoremas de representacion
# ----------------------------------------------------------------------

def _iso_canonico(etiqueta: str, P: LOrderedSet, destino: LOrderedSet, vectores) -> CheckResult:
    """Iso via x -> vectores[x] dentro del carrier de un 𝔠"""
    imagenes = []
    for x, v in enumerate(vectores):
        j = find_directed_closed_index(destino, v)
        if j is None:
            return CheckResult.fail(etiqueta, (P.points[x],), "imagen canonica fuera de 𝔠")
        imagenes.append(j)
    if len(set(imagenes)) != destino.size:
        return CheckResult.fail(etiqueta, (destino.size, len(set(imagenes))), "el carrier de 𝔠 no es la imagen canonica")
    iso = check_iso_via(PointMap(P.carrier, destino.carrier, tuple(imagenes)), P, destino)
    return CheckResult.all_of(etiqueta, [iso], f"|P|={P.size}")


def _suite_rep1(cfg: GenConfig, rng: random.Random, indice: int, entrada: Entrada) -> Instancia:
    S = gen_interpolative_space(cfg, rng, "domain")
    entrada.objeto = S
    teorema = check_continuity_theorem(S)
    if not teorema.passed:
        return f"{S.name} |X|={S.size}", CheckResult.all_of("rep1", [teorema]), S
    P = dir_closed_sets(S)
    W = cache_dominios.way_below(P)
    destino = dir_closed_sets(closure_of_domain(P))
    iso = _iso_canonico("rep1-iso", P, destino, W)
    return f"{S.name} |X|={S.size} |𝔠|={P.size}", CheckResult.all_of("rep1", [teorema, iso]), S


def _suite_rep2(cfg: GenConfig, rng: random.Random, indice: int, entrada: Entrada) -> Instancia:
    S = gen_interpolative_space(cfg, rng, "lclosure")
    entrada.objeto = S
    teorema = check_algebraicity_theorem(S)
    if not teorema.passed:
        return f"{S.name} |X|={S.size}", CheckResult.all_of("rep2", [teorema]), S
    P = dir_closed_sets(S)
    K = cache_dominios.compact_indices(P)
    destino = dir_closed_sets(closure_of_algebraic(P))
    vectores = [tuple(P.e[k][x] for k in K) for x in range(P.size)]
    iso = _iso_canonico("rep2-iso", P, destino, vectores)
    return f"{S.name} |X|={S.size} |𝔠|={P.size} |K|={len(K)}", CheckResult.all_of("rep2", [teorema, iso]), S


def _algebraico_con_denso(cfg: GenConfig, rng: random.Random, entrada: Entrada):
    """P algebraico (𝔠 de un espacio de L-cerradura) y (P, ⇓) con K(P)"""
    S = gen_interpolative_space(cfg, rng, "lclosure")
    entrada.objeto = S
    P = dir_closed_sets(S)
    return S, P, closure_of_domain(P), compact_elements(P)


def _suite_dense(cfg: GenConfig, rng: random.Random, indice: int, entrada: Entrada) -> Instancia:
    S, P, D, K = _algebraico_con_denso(cfg, rng, entrada)
    _iso, restriccion = restriction_isomorphism(D, K)
    coincide = CheckResult.ok("restriction-matches")
    if restrict_to_subspace(D, K).point_closure_table != closure_of_algebraic(P).point_closure_table:
        coincide = CheckResult.fail("restriction-matches", (P.name,), "(P,⇓)|_K(P) != (K(P), ↓)")
    hijos = [
        is_dense_subspace(D, K),
        is_dense_subspace(D, D.points),
        restriccion,
        coincide,
    ]
    return f"{S.name} |𝔠|={P.size} |K|={len(K)}", CheckResult.all_of("dense", hijos), D


def _suite_rep3(cfg: GenConfig, rng: random.Random, indice: int, entrada: Entrada) -> Instancia:
    S, P, D, K = _algebraico_con_denso(cfg, rng, entrada)
    return f"{S.name} |𝔠|={P.size} |K|={len(K)}", check_representation_three(D, K, P), D


# ----------------------------------------------------------------------
# equiv
# ----------------------------------------------------------------------

def _suite_equiv(cfg: GenConfig, rng: random.Random, indice: int, entrada: Entrada) -> Instancia:
    # indices pares: instancias diminutas con enumeracion exhaustiva
    base = replace(cfg, max_size=min(cfg.max_size, 2)) if indice % 2 == 0 else cfg
    X = gen_interpolative_space(base, rng, rng.choice(("domain", "lclosure")))
    Y = gen_interpolative_space(base, rng, rng.choice(("domain", "lclosure")))
    entrada.objeto = X
    CX = dir_closed_sets(X)
    hijos = [check_equivalence_suite(X, Y, cfg.budget, P=CX)]
    R = gen_approx_relation(cfg, rng, X, Y)
    if R is not None:
        entrada.objeto = R
        cerrados = CheckResult.ok("image-closed")
        for U in CX.points:
            try:
                apply_to_closed(R, U)
            except AxiomError as e:
                cerrados = CheckResult.fail("image-closed", (U,), e.mensaje)
                break
        vuelta = CheckResult.ok("theta-psi")
        if theta_of(psi_of(R)) != R:
            vuelta = CheckResult.fail("theta-psi", (R.name,), "Θ_{ψ_Θ} != Θ")
        hijos.append(CheckResult.all_of("generated-relation", [validate_approximable(R), cerrados, vuelta]))
    return f"|X|={X.size} |Y|={Y.size}", CheckResult.all_of("equiv", hijos), entrada.objeto


# ----------------------------------------------------------------------
# Registro y ejecucion
# ----------------------------------------------------------------------

SUITES: Dict[str, Tuple[SuiteFn, str]] = {
    "core": (_suite_core, "Residuacion, L-ordenes, conjuntos principales y (L^X, sub)"),
    "oracle": (_suite_oracle, "Diferencial contra el calculo clasico (solo Q2)"),
    "waybelow": (_suite_waybelow, "Dos formas de ⇓, lemas de way-below y compacidad"),
    "rep1": (_suite_rep1, "𝔠(X) continuo y P ≅ 𝔠(P, ⇓)"),
    "rep2": (_suite_rep2, "𝔠(X) algebraico y P ≅ 𝔠(K(P), ↓)"),
    "rep3": (_suite_rep3, "Suficiencia via subespacio denso K(P)"),
    "dense": (_suite_dense, "Subespacios densos y E -> E|_Y"),
    "equiv": (_suite_equiv, "Relaciones aproximables vs mapeos de Scott"),
}


def _rechazo(nombre: str, cfg: GenConfig) -> Optional[str]:
    """Precondiciones de la suite sobre el quantale"""
    Q = fixture_quantale(cfg.quantale)
    if nombre in ("dense", "rep3") and not Q.integral:
        return f"La suite {nombre} requiere un quantale integral ({Q.name} no lo es)"
    if nombre == "oracle" and (Q.size != 2 or not Q.integral):
        return f"La suite oracle requiere L = Q2 (llego {Q.name})"
    return None


def _plano(resultado: CheckResult) -> CheckResult:
    """Copia con testigos convertidos a valores JSON (transportable entre procesos)"""
    testigo = None if resultado.witness is None else tuple(render_value(list(resultado.witness)))
    return replace(resultado, witness=testigo, children=[_plano(h) for h in resultado.children])


def _ejecutar_instancia(args: Tuple[str, GenConfig, int]) -> InstanceResult:
    nombre, cfg, indice = args
    fn, _descripcion = SUITES[nombre]
    rng = rng_for(cfg.seed, nombre, indice)
    entrada = Entrada()
    try:
        descriptor, resultado, entrada.objeto = fn(cfg, rng, indice, entrada)
    except ResourceCapError as e:
        descriptor, resultado = "omitida", CheckResult.sampled(nombre, f"instancia omitida: {e.mensaje}")
    except PreconditionError as e:
        descriptor, resultado = "rechazada", CheckResult.refused(nombre, e.mensaje)
    except AxiomError as e:
        logger.warning(f"Suite {nombre} #{indice}: {e.mensaje}")
        descriptor = "axioma violado"
        resultado = e.resultado
        if resultado is None or resultado.passed:
            resultado = CheckResult.fail(nombre, (), e.mensaje)
    serializacion = None
    if not resultado.passed and entrada.objeto is not None:
        serializacion = to_document(entrada.objeto)
    return InstanceResult(indice, descriptor, _plano(resultado), serializacion)


def _inicializar_worker(cap: int):
    """Cap de la corrida y cache de tablas vacia: nada sobrevive de una suite a otra"""
    settings.cap_enumeracion = cap
    cache_dominios.limpiar()


def run_suite(nombre: str, cfg: Optional[GenConfig] = None) -> SuiteReport:
    """
    Ejecutar una suite con nombre.

    Raises:
        UnknownSuiteError: nombre fuera del registro (con sugerencias)
        UnknownFixtureError: quantale de la configuracion desconocido
    """
    if nombre not in SUITES:
        raise UnknownSuiteError(nombre, sugerir(nombre, SUITES))
    cfg = cfg or GenConfig()
    reporte = SuiteReport(suite=nombre, config=cfg)

    rechazo = _rechazo(nombre, cfg)
    if rechazo is not None:
        logger.warning(f"Suite {nombre} rechazada: {rechazo}")
        reporte.refusal = rechazo
        return reporte

    logger.info(f"Suite {nombre} iniciada: {cfg.instances} instancias sobre {cfg.quantale} (semilla {cfg.seed})")
    _inicializar_worker(cfg.cap)
    tareas = [(nombre, cfg, i) for i in range(cfg.instances)]
    inicio = time.perf_counter()
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers, initializer=_inicializar_worker,
                                 initargs=(cfg.cap,)) as executor:
            resultados: List[InstanceResult] = list(executor.map(_ejecutar_instancia, tareas))
    else:
        resultados = [_ejecutar_instancia(t) for t in tareas]
    reporte.phases['instancias'] = time.perf_counter() - inicio

    inicio = time.perf_counter()
    reporte.instances = sorted(resultados, key=lambda r: r.index)
    conteo = reporte.counts()
    reporte.phases['ensamblado'] = time.perf_counter() - inicio
    logger.debug(f"Cache de dominios: {cache_dominios.estadisticas()}")
    cache_dominios.limpiar()
    logger.info(f"Suite {nombre} terminada: {reporte.status.value} {conteo}")
    return reporte
