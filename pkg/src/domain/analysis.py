"""
Continuidad, algebraicidad y verificaciones cruzadas sobre L-dcpos.

Los verificadores rechazan (PreconditionError) entradas que no son
L-dcpo: un "fail" siempre significa un contraejemplo genuino.
"""
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Tuple

from loguru import logger

from config.settings import settings
from src.core.errors import PreconditionError, ResourceCapError
from src.core.models import CheckResult
from src.domain.way_below import cache_dominios, k_values
from src.order.dcpo import (
    PointMap, check_iso_via, directed_subsets, ideals, is_l_dcpo, require_l_dcpo,
)
from src.order.lordered import LOrderedSet, directed_values, family_order, sup_index
from src.order.lsubset import LSubset, enumerate_constrained


def _por_punto(P: LOrderedSet, etiqueta: str, tabla, que: str) -> CheckResult:
    """Para cada x: tabla[x] dirigido y ⊔tabla[x] = x; testigo = primer x que falla"""
    dirigido = CheckResult.ok(f"{etiqueta}-directed")
    supremo = CheckResult.ok(f"{etiqueta}-sup")
    for x in range(P.size):
        if dirigido.passed and not directed_values(P, tabla[x]):
            dirigido = CheckResult.fail(f"{etiqueta}-directed", (P.points[x],), f"{que} no es dirigido")
        if supremo.passed and sup_index(P, tabla[x]) != x:
            supremo = CheckResult.fail(f"{etiqueta}-sup", (P.points[x],), f"⊔{que} != x")
    return CheckResult.all_of(etiqueta, [dirigido, supremo])


def is_continuous(P: LOrderedSet) -> CheckResult:
    """
    Para todo x: ⇓x es dirigido y ⊔⇓x = x.

    Raises:
        PreconditionError: si P no es un L-dcpo
    """
    require_l_dcpo(P, "continuidad")
    reporte = _por_punto(P, "continuous", cache_dominios.way_below(P), "⇓x")
    logger.debug(f"{P.name} continuo: {reporte.passed}")
    return reporte


def _restringido_dirigido(P: LOrderedSet, compactos: Tuple[int, ...]) -> CheckResult:
    """k(x)|_K(P) dirigido en (K(P), e|_K(P))"""
    etiqueta = "k-restricted"
    if not compactos:
        return CheckResult.fail(etiqueta, (), "K(P) vacio")
    sub_carrier = P.carrier.sub_carrier([P.points[k] for k in compactos])
    e = [[P.e[a][b] for b in compactos] for a in compactos]
    K = LOrderedSet(sub_carrier, e, P.quantale)
    for x in range(P.size):
        restringido = tuple(P.e[k][x] for k in compactos)
        if not directed_values(K, restringido):
            return CheckResult.fail(etiqueta, (P.points[x],), "k(x)|_K(P) no es dirigido en K(P)")
    return CheckResult.ok(etiqueta)


def is_algebraic(P: LOrderedSet) -> CheckResult:
    """
    Para todo x: k(x) es dirigido y ⊔k(x) = x. Se verifica ademas la
    forma restringida a K(P).
    """
    require_l_dcpo(P, "algebraicidad")
    compactos = cache_dominios.compact_indices(P)
    tabla = tuple(k_values(P, x) for x in range(P.size))
    principal = _por_punto(P, "k", tabla, "k(x)")
    restringido = _restringido_dirigido(P, compactos)
    hijos = principal.children + [restringido]
    reporte = CheckResult.all_of("algebraic", hijos, f"|K(P)|={len(compactos)}")
    logger.debug(f"{P.name} algebraico: {reporte.passed}")
    return reporte


# ----------------------------------------------------------------------
# Verificaciones cruzadas
# ----------------------------------------------------------------------

def check_compactness_criteria(P: LOrderedSet, incluir_dirigidos: bool = True) -> CheckResult:
    """
    Las tres condiciones equivalentes de compacidad:
        (a) ⇓x(x) >= u
        (b) I(x) = e(x, ⊔I) para todo ideal I
        (c) e(x, ⊔D) = ⋁_d D(d)⊗e(x, d) para todo dirigido D
    """
    require_l_dcpo(P, "compacidad")
    Q, e, n = P.quantale, P.e, P.size
    join, mul = Q.join_table, Q.tensor_table
    compactos = set(cache_dominios.compact_indices(P))
    sups_ideales = [(I, sup_index(P, I)) for I in ideals(P)]
    por_ideales = {x for x in range(n) if all(I[x] == e[x][s] for I, s in sups_ideales)}
    hijos = [CheckResult.ok("compact-ideals")]
    if por_ideales != compactos:
        x = min(por_ideales ^ compactos)
        hijos[0] = CheckResult.fail("compact-ideals", (P.points[x],),
                                    "⇓x(x) >= u no coincide con I(x) = e(x,⊔I)")
    if incluir_dirigidos:
        sups_dirigidos = [(D, sup_index(P, D)) for D in directed_subsets(P)]

        def cubre(x: int) -> bool:
            for D, s in sups_dirigidos:
                v = Q.bottom
                for d in range(n):
                    v = join[v][mul[D[d]][e[x][d]]]
                if v != e[x][s]:
                    return False
            return True

        por_dirigidos = {x for x in range(n) if cubre(x)}
        resultado = CheckResult.ok("compact-directed")
        if por_dirigidos != compactos:
            x = min(por_dirigidos ^ compactos)
            resultado = CheckResult.fail("compact-directed", (P.points[x],),
                                         "⇓x(x) >= u no coincide con la forma sobre dirigidos")
        hijos.append(resultado)
    return CheckResult.all_of("compactness-criteria", hijos)


def check_way_below_lemmas(P: LOrderedSet) -> CheckResult:
    """
    ⇓x <= ↓x, la desigualdad de cuadruples
    e(u',x)⊗⇓y(x)⊗e(y,v) <= ⇓v(u'), ⇓x inferior y, sobre L-dcpos
    continuos, la interpolacion ⇓y(x) = ⋁_z ⇓y(z)⊗⇓z(x).
    """
    require_l_dcpo(P, "lemas de way-below")
    W = cache_dominios.way_below(P)
    Q, e, n, pts = P.quantale, P.e, P.size, P.points
    leq, mul, join = Q.leq_table, Q.tensor_table, Q.join_table
    hijos: List[CheckResult] = []

    debajo = CheckResult.ok("waybelow-below")
    for x in range(n):
        for y in range(n):
            if not leq[W[x][y]][e[y][x]]:
                debajo = CheckResult.fail("waybelow-below", (pts[x], pts[y]), "⇓x(y) > e(y,x)")
                break
        if not debajo:
            break
    hijos.append(debajo)

    cuadruples = CheckResult.ok("waybelow-quadruple")
    for a in range(n):
        for x in range(n):
            for y in range(n):
                izquierda = mul[e[a][x]][W[y][x]]
                for v in range(n):
                    if not leq[mul[izquierda][e[y][v]]][W[v][a]]:
                        cuadruples = CheckResult.fail(
                            "waybelow-quadruple", (pts[a], pts[x], pts[y], pts[v]),
                            "e(u',x)⊗⇓y(x)⊗e(y,v) > ⇓v(u')")
                        break
                if not cuadruples:
                    break
            if not cuadruples:
                break
        if not cuadruples:
            break
    hijos.append(cuadruples)

    inferior = CheckResult.ok("waybelow-lower")
    for x in range(n):
        for a in range(n):
            for b in range(n):
                if not leq[mul[W[x][a]][e[b][a]]][W[x][b]]:
                    inferior = CheckResult.fail("waybelow-lower", (pts[x],), "⇓x no es conjunto inferior")
                    break
            if not inferior:
                break
        if not inferior:
            break
    hijos.append(inferior)

    if is_continuous(P).passed:
        interpolacion = CheckResult.ok("interpolation")
        for y in range(n):
            for x in range(n):
                v = Q.bottom
                for z in range(n):
                    v = join[v][mul[W[y][z]][W[z][x]]]
                if v != W[y][x]:
                    interpolacion = CheckResult.fail("interpolation", (pts[y], pts[x]),
                                                     "⇓y(x) != ⋁_z ⇓y(z)⊗⇓z(x)")
                    break
            if not interpolacion:
                break
        hijos.append(interpolacion)
    return CheckResult.all_of("waybelow-lemmas", hijos)


def _dirigidos_bajo(P: LOrderedSet, cota: Tuple[int, ...]):
    """Dirigidos D <= cota (busqueda con poda sobre la cota)"""
    leq = P.quantale.leq_table
    candidatos = enumerate_constrained(P.size, P.quantale, lambda k, s: leq[s[k]][cota[k]])
    return (D for D in candidatos if directed_values(P, D))


def check_basis_lemma(P: LOrderedSet) -> CheckResult:
    """
    Lema de base: si algun dirigido D <= ⇓x (resp. <= k(x)) tiene supremo
    x, entonces ⇓x (resp. k(x)) es dirigido con supremo x.
    """
    require_l_dcpo(P, "lema de base")
    W = cache_dominios.way_below(P)
    hijos = []
    for etiqueta, tabla in (("basis-continuous", W),
                            ("basis-algebraic", tuple(k_values(P, x) for x in range(P.size)))):
        resultado = CheckResult.ok(etiqueta)
        for x in range(P.size):
            tiene_base = any(sup_index(P, D) == x for D in _dirigidos_bajo(P, tabla[x]))
            if tiene_base and not (directed_values(P, tabla[x]) and sup_index(P, tabla[x]) == x):
                resultado = CheckResult.fail(etiqueta, (P.points[x],),
                                             "existe base dirigida pero la cota no es dirigida con supremo x")
                break
        hijos.append(resultado)
    return CheckResult.all_of("basis-lemma", hijos)


def way_below_image_order(P: LOrderedSet) -> Tuple[LOrderedSet, PointMap]:
    """({⇓x}, sub) y el mapeo canonico x -> ⇓x"""
    W = cache_dominios.way_below(P)
    familia = [LSubset(P.carrier, W[x], P.quantale) for x in range(P.size)]
    imagen = family_order(familia, f"⇓[{P.name}]")
    return imagen, PointMap(P.carrier, imagen.carrier, tuple(imagen.carrier.index(A) for A in familia))


def k_image_order(P: LOrderedSet) -> Tuple[LOrderedSet, PointMap]:
    """({k(x)}, sub) y el mapeo canonico x -> k(x)"""
    familia = [LSubset(P.carrier, k_values(P, x), P.quantale) for x in range(P.size)]
    imagen = family_order(familia, f"k[{P.name}]")
    return imagen, PointMap(P.carrier, imagen.carrier, tuple(imagen.carrier.index(A) for A in familia))


def check_canonical_isos(P: LOrderedSet) -> CheckResult:
    """x -> ⇓x (continuo) y x -> k(x) (algebraico) son isomorfismos sobre su imagen"""
    hijos = []
    if is_continuous(P).passed:
        imagen, f = way_below_image_order(P)
        resultado = check_iso_via(f, P, imagen)
        hijos.append(CheckResult.all_of("iso-waybelow", [resultado]))
    if is_algebraic(P).passed:
        imagen, f = k_image_order(P)
        hijos.append(CheckResult.all_of("iso-k", [check_iso_via(f, P, imagen)]))
    return CheckResult.all_of("canonical-isos", hijos)


# ----------------------------------------------------------------------
# Analisis completo
# ----------------------------------------------------------------------

@dataclass
class DomainAnalysis:
    """Resultado de analizar un L-orden como dominio"""
    subject: LOrderedSet
    l_dcpo: CheckResult
    continuous: CheckResult
    algebraic: CheckResult
    way_below_table: Optional[Dict[Hashable, LSubset]] = None
    compact_points: Tuple[Hashable, ...] = ()
    omisiones: List[str] = field(default_factory=list)

    @property
    def is_l_dcpo(self) -> bool:
        return self.l_dcpo.passed

    @property
    def is_continuous(self) -> bool:
        return self.continuous.passed

    @property
    def is_algebraic(self) -> bool:
        return self.algebraic.passed

    def to_dict(self) -> dict:
        P = self.subject
        datos = {
            'subject': P.name,
            'size': P.size,
            'quantale': P.quantale.name,
            'l_dcpo': self.l_dcpo.to_dict(),
            'continuous': self.continuous.to_dict(),
            'algebraic': self.algebraic.to_dict(),
            'compact_points': [str(p) for p in self.compact_points],
            'omisiones': list(self.omisiones),
        }
        if self.way_below_table is not None and P.size <= settings.max_tabla_reporte:
            datos['way_below'] = {str(p): A.to_labels() for p, A in self.way_below_table.items()}
        return datos


def analyze_domain(P: LOrderedSet) -> DomainAnalysis:
    """
    Analisis completo: L-dcpo, ⇓, K(P), continuidad y algebraicidad.
    Si P no es L-dcpo, continuidad y algebraicidad quedan como REFUSED.
    Si la enumeracion excede el tope, el analisis es parcial.
    """
    omisiones: List[str] = []
    try:
        dcpo = is_l_dcpo(P)
    except ResourceCapError as e:
        logger.warning(f"Analisis parcial de {P.name}: {e.mensaje}")
        rechazo = CheckResult.refused("l-dcpo", e.mensaje)
        omisiones.append(f"l-dcpo: {e.mensaje}")
        return DomainAnalysis(P, rechazo, CheckResult.refused("continuous", e.mensaje),
                              CheckResult.refused("algebraic", e.mensaje), omisiones=omisiones)

    if not dcpo.passed:
        motivo = "no es L-dcpo"
        return DomainAnalysis(P, dcpo, CheckResult.refused("continuous", motivo),
                              CheckResult.refused("algebraic", motivo))

    W = cache_dominios.way_below(P)
    tabla = {P.points[x]: LSubset(P.carrier, W[x], P.quantale) for x in range(P.size)}
    compactos = tuple(P.points[x] for x in cache_dominios.compact_indices(P))
    analisis = DomainAnalysis(P, dcpo, is_continuous(P), is_algebraic(P), tabla, compactos, omisiones)
    logger.info(
        f"Analisis de {P.name}: continuo={analisis.is_continuous}, "
        f"algebraico={analisis.is_algebraic}, |K(P)|={len(compactos)}")
    return analisis
