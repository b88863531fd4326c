"""
Banco de trabajo de dominios valuados en quantales
Punto de entrada principal (CLI)

Uso:
    python main.py validate data/fixtures/q3l.json
    python main.py load data/fixtures/cadena2.json --as C2
    python main.py analyze C2
    python main.py construct closure-of-domain C2 --as X
    python main.py construct restrict X --points a --as XY
    python main.py suite rep1 --seed 42 --instances 30
    python main.py export-dot C2 -o cadena.dot

Codigos de salida: 0 todo pasa, 1 falla matematica (con testigo),
2 error de entrada o rechazo por precondicion, 3 suite con muestreo.
"""
import argparse
import json
import sys
from datetime import datetime
from pathlib import Path
from typing import Any

from loguru import logger

from config.settings import settings
from src.core.errors import AxiomError, StructuralError, WorkbenchError, ResourceCapError
from src.core.models import CheckResult, render_value
from src.approx.functor import compose_scott_maps, psi_of, theta_of
from src.approx.models import ApproxRelation, ScottMap
from src.approx.relations import compose_relations
from src.closure.constructions import closure_of_algebraic, closure_of_domain, restrict_to_subspace
from src.closure.directed import dir_closed_sets
from src.closure.models import ClosureSpace
from src.domain.analysis import analyze_domain
from src.formats.json_parser import load_definition
from src.harness.models import GenConfig
from src.harness.suites import SUITES, run_suite
from src.order.lordered import LOrderedSet
from src.reports.dot_export import export_dot
from src.reports.excel_generator import ExcelGenerator
from src.reports.suite_report import guardar_reporte, suite_text
from src.workspace.registry import Workspace, kind_of, validate_object

CONSTRUCCIONES = ("closure-of-domain", "closure-of-algebraic", "restrict", "compose", "psi", "theta")


def configurar_logger() -> Path:
    """Sink de consola con el nivel de settings y bitacora diaria completa en logs_dir"""
    logger.remove()
    logger.add(
        sys.stderr,
        level=settings.log_level,
        format=settings.log_format,
    )
    log_file = settings.logs_dir / f"workbench_{datetime.now():%Y%m%d}.log"
    logger.add(
        str(log_file),
        level="DEBUG",
        format="{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <7} | {process} | {name}:{function}:{line} | {message}",
        rotation=settings.log_rotacion,
        retention=settings.log_retencion,
    )
    return log_file


def _codigo(resultado: CheckResult) -> int:
    return 0 if resultado.passed else 1


def _guardar_json(nombre: str, datos: Any) -> Path:
    ruta = settings.output_dir / f"{nombre}.json"
    ruta.write_text(json.dumps(datos, ensure_ascii=False, indent=2, sort_keys=True) + "\n", encoding='utf-8')
    return ruta


# ----------------------------------------------------------------------
# Comandos
# ----------------------------------------------------------------------

def cmd_validate(args) -> int:
    """Validar un archivo de definicion con los validadores de su tipo"""
    workspace = Workspace()
    objeto = load_definition(args.archivo, workspace.resolver)
    resultado = validate_object(objeto)
    print(f"{kind_of(objeto)} {Path(args.archivo).name}")
    print(resultado.describe(1))
    falla = resultado.first_failure()
    if falla is not None:
        print(f"FALLA {falla.label}: testigo={render_value(falla.witness)}")
    return _codigo(resultado)


def cmd_load(args) -> int:
    workspace = Workspace()
    objeto = load_definition(args.archivo, workspace.resolver)
    ruta = workspace.register(args.nombre, objeto, reemplazar=args.reemplazar)
    print(f"Registrado {kind_of(objeto)} '{args.nombre}' en {ruta}")
    return 0


def _analizar_orden(P: LOrderedSet) -> dict:
    analisis = analyze_domain(P)
    print(f"{P.name} ({P.size} puntos sobre {P.quantale.name})")
    print(f"  l-dcpo: {'si' if analisis.is_l_dcpo else 'no'}")
    print(f"  continuo: {'si' if analisis.is_continuous else 'no'}")
    print(f"  algebraico: {'si' if analisis.is_algebraic else 'no'}")
    if analisis.is_l_dcpo:
        compactos = list(analisis.compact_points)
        print(f"  K(P): {'todos' if len(compactos) == P.size else compactos}")
    if analisis.way_below_table is not None and P.size <= settings.max_tabla_reporte:
        for p, A in analisis.way_below_table.items():
            print(f"  ⇓{p} = {A.render()}")
    for omision in analisis.omisiones:
        logger.warning(f"Omitido: {omision}")
    return analisis.to_dict()


def _analizar_espacio(S: ClosureSpace) -> dict:
    resultado = validate_object(S)
    print(resultado.describe(1))
    datos = {'space': S.name, 'validation': resultado.to_dict()}
    if S.flag("interpolative") != "pass":
        return datos
    try:
        C = dir_closed_sets(S)
    except ResourceCapError as e:
        logger.warning(f"𝔠({S.name}) omitido: {e.mensaje}")
        datos['omisiones'] = [f"𝔠: {e.mensaje}"]
        return datos
    print(f"  𝔠({S.name}): {C.size} cerrados dirigidos")
    for U in C.points:
        print(f"    {U.render()}")
    if C.size <= settings.max_tabla_reporte:
        Q = C.quantale
        for i, U in enumerate(C.points):
            print(f"    sub({U.render()}, ·) = {[Q.label(v) for v in C.e[i]]}")
    datos['closed_sets'] = [U.to_labels() for U in C.points]
    datos['closed_sets_domain'] = _analizar_orden(C)
    return datos


def cmd_analyze(args) -> int:
    """Reporte determinista del objeto registrado"""
    objeto = Workspace().get(args.nombre, args.kind)
    kind = kind_of(objeto)
    if kind == 'lordered':
        datos = _analizar_orden(objeto)
    elif kind == 'closure':
        datos = _analizar_espacio(objeto)
    else:
        resultado = validate_object(objeto)
        print(resultado.describe(1))
        datos = resultado.to_dict()
    ruta = _guardar_json(f"analyze_{args.nombre}", datos)
    logger.info(f"Analisis guardado en {ruta}")
    return 0


def _construir(kind: str, workspace: Workspace, args) -> Any:
    objetos = args.objetos
    esperados = 2 if kind == 'compose' else 1
    if len(objetos) != esperados:
        raise StructuralError(f"construct {kind} recibe {esperados} objeto(s), llegaron {len(objetos)}")
    if kind == 'closure-of-domain':
        return closure_of_domain(workspace.get(objetos[0], 'lordered'))
    if kind == 'closure-of-algebraic':
        return closure_of_algebraic(workspace.get(objetos[0], 'lordered'))
    if kind == 'restrict':
        if not args.points:
            raise StructuralError("construct restrict requiere --points")
        return restrict_to_subspace(workspace.get(objetos[0], 'closure'), args.points.split(','))
    if kind == 'psi':
        return psi_of(workspace.get(objetos[0], 'relation'))
    if kind == 'theta':
        return theta_of(workspace.get(objetos[0], 'scottmap'))
    # compose: Υ∘Θ sobre relaciones o g∘f sobre mapeos de Scott
    izquierda, derecha = (workspace.get(n) for n in objetos)
    if isinstance(izquierda, ApproxRelation) and isinstance(derecha, ApproxRelation):
        return compose_relations(izquierda, derecha)
    if isinstance(izquierda, ScottMap) and isinstance(derecha, ScottMap):
        return compose_scott_maps(izquierda, derecha)
    raise StructuralError("compose requiere dos relaciones o dos mapeos de Scott")


def cmd_construct(args) -> int:
    workspace = Workspace()
    objeto = _construir(args.construccion, workspace, args)
    ruta = workspace.register(args.nombre, objeto, reemplazar=args.reemplazar)
    print(f"Construido {kind_of(objeto)} '{args.nombre}' ({args.construccion}) en {ruta}")
    return 0


def cmd_suite(args) -> int:
    """Ejecutar una suite; los reportes quedan en output_dir"""
    if args.cap is not None:
        settings.cap_enumeracion = args.cap
    cfg = GenConfig(
        seed=args.seed,
        quantale=args.quantale,
        min_size=args.min_size,
        max_size=args.max_size,
        instances=args.instances,
        cap=settings.cap_enumeracion,
        budget=args.budget,
        workers=args.workers,
    )
    reporte = run_suite(args.nombre, cfg)
    print(suite_text(reporte))
    if reporte.refusal is None:
        ruta_txt, ruta_json = guardar_reporte(reporte, settings.output_dir)
        print(f"Reportes: {ruta_txt} {ruta_json}")
        if args.excel:
            print(f"Excel: {ExcelGenerator(settings.output_dir).generar(reporte)}")
    return reporte.exit_code()


def cmd_export_dot(args) -> int:
    objeto = Workspace().get(args.nombre, args.kind)
    if isinstance(objeto, ClosureSpace):
        objeto = dir_closed_sets(objeto)
    if not isinstance(objeto, LOrderedSet):
        raise StructuralError(f"export-dot requiere un L-orden o un espacio (llego {kind_of(objeto)})")
    ruta = export_dot(objeto, args.salida)
    print(f"DOT de {objeto.name} ({objeto.size} nodos) en {ruta}")
    return 0


# ----------------------------------------------------------------------
# Argumentos
# ----------------------------------------------------------------------

def crear_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Banco de trabajo de dominios valuados en quantales"
    )
    sub = parser.add_subparsers(dest='comando', required=True)

    p = sub.add_parser('validate', help='Validar un archivo de definicion')
    p.add_argument('archivo', type=str, help='Documento JSON (quantale, lordered, closure, relation, scottmap)')
    p.set_defaults(funcion=cmd_validate)

    p = sub.add_parser('load', help='Validar y registrar un archivo en el workspace')
    p.add_argument('archivo', type=str)
    p.add_argument('--as', dest='nombre', required=True, help='Nombre en el workspace')
    p.add_argument('--reemplazar', action='store_true', help='Sobrescribir si el nombre existe')
    p.set_defaults(funcion=cmd_load)

    p = sub.add_parser('analyze', help='Analizar un objeto registrado')
    p.add_argument('nombre', type=str)
    p.add_argument('--kind', type=str, default=None, help='Tipo, si el nombre es ambiguo')
    p.set_defaults(funcion=cmd_analyze)

    p = sub.add_parser('construct', help='Construir y registrar un objeto nuevo')
    p.add_argument('construccion', choices=CONSTRUCCIONES)
    p.add_argument('objetos', nargs='+', help='Nombres registrados (compose: Υ Θ para Υ∘Θ)')
    p.add_argument('--points', type=str, default=None, help='Puntos de Y separados por coma (restrict)')
    p.add_argument('--as', dest='nombre', required=True)
    p.add_argument('--reemplazar', action='store_true')
    p.set_defaults(funcion=cmd_construct)

    p = sub.add_parser('suite', help='Ejecutar una suite de teoremas')
    p.add_argument('nombre', type=str, help=f"Una de: {', '.join(SUITES)}")
    p.add_argument('--seed', type=int, default=settings.semilla)
    p.add_argument('--instances', type=int, default=settings.instancias_suite)
    p.add_argument('--quantale', type=str, default='boolean')
    p.add_argument('--cap', type=int, default=None, help='Tope de enumeracion |L|^|X|')
    p.add_argument('--budget', type=int, default=settings.presupuesto_suite)
    p.add_argument('--workers', type=int, default=settings.workers)
    p.add_argument('--min-size', type=int, default=1)
    p.add_argument('--max-size', type=int, default=4)
    p.add_argument('--excel', action='store_true', help='Generar tambien el libro Excel')
    p.set_defaults(funcion=cmd_suite)

    p = sub.add_parser('export-dot', help='Exportar el corte en u de un L-orden (o de 𝔠(X)) como DOT')
    p.add_argument('nombre', type=str)
    p.add_argument('-o', dest='salida', required=True)
    p.add_argument('--kind', type=str, default=None)
    p.set_defaults(funcion=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    """Punto de entrada principal"""
    args = crear_parser().parse_args(argv)

    configurar_logger()

    try:
        return args.funcion(args)
    except AxiomError as e:
        print(f"ERROR [{e.codigo}]: {e.mensaje}")
        if e.resultado is not None:
            print(e.resultado.describe(1))
        return e.exit_code
    except WorkbenchError as e:
        print(f"ERROR [{e.codigo}]: {e.mensaje}")
        return e.exit_code


if __name__ == '__main__':
    sys.exit(main())
