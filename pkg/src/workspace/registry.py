"""
Registro persistente de objetos con nombre.

Cada objeto se guarda como documento de definicion autocontenido en
<workspace_dir>/<kind>/<nombre>.json. Los nombres son unicos por tipo y
todo objeto se valida antes de registrarse.
"""
import re
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from loguru import logger

from config.settings import settings
from src.core.errors import AxiomError, StructuralError, UnknownObjectError
from src.core.models import CheckResult
from src.core.utils import sugerir
from src.approx.functor import check_scott_map
from src.approx.models import ApproxRelation, ScottMap
from src.approx.relations import validate_approximable
from src.closure.models import ClosureSpace
from src.closure.validation import validate_space
from src.formats.json_parser import KINDS, DefinitionParser
from src.formats.serializer import save_definition
from src.order.lordered import LOrderedSet, validate_l_order
from src.quantale.models import FiniteQuantale
from src.quantale.validation import check_residuation_laws, validate_quantale

_NOMBRE_VALIDO = re.compile(r'^[A-Za-z0-9_.-]+$')


def kind_of(objeto: Any) -> str:
    """Tipo de documento de un objeto"""
    tipos = (
        (FiniteQuantale, 'quantale'),
        (LOrderedSet, 'lordered'),
        (ClosureSpace, 'closure'),
        (ApproxRelation, 'relation'),
        (ScottMap, 'scottmap'),
    )
    for clase, kind in tipos:
        if isinstance(objeto, clase):
            return kind
    raise StructuralError(f"Tipo no registrable: {type(objeto).__name__}")


def validate_object(objeto: Any) -> CheckResult:
    """Validadores propios de cada tipo (quantale, L-orden, GC-IT-LC, AP, Scott)"""
    kind = kind_of(objeto)
    if kind == 'quantale':
        return CheckResult.all_of("quantale", [validate_quantale(objeto), check_residuation_laws(objeto)], objeto.name)
    if kind == 'lordered':
        return validate_l_order(objeto)
    if kind == 'closure':
        return validate_space(objeto)
    if kind == 'relation':
        return validate_approximable(objeto)
    return check_scott_map(objeto)


class Workspace:
    """
    Registro de objetos cargados.
    Mantiene en memoria los objetos ya leidos; el disco es la fuente de verdad.
    """

    def __init__(self, directorio: Optional[Path] = None):
        self.directorio = Path(directorio or settings.workspace_dir)
        self.directorio.mkdir(parents=True, exist_ok=True)
        self._cargados: Dict[Tuple[str, str], Any] = {}

    def _ruta(self, kind: str, nombre: str) -> Path:
        return self.directorio / kind / f"{nombre}.json"

    def names(self, kind: Optional[str] = None) -> List[Tuple[str, str]]:
        """(kind, nombre) registrados, en orden"""
        kinds = [kind] if kind else list(KINDS)
        return [(k, ruta.stem) for k in kinds for ruta in sorted((self.directorio / k).glob("*.json"))]

    def register(self, nombre: str, objeto: Any, reemplazar: bool = False) -> Path:
        """
        Validar y registrar un objeto.

        Raises:
            StructuralError: nombre invalido o ya registrado para ese tipo
            AxiomError: si el objeto no valida
        """
        if not _NOMBRE_VALIDO.match(nombre):
            raise StructuralError(f"Nombre invalido: '{nombre}' (use letras, digitos, '_', '.' o '-')")
        kind = kind_of(objeto)
        ruta = self._ruta(kind, nombre)
        if ruta.exists() and not reemplazar:
            raise StructuralError(f"Ya existe un {kind} llamado '{nombre}'")
        resultado = validate_object(objeto)
        if not resultado.passed:
            raise AxiomError(f"{kind} '{nombre}' no valida", resultado)
        save_definition(objeto, ruta)
        self._cargados[(kind, nombre)] = objeto
        logger.info(f"Objeto registrado: {kind} '{nombre}'")
        return ruta

    def get(self, nombre: str, kind: Optional[str] = None) -> Any:
        """
        Objeto registrado por nombre (y tipo, si el nombre es ambiguo).

        Raises:
            UnknownObjectError: nombre no registrado (con sugerencias)
            StructuralError: nombre registrado bajo varios tipos sin indicar cual
        """
        candidatos = [(k, n) for k, n in self.names(kind) if n == nombre]
        if not candidatos:
            raise UnknownObjectError(nombre, sugerir(nombre, sorted({n for _, n in self.names(kind)})))
        if len(candidatos) > 1:
            raise StructuralError(f"'{nombre}' es ambiguo: {', '.join(k for k, _ in candidatos)}")
        clave = candidatos[0]
        if clave not in self._cargados:
            parser = DefinitionParser(resolver=self.resolver)
            objeto = parser.parse_archivo(self._ruta(*clave))
            if objeto is None:
                raise StructuralError(f"Registro corrupto para {clave[0]} '{nombre}': {'; '.join(parser.errores)}")
            self._cargados[clave] = objeto
        return self._cargados[clave]

    def resolver(self, kind: str, nombre: str) -> Any:
        """Resolver de referencias para DefinitionParser"""
        return self.get(nombre, kind)
