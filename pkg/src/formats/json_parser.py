"""
Parser de documentos de definicion (JSON UTF-8).

Todo documento lleva un campo "kind": quantale, lordered, closure,
relation o scottmap. Los grados son etiquetas de elementos del quantale,
nunca numeros. Las referencias a otros objetos pueden ir embebidas o
como nombre (fixture de quantale o nombre registrado en el workspace).
"""
import json
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Union

from loguru import logger

from src.core.errors import ParseError, StructuralError, UnknownFixtureError, WorkbenchError
from src.approx.models import ApproxRelation, ScottMap, relation_from_triples
from src.closure.directed import dir_closed_sets, find_directed_closed_index
from src.closure.models import ClosureSpace, PointGeneratedOperator, TableBackedOperator
from src.order.dcpo import PointMap
from src.order.lordered import LOrderedSet, classical_order, from_triples
from src.order.lsubset import Carrier
from src.quantale.fixtures import fixture_quantale
from src.quantale.models import FiniteQuantale

KINDS = ("quantale", "lordered", "closure", "relation", "scottmap")

Resolver = Callable[[str, str], Any]


class DefinitionParser:
    """Parser de documentos de definicion"""

    def __init__(self, resolver: Optional[Resolver] = None):
        """
        Args:
            resolver: Funcion (kind, nombre) -> objeto para referencias por nombre
        """
        self.resolver = resolver
        self.errores: List[str] = []

    # ------------------------------------------------------------------
    # Entrada
    # ------------------------------------------------------------------

    def parse_archivo(self, ruta: Union[str, Path]) -> Optional[Any]:
        """
        Parsear un archivo de definicion.

        Returns:
            El objeto construido, o None si hay error (ver self.errores)
        """
        ruta = Path(ruta)
        if not ruta.exists():
            logger.error(f"Archivo no encontrado: {ruta}")
            self.errores.append(f"Archivo no encontrado: {ruta}")
            return None
        try:
            documento = json.loads(ruta.read_text(encoding='utf-8'))
        except (json.JSONDecodeError, UnicodeDecodeError) as e:
            logger.error(f"JSON invalido en {ruta}: {e}")
            self.errores.append(f"JSON invalido: {e}")
            return None
        objeto = self.parse_documento(documento)
        if objeto is not None:
            logger.info(f"Definicion cargada desde {ruta.name}: {documento.get('kind')}")
        return objeto

    def parse_string(self, contenido: str) -> Optional[Any]:
        try:
            return self.parse_documento(json.loads(contenido))
        except json.JSONDecodeError as e:
            self.errores.append(f"JSON invalido: {e}")
            return None

    def parse_documento(self, documento: Dict) -> Optional[Any]:
        try:
            return self._construir(documento)
        except WorkbenchError as e:
            logger.error(f"Definicion invalida: {e.mensaje}")
            self.errores.append(e.mensaje)
            return None
        except (KeyError, TypeError, ValueError, IndexError) as e:
            logger.error(f"Documento mal formado: {e!r}")
            self.errores.append(f"Documento mal formado: {e!r}")
            return None

    # ------------------------------------------------------------------
    # Construccion por tipo
    # ------------------------------------------------------------------

    def _construir(self, documento: Dict) -> Any:
        if not isinstance(documento, dict):
            raise ParseError("El documento debe ser un objeto JSON")
        kind = documento.get('kind')
        if kind not in KINDS:
            raise ParseError(f"Campo 'kind' invalido: {kind!r} (use {', '.join(KINDS)})")
        return getattr(self, f"_parse_{kind}")(documento)

    def _referencia(self, valor: Any, kind: str) -> Any:
        if isinstance(valor, dict):
            objeto = self._construir(valor)
            if valor.get('kind') != kind:
                raise ParseError(f"Se esperaba un documento '{kind}', llego '{valor.get('kind')}'")
            return objeto
        if not isinstance(valor, str):
            raise ParseError(f"Referencia a {kind} invalida: {valor!r}")
        if kind == 'quantale':
            try:
                return fixture_quantale(valor)
            except UnknownFixtureError:
                if self.resolver is None:
                    raise
        if self.resolver is None:
            raise ParseError(f"Referencia por nombre sin workspace: {kind} '{valor}'")
        return self.resolver(kind, valor)

    def _parse_quantale(self, doc: Dict) -> FiniteQuantale:
        if 'fixture' in doc:
            return fixture_quantale(doc['fixture'])
        tensor = {}
        for fila in doc['tensor']:
            a, b, c = fila
            tensor[(str(a), str(b))] = str(c)
        orden = [(str(a), str(b)) for a, b in doc.get('order', [])]
        return FiniteQuantale(doc['elements'], orden, tensor, str(doc['unit']), name=doc.get('name', 'L'))

    @staticmethod
    def _puntos(doc: Dict) -> List[str]:
        puntos = doc['points']
        if not isinstance(puntos, list) or not all(isinstance(p, str) for p in puntos):
            raise ParseError("'points' debe ser una lista de cadenas")
        return puntos

    def _parse_lordered(self, doc: Dict) -> LOrderedSet:
        Q = self._referencia(doc['quantale'], 'quantale')
        nombre = doc.get('name', 'P')
        puntos = self._puntos(doc)
        if 'degrees' in doc:
            triples = [(x, y, str(g)) for x, y, g in doc['degrees']]
            return from_triples(nombre, puntos, triples, Q)
        pares = [(a, b) for a, b in doc.get('order', [])]
        return classical_order(nombre, puntos, pares, Q)

    def _vector(self, carrier: Carrier, Q: FiniteQuantale, valor: Any) -> tuple:
        """L-subconjunto como mapeo punto -> etiqueta o como vector de etiquetas"""
        if isinstance(valor, dict):
            valores = [Q.bottom] * carrier.size
            for p, g in valor.items():
                valores[carrier.index(p)] = Q.index(str(g))
            return tuple(valores)
        if len(valor) != carrier.size:
            raise StructuralError(f"Vector de {len(valor)} grados para carrier de {carrier.size} puntos")
        return tuple(Q.index(str(g)) for g in valor)

    def _parse_closure(self, doc: Dict) -> ClosureSpace:
        Q = self._referencia(doc['quantale'], 'quantale')
        carrier = Carrier(doc.get('name', 'X'), self._puntos(doc))
        operador = doc.get('operator', 'point')
        if operador == 'point':
            cierres = doc['closures']
            faltantes = [p for p in carrier.points if p not in cierres]
            if faltantes:
                raise StructuralError(f"Faltan cierres puntuales para {faltantes}")
            op = PointGeneratedOperator(carrier, Q, [self._vector(carrier, Q, cierres[p]) for p in carrier.points])
        elif operador == 'table':
            tabla = {self._vector(carrier, Q, A): self._vector(carrier, Q, B) for A, B in doc['rows']}
            op = TableBackedOperator(carrier, Q, tabla)
        else:
            raise ParseError(f"Operador desconocido: {operador!r} (use point o table)")
        return ClosureSpace(carrier, op, doc.get('name'))

    def _parse_relation(self, doc: Dict) -> ApproxRelation:
        X = self._referencia(doc['source'], 'closure')
        Y = self._referencia(doc['target'], 'closure')
        triples = [(x, y, str(g)) for x, y, g in doc.get('triples', [])]
        return relation_from_triples(X, Y, triples, doc.get('name'))

    def _parse_scottmap(self, doc: Dict) -> ScottMap:
        X = self._referencia(doc['source'], 'closure')
        Y = self._referencia(doc['target'], 'closure')
        CX, CY = dir_closed_sets(X), dir_closed_sets(Y)
        Q = X.quantale
        imagenes: Dict[int, int] = {}
        for U, V in doc['pairs']:
            i = find_directed_closed_index(CX, self._vector(X.carrier, Q, U))
            j = find_directed_closed_index(CY, self._vector(Y.carrier, Q, V))
            if i is None or j is None:
                raise StructuralError(f"Par fuera de 𝔠(X) x 𝔠(Y): {U} -> {V}")
            imagenes[i] = j
        if len(imagenes) != CX.size:
            raise StructuralError(f"Mapeo de Scott no total: {len(imagenes)} de {CX.size} cerrados dirigidos")
        f = PointMap(CX.carrier, CY.carrier, tuple(imagenes[i] for i in range(CX.size)))
        return ScottMap(X, Y, f, doc.get('name', 'ψ'))


def load_definition(ruta: Union[str, Path], resolver: Optional[Resolver] = None) -> Any:
    """
    Cargar un documento de definicion.

    Raises:
        ParseError: con los errores acumulados del parser
    """
    parser = DefinitionParser(resolver)
    objeto = parser.parse_archivo(ruta)
    if objeto is None:
        raise ParseError("; ".join(parser.errores) or f"No se pudo cargar {ruta}")
    return objeto
