"""
Serializacion de objetos a documentos de definicion (inversa del parser).
Los documentos son autocontenidos: las referencias se embeben.
"""
import json
from pathlib import Path
from typing import Any, Dict, Union

from src.core.errors import StructuralError
from src.approx.models import ApproxRelation, ScottMap
from src.closure.models import ClosureSpace, PointGeneratedOperator
from src.order.lordered import LOrderedSet
from src.quantale.models import FiniteQuantale


def _punto(p: Any) -> str:
    return p if isinstance(p, str) else str(p)


def _etiquetas(Q: FiniteQuantale, valores) -> list:
    return [Q.label(v) for v in valores]


def quantale_document(Q: FiniteQuantale) -> Dict:
    return Q.to_dict()


def lordered_document(P: LOrderedSet) -> Dict:
    Q = P.quantale
    grados = [
        [_punto(P.points[i]), _punto(P.points[j]), Q.label(P.e[i][j])]
        for i in range(P.size) for j in range(P.size)
        if P.e[i][j] != Q.bottom or (i == j and P.e[i][j] != Q.unit)
    ]
    return {
        'kind': 'lordered',
        'name': P.name,
        'quantale': quantale_document(Q),
        'points': [_punto(p) for p in P.points],
        'degrees': grados,
    }


def closure_document(S: ClosureSpace) -> Dict:
    Q = S.quantale
    documento = {
        'kind': 'closure',
        'name': S.carrier.name,
        'quantale': quantale_document(Q),
        'points': [_punto(p) for p in S.points],
    }
    if isinstance(S.operator, PointGeneratedOperator):
        documento['operator'] = 'point'
        documento['closures'] = {
            _punto(p): {_punto(q): Q.label(v) for q, v in zip(S.points, C) if v != Q.bottom}
            for p, C in zip(S.points, S.operator.closures)
        }
    else:
        documento['operator'] = 'table'
        documento['rows'] = [[_etiquetas(Q, A), _etiquetas(Q, B)] for A, B in sorted(S.operator.table.items())]
    return documento


def relation_document(R: ApproxRelation) -> Dict:
    return {
        'kind': 'relation',
        'name': R.name,
        'source': closure_document(R.source),
        'target': closure_document(R.target),
        'triples': [[_punto(x), _punto(y), g] for x, y, g in R.to_triples()],
    }


def scottmap_document(psi: ScottMap) -> Dict:
    Q = psi.source.quantale
    return {
        'kind': 'scottmap',
        'name': psi.name,
        'source': closure_document(psi.source),
        'target': closure_document(psi.target),
        'pairs': [[_etiquetas(Q, U.values), _etiquetas(Q, V.values)] for U, V in psi.as_pairs()],
    }


def to_document(objeto: Any) -> Dict:
    """Documento de definicion para cualquiera de los cinco tipos"""
    if isinstance(objeto, FiniteQuantale):
        return quantale_document(objeto)
    if isinstance(objeto, LOrderedSet):
        return lordered_document(objeto)
    if isinstance(objeto, ClosureSpace):
        return closure_document(objeto)
    if isinstance(objeto, ApproxRelation):
        return relation_document(objeto)
    if isinstance(objeto, ScottMap):
        return scottmap_document(objeto)
    raise StructuralError(f"No se puede serializar {type(objeto).__name__}")


def dumps(objeto: Any) -> str:
    return json.dumps(to_document(objeto), ensure_ascii=False, indent=2, sort_keys=True)


def save_definition(objeto: Any, ruta: Union[str, Path]) -> Path:
    ruta = Path(ruta)
    ruta.parent.mkdir(parents=True, exist_ok=True)
    ruta.write_text(dumps(objeto), encoding='utf-8')
    return ruta
