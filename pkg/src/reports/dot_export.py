"""
Exportacion DOT de conjuntos L-ordenados.

Se dibuja el corte en u de e (aristas x -> y con e(x,y) >= u), reducido
transitivamente; las aristas cuyo grado no es u llevan su etiqueta.
"""
from pathlib import Path
from typing import Union

import networkx as nx
from loguru import logger

from config.settings import settings
from src.core.utils import check_cap
from src.order.lordered import LOrderedSet


def _id(texto: str) -> str:
    return '"' + str(texto).replace('\\', '\\\\').replace('"', '\\"') + '"'


def u_cut_graph(P: LOrderedSet) -> nx.DiGraph:
    """Corte en u reducido transitivamente, nodos por indice"""
    Q = P.quantale
    grafo = nx.DiGraph()
    grafo.add_nodes_from(range(P.size))
    grafo.add_edges_from((x, y) for x in range(P.size) for y in range(P.size)
                         if x != y and Q.geq_unit(P.e[x][y]))
    return nx.transitive_reduction(grafo)


def to_dot(P: LOrderedSet) -> str:
    """
    Texto DOT con orden determinista de nodos y aristas.

    Raises:
        ResourceCapError: si |P| excede settings.max_dot
    """
    check_cap(P.size, settings.max_dot, "puntos para exportar DOT")
    Q = P.quantale
    reducido = u_cut_graph(P)
    lineas = [f"digraph {_id(P.name)} {{", "  rankdir=BT;"]
    for x in range(P.size):
        lineas.append(f"  n{x} [label={_id(P.points[x])}];")
    for x, y in sorted(reducido.edges()):
        grado = P.e[x][y]
        etiqueta = "" if grado == Q.unit else f" [label={_id(Q.label(grado))}]"
        lineas.append(f"  n{x} -> n{y}{etiqueta};")
    lineas.append("}")
    return "\n".join(lineas) + "\n"


def export_dot(P: LOrderedSet, ruta: Union[str, Path]) -> Path:
    ruta = Path(ruta)
    ruta.parent.mkdir(parents=True, exist_ok=True)
    ruta.write_text(to_dot(P), encoding='utf-8')
    logger.info(f"DOT de {P.name} escrito en {ruta}")
    return ruta
