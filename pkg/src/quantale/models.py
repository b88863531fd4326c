"""
Quantales conmutativos unitales finitos.

Internamente todo trabaja con indices de elemento (orden canonico = orden de
la lista de entrada); las etiquetas solo se usan para entrada/salida.
"""
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
from loguru import logger

from config.settings import settings
from src.core.errors import PreconditionError, ResourceCapError, StructuralError
from src.core.models import CheckResult


class FiniteQuantale:
    """
    Quantale finito (L, <=, ⊗, u).

    Las fallas estructurales (etiquetas desconocidas, tabla incompleta)
    lanzan StructuralError. Las fallas de axiomas NO lanzan: quedan para
    validate_quantale. Si el orden no es un reticulo completo, las tablas
    derivadas (join/meet/residuacion) no se calculan.
    """

    def __init__(
        self,
        elements: Sequence[str],
        leq_pairs: Iterable[Tuple[str, str]],
        tensor: Mapping[Tuple[str, str], str],
        unit: str,
        name: str = "L",
    ):
        self.name = name
        self.elements: Tuple[str, ...] = tuple(str(e) for e in elements)
        if not self.elements:
            raise StructuralError("El quantale debe tener al menos un elemento")
        if len(set(self.elements)) != len(self.elements):
            raise StructuralError(f"Elementos duplicados en {name}: {list(self.elements)}")
        if len(self.elements) > settings.max_quantale:
            raise ResourceCapError(len(self.elements), settings.max_quantale, "elementos de L")

        self._index: Dict[str, int] = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        self.size = n

        # Orden: cerradura reflexiva-transitiva de los pares dados
        grafo = nx.DiGraph()
        grafo.add_nodes_from(range(n))
        for a, b in leq_pairs:
            grafo.add_edge(self.index(a), self.index(b))
        cerradura = nx.transitive_closure(grafo, reflexive=True)
        self.leq_table: Tuple[Tuple[bool, ...], ...] = tuple(
            tuple(cerradura.has_edge(i, j) for j in range(n)) for i in range(n)
        )

        # Tensor: tabla total
        filas: List[List[int]] = []
        for a in self.elements:
            fila = []
            for b in self.elements:
                if (a, b) not in tensor:
                    raise StructuralError(f"Tabla de tensor incompleta en {name}: falta {a} ⊗ {b}")
                fila.append(self.index(tensor[(a, b)]))
            filas.append(fila)
        self.tensor_table: Tuple[Tuple[int, ...], ...] = tuple(tuple(f) for f in filas)
        self.unit: int = self.index(unit)

        # Tablas derivadas
        self.join_table: Optional[Tuple[Tuple[int, ...], ...]] = None
        self.meet_table: Optional[Tuple[Tuple[int, ...], ...]] = None
        self.res_table: Optional[Tuple[Tuple[int, ...], ...]] = None
        self.bottom: Optional[int] = None
        self.top: Optional[int] = None
        self.lattice_check = self._analizar_reticulo()
        if self.lattice_check.passed:
            self._derivar_residuacion()

        self._signature = (self.elements, self.leq_table, self.tensor_table, self.unit)
        self._hash = hash(self._signature)
        logger.debug(f"Quantale {name} construido: |L|={n}, reticulo={self.lattice_check.passed}")

    # ------------------------------------------------------------------
    # Construccion de tablas derivadas
    # ------------------------------------------------------------------

    def _cota_minima(self, candidatos: List[int], superior: bool) -> Optional[int]:
        """Menor (superior=True) o mayor (superior=False) elemento de candidatos"""
        leq = self.leq_table
        for k in candidatos:
            if superior and all(leq[k][m] for m in candidatos):
                return k
            if not superior and all(leq[m][k] for m in candidatos):
                return k
        return None

    def _analizar_reticulo(self) -> CheckResult:
        """
        Verificar orden parcial + joins/meets binarios + fondo/tope.

        Para posets finitos no vacios esto basta para completitud.
        """
        n, leq = self.size, self.leq_table
        for i in range(n):
            for j in range(i + 1, n):
                if leq[i][j] and leq[j][i]:
                    return CheckResult.fail(
                        "lattice", (self.elements[i], self.elements[j]),
                        "antisimetria: a <= b y b <= a con a != b")

        joins = [[0] * n for _ in range(n)]
        meets = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                superiores = [k for k in range(n) if leq[i][k] and leq[j][k]]
                sup = self._cota_minima(superiores, superior=True)
                if sup is None:
                    return CheckResult.fail(
                        "lattice", (self.elements[i], self.elements[j]), "no existe el join binario")
                inferiores = [k for k in range(n) if leq[k][i] and leq[k][j]]
                inf = self._cota_minima(inferiores, superior=False)
                if inf is None:
                    return CheckResult.fail(
                        "lattice", (self.elements[i], self.elements[j]), "no existe el meet binario")
                joins[i][j] = sup
                meets[i][j] = inf

        self.join_table = tuple(tuple(f) for f in joins)
        self.meet_table = tuple(tuple(f) for f in meets)
        bottom, top = 0, 0
        for k in range(n):
            bottom = self.meet_table[bottom][k]
            top = self.join_table[top][k]
        self.bottom, self.top = bottom, top
        return CheckResult.ok("lattice", f"reticulo completo, 0={self.elements[bottom]}, 1={self.elements[top]}")

    def _derivar_residuacion(self):
        """a -> b = join{c : a⊗c <= b}; siempre derivada, nunca suministrada"""
        n, leq, mul = self.size, self.leq_table, self.tensor_table
        self.res_table = tuple(
            tuple(self.join_all(c for c in range(n) if leq[mul[a][c]][b]) for b in range(n))
            for a in range(n)
        )

    # ------------------------------------------------------------------
    # Acceso por indices
    # ------------------------------------------------------------------

    @property
    def is_lattice(self) -> bool:
        return self.lattice_check.passed

    def _requiere_reticulo(self):
        if not self.is_lattice:
            raise PreconditionError(f"{self.name} no es un reticulo completo: {self.lattice_check.trace}")

    def index(self, label: str) -> int:
        """Indice canonico de una etiqueta"""
        try:
            return self._index[str(label)]
        except KeyError:
            raise StructuralError(f"Elemento desconocido en {self.name}: '{label}'") from None

    def label(self, i: int) -> str:
        return self.elements[i]

    def leq(self, a: int, b: int) -> bool:
        return self.leq_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.tensor_table[a][b]

    def join(self, a: int, b: int) -> int:
        self._requiere_reticulo()
        return self.join_table[a][b]

    def meet(self, a: int, b: int) -> int:
        self._requiere_reticulo()
        return self.meet_table[a][b]

    def imp(self, a: int, b: int) -> int:
        """Residuacion a -> b"""
        self._requiere_reticulo()
        return self.res_table[a][b]

    def join_all(self, valores: Iterable[int]) -> int:
        """Join de un subconjunto (0 para el vacio)"""
        tabla, acumulado = self.join_table, self.bottom
        for v in valores:
            acumulado = tabla[acumulado][v]
        return acumulado

    def meet_all(self, valores: Iterable[int]) -> int:
        """Meet de un subconjunto (1 para el vacio)"""
        tabla, acumulado = self.meet_table, self.top
        for v in valores:
            acumulado = tabla[acumulado][v]
        return acumulado

    def geq_unit(self, a: int) -> bool:
        """a >= u"""
        return self.leq_table[self.unit][a]

    @property
    def integral(self) -> bool:
        return self.is_lattice and self.unit == self.top

    # ------------------------------------------------------------------
    # Identidad estructural
    # ------------------------------------------------------------------

    @property
    def signature(self) -> tuple:
        return self._signature

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteQuantale):
            return NotImplemented
        return self._signature == other._signature

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FiniteQuantale({self.name}, |L|={self.size}, u={self.elements[self.unit]})"

    def to_dict(self) -> dict:
        """Documento de definicion (pares de orden ya cerrados, tabla total)"""
        n = self.size
        return {
            'kind': 'quantale',
            'name': self.name,
            'elements': list(self.elements),
            'order': [[self.elements[i], self.elements[j]]
                      for i in range(n) for j in range(n) if i != j and self.leq_table[i][j]],
            'tensor': [[self.elements[i], self.elements[j], self.elements[self.tensor_table[i][j]]]
                       for i in range(n) for j in range(n)],
            'unit': self.elements[self.unit],
        }


def residuate(Q: FiniteQuantale, a: str, b: str) -> str:
    """
    Residuacion por etiquetas: a -> b = join{c : a⊗c <= b}.

    Args:
        Q: Quantale (debe ser reticulo completo)
        a: Etiqueta del antecedente
        b: Etiqueta del consecuente

    Returns:
        Etiqueta de a -> b
    """
    return Q.label(Q.imp(Q.index(a), Q.index(b)))


def is_integral(Q: FiniteQuantale) -> bool:
    """True si la unidad es el tope"""
    return Q.integral
