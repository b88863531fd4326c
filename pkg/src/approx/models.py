"""
Modelos del modulo approx: L-relaciones aproximables y mapeos de Scott
entre familias de cerrados dirigidos.
"""
from dataclasses import dataclass
from typing import Hashable, Iterable, List, Optional, Sequence, Tuple

from src.core.errors import PreconditionError, StructuralError
from src.core.models import CheckResult
from src.closure.models import ClosureSpace
from src.order.dcpo import PointMap
from src.order.lsubset import LSubset

Tabla = Tuple[Tuple[int, ...], ...]


class ApproxRelation:
    """
    L-relacion Θ : X × Y -> L entre dos espacios de cerradura.

    `validated` es None hasta que validate_approximable la evalua.
    La igualdad es por tabla (y espacios), sin cocientes.
    """

    def __init__(self, source: ClosureSpace, target: ClosureSpace, theta: Sequence[Sequence[int]],
                 name: Optional[str] = None):
        if source.quantale != target.quantale:
            raise PreconditionError(
                f"Relacion entre espacios con quantales distintos: {source.quantale.name} vs {target.quantale.name}")
        if len(theta) != source.size or any(len(fila) != target.size for fila in theta):
            raise StructuralError(f"Tabla Θ no es {source.size}x{target.size}")
        self.source = source
        self.target = target
        self.quantale = source.quantale
        self.theta: Tabla = tuple(tuple(fila) for fila in theta)
        self.name = name or f"Θ[{source.name}->{target.name}]"
        self.validated: Optional[CheckResult] = None
        self._hash = hash((source, target, self.theta))

    def degree(self, x: Hashable, y: Hashable) -> int:
        return self.theta[self.source.carrier.index(x)][self.target.carrier.index(y)]

    def row(self, x: Hashable) -> LSubset:
        """Θ(x, ·) como L-subconjunto de Y"""
        return LSubset(self.target.carrier, self.theta[self.source.carrier.index(x)], self.quantale)

    def to_triples(self) -> List[Tuple[Hashable, Hashable, str]]:
        """Triples (x, y, grado) con grado distinto de 0"""
        Q = self.quantale
        return [
            (x, y, Q.label(self.theta[i][j]))
            for i, x in enumerate(self.source.points)
            for j, y in enumerate(self.target.points)
            if self.theta[i][j] != Q.bottom
        ]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ApproxRelation):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.theta == other.theta

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"ApproxRelation({self.name}, {self.source.size}x{self.target.size})"


def relation_from_triples(source: ClosureSpace, target: ClosureSpace,
                          triples: Iterable[Tuple[Hashable, Hashable, str]],
                          name: Optional[str] = None) -> ApproxRelation:
    """Construir Θ desde triples (x, y, grado); pares omitidos valen 0"""
    Q = source.quantale
    theta = [[Q.bottom] * target.size for _ in range(source.size)]
    for x, y, grado in triples:
        theta[source.carrier.index(x)][target.carrier.index(y)] = Q.index(grado)
    return ApproxRelation(source, target, theta, name)


@dataclass(frozen=True)
class ScottMap:
    """ψ : 𝔠(X) -> 𝔠(Y) como mapeo explicito entre carriers materializados"""
    source: ClosureSpace
    target: ClosureSpace
    mapping: PointMap
    name: str = "ψ"

    def __call__(self, U: LSubset) -> LSubset:
        return self.mapping(U)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScottMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.mapping.images == other.mapping.images)

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.mapping.images))

    def as_pairs(self) -> List[Tuple[LSubset, LSubset]]:
        """Pares (U, ψ(U)) en orden canonico de 𝔠(X)"""
        return list(self.mapping.as_dict().items())
