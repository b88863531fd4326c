"""
Carriers finitos y L-subconjuntos.

Un LSubset es un mapeo total X -> L guardado como tupla de indices de
elemento en el orden canonico del carrier. Es la moneda comun de todas
las construcciones.
"""
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Hashable, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from loguru import logger

from src.core.errors import CarrierMismatchError, StructuralError, UnknownPointError
from src.core.utils import check_cap
from src.quantale.models import FiniteQuantale


class Carrier:
    """Conjunto finito con nombre y orden canonico de puntos"""

    def __init__(self, name: str, points: Sequence[Hashable]):
        self.name = name
        self.points: Tuple[Hashable, ...] = tuple(points)
        self._index: Dict[Hashable, int] = {}
        for i, p in enumerate(self.points):
            if p in self._index:
                raise StructuralError(f"Punto duplicado en carrier {name}: {p}")
            self._index[p] = i
        self._hash = hash((name, self.points))

    @property
    def size(self) -> int:
        return len(self.points)

    def index(self, point: Hashable) -> int:
        try:
            return self._index[point]
        except (KeyError, CarrierMismatchError):
            raise UnknownPointError(f"Punto desconocido en {self.name}: {point}") from None

    def __contains__(self, point) -> bool:
        try:
            return point in self._index
        except CarrierMismatchError:
            return False

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Carrier):
            return NotImplemented
        return self is other or (self._hash == other._hash and self.name == other.name
                                 and self.points == other.points)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Carrier({self.name}, {len(self.points)} puntos)"

    def sub_carrier(self, points: Iterable[Hashable], name: Optional[str] = None) -> 'Carrier':
        """Subcarrier con los puntos dados, en el orden canonico del padre"""
        elegidos = {self.points[self.index(p)] for p in points}
        ordenados = [p for p in self.points if p in elegidos]
        if name is None:
            name = f"{self.name}|{{{','.join(str(p) for p in ordenados)}}}"
        return Carrier(name, ordenados)


@dataclass(frozen=True, eq=False)
class LSubset:
    """L-subconjunto de un carrier: valores como indices de elementos de L"""
    carrier: Carrier
    values: Tuple[int, ...]
    quantale: FiniteQuantale = field(repr=False)

    def __post_init__(self):
        if len(self.values) != self.carrier.size:
            raise StructuralError(
                f"L-subconjunto no total sobre {self.carrier.name}: "
                f"{len(self.values)} valores para {self.carrier.size} puntos")
        object.__setattr__(self, '_hash', hash((self.carrier._hash, self.values)))

    def __call__(self, point: Hashable) -> int:
        """Grado del punto"""
        return self.values[self.carrier.index(point)]

    def degree(self, point: Hashable) -> str:
        """Grado del punto como etiqueta"""
        return self.quantale.label(self(point))

    def _mismo_carrier(self, other: 'LSubset'):
        if self.carrier != other.carrier:
            raise CarrierMismatchError(
                f"L-subconjuntos de carriers distintos: {self.carrier.name} vs {other.carrier.name}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, LSubset):
            return NotImplemented
        self._mismo_carrier(other)
        return self.values == other.values

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: 'LSubset') -> bool:
        """Orden lexicografico canonico (para ordenar familias)"""
        self._mismo_carrier(other)
        return self.values < other.values

    def leq(self, other: 'LSubset') -> bool:
        """Orden puntual A <= B"""
        self._mismo_carrier(other)
        leq = self.quantale.leq_table
        return all(leq[a][b] for a, b in zip(self.values, other.values))

    def height(self) -> int:
        """⋁_x A(x)"""
        return self.quantale.join_all(self.values)

    def is_nonempty(self) -> bool:
        """⋁_x A(x) >= u"""
        return self.quantale.geq_unit(self.height())

    def render(self) -> str:
        """Puntos con grado distinto de 0; identico para u_a en cualquier carrier"""
        Q = self.quantale
        partes = [f"{p}:{Q.label(v)}" for p, v in zip(self.carrier.points, self.values) if v != Q.bottom]
        return "{" + ", ".join(partes) + "}"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LSubset({self.carrier.name}, {self.render()})"

    def to_labels(self) -> list:
        """Vector de etiquetas en orden canonico del carrier"""
        return [self.quantale.label(v) for v in self.values]


# ----------------------------------------------------------------------
# Constructores
# ----------------------------------------------------------------------

def lsubset(carrier: Carrier, Q: FiniteQuantale, grados: Mapping[Hashable, str]) -> LSubset:
    """L-subconjunto desde un mapeo punto -> etiqueta (puntos omitidos valen 0)"""
    valores = [Q.bottom] * carrier.size
    for punto, etiqueta in grados.items():
        valores[carrier.index(punto)] = Q.index(etiqueta)
    return LSubset(carrier, tuple(valores), Q)


def from_labels(carrier: Carrier, Q: FiniteQuantale, etiquetas: Sequence[str]) -> LSubset:
    """L-subconjunto desde un vector de etiquetas en orden canonico"""
    if len(etiquetas) != carrier.size:
        raise StructuralError(
            f"Vector de {len(etiquetas)} grados para carrier {carrier.name} de {carrier.size} puntos")
    return LSubset(carrier, tuple(Q.index(e) for e in etiquetas), Q)


def constant_subset(carrier: Carrier, Q: FiniteQuantale, a: int) -> LSubset:
    """a_X"""
    return LSubset(carrier, (a,) * carrier.size, Q)


def zero_subset(carrier: Carrier, Q: FiniteQuantale) -> LSubset:
    """0_X"""
    return constant_subset(carrier, Q, Q.bottom)


def point_subset(carrier: Carrier, Q: FiniteQuantale, point: Hashable, grado: Optional[int] = None) -> LSubset:
    """u_a (o grado dado en `point`, 0 en el resto)"""
    valores = [Q.bottom] * carrier.size
    valores[carrier.index(point)] = Q.unit if grado is None else grado
    return LSubset(carrier, tuple(valores), Q)


def scalar_tensor(a: int, A: LSubset) -> LSubset:
    """a ⊗ A"""
    fila = A.quantale.tensor_table[a]
    return LSubset(A.carrier, tuple(fila[v] for v in A.values), A.quantale)


def join_subsets(subsets: Iterable[LSubset], carrier: Carrier, Q: FiniteQuantale) -> LSubset:
    """Join puntual de una familia (0_X para la familia vacia)"""
    join = Q.join_table
    valores = [Q.bottom] * carrier.size
    for A in subsets:
        if A.carrier != carrier:
            raise CarrierMismatchError(f"Join de L-subconjuntos de {A.carrier.name} sobre {carrier.name}")
        valores = [join[v][w] for v, w in zip(valores, A.values)]
    return LSubset(carrier, tuple(valores), Q)


def weighted_join(pesos: Iterable[Tuple[int, LSubset]], carrier: Carrier, Q: FiniteQuantale) -> LSubset:
    """⋁_i a_i ⊗ A_i"""
    join, mul = Q.join_table, Q.tensor_table
    valores = [Q.bottom] * carrier.size
    for a, A in pesos:
        if A.carrier != carrier:
            raise CarrierMismatchError(f"Join de L-subconjuntos de {A.carrier.name} sobre {carrier.name}")
        fila = mul[a]
        valores = [join[v][fila[w]] for v, w in zip(valores, A.values)]
    return LSubset(carrier, tuple(valores), Q)


def restrict_subset(A: LSubset, sub: Carrier) -> LSubset:
    """A|_Y"""
    return LSubset(sub, tuple(A(p) for p in sub.points), A.quantale)


def extend_by_zero(B: LSubset, carrier: Carrier) -> LSubset:
    """Extension de B a todo el carrier con 0 fuera de su dominio"""
    Q = B.quantale
    valores = [Q.bottom] * carrier.size
    for p, v in zip(B.carrier.points, B.values):
        valores[carrier.index(p)] = v
    return LSubset(carrier, tuple(valores), Q)


# ----------------------------------------------------------------------
# Grado de inclusion
# ----------------------------------------------------------------------

def sub_values(Q: FiniteQuantale, a: Sequence[int], b: Sequence[int]) -> int:
    """sub sobre vectores de valores: ⋀_x a(x) -> b(x)"""
    res, meet = Q.res_table, Q.meet_table
    acumulado = Q.top
    for x, y in zip(a, b):
        acumulado = meet[acumulado][res[x][y]]
    return acumulado


def subdeg(A: LSubset, B: LSubset) -> int:
    """
    Grado de inclusion sub(A, B) = ⋀_x A(x) -> B(x).

    Raises:
        CarrierMismatchError: si los carriers difieren
    """
    A._mismo_carrier(B)
    return sub_values(A.quantale, A.values, B.values)


# ----------------------------------------------------------------------
# Enumeracion
# ----------------------------------------------------------------------

def count_lsubsets(carrier: Carrier, Q: FiniteQuantale) -> int:
    return Q.size ** carrier.size


def enumerate_values(n: int, Q: FiniteQuantale, tope: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Vectores de L^n en orden lexicografico, con verificacion de tope"""
    check_cap(Q.size ** n, tope)
    return product(range(Q.size), repeat=n)


def enumerate_lsubsets(carrier: Carrier, Q: FiniteQuantale, tope: Optional[int] = None) -> Iterator[LSubset]:
    """
    Flujo determinista de todo L^X, cada L-subconjunto una vez.

    Raises:
        ResourceCapError: si |L|^|X| excede el tope
    """
    valores = enumerate_values(carrier.size, Q, tope)
    logger.debug(f"Enumerando {Q.size ** carrier.size} L-subconjuntos de {carrier.name}")
    return (LSubset(carrier, v, Q) for v in valores)


def enumerate_constrained(
    n: int,
    Q: FiniteQuantale,
    admisible: Callable[[int, list], bool],
    tope: Optional[int] = None,
) -> Iterator[Tuple[int, ...]]:
    """
    Vectores de L^n que satisfacen una restriccion local, por busqueda en
    profundidad con poda.

    `admisible(k, parcial)` se evalua al fijar la posicion k y solo debe
    mirar parcial[0..k]. El orden de salida coincide con el del producto
    lexicografico filtrado.
    """
    check_cap(Q.size ** n, tope)
    parcial = [0] * n

    def profundizar(k: int):
        if k == n:
            yield tuple(parcial)
            return
        for v in range(Q.size):
            parcial[k] = v
            if admisible(k, parcial):
                yield from profundizar(k + 1)

    return profundizar(0)
