"""
Modelos del modulo closure: operadores de cerradura y espacios.

Dos representaciones del operador ⟨·⟩ : L^X -> L^X:
    - TableBackedOperator: tabla explicita A -> ⟨A⟩ (total sobre L^X)
    - PointGeneratedOperator: ⟨A⟩ = ⋁_x A(x) ⊗ C_x
Ambas exponen la misma semantica a traves de close().
"""
from abc import ABC, abstractmethod
from typing import Dict, Hashable, Mapping, Optional, Sequence, Tuple

from src.core.errors import CarrierMismatchError, StructuralError
from src.core.models import CheckResult
from src.core.utils import check_cap
from src.order.lsubset import Carrier, LSubset, enumerate_values
from src.quantale.models import FiniteQuantale

Valores = Tuple[int, ...]


class ClosureOperator(ABC):
    """Operador ⟨·⟩ sobre los L-subconjuntos de un carrier"""

    kind = "abstract"

    def __init__(self, carrier: Carrier, quantale: FiniteQuantale):
        self.carrier = carrier
        self.quantale = quantale

    @abstractmethod
    def close_values(self, valores: Valores) -> Valores:
        """⟨A⟩ sobre vectores de valores"""

    @property
    @abstractmethod
    def signature(self) -> tuple:
        """Firma estructural (igualdad y hash)"""

    def point_closure(self, i: int) -> Valores:
        """⟨u_x⟩ para el punto de indice i"""
        Q = self.quantale
        valores = [Q.bottom] * self.carrier.size
        valores[i] = Q.unit
        return self.close_values(tuple(valores))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClosureOperator):
            return NotImplemented
        return self.kind == other.kind and self.signature == other.signature

    def __hash__(self) -> int:
        return hash((self.kind, self.signature))


class TableBackedOperator(ClosureOperator):
    """Operador dado por tabla explicita; requiere |L|^|X| dentro del tope"""

    kind = "table"

    def __init__(self, carrier: Carrier, quantale: FiniteQuantale, table: Mapping[Valores, Valores]):
        super().__init__(carrier, quantale)
        check_cap(quantale.size ** carrier.size, que=f"L-subconjuntos de {carrier.name} (operador por tabla)")
        n = carrier.size
        self.table: Dict[Valores, Valores] = {}
        for A, B in table.items():
            A, B = tuple(A), tuple(B)
            if len(A) != n or len(B) != n:
                raise StructuralError(f"Fila de tabla con longitud distinta de |{carrier.name}|={n}")
            self.table[A] = B
        self._signature = tuple(sorted(self.table.items()))

    def close_values(self, valores: Valores) -> Valores:
        try:
            return self.table[tuple(valores)]
        except KeyError:
            raise StructuralError(
                f"Operador por tabla de {self.carrier.name} sin fila para {list(valores)}") from None

    @property
    def signature(self) -> tuple:
        return self._signature

    def is_total(self) -> bool:
        return len(self.table) == self.quantale.size ** self.carrier.size


class PointGeneratedOperator(ClosureOperator):
    """⟨A⟩ = ⋁_x A(x) ⊗ C_x; un L-subconjunto C_x por punto"""

    kind = "point"

    def __init__(self, carrier: Carrier, quantale: FiniteQuantale, closures: Sequence[Sequence[int]]):
        super().__init__(carrier, quantale)
        n = carrier.size
        if len(closures) != n or any(len(c) != n for c in closures):
            raise StructuralError(f"Se requiere un C_x de longitud {n} por punto de {carrier.name}")
        self.closures: Tuple[Valores, ...] = tuple(tuple(c) for c in closures)

    def close_values(self, valores: Valores) -> Valores:
        Q = self.quantale
        join, mul = Q.join_table, Q.tensor_table
        resultado = [Q.bottom] * self.carrier.size
        for a, C in zip(valores, self.closures):
            if a == Q.bottom:
                continue
            fila = mul[a]
            resultado = [join[r][fila[c]] for r, c in zip(resultado, C)]
        return tuple(resultado)

    def point_closure(self, i: int) -> Valores:
        # u es unidad: ⟨u_x⟩ = C_x
        return self.closures[i]

    @property
    def signature(self) -> tuple:
        return self.closures


def identity_operator(carrier: Carrier, quantale: FiniteQuantale) -> TableBackedOperator:
    """⟨A⟩ = A como operador por tabla"""
    return TableBackedOperator(carrier, quantale, {A: A for A in enumerate_values(carrier.size, quantale)})


FLAGS = ("generalized", "interpolative", "lclosure")


class ClosureSpace:
    """
    Espacio (X, ⟨·⟩) con banderas de validacion tri-estado.

    Cada bandera es None (sin verificar) o el CheckResult del validador
    correspondiente; solo los validadores del modulo las asignan.
    """

    def __init__(self, carrier: Carrier, operator: ClosureOperator, name: Optional[str] = None):
        if operator.carrier != carrier:
            raise CarrierMismatchError(
                f"Operador sobre {operator.carrier.name} para espacio sobre {carrier.name}")
        self.carrier = carrier
        self.operator = operator
        self.quantale = operator.quantale
        self.name = name or carrier.name
        self.flags: Dict[str, Optional[CheckResult]] = {f: None for f in FLAGS}
        self._cierres: Optional[Tuple[Valores, ...]] = None
        self._signature = (carrier, operator.kind, operator.signature, self.quantale.signature)
        self._hash = hash(self._signature)

    @property
    def size(self) -> int:
        return self.carrier.size

    @property
    def points(self) -> Tuple[Hashable, ...]:
        return self.carrier.points

    @property
    def point_closure_table(self) -> Tuple[Valores, ...]:
        """Tabla de C_x = ⟨u_x⟩ por indice de punto"""
        if self._cierres is None:
            self._cierres = tuple(self.operator.point_closure(i) for i in range(self.size))
        return self._cierres

    def flag(self, nombre: str) -> str:
        """'unchecked', 'pass' o 'fail'"""
        resultado = self.flags[nombre]
        if resultado is None:
            return "unchecked"
        return "pass" if resultado.passed else "fail"

    def check_subset(self, A: LSubset):
        if A.carrier != self.carrier:
            raise CarrierMismatchError(
                f"L-subconjunto sobre {A.carrier.name} usado en el espacio {self.name}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClosureSpace):
            return NotImplemented
        return self._signature == other._signature

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"ClosureSpace({self.name}, |X|={self.size}, {self.operator.kind})"


def close(S: ClosureSpace, A: LSubset) -> LSubset:
    """
    Evaluar ⟨A⟩.

    Raises:
        CarrierMismatchError: si A no es de X
        StructuralError: fila faltante en un operador por tabla
    """
    S.check_subset(A)
    return LSubset(S.carrier, S.operator.close_values(A.values), S.quantale)


def point_closures(S: ClosureSpace) -> Tuple[Tuple[LSubset, ...], Tuple[int, ...]]:
    """
    Ψ(X) = {⟨u_x⟩} sin duplicados en orden lexicografico, mas el indice
    x -> posicion de ⟨u_x⟩ en la familia.
    """
    tabla = S.point_closure_table
    distintos = sorted(set(tabla))
    posicion = {C: i for i, C in enumerate(distintos)}
    familia = tuple(LSubset(S.carrier, C, S.quantale) for C in distintos)
    return familia, tuple(posicion[C] for C in tabla)
