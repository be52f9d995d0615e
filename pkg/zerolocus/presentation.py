"""
zerolocus/presentation.py
Presentación R^q --A--> R^p --> M de un módulo junto con un levantamiento y
de la sección m.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

from algebra.matrix import PolyMatrix
from algebra.polynomial import Poly, PolyRing
from config.settings import settings
from exceptions import RingMismatchError, ShapeError
from utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class ModulePresentation:
    """
    Datos (A, y): A es p x q, y tiene p componentes.

    q = 0 significa que M es libre y Z(M, m) = V(y_1, ..., y_p).
    """
    ring: PolyRing
    A: PolyMatrix
    y: Tuple[Poly, ...]

    def __post_init__(self):
        y = tuple(self.y)
        object.__setattr__(self, "y", y)
        if self.A.rows < 1:
            raise ShapeError("La presentación necesita al menos una fila (p >= 1)")
        if len(y) != self.A.rows:
            raise ShapeError(
                f"y tiene {len(y)} componentes, A tiene {self.A.rows} filas"
            )
        if self.A.ring != self.ring:
            raise RingMismatchError("A no vive en el anillo de la presentación")
        for component in y:
            if not isinstance(component, Poly) or component.ring != self.ring:
                raise RingMismatchError("Las componentes de y deben vivir en el anillo de la presentación")

        limit = settings.compute.max_presentation_size
        if self.p > limit or self.q > limit:
            logger.warning(
                f"Presentación {self.p}x{self.q} supera el tamaño documentado "
                f"({limit}); el número de estratos crece combinatoriamente"
            )

    @classmethod
    def from_rows(
        cls,
        ring: PolyRing,
        rows: Sequence[Sequence[Poly]],
        y: Sequence[Poly],
        cols: int = None,
    ) -> "ModulePresentation":
        """Atajo: A por filas; con q = 0 cada fila es una lista vacía."""
        matrix = PolyMatrix.from_rows(ring, rows, cols=cols)
        return cls(ring, matrix, tuple(ring.coerce(v) for v in y))

    @property
    def p(self) -> int:
        return self.A.rows

    @property
    def q(self) -> int:
        return self.A.cols

    def __str__(self) -> str:
        return f"A = {self.A}, y = ({', '.join(str(v) for v in self.y)})"
