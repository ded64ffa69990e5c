from dataclasses import dataclass
from fractions import Fraction

from ehrhart_mckay.components.algebra import AlgebraId
from ehrhart_mckay.errors import CountMismatchError


@dataclass(frozen=True)
class DetGroup:
    """Z_m1 x ... x Z_mk, elements as tuples; no moduli means the trivial group."""

    moduli: tuple[int, ...] = ()

    def __post_init__(self):
        if any(m < 1 for m in self.moduli):
            raise ValueError(f"Moduli must be positive, got {self.moduli}")

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.moduli)

    def add(self, x, y) -> tuple[int, ...]:
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def __str__(self):
        return " x ".join(f"Z_{m}" for m in self.moduli) or "1"


@dataclass(frozen=True)
class Irrep:
    """An irreducible representation: its dimension and its determinant.

    `phase` is the determinant as a turn in [0, 1) (smallest polar angle), used for display.
    """

    dim: int
    det: tuple[int, ...]
    phase: Fraction = Fraction(0)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"Irrep dimension must be positive, got {self.dim}")


@dataclass(frozen=True)
class GroupData:
    """The McKay-dual finite subgroup of SU(2) of an algebra.

    irreps[0] is the trivial representation (the affine node); irreps[j] sits on Dynkin node j.
    """

    algebra: AlgebraId
    name: str
    order: int
    det_group: DetGroup
    irreps: tuple[Irrep, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(irrep.dim for irrep in self.irreps)

    @property
    def phases(self) -> tuple[Fraction, ...]:
        """Determinant phases of the nontrivial nodes 1..r."""
        return tuple(irrep.phase for irrep in self.irreps[1:])

    def validate(self, extended_marks=None):
        """Checks sum dim^2 = |G| and, when given, that the dims are the affine marks."""
        squares = sum(d * d for d in self.dims)
        if squares != self.order:
            raise CountMismatchError(f"{self.name}: sum of dim^2 is {squares}, group order is {self.order}")
        if extended_marks is not None and tuple(extended_marks) != self.dims:
            raise CountMismatchError(f"{self.name}: dims {self.dims} are not the affine marks {tuple(extended_marks)}")
        if self.irreps[0].det != self.det_group.zero:
            raise CountMismatchError(f"{self.name}: the trivial irrep must have unit determinant")

    def __str__(self):
        return f"{self.name} (order {self.order}, det group {self.det_group}, dual to {self.algebra})"
