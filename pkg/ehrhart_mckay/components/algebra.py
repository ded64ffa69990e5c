import re
from dataclasses import dataclass

import sympy

from ehrhart_mckay.enums import Family
from ehrhart_mckay.errors import InvalidAlgebraError

# Exact matrices are sympy matrices with Integer/Rational entries.
ExactMatrix = sympy.Matrix

_NAME_RE = re.compile(r"^\s*([ADEade])\s*_?\s*(\d+)\s*$")


@dataclass(frozen=True)
class AlgebraId:
    """A simply-laced algebra: family plus rank."""

    family: Family
    rank: int

    def __post_init__(self):
        if not isinstance(self.family, Family):
            raise InvalidAlgebraError(f"Unknown family {self.family!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InvalidAlgebraError(f"Rank must be an integer, got {self.rank!r}")
        if self.family is Family.A and self.rank < 1:
            raise InvalidAlgebraError(f"A_n needs n >= 1, got {self.rank}")
        if self.family is Family.D and self.rank < 3:
            raise InvalidAlgebraError(f"D_n needs n >= 3, got {self.rank}")
        if self.family is Family.E and self.rank not in (6, 7, 8):
            raise InvalidAlgebraError(f"E_n exists only for n in 6, 7, 8, got {self.rank}")

    @classmethod
    def parse(cls, name: str) -> "AlgebraId":
        """Parses 'A2', 'D6', 'E8' (case-insensitive, optional underscore)."""
        match = _NAME_RE.match(name or "")
        if not match:
            raise InvalidAlgebraError(f"Cannot parse algebra name {name!r}; expected A<n>, D<n>, E6, E7 or E8")
        return cls(Family(match.group(1).upper()), int(match.group(2)))

    @classmethod
    def from_su(cls, n: int) -> "AlgebraId":
        """su(N) is A_{N-1}."""
        if n < 2:
            raise InvalidAlgebraError(f"su(N) needs N >= 2 for a rank >= 1 algebra, got {n}")
        return cls(Family.A, n - 1)

    @classmethod
    def from_so(cls, m: int) -> "AlgebraId":
        """so(M) with M even is D_{M/2}."""
        if m % 2 or m < 6:
            raise InvalidAlgebraError(f"so(M) needs M even and M >= 6, got {m}")
        return cls(Family.D, m // 2)

    @property
    def dual_n(self) -> int:
        """The N of su(N) (A_{N-1}) or of so(2(N+2)) (D_{N+2}); the rank for E."""
        if self.family is Family.A:
            return self.rank + 1
        if self.family is Family.D:
            return self.rank - 2
        return self.rank

    def __str__(self):
        return f"{self.family.value}{self.rank}"


@dataclass(frozen=True)
class MarksVector:
    """Highest-root coefficients c_1..c_r; the affine node carries c_0 = 1."""

    entries: tuple[int, ...]

    @property
    def extended(self) -> tuple[int, ...]:
        return (1,) + self.entries

    def level(self, labels) -> int:
        """The level sum_i c_i a_i of a weight with Dynkin labels a."""
        return sum(c * a for c, a in zip(self.entries, labels))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, index):
        return self.entries[index]
