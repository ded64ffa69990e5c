from dataclasses import dataclass

from ehrhart_mckay.components.algebra import AlgebraId, ExactMatrix


@dataclass(frozen=True)
class ConstraintSystem:
    """A x' = b with x' = (x, k, s) >= 0 in slack form.

    Rows 1..r read C x - k = 0 (k are the Dynkin labels of the root-lattice
    point x); the last row reads (marks.C) x + s = q.
    """

    algebra: AlgebraId
    matrix: ExactMatrix
    rhs: tuple[int, ...]

    @property
    def level(self) -> int:
        return self.rhs[-1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    def is_solution(self, point, t: int | None = None) -> bool:
        """True when `point` is a nonnegative integer solution of A x' = t b (t defaults to the system's level)."""
        rows, cols = self.matrix.shape
        if len(point) != cols or any(int(v) != v or v < 0 for v in point):
            return False
        rhs = self.rhs if t is None else (0,) * (rows - 1) + (t,)
        for i in range(rows):
            if sum(self.matrix[i, j] * point[j] for j in range(cols)) != rhs[i]:
                return False
        return True

    def lift(self, x) -> tuple[int, ...]:
        """The slack-form point (x, Cx, q - marks.Cx) of a reduced point x."""
        r = self.algebra.rank
        if len(x) != r:
            raise ValueError(f"{self.algebra} points have {r} coordinates, got {len(x)}")
        labels = tuple(int(sum(self.matrix[i, j] * x[j] for j in range(r))) for i in range(r))
        used = int(sum(self.matrix[r, j] * x[j] for j in range(r)))
        return tuple(x) + labels + (self.level - used,)

    def __str__(self):
        return f"ConstraintSystem({self.algebra}, q={self.level}, {self.shape[0]}x{self.shape[1]})"
