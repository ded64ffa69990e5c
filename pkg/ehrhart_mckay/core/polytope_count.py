"""Lattice points of the level-q root-lattice polytope, counted by exhaustive enumeration.

Two enumerations run for every count and must agree:
  root space    x >= 0 with C x >= 0 and marks.C x <= q
  weight space  y >= 0 with marks.y <= q and C^{-1} y integral
"""
from collections import deque
from fractions import Fraction
from math import ceil, floor, lcm

import sympy

from ehrhart_mckay.components.algebra import AlgebraId
from ehrhart_mckay.components.constraints import ConstraintSystem
from ehrhart_mckay.components.series import PowerSeries
from ehrhart_mckay.core import lie_data
from ehrhart_mckay.errors import CountMismatchError, TruncationError
from ehrhart_mckay.utils.logger import log


def _check_level(q: int):
    if q < 0:
        raise TruncationError(f"Level must be >= 0, got {q}")


def build_constraints(a: AlgebraId, q: int) -> ConstraintSystem:
    """A = [[C, -I, 0], [marks.C, 0, 1]], b = (0, ..., 0, q)."""
    _check_level(q)
    r = a.rank
    c = lie_data.cartan_matrix(a)
    marks = sympy.Matrix([list(lie_data.highest_root_marks(a))])
    top = c.row_join(-sympy.eye(r)).row_join(sympy.zeros(r, 1))
    bottom = (marks * c).row_join(sympy.zeros(1, r)).row_join(sympy.Matrix([[1]]))
    return ConstraintSystem(a, top.col_join(bottom), (0,) * r + (q,))


def box_bounds(a: AlgebraId, q: int) -> tuple[int, ...]:
    """x_j <= floor(q * max_i C^{-1}_ji / c_i) for every point of the level-q polytope."""
    inverse = lie_data.inverse_cartan_rows(a)
    marks = lie_data.highest_root_marks(a)
    r = a.rank
    return tuple(floor(q * max(inverse[j][i] / marks[i] for i in range(r))) for j in range(r))


def _bfs_order(a: AlgebraId) -> list[int]:
    neighbours = _neighbours(a)
    order, seen, queue = [], {0}, deque([0])
    while queue:
        node = queue.popleft()
        order.append(node)
        for other in sorted(neighbours[node]):
            if other not in seen:
                seen.add(other)
                queue.append(other)
    return order


def _neighbours(a: AlgebraId) -> list[set[int]]:
    neighbours = [set() for _ in range(a.rank)]
    for i, j in lie_data.dynkin_edges(a):
        neighbours[i - 1].add(j - 1)
        neighbours[j - 1].add(i - 1)
    return neighbours


def _count_root_space(a: AlgebraId, q: int) -> int:
    r = a.rank
    order = _bfs_order(a)
    neighbours = _neighbours(a)
    marks = lie_data.highest_root_marks(a)
    bounds = box_bounds(a, q)
    x: list[int | None] = [None] * r

    def partial_label(i):
        # 2 x_i minus the assigned neighbours; unassigned ones can only lower it
        return 2 * x[i] - sum(x[j] for j in neighbours[i] if x[j] is not None)

    def complete(i):
        return x[i] is not None and all(x[j] is not None for j in neighbours[i])

    def visit(position, level):
        if position == r:
            return 1
        node = order[position]
        assigned = [j for j in neighbours[node] if x[j] is not None]
        lo = ceil(Fraction(sum(x[j] for j in assigned), 2))
        hi = min([bounds[node]] + [partial_label(j) for j in assigned])
        for j in assigned:
            if all(x[k] is not None for k in neighbours[j] if k != node):
                # j completes now: marks_j * (partial_label(j) - value) <= q - level
                lo = max(lo, partial_label(j) - (q - level) // marks[j])
        total = 0
        for value in range(lo, hi + 1):
            x[node] = value
            added = sum(marks[k] * partial_label(k) for k in [node] + assigned if complete(k))
            if level + added <= q:
                total += visit(position + 1, level + added)
        x[node] = None
        return total

    return visit(0, 0)


def _integer_rows(rows) -> list[tuple[int, tuple[int, ...]]]:
    """Each rational row as (m, m * row mod m) with m its common denominator."""
    converted = []
    for row in rows:
        fractions = [lie_data.to_fraction(e) for e in row]
        m = lcm(*(f.denominator for f in fractions))
        converted.append((m, tuple(int(f * m) % m for f in fractions)))
    return converted


def _dominant_labels(marks, q: int):
    """Every y >= 0 with marks.y <= q."""
    r = len(marks)
    y = [0] * r

    def walk(i, budget):
        if i == r:
            yield tuple(y)
            return
        for value in range(budget // marks[i] + 1):
            y[i] = value
            yield from walk(i + 1, budget - marks[i] * value)
        y[i] = 0

    yield from walk(0, q)


def count_weight_states(a: AlgebraId, q: int, rows=None) -> int:
    """Dominant weights of level <= q for which every congruence row pairs to an integer.

    `rows` defaults to all rows of C^{-1}, which selects exactly the root lattice.
    """
    _check_level(q)
    rows = lie_data.inverse_cartan_rows(a) if rows is None else rows
    checks = [(m, row) for m, row in _integer_rows(rows) if m > 1]
    marks = lie_data.highest_root_marks(a)
    count = 0
    for y in _dominant_labels(marks, q):
        if all(sum(e * v for e, v in zip(row, y)) % m == 0 for m, row in checks):
            count += 1
    return count


def count_root_states(a: AlgebraId, q: int) -> int:
    """|Q_q|: root-lattice states at level q, by root-space and weight-space enumeration."""
    _check_level(q)
    by_roots = _count_root_space(a, q)
    by_weights = count_weight_states(a, q)
    if by_roots != by_weights:
        log("Polytope", f"{a} q={q}: root space gives {by_roots}, weight space {by_weights}", level="ERROR")
        raise CountMismatchError(f"{a} at level {q}: root-space count {by_roots} != weight-space count {by_weights}")
    log("Polytope", f"{a} q={q}: {by_roots} states", level="DEBUG")
    return by_roots


def ehrhart_series_bruteforce(a: AlgebraId, truncation: int) -> PowerSeries:
    """Ehr(z) = 1 + sum_{t=1}^{T} L(t) z^t."""
    if truncation < 1:
        raise TruncationError(f"Truncation must be >= 1, got {truncation}")
    log("Polytope", f"Enumerating {a} up to level {truncation}")
    return PowerSeries([1] + [count_root_states(a, t) for t in range(1, truncation + 1)], truncation)


def count_all_states(a: AlgebraId, q: int) -> int:
    """Number of y >= 0 with marks.y <= q (no root-lattice condition)."""
    _check_level(q)
    ways = [1] + [0] * q
    for c in lie_data.highest_root_marks(a):
        for s in range(c, q + 1):
            ways[s] += ways[s - c]
    return sum(ways)


def asymptotic_ratio(a: AlgebraId, q: int) -> Fraction:
    """count_all_states(a, q) |W| / (q^r det C); tends to 1 as q grows."""
    if q < 1:
        raise TruncationError(f"The asymptotic ratio needs q >= 1, got {q}")
    return Fraction(count_all_states(a, q) * lie_data.weyl_order(a), q ** a.rank * lie_data.det_cartan(a))
