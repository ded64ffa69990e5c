"""Representation counting over the McKay-dual group, the congruence rows of
C^{-1} mod 1, and the vee-fold that predicts irrep determinants."""
from collections import Counter
from fractions import Fraction
from math import lcm

import sympy

from ehrhart_mckay.components.algebra import AlgebraId
from ehrhart_mckay.components.group import DetGroup, GroupData, Irrep
from ehrhart_mckay.components.series import PowerSeries
from ehrhart_mckay.core import lie_data
from ehrhart_mckay.core.series_core import phi_dic_even_series, phi_su_series
from ehrhart_mckay.enums import Family
from ehrhart_mckay.errors import CountMismatchError, TruncationError, VeeUndefinedError
from ehrhart_mckay.utils.logger import log

_EXCEPTIONAL = {6: ("2T", 24), 7: ("2O", 48), 8: ("2I", 120)}

# Nontrivial determinant phases of the binary tetrahedral, octahedral and
# icosahedral groups: two w and two w^2, three -1, none.
TABULATED_DETERMINANTS = {
    AlgebraId(Family.E, 6): Counter({Fraction(1, 3): 2, Fraction(2, 3): 2}),
    AlgebraId(Family.E, 7): Counter({Fraction(1, 2): 3}),
    AlgebraId(Family.E, 8): Counter(),
}


def _generated_subgroup(rows) -> set[tuple[Fraction, ...]]:
    """All Z-combinations of the rows, reduced mod 1."""
    if not rows:
        return set()
    zero = tuple(Fraction(0) for _ in rows[0])
    elements = {zero}
    frontier = [zero]
    while frontier:
        fresh = []
        for element in frontier:
            for row in rows:
                moved = tuple((e + v) % 1 for e, v in zip(element, row))
                if moved not in elements:
                    elements.add(moved)
                    fresh.append(moved)
        frontier = fresh
    return elements


def congruence_constraints(a: AlgebraId) -> tuple[tuple[Fraction, ...], ...]:
    """Rows of C^{-1} mod 1 with the implied ones removed.

    Rows are taken from the last node backwards; a row is kept only when it is
    not already an integer combination of the rows kept so far.
    """
    kept: list[tuple[int, tuple[Fraction, ...]]] = []
    rows = lie_data.mod1_rows(a)
    for index in reversed(range(len(rows))):
        row = rows[index]
        if all(e == 0 for e in row):
            continue
        if row in _generated_subgroup([r for _, r in kept]):
            continue
        kept.append((index, row))
    kept.sort()
    log("McKay", f"{a}: congruence rows at nodes {[i + 1 for i, _ in kept]}", level="DEBUG")
    return tuple(row for _, row in kept)


def _divides_in_circle(b: Fraction, a: Fraction) -> bool:
    """b = k a (mod 1) for some integer k; multiples of p/q (lowest terms) are the j/q."""
    return a.denominator % b.denominator == 0


def vee(x, y) -> Fraction:
    """x v y: x + y if either is 0; x if y is a multiple of x; y if x is a multiple of y."""
    x, y = Fraction(x) % 1, Fraction(y) % 1
    if x == 0 or y == 0:
        return (x + y) % 1
    if _divides_in_circle(y, x):
        return x
    if _divides_in_circle(x, y):
        return y
    log("McKay", f"vee undefined for {x} and {y}", level="ERROR")
    raise VeeUndefinedError(f"{x} v {y}: neither is an integer multiple of the other")


def determinant_prediction(a: AlgebraId) -> tuple[Fraction, ...]:
    """X = row_1 v row_2 v ... v row_r of C^{-1} mod 1, element-wise; D = exp(2 pi i X)."""
    rows = lie_data.mod1_rows(a)
    prediction = list(rows[0])
    for row in rows[1:]:
        prediction = [vee(x, y) for x, y in zip(prediction, row)]
    return tuple(prediction)


def roots_of_unity(phases) -> tuple[sympy.Expr, ...]:
    """exp(2 pi i X) for each phase, simplified; for display."""
    return tuple(sympy.exp(2 * sympy.pi * sympy.I * sympy.Rational(p.numerator, p.denominator)) for p in phases)


def _cyclic_group(a: AlgebraId) -> GroupData:
    n = a.dual_n
    group = DetGroup((n,))
    irreps = tuple(Irrep(1, (k,), Fraction(k, n)) for k in range(n))
    return GroupData(a, f"Z_{n}", n, group, irreps)


def _dicyclic_even(a: AlgebraId) -> GroupData:
    # Components: parity of (x_1 + x_3 + ... + x_{N-1} + x_{N+2}) and of the x_{N+1} variant.
    n = a.dual_n
    group = DetGroup((2, 2))
    dets = [(0, 0), (1, 1)]
    dets += [(1, 1) if j % 2 else (0, 0) for j in range(2, n + 1)]
    dets += [(0, 1), (1, 0)]
    dims = lie_data.highest_root_marks(a).extended
    irreps = tuple(Irrep(d, det, Fraction(1, 2) if any(det) else Fraction(0)) for d, det in zip(dims, dets))
    return GroupData(a, f"Dic_{n}", 4 * n, group, irreps)


def _from_single_row(a: AlgebraId, name: str, order: int, row) -> GroupData:
    """Dets read off one rational row: node j carries row_j in Z_m, m the common denominator."""
    m = lcm(*(Fraction(e).denominator for e in row)) if row else 1
    dims = lie_data.highest_root_marks(a).extended
    group = DetGroup((m,)) if m > 1 else DetGroup()
    irreps = [Irrep(dims[0], group.zero, Fraction(0))]
    for dim, phase in zip(dims[1:], row):
        phase = Fraction(phase) % 1
        det = (int(phase * m),) if m > 1 else ()
        irreps.append(Irrep(dim, det, phase))
    return GroupData(a, name, order, group, tuple(irreps))


def group_of(a: AlgebraId) -> GroupData:
    if a.family is Family.A:
        data = _cyclic_group(a)
    elif a.family is Family.D and a.dual_n % 2 == 0:
        data = _dicyclic_even(a)
    elif a.family is Family.D:
        # Dic_N for odd N has abelianization Z_4: one congruence row of order 4
        (row,) = congruence_constraints(a)
        data = _from_single_row(a, f"Dic_{a.dual_n}", 4 * a.dual_n, row)
    else:
        name, order = _EXCEPTIONAL[a.rank]
        data = _from_single_row(a, name, order, determinant_prediction(a))
    data.validate(lie_data.highest_root_marks(a).extended)
    return data


def _rep_table(g: GroupData, q: int) -> list[int]:
    """Entry s: multiplicity vectors of total dimension s with unit determinant."""
    zero = g.det_group.zero
    table = [dict() for _ in range(q + 1)]
    table[0][zero] = 1
    for irrep in g.irreps:
        for s in range(irrep.dim, q + 1):
            for det, count in table[s - irrep.dim].items():
                key = g.det_group.add(det, irrep.det)
                table[s][key] = table[s].get(key, 0) + count
    return [row.get(zero, 0) for row in table]


def rep_count(g: GroupData, q: int) -> int:
    """Weyl-inequivalent q-dimensional representations with unit determinant."""
    if q < 0:
        raise TruncationError(f"Level must be >= 0, got {q}")
    return _rep_table(g, q)[q]


def rep_series(a: AlgebraId, truncation: int) -> PowerSeries:
    """Phi(z) = sum_q rep_count(q) z^q, checked against the closed forms where they exist."""
    if truncation < 1:
        raise TruncationError(f"Truncation must be >= 1, got {truncation}")
    g = group_of(a)
    series = PowerSeries(_rep_table(g, truncation), truncation)
    closed = None
    if a.family is Family.A:
        closed = phi_su_series(a.dual_n, truncation)
    elif a.family is Family.D and a.dual_n % 2 == 0:
        closed = phi_dic_even_series(a.dual_n, truncation)
    if closed is not None and closed != series:
        log("McKay", f"{a}: representation count {series} vs closed form {closed}", level="ERROR")
        raise CountMismatchError(f"{a}: representation counts disagree with the closed-form series")
    return series
