"""Exact Cartan data for the simply-laced algebras A_n, D_n, E6, E7, E8.

Node orders:
  A_n   path 1 - 2 - ... - n
  D_n   with N = n - 2: path 1 - ... - N, fork nodes N+1 and N+2 both attached to N
  E_n   Bourbaki: 1 - 3 - 4 - 5 - 6 - 7 - 8 with 2 attached to 4

Everything is generated from the Dynkin adjacency; nothing below is a
hard-coded matrix.
"""
from fractions import Fraction
from functools import lru_cache
from math import factorial

import sympy

from ehrhart_mckay.components.algebra import AlgebraId, ExactMatrix, MarksVector
from ehrhart_mckay.enums import Family
from ehrhart_mckay.utils.logger import log

_E_EDGES = ((1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7), (7, 8))
_E_WEYL_ORDERS = {6: 51840, 7: 2903040, 8: 696729600}


def dynkin_edges(a: AlgebraId) -> tuple[tuple[int, int], ...]:
    """Edges of the (finite) Dynkin diagram, 1-based node labels."""
    r = a.rank
    if a.family is Family.A:
        return tuple((i, i + 1) for i in range(1, r))
    if a.family is Family.D:
        n = r - 2
        path = [(i, i + 1) for i in range(1, n)]
        return tuple(path + [(n, n + 1), (n, n + 2)])
    return tuple((i, j) for i, j in _E_EDGES if i <= r and j <= r)


@lru_cache(maxsize=None)
def _cartan_entries(a: AlgebraId) -> tuple[tuple[int, ...], ...]:
    r = a.rank
    rows = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    for i, j in dynkin_edges(a):
        rows[i - 1][j - 1] = -1
        rows[j - 1][i - 1] = -1
    return tuple(tuple(row) for row in rows)


def cartan_rows(a: AlgebraId) -> tuple[tuple[int, ...], ...]:
    """The Cartan matrix as nested int tuples, for enumeration loops."""
    return _cartan_entries(a)


def cartan_matrix(a: AlgebraId) -> ExactMatrix:
    return sympy.Matrix(_cartan_entries(a))


@lru_cache(maxsize=None)
def _inverse_entries(a: AlgebraId) -> tuple[tuple[Fraction, ...], ...]:
    inverse = cartan_matrix(a).inv()
    r = a.rank
    return tuple(
        tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(r))
        for i in range(r)
    )


def inverse_cartan_rows(a: AlgebraId) -> tuple[tuple[Fraction, ...], ...]:
    """C^{-1} as nested Fraction tuples."""
    return _inverse_entries(a)


def inverse_cartan(a: AlgebraId) -> ExactMatrix:
    return sympy.Matrix([[sympy.Rational(e.numerator, e.denominator) for e in row] for row in _inverse_entries(a)])


def inverse_cartan_closed_form(a: AlgebraId) -> ExactMatrix:
    """C^{-1} from the closed formulas of the A and D series.

    A_{N-1}:  C^{-1}_ij = (min(i, j) N - i j) / N
    D_{N+2}:  i for i <= j <= N;  i/2 against a fork node;
              N/4 between the fork nodes;  (N+2)/4 on a fork diagonal.
    """
    r = a.rank
    if a.family is Family.A:
        n = r + 1
        return sympy.Matrix(r, r, lambda i, j: sympy.Rational(min(i + 1, j + 1) * n - (i + 1) * (j + 1), n))
    if a.family is Family.D:
        n = r - 2

        def entry(i, j):
            i, j = sorted((i + 1, j + 1))
            if j <= n:
                return sympy.Integer(i)
            if i <= n:
                return sympy.Rational(i, 2)
            if i == j:
                return sympy.Rational(n + 2, 4)
            return sympy.Rational(n, 4)

        return sympy.Matrix(r, r, entry)
    raise ValueError(f"No closed form for {a}; use inverse_cartan")


@lru_cache(maxsize=None)
def positive_roots(a: AlgebraId) -> tuple[tuple[int, ...], ...]:
    """Positive roots in simple-root coordinates, sorted by height.

    Simply-laced string rule: for a positive root b != alpha_i, b + alpha_i is a
    root exactly when (b, alpha_i) = -1.
    """
    c = _cartan_entries(a)
    r = a.rank
    simple = [tuple(1 if k == i else 0 for k in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        next_layer = []
        for root in layer:
            for i in range(r):
                pairing = sum(root[j] * c[j][i] for j in range(r))
                if pairing == -1:
                    raised = tuple(root[k] + (1 if k == i else 0) for k in range(r))
                    if raised not in roots:
                        roots.add(raised)
                        next_layer.append(raised)
        layer = next_layer
    return tuple(sorted(roots, key=lambda b: (sum(b), b)))


@lru_cache(maxsize=None)
def highest_root_marks(a: AlgebraId) -> MarksVector:
    roots = positive_roots(a)
    top_height = max(sum(b) for b in roots)
    highest = [b for b in roots if sum(b) == top_height]
    if len(highest) != 1:
        # A simple root system has exactly one root of maximal height.
        raise ArithmeticError(f"{a}: found {len(highest)} roots of maximal height")
    log("LieData", f"{a}: {len(roots)} positive roots, marks {highest[0]}", level="DEBUG")
    return MarksVector(highest[0])


def affine_cartan_matrix(a: AlgebraId) -> ExactMatrix:
    """Extended Cartan matrix; row and column 0 belong to the affine node -theta."""
    c = cartan_matrix(a)
    theta = sympy.Matrix(list(highest_root_marks(a)))
    pairing = c * theta  # (theta, alpha_j)
    r = a.rank
    extended = sympy.zeros(r + 1, r + 1)
    extended[0, 0] = 2
    for j in range(r):
        extended[0, j + 1] = -pairing[j]
        extended[j + 1, 0] = -pairing[j]
    extended[1:, 1:] = c
    return extended


def det_cartan(a: AlgebraId) -> int:
    return int(cartan_matrix(a).det())


def weyl_order(a: AlgebraId) -> int:
    r = a.rank
    if a.family is Family.A:
        return factorial(r + 1)
    if a.family is Family.D:
        return 2 ** (r - 1) * factorial(r)
    return _E_WEYL_ORDERS[r]


def to_fraction(value) -> Fraction:
    """ints, Fractions and sympy Rationals as a Fraction."""
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def mod1(m: ExactMatrix) -> ExactMatrix:
    """Element-wise reduction of a rational matrix into [0, 1)."""
    return m.applyfunc(lambda e: sympy.Rational(e) % 1)


def mod1_rows(a: AlgebraId) -> tuple[tuple[Fraction, ...], ...]:
    """[C^{-1}] as Fraction rows."""
    return tuple(tuple(e % 1 for e in row) for row in _inverse_entries(a))
