"""MacMahon's Omega operators as coefficient filters on truncated Laurent series,
and the elimination pipeline that turns the slack-form constraint matrix into
the Ehrhart series.
"""
from fractions import Fraction
from math import floor

from ehrhart_mckay.components.algebra import AlgebraId
from ehrhart_mckay.components.laurent import Monomial, MultiLaurent, OmegaExpr, Window
from ehrhart_mckay.components.series import PowerSeries
from ehrhart_mckay.core import lie_data
from ehrhart_mckay.core.polytope_count import build_constraints
from ehrhart_mckay.core.series_core import geometric_expand
from ehrhart_mckay.errors import SeriesDomainError, TruncationError, WindowOverflowError
from ehrhart_mckay.utils.logger import log


def _check_certified(expr: MultiLaurent, var):
    name = expr.variables[expr.index(var)]
    if name in expr.uncertain:
        log("Omega", f"Refusing to eliminate {name}: window cut terms that may carry its zero power", level="ERROR")
        raise WindowOverflowError(f"Window too narrow for a lossless elimination of {name}")


def omega_eq(expr: MultiLaurent, var) -> MultiLaurent:
    """Keeps the terms free of `var` and drops the variable."""
    _check_certified(expr, var)
    return expr.eliminate(var, lambda e: e == 0)


def omega_geq(expr: MultiLaurent, var) -> MultiLaurent:
    """Keeps the terms with a nonnegative power of `var`, then sets it to 1."""
    _check_certified(expr, var)
    return expr.eliminate(var, lambda e: e >= 0)


def omega_eq_via_geq(expr: MultiLaurent, var) -> MultiLaurent:
    """Omega_= F(l) = Omega_>= F(l) + Omega_>= F(1/l) - F(1)."""
    _check_certified(expr, var)
    at_one = expr.eliminate(var, lambda e: True)
    return omega_geq(expr, var) + omega_geq(expr.invert_variable(var), var) - at_one


def expand(expr: OmegaExpr) -> MultiLaurent:
    """The product of all geometric factors, cut to the expression's window."""
    product = MultiLaurent.one(expr.variables)
    for factor, power in zip(expr.factors, expr.powers):
        product = product.multiply(geometric_expand(factor, expr.window, power), expr.window)
    return product


def to_power_series(expr: MultiLaurent, truncation: int) -> PowerSeries:
    """A series in one remaining one-sided variable as a PowerSeries."""
    if len(expr.variables) != 1:
        raise SeriesDomainError(f"Expected a univariate series, still have {expr.variables}")
    coefficients = [Fraction(0)] * (truncation + 1)
    for (e,), c in expr.terms.items():
        if 0 <= e <= truncation:
            coefficients[e] += c
    return PowerSeries(coefficients, truncation)


def partition_chain(n: int, truncation: int) -> MultiLaurent:
    """Omega_>= of 1/((1 - l1 x)(1 - l2/l1 x)...(1 - ln/l(n-1) x)): partitions into at most n parts."""
    lambdas = tuple(f"l{i}" for i in range(1, n + 1))
    variables = lambdas + ("x",)
    bounds = {name: (-truncation, truncation) for name in lambdas}
    bounds["x"] = (0, truncation)
    factors = []
    for i in range(n):
        exps = [0] * (n + 1)
        exps[i] = 1
        if i:
            exps[i - 1] = -1
        exps[n] = 1
        factors.append(Monomial(variables, tuple(exps)))
    result = expand(OmegaExpr(variables, factors, Window(bounds)))
    for name in lambdas:
        result = omega_geq(result, name)
    return result


def _slack_form_factors(a: AlgebraId, truncation: int):
    """Columns of the constraint matrix as monomials, with the largest pick each
    column can take in a lattice point of the truncation-th dilate."""
    system = build_constraints(a, 1)
    r = a.rank
    marks = lie_data.highest_root_marks(a)
    inverse = lie_data.inverse_cartan_rows(a)
    variables = tuple(f"z{i}" for i in range(1, r + 1)) + ("z",)
    factors, powers = [], []
    for j in range(2 * r + 1):
        column = tuple(int(system.matrix[i, j]) for i in range(r + 1))
        factors.append(Monomial(variables, column))
        if j < r:
            # x_j = sum_i C^{-1}_ji y_i with sum_i c_i y_i <= T
            powers.append(floor(truncation * max(inverse[j][i] / marks[i] for i in range(r))))
        elif j < 2 * r:
            powers.append(truncation // marks[j - r])  # slack k_i = y_i
        else:
            powers.append(truncation)
    return variables, factors, powers


def ehrhart_series_omega(a: AlgebraId, truncation: int, order=None) -> PowerSeries:
    """Ehrhart series of Q_g by successive Omega_= eliminations of z_1..z_r.

    `order` is a permutation of 1..r giving the elimination sequence; each
    z_i is eliminated as soon as every factor carrying it has been multiplied in.
    """
    if truncation < 1:
        raise TruncationError(f"Truncation must be >= 1, got {truncation}")
    r = a.rank
    order = list(order) if order is not None else list(range(1, r + 1))
    if sorted(order) != list(range(1, r + 1)):
        raise SeriesDomainError(f"Elimination order must be a permutation of 1..{r}, got {order}")
    variables, factors, powers = _slack_form_factors(a, truncation)

    # Partial sums of picks of a contributing point stay within these bounds.
    bounds = {}
    for i in range(r):
        edge = sum(abs(f.exponents[i]) * p for f, p in zip(factors, powers))
        bounds[variables[i]] = (-edge, edge)
    bounds["z"] = (0, truncation)
    window = Window(bounds)
    log("Omega", f"{a}: T={truncation}, picks {powers}, window {bounds}", level="DEBUG")

    pending = list(range(len(factors)))
    current = MultiLaurent.one(variables)

    def absorb(index):
        nonlocal current
        pending.remove(index)
        reach = {}
        for name_index, name in enumerate(variables[:-1]):
            if name not in current.variables:
                continue
            lo = sum(min(0, factors[k].exponents[name_index]) * powers[k] for k in pending)
            hi = sum(max(0, factors[k].exponents[name_index]) * powers[k] for k in pending)
            reach[name] = (lo, hi)
        factor = factors[index]
        kept = tuple(name in current.variables for name in variables)
        monomial = Monomial(current.variables, tuple(e for e, keep in zip(factor.exponents, kept) if keep))
        sub_window = Window({name: window.bound(name) for name in current.variables})
        expansion = geometric_expand(monomial, sub_window, powers[index])
        current = current.multiply(expansion, sub_window, reach)

    for position in order:
        name = variables[position - 1]
        for index in [k for k in pending if factors[k].exponents[position - 1] != 0]:
            absorb(index)
        current = omega_eq(current, name)
        log("Omega", f"{a}: eliminated {name}, {len(current)} terms remain", level="DEBUG")
    for index in list(pending):
        absorb(index)
    series = to_power_series(current, truncation)
    try:
        return series.to_integers()
    except SeriesDomainError as exc:
        raise WindowOverflowError(f"{a}: Omega elimination produced a non-integral count: {exc}") from exc
