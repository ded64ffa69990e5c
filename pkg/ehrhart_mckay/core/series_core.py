"""Series operations shared by every generating-function computation."""
from fractions import Fraction

from ehrhart_mckay.components.laurent import Monomial, MultiLaurent, Window
from ehrhart_mckay.components.series import CycloElement, PowerSeries
from ehrhart_mckay.errors import ProjectionError, SeriesDomainError, TruncationError
from ehrhart_mckay.utils.logger import log


def geometric_expand(monomial: Monomial, window: Window, max_power: int | None = None) -> MultiLaurent:
    """sum_{k>=0} monomial^k, cut to the window (and to k <= max_power if given).

    The number of terms is set by the tightest bound in the direction each
    exponent grows. A cut imposed only by a two-sided variable marks that
    variable uncertain on the result.
    """
    if monomial.is_constant():
        raise SeriesDomainError("1/(1 - m) with m free of every variable is not a series")
    limits: dict[str, int] = {}
    for name, e in zip(monomial.variables, monomial.exponents):
        if e == 0:
            continue
        lo, hi = window.bound(name)
        edge = hi if e > 0 else lo
        if edge is not None:
            limits[name] = edge // e
    if not limits and max_power is None:
        raise SeriesDomainError(
            f"1/(1 - {monomial}) has no bounded direction in {window}; give the variable a window bound")
    k_max = min(list(limits.values()) + ([max_power] if max_power is not None else []))
    uncertain = set()
    certified = (max_power is not None and max_power <= k_max) or any(
        window.is_one_sided(name) and limit == k_max for name, limit in limits.items())
    if not certified:
        uncertain = {name for name, limit in limits.items() if limit == k_max}
    terms = {}
    for k in range(k_max + 1):
        terms[tuple(k * e for e in monomial.exponents)] = monomial.coefficient ** k
    return MultiLaurent(monomial.variables, terms, uncertain)


def cyclo_series_product(n: int, i: int, truncation: int) -> PowerSeries:
    """1 / ((1 - z)(1 - w^i z)(1 - w^{2i} z)...(1 - w^{(N-1)i} z)) with w = exp(2 pi i/N).

    Coefficients are CycloElements of modulus N.
    """
    if not 0 <= i < n:
        raise SeriesDomainError(f"Need 0 <= i < N, got i={i}, N={n}")
    zero = CycloElement.zero(n)
    product = PowerSeries.one(truncation, zero)
    for k in range(n):
        # multiply by 1/(1 - w^{ki} z) through its recurrence b_m = f_m + w^{ki} b_{m-1}
        root = CycloElement.monomial(n, k * i)
        coefficients = list(product.coefficients)
        for m in range(1, truncation + 1):
            coefficients[m] = coefficients[m] + root * coefficients[m - 1]
        product = PowerSeries(coefficients, truncation, zero)
    return product


def _project_average(total: PowerSeries, count: int, label: str) -> PowerSeries:
    coefficients = []
    for q, element in enumerate(total):
        try:
            value = element.rational_value() / count
        except ProjectionError:
            log("SeriesCore", f"{label}: z^{q} keeps a root-of-unity component: {element}", level="ERROR")
            raise
        if value.denominator != 1 or value < 0:
            log("SeriesCore", f"{label}: z^{q} projects to {value}", level="ERROR")
            raise ProjectionError(f"{label}: coefficient of z^{q} is {value}, not a nonnegative integer")
        coefficients.append(int(value))
    return PowerSeries(coefficients, total.truncation)


def phi_su_series(n: int, truncation: int) -> PowerSeries:
    """(1/N) sum_{i<N} 1/((1-z)(1-w^i z)...(1-w^{(N-1)i} z)): Ehrhart series of Q_{su(N)}."""
    if n < 1:
        raise SeriesDomainError(f"su(N) needs N >= 1, got {n}")
    if truncation < 0:
        raise TruncationError(f"Truncation must be >= 0, got {truncation}")
    total = PowerSeries([], truncation, CycloElement.zero(n))
    for i in range(n):
        total = total + cyclo_series_product(n, i, truncation)
    return _project_average(total, n, f"su({n})")


def _inverse_product(truncation: int, factors: list[tuple[int, int, int]]) -> PowerSeries:
    """1 / prod (1 + sign z^step)^power for (sign, step, power) triples."""
    denominator = PowerSeries.one(truncation)
    for sign, step, power in factors:
        base = PowerSeries([1] + [0] * (step - 1) + [sign], truncation)
        for _ in range(power):
            denominator = denominator * base
    return PowerSeries.one(truncation) / denominator


def phi_dic_even_series(n: int, truncation: int) -> PowerSeries:
    """Closed form for so(2(N+2)), N even:

    1/4 ( 1/((1-z)^4 (1-z^2)^{N-1})
        + 2/((1-z^2)^2 (1-z^2)^{N/2} (1+z^2)^{N/2-1})
        + 1/((1-z^2)^2 (1-z^2)^{N-1}) )
    """
    if n < 2 or n % 2:
        raise SeriesDomainError(f"The dicyclic closed form needs N even and N >= 2, got {n}")
    if truncation < 0:
        raise TruncationError(f"Truncation must be >= 0, got {truncation}")
    half = n // 2
    first = _inverse_product(truncation, [(-1, 1, 4), (-1, 2, n - 1)])
    middle = _inverse_product(truncation, [(-1, 2, 2), (-1, 2, half), (1, 2, half - 1)])
    last = _inverse_product(truncation, [(-1, 2, 2), (-1, 2, n - 1)])
    total = first + middle * 2 + last
    coefficients = []
    for q, c in enumerate(total):
        value = Fraction(c, 4)
        if value.denominator != 1 or value < 0:
            log("SeriesCore", f"Dic_{n}: z^{q} averages to {value}", level="ERROR")
            raise ProjectionError(f"Dic_{n}: coefficient of z^{q} is {value}, not a nonnegative integer")
        coefficients.append(int(value))
    return PowerSeries(coefficients, truncation)
