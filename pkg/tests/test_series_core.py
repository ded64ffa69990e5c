import random
from fractions import Fraction

import pytest

from ehrhart_mckay.components.algebra import AlgebraId
from ehrhart_mckay.components.laurent import Monomial, Window
from ehrhart_mckay.components.series import CycloElement, PowerSeries
from ehrhart_mckay.core.polytope_count import ehrhart_series_bruteforce
from ehrhart_mckay.core.series_core import (cyclo_series_product, geometric_expand, phi_dic_even_series,
                                            phi_su_series)
from ehrhart_mckay.errors import ProjectionError, SeriesDomainError

rng = random.Random(20240601)


def random_series(truncation: int) -> PowerSeries:
    return PowerSeries([rng.randint(-9, 9) for _ in range(truncation + 1)], truncation)


def test_ring_laws_under_truncation():
    for _ in range(25):
        t = rng.randint(0, 8)
        f, g, h = random_series(t), random_series(t), random_series(t)
        assert (f * g) * h == f * (g * h)
        assert f * PowerSeries.one(t) == f
        assert f * (g + h) == f * g + f * h
        assert f * g == g * f


def test_product_truncates_to_shorter_series():
    product = PowerSeries([1, 1, 1, 1, 1]) * PowerSeries([1, 1])
    assert product.truncation == 1
    assert list(product) == [1, 2]


def test_unit_division_and_inverse():
    one_minus_z = PowerSeries([1, -1], 6)
    assert one_minus_z.inverse() == PowerSeries.geometric(6)
    assert PowerSeries.one(6) / PowerSeries([-1, 0, 1], 6) == PowerSeries([-1, 0, -1, 0, -1, 0, -1])
    with pytest.raises(SeriesDomainError):
        PowerSeries.one(4) / PowerSeries([2, 1], 4)


def test_coefficient_access_is_bounded_by_truncation():
    series = PowerSeries.geometric(3)
    assert series[3] == 1
    with pytest.raises(IndexError):
        series[4]
    with pytest.raises(SeriesDomainError):
        series.truncate(5)


def test_geometric_expand_in_one_counting_variable():
    series = geometric_expand(Monomial(("z",), (1,)), Window({"z": (0, 3)}))
    assert series.terms == {(0,): 1, (1,): 1, (2,): 1, (3,): 1}
    assert not series.uncertain


def test_geometric_expand_mixed_monomial_stops_at_counting_window():
    series = geometric_expand(Monomial(("l", "z"), (2, 2)), Window({"z": (0, 4)}))
    assert series.terms == {(0, 0): 1, (2, 2): 1, (4, 4): 1}
    assert not series.uncertain


def test_pure_lambda_factor_needs_a_bound():
    inverse_lambda = Monomial(("l",), (-1,))
    with pytest.raises(SeriesDomainError):
        geometric_expand(inverse_lambda, Window({}))
    series = geometric_expand(inverse_lambda, Window({"l": (-5, 0)}))
    assert series.terms == {(-k,): 1 for k in range(6)}
    assert series.uncertain == {"l"}
    capped = geometric_expand(inverse_lambda, Window({"l": (-5, 0)}), max_power=3)
    assert len(capped) == 4
    assert not capped.uncertain


def test_constant_monomial_is_rejected():
    with pytest.raises(SeriesDomainError):
        geometric_expand(Monomial(("l", "z"), (0, 0)), Window({"z": (0, 3)}))


def test_cyclotomic_arithmetic():
    w = CycloElement.monomial(5, 1)
    power = CycloElement.one(5)
    for _ in range(5):
        power = power * w
    assert power == 1
    for m in range(-6, 12):
        assert CycloElement.monomial(5, m).root_sum() == (5 if m % 5 == 0 else 0)
        total = CycloElement.zero(5)
        for i in range(5):
            total = total + CycloElement.monomial(5, m).substitute_power(i)
        assert total.rational_value() == (5 if m % 5 == 0 else 0)


def test_primitive_root_projection():
    assert (CycloElement.one(3) + CycloElement.monomial(3, 1) + CycloElement.monomial(3, 2)).rational_value() == 0
    assert CycloElement(4, (3, 0, 1)).rational_value() == 2  # 3 + i^2
    with pytest.raises(ProjectionError):
        CycloElement.monomial(3, 1).rational_value()


def test_cyclo_product_su2():
    series = cyclo_series_product(2, 1, 2)
    assert [c.rational_value() for c in series] == [1, 0, 1]


def test_cyclo_product_trivial_modulus():
    assert all(c == 1 for c in cyclo_series_product(1, 0, 3))


def test_cyclo_product_matches_convolution():
    zero = CycloElement.zero(3)
    oracle = PowerSeries.one(3, zero)
    for k in range(3):
        oracle = oracle * PowerSeries.geometric(3, 1, CycloElement.monomial(3, k), zero)
    assert cyclo_series_product(3, 1, 3) == oracle


def test_cyclo_product_rejects_bad_index():
    with pytest.raises(SeriesDomainError):
        cyclo_series_product(3, 3, 4)


def test_phi_su_small_cases():
    assert list(phi_su_series(2, 8)) == [1, 1, 2, 2, 3, 3, 4, 4, 5]
    assert list(phi_su_series(3, 2)) == [1, 1, 2]
    assert list(phi_su_series(1, 4)) == [1, 1, 1, 1, 1]


def test_phi_su_closed_forms():
    t = 12

    def z(k):  # 1 - z^k
        return PowerSeries([1] + [0] * (k - 1) + [-1], t)

    one = PowerSeries.one(t)
    su3 = (one / (z(1) * z(1) * z(1)) + one / z(3) * 2) / Fraction(3)
    assert phi_su_series(3, t) == su3
    su4 = (one / (z(1) * z(1) * z(1) * z(1)) + one / z(4) * 2 + one / (z(2) * z(2))) / Fraction(4)
    assert phi_su_series(4, t) == su4


def test_phi_su_matches_brute_force():
    assert phi_su_series(4, 10) == ehrhart_series_bruteforce(AlgebraId.from_su(4), 10)


def test_phi_su_level_rank_symmetry():
    series = {n: phi_su_series(n, 10) for n in range(1, 11)}
    for n in range(1, 11):
        for q in range(1, 11):
            assert series[n][q] == series[q][n]


def test_phi_su_rejects_empty_group():
    with pytest.raises(SeriesDomainError):
        phi_su_series(0, 4)


def test_phi_dic_even():
    assert list(phi_dic_even_series(2, 2)) == [1, 1, 5]
    assert phi_dic_even_series(2, 0)[0] == 1
    assert phi_dic_even_series(4, 10) == ehrhart_series_bruteforce(AlgebraId.from_so(12), 10)


def test_phi_dic_rejects_odd_n():
    with pytest.raises(SeriesDomainError):
        phi_dic_even_series(3, 5)
