from fractions import Fraction

import pytest

from residual_closeness.closed_forms import (
    FAMILIES,
    REGIMES,
    UncoveredRegimeError,
    closeness_cycle,
    closeness_path,
    delta_link,
    family_of,
    geometric_identity,
    residual_closed_form_h2,
    theorem5_delta,
)
from residual_closeness.dyadic import DyadicValue

from .conftest import circulant_edges, reference_closeness


def F(x):
    return DyadicValue.coerce(Fraction(x))


class TestCycleAndPath:
    @pytest.mark.parametrize("n, expected", [(4, "5"), (3, "3"), (5, "7.5")])
    def test_cycle(self, n, expected):
        assert closeness_cycle(n) == F(expected)

    @pytest.mark.parametrize("n", range(3, 16))
    def test_cycle_against_reference(self, n):
        assert closeness_cycle(n).to_fraction() == reference_closeness(n, circulant_edges(n, [1]))

    @pytest.mark.parametrize("n, expected", [(2, "1"), (4, "4.25"), (1, "0")])
    def test_path(self, n, expected):
        assert closeness_path(n) == F(expected)

    @pytest.mark.parametrize("n", range(1, 16))
    def test_path_against_reference(self, n):
        edges = [(i, i + 1) for i in range(1, n)]
        assert closeness_path(n).to_fraction() == reference_closeness(n, edges)

    def test_domains(self):
        with pytest.raises(ValueError):
            closeness_cycle(2)
        with pytest.raises(ValueError):
            closeness_path(0)


class TestGeometricIdentity:
    @pytest.mark.parametrize("k, expected", [(3, "0.75"), (4, "1.25")])
    def test_small(self, k, expected):
        assert geometric_identity(k) == (F(expected), F(expected))

    @pytest.mark.parametrize("k", [10, 33, 64])
    def test_against_fraction_sum(self, k):
        lhs, rhs = geometric_identity(k)
        oracle = sum(Fraction(j, 2 ** (j - 1)) for j in range(3, k + 1))
        assert lhs.to_fraction() == oracle
        assert lhs == rhs

    def test_domain(self):
        with pytest.raises(ValueError):
            geometric_identity(2)


class TestDeltaLink:
    @pytest.mark.parametrize(
        "k, n, expected, source",
        [
            (2, 4, "0.75", "T1_even"),
            (4, 9, "1", "T2"),
            (3, 8, "1.25", "T3_4k"),
            (3, 9, "1.5", "T6_4p1"),
            (5, 11, "0.75", "T7_small_075"),
            (7, 21, "1.5", "T8"),
            (3, 4, "0.5", "T3_4k"),
            (3, 6, "0.75", "T3_4k2"),
            (3, 10, "1.5", "T3_4k2"),
            (5, 14, "1", "T4"),
            (5, 10, "0.75", "T4_small_075"),
            (5, 12, "0.75", "T4_small_075"),
            (5, 6, "0.5", "T4_small_05"),
            (5, 8, "0.5", "T4_small_05"),
            (3, 5, "0.5", "T6_small_H35"),
            (3, 7, "1", "T6_small_H37"),
            (3, 11, "1.75", "T6_4p3"),
            (5, 7, "0.5", "T7_small_05"),
            (5, 9, "0.5", "T7_small_05"),
            (5, 13, "1", "T7_small_1"),
            (5, 15, "1.5", "T7"),
            (5, 21, "1.5", "T7"),
            (4, 5, "0.5", "T2"),
            (4, 8, "0.5", "T2"),
            (4, 13, "1.375", "T2"),
        ],
    )
    def test_anchors(self, k, n, expected, source):
        res = delta_link(k, n)
        assert res.delta == F(expected)
        assert res.source == source

    def test_theorem_param(self):
        assert delta_link(7, 21).theorem_param == 2
        assert delta_link(4, 9).theorem_param == 2
        assert delta_link(5, 11).theorem_param is None

    @pytest.mark.parametrize("k, n", [(2, 2), (5, 5), (1, 4), (9, 3)])
    def test_uncovered(self, k, n):
        with pytest.raises(UncoveredRegimeError):
            delta_link(k, n)

    def test_total_within_domain(self):
        seen_regimes, seen_families = set(), set()
        for k in range(2, 200):
            for n in range(k + 1, 201):
                res = delta_link(k, n)
                assert res.source in REGIMES
                assert 0 < res.delta < 4
                seen_regimes.add(res.source)
                seen_families.add(family_of(k, n))
        assert seen_regimes == set(REGIMES)
        assert seen_families == set(FAMILIES)

    @pytest.mark.parametrize("k", range(2, 14))
    def test_non_decreasing_in_n(self, k):
        for parity in (0, 1):
            ns = [n for n in range(k + 1, 200) if n % 2 == parity]
            vals = [delta_link(k, n).delta for n in ns]
            assert vals == sorted(vals)

    @pytest.mark.parametrize(
        "family_ks, bound",
        [((2,), 4), ((4, 6, 8, 10), 2), ((5, 7, 9), 2), ((3,), 3)],
    )
    def test_even_order_bounds(self, family_ks, bound):
        for k in family_ks:
            for n in range(k + 1, 400):
                if n % 2 == 0 or k % 2 == 0:
                    assert delta_link(k, n).delta < bound

    def test_odd_order_bound(self):
        for k in (3, 5, 7, 9, 11):
            for n in range(k + 2, 400, 2):
                assert delta_link(k, n).delta < 4

    def test_saturation_parameter_increases_to_bound(self):
        vals = [delta_link(4, 4 * j + 1).delta for j in range(1, 30)]
        assert all(a < b for a, b in zip(vals, vals[1:]))
        assert 2 - vals[-1] < DyadicValue(1, 20)

    @pytest.mark.parametrize("m", range(3, 120))
    def test_h5_even_agrees_with_general_odd_k_formula(self, m):
        assert delta_link(5, 2 * m).delta == theorem5_delta(2, m).delta


class TestResidualH2:
    @pytest.mark.parametrize("n, expected", [(4, "4.25"), (3, "2.5"), (7, "10.03125")])
    def test_values(self, n, expected):
        assert residual_closed_form_h2(n) == F(expected)

    @pytest.mark.parametrize("n", range(3, 65))
    def test_equals_path(self, n):
        assert residual_closed_form_h2(n) == closeness_path(n)

    def test_domain(self):
        with pytest.raises(ValueError):
            residual_closed_form_h2(2)
