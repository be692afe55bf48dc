import math
from fractions import Fraction

import pytest

from orbichern.errors import DomainError
from orbichern.orbifold import canonical_k, chi_k
from orbichern.thresholds import (k3_coefficient, k3_ratio_bound,
                                  line_arrangement_pair,
                                  line_arrangement_threshold,
                                  min_multiplicity_for_degree,
                                  smooth_curve_pair, table1,
                                  two_component_m2_predicate)

F = Fraction

# the sixteen reference cells: degree range -> minimal order
TABLE_CELLS = [
    (12, 12, 107), (13, 13, 44), (14, 14, 29), (15, 15, 22), (16, 16, 19),
    (17, 17, 16), (18, 18, 15), (19, 19, 13), (20, 21, 12), (22, 23, 11),
    (24, 25, 10), (26, 30, 9), (31, 38, 8), (39, 60, 7), (61, 245, 6),
    (246, None, 5)]


def predicate(d, a):
    return (canonical_k(smooth_curve_pair(d, a), 2)[1]
            and chi_k(smooth_curve_pair(d, a), 2) > 0)


@pytest.mark.parametrize("d,expected", [(12, 107), (16, 19), (246, 5)])
def test_min_multiplicity_reference_values(d, expected):
    rec = min_multiplicity_for_degree(d)
    assert rec.minimal_value == expected


def test_min_multiplicity_witnesses():
    rec = min_multiplicity_for_degree(12)
    assert rec.chi_at_min == F(111, 11449)
    assert rec.chi_below_min == F(-51, 2809)


def test_min_multiplicity_is_minimal():
    for d in (12, 13, 19, 40, 246):
        rec = min_multiplicity_for_degree(d)
        assert predicate(d, rec.minimal_value)
        assert not predicate(d, rec.minimal_value - 1)
        assert rec.chi_at_min > 0
        if rec.minimal_value - 1 >= 2:
            assert rec.chi_below_min == chi_k(
                smooth_curve_pair(d, rec.minimal_value - 1), 2)


def test_min_multiplicity_no_solution_below_twelve():
    for d in range(4, 12):
        assert min_multiplicity_for_degree(d) is None


def test_min_multiplicity_domain_error():
    with pytest.raises(DomainError):
        min_multiplicity_for_degree(3)


def test_table1_matches_reference_cells():
    rows = table1()
    assert [(r.d_lo, r.d_hi, r.a_min) for r in rows] == TABLE_CELLS


def test_table1_row_lookups():
    rows = {r.d_lo: r for r in table1()}
    assert rows[13].a_min == 44
    assert rows[20].a_min == 12 and rows[20].d_hi == 21
    assert rows[61].a_min == 6 and rows[61].d_hi == 245


def test_table1_parallel_is_scheduling_independent():
    assert table1(workers=4) == table1()


@pytest.mark.parametrize("c,expected", [(4, 11), (5, 6), (6, 4), (7, 3),
                                        (8, 2), (11, 1)])
def test_line_arrangement_reference_thresholds(c, expected):
    assert line_arrangement_threshold(c).minimal_value == expected


def test_line_arrangement_minimality_witnesses():
    for c in range(4, 15):
        rec = line_arrangement_threshold(c)
        d = rec.minimal_value
        assert c * d > 6 and rec.chi_at_min > 0
        assert rec.chi_at_min == chi_k(line_arrangement_pair([d] * c), 1)
        if d >= 2:
            below_ok = (c * (d - 1) > 6 and rec.chi_below_min > 0)
            assert not below_ok


def test_line_arrangement_no_solution_for_few_components():
    for c in (1, 2, 3):
        assert line_arrangement_threshold(c) is None


def test_line_arrangement_threshold_non_increasing():
    values = [line_arrangement_threshold(c).minimal_value
              for c in range(4, 31)]
    assert all(a >= b for a, b in zip(values, values[1:]))


def test_k3_coefficient_values():
    assert k3_coefficient(2) == F(-1, 4)
    assert k3_coefficient(4) == 0
    assert k3_coefficient(5) == F(23, 120)


def test_k3_coefficient_brute_force_pairs():
    # independent oracle: enumerate the pairs 2 <= j1 < j2 <= m literally
    for m in range(2, 12):
        pairs = sum(F(1, j1 * j2)
                    for j1 in range(2, m + 1) for j2 in range(j1 + 1, m + 1))
        assert k3_coefficient(m) == pairs - F(m - 1, 2 * m)


def test_k3_first_positive_at_five():
    assert [m for m in range(2, 10) if k3_coefficient(m) > 0][0] == 5


def test_k3_ratio_bound_values():
    assert math.isclose(k3_ratio_bound(5), math.pi ** 2 * 20 / 23, rel_tol=1e-15)
    assert abs(k3_ratio_bound(5) - 8.58226469660) < 1e-9
    assert k3_ratio_bound(6) < k3_ratio_bound(5)


def test_k3_ratio_bound_domain_error():
    with pytest.raises(DomainError):
        k3_ratio_bound(4)  # coefficient is exactly zero there


def test_k3_ratio_bounded_by_ten():
    assert all(k3_ratio_bound(m) <= 10 for m in range(5, 201))


def test_two_component_predicate_boundary_and_failures():
    # int D^2 counts cross terms twice: [[1,2],[2,1]] gives 6 - 6 = 0 (true
    # at the boundary), [[1,1],[1,1]] gives 4 - 6 < 0 (false)
    assert two_component_m2_predicate([[1, 2], [2, 1]], 0) is True
    assert two_component_m2_predicate([[1, 1], [1, 1]], 0) is False
    assert two_component_m2_predicate([[10, 10], [10, 10]], 24) is False
