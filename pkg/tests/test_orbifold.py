import math
import random
from fractions import Fraction

import pytest

from orbichern.errors import DomainError
from orbichern.orbifold import (OrbifoldPair, canonical_k, chi_k,
                                chi_leading_term,
                                chi_trivial_canonical_closed_form,
                                cotangent_chern, cotangent_segre, delta_k,
                                leading_scale, log_asymptotic_coefficient)
from orbichern.ring import (INFINITE_ORDER, abelian_variety, projective_space,
                            surface_with_invariants)

F = Fraction


def plane_pair(*components):
    geom = projective_space(2)
    h = geom.generator("h")
    return OrbifoldPair(geom, [(h * d, m) for d, m in components])


# -- order-k boundary ----------------------------------------------------------

def test_delta_k_drops_at_equal_order():
    terms = delta_k(plane_pair((5, 2)), 2)
    assert terms[0].coefficient == 0 and not terms[0].surviving


def test_delta_k_fractional_survivor():
    terms = delta_k(plane_pair((5, 5)), 2)
    assert terms[0].coefficient == F(3, 5) and terms[0].surviving


def test_delta_k_logarithmic_always_one():
    pair = plane_pair((5, "inf"))
    for k in (1, 7, INFINITE_ORDER):
        assert delta_k(pair, k)[0].coefficient == 1


def test_delta_infinite_order_keeps_only_log_part():
    pair = plane_pair((1, 2), (2, "inf"), (3, 9))
    terms = delta_k(pair, INFINITE_ORDER)
    assert [t.coefficient for t in terms] == [0, 1, 0]


# -- cotangent classes ---------------------------------------------------------

def test_cotangent_chern_no_boundary():
    geom = projective_space(2)
    h = geom.generator("h")
    pair = OrbifoldPair(geom, [])
    assert cotangent_chern(pair, 1) == 1 - 3 * h + 3 * h * h


def test_cotangent_chern_abelian_log():
    geom = abelian_variety(2, selfint=6)
    d = geom.generator("D")
    pair = OrbifoldPair(geom, [(d, "inf")])
    c = cotangent_chern(pair, 1)
    assert c == (1 - d).inverse()
    assert c == 1 + d + d * d
    # cross-check: its inverse is the stated log Segre class 1 - D
    assert c.inverse() == 1 - d


def test_cotangent_chern_plane_orbifold():
    # oracle: assemble the same Whitney product by hand from ring primitives
    d, a = 12, 107
    geom = projective_space(2)
    h = geom.generator("h")
    pair = OrbifoldPair(geom, [(h * d, a)])
    expected = ((1 - 3 * h + 3 * h * h)
                * (1 - h * F(d, a)) * (1 - h * d).inverse())
    assert cotangent_chern(pair, 1) == expected


def test_cotangent_segre_abelian_log_components():
    geom = abelian_variety(2, selfint=6)
    d = geom.generator("D")
    s = cotangent_segre(OrbifoldPair(geom, [(d, "inf")]), 1)
    assert s == 1 - d
    assert s.component(1) == -d and s.component(2).is_zero()


@pytest.mark.parametrize("d,a", [(12, 107), (7, 2), (9, 5), (4, 9)])
def test_cotangent_segre_plane_hand_expansion(d, a):
    # oracle: expand (1+3h+6h^2)(1-dh)(1+(d/a)h+(d/a)^2 h^2) by hand
    geom = projective_space(2)
    h = geom.generator("h")
    s = cotangent_segre(OrbifoldPair(geom, [(h * d, a)]), 1)
    r = F(d, a)
    assert s.coefficient((1,)) == 3 + r - d
    assert s.coefficient((2,)) == 6 + 3 * (r - d) + r * (r - d)


def test_cotangent_segre_plane_log():
    geom = projective_space(2)
    h = geom.generator("h")
    for d in (1, 3, 5):
        s = cotangent_segre(OrbifoldPair(geom, [(h * d, "inf")]), 1)
        assert s.coefficient((1,)) == 3 - d
        assert s.coefficient((2,)) == 6 - 3 * d


def test_dropout_invariance_multiplicity_one():
    base = plane_pair((5, 3), (2, "inf"))
    padded = base.with_component(base.geometry.generator("h") * 7, 1)
    for k in (1, 2, 3):
        assert cotangent_segre(base, k) == cotangent_segre(padded, k)
        assert chi_k(base, k) == chi_k(padded, k)
        assert canonical_k(base, k)[0] == canonical_k(padded, k)[0]


def test_stabilization_at_max_finite_multiplicity():
    pair = plane_pair((2, 4), (3, F(7, 2)), (1, "inf"))
    log_only = pair.logarithmic_part()
    j_star = pair.stabilization_order()
    assert j_star == 4
    assert cotangent_segre(pair, 3) != cotangent_segre(log_only, 1)
    for k in (4, 5, 9):
        assert cotangent_segre(pair, k) == cotangent_segre(log_only, 1)


def test_duality_on_projective_spaces():
    for n in (1, 2, 3, 4):
        geom = projective_space(n)
        pair = OrbifoldPair(geom, [])
        c1 = cotangent_chern(pair, 1).component(1)
        assert c1 == geom.generator("h") * (-(n + 1))


# -- canonical classes ---------------------------------------------------------

def test_canonical_k_plane_example():
    cls, positive = canonical_k(plane_pair((12, 107)), 2)
    assert cls.coefficient((1,)) == F(939, 107)  # -3 + 12*(105/107)
    assert positive is True


def test_canonical_k_empty_order2():
    cls, positive = canonical_k(plane_pair((5, 2)), 2)
    assert cls.coefficient((1,)) == -3
    assert positive is False


def test_canonical_k_abelian_half():
    geom = abelian_variety(2, selfint=6)
    d = geom.generator("D")
    cls, positive = canonical_k(OrbifoldPair(geom, [(d, 2)]), 1)
    assert cls == d * F(1, 2)
    assert positive is True


def test_canonical_k_surface_undecidable():
    geom = surface_with_invariants(c2=24, divisors=["D"], dd=[[6]])
    _, positive = canonical_k(OrbifoldPair(geom, [(geom.generator("D"), 3)]), 1)
    assert positive is None


# -- chi -----------------------------------------------------------------------

def lines_chi_formula(c, d):
    # independent closed form for c multiplicity-2 components of degree d
    return 6 - F(3, 2) * c * d + F(c * (c - 3), 8) * d * d


def smooth_curve_chi2_formula(d, a):
    # independent closed form for one degree-d component of multiplicity a
    return F((48 - 27 * d + 2 * d * d) * a * a - 12 * d * (d - 3) * a
             + 12 * d * d, 4 * a * a)


def test_chi_1_eleven_lines():
    pair = plane_pair(*[(1, 2)] * 11)
    assert chi_k(pair, 1) == F(1, 2)
    assert lines_chi_formula(11, 1) == F(1, 2)


def test_chi_2_order_two_threshold_values():
    assert chi_k(plane_pair((12, 107)), 2) == F(111, 11449)
    assert smooth_curve_chi2_formula(12, 107) == F(111, 11449)
    assert chi_k(plane_pair((12, 106)), 2) == F(-204, 11236)
    assert smooth_curve_chi2_formula(12, 106) == F(-204, 11236)


def test_chi_2_closed_form_sweep():
    for d in range(4, 41):
        a0 = 2 * d // (d - 3) + 1
        for a in range(a0, a0 + 6):
            assert chi_k(plane_pair((d, a)), 2) == smooth_curve_chi2_formula(d, a)


def test_chi_1_lines_formula_sweep():
    for c in range(1, 13):
        for d in range(1, 8):
            pair = plane_pair(*[(d, 2)] * c)
            assert chi_k(pair, 1) == lines_chi_formula(c, d)


def test_chi_1_matches_chern_number():
    # chi_1 on a surface equals c1^2 - c2 of the orbifold cotangent bundle
    for pair in (plane_pair((7, 2)), plane_pair((5, 3), (2, "inf"))):
        c = cotangent_chern(pair, 1)
        chern_number = (c.component(1) * c.component(1)).integrate() \
            - c.component(2).integrate()
        assert chi_k(pair, 1) == chern_number


def test_chi_k_mixed_multiplicities_matches_direct_sum():
    # oracle: enumerate q in N^k with |q| = n directly from the Segre classes
    pair = plane_pair((2, 4), (1, "inf"), (3, F(5, 2)))
    k = 5
    segres = [cotangent_segre(pair, j) for j in range(1, k + 1)]
    total = F(0)
    def rec(j, remaining, acc):
        nonlocal total
        if j == k:
            total += (acc * segres[j - 1].component(remaining)).integrate() \
                * F(1, k ** remaining)
            return
        for q in range(remaining + 1):
            rec(j + 1, remaining - q,
                acc * segres[j - 1].component(q) * F(1, j ** q))
    rec(1, 2, pair.geometry.one())
    assert chi_k(pair, k) == total


def test_chi_k_dimension_three_direct_sum():
    # same brute-force oracle in dimension 3
    geom = projective_space(3)
    h = geom.generator("h")
    pair = OrbifoldPair(geom, [(h * 2, 3), (h, "inf")])
    k = 3
    segres = [cotangent_segre(pair, j) for j in range(1, k + 1)]
    total = F(0)
    def rec(j, remaining, acc):
        nonlocal total
        if j == k:
            total += (acc * segres[j - 1].component(remaining)).integrate() \
                * F(1, k ** remaining)
            return
        for q in range(remaining + 1):
            rec(j + 1, remaining - q,
                acc * segres[j - 1].component(q) * F(1, j ** q))
    rec(1, 3, geom.one())
    assert chi_k(pair, k) == -total  # (-1)^n with n = 3


def test_chi_exactness_threshold():
    pair = plane_pair((5, "inf"))
    with pytest.raises(DomainError):
        chi_k(pair, 10_001)
    value = chi_k(pair, 10_001, numeric=True)
    assert isinstance(value, float)


def test_chi_numeric_matches_exact_on_small_orders():
    pair = plane_pair((4, 3), (2, "inf"))
    for k in (1, 2, 5, 8):
        exact = chi_k(pair, k)
        approx = chi_k(pair, k, numeric=True)
        assert math.isclose(float(exact), approx, rel_tol=1e-12)


def test_chi_coordinatewise_concavity_vertex_floor():
    # chi_1 is concave in each degree separately (the quadratic form is
    # (1/4)J - (3/4)I), so its minimum over the box [d_min, d_max]^c sits at
    # a vertex: some coordinates at d_min, the rest at d_max.  The stronger
    # constant-vector floor fails for c >= 4, where the form has a positive
    # eigenvalue along the diagonal; see test below.
    rng = random.Random(987)
    for _ in range(300):
        c = rng.randint(2, 8)
        degrees = [rng.randint(1, 10) for _ in range(c)]
        lo, hi = min(degrees), max(degrees)
        mixed = chi_k(plane_pair(*[(d, 2) for d in degrees]), 1)
        floor_value = min(
            chi_k(plane_pair(*([(lo, 2)] * split + [(hi, 2)] * (c - split))), 1)
            for split in range(c + 1))
        assert mixed >= floor_value


def test_chi_constant_vector_floor_is_not_a_valid_bound():
    # Mixed-degree vertices can undercut every constant-degree value, so the
    # equal-degree reduction is not a pointwise lower bound; the thresholds
    # computed from equal degrees stand on their own.
    mixed = chi_k(plane_pair(*[(d, 2) for d in (9, 9, 1, 1, 1, 1)]), 1)
    assert mixed == F(-115, 4)
    constant_floor = min(chi_k(plane_pair(*[(delta, 2)] * 6), 1)
                         for delta in range(1, 10))
    assert constant_floor == -3 and mixed < constant_floor


# -- leading term and asymptotics ----------------------------------------------

def test_leading_scale_values():
    assert leading_scale(2, 1) == F(1, 6)
    assert leading_scale(2, 2) == F(1, 480)
    assert leading_scale(1, 1) == F(1, 1)


def test_chi_leading_term_report():
    report = chi_leading_term(plane_pair((12, 107)), 2)
    assert report.chi == F(111, 11449)
    assert report.leading_scale == F(1, 480)
    assert report.canonical_positive is True


def test_log_asymptotic_coefficient_plane():
    assert log_asymptotic_coefficient(plane_pair((1, "inf"))) == 2
    assert log_asymptotic_coefficient(plane_pair((3, "inf"))) == 0


def test_log_asymptotic_coefficient_abelian():
    geom = abelian_variety(2, selfint=6)
    pair = OrbifoldPair(geom, [(geom.generator("D"), "inf")])
    assert log_asymptotic_coefficient(pair) == 3


def test_log_asymptotic_ratio_converges():
    # chi_k against (d-3)^2 (ln k)^2 / 2 for one log quintic: the ratio climbs
    # and sits within 20 percent of 1 by k = 10^6
    pair = plane_pair((5, "inf"))
    ratios = []
    for k in (10 ** 2, 10 ** 4, 10 ** 6):
        ratios.append(chi_k(pair, k, numeric=True) / (2 * math.log(k) ** 2))
    assert ratios[0] < ratios[1] < ratios[2]
    assert abs(ratios[2] - 1) < 0.2


# -- trivial-canonical closed form ----------------------------------------------

def abelian_surface_pair(selfint, m):
    geom = abelian_variety(2, selfint=selfint)
    return OrbifoldPair(geom, [(geom.generator("D"), m)])


def test_closed_form_known_values():
    assert chi_trivial_canonical_closed_form(abelian_surface_pair(6, 5), 5) \
        == F(23, 20)
    assert chi_trivial_canonical_closed_form(abelian_surface_pair(6, 4), 4) == 0
    geom = surface_with_invariants(c2=24, divisors=["D"], dd=[[6]])
    empty = OrbifoldPair(geom, [])
    assert chi_trivial_canonical_closed_form(empty, 2) == -30  # -(5/4)*24


def test_closed_form_agrees_with_chi_on_random_pairs():
    rng = random.Random(2718)
    for trial in range(50):
        r = rng.randint(1, 3)
        if trial % 2 == 0:
            dd = [[0] * r for _ in range(r)]
            for i in range(r):
                for j in range(i, r):
                    dd[i][j] = dd[j][i] = rng.randint(-2, 6)
            geom = surface_with_invariants(
                c2=rng.randint(0, 24),
                divisors=["D%d" % (i + 1) for i in range(r)], dd=dd)
            divisors = [geom.generator("D%d" % (i + 1)) for i in range(r)]
        else:
            pairing = [[0] * r for _ in range(r)]
            for i in range(r):
                for j in range(i, r):
                    pairing[i][j] = pairing[j][i] = rng.randint(0, 6)
            geom = abelian_variety(2, names=["D%d" % (i + 1) for i in range(r)],
                                   pairing=pairing)
            divisors = [geom.generator("D%d" % (i + 1)) for i in range(r)]
        mults = [rng.randint(2, 7) for _ in range(r)]
        pair = OrbifoldPair(geom, list(zip(divisors, mults)))
        kmax = max(mults)
        for k in range(kmax, kmax + 4):
            assert chi_trivial_canonical_closed_form(pair, k) == chi_k(pair, k)


def test_closed_form_handles_log_components_exactly():
    geom = abelian_variety(2, names=["D1", "D2"], pairing=[[0, 1], [1, 0]])
    pair = OrbifoldPair(geom, [(geom.generator("D1"), "inf"),
                               (geom.generator("D2"), 2)])
    for k in (2, 3, 6):
        assert chi_trivial_canonical_closed_form(pair, k) == chi_k(pair, k)


def test_closed_form_preconditions():
    with pytest.raises(DomainError):  # k below the largest multiplicity
        chi_trivial_canonical_closed_form(abelian_surface_pair(6, 5), 4)
    with pytest.raises(DomainError):  # fractional multiplicity
        chi_trivial_canonical_closed_form(abelian_surface_pair(6, F(5, 2)), 9)
    geom = surface_with_invariants(c2=24, divisors=["D"], kk=2, kd=[1], dd=[[6]])
    pair = OrbifoldPair(geom, [(geom.generator("D"), 3)])
    with pytest.raises(DomainError):  # canonical class pairs nontrivially
        chi_trivial_canonical_closed_form(pair, 5)
