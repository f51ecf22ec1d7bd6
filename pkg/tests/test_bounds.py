from fractions import Fraction

import pytest

from packings import (
    DesignParams,
    NotApplicableError,
    best_upper_bound,
    exact_by_theorems,
    exact_dpdn_by_theorem,
    exact_family,
    gen_second_johnson_bound,
    gen_second_johnson_feasible,
    hanani_b,
    horsley_bound_1,
    horsley_bound_2,
    johnson_schonheim,
    second_johnson,
)
from packings.bounds import (
    EXACT_DIRECTED,
    EXACT_THRESHOLD,
    EXACT_WINDOW,
    GEN_SECOND_JOHNSON,
    _least_ell,
    sj_quadratic_feasible,
)
from packings.core import choose


class TestJohnsonSchonheim:
    # hand evaluation: floor(6/3 * floor(5/2)) = 4
    def test_six_points(self):
        assert johnson_schonheim(DesignParams(6, 3, 2, 1)).value == 4

    # hand evaluation: floor(14/5 * floor(13/4)) = 8
    def test_fourteen_points(self):
        assert johnson_schonheim(DesignParams(14, 5, 2, 1)).value == 8

    def test_full_blocks_collapse_to_lam(self):
        for k in range(2, 8):
            for lam in (1, 2, 3):
                assert johnson_schonheim(DesignParams(k, k, 2, lam)).value == lam
        assert johnson_schonheim(DesignParams(5, 5, 2, 1)).value == 1

    def test_higher_t(self):
        # floor(8/4 * floor(7/3 * floor(6/2))) = floor(2 * 7) = 14
        assert johnson_schonheim(DesignParams(8, 4, 3, 1)).value == 14


class TestHanani:
    def test_improvement_fires(self):
        # 4 = 0 mod 2 and 20 = -1 mod 3, so one below the nested-floor value 3
        rep = hanani_b(5, 3, 1)
        assert rep.value == 2 and rep.detail["improved"]

    def test_second_congruence_fails(self):
        rep = hanani_b(7, 3, 1)
        assert rep.value == 7 and not rep.detail["improved"]

    def test_first_congruence_fails(self):
        rep = hanani_b(6, 4, 1)
        assert rep.value == rep.detail["base"] and not rep.detail["improved"]

    def test_second_congruence_vacuous_for_k4(self):
        # v(v-1) is even, so it can never be 3 mod 4
        for v in range(4, 40):
            assert not hanani_b(v, 4, 1).detail["congruence_b"]


class TestSecondJohnson:
    def test_closed_form_agrees(self):
        rep = second_johnson(6, 3, 2)
        assert rep.value == 4
        assert rep.detail["closed_form"] == 4  # floor(12/3)

    def test_feasibility_beats_closed_form(self):
        # closed form floor(56/11) = 5, but d=5 fails 20 >= 22
        rep = second_johnson(14, 5, 2)
        assert rep.detail["closed_form"] == 5
        assert not sj_quadratic_feasible(5, 14, 5, 2)
        assert rep.value == 4

    def test_closed_form_boundary(self):
        # v(t-1) = 25 = k^2: closed form not applicable
        rep = second_johnson(25, 5, 2)
        assert rep.detail["closed_form"] is None


class TestGenSecondJohnson:
    def test_infeasible_case(self):
        # d=5 at (6,3): LHS 10 < RHS 6*C(2,2) + 3*C(2,1) = 12
        assert not gen_second_johnson_feasible(5, DesignParams(6, 3, 2, 1))
        assert gen_second_johnson_bound(DesignParams(6, 3, 2, 1)).value == 4

    def test_small_d_always_feasible(self):
        for v, k, t, lam in [(6, 3, 2, 1), (10, 4, 2, 2), (9, 5, 3, 2), (8, 8, 2, 3)]:
            for d in range(lam + 1):
                assert gen_second_johnson_feasible(d, DesignParams(v, k, t, lam))

    def test_fourteen_points(self):
        # d=5: q=1, r=11, LHS 10 < 11
        assert not gen_second_johnson_feasible(5, DesignParams(14, 5, 2, 1))
        assert gen_second_johnson_bound(DesignParams(14, 5, 2, 1)).value == 4

    def test_reduces_to_quadratic_form_at_lam_one(self):
        # pointwise agreement of the two feasibility tests for every d <= 12
        for t in (2, 3):
            for k in range(t, 7):
                for v in range(k, 13):
                    params = DesignParams(v, k, t, 1)
                    for d in range(13):
                        assert gen_second_johnson_feasible(d, params) == sj_quadratic_feasible(
                            d, v, k, t
                        ), (v, k, t, d)


class TestHorsley:
    def test_low_remainder_value(self):
        # 9 = 3*3 + 0, d=0 < r-lam=2: floor(10*2/3) = 6
        rep = horsley_bound_1(10, 4, 1)
        assert rep.value == 6 and rep.detail == {"r": 3, "d": 0}

    def test_low_remainder_not_applicable(self):
        assert horsley_bound_1(6, 3, 1).value is None

    def test_low_remainder_seven_points(self):
        assert horsley_bound_1(7, 3, 1).value == 7

    def test_high_remainder_first_case(self):
        # r=2, d=1: alpha = 1/2, beta = 0: floor((6-3)/(1/2)) = 6
        rep = horsley_bound_2(6, 3, 1)
        assert rep.value == 6
        assert rep.detail["cases"] == {"alpha": 6}  # second sub-case condition fails
        assert rep.detail["weights"]["alpha"] == (Fraction(1, 2), Fraction(0))

    def test_high_remainder_not_applicable(self):
        assert horsley_bound_2(10, 4, 1).value is None

    def test_exactly_one_of_the_two_applies(self):
        for v in range(5, 20):
            for k in range(3, v):
                for lam in (1, 2):
                    one = horsley_bound_1(v, k, lam).value is not None
                    two = horsley_bound_2(v, k, lam).value is not None
                    r, d = divmod(lam * (v - 1), k - 1)
                    assert one == (d < r - lam)
                    assert not (one and two)


class TestExactByTheorems:
    def test_eight_points(self):
        rep = exact_by_theorems(DesignParams(8, 4, 2, 1))
        assert (rep.value, rep.provenance) == (2, EXACT_WINDOW)
        assert rep.detail["window"] == (7, 9)

    def test_nine_points(self):
        rep = exact_by_theorems(DesignParams(9, 4, 2, 1))
        assert (rep.value, rep.provenance) == (3, EXACT_WINDOW)

    def test_threshold_window(self):
        # main window misses 6 points at k=3; the boundary window at ell=4
        # gives 6 <= 6 < 20/3
        rep = exact_by_theorems(DesignParams(6, 3, 2, 1))
        assert (rep.value, rep.provenance) == (4, EXACT_THRESHOLD)
        assert rep.detail["window"] == (6, Fraction(20, 3))

    def test_not_applicable(self):
        assert exact_by_theorems(DesignParams(12, 3, 2, 1)).value is None

    def test_window_consistency_over_grid(self):
        # whenever the main window fires, k > (t-1)*C(n, lam) is asserted
        # internally; this sweep exercises the assertion
        for lam in (1, 2, 3):
            for t in (2, 3):
                for k in range(t, 9):
                    for v in range(k, 25):
                        exact_by_theorems(DesignParams(v, k, t, lam))

    def test_threshold_window_shape(self):
        # the boundary window never inverts for k <= 40, t <= 4, lam <= 3, and
        # is nonempty exactly when ell > lam + 1: expanding lo < hi gives
        # (ell - lam - 1) * (k - (t-1)*C(ell, lam)) < 0, so the two edges
        # coincide at ell = lam + 1 and are strictly ordered beyond it
        for lam in (1, 2, 3):
            for t in (2, 3, 4):
                for k in range(t, 41):
                    ell = _least_ell(k, t, lam)
                    assert (t - 1) * choose(ell, lam) > k
                    lo = ell * k - (t - 1) * choose(ell, lam + 1)
                    hi = Fraction(
                        (lam + 1) * (ell + 1) * k - (t - 1) * choose(ell + 1, lam + 1),
                        lam + 2,
                    )
                    if ell > lam + 1:
                        assert lo < hi, (k, t, lam, ell)
                    else:
                        assert lo == hi, (k, t, lam, ell)
                    # the main (t, lam) = (2, 1) regime always has slack
                    if (t, lam) == (2, 1):
                        assert lo < hi


class TestExactFamily:
    def test_recovers_the_six_point_cell(self):
        rep = exact_family(4, 2, 1)
        assert rep.detail["v"] == 6 and rep.detail["k"] == 3
        assert rep.value == 4
        assert exact_by_theorems(DesignParams(6, 3, 2, 1)).value == 4

    def test_degenerate_parameters_rejected(self):
        # n = lam + 1 gives k = t - 1 < t
        with pytest.raises(NotApplicableError):
            exact_family(3, 2, 2)

    def test_family_matches_windows(self):
        hits = 0
        for lam in (1, 2):
            for t in (2, 3):
                for n in range(lam + 1, 8):
                    try:
                        rep = exact_family(n, t, lam)
                    except NotApplicableError:
                        continue
                    v, k = rep.detail["v"], rep.detail["k"]
                    assert exact_by_theorems(DesignParams(v, k, t, lam)).value == n
                    hits += 1
        assert hits > 10


class TestExactDirected:
    def test_twelve_seven(self):
        rep = exact_dpdn_by_theorem(12, 7)
        assert rep.value == 4 and rep.detail["window"] == (24, 25)

    def test_not_applicable(self):
        # scan of the window chain: no n fits 2v = 12 for k = 4
        assert exact_dpdn_by_theorem(6, 4).value is None

    def test_full_blocks(self):
        for k in range(2, 9):
            assert exact_dpdn_by_theorem(k, k).value == 2


class TestBestUpperBound:
    def test_convexity_bound_wins(self):
        rep = best_upper_bound(DesignParams(14, 5, 2, 1))
        assert rep.value == 4
        assert rep.provenance == GEN_SECOND_JOHNSON

    def test_six_points_agreement(self):
        assert best_upper_bound(DesignParams(6, 3, 2, 1)).value == 4

    def test_directed_window_wins(self):
        rep = best_upper_bound(DesignParams(12, 7, 2, 1), directed=True)
        assert rep.value == 4 and rep.provenance == EXACT_DIRECTED

    def test_directed_uses_doubled_shadow(self):
        rep = best_upper_bound(DesignParams(9, 4, 2, 1), directed=True)
        shadow_best = best_upper_bound(DesignParams(9, 4, 2, 2))
        assert rep.value <= shadow_best.value

    def test_classical_only_mode_excludes_windows(self):
        rep = best_upper_bound(DesignParams(8, 4, 2, 1), include_exact=False)
        assert not rep.exact

    def test_never_below_an_exact_window(self):
        for lam in (1, 2):
            for k in range(3, 7):
                for v in range(k, 13):
                    params = DesignParams(v, k, 2, lam)
                    exact = exact_by_theorems(params)
                    if exact.value is None:
                        continue
                    assert best_upper_bound(params).value == exact.value
                    assert best_upper_bound(params, include_exact=False).value >= exact.value
