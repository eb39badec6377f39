"""Unit tests for the exact inequality checks and scalar functions.

Expected values come from direct integer arithmetic on the integerized
forms, e.g. ``check_inf_N(7, 6)``: 36 >= 42 is false.
"""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.hexiso.bounds import (
    CHECKS,
    CONSTANTS,
    FINITE_E_C,
    check_conjecture,
    check_fin_B,
    check_fin_B_at,
    check_fin_E,
    check_fin_N,
    check_fin_N_at,
    check_inf_B,
    check_inf_E,
    check_inf_N,
    cross_check,
    eq1_eq2_chain,
    eq1_lower,
    eq2_upper,
    f,
    g,
    r_threshold,
)
from src.hexiso.errors import DomainError, InvalidArgumentsError

counts = st.integers(0, 10_000)


# ---------------------------------------------------------------------------
# Infinite-grid checks
# ---------------------------------------------------------------------------

class TestInfiniteChecks:
    def test_single_vertex(self):
        """(1, 3) → 9 >= 6"""
        check = check_inf_N(1, 3)
        assert check.holds and not check.tight

    def test_negative_case(self):
        """(7, 6) → 36 >= 42 is false"""
        check = check_inf_N(7, 6)
        assert not check.holds
        assert (check.lhs, check.rhs) == (36, 42)

    def test_domino_edges(self):
        """(2, 4) → 16 >= 12"""
        assert check_inf_E(2, 4).holds

    @pytest.mark.parametrize("r", range(1, 51))
    def test_grid_family_is_tight(self, r):
        assert check_inf_N(6 * r * r, 6 * r).tight
        assert check_inf_E(6 * r * r, 6 * r).tight
        assert check_inf_B(6 * r * r + 6 * r, 6 * r).tight

    def test_boundary_examples(self):
        """(1, 1) → 7 >= 6 holds; (4, 2) → 16 >= 24 fails"""
        assert check_inf_B(1, 1).holds
        assert not check_inf_B(4, 2).holds

    @pytest.mark.parametrize("args", [(-1, 3), (3, -1), (1.5, 3)])
    def test_invalid_inputs(self, args):
        with pytest.raises(InvalidArgumentsError):
            check_inf_N(*args)

    def test_serializes_exact_strings(self):
        assert check_inf_N(7, 6).to_dict() == {
            "name": "inf_N",
            "holds": False,
            "tight": False,
            "lhs": "36",
            "rhs": "42",
        }


# ---------------------------------------------------------------------------
# Finite-grid checks
# ---------------------------------------------------------------------------

class TestFiniteChecks:
    def test_neighbour_example(self):
        """(3, 2) → 4·10^8 >= 3·36638809"""
        check = check_fin_N(3, 2)
        assert check.holds
        assert (check.lhs, check.rhs) == (4 * 10**8, 3 * 36638809)

    def test_single_vertex(self):
        assert check_fin_N(1, 1).holds
        assert check_fin_B(1, 1).holds

    def test_boundary_integer_form(self):
        check = check_fin_B(5, 1)
        assert check.lhs == 10**8 + 36638809
        assert check.rhs == 5 * 36638809

    def test_edge_second_branch(self):
        """(3, 2): (27 − 4)^2 = 529 <= 648"""
        check = check_fin_E(3, 2)
        assert check.holds
        assert (check.lhs, check.rhs) == (648, 529)

    def test_edge_small(self):
        """(1, 2): (9 − 4)^2 = 25 <= 72"""
        assert check_fin_E(1, 2).holds

    def test_edge_first_branch(self):
        assert check_fin_E(1, 3).holds

    def test_edge_failure(self):
        """(100, 1): (900 − 1)^2 > 72·10^4"""
        assert not check_fin_E(100, 1).holds

    def test_edge_tight_only_at_zero(self):
        assert check_fin_E(0, 0).tight
        assert not check_fin_E(3, 2).tight

    def test_rational_constant(self):
        assert check_fin_N_at(3, 2, Fraction(6053, 10**4)) == check_fin_N(3, 2)
        assert check_fin_B_at(3, 2, "0.6053") == check_fin_B(3, 2)

    def test_float_constant_rejected(self):
        with pytest.raises(InvalidArgumentsError):
            check_fin_N_at(3, 2, 0.6053)

    @given(counts, counts)
    def test_edge_check_matches_radical_form(self, w, e):
        c = FINITE_E_C.value
        slack = e - c * math.sqrt(w)
        if abs(slack) > 1e-6:
            assert check_fin_E(w, e).holds == (slack > 0)


class TestConjecture:
    def test_three_path(self):
        """(3, 2): 12 >= 12, tight"""
        check = check_conjecture(3, 2)
        assert check.holds and check.tight

    def test_constants_table(self):
        assert set(CONSTANTS) == {"infinite", "finite_N", "finite_E", "conjecture"}
        assert CONSTANTS["conjecture"].square == Fraction(4, 3)
        assert CONSTANTS["finite_N"].square == Fraction(36638809, 10**8)


class TestCrossCheck:
    @given(st.sampled_from(sorted(CHECKS)), counts, counts)
    def test_exact_and_radical_forms_agree(self, name, w, k):
        assert cross_check(name, w, k)


# ---------------------------------------------------------------------------
# Row-count bounds
# ---------------------------------------------------------------------------

class TestRowCountBounds:
    @pytest.mark.parametrize("l,expected", [((1, 1, 1), 3), ((2, 2, 2), 6), ((2, 1, 1), 4)])
    def test_eq1(self, l, expected):
        assert eq1_lower(l) == expected

    @pytest.mark.parametrize(
        "l,expected",
        [((2, 2, 2), Fraction(6)), ((1, 1, 1), Fraction(3, 2)), ((1, 1, 2), Fraction(2))],
    )
    def test_eq2(self, l, expected):
        assert eq2_upper(l) == expected

    def test_eq2_symmetric(self):
        assert eq2_upper((3, 1, 2)) == eq2_upper((1, 2, 3)) == eq2_upper((2, 3, 1))

    @pytest.mark.parametrize("l", [(0, 1, 1), (1, 1), (1, -2, 3)])
    def test_invalid_counts(self, l):
        with pytest.raises(InvalidArgumentsError):
            eq1_lower(l)

    def test_chain_tight_for_equal_counts(self):
        assert eq1_eq2_chain((2, 2, 2)).tight

    @given(st.integers(1, 200), st.integers(1, 200), st.integers(1, 200))
    def test_chain_always_holds(self, a, b, c):
        assert eq1_eq2_chain((a, b, c)).holds


# ---------------------------------------------------------------------------
# Scalar functions
# ---------------------------------------------------------------------------

class TestScalarFunctions:
    def test_f_at_finite_constant(self):
        """f(0.6053) ≈ 1.155 and stays below 2"""
        value = f(0.6053)
        assert value <= 2
        assert value == pytest.approx(1.155, abs=2e-3)

    def test_f_at_zero(self):
        assert f(0.0) == 0.0

    def test_f_at_point_six(self):
        assert f(0.6) == pytest.approx(1.095, abs=2e-3)

    @pytest.mark.parametrize("c", [0.72, 1.0, -2.0])
    def test_f_outside_window(self, c):
        with pytest.raises(DomainError):
            f(c)

    def test_f_increasing(self):
        top = math.sqrt(6) - math.sqrt(3)
        grid = [i * top / 1000 for i in range(1000)]
        values = [f(c) for c in grid]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_g_equals_one_at_edge_constant(self):
        assert abs(g(math.sqrt(6) - math.sqrt(3)) - 1) < 1e-12

    def test_g_at_zero(self):
        assert g(0.0) == pytest.approx(math.sqrt(2), abs=1e-12)

    def test_g_at_half(self):
        assert g(0.5) == pytest.approx(1.2396, abs=1e-3)
        assert g(0.5) > 1

    @pytest.mark.parametrize("c,expected", [(0.6053, 2), (0.0, 0), (0.6, 2)])
    def test_r_threshold(self, c, expected):
        assert r_threshold(c) == expected

    @pytest.mark.parametrize("c", [-0.1, 0.72])
    def test_r_threshold_outside_window(self, c):
        with pytest.raises(DomainError):
            r_threshold(c)
