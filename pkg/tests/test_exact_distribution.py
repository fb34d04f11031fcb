import math
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercut.core import CapExceeded
from hypercut.ensemble import validate
from hypercut.exact_distribution import (CutsizeTable, PolyZ,
                                         balanced_first_part_range,
                                         constellation_coeff, cut_node_poly,
                                         cutsize_table,
                                         expected_balanced_bipartitions,
                                         expected_bipartitions,
                                         log2_expected_bipartitions,
                                         uncut_node_poly, write_balanced_csv,
                                         write_table_csv)


# ---------------------------------------------------------------- oracles

def naive_mul(a, b):
    """Schoolbook convolution, written independently of PolyZ."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    while out and out[-1] == 0:
        out.pop()
    return out


def naive_pow(a, e):
    out = [1]
    for _ in range(e):
        out = naive_mul(out, a)
    return out


def naive_coef(gamma, s, n, k):
    p = [0] + [math.comb(gamma, j) for j in range(1, gamma)]
    while p and p[-1] == 0:
        p.pop()
    q = [1] + [0] * (gamma - 1) + [1]
    prod = naive_mul(naive_pow(p, s), naive_pow(q, n - s))
    return prod[k] if 0 <= k < len(prod) else 0


def _params(n, g, d):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return validate(n, g, d)


# ----------------------------------------------------------------- PolyZ

small_polys = st.lists(st.integers(-9, 9), max_size=6).map(
    lambda cs: PolyZ(tuple(cs)))


class TestPolyZ:
    def test_trailing_zeros_trimmed(self):
        assert PolyZ((1, 2, 0, 0)).coeffs == (1, 2)
        assert PolyZ((0, 0)).is_zero()
        assert PolyZ(()).degree == -1

    def test_zero_to_the_zero_is_one(self):
        assert (PolyZ(()) ** 0).coeffs == (1,)
        assert (PolyZ(()) ** 3).is_zero()

    @given(small_polys, small_polys)
    def test_mul_matches_naive(self, a, b):
        assert (a * b).coeffs == tuple(naive_mul(list(a.coeffs),
                                                 list(b.coeffs)))

    @given(small_polys, st.integers(0, 6))
    @settings(max_examples=60)
    def test_pow_matches_repeated_multiplication(self, a, e):
        assert (a ** e).coeffs == tuple(naive_pow(list(a.coeffs), e))

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            PolyZ((1, 1)) ** -1


class TestNodePolys:
    def test_gamma_2(self):
        assert cut_node_poly(2).coeffs == (0, 2)
        assert uncut_node_poly(2).coeffs == (1, 0, 1)

    def test_gamma_3(self):
        assert cut_node_poly(3).coeffs == (0, 3, 3)
        assert uncut_node_poly(3).coeffs == (1, 0, 0, 1)

    def test_gamma_1_degenerate(self):
        assert cut_node_poly(1).is_zero()
        assert uncut_node_poly(1).coeffs == (1, 1)


class TestConstellationCoeff:
    def test_frozen_values(self):
        assert constellation_coeff(2, 0, 4, 4) == 6   # coef((1+u^2)^4, u^4)
        assert constellation_coeff(2, 2, 4, 4) == 8   # coef(4u^2(1+u^2)^2, u^4)
        assert constellation_coeff(2, 4, 4, 4) == 16  # coef(16u^4, u^4)

    def test_out_of_range_is_zero(self):
        assert constellation_coeff(2, 0, 2, 99) == 0
        assert constellation_coeff(2, 0, 2, -1) == 0

    def test_bad_s_rejected(self):
        with pytest.raises(ValueError):
            constellation_coeff(2, 5, 4, 0)

    @given(st.integers(1, 4), st.data())
    @settings(max_examples=60)
    def test_matches_naive_expansion(self, gamma, data):
        n = data.draw(st.integers(0, 5))
        s = data.draw(st.integers(0, n))
        k = data.draw(st.integers(0, gamma * n + 1))
        assert constellation_coeff(gamma, s, n, k) == naive_coef(gamma, s, n, k)


# -------------------------------------------------- distribution values

class TestExpectedBipartitions:
    def test_e424_row_one(self):
        p = validate(4, 2, 4)
        assert expected_bipartitions(p, 0, 1) == Fraction(6, 35)
        assert expected_bipartitions(p, 2, 1) == Fraction(48, 35)
        assert expected_bipartitions(p, 4, 1) == Fraction(16, 35)
        assert expected_bipartitions(p, 1, 1) == 0
        assert expected_bipartitions(p, 3, 1) == 0

    def test_empty_part_corner(self):
        for p in (validate(4, 2, 4), validate(2, 3, 3), _params(5, 1, 5)):
            assert expected_bipartitions(p, 0, 0) == 1

    def test_e233_hand_counts(self):
        # m1 = 1: both nets uncut only as ({u1},{u2}) in either order, and
        # both cut whenever neither net sits inside a single vertex.
        p = validate(2, 3, 3)
        assert expected_bipartitions(p, 0, 1) == Fraction(1, 5)
        assert expected_bipartitions(p, 1, 1) == 0
        assert expected_bipartitions(p, 2, 1) == Fraction(9, 5)

    def test_row_sum_telescopes(self):
        p = validate(4, 2, 4)
        assert sum(expected_bipartitions(p, s, 1) for s in range(5)) == 2

    def test_index_validation(self):
        p = validate(4, 2, 4)
        with pytest.raises(ValueError):
            expected_bipartitions(p, -1, 0)
        with pytest.raises(ValueError):
            expected_bipartitions(p, 0, 5)


@st.composite
def table_params(draw):
    gamma = draw(st.integers(1, 4))
    n = draw(st.integers(1, 10))
    xi = gamma * n
    delta = draw(st.sampled_from([d for d in range(1, xi + 1) if xi % d == 0]))
    return _params(n, gamma, delta)


class TestCutsizeTable:
    @given(table_params())
    @settings(max_examples=25, deadline=None)
    def test_identities_and_cell_agreement(self, params):
        table = cutsize_table(params)  # validate() runs on construction
        assert table.total() == 2 ** params.m
        for m1 in range(params.m + 1):
            assert table.row_sum(m1) == math.comb(params.m, m1)
        for s in range(params.n + 1):
            for m1 in range(params.m + 1):
                assert table.value(s, m1) == expected_bipartitions(params, s, m1)
                assert table.value(s, m1) == table.value(s, params.m - m1)

    def test_budget_guard(self):
        with pytest.raises(CapExceeded):
            cutsize_table(validate(4, 2, 4), max_n=3)

    def test_validate_catches_corruption(self):
        params = validate(4, 2, 4)
        cells = dict(cutsize_table(params).cells)
        cells[(0, 1)] += 1
        with pytest.raises(AssertionError):
            CutsizeTable(params, cells).validate()


class TestBalanced:
    def test_range_even_odd(self):
        assert balanced_first_part_range(2, 0) == (1, 1)
        assert balanced_first_part_range(3, 0) == (2, 1)  # empty: odd m
        assert balanced_first_part_range(2, "0.999") == (1, 1)
        assert balanced_first_part_range(10, "0.2") == (4, 6)

    def test_epsilon_domain(self):
        with pytest.raises(ValueError):
            balanced_first_part_range(2, 1)
        with pytest.raises(ValueError):
            balanced_first_part_range(2, -0.5)

    def test_balanced_sum_equals_middle_row(self):
        p = validate(4, 2, 4)
        assert expected_balanced_bipartitions(p, 2, 0) == Fraction(48, 35)
        assert expected_balanced_bipartitions(p, 2, "0.999") == Fraction(48, 35)

    def test_odd_m_exactly_balanced_is_zero(self):
        p = _params(3, 2, 2)  # m = 3
        assert all(expected_balanced_bipartitions(p, s, 0) == 0
                   for s in range(4))

    def test_table_distribution_matches_pointwise(self):
        p = validate(6, 2, 3)  # m = 4
        table = cutsize_table(p)
        dist = table.balanced_distribution("1/4")
        for s in range(7):
            assert dist[s] == expected_balanced_bipartitions(p, s, "1/4")


class TestLog2:
    def test_frozen_value(self):
        p = validate(4, 2, 4)
        assert log2_expected_bipartitions(p, 2, 1) == pytest.approx(
            math.log2(48 / 35), abs=1e-12)

    def test_support_violation_is_minus_inf(self):
        p = validate(4, 2, 4)
        assert log2_expected_bipartitions(p, 1, 0) == float("-inf")
        assert log2_expected_bipartitions(p, 1, 1) == float("-inf")  # coef 0

    def test_corner_is_zero(self):
        p = validate(4, 2, 4)
        assert log2_expected_bipartitions(p, 0, 0) == 0.0

    def test_agreement_with_exact_path(self):
        p = _params(12, 3, 4)
        for s in range(13):
            for m1 in range(p.m + 1):
                exact = expected_bipartitions(p, s, m1)
                if exact > 0:
                    ref = math.log2(exact.numerator) - math.log2(exact.denominator)
                    got = log2_expected_bipartitions(p, s, m1)
                    assert abs(got - ref) <= 1e-9 * max(1.0, abs(ref))


class TestCsv:
    def test_full_and_suppressed(self, tmp_path):
        table = cutsize_table(validate(4, 2, 4))
        full = tmp_path / "a.csv"
        assert write_table_csv(table, full) == 15
        lines = full.read_text().splitlines()
        assert lines[0] == "s,m1,A_num,A_den"
        assert "2,1,48,35" in lines
        sparse = tmp_path / "a2.csv"
        nonzero = sum(1 for v in table.cells.values() if v != 0)
        assert write_table_csv(table, sparse, suppress_zeros=True) == nonzero

    def test_balanced_csv(self, tmp_path):
        table = cutsize_table(validate(4, 2, 4))
        out = tmp_path / "b.csv"
        assert write_balanced_csv(table, 0, out) == 5
        lines = out.read_text().splitlines()
        assert lines[0] == "s,B_num,B_den"
        assert "2,48,35" in lines
