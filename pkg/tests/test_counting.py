"""Closed-form counts, rank sums, extension laws, and convergence."""

from fractions import Fraction
from itertools import combinations

import pytest

from cdslab import f2, oracle
from cdslab.counting import (
    CountReport,
    block_construct,
    convergence_report,
    count_sortable,
    count_sortable_rank_sum,
    macwilliams_count,
    proportion,
    proportion_term,
    sortable_extensions_count,
    sqrt2_bounds,
)
from cdslab.errors import ContractError, SizeLimitError

SORTABLE = {
    3: 1,
    4: 17,
    5: 113,
    6: 7729,
    7: 224689,
    8: 61562033,
    9: 7309130417,
    10: 8013328398001,
}
EULERIAN_FORMULA = {
    3: 1,
    4: 5,
    5: 29,
    6: 365,
    7: 7565,
    8: 259533,
    9: 16766541,
    10: 1695913805,
}
EULERIAN_RANK_SUM = {
    3: 1,
    4: 5,
    5: 29,
    6: 589,
    7: 14509,
    8: 1183085,
    9: 118183661,
    10: 38582643181,
}


def all_centers(t: int):
    pairs = list(combinations(range(t), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * t
        for k, (u, v) in enumerate(pairs):
            if (mask >> k) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield f2.F2Matrix.from_row_bits(rows, t)


class TestCounts:
    def test_pinned_values(self):
        for n, expected in SORTABLE.items():
            report = count_sortable(n)
            assert report.count == expected
            assert report.total == 1 << (n * (n - 1) // 2)
            assert report.ratio == Fraction(expected, report.total)

    def test_methods_agree_without_degree_restriction(self):
        for n in range(3, 26):
            assert count_sortable_rank_sum(n).count == count_sortable(n).count

    def test_eulerian_methods_disagree_from_six(self):
        for n in range(3, 11):
            assert count_sortable(n, eulerian=True).count == EULERIAN_FORMULA[n]
            got = count_sortable_rank_sum(n, eulerian=True).count
            assert got == EULERIAN_RANK_SUM[n]
        assert EULERIAN_FORMULA[6] != EULERIAN_RANK_SUM[6]

    def test_small_sizes_rejected(self):
        with pytest.raises(ContractError):
            count_sortable(2)

    def test_report_validation(self):
        with pytest.raises(ContractError):
            CountReport.build(4, "guesswork", False, 17)
        with pytest.raises(ContractError):
            CountReport(4, "closed_formula", False, 17, 64, Fraction(1, 2))


class TestExtensions:
    def test_counts_per_center(self):
        center = f2.F2Matrix([[0, 1], [1, 0]])
        assert sortable_extensions_count(center) == 16
        assert sortable_extensions_count(center, eulerian=True) == 4
        assert sortable_extensions_count(f2.F2Matrix.zeros(3, 3)) == 1

    def test_sum_over_centers_is_the_rank_sum_count(self):
        for t in range(1, 5):
            total = sum(sortable_extensions_count(a) for a in all_centers(t))
            assert total == count_sortable(t + 2).count
            eulerian = sum(
                sortable_extensions_count(a, eulerian=True)
                for a in all_centers(t)
            )
            assert eulerian == count_sortable_rank_sum(t + 2, eulerian=True).count

    def test_block_construct_layout(self):
        center = f2.F2Matrix([[0, 1], [1, 0]])
        u1 = f2.F2Vector([1, 0])
        u2 = f2.F2Vector([0, 1])
        out = block_construct(center, u1, u2)
        assert out.shape == (4, 4)
        assert out.is_symmetric() and out.is_zero_diagonal()
        assert f2.central_submatrix(out, "both") == center
        # the borders are the center's images of u1 and u2; the corner is
        # the pairing of u1 with the image of u2
        av1 = center.mat_vec(u1)
        av2 = center.mat_vec(u2)
        corner = u1.dot(av2)
        assert out.column(0) == f2.F2Vector([0, *av1, corner])
        assert out.column(3) == f2.F2Vector([corner, *av2, 0])


class TestMacWilliams:
    def test_matches_enumeration(self):
        for t in range(0, 5):
            for r in range(0, t + 1):
                assert macwilliams_count(t, r) == oracle.n0_bruteforce(t, r)

    def test_odd_rank_is_empty(self):
        for t in range(0, 8):
            for s in range(1, t + 1, 2):
                assert macwilliams_count(t, s) == 0

    def test_column_sums(self):
        for t in range(0, 8):
            total = sum(macwilliams_count(t, r) for r in range(t + 1))
            assert total == 1 << (t * (t - 1) // 2)

    def test_bad_arguments(self):
        with pytest.raises(ContractError):
            macwilliams_count(-1, 0)
        with pytest.raises(ContractError):
            macwilliams_count(3, 4)
        with pytest.raises(SizeLimitError):
            oracle.n0_bruteforce(6, 2)


class TestConvergence:
    def test_terms_sum_to_the_density(self):
        for n in range(2, 7):
            total = sum(
                (proportion_term(n, s) for s in range(n)), Fraction(0)
            )
            assert total == proportion(2 * n)

    def test_term_range(self):
        with pytest.raises(ContractError):
            proportion_term(3, 3)
        with pytest.raises(ContractError):
            proportion_term(0, 0)

    def test_sqrt2_sandwich(self):
        lo, hi = sqrt2_bounds()
        assert lo < hi
        assert lo * lo < 2 < hi * hi
        assert hi - lo <= Fraction(1, 1 << 70)

    def test_report(self):
        report = convergence_report(max_n=20)
        assert report.all_checks_pass
        assert set(report.checks) == {
            "ratio_bounds",
            "term_bounds",
            "delta_linear",
            "delta_geometric",
            "series_consistent",
            "constants",
            "x100_above_one_fifth",
            "limit_positive_margin",
        }
        assert report.even_proportions[2] == Fraction(17, 64)
        assert report.x100 > Fraction(1, 5)
        assert report.limit_lower >= Fraction(16, 100)
        assert report.failures == ()

    def test_report_needs_room(self):
        with pytest.raises(ContractError):
            convergence_report(max_n=9)
