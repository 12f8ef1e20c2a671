"""Closed-form counts against the enumeration oracle and frozen values."""

import random

import pytest

from sumsystems.arith import classical_divisor, nontrivial_divisor
from sumsystems.counting import (
    CountResult,
    binomial_inversion,
    binomial_transform,
    brute_force_count,
    count_by_recurrence,
    count_m_part,
    count_two_part,
    count_unordered,
    divisor_sum_check,
    stirling2,
    two_dim_fixed_tuple,
)
from sumsystems.jof import CapExceeded, count_for_tuple

from oracles import naive_stirling2


class TestStirling:
    def test_frozen_rows(self):
        assert [stirling2(4, m) for m in range(5)] == [0, 1, 7, 6, 1]
        assert [stirling2(7, m) for m in range(8)] == [0, 1, 63, 301, 350, 140, 21, 1]
        assert stirling2(0, 0) == 1

    def test_against_closed_form(self):
        for total in range(9):
            for blocks in range(total + 2):
                assert stirling2(total, blocks) == naive_stirling2(total, blocks)

    def test_recurrence(self):
        for total in range(1, 12):
            for blocks in range(1, total + 1):
                assert stirling2(total, blocks) == blocks * stirling2(
                    total - 1, blocks
                ) + stirling2(total - 1, blocks - 1)

    def test_errors_and_edges(self):
        assert stirling2(3, 9) == 0
        with pytest.raises(ValueError):
            stirling2(-1, 0)


class TestCountMPart:
    def test_spot_values(self):
        assert count_m_part(12, 2).value == 14
        assert count_m_part(24, 2).value == 38
        assert count_m_part(32, 3).value == 150
        assert count_m_part(32, 4).value == 240
        assert count_m_part(16, 4).value == 24

    def test_method_label(self):
        assert count_m_part(12, 2) == CountResult(14, "closed-form")

    def test_conventions(self):
        assert count_m_part(1, 0).value == 1
        assert count_m_part(5, 0).value == 0
        for n in range(2, 60):
            assert count_m_part(n, 1).value == 1
        assert count_m_part(1, 3).value == 0

    def test_prime_has_no_multipart_system(self):
        for p in (2, 3, 5, 7, 97):
            assert count_m_part(p, 2).value == 0
            assert count_m_part(p, 3).value == 0

    def test_matches_brute_force_random(self):
        rng = random.Random(67)
        for _ in range(60):
            n = rng.randrange(2, 100)
            m = rng.randrange(1, 5)
            assert count_m_part(n, m).value == brute_force_count(n, m).value

    def test_errors(self):
        with pytest.raises(ValueError):
            count_m_part(0, 1)
        with pytest.raises(ValueError):
            count_m_part(12, -1)


class TestCountTwoPart:
    def test_frozen(self):
        assert count_two_part(12).value == 14
        assert count_two_part(4).value == 2
        assert count_two_part(7).value == 0
        assert count_two_part(1).value == 0

    def test_agrees_with_general_count(self):
        for n in range(1, 2001):
            assert count_two_part(n).value == count_m_part(n, 2).value


class TestCountByRecurrence:
    def test_matches_closed_form(self):
        for n in range(1, 301):
            for m in range(0, 4):
                assert count_by_recurrence(n, m).value == count_m_part(n, m).value

    def test_method_label(self):
        assert count_by_recurrence(12, 2).method == "divisor-recurrence"


class TestCountUnordered:
    def test_frozen(self):
        assert count_unordered(12, 2).value == 7
        assert count_unordered(24, 3).value == 21
        assert count_unordered(16, 4).value == 1

    def test_division_is_exact_across_sweep(self):
        for n in range(1, 400):
            for m in range(1, 6):
                ordered = count_m_part(n, m).value
                unordered = count_unordered(n, m).value
                fact = 1
                for i in range(2, m + 1):
                    fact *= i
                assert unordered * fact == ordered


class TestDivisorSumIdentities:
    def test_all_residuals_zero_on_grid(self):
        for n in range(1, 257):
            for m in range(1, 5):
                report = divisor_sum_check(n, m)
                assert report.ok, (n, m, report)

    def test_report_shape(self):
        report = divisor_sum_check(12, 2)
        assert report.ordered_plain == 0
        assert report.ordered_mobius == 0
        assert report.unordered_plain == 0
        assert report.unordered_mobius == 0
        doc = report.as_dict()
        assert doc["ok"] is True
        assert set(doc["residuals"]) == {
            "ordered_plain", "ordered_mobius", "unordered_plain", "unordered_mobius",
        }

    def test_worked_decomposition_at_twelve(self):
        # the count for 12 splits as (2 d_2(12) - 4) + sum over proper divisors
        total = count_m_part(12, 2).value
        first = 2 * classical_divisor(2, 12) - 4
        rest = sum(count_m_part(d, 2).value for d in (1, 2, 3, 4, 6))
        assert (total, first, rest) == (14, 8, 6)
        assert total == first + rest

    def test_errors(self):
        with pytest.raises(ValueError):
            divisor_sum_check(12, 0)
        with pytest.raises(ValueError):
            divisor_sum_check(0, 1)


class TestTwoDimFixedTuple:
    def test_frozen(self):
        assert two_dim_fixed_tuple(1).value == 0
        assert two_dim_fixed_tuple(2).value == 1
        assert two_dim_fixed_tuple(4).value == 3
        assert two_dim_fixed_tuple(12).value == 42

    def test_is_half_the_fixed_tuple_count(self):
        for n in range(2, 49):
            assert 2 * two_dim_fixed_tuple(n).value == count_for_tuple((n, n))

    def test_differs_from_all_tuples_count(self):
        # (n, n) systems are a strict subset of two-part systems for n^2
        assert two_dim_fixed_tuple(4).value == 3
        assert count_m_part(16, 2).value // 2 == 7


class TestBinomialTransforms:
    def test_round_trip_random(self):
        rng = random.Random(71)
        for _ in range(120):
            seq = [rng.randrange(-50, 50) for _ in range(rng.randrange(1, 10))]
            assert binomial_inversion(binomial_transform(seq)) == seq
            assert binomial_transform(binomial_inversion(seq)) == seq

    def test_recovers_nontrivial_from_classical(self):
        # d_j(n) is the binomial transform of c_j(n) in the index j
        for n in (1, 2, 12, 30, 72, 97, 360):
            ds = [classical_divisor(j, n) for j in range(7)]
            cs = [nontrivial_divisor(j, n) for j in range(7)]
            assert binomial_inversion(ds) == cs
            assert binomial_transform(cs) == ds


class TestBruteForce:
    def test_frozen(self):
        assert brute_force_count(12, 2) == CountResult(14, "brute-force")
        assert brute_force_count(32, 3).value == 150
        assert brute_force_count(24, 4).value == 96
        assert brute_force_count(7, 2).value == 0

    def test_cap_propagates(self):
        with pytest.raises(CapExceeded):
            brute_force_count(8, 2, cap=2)

    def test_errors(self):
        with pytest.raises(ValueError):
            brute_force_count(0, 2)
        with pytest.raises(ValueError):
            brute_force_count(12, 0)
