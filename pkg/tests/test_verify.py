import json

import pytest

from genfrob.denumerant import denumerant
from genfrob.errors import InvalidInputError
from genfrob.verify import (
    SUITES,
    check_decreasing,
    check_lemma2,
    check_lemma3,
    cross_check_theorem1,
    run_decreasing_suite,
    run_lemma2_suite,
    run_lemma3_suite,
    run_two_var_suite,
)


class TestLemma2:
    def test_examples_pass(self):
        report = check_lemma2((3, 7), 2, 6)
        assert report.passed and report.cases_run > 0
        report = check_lemma2((10, 15, 21), 0, 30)
        assert report.passed and report.cases_run > 0

    def test_j_zero_is_the_definition(self):
        # the j=0 term is d(g; A) <= s itself
        report = check_lemma2((3, 7), 0, 3)
        assert report.passed

    def test_rejects_non_multiple_c(self):
        with pytest.raises(InvalidInputError):
            check_lemma2((3, 7), 2, 5)

    def test_rejects_gcd_above_one(self):
        with pytest.raises(InvalidInputError):
            check_lemma2((4, 6), 1, 4)


class TestLemma3:
    def test_sandwich_at_j_zero(self):
        # at j=0: the count of 53 is exactly 2, sandwiched by 32 < 53 <= 53
        assert denumerant(53, (3, 7)) == 2
        report = check_lemma3(3, 7, 2, 6)
        assert report.passed and report.cases_run == 53 // 6 + 1

    def test_boundary_hit(self):
        # g(4,5;1)=31, c=20: 31-20=11 equals g(4,5;0), count must be 0
        assert denumerant(11, (4, 5)) == 0
        report = check_lemma3(4, 5, 1, 20)
        assert report.passed

    def test_rejects_non_qualifying_c(self):
        with pytest.raises(InvalidInputError):
            check_lemma3(4, 5, 1, 3)

    def test_rejects_non_coprime(self):
        with pytest.raises(InvalidInputError):
            check_lemma3(4, 6, 1, 4)


class TestDecreasing:
    def test_qualifying_example(self):
        report = check_decreasing(3, 7, 2, 6)
        assert report.passed

    def test_non_qualifying_c_rejected(self):
        # 3 divides neither 4 nor 5; the conclusion genuinely fails there,
        # so the input is invalid rather than a failure
        with pytest.raises(InvalidInputError):
            check_decreasing(4, 5, 1, 3)

    def test_product_step_decreases(self):
        report = check_decreasing(3, 7, 3, 21)
        assert report.passed

    def test_frozen_count_rays(self):
        # oracle-computed rays over (3, 7), step 6
        ray_from_g = [denumerant(53 - 6 * j, (3, 7)) for j in range(9)]
        assert ray_from_g == [2, 2, 2, 2, 1, 1, 1, 0, 0]
        ray_from_product = [denumerant(63 - 6 * j, (3, 7)) for j in range(13)]
        assert ray_from_product == [4, 3, 3, 3, 2, 2, 2, 2, 1, 1, 1, 0, 0]
        # and the non-qualifying (4, 5) ray really is not monotone
        ray_4_5 = [denumerant(31 - 3 * j, (4, 5)) for j in range(12)]
        assert ray_4_5 == [1, 2, 2, 1, 1, 1, 1, 1, 0, 1, 0, 0]
        assert any(b > a for a, b in zip(ray_4_5, ray_4_5[1:]))


class TestSuites:
    def test_lemma2_reduced_bounds(self):
        report = run_lemma2_suite(max_part=10, max_s=2, max_c=30)
        assert report.passed and report.cases_run > 100

    def test_lemma3_reduced_bounds(self):
        report = run_lemma3_suite(max_ab=10, max_s=3, max_c=40)
        assert report.passed and report.cases_run > 100

    def test_decreasing_reduced_bounds(self):
        report = run_decreasing_suite(max_ab=10, max_s=3, max_c=40)
        assert report.passed

    def test_theorem1_reduced_bounds(self):
        report = cross_check_theorem1(15, 2)
        assert report.passed and report.cases_run > 50

    def test_two_var_reduced_bounds(self):
        report = run_two_var_suite(10, 3)
        assert report.passed and report.cases_run > 100

    def test_sampled_mode_is_deterministic(self):
        a = run_lemma3_suite(max_ab=15, max_s=3, max_c=40, samples=25, seed=7)
        b = run_lemma3_suite(max_ab=15, max_s=3, max_c=40, samples=25, seed=7)
        assert a.to_json_lines() == b.to_json_lines()
        assert a.cases_run == b.cases_run

    def test_suite_registry(self):
        assert set(SUITES) == {"lemma2", "lemma3", "decreasing", "theorem1", "twovar"}


class TestReport:
    def test_json_lines_round_trip(self):
        report = check_lemma3(3, 7, 2, 6)
        lines = report.to_json_lines()
        head = json.loads(lines[0])
        assert head == {
            "suite": "lemma3",
            "cases_run": report.cases_run,
            "failures": 0,
            "passed": True,
        }
        assert len(lines) == 1  # no failure lines

    def test_elapsed_present_but_not_serialized(self):
        report = check_lemma2((3, 7), 1, 3)
        assert report.elapsed >= 0.0
        assert "elapsed" not in report.to_json_lines()[0]
