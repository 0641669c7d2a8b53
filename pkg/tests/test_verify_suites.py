"""
Tests for the randomized property suites and the worked-example comparison
"""
import math

import numpy as np
import pytest

from config import EXAMPLE_POINTS
from verify_suites import (
    SUITES,
    example_expectations,
    off_spectrum_points,
    random_lambda,
    random_pair,
    run_example,
    run_suites,
)


@pytest.mark.parametrize("name, suite", SUITES)
def test_each_suite_passes(name, suite):
    result = suite(np.random.default_rng([11, 0]), 5)
    assert result.name == name
    assert result.passed, f"{name} max residual {result.max_residual}"
    assert result.cases >= 1


def test_run_suites_is_deterministic():
    first = run_suites(3, 4)
    second = run_suites(3, 4)
    assert [(r.name, r.passed, r.max_residual) for r in first] == [(r.name, r.passed, r.max_residual) for r in second]


def test_suite_streams_are_independent():
    short = run_suites(5, 2)
    longer = run_suites(5, 3)
    # extremal draws nothing from its generator
    assert short[-1].max_residual == longer[-1].max_residual


def test_random_lambda_avoids_the_point_i(rng):
    for _ in range(500):
        value = random_lambda(rng)
        assert value.imag > 0
        assert abs(value - 1j) > 1e-3


def test_random_pair_shares_direction(rng):
    for _ in range(20):
        left, right = random_pair(rng)
        assert left.m == right.m
        np.testing.assert_array_equal(left.J, right.J)


def test_off_spectrum_points_keep_distance(rng):
    left, right = random_pair(rng)
    eigenvalues = np.concatenate([np.linalg.eigvals(left.T), np.linalg.eigvals(right.T)])
    for z in off_spectrum_points([left, right], 50, rng, min_imag=0.5):
        assert abs(z.imag) >= 0.5
        assert np.min(np.abs(eigenvalues - z)) >= 0.1


@pytest.mark.parametrize("n", [1, 2])
def test_worked_examples_match(n):
    rows, entropies, coefficients = run_example(n)
    expected_entropies, expected_coefficients = example_expectations(n)

    assert [row.label for row in rows if not row.passed] == []
    assert len(rows) == 3 * len(EXAMPLE_POINTS) * 2 * 4 + 6
    for kind in ("d", "m", "a"):
        if math.isinf(expected_entropies[kind]):
            assert entropies[kind] == expected_entropies[kind]
        else:
            assert entropies[kind] == pytest.approx(expected_entropies[kind], abs=1e-9)
        assert coefficients[kind] == pytest.approx(expected_coefficients[kind], abs=1e-9)
