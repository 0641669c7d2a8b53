"""
Seeded randomized property suites behind `lsystem_cli.py verify`, and the
worked-example comparison behind `lsystem_cli.py example`.

Each suite draws from its own generator, default_rng([seed, index]), so adding
cases to one suite never shifts another suite's samples.
"""

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

import cmatrix as cm
from config import (
    ADDITIVITY_TOL,
    CLOSED_ENTROPY_TOL,
    COMPOSITION_TOL,
    EXAMPLE_LAMBDAS,
    EXAMPLE_POINTS,
    EXAMPLE_TOL,
    EXCLUDED_DISK,
    HERGLOTZ_TOL,
    MAX_LAMBDA_IM,
    MAX_LAMBDA_RE,
    MULTIPLICATION_TOL,
    ORACLE_TOL,
    RANDOM_MAX_CHANNEL,
    RANDOM_MAX_STATE,
    ROUND_TRIP_TOL,
    SCAN_HEIGHTS,
    SPECTRUM_MARGIN,
)
from coupling import compose_accumulation, compose_dissipation, couple, coupled_entropy_check, multiplication_check
from entropy import (
    argmax_scan_d,
    argmin_scan_a,
    c_entropy,
    c_entropy_det,
    classify,
    closed_accumulation_a,
    closed_dissipation_d,
    closed_entropy_a,
    closed_entropy_d,
    closed_entropy_m,
    entropy_report,
)
from lsystem import (
    LSystem,
    herglotz_check,
    impedance,
    impedance_from_transfer,
    random_lsystem,
    random_signature,
    transfer,
    transfer_from_impedance,
    upper_half_grid,
)
from models import ModelSpec, build_model, build_theta_general


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    max_residual: float
    cases: int


@dataclass(frozen=True)
class ExampleRow:
    label: str
    computed: complex
    target: complex
    passed: bool


def random_lambda(rng: np.random.Generator) -> complex:
    """lambda0 with 0 < Im <= MAX_LAMBDA_IM, |Re| <= MAX_LAMBDA_RE, outside a small disk around i."""
    while True:
        candidate = complex(rng.uniform(-MAX_LAMBDA_RE, MAX_LAMBDA_RE), MAX_LAMBDA_IM * (1.0 - rng.random()))
        if abs(candidate - 1j) > EXCLUDED_DISK:
            return candidate


def random_system(rng: np.random.Generator, m=None, signature=None) -> LSystem:
    n = int(rng.integers(1, RANDOM_MAX_STATE + 1))
    if m is None:
        m = int(rng.integers(1, RANDOM_MAX_CHANNEL + 1))
    if signature is None:
        signature = random_signature(rng, m)
    return random_lsystem(rng, n, m, signature)


def random_pair(rng: np.random.Generator) -> tuple[LSystem, LSystem]:
    """Two random factors sharing m and J."""
    m = int(rng.integers(1, RANDOM_MAX_CHANNEL + 1))
    signature = random_signature(rng, m)
    return random_system(rng, m, signature), random_system(rng, m, signature)


def off_spectrum_points(systems, count: int, rng: np.random.Generator, min_imag: float = 0.0) -> list[complex]:
    """Random z in [-3, 3]^2 kept SPECTRUM_MARGIN away from the eigenvalues of every T."""
    eigenvalues = np.concatenate([np.linalg.eigvals(s.T) for s in systems])
    points = []
    while len(points) < count:
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        if abs(z.imag) < min_imag:
            continue
        if np.min(np.abs(eigenvalues - z)) >= SPECTRUM_MARGIN:
            points.append(z)
    return points


def _relative(residual: float, scale: float) -> float:
    return residual / (1.0 + scale)


def suite_oracle(rng: np.random.Generator, cases: int) -> SuiteResult:
    """General-definition entropy of the three models against the closed forms, plus the det shortcut."""
    closed_forms = {"d": closed_entropy_d, "m": closed_entropy_m, "a": closed_entropy_a}
    worst = 0.0
    passed = True
    for _ in range(cases):
        lambda0 = random_lambda(rng)
        for kind, closed_form in closed_forms.items():
            system = build_model(ModelSpec(kind, lambda0=lambda0))
            computed = c_entropy(system)
            expected = closed_form(lambda0)
            residual = abs(computed - expected)
            passed &= residual <= CLOSED_ENTROPY_TOL
            shortcut = abs(c_entropy_det(system) - computed)
            passed &= shortcut <= CLOSED_ENTROPY_TOL
            worst = max(worst, residual, shortcut)

        for report, coefficient in (
            (classify(closed_entropy_d(lambda0)), closed_dissipation_d(lambda0)),
            (classify(closed_entropy_a(lambda0)), closed_accumulation_a(lambda0)),
        ):
            residual = abs(report.coefficient - coefficient)
            passed &= residual <= ORACLE_TOL
            worst = max(worst, residual)

    return SuiteResult("oracle", bool(passed), worst, cases)


def suite_round_trip(rng: np.random.Generator, cases: int) -> SuiteResult:
    """V <-> W conversions against direct evaluation, 10 points per system."""
    worst = 0.0
    for _ in range(cases):
        system = random_system(rng)
        # away from the real axis, where Re T - zI loses invertibility
        for z in off_spectrum_points([system], 10, rng, min_imag=SPECTRUM_MARGIN):
            W = transfer(system, z)
            V = impedance(system, z)
            worst = max(
                worst,
                _relative(cm.fro_norm(impedance_from_transfer(W, system.J) - V), cm.fro_norm(V)),
                _relative(cm.fro_norm(transfer_from_impedance(V, system.J) - W), cm.fro_norm(W)),
            )
    return SuiteResult("round_trip", worst <= ROUND_TRIP_TOL, worst, cases)


def suite_herglotz(rng: np.random.Generator, cases: int) -> SuiteResult:
    """Im V(z) stays positive semidefinite on the upper half-plane grid for every model kind."""
    grid = upper_half_grid()
    lowest = math.inf
    for _ in range(cases):
        lambda0 = random_lambda(rng)
        mu = random_lambda(rng)
        for spec in (
            ModelSpec("d", lambda0=lambda0),
            ModelSpec("m", lambda0=lambda0),
            ModelSpec("a", lambda0=lambda0),
            ModelSpec("general", lam=lambda0, mu=mu),
        ):
            lowest = min(lowest, herglotz_check(build_model(spec), grid).min_eigenvalue)

    # residual is how far below zero the spectrum of Im V dipped
    return SuiteResult("herglotz", lowest >= -HERGLOTZ_TOL, max(0.0, -lowest), cases)


def suite_multiplication(rng: np.random.Generator, cases: int) -> SuiteResult:
    """W of the coupling against the product W1 W2 at 25 points per pair."""
    worst = 0.0
    for _ in range(cases):
        left, right = random_pair(rng)
        result = couple(left, right)
        for z in off_spectrum_points([left, right], 25, rng):
            worst = max(worst, multiplication_check(result, z))
    return SuiteResult("multiplication", worst <= MULTIPLICATION_TOL, worst, cases)


def suite_additivity(rng: np.random.Generator, cases: int) -> SuiteResult:
    """S = S1 + S2 on random pairs, plus the (1+i, 1+i) x (2i, 2i) anchor giving ln 45."""
    worst = 0.0
    for _ in range(cases):
        left, right = random_pair(rng)
        coupled, s1, s2 = coupled_entropy_check(couple(left, right))
        if not all(math.isfinite(s) for s in (coupled, s1, s2)):
            continue
        worst = max(worst, abs(coupled - s1 - s2))

    result = couple(build_theta_general(1 + 1j, 1 + 1j), build_theta_general(2j, 2j))
    anchor = entropy_report(result.coupled)
    worst = max(
        worst,
        abs(anchor.entropy - math.log(45)),
        abs(compose_dissipation(24 / 25, 80 / 81) - 2024 / 2025),
        abs(anchor.coefficient - 2024 / 2025),
    )
    return SuiteResult("additivity", worst <= ADDITIVITY_TOL, worst, cases)


def suite_composition(rng: np.random.Generator, cases: int) -> SuiteResult:
    """Coefficient composition against classify(S1 + S2)."""
    worst = 0.0
    for _ in range(cases):
        c1, c2 = rng.random(2)
        s1, s2 = -0.5 * math.log1p(-c1), -0.5 * math.log1p(-c2)
        worst = max(
            worst,
            abs(compose_dissipation(c1, c2) - classify(s1 + s2).coefficient),
            abs(compose_accumulation(c1, c2) - classify(-s1 - s2).coefficient),
            abs(compose_dissipation(c1, c2) - compose_dissipation(c2, c1)),
        )
    return SuiteResult("composition", worst <= COMPOSITION_TOL, worst, cases)


def suite_extremal(rng: np.random.Generator, cases: int) -> SuiteResult:
    """Maximizer of S_d and minimizer of S_a along x + a i sit at x = 0."""
    worst = 0.0
    for a in SCAN_HEIGHTS:
        x_max, _ = argmax_scan_d(a)
        x_min, _ = argmin_scan_a(a)
        worst = max(worst, abs(x_max), abs(x_min))
    return SuiteResult("extremal", worst == 0.0, worst, len(SCAN_HEIGHTS))


SUITES: list[tuple[str, Callable[[np.random.Generator, int], SuiteResult]]] = [
    ("oracle", suite_oracle),
    ("round_trip", suite_round_trip),
    ("herglotz", suite_herglotz),
    ("multiplication", suite_multiplication),
    ("additivity", suite_additivity),
    ("composition", suite_composition),
    ("extremal", suite_extremal),
]


def run_suites(seed: int, cases: int) -> list[SuiteResult]:
    return [suite(np.random.default_rng([seed, index]), cases) for index, (_, suite) in enumerate(SUITES)]


# Worked examples: transfer and impedance displays at lambda0 = i and 1 + i

def _example_targets(n: int) -> dict[str, Callable[[complex], list[complex]]]:
    """Diagonal entries of W and V per model kind, as functions of z."""
    if n == 1:
        return {
            "W_d": lambda z: [(-1j - z) / (1j - z), (1j + z) / (-1j + z)],
            "W_m": lambda z: [(z + 1j) / (z - 1j), (z - 1j) / (z + 1j)],
            "W_a": lambda z: [(z - 1j) / (z + 1j), (z - 1j) / (z + 1j)],
            "V_d": lambda z: [-1 / z, -1 / z],
            "V_m": lambda z: [-1 / z, -1 / z],
            "V_a": lambda z: [-1 / z, -1 / z],
        }
    return {
        "W_d": lambda z: [(1 - 1j - z) / (1 + 1j - z), (1 + 1j + z) / (1 - 1j + z)],
        "W_m": lambda z: [(1 - 1j - z) / (1 + 1j - z), (1 + 1j - z) / (1 - 1j - z)],
        "W_a": lambda z: [(1 + 1j - z) / (1 - 1j - z), (1 - 1j + z) / (1 + 1j + z)],
        "V_d": lambda z: [1 / (1 - z), -1 / (1 + z)],
        "V_m": lambda z: [1 / (1 - z), 1 / (1 - z)],
        "V_a": lambda z: [1 / (1 - z), -1 / (1 + z)],
    }


def example_expectations(n: int) -> tuple[dict[str, float], dict[str, float]]:
    """Expected entropies and coefficients per model kind."""
    if n == 1:
        return {"d": math.inf, "m": 0.0, "a": -math.inf}, {"d": 1.0, "m": 0.0, "a": 1.0}
    return {"d": math.log(5), "m": 0.0, "a": -math.log(5)}, {"d": 24 / 25, "m": 0.0, "a": 24 / 25}


def _matches(computed: complex, target: complex) -> bool:
    if cmath.isinf(target) or cmath.isinf(computed):
        return computed == target
    return abs(computed - target) <= EXAMPLE_TOL


def run_example(n: int) -> tuple[list[ExampleRow], dict[str, float], dict[str, float]]:
    """
    Rebuild the three models at the example's lambda0 and compare every W / V
    entry at EXAMPLE_POINTS, then the entropies and coefficients.
    Returns (rows, computed entropies, computed coefficients).
    """
    lambda0 = EXAMPLE_LAMBDAS[n]
    targets = _example_targets(n)
    rows = []
    entropies = {}
    coefficients = {}

    for kind in ("d", "m", "a"):
        system = build_model(ModelSpec(kind, lambda0=lambda0))
        for z in EXAMPLE_POINTS:
            for name, evaluate in ((f"W_{kind}", transfer), (f"V_{kind}", impedance)):
                value = evaluate(system, z)
                diagonal = targets[name](z)
                for i in range(2):
                    for j in range(2):
                        target = diagonal[i] if i == j else 0j
                        computed = complex(value[i, j])
                        rows.append(ExampleRow(f"{name}[{i},{j}]@{z}", computed, target, _matches(computed, target)))

        report = entropy_report(system)
        entropies[kind] = report.entropy
        coefficients[kind] = report.coefficient

    expected_entropies, expected_coefficients = example_expectations(n)
    for kind in ("d", "m", "a"):
        rows.append(ExampleRow(
            f"S_{kind}", complex(entropies[kind]), complex(expected_entropies[kind]),
            _matches(complex(entropies[kind]), complex(expected_entropies[kind])),
        ))
        coefficient_name = "A_a" if kind == "a" else f"D_{kind}"
        rows.append(ExampleRow(
            coefficient_name, complex(coefficients[kind]), complex(expected_coefficients[kind]),
            _matches(complex(coefficients[kind]), complex(expected_coefficients[kind])),
        ))
    return rows, entropies, coefficients
