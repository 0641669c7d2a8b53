"""
c-Entropy S = -tr ln|W(-i)| of an L-system, the model closed forms,
dissipation / accumulation coefficients, extremal scans along Re lambda0
and entropy surface grids.

Entropies are floats; +inf and -inf are legitimate values.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

import cmatrix as cm
from config import (
    ENTROPY_LIMIT_LADDER,
    ENTROPY_ZERO_TOL,
    LIMIT_DIVERGENT_SLOPE,
    LIMIT_STABLE_SLOPE,
    SCAN_STEP,
    SCAN_X_RANGE,
    SINGULAR_MODULUS_TOL,
    SURFACE_STEP,
    SURFACE_X_RANGE,
    SURFACE_Y_RANGE,
)
from errors import DomainError, NumericalBreakdown, SpectrumHit
from lsystem import LSystem, transfer

DISSIPATIVE = "dissipative"
ACCUMULATIVE = "accumulative"


@dataclass(frozen=True)
class EntropyReport:
    entropy: float
    regime: str
    coefficient: float


@dataclass(frozen=True)
class SurfaceGrid:
    kind: str
    x_axis: np.ndarray
    y_axis: np.ndarray
    values: np.ndarray  # values[j, i] is the entropy at (x_axis[i], y_axis[j])


def _snap_zero(entropy: float) -> float:
    # rounding residue around an exact zero must not flip the regime
    return 0.0 if abs(entropy) < ENTROPY_ZERO_TOL else entropy


def _log_trace_of_modulus(W: np.ndarray) -> Optional[float]:
    """tr ln|W|, or None when |W| is numerically singular."""
    modulus = cm.mat_modulus(W)
    if cm.min_eigenvalue(modulus) < SINGULAR_MODULUS_TOL:
        return None
    return cm.trace(cm.mat_log_pd(modulus)).real


def c_entropy(system: LSystem) -> float:
    """S = -tr ln|W(-i)|, with the limit ladder when -i lies in the spectrum of T."""
    try:
        W = transfer(system, -1j)
    except SpectrumHit:
        return _limit_entropy(system)

    log_trace = _log_trace_of_modulus(W)
    if log_trace is None:
        return math.inf
    return _snap_zero(-log_trace)


def _limit_entropy(system: LSystem) -> float:
    """
    Approach -i along z = -i + i*eps and read the log-log slope of |det W|
    against eps. A slope at or below -LIMIT_DIVERGENT_SLOPE on every rung is a
    pole (-inf), at or above +LIMIT_DIVERGENT_SLOPE a zero (+inf). Slopes
    within LIMIT_STABLE_SLOPE of 0 mean the singularity cancels in the
    determinant; the finite value is then extrapolated linearly to eps = 0.
    """
    determinants = []
    for eps in ENTROPY_LIMIT_LADDER:
        try:
            W = transfer(system, complex(0, -1 + eps))
        except SpectrumHit as e:
            raise NumericalBreakdown(f"limit ladder hit the spectrum at eps={eps}") from e
        determinants.append(abs(cm.det(W)))

    if determinants[-1] == 0.0:
        return math.inf
    if min(determinants) == 0.0:
        raise NumericalBreakdown("determinant vanished part-way down the limit ladder")

    log_eps = np.log(ENTROPY_LIMIT_LADDER)
    slopes = np.diff(np.log(determinants)) / np.diff(log_eps)
    if np.all(slopes <= -LIMIT_DIVERGENT_SLOPE):
        return -math.inf
    if np.all(slopes >= LIMIT_DIVERGENT_SLOPE):
        return math.inf
    if np.all(np.abs(slopes) <= LIMIT_STABLE_SLOPE):
        entropies = [-math.log(d) for d in determinants]
        eps_prev, eps_last = ENTROPY_LIMIT_LADDER[-2], ENTROPY_LIMIT_LADDER[-1]
        slope = (entropies[-2] - entropies[-1]) / (eps_prev - eps_last)
        return _snap_zero(entropies[-1] - slope * eps_last)

    raise NumericalBreakdown(f"inconclusive limit ladder, log-log slopes {slopes.tolist()}")


def c_entropy_at_plus_i(system: LSystem) -> float:
    """S = tr ln|W(i)|; raises SpectrumHit when i is in the spectrum of T."""
    log_trace = _log_trace_of_modulus(transfer(system, 1j))
    if log_trace is None:
        return -math.inf
    return _snap_zero(log_trace)


def c_entropy_det(system: LSystem) -> float:
    """Determinant shortcut -ln|det W(-i)|, an independent path to S."""
    determinant = abs(cm.det(transfer(system, -1j)))
    if determinant == 0.0:
        return math.inf
    return _snap_zero(-math.log(determinant))


def _require_upper(lambda0: complex) -> None:
    if not lambda0.imag > 0:
        raise DomainError(f"Im lambda0 must be positive, got {lambda0}")


def _entropy_ratio(w: complex) -> tuple[float, float]:
    """Numerator and denominator of (|w|^2 + 2 Im w + 1) / (|w|^2 - 2 Im w + 1)."""
    x, y = w.real, w.imag
    return x * x + (1 + y) ** 2, x * x + (1 - y) ** 2


def _log_ratio(numerator: float, denominator: float) -> float:
    if denominator == 0.0:
        return math.inf
    return math.log(numerator / denominator)


def closed_entropy_d(lambda0: complex) -> float:
    _require_upper(lambda0)
    return _log_ratio(*_entropy_ratio(lambda0))


def closed_entropy_m(lambda0: complex) -> float:
    _require_upper(lambda0)
    return 0.0


def closed_entropy_a(lambda0: complex) -> float:
    _require_upper(lambda0)
    return -_log_ratio(*_entropy_ratio(lambda0))


def closed_entropy_general(lam: complex, mu: complex) -> float:
    """Half a log ratio per diagonal entry of diag(lam, mu)."""
    _require_upper(lam)
    _require_upper(mu)
    return 0.5 * _log_ratio(*_entropy_ratio(lam)) + 0.5 * _log_ratio(*_entropy_ratio(mu))


def classify(entropy: float) -> EntropyReport:
    """Regime and coefficient: D = 1 - e^(-2S) for S >= 0, A = 1 - e^(2S) for S < 0."""
    if math.isnan(entropy):
        raise DomainError("entropy is NaN")
    entropy = _snap_zero(entropy)
    if entropy >= 0:
        coefficient = 1.0 if math.isinf(entropy) else -math.expm1(-2 * entropy)
        return EntropyReport(entropy=entropy, regime=DISSIPATIVE, coefficient=coefficient)

    coefficient = 1.0 if math.isinf(entropy) else -math.expm1(2 * entropy)
    return EntropyReport(entropy=entropy, regime=ACCUMULATIVE, coefficient=coefficient)


def entropy_report(system: LSystem) -> EntropyReport:
    return classify(c_entropy(system))


def closed_dissipation_d(lambda0: complex) -> float:
    """8 Im l0 (|l0|^2 + 1) / (|l0|^2 + 2 Im l0 + 1)^2"""
    _require_upper(lambda0)
    modulus_sq = abs(lambda0) ** 2
    b = lambda0.imag
    return 8 * b * (modulus_sq + 1) / (modulus_sq + 2 * b + 1) ** 2


def closed_accumulation_a(lambda0: complex) -> float:
    # same formula as the dissipation coefficient of the d model
    return closed_dissipation_d(lambda0)


def symmetric_axis(x_range: tuple[float, float], step: float) -> np.ndarray:
    """Grid step * k over a range symmetric about 0; x = 0 is hit exactly."""
    low, high = x_range
    if step <= 0:
        raise DomainError(f"step must be positive, got {step}")
    if not math.isclose(low, -high) or high < 0:
        raise DomainError(f"scan range {x_range} must be symmetric about 0")
    half = int(round(high / step))
    return step * np.arange(-half, half + 1)


def _scan(closed_form, a: float, x_range, step, pick) -> tuple[float, float]:
    if a <= 0:
        raise DomainError(f"height a must be positive, got {a}")
    if a == 1:
        raise DomainError("a = 1 puts lambda0 = i on the scan line, where the entropy is unbounded")

    xs = symmetric_axis(x_range, step)
    values = np.array([closed_form(complex(x, a)) for x in xs])
    index = int(pick(values))
    return float(xs[index]), float(values[index])


def argmax_scan_d(a: float, x_range=SCAN_X_RANGE, step: float = SCAN_STEP) -> tuple[float, float]:
    """Grid maximizer of the d-model entropy along lambda0 = x + a i."""
    return _scan(closed_entropy_d, a, x_range, step, np.argmax)


def argmin_scan_a(a: float, x_range=SCAN_X_RANGE, step: float = SCAN_STEP) -> tuple[float, float]:
    """Grid minimizer of the a-model entropy along lambda0 = x + a i."""
    return _scan(closed_entropy_a, a, x_range, step, np.argmin)


def _axis(low: float, high: float, step: float) -> np.ndarray:
    first, last = int(round(low / step)), int(round(high / step))
    return np.round(step * np.arange(first, last + 1), 12)


def entropy_surface(
    kind: str,
    x_range=SURFACE_X_RANGE,
    y_range=SURFACE_Y_RANGE,
    step: float = SURFACE_STEP,
) -> SurfaceGrid:
    """Closed-form entropy sampled over lambda0 = x + y i."""
    closed_forms = {"d": closed_entropy_d, "a": closed_entropy_a}
    if kind not in closed_forms:
        raise DomainError(f"surface kind must be 'd' or 'a', got '{kind}'")
    if step <= 0:
        raise DomainError(f"step must be positive, got {step}")
    if y_range[0] <= 0:
        raise DomainError(f"y range must be strictly positive, got {y_range}")

    x_axis = _axis(*x_range, step)
    y_axis = _axis(*y_range, step)
    y_axis = y_axis[y_axis > 0]
    closed_form = closed_forms[kind]
    values = np.array([[closed_form(complex(x, y)) for x in x_axis] for y in y_axis])
    return SurfaceGrid(kind=kind, x_axis=x_axis, y_axis=y_axis, values=values)

