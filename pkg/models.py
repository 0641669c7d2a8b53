"""
Model L-systems on C^2 and their closed-form transfer and impedance functions.

    d        T = diag(l0, -conj(l0)),  J = I       (dissipative)
    m        T = diag(l0, conj(l0)),   J = diag(1, -1)  (mixed)
    a        T = diag(conj(l0), -l0),  J = -I      (accumulative)
    general  T = diag(lam, mu),        J = I

All models pin the basis to the standard one, so the channel operator is
diag(sqrt(Im l0), sqrt(Im l0)) (or diag(sqrt(Im lam), sqrt(Im mu))).
The closed forms are written out independently of lsystem.transfer and
serve as oracles for it.
"""

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

import cmatrix as cm
from config import POLE_GUARD
from errors import DomainError, PoleHit, SystemFileError
from lsystem import LSystem, make_lsystem

MODEL_KINDS = ("d", "m", "a", "general")


@dataclass(frozen=True)
class ModelSpec:
    kind: str
    lambda0: Optional[complex] = None
    lam: Optional[complex] = None
    mu: Optional[complex] = None

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise DomainError(f"unknown model kind '{self.kind}' (expected one of {', '.join(MODEL_KINDS)})")
        if self.kind == "general":
            if self.lam is None or self.mu is None:
                raise DomainError("general models need both lambda and mu")
            _require_upper(self.lam, "lambda")
            _require_upper(self.mu, "mu")
        else:
            if self.lambda0 is None:
                raise DomainError(f"model kind '{self.kind}' needs lambda0")
            _require_upper(self.lambda0, "lambda0")


def _require_upper(value: complex, name: str) -> None:
    if not value.imag > 0:
        raise DomainError(f"Im {name} must be positive, got {value}")


_SPEC_FIELDS = (("lambda0", "lambda0"), ("lam", "lambda"), ("mu", "mu"))


def spec_to_json(spec: ModelSpec) -> dict:
    """{"kind", "lambda0" | "lambda" + "mu"} with [re, im] pairs; unused fields omitted."""
    data = {"kind": spec.kind}
    for attribute, key in _SPEC_FIELDS:
        value = getattr(spec, attribute)
        if value is not None:
            data[key] = [float(value.real), float(value.imag)]
    return data


def spec_from_json(data: dict) -> ModelSpec:
    try:
        values = {
            attribute: complex(*data[key]) if key in data else None
            for attribute, key in _SPEC_FIELDS
        }
        return ModelSpec(data["kind"], **values)
    except (KeyError, TypeError) as e:
        raise SystemFileError(f"missing or malformed model field: {e}") from e


def _channel(*imaginary_parts: float) -> np.ndarray:
    return cm.diag([math.sqrt(b) for b in imaginary_parts])


def build_theta_d(lambda0: complex) -> LSystem:
    _require_upper(lambda0, "lambda0")
    b = lambda0.imag
    return make_lsystem(
        cm.diag([lambda0, -lambda0.conjugate()]),
        _channel(b, b),
        cm.identity(2),
    )


def build_theta_m(lambda0: complex) -> LSystem:
    _require_upper(lambda0, "lambda0")
    b = lambda0.imag
    return make_lsystem(
        cm.diag([lambda0, lambda0.conjugate()]),
        _channel(b, b),
        cm.diag([1, -1]),
    )


def build_theta_a(lambda0: complex) -> LSystem:
    _require_upper(lambda0, "lambda0")
    b = lambda0.imag
    return make_lsystem(
        cm.diag([lambda0.conjugate(), -lambda0]),
        _channel(b, b),
        cm.scalar_mul(-1, cm.identity(2)),
    )


def build_theta_general(lam: complex, mu: complex) -> LSystem:
    _require_upper(lam, "lambda")
    _require_upper(mu, "mu")
    return make_lsystem(
        cm.diag([lam, mu]),
        _channel(lam.imag, mu.imag),
        cm.identity(2),
    )


def build_model(spec: ModelSpec) -> LSystem:
    if spec.kind == "d":
        return build_theta_d(spec.lambda0)
    if spec.kind == "m":
        return build_theta_m(spec.lambda0)
    if spec.kind == "a":
        return build_theta_a(spec.lambda0)
    return build_theta_general(spec.lam, spec.mu)


def _guard(z: complex, poles: list[complex]) -> None:
    for pole in poles:
        if z == pole or abs(z - pole) < POLE_GUARD * (1 + abs(pole)):
            raise PoleHit(z, pole)


def transfer_poles(spec: ModelSpec) -> list[complex]:
    if spec.kind == "general":
        return [spec.lam, spec.mu]

    l0 = spec.lambda0
    if spec.kind == "d":
        return [l0, -l0.conjugate()]
    if spec.kind == "m":
        return [l0, l0.conjugate()]
    return [l0.conjugate(), -l0]


def impedance_poles(spec: ModelSpec) -> list[complex]:
    """Spectrum of Re T for the model."""
    if spec.kind == "general":
        return [complex(spec.lam.real), complex(spec.mu.real)]

    a = spec.lambda0.real
    if spec.kind == "m":
        return [complex(a)]
    return [complex(a), complex(-a)]


def closed_transfer(spec: ModelSpec, z: complex) -> np.ndarray:
    """Closed-form W(z) of a model; every model's W is diagonal."""
    _guard(z, transfer_poles(spec))

    if spec.kind == "general":
        lam, mu = spec.lam, spec.mu
        return cm.diag([
            (lam.conjugate() - z) / (lam - z),
            (mu.conjugate() - z) / (mu - z),
        ])

    l0 = spec.lambda0
    l0_bar = l0.conjugate()
    if spec.kind == "d":
        entries = [(l0_bar - z) / (l0 - z), (l0 + z) / (l0_bar + z)]
    elif spec.kind == "m":
        entries = [(l0_bar - z) / (l0 - z), (l0 - z) / (l0_bar - z)]
    else:
        entries = [(l0 - z) / (l0_bar - z), (l0_bar + z) / (l0 + z)]
    return cm.diag(entries)


def closed_impedance(spec: ModelSpec, z: complex) -> np.ndarray:
    """Closed-form V(z) of a model."""
    _guard(z, impedance_poles(spec))

    if spec.kind == "general":
        lam, mu = spec.lam, spec.mu
        return cm.diag([lam.imag / (lam.real - z), mu.imag / (mu.real - z)])

    a, b = spec.lambda0.real, spec.lambda0.imag
    if spec.kind == "m":
        return cm.scalar_mul(b / (a - z), cm.identity(2))
    # d and a share Re T = diag(a, -a)
    return cm.diag([b / (a - z), -b / (a + z)])


def closed_coupled_transfer(lam1: complex, mu1: complex, lam2: complex, mu2: complex, z: complex) -> np.ndarray:
    """Product of two general models' transfer functions, left factor first."""
    left = closed_transfer(ModelSpec("general", lam=lam1, mu=mu1), z)
    right = closed_transfer(ModelSpec("general", lam=lam2, mu=mu2), z)
    return cm.mat_mul(left, right)


def parse_complex(text: str) -> complex:
    """
    Parse a complex literal written the way lambda0 is usually written:
    "1+1i", "1-2i", "2i", "-0.5", "1+i". Whitespace, Python's j suffix,
    parentheses and digit separators are rejected.
    """
    if not text or any(c.isspace() or c in "jJ()_" for c in text):
        raise DomainError(f"invalid complex literal '{text}'")

    literal = text.replace("i", "j")
    # "1+j" / "j" need an explicit unit coefficient for complex()
    if literal.endswith(("+j", "-j")) or literal == "j":
        literal = literal[:-1] + "1j"
    try:
        value = complex(literal)
    except ValueError as e:
        raise DomainError(f"invalid complex literal '{text}'") from e

    if not cmath.isfinite(value):
        raise DomainError(f"complex literal '{text}' is not finite")
    return value
