"""
Tests for the model systems and their closed forms
"""
import numpy as np
import pytest
from numpy.testing import assert_allclose

from errors import DomainError, PoleHit, SystemFileError
from lsystem import impedance, transfer
from models import (
    ModelSpec,
    build_model,
    build_theta_a,
    build_theta_d,
    build_theta_general,
    build_theta_m,
    closed_coupled_transfer,
    closed_impedance,
    closed_transfer,
    impedance_poles,
    parse_complex,
    spec_from_json,
    spec_to_json,
    transfer_poles,
)

POINTS = [3j, 0.5 + 2j, -1.5 + 0.5j, 3 - 2j, 7.0, 0.25 - 0.75j]


def test_example_one_matrices():
    assert_allclose(build_theta_d(1j).T, np.diag([1j, 1j]))
    assert_allclose(build_theta_m(1j).T, np.diag([1j, -1j]))
    assert_allclose(build_theta_a(1j).T, np.diag([-1j, -1j]))
    assert_allclose(build_theta_a(1j).J, -np.eye(2))
    assert_allclose(build_theta_m(1j).J, np.diag([1, -1]))
    for builder in (build_theta_d, build_theta_m, build_theta_a):
        assert_allclose(builder(1j).K, np.eye(2))


def test_example_two_main_operators():
    assert_allclose(build_theta_d(1 + 1j).T, np.diag([1 + 1j, -1 + 1j]))
    assert_allclose(build_theta_m(1 + 1j).T, np.diag([1 + 1j, 1 - 1j]))
    assert_allclose(build_theta_a(1 + 1j).T, np.diag([1 - 1j, -1 - 1j]))


def test_channel_scales_with_imaginary_part():
    assert_allclose(build_theta_d(0.5 + 4j).K, 2 * np.eye(2))
    assert_allclose(build_theta_general(1 + 1j, 3 + 9j).K, np.diag([1, 3]))


@pytest.mark.parametrize("builder", [build_theta_d, build_theta_m, build_theta_a])
@pytest.mark.parametrize("lambda0", [1 - 1j, 2.0, -3 + 0j])
def test_builders_reject_lower_half_plane(builder, lambda0):
    with pytest.raises(DomainError):
        builder(lambda0)


def test_general_requires_upper_mu():
    with pytest.raises(DomainError):
        build_theta_general(1 + 1j, 1 - 1j)


@pytest.mark.parametrize(
    "spec",
    [
        ModelSpec("d", lambda0=1 + 1j),
        ModelSpec("m", lambda0=0.3 + 2j),
        ModelSpec("a", lambda0=-2 + 0.5j),
        ModelSpec("general", lam=1 + 1j, mu=2j),
    ],
)
def test_closed_forms_match_general_definitions(spec):
    system = build_model(spec)
    for z in POINTS:
        assert_allclose(transfer(system, z), closed_transfer(spec, z), atol=1e-12)
        assert_allclose(impedance(system, z), closed_impedance(spec, z), atol=1e-12)


def test_mixed_model_impedance_is_scalar():
    V = closed_impedance(ModelSpec("m", lambda0=1 + 1j), 0.5j)
    assert_allclose(V, (1 / (1 - 0.5j)) * np.eye(2))


def test_example_one_impedance_is_minus_inverse_z():
    for kind in ("d", "m", "a"):
        spec = ModelSpec(kind, lambda0=1j)
        for z in POINTS:
            assert_allclose(closed_impedance(spec, z), -np.eye(2) / z, atol=1e-15)


def test_poles():
    spec = ModelSpec("d", lambda0=1 + 1j)
    assert transfer_poles(spec) == [1 + 1j, -1 + 1j]
    assert impedance_poles(spec) == [1, -1]
    assert impedance_poles(ModelSpec("m", lambda0=1 + 1j)) == [1]


def test_pole_hit():
    spec = ModelSpec("d", lambda0=1 + 1j)
    with pytest.raises(PoleHit) as excinfo:
        closed_transfer(spec, 1 + 1j)
    assert excinfo.value.pole == 1 + 1j
    with pytest.raises(PoleHit):
        closed_impedance(spec, -1.0)


def test_model_spec_validation():
    with pytest.raises(DomainError):
        ModelSpec("x", lambda0=1j)
    with pytest.raises(DomainError):
        ModelSpec("d")
    with pytest.raises(DomainError):
        ModelSpec("general", lam=1j)


def test_closed_coupled_transfer():
    z = 1 - 2j
    expected = (1 - 1j - z) / (1 + 1j - z) * (-2j - z) / (2j - z)
    assert_allclose(closed_coupled_transfer(1 + 1j, 1 + 1j, 2j, 2j, z), expected * np.eye(2))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1+1i", 1 + 1j),
        ("0+1i", 1j),
        ("1-2i", 1 - 2j),
        ("2i", 2j),
        ("-0.5", -0.5 + 0j),
        ("1+i", 1 + 1j),
        ("i", 1j),
        ("-1.5+0.5i", -1.5 + 0.5j),
        ("1e-3+2i", 0.001 + 2j),
    ],
)
def test_parse_complex(text, expected):
    assert parse_complex(text) == expected


@pytest.mark.parametrize(
    "text",
    ["", "1 + 1i", "abc", "inf", "nan", "1+1i+2", "j", "1+1j", "2J", "(1+1i)", "1_0+1i"],
)
def test_parse_complex_rejects(text):
    with pytest.raises(DomainError):
        parse_complex(text)


def test_spec_json_layout():
    assert spec_to_json(ModelSpec("d", lambda0=1 + 1j)) == {"kind": "d", "lambda0": [1.0, 1.0]}
    assert spec_to_json(ModelSpec("general", lam=1 + 1j, mu=2j)) == {
        "kind": "general",
        "lambda": [1.0, 1.0],
        "mu": [0.0, 2.0],
    }


@pytest.mark.parametrize(
    "spec",
    [ModelSpec("a", lambda0=-0.25 + 3j), ModelSpec("general", lam=0.5 + 0.5j, mu=-1 + 2j)],
)
def test_spec_json_restores_spec(spec):
    assert spec_from_json(spec_to_json(spec)) == spec


def test_spec_from_json_rejects_bad_data():
    with pytest.raises(SystemFileError):
        spec_from_json({"lambda0": [0.0, 1.0]})
    with pytest.raises(SystemFileError):
        spec_from_json({"kind": "d", "lambda0": ["a", "b"]})
    with pytest.raises(DomainError):
        spec_from_json({"kind": "d", "lambda0": [0.0, -1.0]})
