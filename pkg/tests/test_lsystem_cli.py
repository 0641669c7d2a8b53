"""
End-to-end tests for lsystem_cli.main
"""
import csv
import io
import json
import math

import numpy as np
import pytest

from lsystem import load_lsystem
from lsystem_cli import EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, EXIT_SPECTRAL, main
from models import build_theta_a, build_theta_d, build_theta_m


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_model_to_file(capsys, tmp_path):
    path = tmp_path / "d.json"
    code, _, err = run(capsys, "model", "--kind", "d", "--lambda0", "1+1i", "--out", str(path))

    assert code == EXIT_OK
    assert "✅" in err
    np.testing.assert_allclose(load_lsystem(str(path)).T, np.diag([1 + 1j, -1 + 1j]))


def test_model_to_stdout(capsys):
    code, out, _ = run(capsys, "model", "--kind", "a", "--lambda0", "0+1i")
    data = json.loads(out)

    assert code == EXIT_OK
    assert (data["n"], data["m"]) == (2, 2)
    assert data["J"] == [[[-1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [-1.0, 0.0]]]


def test_model_rejects_lower_half_plane(capsys):
    code, _, err = run(capsys, "model", "--kind", "d", "--lambda0", "1-1i")
    assert code == EXIT_INPUT
    assert "❌ DomainError" in err


def test_model_rejects_unparseable_complex(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["model", "--kind", "d", "--lambda0", "one"])
    assert excinfo.value.code == 2


@pytest.mark.parametrize(
    "builder, entropy, coefficient, regime",
    [
        (lambda: build_theta_d(1 + 1j), math.log(5), 0.96, "dissipative"),
        (lambda: build_theta_m(1 + 1j), 0.0, 0.0, "dissipative"),
    ],
)
def test_entropy_command(capsys, system_file, builder, entropy, coefficient, regime):
    code, out, _ = run(capsys, "entropy", system_file(builder()))
    payload = json.loads(out)

    assert code == EXIT_OK
    assert payload["regime"] == regime
    assert payload["entropy"] == pytest.approx(entropy, abs=1e-12)
    assert payload["coefficient"] == pytest.approx(coefficient, abs=1e-12)


def test_entropy_command_infinite(capsys, system_file):
    code, out, _ = run(capsys, "entropy", system_file(build_theta_a(1j)))
    assert code == EXIT_OK
    assert json.loads(out) == {"entropy": "-inf", "regime": "accumulative", "coefficient": 1.0}


def test_eval_impedance(capsys, system_file):
    code, out, _ = run(capsys, "eval", system_file(build_theta_d(1j)), "--z=0+2i", "--what", "impedance")
    payload = json.loads(out)

    assert code == EXIT_OK
    assert payload["z"] == [0.0, 2.0]
    np.testing.assert_allclose(np.array(payload["value"])[..., 1], 0.5 * np.eye(2), atol=1e-15)
    np.testing.assert_allclose(np.array(payload["value"])[..., 0], np.zeros((2, 2)), atol=1e-15)


def test_eval_negative_point(capsys, system_file):
    code, out, _ = run(capsys, "eval", system_file(build_theta_d(1 + 1j)), "--z=-1.5+0.5i")
    assert code == EXIT_OK
    assert json.loads(out)["what"] == "transfer"


def test_eval_on_spectrum_is_spectral_error(capsys, system_file):
    code, _, err = run(capsys, "eval", system_file(build_theta_d(1 + 1j)), "--z", "1+1i")
    assert code == EXIT_SPECTRAL
    assert "SpectrumHit" in err


def test_missing_system_file(capsys, tmp_path):
    code, _, err = run(capsys, "entropy", str(tmp_path / "absent.json"))
    assert code == EXIT_INPUT
    assert "❌" in err


def test_couple_then_entropy(capsys, tmp_path):
    left, right, coupled = (str(tmp_path / name) for name in ("left.json", "right.json", "coupled.json"))
    assert main(["model", "--kind", "general", "--lam", "1+1i", "--mu", "1+1i", "--out", left]) == EXIT_OK
    assert main(["model", "--kind", "general", "--lam", "2i", "--mu", "2i", "--out", right]) == EXIT_OK
    assert main(["couple", left, right, "--out", coupled]) == EXIT_OK
    capsys.readouterr()

    code, out, _ = run(capsys, "entropy", coupled)
    payload = json.loads(out)

    assert code == EXIT_OK
    assert payload["entropy"] == pytest.approx(math.log(45), abs=1e-10)
    assert payload["coefficient"] == pytest.approx(2024 / 2025, abs=1e-12)
    assert json.loads((tmp_path / "coupled.json").read_text())["provenance"] == [left, right]


def test_couple_mismatched_directions(capsys, system_file):
    code, _, err = run(capsys, "couple", system_file(build_theta_d(1 + 1j), "d"), system_file(build_theta_m(1 + 1j), "m"))
    assert code == EXIT_INPUT
    assert "JMismatch" in err


def test_surface_command(capsys):
    code, out, _ = run(
        capsys, "surface", "--kind", "d",
        "--x-min=-1", "--x-max", "1", "--y-min", "0.5", "--y-max", "1.5", "--step", "0.5",
    )
    rows = list(csv.reader(io.StringIO(out)))

    assert code == EXIT_OK
    assert rows[0] == ["x", "y", "entropy"]
    assert len(rows) == 1 + 5 * 3
    infinite = [row for row in rows[1:] if row[2] == "+inf"]
    assert infinite == [["0.0", "1.0", "+inf"]]
    cell = next(row for row in rows[1:] if row[:2] == ["1.0", "1.0"])
    assert float(cell[2]) == pytest.approx(math.log(5), abs=1e-12)


def test_surface_rejects_nonpositive_y(capsys):
    code, _, _ = run(capsys, "surface", "--kind", "a", "--y-min", "0", "--y-max", "1", "--step", "0.5")
    assert code == EXIT_INPUT


@pytest.mark.parametrize("n", [1, 2])
def test_example_command(capsys, n):
    code, out, err = run(capsys, "example", "--n", str(n))
    lines = out.splitlines()

    assert code == EXIT_OK
    assert lines[0].startswith("quantity,")
    assert all(line.endswith("PASS") for line in lines[1:])
    assert f"✅ Example {n}" in err


def test_example_summary_line(capsys):
    _, _, err = run(capsys, "example", "--n", "2")
    assert "S_d=1.609438, D_d=0.960000, S_m=0, D_m=0, S_a=-1.609438, A_a=0.960000" in err


def test_example_unknown_number():
    with pytest.raises(SystemExit) as excinfo:
        main(["example", "--n", "3"])
    assert excinfo.value.code == 2


def test_verify_is_deterministic(capsys):
    code, first, err = run(capsys, "verify", "--seed", "7", "--cases", "3")
    _, second, _ = run(capsys, "verify", "--seed", "7", "--cases", "3")
    summary = json.loads(first)

    assert code == EXIT_OK
    assert first == second
    assert summary["passed"] is True
    assert summary["seed"] == 7
    assert [suite["name"] for suite in summary["suites"]] == [
        "oracle", "round_trip", "herglotz", "multiplication", "additivity", "composition", "extremal",
    ]
    assert "✅ All suites passed" in err


def test_verify_rejects_zero_cases():
    with pytest.raises(SystemExit) as excinfo:
        main(["verify", "--cases", "0"])
    assert excinfo.value.code == 2


def test_exit_codes_are_distinct():
    assert len({EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_SPECTRAL}) == 4
