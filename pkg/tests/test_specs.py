import json

import numpy as np
import pytest

from sdc_lab.encodings import fourier_hadamard, pauli_x
from sdc_lab.specs import (
    ConfigError,
    channel_from_spec,
    hadamard_from_spec,
    hadamard_to_json,
    load_spec,
    matrix_from_json,
    matrix_to_json,
    state_from_spec,
    unitaries_from_spec,
)


def test_matrix_roundtrip(rng):
    m = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    np.testing.assert_array_equal(matrix_from_json(json.loads(json.dumps(matrix_to_json(m)))), m)


def test_matrix_errors():
    with pytest.raises(ConfigError):
        matrix_from_json({"im": [[0]]})
    with pytest.raises(ConfigError):
        matrix_from_json({"re": [[1, 0]], "im": [[0]]})


@pytest.mark.parametrize("spec", ["fourier", "Fourier", {"re": fourier_hadamard(3).matrix.real.tolist(),
                                                         "im": fourier_hadamard(3).matrix.imag.tolist()}])
def test_hadamard_forms(spec):
    np.testing.assert_allclose(hadamard_from_spec(spec, 3).matrix, fourier_hadamard(3).matrix, atol=1e-15)


def test_hadamard_rotation_and_file(tmp_path):
    a = hadamard_from_spec("rotation:0.3", 2)
    b = hadamard_from_spec({"rotation": 0.3}, 2)
    np.testing.assert_array_equal(a.matrix, b.matrix)
    path = tmp_path / "h.json"
    path.write_text(json.dumps(hadamard_to_json(a)))
    np.testing.assert_array_equal(hadamard_from_spec(str(path), 2).matrix, a.matrix)
    np.testing.assert_array_equal(hadamard_from_spec(json.dumps(hadamard_to_json(a)), 2).matrix, a.matrix)


@pytest.mark.parametrize("spec,d", [("rotation", 2), ("rotation:0.3", 3), ("bogus", 2),
                                    ("rotation:abc", 2), ("{not json", 2), (42, 2)])
def test_hadamard_errors(spec, d):
    with pytest.raises(ConfigError):
        hadamard_from_spec(spec, d)


def test_hadamard_size_mismatch():
    with pytest.raises(ConfigError):
        hadamard_from_spec(hadamard_to_json(fourier_hadamard(2)), 3)


def test_state_forms():
    rho, meta = state_from_spec("mes", 2)
    assert meta == {"type": "werner", "alpha": 1.0}
    rho, meta = state_from_spec("werner:0.4", 3)
    assert meta["alpha"] == 0.4 and rho.dims == (3, 3)
    raw = {"type": "raw", "re": (np.eye(4) / 4).tolist()}
    rho, meta = state_from_spec(raw, 2)
    assert meta == {"type": "raw"}
    np.testing.assert_allclose(rho.matrix, np.eye(4) / 4)


def test_state_errors():
    with pytest.raises(ConfigError):
        state_from_spec("ghz", 2)
    with pytest.raises(ValueError):
        state_from_spec("werner:1.5", 2)
    with pytest.raises(ConfigError):
        state_from_spec({"type": "raw", "re": np.eye(4).tolist(), "dims": [4, 1]}, 2)


def test_channel_forms():
    e, meta = channel_from_spec("identity", 2)
    assert meta == {"type": "depolarising", "beta": 1.0}
    e, meta = channel_from_spec("depolarizing:0.25", 2)
    assert meta == {"type": "depolarising", "beta": 0.25}
    np.testing.assert_allclose(e(np.diag([1.0, 0])), np.diag([0.625, 0.375]))
    e, meta = channel_from_spec({"type": "kraus", "ops": [matrix_to_json(pauli_x(2))]}, 2)
    np.testing.assert_allclose(e(np.diag([1.0, 0])), np.diag([0, 1.0]))
    _, meta = channel_from_spec("dephasing", 3)
    assert meta == {"type": "dephasing"}


def test_channel_errors():
    with pytest.raises(ConfigError):
        channel_from_spec("amplitude", 2)
    with pytest.raises(ValueError):
        channel_from_spec({"type": "kraus", "ops": [matrix_to_json(0.5 * np.eye(2))]}, 2)
    with pytest.raises(ConfigError):
        channel_from_spec({"type": "kraus", "ops": [matrix_to_json(np.eye(3))]}, 2)


def test_unitaries():
    u = unitaries_from_spec([matrix_to_json(np.eye(2)), matrix_to_json(pauli_x(2))], 2)
    assert len(u) == 2
    u = unitaries_from_spec({"hadamard": "fourier"}, 3)
    assert len(u) == 9
    with pytest.raises(ConfigError):
        unitaries_from_spec([], 2)
    with pytest.raises(ConfigError):
        unitaries_from_spec([matrix_to_json(np.eye(3))], 2)


def test_load_spec_passthrough():
    assert load_spec({"a": 1}) == {"a": 1}
    assert load_spec("  fourier ") == "fourier"
    assert load_spec('[1, 2]') == [1, 2]
