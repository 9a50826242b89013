"""JSON / shorthand specifications for Hadamards, states, channels and unitary sets.

Accepted forms, all also readable from a file path or an inline JSON string:

* Hadamard: ``"fourier"``, ``"identity"``, ``"rotation:0.52"``,
  ``{"rotation": 0.52}``, ``{"d": 2, "re": [[...]], "im": [[...]]}``
* state: ``"mes"``, ``"werner:0.8"``, ``{"type": "mes"}``,
  ``{"type": "werner", "alpha": 0.8}``, ``{"type": "raw", "re": ..., "im": ...}``
* channel: ``"identity"``, ``"dephasing"``, ``"depolarising:0.9"``,
  ``{"type": "depolarising", "beta": 0.9}``, ``{"type": "kraus", "ops": [{"re":..., "im":...}, ...]}``
"""

from __future__ import annotations

import json
import os
from typing import Any

import numpy as np

from .encodings import (
    ImperfectHadamard,
    UnitarySet,
    fourier_hadamard,
    identity_hadamard,
    pauli_product_set,
    rotation_hadamard,
)
from .errors import SDCError
from .linalg import DensityOperator
from .resources import (
    KrausChannel,
    dephasing_channel,
    depolarising_channel,
    identity_channel,
    preshared_state,
    standard_mes,
    werner_state,
)


class ConfigError(SDCError, ValueError):
    pass


def load_spec(spec: Any) -> Any:
    """Resolve a spec given as an object, inline JSON, a file path or a shorthand string."""
    if not isinstance(spec, str):
        return spec
    text = spec.strip()
    if text[:1] in "{[":
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid inline JSON: {exc}") from exc
    if os.path.isfile(text):
        with open(text) as fh:
            try:
                return json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"{text}: invalid JSON: {exc}") from exc
    return text


def _shorthand(text: str) -> tuple[str, float | None]:
    name, _, arg = text.partition(":")
    name = name.strip().lower().replace("_", "-")
    if not arg:
        return name, None
    try:
        return name, float(arg)
    except ValueError as exc:
        raise ConfigError(f"bad numeric argument in {text!r}") from exc


def matrix_from_json(obj: dict) -> np.ndarray:
    try:
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj.get("im", np.zeros_like(re)), dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"matrix objects need 're' (and optionally 'im') arrays: {exc}") from exc
    if re.shape != im.shape or re.ndim != 2:
        raise ConfigError("'re' and 'im' must be matrices of the same shape")
    return re + 1j * im


def matrix_to_json(m: np.ndarray) -> dict:
    m = np.asarray(m)
    return {"re": np.real(m).tolist(), "im": np.imag(m).tolist()}


def hadamard_to_json(h: ImperfectHadamard) -> dict:
    return {"d": h.d, **matrix_to_json(h.matrix)}


def hadamard_from_spec(spec: Any, d: int) -> ImperfectHadamard:
    obj = load_spec(spec)
    if isinstance(obj, str):
        name, arg = _shorthand(obj)
        if name == "fourier":
            return fourier_hadamard(d)
        if name == "identity":
            return identity_hadamard(d)
        if name == "rotation":
            if arg is None or d != 2:
                raise ConfigError("rotation preset needs an angle and d = 2")
            return rotation_hadamard(arg)
        raise ConfigError(f"unknown Hadamard preset {obj!r}")
    if isinstance(obj, dict):
        if "rotation" in obj:
            if d != 2:
                raise ConfigError("rotation preset needs d = 2")
            return rotation_hadamard(float(obj["rotation"]))
        m = matrix_from_json(obj)
        if "d" in obj and int(obj["d"]) != m.shape[0]:
            raise ConfigError("declared 'd' does not match the matrix size")
        if m.shape[0] != d:
            raise ConfigError(f"Hadamard is {m.shape[0]}-dimensional, expected {d}")
        return ImperfectHadamard(m)
    raise ConfigError(f"cannot interpret Hadamard spec {spec!r}")


def state_from_spec(spec: Any, d: int) -> tuple[DensityOperator, dict]:
    """Return the state together with a normalised description of it."""
    obj = load_spec(spec)
    if isinstance(obj, str):
        name, arg = _shorthand(obj)
        obj = {"type": name}
        if arg is not None:
            obj["alpha"] = arg
    if not isinstance(obj, dict) or "type" not in obj:
        raise ConfigError(f"cannot interpret state spec {spec!r}")
    kind = str(obj["type"]).lower()
    if kind == "mes":
        return standard_mes(d), {"type": "werner", "alpha": 1.0}
    if kind == "werner":
        alpha = float(obj.get("alpha", 1.0))
        return werner_state(alpha, d=d), {"type": "werner", "alpha": alpha}
    if kind == "raw":
        m = matrix_from_json(obj)
        dims = tuple(obj.get("dims", (d, d)))
        if dims != (d, d):
            raise ConfigError(f"raw state dims {dims} do not match d = {d}")
        return preshared_state(m, dims), {"type": "raw"}
    raise ConfigError(f"unknown state type {kind!r}")


def channel_from_spec(spec: Any, d: int) -> tuple[KrausChannel, dict]:
    obj = load_spec(spec)
    if isinstance(obj, str):
        name, arg = _shorthand(obj)
        obj = {"type": name}
        if arg is not None:
            obj["beta"] = arg
    if not isinstance(obj, dict) or "type" not in obj:
        raise ConfigError(f"cannot interpret channel spec {spec!r}")
    kind = str(obj["type"]).lower().replace("depolarizing", "depolarising")
    if kind == "identity":
        return identity_channel(d), {"type": "depolarising", "beta": 1.0}
    if kind == "depolarising":
        beta = float(obj.get("beta", 1.0))
        return depolarising_channel(beta, d), {"type": "depolarising", "beta": beta}
    if kind == "dephasing":
        return dephasing_channel(d), {"type": "dephasing"}
    if kind == "kraus":
        ops = tuple(matrix_from_json(o) for o in obj.get("ops", ()))
        ch = KrausChannel(ops)
        if ch.d_in != d:
            raise ConfigError(f"Kraus channel acts on dimension {ch.d_in}, expected {d}")
        return ch, {"type": "kraus"}
    raise ConfigError(f"unknown channel type {kind!r}")


def unitaries_from_spec(spec: Any, d: int | None = None) -> UnitarySet:
    """A unitary set from a JSON list of matrices, or ``{"hadamard": ...}`` for a Pauli-product set."""
    obj = load_spec(spec)
    if isinstance(obj, dict) and "hadamard" in obj:
        if d is None:
            raise ConfigError("a Pauli-product set spec needs d")
        return pauli_product_set(hadamard_from_spec(obj["hadamard"], d))
    if not isinstance(obj, list) or not obj:
        raise ConfigError("unitary set must be a non-empty JSON list of matrices")
    us = UnitarySet(tuple(matrix_from_json(o) for o in obj))
    if d is not None and us.dim != d:
        raise ConfigError(f"unitaries act on dimension {us.dim}, expected {d}")
    return us
