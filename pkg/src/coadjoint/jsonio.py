"""JSON wire format.

Matrices are row-major lists of 16 doubles (nested 4x4 lists are accepted on
input), four-vectors are ``[x, y, z, t]``.  Output floats carry 17
significant digits so they round-trip exactly.
"""
from __future__ import annotations

import json
import math

import numpy as np

from .errors import ValidationError
from .extended import ChargedMomentum, ExtendedElement, ExtendedLieElement, ExtendedPoint
from .minkowski import DEFAULT_TOL, LorentzMatrix
from .poincare import LieElement, Momentum, PoincareElement
from .reduction import CanonicalMomentum
from .twinfold import ParticleState, TwinElement, TwinPoint

GROUPS = ("poincare", "extended", "eight", "twin")


class PayloadError(ValidationError):
    """Malformed or mismatched JSON payload."""


def _require(obj, *keys):
    if not isinstance(obj, dict):
        raise PayloadError(f"expected a JSON object, got {type(obj).__name__}")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise PayloadError(f"missing key(s): {', '.join(missing)}")


def _floats(value, name: str, shape=None) -> np.ndarray:
    try:
        arr = np.array(value, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise PayloadError(f"{name}: not numeric ({exc})") from None
    if shape is not None and arr.shape != shape:
        raise PayloadError(f"{name}: expected shape {shape}, got {arr.shape}")
    return arr


def matrix_from_json(value, name: str = "matrix") -> np.ndarray:
    arr = _floats(value, name)
    if arr.shape == (16,):
        return arr.reshape(4, 4)
    if arr.shape == (4, 4):
        return arr
    raise PayloadError(f"{name}: expected 16 numbers or a 4x4 array, got shape {arr.shape}")


def lorentz_from_json(value, tol: float = DEFAULT_TOL, name: str = "L") -> LorentzMatrix:
    return LorentzMatrix.from_array(matrix_from_json(value, name), tol)


def _sign(value, name: str) -> int:
    if value not in (1, -1) or isinstance(value, bool):
        raise PayloadError(f"{name} must be 1 or -1, got {value!r}")
    return int(value)


def _list(value, name: str) -> np.ndarray:
    return _floats(value if isinstance(value, list) else [value], name)


def parse_element(group: str, obj, tol: float = DEFAULT_TOL):
    if group == "poincare":
        _require(obj, "L", "C")
        if "nu" in obj or "mu" in obj:
            raise PayloadError("poincare element must not carry nu/mu")
        return PoincareElement(lorentz_from_json(obj["L"], tol), _floats(obj["C"], "C", (4,)))
    if group in ("extended", "eight"):
        _require(obj, "phi", "L", "C")
        if "mu" in obj:
            raise PayloadError(f"{group} element must not carry mu")
        nu = _sign(obj.get("nu", 1), "nu")
        if group == "extended" and nu != 1:
            raise PayloadError("the charge-conserving extension requires nu = 1")
        phi = _list(obj["phi"], "phi")
        return ExtendedElement(nu, phi, lorentz_from_json(obj["L"], tol), _floats(obj["C"], "C", (4,)))
    if group == "twin":
        _require(obj, "mu", "L_o", "C")
        mu = _sign(obj["mu"], "mu")
        nu = _sign(obj.get("nu", 1), "nu")
        phi = _list(obj.get("phi", []), "phi")
        L_o = lorentz_from_json(obj["L_o"], tol, "L_o")
        if not L_o.orthochron:
            raise PayloadError(f"L_o must be orthochron, got {L_o.component.value}")
        return TwinElement(mu, nu, phi, L_o, _floats(obj["C"], "C", (4,)))
    raise PayloadError(f"unknown group {group!r}")


def parse_momentum(group: str, obj):
    _require(obj, "M", "P")
    M = matrix_from_json(obj["M"], "M")
    P = _floats(obj["P"], "P", (4,))
    if group == "poincare":
        if "q" in obj:
            raise PayloadError("poincare momentum must not carry charges")
        return Momentum(M, P)
    if group in ("extended", "eight"):
        _require(obj, "q")
        return ChargedMomentum(_list(obj["q"], "q"), M, P)
    if group == "twin":
        return ChargedMomentum(_list(obj.get("q", []), "q"), M, P)
    raise PayloadError(f"unknown group {group!r}")


def parse_lie(group: str, obj):
    _require(obj, "omega", "gamma")
    omega = matrix_from_json(obj["omega"], "omega")
    gamma = _floats(obj["gamma"], "gamma", (4,))
    if group == "poincare":
        return LieElement(omega, gamma)
    return ExtendedLieElement(_list(obj.get("dphi", []), "dphi"), omega, gamma)


def _flat(a) -> list:
    return [float(x) for x in np.asarray(a).ravel()]


def lorentz_to_json(L: LorentzMatrix) -> list:
    return _flat(L.m)


def to_json(obj) -> dict:
    """JSON-ready dict for any of the package's value types."""
    if isinstance(obj, PoincareElement):
        return {"L": _flat(obj.L.m), "C": _flat(obj.C)}
    if isinstance(obj, ExtendedElement):
        return {"nu": obj.nu, "phi": _flat(obj.phi), "L": _flat(obj.L.m), "C": _flat(obj.C)}
    if isinstance(obj, TwinElement):
        return {"mu": obj.mu, "nu": obj.nu, "phi": _flat(obj.phi), "L_o": _flat(obj.L_o.m), "C": _flat(obj.C)}
    if isinstance(obj, Momentum):
        return {"M": _flat(obj.M), "P": _flat(obj.P)}
    if isinstance(obj, ChargedMomentum):
        return {"q": _flat(obj.q), "M": _flat(obj.M), "P": _flat(obj.P)}
    if isinstance(obj, LieElement):
        return {"omega": _flat(obj.omega), "gamma": _flat(obj.gamma)}
    if isinstance(obj, ExtendedLieElement):
        return {"dphi": _flat(obj.dphi), "omega": _flat(obj.omega), "gamma": _flat(obj.gamma)}
    if isinstance(obj, ExtendedPoint):
        return {"zeta": _flat(obj.zeta), "x": _flat(obj.x)}
    if isinstance(obj, TwinPoint):
        return {"fold": obj.fold, "zeta": _flat(obj.zeta), "x": _flat(obj.x)}
    if isinstance(obj, ParticleState):
        return {"fold": obj.fold, "momentum": to_json(obj.momentum)}
    if isinstance(obj, CanonicalMomentum):
        return {"s": obj.s, "p": obj.p, "E": obj.E, "g_reducing": to_json(obj.g_reducing)}
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def format_float(x: float) -> str:
    if not math.isfinite(x):
        return json.dumps(x)
    s = f"{x:.17g}"
    if not any(c in s for c in ".en"):
        s += ".0"
    return s


def _scalar(value) -> str | None:
    if value is None or isinstance(value, (bool, np.bool_)):
        return json.dumps(None if value is None else bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(float(value))
    if isinstance(value, str):
        return json.dumps(value)
    return None


def dumps(value, indent: int = 2, _level: int = 0) -> str:
    """Deterministic JSON with 17-significant-digit floats; flat numeric lists stay on one line."""
    s = _scalar(value)
    if s is not None:
        return s
    pad, inner = " " * (indent * _level), " " * (indent * (_level + 1))
    if isinstance(value, np.ndarray):
        value = value.tolist()
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [_scalar(v) for v in value]
        if all(i is not None for i in items):
            return "[" + ", ".join(items) + "]"
        body = ",\n".join(inner + dumps(v, indent, _level + 1) for v in value)
        return "[\n" + body + "\n" + pad + "]"
    if isinstance(value, dict):
        if not value:
            return "{}"
        body = ",\n".join(
            f"{inner}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in value.items()
        )
        return "{\n" + body + "\n" + pad + "}"
    raise TypeError(f"cannot serialise {type(value).__name__}")
