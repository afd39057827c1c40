"""Minkowski metric, Lorentz matrices and their connected components.

Coordinates are ordered ``(x, y, z, t)`` with signature ``(-, -, -, +)`` and
``c = 1`` throughout.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import NotLorentzError, ValidationError

DEFAULT_TOL = 1e-9

G = np.diag([-1.0, -1.0, -1.0, 1.0])
G.flags.writeable = False

IDENTITY = np.eye(4)
IDENTITY.flags.writeable = False

# the four discrete representatives of the connected components
A_S = np.diag([-1.0, -1.0, -1.0, 1.0])
A_T = np.diag([1.0, 1.0, 1.0, -1.0])
A_ST = -np.eye(4)
for _a in (A_S, A_T, A_ST):
    _a.flags.writeable = False


def frozen(a, shape=None) -> np.ndarray:
    """Return a read-only float64 copy of ``a``, optionally checking its shape."""
    out = np.array(a, dtype=np.float64)
    if shape is not None and out.shape != shape:
        raise ValidationError(f"expected shape {shape}, got {out.shape}")
    if not np.all(np.isfinite(out)):
        raise ValidationError("non-finite entries")
    out.flags.writeable = False
    return out


def four_vector(x, y=None, z=None, t=None) -> np.ndarray:
    """Build a read-only four-vector ``[x, y, z, t]``.

    Accepts either four scalars or a single length-4 sequence.
    """
    if y is None and z is None and t is None:
        return frozen(x, (4,))
    return frozen([x, y, z, t], (4,))


def minkowski_inner(a, b) -> float:
    """``ta G b``, i.e. ``a_t b_t - a_x b_x - a_y b_y - a_z b_z``."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    return float(a[3] * b[3] - a[0] * b[0] - a[1] * b[1] - a[2] * b[2])


def metric_residual(m) -> float:
    """Max-norm of ``tm G m - G``."""
    m = np.asarray(m, dtype=np.float64)
    return float(np.max(np.abs(m.T @ G @ m - G)))


def is_lorentz(m, tol: float = DEFAULT_TOL) -> bool:
    m = np.asarray(m, dtype=np.float64)
    if m.shape != (4, 4) or not np.all(np.isfinite(m)):
        return False
    return metric_residual(m) <= tol


class Component(enum.Enum):
    """Connected component of the Lorentz group."""

    NEUTRAL = "Neutral"
    SPACE_REVERSING = "SpaceReversing"
    TIME_REVERSING = "TimeReversing"
    SPACE_TIME_REVERSING = "SpaceTimeReversing"

    @property
    def orthochron(self) -> bool:
        return self in (Component.NEUTRAL, Component.SPACE_REVERSING)

    @property
    def antichron(self) -> bool:
        return not self.orthochron

    @property
    def time_sign(self) -> int:
        return 1 if self.orthochron else -1

    @property
    def det_sign(self) -> int:
        return 1 if self in (Component.NEUTRAL, Component.SPACE_TIME_REVERSING) else -1


_BY_SIGNS = {
    (1, 1): Component.NEUTRAL,
    (-1, 1): Component.SPACE_REVERSING,
    (-1, -1): Component.TIME_REVERSING,
    (1, -1): Component.SPACE_TIME_REVERSING,
}


def _component_from_signs(m: np.ndarray) -> Component:
    # |det| = 1 and |m_tt| >= 1 for any Lorentz matrix, so neither sign is ambiguous
    det = np.linalg.det(m)
    return _BY_SIGNS[(1 if det > 0 else -1, 1 if m[3, 3] > 0 else -1)]


@dataclass(frozen=True, eq=False)
class LorentzMatrix:
    """A validated 4x4 Lorentz matrix together with its component."""

    m: np.ndarray
    component: Component

    @classmethod
    def from_array(cls, m, tol: float = DEFAULT_TOL) -> "LorentzMatrix":
        arr = np.array(m, dtype=np.float64)
        if arr.shape == (16,):
            arr = arr.reshape(4, 4)
        if not is_lorentz(arr, tol):
            if arr.shape != (4, 4):
                raise NotLorentzError(f"expected a 4x4 matrix, got shape {arr.shape}")
            raise NotLorentzError(
                f"matrix violates tL G L = G: residual {metric_residual(arr):.3e} > {tol:g}"
            )
        return cls._unchecked(arr)

    @classmethod
    def _unchecked(cls, m: np.ndarray) -> "LorentzMatrix":
        # for products and inverses of already-validated matrices
        arr = np.array(m, dtype=np.float64)
        arr.flags.writeable = False
        return cls(arr, _component_from_signs(arr))

    @property
    def mu(self) -> int:
        """Global time sign: ``L = mu * L_o`` with ``L_o`` orthochron."""
        return self.component.time_sign

    @property
    def orthochron(self) -> bool:
        return self.component.orthochron

    def orthochron_part(self) -> "LorentzMatrix":
        return LorentzMatrix._unchecked(self.mu * self.m)

    def inv(self) -> "LorentzMatrix":
        # L^-1 = G tL G, exact for Lorentz matrices
        return LorentzMatrix._unchecked(G @ self.m.T @ G)

    def __matmul__(self, other):
        if isinstance(other, LorentzMatrix):
            return LorentzMatrix._unchecked(self.m @ other.m)
        return self.m @ np.asarray(other)

    def __neg__(self) -> "LorentzMatrix":
        return LorentzMatrix._unchecked(-self.m)

    def __repr__(self) -> str:
        return f"LorentzMatrix({self.component.value}, {self.m.tolist()!r})"


def identity() -> LorentzMatrix:
    return LorentzMatrix._unchecked(IDENTITY)


def _unit_axis(axis, tol: float) -> np.ndarray:
    a = np.asarray(axis, dtype=np.float64)
    if a.shape != (3,) or not np.all(np.isfinite(a)):
        raise ValidationError(f"axis must be a finite 3-vector, got {axis!r}")
    norm = float(np.linalg.norm(a))
    if abs(norm - 1.0) > tol:
        raise ValidationError(f"axis is not normalized (|axis| = {norm!r})")
    return a / norm


def boost(axis, rapidity: float, tol: float = DEFAULT_TOL) -> LorentzMatrix:
    """Pure boost along the unit ``axis``.

    ``boost(n, chi) @ (0, 0, 0, m) == (m sinh(chi) n, m cosh(chi))``.
    """
    n = _unit_axis(axis, tol)
    if not np.isfinite(rapidity):
        raise ValidationError("rapidity must be finite")
    ch, sh = np.cosh(rapidity), np.sinh(rapidity)
    m = np.eye(4)
    m[:3, :3] += (ch - 1.0) * np.outer(n, n)
    m[:3, 3] = sh * n
    m[3, :3] = sh * n
    m[3, 3] = ch
    return LorentzMatrix(frozen(m), Component.NEUTRAL)


def rotation(axis, angle: float, tol: float = DEFAULT_TOL) -> LorentzMatrix:
    """Right-handed spatial rotation by ``angle`` about the unit ``axis``."""
    n = _unit_axis(axis, tol)
    if not np.isfinite(angle):
        raise ValidationError("angle must be finite")
    c, s = np.cos(angle), np.sin(angle)
    cross = np.array([[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]])
    m = np.eye(4)
    m[:3, :3] = c * np.eye(3) + s * cross + (1.0 - c) * np.outer(n, n)
    return LorentzMatrix(frozen(m), Component.NEUTRAL)


def classify_component(L, tol: float = DEFAULT_TOL) -> Component:
    if isinstance(L, LorentzMatrix):
        return L.component
    return LorentzMatrix.from_array(L, tol).component


def _sign(value, name: str) -> int:
    if value not in (1, -1):
        raise ValidationError(f"{name} must be +1 or -1, got {value!r}")
    return int(value)


def omega_factor(alpha: int, beta: int) -> LorentzMatrix:
    """``diag(alpha, alpha, alpha, beta)``; ``omega_factor(a, b) @ L_n`` spans all components."""
    a = _sign(alpha, "alpha")
    b = _sign(beta, "beta")
    return LorentzMatrix._unchecked(np.diag([a, a, a, b]).astype(np.float64))


def sign_decompose(L: LorentzMatrix) -> tuple[int, LorentzMatrix]:
    """Split ``L`` as ``mu * L_o`` with ``L_o`` orthochron."""
    return L.mu, L.orthochron_part()
