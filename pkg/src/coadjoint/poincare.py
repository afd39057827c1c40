"""The Poincare group, its Lie algebra and its momentum space.

A group element ``(L, C)`` acts on space-time as ``x -> L x + C`` and is
embedded as the 5x5 block matrix ``[[L, C], [0, 1]]``.  A Lie algebra element
``(omega, gamma)`` has ``omega`` antisymmetric and embeds as
``[[G omega, gamma], [0, 0]]``.  A momentum ``(M, P)`` has ``M`` antisymmetric
and embeds as ``[[M, -P], [tP, 0]]``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .minkowski import DEFAULT_TOL, G, LorentzMatrix, frozen, identity as lorentz_identity


def antisymmetry_residual(a) -> float:
    a = np.asarray(a, dtype=np.float64)
    return float(np.max(np.abs(a + a.T))) if a.size else 0.0


def check_antisymmetric(a: np.ndarray, name: str, tol: float = DEFAULT_TOL) -> None:
    # relative to the largest entry: products of big boosts carry big entries
    scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
    if antisymmetry_residual(a) > tol * scale:
        raise ValidationError(f"{name} is not antisymmetric (residual {antisymmetry_residual(a):.3e})")


def as_lorentz(L, tol: float = DEFAULT_TOL) -> LorentzMatrix:
    return L if isinstance(L, LorentzMatrix) else LorentzMatrix.from_array(L, tol)


@dataclass(frozen=True, eq=False)
class PoincareElement:
    L: LorentzMatrix
    C: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "L", as_lorentz(self.L))
        object.__setattr__(self, "C", frozen(self.C, (4,)))

    @classmethod
    def identity(cls) -> "PoincareElement":
        return cls(lorentz_identity(), np.zeros(4))

    @classmethod
    def translation(cls, C) -> "PoincareElement":
        return cls(lorentz_identity(), C)

    def matrix(self) -> np.ndarray:
        m = np.eye(5)
        m[:4, :4] = self.L.m
        m[:4, 4] = self.C
        return m


@dataclass(frozen=True, eq=False)
class LieElement:
    """Tangent vector at the identity: ``delta L = G omega``, ``delta C = gamma``."""

    omega: np.ndarray
    gamma: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "omega", frozen(self.omega, (4, 4)))
        object.__setattr__(self, "gamma", frozen(self.gamma, (4,)))
        check_antisymmetric(self.omega, "omega")

    def matrix(self) -> np.ndarray:
        m = np.zeros((5, 5))
        m[:4, :4] = G @ self.omega
        m[:4, 4] = self.gamma
        return m

    @classmethod
    def from_matrix(cls, m) -> "LieElement":
        m = np.asarray(m, dtype=np.float64)
        return cls(G @ m[:4, :4], m[:4, 4])


@dataclass(frozen=True, eq=False)
class Momentum:
    """Poincare momentum ``J = {M, P}`` with ``P = (p_x, p_y, p_z, E)``."""

    M: np.ndarray
    P: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "M", frozen(self.M, (4, 4)))
        object.__setattr__(self, "P", frozen(self.P, (4,)))
        check_antisymmetric(self.M, "M")

    @property
    def E(self) -> float:
        return float(self.P[3])

    @property
    def p(self) -> np.ndarray:
        return self.P[:3]

    @property
    def spin(self) -> np.ndarray:
        return spin_passage_decompose(self.M)[0]

    @property
    def passage(self) -> np.ndarray:
        return spin_passage_decompose(self.M)[1]

    def matrix(self) -> np.ndarray:
        """The 5x5 antisymmetric form ``[[M, -P], [tP, 0]]``."""
        m = np.zeros((5, 5))
        m[:4, :4] = self.M
        m[:4, 4] = -self.P
        m[4, :4] = self.P
        return m

    @classmethod
    def from_matrix(cls, m) -> "Momentum":
        m = np.asarray(m, dtype=np.float64)
        if m.shape != (5, 5):
            raise ValidationError(f"momentum matrix must be 5x5, got {m.shape}")
        check_antisymmetric(m, "momentum matrix")
        return cls(m[:4, :4], m[4, :4])

    def to_vector(self) -> np.ndarray:
        """Coordinates ``(E, p_x, p_y, p_z, f_x, f_y, f_z, l_x, l_y, l_z)``."""
        l, f = spin_passage_decompose(self.M)
        return np.concatenate([[self.P[3]], self.P[:3], f, l])

    @classmethod
    def from_vector(cls, v) -> "Momentum":
        v = np.asarray(v, dtype=np.float64)
        if v.shape != (10,):
            raise ValidationError(f"expected 10 momentum coordinates, got {v.shape}")
        P = np.concatenate([v[1:4], v[:1]])
        return cls(spin_passage_compose(v[7:10], v[4:7]), P)


def compose(a: PoincareElement, b: PoincareElement) -> PoincareElement:
    return PoincareElement(a.L @ b.L, a.L.m @ b.C + a.C)


def inverse(g: PoincareElement) -> PoincareElement:
    Linv = g.L.inv()
    return PoincareElement(Linv, -(Linv.m @ g.C))


def act_on_point(g: PoincareElement, x) -> np.ndarray:
    return g.L.m @ np.asarray(x, dtype=np.float64) + g.C


def adjoint(g: PoincareElement, d: LieElement) -> LieElement:
    """``g . d . g^-1`` evaluated on the embedded 5x5 matrices."""
    return LieElement.from_matrix(g.matrix() @ d.matrix() @ inverse(g).matrix())


def coadjoint(g: PoincareElement, J: Momentum) -> Momentum:
    """Closed-form coadjoint action.

    ``P' = L P`` and ``M' = L M tL + C tP' - P' tC``.
    """
    L, C = g.L.m, g.C
    P1 = L @ J.P
    M1 = L @ J.M @ L.T + np.outer(C, P1) - np.outer(P1, C)
    return Momentum(M1, P1)


def coadjoint_matrix(g: PoincareElement, Jm) -> np.ndarray:
    """Coadjoint action on the 5x5 momentum matrix: ``g Jm tg``."""
    Jm = np.asarray(Jm, dtype=np.float64)
    if Jm.shape != (5, 5):
        raise ValidationError(f"momentum matrix must be 5x5, got {Jm.shape}")
    check_antisymmetric(Jm, "momentum matrix")
    gm = g.matrix()
    return gm @ Jm @ gm.T


def invariant_scalar(J: Momentum, d: LieElement) -> float:
    """Pairing ``1/2 Tr(M omega) + tP G gamma``."""
    return float(0.5 * np.trace(J.M @ d.omega) + J.P @ G @ d.gamma)


def mass_squared(P) -> float:
    P = np.asarray(P, dtype=np.float64)
    return float(P[3] * P[3] - P[0] * P[0] - P[1] * P[1] - P[2] * P[2])


def spin_passage_decompose(M) -> tuple[np.ndarray, np.ndarray]:
    """Split antisymmetric ``M`` into spin vector ``l`` and passage vector."""
    M = np.asarray(M, dtype=np.float64)
    if M.shape != (4, 4):
        raise ValidationError(f"M must be 4x4, got {M.shape}")
    check_antisymmetric(M, "M")
    l = np.array([M[2, 1], M[0, 2], M[1, 0]])
    f = np.array([M[0, 3], M[1, 3], M[2, 3]])
    return l, f


def spin_passage_compose(l, passage) -> np.ndarray:
    lx, ly, lz = np.asarray(l, dtype=np.float64)
    fx, fy, fz = np.asarray(passage, dtype=np.float64)
    return np.array(
        [
            [0.0, -lz, ly, fx],
            [lz, 0.0, -lx, fy],
            [-ly, lx, 0.0, fz],
            [-fx, -fy, -fz, 0.0],
        ]
    )
