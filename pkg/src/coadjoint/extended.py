"""Charged extensions of the Poincare group.

One closed extra dimension per charge.  An element ``(nu, phi, L, C)`` acts as

    zeta_i -> nu * zeta_i + nu * phi_i
    x      -> L x + C

and embeds as the ``(n + 5)``-square block matrix
``[[nu I_n, 0, nu phi], [0, L, C], [0, 0, 1]]``.  With ``nu`` pinned to ``+1``
this is the plain 5D extension (charge conserved); letting ``nu = -1`` gives
the eight-component group in which ``nu = -1`` is charge conjugation.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import poincare
from .errors import ValidationError
from .minkowski import G, LorentzMatrix, frozen, identity as lorentz_identity
from .poincare import Momentum, PoincareElement, as_lorentz, check_antisymmetric


def check_sign(value, name: str) -> int:
    if value not in (1, -1):
        raise ValidationError(f"{name} must be +1 or -1, got {value!r}")
    return int(value)


def charge_vector(values, name: str) -> np.ndarray:
    arr = np.atleast_1d(np.array(values, dtype=np.float64))
    if arr.ndim != 1:
        raise ValidationError(f"{name} must be a flat list of scalars")
    return frozen(arr)


def _check_dims(n_expected: int, n_got: int, what: str) -> None:
    if n_expected != n_got:
        raise ValidationError(f"{what}: element carries {n_expected} charge dimensions, input has {n_got}")


@dataclass(frozen=True, eq=False)
class ExtendedElement:
    nu: int
    phi: np.ndarray
    L: LorentzMatrix
    C: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "nu", check_sign(self.nu, "nu"))
        object.__setattr__(self, "phi", charge_vector(self.phi, "phi"))
        object.__setattr__(self, "L", as_lorentz(self.L))
        object.__setattr__(self, "C", frozen(self.C, (4,)))
        if self.phi.size < 1:
            raise ValidationError("an extended element needs at least one charge dimension")

    @property
    def n(self) -> int:
        return self.phi.size

    @property
    def poincare(self) -> PoincareElement:
        return PoincareElement(self.L, self.C)

    @classmethod
    def identity(cls, n: int = 1) -> "ExtendedElement":
        return cls(1, np.zeros(n), lorentz_identity(), np.zeros(4))

    @classmethod
    def c_symmetry(cls, n: int = 1) -> "ExtendedElement":
        """The charge-conjugation element ``nu = -1`` with everything else trivial."""
        return cls(-1, np.zeros(n), lorentz_identity(), np.zeros(4))

    def matrix(self) -> np.ndarray:
        n = self.n
        m = np.eye(n + 5)
        m[:n, :n] *= self.nu
        m[:n, -1] = self.nu * self.phi
        m[n:n + 4, n:n + 4] = self.L.m
        m[n:n + 4, -1] = self.C
        return m


@dataclass(frozen=True, eq=False)
class ExtendedLieElement:
    dphi: np.ndarray
    omega: np.ndarray
    gamma: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "dphi", charge_vector(self.dphi, "dphi"))
        object.__setattr__(self, "omega", frozen(self.omega, (4, 4)))
        object.__setattr__(self, "gamma", frozen(self.gamma, (4,)))
        check_antisymmetric(self.omega, "omega")

    @property
    def n(self) -> int:
        return self.dphi.size

    def matrix(self) -> np.ndarray:
        n = self.n
        m = np.zeros((n + 5, n + 5))
        m[:n, -1] = self.dphi
        m[n:n + 4, n:n + 4] = G @ self.omega
        m[n:n + 4, -1] = self.gamma
        return m

    @classmethod
    def from_matrix(cls, m, n: int) -> "ExtendedLieElement":
        m = np.asarray(m, dtype=np.float64)
        return cls(m[:n, -1], G @ m[n:n + 4, n:n + 4], m[n:n + 4, -1])


@dataclass(frozen=True, eq=False)
class ChargedMomentum:
    """Momentum ``{q_1..q_n, M, P}``; ``n = 0`` is allowed (uncharged twin group)."""

    q: np.ndarray
    M: np.ndarray
    P: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "q", charge_vector(self.q, "q"))
        object.__setattr__(self, "M", frozen(self.M, (4, 4)))
        object.__setattr__(self, "P", frozen(self.P, (4,)))
        check_antisymmetric(self.M, "M")

    @property
    def n(self) -> int:
        return self.q.size

    @property
    def poincare(self) -> Momentum:
        return Momentum(self.M, self.P)

    @property
    def E(self) -> float:
        return float(self.P[3])

    @classmethod
    def from_poincare(cls, q, J: Momentum) -> "ChargedMomentum":
        return cls(q, J.M, J.P)

    def to_vector(self) -> np.ndarray:
        """Coordinates ``(q_1..q_n, E, p_x, p_y, p_z, f_x, f_y, f_z, l_x, l_y, l_z)``."""
        return np.concatenate([self.q, self.poincare.to_vector()])

    @classmethod
    def from_vector(cls, v, n: int) -> "ChargedMomentum":
        v = np.asarray(v, dtype=np.float64)
        return cls.from_poincare(v[:n], Momentum.from_vector(v[n:]))


@dataclass(frozen=True, eq=False)
class ExtendedPoint:
    zeta: np.ndarray
    x: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "zeta", charge_vector(self.zeta, "zeta"))
        object.__setattr__(self, "x", frozen(self.x, (4,)))


def compose_ext(a: ExtendedElement, b: ExtendedElement) -> ExtendedElement:
    _check_dims(a.n, b.n, "compose_ext")
    return ExtendedElement(a.nu * b.nu, b.phi + b.nu * a.phi, a.L @ b.L, a.L.m @ b.C + a.C)


def inverse_ext(g: ExtendedElement) -> ExtendedElement:
    Linv = g.L.inv()
    return ExtendedElement(g.nu, -g.nu * g.phi, Linv, -(Linv.m @ g.C))


def act_on_point_ext(g: ExtendedElement, p: ExtendedPoint) -> ExtendedPoint:
    _check_dims(g.n, p.zeta.size, "act_on_point_ext")
    return ExtendedPoint(g.nu * p.zeta + g.nu * g.phi, g.L.m @ p.x + g.C)


def adjoint_ext(g: ExtendedElement, d: ExtendedLieElement) -> ExtendedLieElement:
    """Conjugation ``g . d . g^-1`` on the embedded matrices."""
    _check_dims(g.n, d.n, "adjoint_ext")
    conj = g.matrix() @ d.matrix() @ inverse_ext(g).matrix()
    return ExtendedLieElement.from_matrix(conj, g.n)


def coadjoint_ext(g: ExtendedElement, J: ChargedMomentum) -> ChargedMomentum:
    """``q' = nu q``; ``(M, P)`` move exactly as under the Poincare coadjoint action."""
    _check_dims(g.n, J.n, "coadjoint_ext")
    moved = poincare.coadjoint(g.poincare, J.poincare)
    return ChargedMomentum(g.nu * J.q, moved.M, moved.P)


def c_symmetry(J: ChargedMomentum) -> ChargedMomentum:
    """Charge conjugation: every charge flips, energy, momentum and spin stay."""
    return coadjoint_ext(ExtendedElement.c_symmetry(J.n), J)


def invariant_scalar_ext(J: ChargedMomentum, d: ExtendedLieElement) -> float:
    """``sum_i q_i dphi_i + 1/2 Tr(M omega) + tP G gamma``."""
    _check_dims(J.n, d.n, "invariant_scalar_ext")
    return float(J.q @ d.dphi + 0.5 * np.trace(J.M @ d.omega) + J.P @ G @ d.gamma)


def require_trivial_sign(g: ExtendedElement) -> ExtendedElement:
    """Guard for the plain 5D extension, where ``nu`` is pinned to ``+1``."""
    if g.nu != 1:
        raise ValidationError("the charge-conserving extension requires nu = +1")
    return g

