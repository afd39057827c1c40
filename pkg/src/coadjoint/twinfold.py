"""Twin-fold dynamical groups acting on the two-sheet cover of space-time.

An element ``(mu, nu, phi, L_o, C)`` with ``L_o`` orthochron acts as

    fold   -> mu * fold
    zeta_i -> mu nu zeta_i + mu nu phi_i
    x      -> mu L_o x + C

so ``mu = -1`` elements are the antichron ones: they reverse space and time,
flip the energy and carry a state onto the other fold.  ``n = 0`` with
``nu = +1`` is the uncharged group.

The embedded matrix is ``(n + 6)``-square, rows ordered
``(fold, zeta_1..zeta_n, x, y, z, t, 1)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import StructuralError, ValidationError
from .extended import ChargedMomentum, ExtendedLieElement, charge_vector, check_sign
from .minkowski import (
    A_S,
    DEFAULT_TOL,
    Component,
    LorentzMatrix,
    frozen,
    identity as lorentz_identity,
)
from .poincare import as_lorentz, mass_squared
from .reduction import spin_scalar

# same content as the charged momentum; the twin group lets n be 0
TwinMomentum = ChargedMomentum


@dataclass(frozen=True, eq=False)
class TwinElement:
    mu: int
    nu: int
    phi: np.ndarray
    L_o: LorentzMatrix
    C: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "mu", check_sign(self.mu, "mu"))
        object.__setattr__(self, "nu", check_sign(self.nu, "nu"))
        object.__setattr__(self, "phi", charge_vector(self.phi, "phi"))
        object.__setattr__(self, "L_o", as_lorentz(self.L_o))
        object.__setattr__(self, "C", frozen(self.C, (4,)))
        if not self.L_o.orthochron:
            raise ValidationError(
                f"L_o must be orthochron, got {self.L_o.component.value}; "
                "use TwinElement.from_lorentz to split off the sign"
            )

    @classmethod
    def from_lorentz(cls, L, C, nu: int = 1, phi=(), tol: float = DEFAULT_TOL) -> "TwinElement":
        """Build from the full Lorentz slot ``mu L_o``, extracting ``mu`` from its time-time sign."""
        L = as_lorentz(L, tol)
        return cls(L.mu, nu, phi, L.orthochron_part(), C)

    @classmethod
    def identity(cls, n: int = 0) -> "TwinElement":
        return cls(1, 1, np.zeros(n), lorentz_identity(), np.zeros(4))

    @property
    def n(self) -> int:
        return self.phi.size

    @property
    def kappa(self) -> int:
        """Sign acting on the charge dimensions, ``mu * nu``."""
        return self.mu * self.nu

    @property
    def L(self) -> LorentzMatrix:
        """The full Lorentz part ``mu L_o``."""
        return -self.L_o if self.mu < 0 else self.L_o

    def matrix(self) -> np.ndarray:
        n = self.n
        m = np.eye(n + 6)
        m[0, 0] = self.mu
        m[1:n + 1, 1:n + 1] *= self.kappa
        m[1:n + 1, -1] = self.kappa * self.phi
        m[n + 1:n + 5, n + 1:n + 5] = self.mu * self.L_o.m
        m[n + 1:n + 5, -1] = self.C
        return m


@dataclass(frozen=True, eq=False)
class TwinPoint:
    fold: int
    zeta: np.ndarray
    x: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "fold", check_sign(self.fold, "fold"))
        object.__setattr__(self, "zeta", charge_vector(self.zeta, "zeta"))
        object.__setattr__(self, "x", frozen(self.x, (4,)))


@dataclass(frozen=True, eq=False)
class ParticleState:
    fold: int
    momentum: ChargedMomentum

    def __post_init__(self):
        object.__setattr__(self, "fold", check_sign(self.fold, "fold"))


def _check_dims(g: TwinElement, n: int, what: str) -> None:
    if g.n != n:
        raise ValidationError(f"{what}: element carries {g.n} charge dimensions, input has {n}")


def compose_twin(a: TwinElement, b: TwinElement) -> TwinElement:
    _check_dims(a, b.n, "compose_twin")
    L_o = a.L_o @ b.L_o
    if not L_o.orthochron:
        raise StructuralError("product of orthochron matrices left the orthochron subgroup")
    return TwinElement(
        a.mu * b.mu,
        a.nu * b.nu,
        b.phi + b.kappa * a.phi,
        L_o,
        a.mu * (a.L_o.m @ b.C) + a.C,
    )


def inverse_twin(g: TwinElement) -> TwinElement:
    Linv = g.L_o.inv()
    return TwinElement(g.mu, g.nu, -g.kappa * g.phi, Linv, -g.mu * (Linv.m @ g.C))


def act_on_twin_point(g: TwinElement, p: TwinPoint) -> TwinPoint:
    _check_dims(g, p.zeta.size, "act_on_twin_point")
    return TwinPoint(
        g.mu * p.fold,
        g.kappa * p.zeta + g.kappa * g.phi,
        g.mu * (g.L_o.m @ p.x) + g.C,
    )


def _embed_lie(d: ExtendedLieElement) -> np.ndarray:
    m = np.zeros((d.n + 6, d.n + 6))
    m[1:, 1:] = d.matrix()
    return m


def adjoint_twin(g: TwinElement, d: ExtendedLieElement) -> ExtendedLieElement:
    """Conjugation ``g . d . g^-1``; the fold row of the Lie algebra is zero."""
    _check_dims(g, d.n, "adjoint_twin")
    conj = g.matrix() @ _embed_lie(d) @ inverse_twin(g).matrix()
    return ExtendedLieElement.from_matrix(conj[1:, 1:], g.n)


def coadjoint_twin(g: TwinElement, J: ChargedMomentum) -> ChargedMomentum:
    """Closed form.

    ``q' = mu nu q``, ``P' = mu L_o P`` and
    ``M' = L_o M tL_o + mu (C tP tL_o - L_o P tC)``.
    """
    _check_dims(g, J.n, "coadjoint_twin")
    Lo, C, mu = g.L_o.m, g.C, g.mu
    LP = Lo @ J.P
    M1 = Lo @ J.M @ Lo.T + mu * (np.outer(C, LP) - np.outer(LP, C))
    return ChargedMomentum((mu * g.nu) * J.q, M1, mu * LP)


def act_on_state(g: TwinElement, state: ParticleState) -> ParticleState:
    return ParticleState(g.mu * state.fold, coadjoint_twin(g, state.momentum))


class SymmetryTag(enum.Enum):
    IDENTITY = "identity"
    C = "C"
    TWIN_ANTIMATTER = "twin-fold antimatter"
    FOLD_CHANGE = "fold-change"


_TAGS = {
    (1, 1): SymmetryTag.IDENTITY,
    (1, -1): SymmetryTag.C,
    (-1, 1): SymmetryTag.TWIN_ANTIMATTER,
    (-1, -1): SymmetryTag.FOLD_CHANGE,
}


@dataclass(frozen=True)
class SymmetryClass:
    tag: SymmetryTag
    parity: Component
    mu: int
    nu: int

    @property
    def label(self) -> str:
        p = "P" if self.parity is Component.SPACE_REVERSING else "no P"
        return f"{self.tag.value} ({p})"


def classify_symmetry(g: TwinElement) -> SymmetryClass:
    """Sign class ``(mu, nu)`` plus the P-character of the orthochron part."""
    return SymmetryClass(_TAGS[(g.mu, g.nu)], g.L_o.component, g.mu, g.nu)


def representative(mu: int, nu: int, parity: Component, n: int = 1) -> TwinElement:
    """Discrete element of a sign class: ``L_o`` is ``1`` or ``A_s``, no translations."""
    L_o = lorentz_identity() if parity is Component.NEUTRAL else LorentzMatrix._unchecked(A_S)
    return TwinElement(mu, nu, np.zeros(n), L_o, np.zeros(4))


def default_probe() -> ParticleState:
    """Charged, positive-energy, spinning particle on our fold."""
    p = np.array([0.3, -0.2, 0.5])
    E = float(np.sqrt(1.0 + p @ p))
    M = np.array(
        [
            [0.0, -0.7, -0.4, 0.1],
            [0.7, 0.0, -0.2, 0.3],
            [0.4, 0.2, 0.0, -0.2],
            [-0.1, -0.3, 0.2, 0.0],
        ]
    )
    return ParticleState(1, ChargedMomentum([1.0], M, np.append(p, E)))


@dataclass(frozen=True)
class EffectRow:
    symmetry: SymmetryClass
    energy: str
    momentum: str
    charge: str
    spin: str
    fold: str
    mass_squared: str

    def as_dict(self) -> dict:
        return {
            "mu": self.symmetry.mu,
            "nu": self.symmetry.nu,
            "parity": self.symmetry.parity.value,
            "tag": self.symmetry.tag.value,
            "E": self.energy,
            "p": self.momentum,
            "q": self.charge,
            "spin": self.spin,
            "fold": self.fold,
            "mass2": self.mass_squared,
        }


def _effect(before, after, symbol: str, tol: float) -> str:
    before = np.atleast_1d(np.asarray(before, dtype=np.float64))
    after = np.atleast_1d(np.asarray(after, dtype=np.float64))
    scale = tol * max(1.0, float(np.max(np.abs(before))))
    if np.all(np.abs(after - before) <= scale):
        return symbol
    if np.all(np.abs(after + before) <= scale):
        return "-" + symbol
    return "changed"


def symmetry_effect_table(probe: ParticleState | None = None, tol: float = DEFAULT_TOL) -> list[EffectRow]:
    """Apply one representative per sign class to ``probe`` and describe what moved.

    Nothing is tabulated by hand: every entry comes from comparing the probe
    with its image.
    """
    probe = probe or default_probe()
    J = probe.momentum
    s0 = spin_scalar(J.poincare, tol)
    rows = []
    for mu, nu in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        for parity in (Component.NEUTRAL, Component.SPACE_REVERSING):
            g = representative(mu, nu, parity, J.n)
            out = act_on_state(g, probe)
            K = out.momentum
            s1 = spin_scalar(K.poincare, tol)
            rows.append(
                EffectRow(
                    classify_symmetry(g),
                    energy=_effect(J.E, K.E, "E", tol),
                    momentum=_effect(J.P[:3], K.P[:3], "p", tol),
                    charge=_effect(J.q, K.q, "q", tol),
                    spin=_effect(s0, s1, "s", tol),
                    fold=_effect(probe.fold, out.fold, "fold", tol),
                    mass_squared=_effect(mass_squared(J.P), mass_squared(K.P), "m2", tol),
                )
            )
    return rows
