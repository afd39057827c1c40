"""Seeded random elements for property tests and the ``verify`` command.

Rapidities are uniform in ``[-3, 3]``, rotation angles uniform in
``[0, 2 pi)``, axes uniform on the sphere and discrete signs uniform.
"""
from __future__ import annotations

import numpy as np

from .extended import ChargedMomentum, ExtendedElement, ExtendedLieElement
from .minkowski import A_S, A_ST, A_T, Component, LorentzMatrix, boost, omega_factor, rotation
from .poincare import LieElement, Momentum, PoincareElement
from .twinfold import TwinElement

MAX_RAPIDITY = 3.0
TRANSLATION_SCALE = 2.0


def rng_for(seed: int, *stream: int) -> np.random.Generator:
    return np.random.default_rng([seed, *stream])


def unit_vector(rng: np.random.Generator) -> np.ndarray:
    while True:
        v = rng.normal(size=3)
        norm = np.linalg.norm(v)
        if norm > 1e-8:
            return v / norm


def sign(rng: np.random.Generator) -> int:
    return int(rng.choice((-1, 1)))


def random_boost(rng) -> LorentzMatrix:
    return boost(unit_vector(rng), rng.uniform(-MAX_RAPIDITY, MAX_RAPIDITY))


def random_rotation(rng) -> LorentzMatrix:
    return rotation(unit_vector(rng), rng.uniform(0.0, 2.0 * np.pi))


def random_neutral(rng) -> LorentzMatrix:
    return random_boost(rng) @ random_rotation(rng)


def random_lorentz(rng, component: Component | None = None) -> LorentzMatrix:
    """Random element of ``component`` (any component when ``None``)."""
    if component is None:
        alpha, beta = sign(rng), sign(rng)
    else:
        # Omega(alpha, beta) has det sign alpha * beta and time sign beta
        alpha, beta = component.det_sign * component.time_sign, component.time_sign
    return omega_factor(alpha, beta) @ random_neutral(rng)


def random_orthochron(rng, component: Component | None = None) -> LorentzMatrix:
    if component is None:
        component = (Component.NEUTRAL, Component.SPACE_REVERSING)[int(rng.integers(2))]
    return random_lorentz(rng, component)


_DISCRETE = tuple(LorentzMatrix._unchecked(a) for a in (A_S, A_T, A_ST))


def random_product(rng, max_factors: int = 5) -> LorentzMatrix:
    """Product of 1..max_factors factors, each a boost, a rotation or a discrete reflection."""
    L = None
    for _ in range(int(rng.integers(1, max_factors + 1))):
        kind = int(rng.integers(3))
        if kind == 0:
            f = random_boost(rng)
        elif kind == 1:
            f = random_rotation(rng)
        else:
            f = _DISCRETE[int(rng.integers(3))]
        L = f if L is None else L @ f
    return L


def random_translation(rng) -> np.ndarray:
    return rng.uniform(-TRANSLATION_SCALE, TRANSLATION_SCALE, size=4)


def random_poincare(rng, component: Component | None = None) -> PoincareElement:
    return PoincareElement(random_lorentz(rng, component), random_translation(rng))


def random_antisymmetric(rng, scale: float = 1.0) -> np.ndarray:
    a = rng.uniform(-scale, scale, size=(4, 4))
    return np.triu(a, 1) - np.triu(a, 1).T


def random_timelike(rng, energy_sign: int | None = None, max_rapidity: float = 1.5) -> np.ndarray:
    """Massive four-momentum with mass in ``[0.5, 2]``."""
    m = rng.uniform(0.5, 2.0)
    s = sign(rng) if energy_sign is None else energy_sign
    chi = rng.uniform(0.0, max_rapidity)
    return s * (boost(unit_vector(rng), chi).m @ np.array([0.0, 0.0, 0.0, m]))


def random_momentum(rng, energy_sign: int | None = None) -> Momentum:
    return Momentum(random_antisymmetric(rng), random_timelike(rng, energy_sign))


def random_lie(rng) -> LieElement:
    return LieElement(random_antisymmetric(rng), rng.uniform(-1.0, 1.0, size=4))


def random_charges(rng, n: int) -> np.ndarray:
    return rng.uniform(-2.0, 2.0, size=n)


def random_charged_momentum(rng, n: int, energy_sign: int | None = None) -> ChargedMomentum:
    return ChargedMomentum.from_poincare(random_charges(rng, n), random_momentum(rng, energy_sign))


def random_extended_lie(rng, n: int) -> ExtendedLieElement:
    d = random_lie(rng)
    return ExtendedLieElement(rng.uniform(-1.0, 1.0, size=n), d.omega, d.gamma)


def random_extended(rng, n: int, nu: int | None = None, component: Component | None = None) -> ExtendedElement:
    nu = sign(rng) if nu is None else nu
    return ExtendedElement(
        nu, rng.uniform(-np.pi, np.pi, size=n), random_lorentz(rng, component), random_translation(rng)
    )


def random_twin(
    rng,
    n: int,
    mu: int | None = None,
    nu: int | None = None,
    parity: Component | None = None,
) -> TwinElement:
    mu = sign(rng) if mu is None else mu
    nu = sign(rng) if nu is None else nu
    return TwinElement(
        mu, nu, rng.uniform(-np.pi, np.pi, size=n), random_orthochron(rng, parity), random_translation(rng)
    )
