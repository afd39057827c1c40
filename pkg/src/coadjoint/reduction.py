"""Reduction of a massive momentum to its sparse normal form.

The normal form has ``P = (0, 0, p, E)`` and an ``M`` whose only non-zero
entries are ``M[0, 1] = -s`` and ``M[1, 0] = s``.  The reducing group element
is assembled from four coadjoint steps, each of them a Poincare element:

1. boost to the rest frame of ``P``;
2. translate in space to cancel the passage vector;
3. rotate the remaining spin vector onto the z axis;
4. optionally boost along z so that ``P`` regains a single component ``p``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateMomentum
from .minkowski import DEFAULT_TOL, LorentzMatrix, boost, identity as lorentz_identity, rotation
from .poincare import (
    Momentum,
    PoincareElement,
    coadjoint,
    compose,
    mass_squared,
    spin_passage_compose,
    spin_passage_decompose,
)

_Z = np.array([0.0, 0.0, 1.0])


@dataclass(frozen=True, eq=False)
class CanonicalMomentum:
    s: float
    p: float
    E: float
    g_reducing: PoincareElement

    def momentum(self) -> Momentum:
        """The sparse momentum this record stands for."""
        M = spin_passage_compose([0.0, 0.0, self.s], [0.0, 0.0, 0.0])
        return Momentum(M, [0.0, 0.0, self.p, self.E])


def _mass(P, tol: float) -> float:
    m2 = mass_squared(P)
    if not m2 > tol:
        raise DegenerateMomentum(f"momentum is not timelike (mass^2 = {m2!r}, tol = {tol:g})")
    return math.sqrt(m2)


def rest_frame_boost(P, tol: float = DEFAULT_TOL) -> LorentzMatrix:
    """Neutral boost ``B`` with ``B P = (0, 0, 0, sign(E) m)``."""
    P = np.asarray(P, dtype=np.float64)
    m = _mass(P, tol)
    sigma = 1.0 if P[3] > 0 else -1.0
    p = sigma * P[:3]
    pnorm = float(np.linalg.norm(p))
    if pnorm == 0.0:
        return lorentz_identity()
    return boost(p / pnorm, -math.asinh(pnorm / m))


def _align_with_z(l: np.ndarray) -> LorentzMatrix:
    s = float(np.linalg.norm(l))
    if s == 0.0:
        return lorentz_identity()
    u = l / s
    axis = np.cross(u, _Z)
    sin_t = float(np.linalg.norm(axis))
    if sin_t < 1e-15:
        return lorentz_identity() if u[2] > 0 else rotation([1.0, 0.0, 0.0], math.pi)
    return rotation(axis / sin_t, math.atan2(sin_t, float(u[2])))


def canonical_reduce(J: Momentum, momentum: float = 0.0, tol: float = DEFAULT_TOL) -> CanonicalMomentum:
    """Reduce ``J`` to its normal form.

    ``momentum`` selects the z-component ``p`` of the output; the default
    ``0.0`` gives the rest-frame form.  Negative-energy momenta keep
    ``E < 0``.
    """
    m = _mass(J.P, tol)
    sigma = 1.0 if J.P[3] > 0 else -1.0

    g1 = PoincareElement(rest_frame_boost(J.P, tol), np.zeros(4))
    J1 = coadjoint(g1, J)

    _, f1 = spin_passage_decompose(J1.M)
    g2 = PoincareElement.translation(np.append(-f1 / J1.P[3], 0.0))
    J2 = coadjoint(g2, J1)

    l2, _ = spin_passage_decompose(J2.M)
    g3 = PoincareElement(_align_with_z(l2), np.zeros(4))

    g = compose(g3, compose(g2, g1))
    if momentum != 0.0:
        g4 = PoincareElement(boost(_Z, math.asinh(momentum / (sigma * m))), np.zeros(4))
        g = compose(g4, g)

    E = sigma * math.sqrt(m * m + momentum * momentum)
    return CanonicalMomentum(float(np.linalg.norm(l2)), float(momentum), E, g)


def spin_scalar(J: Momentum, tol: float = DEFAULT_TOL) -> float:
    """Length of the spin vector in the rest frame once the passage is cancelled."""
    return canonical_reduce(J, tol=tol).s
