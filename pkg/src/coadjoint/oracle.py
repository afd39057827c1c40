"""Brute-force coadjoint action recovered from invariance of the pairing.

For a group element ``g`` and a momentum ``J`` the image ``J'`` is the unique
solution of

    S(J', Ad_g b_i) = S(J, b_i)    for every basis element b_i,

with ``Ad_g`` evaluated by matrix conjugation.  Nothing here uses the
closed-form coadjoint formulas, which is the point: it is the independent
route those formulas are checked against.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
import scipy.linalg

from . import extended, poincare, twinfold
from .errors import StructuralError
from .extended import ChargedMomentum, ExtendedElement, ExtendedLieElement
from .minkowski import G
from .poincare import LieElement, Momentum, PoincareElement
from .twinfold import TwinElement

PIVOT_TOL = 1e-12


def _omega_generators() -> list[np.ndarray]:
    gens = []
    for k in range(3):
        # rotation about axis k: delta L is the cross-product matrix of e_k
        dL = np.zeros((4, 4))
        i, j = (k + 1) % 3, (k + 2) % 3
        dL[j, i], dL[i, j] = 1.0, -1.0
        gens.append(G @ dL)
    for k in range(3):
        dL = np.zeros((4, 4))
        dL[k, 3] = dL[3, k] = 1.0
        gens.append(G @ dL)
    return gens


def lie_basis(n: int | None = None) -> list:
    """Ordered basis: 3 rotations, 3 boosts, 4 translations, then ``n`` charge directions.

    ``n=None`` gives the plain Poincare algebra (``LieElement``); an integer
    gives ``ExtendedLieElement`` with that many charge dimensions.
    """
    omegas = _omega_generators()
    gammas = list(np.eye(4))
    zero4, zero44 = np.zeros(4), np.zeros((4, 4))
    if n is None:
        return [LieElement(w, zero4) for w in omegas] + [LieElement(zero44, c) for c in gammas]
    zphi = np.zeros(n)
    basis = [ExtendedLieElement(zphi, w, zero4) for w in omegas]
    basis += [ExtendedLieElement(zphi, zero44, c) for c in gammas]
    basis += [ExtendedLieElement(e, zero44, zero4) for e in np.eye(n)]
    return basis


@dataclass(frozen=True)
class _Group:
    n: int | None
    adjoint: Callable
    pairing: Callable
    from_vector: Callable

    @property
    def dim(self) -> int:
        return 10 + (self.n or 0)

    def momentum_basis(self) -> list:
        return [self.from_vector(e) for e in np.eye(self.dim)]


def _group_of(g) -> _Group:
    if isinstance(g, PoincareElement):
        return _Group(None, poincare.adjoint, poincare.invariant_scalar, Momentum.from_vector)
    if isinstance(g, ExtendedElement):
        n = g.n
        return _Group(
            n, extended.adjoint_ext, extended.invariant_scalar_ext, lambda v: ChargedMomentum.from_vector(v, n)
        )
    if isinstance(g, TwinElement):
        n = g.n
        return _Group(
            n, twinfold.adjoint_twin, extended.invariant_scalar_ext, lambda v: ChargedMomentum.from_vector(v, n)
        )
    raise TypeError(f"no Lie basis for {type(g).__name__}")


def _pairing_matrix(group: _Group, basis: list) -> np.ndarray:
    moms = group.momentum_basis()
    return np.array([[group.pairing(e, b) for e in moms] for b in basis])


def pairing_condition_number(n: int | None = None) -> float:
    """Condition number of the pairing between the momentum coordinates and the canonical basis."""
    if n is None:
        group = _group_of(PoincareElement.identity())
    else:
        group = _Group(n, None, extended.invariant_scalar_ext, lambda v: ChargedMomentum.from_vector(v, n))
    return float(np.linalg.cond(_pairing_matrix(group, lie_basis(n))))


class CoadjointOperator:
    """Factored linear system for one group element, reusable across momenta."""

    def __init__(self, g):
        self.g = g
        self._group = _group_of(g)
        self._basis = lie_basis(self._group.n)
        moved = [self._group.adjoint(g, b) for b in self._basis]
        A = _pairing_matrix(self._group, moved)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
            self._lu = scipy.linalg.lu_factor(A)
        pivot = float(np.min(np.abs(np.diag(self._lu[0]))))
        if pivot < PIVOT_TOL:
            raise StructuralError(f"duality system is singular (smallest pivot {pivot:.3e})")

    def __call__(self, J):
        rhs = np.array([self._group.pairing(J, b) for b in self._basis])
        return self._group.from_vector(scipy.linalg.lu_solve(self._lu, rhs))


def reconstruct_coadjoint(g, J):
    """Coadjoint image of ``J`` under ``g``, from the duality relation alone."""
    return CoadjointOperator(g)(J)
