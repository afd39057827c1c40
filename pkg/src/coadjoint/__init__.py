"""Coadjoint actions of the Poincare group and its charged and twin-fold extensions."""
from .errors import DegenerateMomentum, NotLorentzError, StructuralError, ValidationError
from .extended import (
    ChargedMomentum,
    ExtendedElement,
    ExtendedLieElement,
    ExtendedPoint,
    act_on_point_ext,
    adjoint_ext,
    c_symmetry,
    coadjoint_ext,
    compose_ext,
    invariant_scalar_ext,
    inverse_ext,
)
from .minkowski import (
    DEFAULT_TOL,
    G,
    Component,
    LorentzMatrix,
    boost,
    classify_component,
    is_lorentz,
    minkowski_inner,
    omega_factor,
    rotation,
)
from .oracle import CoadjointOperator, lie_basis, reconstruct_coadjoint
from .poincare import (
    LieElement,
    Momentum,
    PoincareElement,
    act_on_point,
    adjoint,
    coadjoint,
    coadjoint_matrix,
    compose,
    invariant_scalar,
    inverse,
    mass_squared,
    spin_passage_compose,
    spin_passage_decompose,
)
from .reduction import CanonicalMomentum, canonical_reduce, rest_frame_boost, spin_scalar
from .twinfold import (
    ParticleState,
    SymmetryTag,
    TwinElement,
    TwinMomentum,
    TwinPoint,
    act_on_state,
    act_on_twin_point,
    adjoint_twin,
    classify_symmetry,
    coadjoint_twin,
    compose_twin,
    inverse_twin,
    symmetry_effect_table,
)

__version__ = "0.1.0"
