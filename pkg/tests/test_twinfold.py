import itertools

import numpy as np
import pytest

from coadjoint import sampling
from coadjoint.errors import ValidationError
from coadjoint.extended import ChargedMomentum, ExtendedLieElement, invariant_scalar_ext
from coadjoint.minkowski import A_S, A_T, G, Component, identity
from coadjoint.oracle import reconstruct_coadjoint
from coadjoint.poincare import PoincareElement, coadjoint, mass_squared
from coadjoint.reduction import spin_scalar
from coadjoint.twinfold import (
    ParticleState,
    SymmetryTag,
    TwinElement,
    TwinPoint,
    act_on_state,
    act_on_twin_point,
    adjoint_twin,
    classify_symmetry,
    coadjoint_twin,
    compose_twin,
    default_probe,
    inverse_twin,
    representative,
    symmetry_effect_table,
)

SIGN_CLASSES = list(itertools.product((1, -1), (1, -1), (Component.NEUTRAL, Component.SPACE_REVERSING)))


def _scale(*arrays):
    return max(1.0, *(float(np.abs(a).max()) for a in arrays))


def _discrete(mu, nu, n=1):
    return TwinElement(mu, nu, np.zeros(n), identity(), np.zeros(4))


def test_compose_examples():
    e = TwinElement.identity(1)
    np.testing.assert_array_equal(compose_twin(e, e).matrix(), np.eye(7))
    flip = _discrete(-1, 1)
    sq = compose_twin(flip, flip)
    assert (sq.mu, sq.nu) == (1, 1)
    np.testing.assert_array_equal(sq.matrix(), np.eye(7))


@pytest.mark.parametrize("n", [0, 2])
def test_compose_matches_embedded_product(rng, n):
    for _ in range(100):
        a, b = sampling.random_twin(rng, n), sampling.random_twin(rng, n)
        ref = a.matrix() @ b.matrix()
        np.testing.assert_allclose(compose_twin(a, b).matrix(), ref, atol=1e-12 * _scale(ref))


def test_inverse_matches_numeric_inversion(rng):
    for _ in range(100):
        g = sampling.random_twin(rng, 2)
        ref = np.linalg.inv(g.matrix())
        np.testing.assert_allclose(inverse_twin(g).matrix(), ref, atol=1e-9 * _scale(ref))


def test_storage_normalization():
    g = TwinElement.from_lorentz(A_T, np.zeros(4))
    assert g.mu == -1
    assert g.L_o.component is Component.SPACE_REVERSING
    np.testing.assert_array_equal(g.L.m, A_T)
    with pytest.raises(ValidationError, match="orthochron"):
        TwinElement(1, 1, [], A_T, np.zeros(4))
    with pytest.raises(ValidationError):
        TwinElement(2, 1, [], np.eye(4), np.zeros(4))


def test_action_on_points():
    x = np.array([1.0, -2.0, 0.5, 3.0])
    p = TwinPoint(1, [0.4], x)
    same = act_on_twin_point(TwinElement.identity(1), p)
    assert same.fold == 1
    np.testing.assert_array_equal(same.x, x)
    out = act_on_twin_point(_discrete(-1, 1), p)
    assert out.fold == -1
    np.testing.assert_array_equal(out.x, -x)
    np.testing.assert_array_equal(out.zeta, [-0.4])


def test_action_on_points_matches_embedding(rng):
    for _ in range(50):
        g = sampling.random_twin(rng, 2)
        p = TwinPoint(sampling.sign(rng), rng.normal(size=2), rng.normal(size=4))
        out = act_on_twin_point(g, p)
        ref = g.matrix() @ np.concatenate([[p.fold], p.zeta, p.x, [1.0]])
        np.testing.assert_allclose(
            np.concatenate([[out.fold], out.zeta, out.x]), ref[:-1], atol=1e-12 * _scale(ref)
        )


def test_adjoint_identity(rng):
    d = sampling.random_extended_lie(rng, 1)
    np.testing.assert_allclose(adjoint_twin(TwinElement.identity(1), d).matrix(), d.matrix(), atol=1e-15)


def test_adjoint_phase_law(rng):
    # the resolved law: dphi' = mu nu dphi
    d = ExtendedLieElement([1.0], np.zeros((4, 4)), np.zeros(4))
    np.testing.assert_array_equal(adjoint_twin(_discrete(-1, 1), d).dphi, [-1.0])
    for _ in range(50):
        g = sampling.random_twin(rng, 2)
        d = sampling.random_extended_lie(rng, 2)
        np.testing.assert_allclose(adjoint_twin(g, d).dphi, g.kappa * d.dphi, atol=1e-13)


def test_adjoint_translation_law(rng):
    # the resolved law: gamma' = -L_o G omega L_o^-1 C + mu L_o gamma
    for mu, nu, parity in SIGN_CLASSES:
        g = sampling.random_twin(rng, 1, mu, nu, parity)
        d = sampling.random_extended_lie(rng, 1)
        Lo, C = g.L_o.m, g.C
        dL = Lo @ G @ d.omega @ np.linalg.inv(Lo)
        out = adjoint_twin(g, d)
        np.testing.assert_allclose(G @ out.omega, dL, atol=1e-11 * _scale(dL))
        np.testing.assert_allclose(out.gamma, -dL @ C + mu * Lo @ d.gamma, atol=1e-11 * _scale(dL, C))


def test_adjoint_matches_conjugation(rng):
    for _ in range(100):
        g = sampling.random_twin(rng, 2)
        d = sampling.random_extended_lie(rng, 2)
        big = np.zeros((8, 8))
        big[1:, 1:] = d.matrix()
        ref = g.matrix() @ big @ np.linalg.inv(g.matrix())
        np.testing.assert_allclose(adjoint_twin(g, d).matrix(), ref[1:, 1:], atol=1e-11 * _scale(ref))
        assert not ref[0].any() and not ref[:, 0].any()


def test_coadjoint_examples(rng):
    J = sampling.random_charged_momentum(rng, 1)
    out = coadjoint_twin(_discrete(-1, 1), J)
    np.testing.assert_array_equal(out.q, -J.q)
    np.testing.assert_array_equal(out.P, -J.P)
    assert np.sign(out.E) == -np.sign(J.E)
    out = coadjoint_twin(_discrete(1, -1), J)
    np.testing.assert_array_equal(out.q, -J.q)
    np.testing.assert_array_equal(out.P, J.P)


def test_coadjoint_agrees_with_oracle(rng):
    for mu, nu, parity in SIGN_CLASSES:
        for _ in range(10):
            g = sampling.random_twin(rng, 2, mu, nu, parity)
            J = sampling.random_charged_momentum(rng, 2)
            a, b = coadjoint_twin(g, J).to_vector(), reconstruct_coadjoint(g, J).to_vector()
            assert np.max(np.abs(a - b)) <= 1e-9 * _scale(a)


@pytest.mark.parametrize("mu, nu, parity", SIGN_CLASSES)
def test_duality_per_sign_class(rng, mu, nu, parity):
    for _ in range(50):
        g = sampling.random_twin(rng, 2, mu, nu, parity)
        J = sampling.random_charged_momentum(rng, 2)
        d = sampling.random_extended_lie(rng, 2)
        S = invariant_scalar_ext(J, d)
        assert abs(invariant_scalar_ext(coadjoint_twin(g, J), adjoint_twin(g, d)) - S) <= 1e-10 * (1 + abs(S))


def test_restriction_to_poincare(rng):
    for _ in range(100):
        g = sampling.random_twin(rng, 0, nu=1)
        J = sampling.random_momentum(rng)
        out = coadjoint_twin(g, ChargedMomentum.from_poincare([], J))
        ref = coadjoint(PoincareElement(g.L, g.C), J)
        np.testing.assert_allclose(out.M, ref.M, rtol=0, atol=1e-12 * _scale(ref.M))
        np.testing.assert_allclose(out.P, ref.P, rtol=0, atol=1e-12 * _scale(ref.P))


@pytest.mark.parametrize("mu, nu, parity", SIGN_CLASSES)
def test_sign_laws_exact(rng, mu, nu, parity):
    for _ in range(25):
        g = sampling.random_twin(rng, 3, mu, nu, parity)
        state = ParticleState(sampling.sign(rng), sampling.random_charged_momentum(rng, 3))
        out = act_on_state(g, state)
        assert out.fold == mu * state.fold
        assert np.array_equal(out.momentum.q, mu * nu * state.momentum.q)
        assert np.sign(out.momentum.E) == mu * np.sign(state.momentum.E)


@pytest.mark.parametrize("mu, nu, parity", SIGN_CLASSES)
def test_casimirs_invariant(rng, mu, nu, parity):
    for _ in range(20):
        g = sampling.random_twin(rng, 1, mu, nu, parity)
        J = sampling.random_charged_momentum(rng, 1)
        out = coadjoint_twin(g, J)
        assert mass_squared(out.P) == pytest.approx(mass_squared(J.P), rel=1e-9)
        assert spin_scalar(out.poincare) == pytest.approx(spin_scalar(J.poincare), rel=1e-9, abs=1e-12)


def test_classify_symmetry_examples():
    assert classify_symmetry(_discrete(1, -1)).tag is SymmetryTag.C
    assert classify_symmetry(_discrete(-1, 1)).tag is SymmetryTag.TWIN_ANTIMATTER
    assert classify_symmetry(_discrete(-1, -1)).tag is SymmetryTag.FOLD_CHANGE
    assert classify_symmetry(TwinElement.identity()).tag is SymmetryTag.IDENTITY
    cls = classify_symmetry(TwinElement(1, -1, [0.0], A_S, np.zeros(4)))
    assert cls.parity is Component.SPACE_REVERSING
    assert cls.label == "C (P)"


def test_squares_return_to_our_fold(rng):
    for _ in range(100):
        g = sampling.random_twin(rng, 1)
        assert classify_symmetry(compose_twin(g, g)).mu == 1


def test_representative():
    g = representative(-1, 1, Component.SPACE_REVERSING, n=2)
    assert g.n == 2
    np.testing.assert_array_equal(g.L_o.m, A_S)
    np.testing.assert_array_equal(g.C, np.zeros(4))


def _rows(table):
    return {(r.symmetry.mu, r.symmetry.nu, r.symmetry.parity): r for r in table}


def test_symmetry_table_rows():
    rows = _rows(symmetry_effect_table())
    assert len(rows) == 8
    ident = rows[(1, 1, Component.NEUTRAL)]
    assert (ident.energy, ident.momentum, ident.charge, ident.spin, ident.fold) == ("E", "p", "q", "s", "fold")
    c = rows[(1, -1, Component.NEUTRAL)]
    assert (c.energy, c.momentum, c.charge, c.spin, c.fold) == ("E", "p", "-q", "s", "fold")
    for (mu, nu, parity), row in rows.items():
        assert row.mass_squared == "m2"
        assert row.spin == "s"
        assert row.fold == ("fold" if mu == 1 else "-fold")
        assert row.energy == ("E" if mu == 1 else "-E")
        assert row.charge == ("q" if mu * nu == 1 else "-q")
    twin = rows[(-1, 1, Component.NEUTRAL)]
    assert twin.symmetry.tag is SymmetryTag.TWIN_ANTIMATTER
    assert (twin.charge, twin.fold) == ("-q", "-fold")


def test_symmetry_table_is_computed_from_the_probe():
    probe = default_probe()
    neutral = ParticleState(1, ChargedMomentum([0.0], probe.momentum.M, probe.momentum.P))
    rows = _rows(symmetry_effect_table(neutral))
    # an uncharged probe cannot show a charge flip
    assert all(r.charge == "q" for r in rows.values())
    other_fold = ParticleState(-1, probe.momentum)
    assert _rows(symmetry_effect_table(other_fold))[(-1, 1, Component.NEUTRAL)].fold == "-fold"


def test_dimension_mismatch(rng):
    g = sampling.random_twin(rng, 2)
    with pytest.raises(ValidationError, match="charge dimensions"):
        coadjoint_twin(g, sampling.random_charged_momentum(rng, 1))
    with pytest.raises(ValidationError):
        compose_twin(g, sampling.random_twin(rng, 1))
    with pytest.raises(ValidationError):
        act_on_twin_point(g, TwinPoint(1, [0.0], np.zeros(4)))
