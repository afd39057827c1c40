"""Seeded property suites behind ``coadjoint verify``.

Every suite draws from its own generator, derived from the seed and the suite
name, so adding or reordering suites never shifts another suite's samples.
Functions under test are looked up through their modules at call time.
"""
from __future__ import annotations

import math
import zlib
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import extended, minkowski, oracle, poincare, reduction, twinfold
from . import sampling as smp
from .extended import ChargedMomentum
from .minkowski import A_S, A_ST, A_T, DEFAULT_TOL, Component, G
from .poincare import Momentum, PoincareElement
from .twinfold import ParticleState, SymmetryTag


@dataclass(frozen=True)
class SuiteResult:
    name: str
    cases: int
    max_residual: float
    threshold: float
    failures: int
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.error is None

    def as_dict(self) -> dict:
        out = {
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures,
            # non-finite residuals have no strict-JSON spelling
            "max_residual": self.max_residual if math.isfinite(self.max_residual) else None,
            "threshold": self.threshold,
        }
        if self.error is not None:
            out["error"] = self.error
        return out


class _Tally:
    def __init__(self, name: str, threshold: float):
        self.name, self.threshold = name, threshold
        self.cases = self.failures = 0
        self.worst = 0.0

    def add(self, residual: float, limit: float | None = None) -> None:
        limit = self.threshold if limit is None else limit
        self.cases += 1
        if not residual <= limit:  # NaN counts as a failure
            self.failures += 1
        self.worst = max(self.worst, residual) if math.isfinite(residual) else math.inf

    def check(self, ok: bool) -> None:
        self.add(0.0 if ok else 1.0, 0.0)

    def result(self) -> SuiteResult:
        return SuiteResult(self.name, self.cases, self.worst, self.threshold, self.failures)


def _maxabs(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a, dtype=np.float64) - np.asarray(b, dtype=np.float64))))


def _count(base: int, scale: float) -> int:
    return max(1, int(round(base * scale)))


def _rng(seed: int, name: str) -> np.random.Generator:
    return smp.rng_for(seed, zlib.crc32(name.encode()))


# group-generic plumbing shared by duality, oracle, casimir and action-law suites

@dataclass(frozen=True)
class _Group:
    name: str
    element: Callable
    momentum: Callable
    lie: Callable
    coadjoint: Callable
    adjoint: Callable
    pairing: Callable
    compose: Callable


def _groups() -> list[_Group]:
    return [
        _Group(
            "eight",
            lambda rng, n: smp.random_extended(rng, n),
            lambda rng, n, s=None: smp.random_charged_momentum(rng, n, s),
            smp.random_extended_lie,
            lambda g, J: extended.coadjoint_ext(g, J),
            lambda g, d: extended.adjoint_ext(g, d),
            lambda J, d: extended.invariant_scalar_ext(J, d),
            lambda a, b: extended.compose_ext(a, b),
        ),
        _Group(
            "extended",
            lambda rng, n: smp.random_extended(rng, n, nu=1),
            lambda rng, n, s=None: smp.random_charged_momentum(rng, n, s),
            smp.random_extended_lie,
            lambda g, J: extended.coadjoint_ext(g, J),
            lambda g, d: extended.adjoint_ext(g, d),
            lambda J, d: extended.invariant_scalar_ext(J, d),
            lambda a, b: extended.compose_ext(a, b),
        ),
        _Group(
            "poincare",
            lambda rng, n: smp.random_poincare(rng),
            lambda rng, n, s=None: smp.random_momentum(rng, s),
            lambda rng, n: smp.random_lie(rng),
            lambda g, J: poincare.coadjoint(g, J),
            lambda g, d: poincare.adjoint(g, d),
            lambda J, d: poincare.invariant_scalar(J, d),
            lambda a, b: poincare.compose(a, b),
        ),
        _Group(
            "twin",
            lambda rng, n: smp.random_twin(rng, n),
            lambda rng, n, s=None: smp.random_charged_momentum(rng, n, s),
            smp.random_extended_lie,
            lambda g, J: twinfold.coadjoint_twin(g, J),
            lambda g, d: twinfold.adjoint_twin(g, d),
            lambda J, d: extended.invariant_scalar_ext(J, d),
            lambda a, b: twinfold.compose_twin(a, b),
        ),
    ]


def _n_for(group: str, rng) -> int:
    if group == "poincare":
        return 0
    return int(rng.integers(1, 4)) if group in ("extended", "eight") else int(rng.integers(0, 4))


def _vec(J) -> np.ndarray:
    return J.to_vector()


def _poincare_part(J) -> Momentum:
    return J if isinstance(J, Momentum) else J.poincare


# suites

def suite_lorentz_metric(seed: int, scale: float, tol: float) -> SuiteResult:
    name = "lorentz.metric"
    rng, t = _rng(seed, name), _Tally(name, 1e-10)
    for _ in range(_count(1000, scale)):
        t.add(minkowski.metric_residual(smp.random_product(rng, 5).m))
    return t.result()


def suite_lorentz_canonical(seed: int, scale: float, tol: float) -> SuiteResult:
    t = _Tally("lorentz.canonical", 0.0)
    expected = [
        (np.eye(4), Component.NEUTRAL),
        (A_S, Component.SPACE_REVERSING),
        (A_T, Component.TIME_REVERSING),
        (A_ST, Component.SPACE_TIME_REVERSING),
    ]
    for m, comp in expected:
        t.check(minkowski.is_lorentz(m, tol) and minkowski.classify_component(m, tol) is comp)
    t.check(minkowski.is_lorentz(G, tol))
    t.check(not minkowski.is_lorentz(2.0 * np.eye(4), tol))
    return t.result()


def _product_component(a: Component, b: Component) -> Component:
    det = a.det_sign * b.det_sign
    time = a.time_sign * b.time_sign
    return minkowski._BY_SIGNS[(det, time)]


def suite_lorentz_component_table(seed: int, scale: float, tol: float) -> SuiteResult:
    name = "lorentz.component_table"
    rng, t = _rng(seed, name), _Tally(name, 0.0)
    for _ in range(_count(2000, scale)):
        a, b = smp.random_product(rng, 3), smp.random_product(rng, 3)
        c = (a @ b).component
        ok = c is _product_component(a.component, b.component)
        if a.orthochron and b.orthochron:
            ok &= c.orthochron
        elif a.orthochron != b.orthochron:
            ok &= c.antichron
        else:
            ok &= c.orthochron
        if a.component is Component.NEUTRAL and b.component is Component.NEUTRAL:
            ok &= c is Component.NEUTRAL
        t.check(ok)
    return t.result()


def suite_lorentz_omega(seed: int, scale: float, tol: float) -> SuiteResult:
    name = "lorentz.omega_factor"
    rng, t = _rng(seed, name), _Tally(name, 0.0)
    for _ in range(_count(200, scale)):
        Ln = smp.random_neutral(rng)
        t.check((minkowski.omega_factor(-1, 1) @ Ln).component is Component.SPACE_REVERSING)
        t.check((minkowski.omega_factor(1, -1) @ Ln).component is Component.TIME_REVERSING)
        Lst = minkowski.omega_factor(-1, -1) @ Ln
        t.check(Lst.component is Component.SPACE_TIME_REVERSING and np.array_equal(Lst.m, -Ln.m))
        L = smp.random_lorentz(rng)
        mu, Lo = minkowski.sign_decompose(L)
        t.check(mu == int(np.sign(L.m[3, 3])) and Lo.orthochron and np.array_equal(mu * Lo.m, L.m))
    return t.result()


def suite_poincare_group_law(seed: int, scale: float, tol: float) -> SuiteResult:
    name = "poincare.group_law"
    rng, t = _rng(seed, name), _Tally(name, 1e-10)
    for _ in range(_count(100, scale)):
        a, b = smp.random_poincare(rng), smp.random_poincare(rng)
        t.add(_maxabs(poincare.compose(a, b).matrix(), a.matrix() @ b.matrix()))
        t.add(_maxabs(poincare.inverse(a).matrix(), np.linalg.inv(a.matrix())))
        t.add(_maxabs(poincare.compose(a, poincare.inverse(a)).matrix(), np.eye(5)))
    return t.result()


def suite_poincare_adjoint(seed: int, scale: float, tol: float) -> SuiteResult:
    name = "poincare.adjoint_closed_form"
    rng, t = _rng(seed, name), _Tally(name, 1e-11)
    for _ in range(_count(100, scale)):
        g, d = smp.random_poincare(rng), smp.random_lie(rng)
        out = poincare.adjoint(g, d)
        Linv = np.linalg.inv(g.L.m)
        omega = Linv.T @ d.omega @ Linv
        gamma = -g.L.m @ G @ d.omega @ Linv @ g.C + g.L.m @ d.gamma
        t.add(_maxabs(out.omega, omega))
        t.add(_maxabs(out.gamma, gamma))
        t.add(_maxabs(out.gamma, -G @ out.omega @ g.C + g.L.m @ d.gamma))
    return t.result()


def suite_duality(seed: int, scale: float, tol: float) -> list[SuiteResult]:
    results = []
    for grp in _groups():
        name = f"duality.{grp.name}"
        rng, t = _rng(seed, name), _Tally(name, 1e-10)
        for _ in range(_count(200, scale)):
            n = _n_for(grp.name, rng)
            g, J, d = grp.element(rng, n), grp.momentum(rng, n), grp.lie(rng, n)
            s0 = grp.pairing(J, d)
            s1 = grp.pairing(grp.coadjoint(g, J), grp.adjoint(g, d))
            t.add(abs(s1 - s0) / (1.0 + abs(s0)))
        results.append(t.result())
    return results


def suite_oracle(seed: int, scale: float, tol: float) -> list[SuiteResult]:
    results = []
    for grp in _groups():
        name = f"oracle.{grp.name}"
        rng, t = _rng(seed, name), _Tally(name, 1e-9)
        for _ in range(_count(100, scale)):
            n = _n_for(grp.name, rng)
            g, J = grp.element(rng, n), grp.momentum(rng, n)
            t.add(_maxabs(_vec(grp.coadjoint(g, J)), _vec(oracle.reconstruct_coadjoint(g, J))))
        results.append(t.result())
    return results


def suite_triple(seed: int, scale: float, tol: float) -> SuiteResult:
    name = "poincare.triple_equivalence"
    rng, t = _rng(seed, name), _Tally(name, 1e-9)
    for _ in range(_count(100, scale)):
        g, J = smp.random_poincare(rng), smp.random_momentum(rng)
        closed = poincare.coadjoint(g, J).to_vector()
        matrix = Momentum.from_matrix(poincare.coadjoint_matrix(g, J.matrix())).to_vector()
        dual = oracle.reconstruct_coadjoint(g, J).to_vector()
        t.add(max(_maxabs(closed, matrix), _maxabs(closed, dual), _maxabs(matrix, dual)))
    return t.result()


def suite_action_law(seed: int, scale: float, tol: float) -> list[SuiteResult]:
    results = []
    for grp in _groups():
        name = f"action_law.{grp.name}"
        rng, t = _rng(seed, name), _Tally(name, 1e-10)
        for _ in range(_count(100, scale)):
            n = _n_for(grp.name, rng)
            a, b, J = grp.element(rng, n), grp.element(rng, n), grp.momentum(rng, n)
            lhs = _vec(grp.coadjoint(grp.compose(a, b), J))
            rhs = _vec(grp.coadjoint(a, grp.coadjoint(b, J)))
            t.add(_maxabs(lhs, rhs) / (1.0 + float(np.max(np.abs(lhs)))))
        results.append(t.result())
    return results


def _relative(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(a))


def suite_casimir(seed: int, scale: float, tol: float) -> list[SuiteResult]:
    results = []
    for grp in _groups():
        name = f"casimir.{grp.name}"
        rng, t = _rng(seed, name), _Tally(name, 1e-9)
        for _ in range(_count(500, scale)):
            n = _n_for(grp.name, rng)
            g, J = grp.element(rng, n), grp.momentum(rng, n)
            K = grp.coadjoint(g, J)
            P0, P1 = _poincare_part(J), _poincare_part(K)
            t.add(_relative(poincare.mass_squared(P0.P), poincare.mass_squared(P1.P)))
            t.add(_relative(reduction.spin_scalar(P0, tol), reduction.spin_scalar(P1, tol)))
        results.append(t.result())
    return results


def suite_sign_laws(seed: int, scale: float, tol: float) -> SuiteResult:
    name = "sign_laws"
    rng, t = _rng(seed, name), _Tally(name, 0.0)
    for _ in range(_count(50, scale)):
        for nu in (1, -1):
            for comp in Component:
                n = int(rng.integers(1, 4))
                g = smp.random_extended(rng, n, nu=nu, component=comp)
                J = smp.random_charged_momentum(rng, n)
                K = extended.coadjoint_ext(g, J)
                t.check(np.array_equal(K.q, nu * J.q))
                t.check(np.sign(K.E) == g.L.mu * np.sign(J.E))
        for mu in (1, -1):
            for nu in (1, -1):
                for parity in (Component.NEUTRAL, Component.SPACE_REVERSING):
                    n = int(rng.integers(0, 4))
                    g = smp.random_twin(rng, n, mu, nu, parity)
                    state = ParticleState(smp.sign(rng), smp.random_charged_momentum(rng, n))
                    out = twinfold.act_on_state(g, state)
                    t.check(np.array_equal(out.momentum.q, (mu * nu) * state.momentum.q))
                    t.check(out.fold == mu * state.fold)
                    t.check(np.sign(out.momentum.E) == mu * np.sign(state.momentum.E))
        g = smp.random_poincare(rng)
        J = smp.random_momentum(rng)
        t.check(np.sign(poincare.coadjoint(g, J).E) == g.L.mu * np.sign(J.E))
    return t.result()


def suite_c_symmetry(seed: int, scale: float, tol: float) -> SuiteResult:
    name = "c_symmetry"
    rng, t = _rng(seed, name), _Tally(name, 1e-12)
    for _ in range(_count(100, scale)):
        n = int(rng.integers(1, 4))
        J = smp.random_charged_momentum(rng, n)
        K = extended.c_symmetry(J)
        t.check(np.array_equal(K.q, -J.q))
        t.check(np.array_equal(K.P, J.P) and np.array_equal(K.M, J.M))
        t.add(abs(poincare.mass_squared(K.P) - poincare.mass_squared(J.P)))
        t.add(abs(reduction.spin_scalar(K.poincare, tol) - reduction.spin_scalar(J.poincare, tol)))
        twice = extended.c_symmetry(K)
        t.check(np.array_equal(twice.to_vector(), J.to_vector()))
    return t.result()


def suite_restriction(seed: int, scale: float, tol: float) -> SuiteResult:
    name = "restriction"
    rng, t = _rng(seed, name), _Tally(name, 1e-12)
    for _ in range(_count(100, scale)):
        n = int(rng.integers(1, 4))
        g = smp.random_extended(rng, n)
        J = ChargedMomentum.from_poincare(np.zeros(n), smp.random_momentum(rng))
        K = extended.coadjoint_ext(g, J)
        ref = poincare.coadjoint(g.poincare, J.poincare)
        t.check(np.array_equal(K.M, ref.M) and np.array_equal(K.P, ref.P))
        tw = smp.random_twin(rng, 0, nu=1)
        Jp = smp.random_momentum(rng)
        K2 = twinfold.coadjoint_twin(tw, ChargedMomentum.from_poincare([], Jp))
        ref2 = poincare.coadjoint(PoincareElement(tw.L, tw.C), Jp)
        t.add(_maxabs(K2.poincare.to_vector(), ref2.to_vector()) / (1.0 + float(np.max(np.abs(ref2.to_vector())))))
    return t.result()


def suite_reduction(seed: int, scale: float, tol: float) -> SuiteResult:
    name = "reduction.round_trip"
    rng, t = _rng(seed, name), _Tally(name, 1e-9)
    for _ in range(_count(200, scale)):
        s = rng.uniform(0.0, 2.0)
        m = rng.uniform(0.5, 2.0)
        E = smp.sign(rng) * m
        planted = Momentum(poincare.spin_passage_compose([0.0, 0.0, s], np.zeros(3)), [0.0, 0.0, 0.0, E])
        J = poincare.coadjoint(smp.random_poincare(rng), planted)
        red = reduction.canonical_reduce(J, tol=tol)
        t.add(abs(red.s - s))
        # antichron elements flip the planted energy
        t.add(abs(red.E - np.sign(J.E) * m))
        back = poincare.coadjoint(poincare.inverse(red.g_reducing), red.momentum())
        t.add(_maxabs(back.to_vector(), J.to_vector()))
        fwd = poincare.coadjoint(red.g_reducing, J)
        t.add(float(np.max(np.abs(fwd.passage))), 1e-10)
        t.add(_maxabs(fwd.to_vector(), red.momentum().to_vector()))
    return t.result()


def suite_symmetry_table(seed: int, scale: float, tol: float) -> SuiteResult:
    t = _Tally("twin.symmetry_table", 0.0)
    rows = {(r.symmetry.mu, r.symmetry.nu, r.symmetry.parity): r for r in twinfold.symmetry_effect_table(tol=tol)}
    for parity in (Component.NEUTRAL, Component.SPACE_REVERSING):
        ident = rows[(1, 1, parity)]
        c_row = rows[(1, -1, parity)]
        twin_anti = rows[(-1, 1, parity)]
        fold_change = rows[(-1, -1, parity)]
        p_sym = "p" if parity is Component.NEUTRAL else "-p"
        t.check((ident.energy, ident.momentum, ident.charge, ident.spin, ident.fold) == ("E", p_sym, "q", "s", "fold"))
        t.check(ident.symmetry.tag is SymmetryTag.IDENTITY)
        t.check((c_row.energy, c_row.momentum, c_row.charge, c_row.spin, c_row.fold) == ("E", p_sym, "-q", "s", "fold"))
        t.check(c_row.symmetry.tag is SymmetryTag.C)
        t.check((twin_anti.energy, twin_anti.charge, twin_anti.spin, twin_anti.fold) == ("-E", "-q", "s", "-fold"))
        t.check(twin_anti.symmetry.tag is SymmetryTag.TWIN_ANTIMATTER)
        t.check((fold_change.energy, fold_change.charge, fold_change.spin, fold_change.fold) == ("-E", "q", "s", "-fold"))
        for row in (ident, c_row, twin_anti, fold_change):
            t.check(row.mass_squared == "m2")
    return t.result()


def suite_twin_group(seed: int, scale: float, tol: float) -> SuiteResult:
    name = "twin.group_law"
    rng, t = _rng(seed, name), _Tally(name, 1e-10)
    for _ in range(_count(100, scale)):
        n = int(rng.integers(0, 4))
        a, b = smp.random_twin(rng, n), smp.random_twin(rng, n)
        t.add(_maxabs(twinfold.compose_twin(a, b).matrix(), a.matrix() @ b.matrix()))
        t.add(_maxabs(twinfold.inverse_twin(a).matrix(), np.linalg.inv(a.matrix())))
        t.check(twinfold.classify_symmetry(twinfold.compose_twin(a, a)).mu == 1)
        e = smp.random_extended(rng, max(n, 1))
        f = smp.random_extended(rng, max(n, 1))
        t.add(_maxabs(extended.compose_ext(e, f).matrix(), e.matrix() @ f.matrix()))
        t.add(_maxabs(extended.inverse_ext(e).matrix(), np.linalg.inv(e.matrix())))
    return t.result()


SUITES: list[Callable] = [
    suite_lorentz_metric,
    suite_lorentz_canonical,
    suite_lorentz_component_table,
    suite_lorentz_omega,
    suite_poincare_group_law,
    suite_poincare_adjoint,
    suite_duality,
    suite_oracle,
    suite_triple,
    suite_action_law,
    suite_casimir,
    suite_sign_laws,
    suite_c_symmetry,
    suite_restriction,
    suite_reduction,
    suite_symmetry_table,
    suite_twin_group,
]


def run_all(seed: int = 0, scale: float = 1.0, tol: float = DEFAULT_TOL) -> list[SuiteResult]:
    """Run every suite; results come back sorted by suite name.

    A suite that raises counts as failed rather than aborting the run: a
    broken formula often shows up as an invalid intermediate value.
    """
    results: list[SuiteResult] = []
    for suite in SUITES:
        try:
            out = suite(seed, scale, tol)
        except Exception as exc:
            name = suite.__name__.removeprefix("suite_")
            out = SuiteResult(name, 0, math.inf, 0.0, 1, f"{type(exc).__name__}: {exc}")
        results.extend(out if isinstance(out, list) else [out])
    return sorted(results, key=lambda r: r.name)
