import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from coadjoint import sampling
from coadjoint.errors import NotLorentzError
from coadjoint.extended import ExtendedPoint
from coadjoint.jsonio import (
    PayloadError,
    dumps,
    format_float,
    lorentz_from_json,
    matrix_from_json,
    parse_element,
    parse_lie,
    parse_momentum,
    to_json,
)
from coadjoint.minkowski import A_T, Component
from coadjoint.reduction import canonical_reduce
from coadjoint.twinfold import ParticleState, TwinPoint


def _wire(obj):
    return json.loads(dumps(to_json(obj)))


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_floats_round_trip_exactly(x):
    assert float(json.loads(format_float(x))) == x


def test_format_float_examples():
    assert format_float(1.0) == "1.0"
    assert format_float(-0.0) == "-0.0"
    assert format_float(0.1) == "0.10000000000000001"
    assert format_float(1e300) == "1.0000000000000001e+300"


def test_dumps_layout():
    text = dumps({"a": [1.0, 2.5], "b": {"c": True, "d": None}, "e": "x", "f": []})
    assert text == '{\n  "a": [1.0, 2.5],\n  "b": {\n    "c": true,\n    "d": null\n  },\n  "e": "x",\n  "f": []\n}'
    assert json.loads(text)["a"] == [1.0, 2.5]


@pytest.mark.parametrize(
    "group, make",
    [
        ("poincare", lambda rng: sampling.random_poincare(rng)),
        ("extended", lambda rng: sampling.random_extended(rng, 2, nu=1)),
        ("eight", lambda rng: sampling.random_extended(rng, 2, nu=-1)),
        ("twin", lambda rng: sampling.random_twin(rng, 1)),
    ],
)
def test_element_round_trip(rng, group, make):
    g = make(rng)
    back = parse_element(group, _wire(g))
    np.testing.assert_array_equal(back.matrix(), g.matrix())


@pytest.mark.parametrize("group, n", [("poincare", None), ("eight", 2), ("twin", 0)])
def test_momentum_and_lie_round_trip(rng, group, n):
    J = sampling.random_momentum(rng) if n is None else sampling.random_charged_momentum(rng, n)
    np.testing.assert_array_equal(parse_momentum(group, _wire(J)).to_vector(), J.to_vector())
    d = sampling.random_lie(rng) if n is None else sampling.random_extended_lie(rng, n)
    np.testing.assert_array_equal(parse_lie(group, _wire(d)).matrix(), d.matrix())


def test_other_value_types(rng):
    J = sampling.random_charged_momentum(rng, 1)
    assert set(to_json(ParticleState(-1, J))) == {"fold", "momentum"}
    assert to_json(TwinPoint(1, [0.5], np.zeros(4)))["fold"] == 1
    assert to_json(ExtendedPoint([0.5], np.zeros(4)))["zeta"] == [0.5]
    red = to_json(canonical_reduce(sampling.random_momentum(rng)))
    assert set(red) == {"s", "p", "E", "g_reducing"}
    with pytest.raises(TypeError):
        to_json(object())


def test_matrix_shapes():
    flat = list(range(16))
    np.testing.assert_array_equal(matrix_from_json(flat), np.arange(16.0).reshape(4, 4))
    np.testing.assert_array_equal(matrix_from_json(np.eye(4).tolist()), np.eye(4))
    with pytest.raises(PayloadError):
        matrix_from_json([1, 2, 3])
    with pytest.raises(PayloadError):
        matrix_from_json(["a"] * 16)
    assert lorentz_from_json(A_T.ravel().tolist()).component is Component.TIME_REVERSING
    with pytest.raises(NotLorentzError):
        lorentz_from_json((2 * np.eye(4)).tolist())


@pytest.mark.parametrize(
    "group, obj",
    [
        ("poincare", {"L": np.eye(4).tolist()}),
        ("poincare", {"L": np.eye(4).tolist(), "C": [0, 0, 0, 0], "nu": 1}),
        ("extended", {"nu": -1, "phi": [0.0], "L": np.eye(4).tolist(), "C": [0, 0, 0, 0]}),
        ("eight", {"nu": 2, "phi": [0.0], "L": np.eye(4).tolist(), "C": [0, 0, 0, 0]}),
        ("eight", {"nu": True, "phi": [0.0], "L": np.eye(4).tolist(), "C": [0, 0, 0, 0]}),
        ("twin", {"mu": -1, "L_o": A_T.tolist(), "C": [0, 0, 0, 0]}),
        ("twin", {"mu": 1, "L_o": np.eye(4).tolist(), "C": [0, 0, 0]}),
        ("lorentz", {}),
        ("poincare", [1, 2, 3]),
    ],
)
def test_bad_elements(group, obj):
    with pytest.raises(PayloadError):
        parse_element(group, obj)


def test_bad_momenta():
    with pytest.raises(PayloadError):
        parse_momentum("poincare", {"q": [1.0], "M": np.zeros(16).tolist(), "P": [0, 0, 0, 1]})
    with pytest.raises(PayloadError):
        parse_momentum("eight", {"M": np.zeros(16).tolist(), "P": [0, 0, 0, 1]})
    with pytest.raises(PayloadError):
        parse_momentum("poincare", {"M": np.zeros(16).tolist(), "P": [0, 0, 1]})
