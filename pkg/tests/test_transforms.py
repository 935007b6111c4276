import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import gen
from conformal_quadrics import _linalg as la
from conformal_quadrics.exceptions import DimensionMismatch, NotOnQuadric, NotOrthogonal, UndefinedPoint
from conformal_quadrics.forms import QuadraticSpace, eval_Q
from conformal_quadrics.projective import ProjectivePoint, embed, infinity_point, on_quadric
from conformal_quadrics.transforms import (
    ConformalMap,
    Dilate,
    Invert,
    Rotate,
    Translate,
    act_affine,
    act_point,
    decompose,
    dilation,
    estimate_conformal_factor,
    generator_from_json,
    identity,
    inversion,
    lift,
    rotation,
    translation,
    verify_orthogonal,
)

from strategies import positive_rationals, space_and_vectors, spaces

R11 = QuadraticSpace(1, 1)
R20 = QuadraticSpace(2, 0)


def test_verify_orthogonal_examples():
    assert verify_orthogonal(R11, la.identity(4))
    assert verify_orthogonal(R11, la.diag([-1, 1, 1, 1]))
    assert not verify_orthogonal(R11, la.diag([2, 1, 1, 1]))


def test_conformal_map_rejects_non_orthogonal():
    with pytest.raises(NotOrthogonal):
        ConformalMap(R11, la.diag([2, 1, 1, 1]))
    with pytest.raises(DimensionMismatch):
        ConformalMap(R11, la.identity(3))


def test_inversion_examples():
    w0 = inversion(R20)
    assert act_affine(w0, (2, 0)) == (Fraction(1, 2), 0)
    assert w0((2, 0)) == (Fraction(1, 2), 0)
    assert act_affine(inversion(R11), (1, -1)) is None
    assert act_affine(inversion(R11), (3, 3)) is None
    assert act_point(w0, ProjectivePoint((-3, 4, 0, 5))) == ProjectivePoint((3, 4, 0, 5))


def test_translation_examples():
    assert translation(R11, (0, 0)) == identity(R11)
    assert act_affine(translation(R11, (1, 0)), (0, 0)) == (1, 0)


def test_rotation_examples():
    R = la.mat([["3/5", "-4/5"], ["4/5", "3/5"]])
    assert act_affine(rotation(R20, R), (1, 0)) == (Fraction(3, 5), Fraction(4, 5))
    assert rotation(R20, la.identity(2)) == identity(R20)
    assert act_affine(rotation(R11, la.diag([1, -1])), (5, 7)) == (5, -7)
    with pytest.raises(NotOrthogonal):
        rotation(R11, la.mat([["3/5", "-4/5"], ["4/5", "3/5"]]))


def test_dilation_examples():
    assert dilation(R11, 1).same_action(identity(R11))
    assert act_affine(dilation(R11, 2), (1, 0)) == (2, 0)
    with pytest.raises(ValueError):
        dilation(R11, 0)
    with pytest.raises(ValueError):
        Dilate(-2)


def test_act_point_requires_quadric_point():
    with pytest.raises(NotOnQuadric):
        act_point(identity(R11), (1, 0, 0, 0))


def test_inverse_and_negation():
    rng = random.Random(1)
    M = gen.conformal_map(rng, QuadraticSpace(2, 1), 5)
    assert (M @ M.inverse()) == identity(M.space)
    assert (-M).same_action(M) and not (-M == M)


def test_generator_json_round_trip():
    word = [Translate((1, "1/2")), Rotate(la.diag([1, -1])), Dilate("3/2"), Invert()]
    assert [generator_from_json(g.to_json()) for g in word] == word
    for bad in ({"invert": False}, {"spin": 1}, {"translate": [1], "invert": True}):
        with pytest.raises(ValueError):
            generator_from_json(bad)


def test_decompose_examples():
    assert decompose(inversion(R11)) == [Invert()]
    R = la.mat([["3/5", "-4/5"], ["4/5", "3/5"]])
    assert decompose(rotation(R20, R)) == [Rotate(R)]
    M = lift(R11, [Translate((1, 0)), Invert(), Dilate(2)])
    assert lift(R11, decompose(M)).same_action(M)
    assert decompose(identity(R11)) == []


def test_decompose_handles_infinity_moves():
    # maps sending infinity to a finite point, and to another point at infinity
    M = lift(R11, [Invert(), Translate((1, 1))])
    assert lift(R11, decompose(M)).same_action(M)
    N = lift(R11, [Translate((1, 1)), Invert(), Translate((1, -1))])
    assert lift(R11, decompose(N)).same_action(N)


def test_conformal_factor_examples():
    om, res = estimate_conformal_factor(identity(R20), (0.3, -0.7))
    assert om == pytest.approx(1, abs=1e-9) and res < 1e-9
    om, res = estimate_conformal_factor(inversion(R20), (2.0, 0.0))
    assert om == pytest.approx(1 / 16, rel=1e-8) and res < 1e-8
    om, res = estimate_conformal_factor(dilation(QuadraticSpace(1, 2), 3), (0.1, 0.2, 0.3))
    assert om == pytest.approx(9, rel=1e-9) and res < 1e-6 * 9
    om_f, _ = estimate_conformal_factor(inversion(R20), (2.0, 0.0), scheme="forward")
    assert om_f == pytest.approx(1 / 16, rel=1e-4)


def test_conformal_factor_errors():
    with pytest.raises(UndefinedPoint):
        estimate_conformal_factor(inversion(R20), (1e-5, 0.0), step=1e-5)
    with pytest.raises(ValueError):
        estimate_conformal_factor(identity(R20), (0.0, 0.0), step=0)
    with pytest.raises(ValueError):
        estimate_conformal_factor(identity(R20), (0.0, 0.0), scheme="upwind")
    with pytest.raises(DimensionMismatch):
        estimate_conformal_factor(identity(R20), (0.0,))


@st.composite
def maps(draw, max_len: int = 5):
    seed = draw(st.integers(0, 10**6))
    rng = random.Random(seed)
    space = gen.space(rng)
    return gen.conformal_map(rng, space, draw(st.integers(0, max_len)))


@settings(max_examples=40, deadline=None)
@given(maps())
def test_lifted_maps_are_exactly_orthogonal(M):
    assert verify_orthogonal(M.space, M.matrix)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_action_is_a_homomorphism(seed):
    rng = random.Random(seed)
    space = gen.space(rng)
    M1, M2 = gen.conformal_map(rng, space, 3), gen.conformal_map(rng, space, 3)
    P = embed(space, gen.point(rng, space.dim))
    assert act_point(M1 @ M2, P) == act_point(M1, act_point(M2, P))
    assert on_quadric(space, act_point(M1, P))


@settings(max_examples=60, deadline=None)
@given(space_and_vectors(2), positive_rationals)
def test_generator_soundness(data, lam):
    space, x, b = data
    assert act_affine(translation(space, b), x) == la.add(x, b)
    assert act_affine(dilation(space, lam), x) == la.scale(lam, x)
    qx = eval_Q(space, x)
    assert act_affine(inversion(space), x) == (None if qx == 0 else la.scale(1 / qx, x))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_rotation_soundness(seed):
    rng = random.Random(seed)
    space = gen.space(rng)
    R = gen.rotation(rng, space, 3)
    x = gen.point(rng, space.dim)
    assert act_affine(rotation(space, R), x) == la.matvec(R, x)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_decompose_round_trip(seed):
    rng = random.Random(seed)
    space = gen.space(rng)
    M = gen.conformal_map(rng, space, rng.randint(0, 8))
    word = decompose(M)
    assert all(isinstance(g, (Translate, Rotate, Dilate, Invert)) for g in word)
    L = lift(space, word)
    assert L.matrix in (M.matrix, (-M).matrix)


def test_decompose_of_minus_identity_and_infinity_swap():
    M = -identity(R20)
    assert lift(R20, decompose(M)).same_action(M)
    assert act_point(inversion(R11), infinity_point(R11)) == ProjectivePoint((1, 0, 0, 1))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_conformality_random(seed):
    rng = random.Random(seed)
    space = gen.space(rng)
    M = gen.conformal_map(rng, space, rng.randint(1, 4))
    x = np.array([rng.uniform(-2, 2) for _ in range(space.dim)])
    try:
        om, res = estimate_conformal_factor(M, x)
    except UndefinedPoint:
        return
    Mf = M.to_numpy()
    J = np.array(space.diagonal, dtype=float)
    # skip ill-conditioned stencils near the pole: there rounding in the
    # difference quotient grows like 1/denominator**2 and swamps the check
    for i in range(space.dim):
        for sgn in (1, -1):
            z = x.copy()
            z[i] += sgn * 1e-5
            qz = float(np.dot(J * z, z))
            eta = Mf @ np.concatenate(([(1 - qz) / 2], z, [(1 + qz) / 2]))
            if abs(eta[0] + eta[-1]) <= 1e-2 * np.max(np.abs(eta)):
                return
    assert res <= 1e-6 * max(1.0, om)
