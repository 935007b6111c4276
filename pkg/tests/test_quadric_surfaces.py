import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import gen
from conformal_quadrics import _linalg as la
from conformal_quadrics.exceptions import DimensionMismatch, InvalidHypersurface, InvalidSurface
from conformal_quadrics.forms import QuadraticSpace, eval_Q
from conformal_quadrics.projective import ProjectiveSubspace, embed, infinity_point, on_quadric, span
from conformal_quadrics.quadric_surfaces import (
    AffineQuadric,
    Hypersurface,
    Sign,
    SurfaceD,
    act_hypersurface,
    act_surface,
    affine_to_projective,
    definite_case_orbit,
    make_surface,
    orbit_map,
    projective_to_affine,
    same_orbit_given_realizations,
    same_orbit_hypersurface,
    sample_rational_points,
    sign_of,
    surface_points_equal,
)
from conformal_quadrics.transforms import dilation, identity, inversion
from conformal_quadrics.witt import TOL_OUT

from strategies import rationals, spaces, vectors

R11 = QuadraticSpace(1, 1)
R20 = QuadraticSpace(2, 0)
R22 = QuadraticSpace(2, 2)
V1, V2, V3, V4 = (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 1, 0), (0, 0, 1, 1, 0, 0), (0, 0, 0, 0, 0, 1)


def curve(gamma, space=R11):
    return affine_to_projective(AffineQuadric(space, 1, (0,) * space.dim, gamma))


def test_affine_to_projective_examples():
    H = curve(-1)
    assert H.normal == la.vec((-2, 0, 0, 0))
    assert la.proportional(curve(1).normal, la.vec((0, 0, 0, 1)))
    assert la.proportional(curve(0).normal, la.vec((1, 0, 0, 1)))


def test_projective_to_affine_examples():
    q = projective_to_affine(Hypersurface(R11, (1, 0, 0, 0)))
    assert (q.alpha, q.beta, q.gamma) == (Fraction(-1, 2), (0, 0), Fraction(1, 2))
    q = projective_to_affine(Hypersurface(R11, (0, 0, 0, 1)))
    assert (q.alpha, q.gamma) == (Fraction(-1, 2), Fraction(-1, 2))


def test_sign_examples():
    assert sign_of(Hypersurface(R11, (1, 0, 0, 0))) == Sign.POSITIVE
    assert sign_of(Hypersurface(R11, (0, 0, 0, 1))) == Sign.NEGATIVE
    assert sign_of(Hypersurface(R11, (1, 0, 0, 1))) == Sign.ZERO
    assert str(Sign.ZERO) == "Zero"


def test_definite_space_validity():
    assert curve(-1, R20).sign == Sign.POSITIVE
    for a in ((0, 0, 0, 1), (1, 0, 0, 1)):
        with pytest.raises(InvalidHypersurface):
            Hypersurface(R20, a)
    for a in ((1, 0, 0, 0), (1, 0, 0, 1)):
        with pytest.raises(InvalidHypersurface):
            Hypersurface(QuadraticSpace(0, 2), a)
    assert Hypersurface(QuadraticSpace(0, 2), (0, 0, 0, 1)).sign == Sign.NEGATIVE
    with pytest.raises(InvalidHypersurface):
        Hypersurface(R11, (0, 0, 0, 0))


def test_affine_quadric_validation():
    with pytest.raises(ValueError):
        AffineQuadric(R11, 0, (0, 0), 0)
    with pytest.raises(DimensionMismatch):
        AffineQuadric(R11, 1, (0,), 0)
    q = AffineQuadric(R11, 1, (0, 0), -1)
    assert q.contains((1, 0)) and not q.contains((0, 0))
    assert q.proportional_to(AffineQuadric(R11, -3, (0, 0), 3))


def test_act_hypersurface_examples():
    H = curve(-1)
    assert act_hypersurface(identity(R11), H) == H
    assert act_hypersurface(inversion(R11), H) == H
    assert act_hypersurface(dilation(R11, 2), H) == Hypersurface(R11, (-5, 0, 0, 3))
    assert act_hypersurface(dilation(R11, 2), H) == curve(-4)


def test_same_orbit_examples():
    assert same_orbit_hypersurface(curve(-1), curve(-4))
    assert not same_orbit_hypersurface(curve(-1), curve(1))
    rng = random.Random(3)
    for _ in range(10):
        M = gen.conformal_map(rng, R11, 4)
        assert same_orbit_hypersurface(curve(-1), act_hypersurface(M, curve(-1)))


def test_orbit_map_wrapper():
    w = orbit_map(curve(-1), curve(-4))
    assert w.exact


def test_surface_examples():
    s1 = make_surface(R22, [V1, V2, V3])
    s2 = make_surface(R22, [V2, V3, V4])
    assert s1.d == 1 and tuple(s1.signature) == (1, 0, 2) and s1.semidefinite
    assert s2.d == 1 and tuple(s2.signature) == (0, 1, 2)
    with pytest.raises(InvalidSurface):
        make_surface(QuadraticSpace(2, 0), [(0, 1, 0, 0), (0, 0, 1, 0)])
    with pytest.raises(InvalidSurface):
        make_surface(R22, [V1])  # d = -1
    with pytest.raises(DimensionMismatch):
        make_surface(R22, [(1, 0, 0, 0)])


def test_surface_points_equal_examples():
    s1 = make_surface(R22, [V1, V2, V3])
    s2 = make_surface(R22, [V2, V3, V4])
    assert surface_points_equal(s1, s2)
    assert surface_points_equal(s1, s1)
    S1, Sm1 = SurfaceD.from_hypersurface(curve(-1)), SurfaceD.from_hypersurface(curve(1))
    assert not surface_points_equal(S1, Sm1)
    # an indefinite and a semidefinite realization are never equal
    S0 = SurfaceD.from_hypersurface(curve(0))
    assert not surface_points_equal(S1, S0)


def test_surface_points_equal_indefinite_uses_sampled_points():
    space = QuadraticSpace(3, 0)
    pts = [embed(space, x).coords for x in ((1, 0, 0), (0, 1, 0), (-1, 0, 0))]
    s = make_surface(space, pts)
    samples = sample_rational_points(space, s.subspace, 12, seed=5)
    assert len(samples) == 12
    assert all(on_quadric(space, P) and s.contains(P) for P in samples)
    other = make_surface(space, [P.coords for P in samples[:3]])
    assert surface_points_equal(s, other)


def test_same_orbit_given_realizations_examples():
    w = same_orbit_given_realizations(SurfaceD.from_hypersurface(curve(-1)), SurfaceD.from_hypersurface(curve(-4)))
    assert w is not None and w.image_residual <= TOL_OUT
    s1 = make_surface(R22, [V1, V2, V3])
    s2 = make_surface(R22, [V2, V3, V4])
    assert same_orbit_given_realizations(s1, s2) is None


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_surface_orbit_soundness(seed):
    rng = random.Random(seed)
    space = gen.space(rng, 4, 3)
    n = space.dim + 2
    while True:
        k = rng.randint(3, n - 1)
        basis = [gen.point(rng, n, 4, 1) for _ in range(k)]
        try:
            s = make_surface(space, basis)
            break
        except (InvalidSurface, ValueError):
            continue
    M = gen.conformal_map(rng, space, 3)
    t = act_surface(M, s)
    w = same_orbit_given_realizations(s, t)
    assert w is not None
    assert w.orthogonality_residual <= TOL_OUT and w.image_residual <= TOL_OUT


def test_definite_case_examples():
    R3 = QuadraticSpace(3, 0)
    c1 = make_surface(R3, [embed(R3, x).coords for x in ((1, 0, 0), (0, 1, 0), (-1, 0, 0))])
    c2 = make_surface(R3, [embed(R3, x).coords for x in ((5, 1, 2), (2, 4, 2), (2, 1, 5))])
    w = definite_case_orbit(c1, c2)
    assert w.orthogonality_residual <= TOL_OUT and w.image_residual <= TOL_OUT
    circle = SurfaceD.from_hypersurface(curve(-1, R20))
    line = make_surface(R20, [embed(R20, (0, 0)).coords, embed(R20, (1, 1)).coords, infinity_point(R20).coords])
    w = definite_case_orbit(circle, line)
    assert w.orthogonality_residual <= TOL_OUT and w.image_residual <= TOL_OUT
    w = definite_case_orbit(circle, circle)
    assert w.exact
    with pytest.raises(ValueError):
        definite_case_orbit(SurfaceD.from_hypersurface(curve(-1)), SurfaceD.from_hypersurface(curve(-1)))


@settings(max_examples=60, deadline=None)
@given(spaces(), st.data())
def test_pullback_identity(space, data):
    alpha = data.draw(rationals)
    beta = data.draw(vectors(space.dim))
    gamma = data.draw(rationals)
    if alpha == 0 and gamma == 0 and la.is_zero(beta):
        return
    q = AffineQuadric(space, alpha, beta, gamma)
    a = (q.gamma - q.alpha,) + q.beta + (-q.gamma - q.alpha,)
    x = data.draw(vectors(space.dim))
    on_h = la.dot(tuple(s * c for s, c in zip(space.lifted().diagonal, a)), embed(space, x).coords) == 0
    assert q.contains(x) == on_h
    try:
        H = affine_to_projective(q)
    except InvalidHypersurface:
        return
    assert projective_to_affine(H).proportional_to(q)
    assert H.contains(embed(space, x)) == q.contains(x)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_sign_is_a_class_function(seed):
    rng = random.Random(seed)
    space = gen.space(rng)
    while True:
        a = gen.point(rng, space.dim + 2)
        try:
            H = Hypersurface(space, a)
            break
        except InvalidHypersurface:
            continue
    M = gen.conformal_map(rng, space, 4)
    assert act_hypersurface(M, H).sign == H.sign


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.data())
def test_definite_rejects_wrong_sign(p, data):
    space = QuadraticSpace(p + 1, 0)
    a = data.draw(vectors(space.dim + 2))
    if la.is_zero(a):
        return
    if eval_Q(space.lifted(), a) <= 0:
        with pytest.raises(InvalidHypersurface):
            Hypersurface(space, a)
    else:
        assert Hypersurface(space, a).sign == Sign.POSITIVE


def test_sample_rational_points_is_seeded():
    s = SurfaceD.from_hypersurface(curve(-1))
    a = sample_rational_points(R11, s.subspace, 8, seed=1)
    b = sample_rational_points(R11, s.subspace, 8, seed=1)
    assert a == b and all(s.contains(P) for P in a)
