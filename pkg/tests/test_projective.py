import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conformal_quadrics import _linalg as la
from conformal_quadrics.exceptions import DimensionMismatch, NotOnQuadric
from conformal_quadrics.forms import QuadraticSpace, eval_Q
from conformal_quadrics.projective import (
    ProjectivePoint,
    ProjectiveSubspace,
    embed,
    hyperplane,
    infinity_point,
    member,
    on_quadric,
    origin_point,
    quadric_intersection_dim,
    radical,
    span,
    unembed,
)

from strategies import space_and_vectors, spaces, vectors

R11 = QuadraticSpace(1, 1)
R20 = QuadraticSpace(2, 0)


def test_point_equality_up_to_scale():
    assert ProjectivePoint((1, 2, 3)) == ProjectivePoint((-2, -4, -6))
    assert ProjectivePoint((1, 2, 3)) != ProjectivePoint((1, 2, 4))
    assert hash(ProjectivePoint(("1/2", 1))) == hash(ProjectivePoint((1, 2)))
    assert repr(ProjectivePoint(("-1/2", 0, "3/4"))) == "[2:0:-3]"


def test_zero_point_rejected():
    with pytest.raises(ValueError):
        ProjectivePoint((0, 0, 0))


def test_embed_examples():
    assert embed(R11, (0, 0)) == ProjectivePoint((1, 0, 0, 1))
    assert embed(R11, (1, 0)) == ProjectivePoint((0, 1, 0, 1))
    assert embed(R20, (2, 0)) == ProjectivePoint((-3, 4, 0, 5))


def test_unembed_examples():
    assert unembed(R11, ProjectivePoint((1, 0, 0, 1))) == (0, 0)
    assert unembed(R11, ProjectivePoint((0, 1, 1, 0))) is None
    assert unembed(R20, ProjectivePoint((3, 4, 0, 5))) == (Fraction(1, 2), 0)


def test_unembed_rejects_points_off_the_quadric():
    with pytest.raises(NotOnQuadric):
        unembed(R11, (1, 0, 0, 0))


def test_on_quadric_examples():
    assert not on_quadric(R11, (1, 0, 0, 0))
    assert on_quadric(R11, (0, 1, 1, 0))
    with pytest.raises(DimensionMismatch):
        on_quadric(R11, (1, 0, 1))


def test_special_points():
    assert on_quadric(R11, infinity_point(R11)) and unembed(R11, infinity_point(R11)) is None
    assert origin_point(R20) == embed(R20, (0, 0))


def test_span_and_member_examples():
    assert span([(1, 0, 0, 0)]).dim == 0
    W = span([(0, 1, 0, 0, 1, 0), (0, 0, 1, 1, 0, 0)])
    assert W.dim == 1
    assert member(ProjectivePoint((1, 0, 0, 1)), span([(1, 0, 0, 1), (0, 1, 0, 0)]))
    assert not member((0, 0, 1, 0), span([(1, 0, 0, 1), (0, 1, 0, 0)]))


def test_subspace_drops_dependent_vectors():
    h = ProjectiveSubspace(((1, 0, 0), (2, 0, 0), (0, 1, 0)))
    assert h.dim == 1 and len(h.basis) == 2


def test_subspace_equality_and_intersection():
    a = span([(1, 0, 0, 0), (0, 1, 0, 0)])
    b = span([(1, 1, 0, 0), (1, -1, 0, 0)])
    assert a == b and hash(a) == hash(b)
    c = span([(0, 1, 0, 0), (0, 0, 1, 0)])
    meet = a.intersection(c)
    assert meet == span([(0, 1, 0, 0)])
    assert a.intersection(span([(0, 0, 1, 0)])) is None


def test_definite_intersection_dimensions():
    assert quadric_intersection_dim(R20, hyperplane(R20, (1, 0, 0, 0))) == 1
    assert quadric_intersection_dim(R20, hyperplane(R20, (0, 0, 0, 1))) is None
    h = hyperplane(R20, (1, 0, 0, 1))
    assert quadric_intersection_dim(R20, h) == 0
    assert radical(R20, h) == span([(1, 0, 0, 1)])


def test_whole_space_and_points():
    full = span([tuple(int(i == j) for j in range(4)) for i in range(4)])
    assert quadric_intersection_dim(R11, full) == 2
    assert quadric_intersection_dim(R11, span([(1, 0, 0, 1)])) == 0
    assert quadric_intersection_dim(R11, span([(1, 0, 0, 0)])) is None


@given(space_and_vectors(1))
def test_embed_round_trip(data):
    space, x = data
    P = embed(space, x)
    assert on_quadric(space, P)
    assert unembed(space, P) == x


@given(spaces(), st.integers(-5, 5), st.integers(-5, 5))
def test_unembed_none_exactly_at_infinity(space, t, c):
    # with s = 0 a quadric point is [-t/2 : m : t/2] where Q(m) = 0
    m = [Fraction(0)] * space.dim
    if not space.definite:
        m[0] = m[space.p] = Fraction(c)
    v = (Fraction(-t, 2),) + tuple(m) + (Fraction(t, 2),)
    if la.is_zero(v):
        return
    assert on_quadric(space, v) and unembed(space, v) is None


# -- brute-force oracle on N^{1,1} ------------------------------------------------------


def _segre_points(bound: int = 5) -> list:
    """Rational points of N^{1,1} from P^1 x P^1: xi0^2 + xi1^2 = xi2^2 + xi3^2."""
    line = {ProjectivePoint((a, b)) for a in range(-bound, bound + 1) for b in range(-bound, bound + 1) if (a, b) != (0, 0)}
    pts = set()
    for P, Q in itertools.product(sorted(line, key=repr), sorted(line, key=repr)):
        (a, b), (c, d) = P.coords, Q.coords
        pts.add(ProjectivePoint(((a * c + b * d) / 2, (a * d - b * c) / 2, (a * c - b * d) / 2, (a * d + b * c) / 2)))
    return sorted(pts, key=repr)


SEGRE = _segre_points()


def _inside(h: ProjectiveSubspace) -> list:
    ann = la.nullspace(h.basis)
    return [P for P in SEGRE if all(la.dot(a, P.coords) == 0 for a in ann)]


def _oracle(h: ProjectiveSubspace):
    if h.dim == 3:
        return 2
    inside = _inside(h)
    if not inside:
        return None
    if len(inside) <= 2:
        return 0
    return 1


def test_segre_sample_is_large_and_on_quadric():
    assert len(SEGRE) >= 1000
    assert all(on_quadric(R11, P) for P in SEGRE[:200])


def test_intersection_dim_matches_oracle():
    rng = random.Random(11)
    checked = 0
    for _ in range(150):
        k = rng.randint(1, 4)
        h = span([P.coords for P in rng.sample(SEGRE, k)])
        assert quadric_intersection_dim(R11, h) == _oracle(h), h
        checked += 1
    # lines through one quadric point and an arbitrary direction
    for _ in range(50):
        P = rng.choice(SEGRE)
        d = tuple(rng.randint(-3, 3) for _ in range(4))
        if la.rank([P.coords, d]) < 2:
            continue
        h = span([P.coords, d])
        got = quadric_intersection_dim(R11, h)
        inside = _inside(h)
        assert got in (0, 1)
        assert (got == 1) == (len(inside) > 2)
        checked += 1
    assert checked >= 150


@settings(max_examples=40, deadline=None)
@given(spaces(), st.data())
def test_intersection_dim_basis_invariant(space, data):
    n = space.dim + 2
    k = data.draw(st.integers(1, n))
    basis = [data.draw(vectors(n)) for _ in range(k)]
    if la.rank(basis) < k:
        return
    mix = [[data.draw(st.integers(-3, 3)) for _ in range(k)] for _ in range(k)]
    if la.det(la.mat(mix)) == 0:
        return
    other = [tuple(sum((mix[i][j] * basis[j][c] for j in range(k)), Fraction(0)) for c in range(n)) for i in range(k)]
    h1, h2 = span(basis), span(other)
    assert h1 == h2
    assert quadric_intersection_dim(space, h1) == quadric_intersection_dim(space, h2)
