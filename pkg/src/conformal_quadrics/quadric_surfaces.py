"""Conformal quadratic hypersurfaces and lower-dimensional surfaces in N^{p,q}.

An affine quadric ``alpha Q(x) + B(beta, x) + gamma = 0`` pulls back from the
hyperplane ``B^(a, xi) = 0`` with

    a = (gamma - alpha, beta_1, ..., beta_n, -gamma - alpha),

and conversely ``alpha = -(a_0 + a_last)/2``, ``beta = (a_1..a_n)``,
``gamma = (a_0 - a_last)/2``.  The sign of Q^(a) is the complete orbit
invariant of hypersurfaces; for d-dimensional surfaces the signature of Q^
restricted to a realizing subspace plays that role.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import _linalg as la
from ._validation import check_vector
from .exceptions import DimensionMismatch, InvalidHypersurface, InvalidSurface, NumericalError
from .forms import QuadraticSpace, Signature, congruent_diagonalize, eval_B, eval_Q, gram, signature
from .projective import (
    ProjectivePoint,
    ProjectiveSubspace,
    hyperplane,
    quadric_intersection_dim,
    radical,
)
from .transforms import ConformalMap
from .witt import TOL_OUT, Witness, extend_isometry, orbit_map_hypersurface, orthogonality_residual

__all__ = [
    "Sign",
    "AffineQuadric",
    "Hypersurface",
    "SurfaceD",
    "affine_to_projective",
    "projective_to_affine",
    "sign_of",
    "act_hypersurface",
    "same_orbit_hypersurface",
    "orbit_map",
    "make_surface",
    "act_surface",
    "surface_points_equal",
    "same_orbit_given_realizations",
    "definite_case_orbit",
    "sample_rational_points",
]


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @classmethod
    def of(cls, x) -> "Sign":
        return cls((x > 0) - (x < 0))

    def __str__(self):
        return self.name.capitalize()


@dataclass(frozen=True)
class AffineQuadric:
    """The solution set of alpha Q(x) + B(beta, x) + gamma = 0 in R^{p,q}."""

    space: QuadraticSpace
    alpha: Fraction
    beta: tuple
    gamma: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", la.frac(self.alpha))
        object.__setattr__(self, "gamma", la.frac(self.gamma))
        object.__setattr__(self, "beta", check_vector(self.beta, self.space.dim, name="beta"))
        if self.alpha == 0 and self.gamma == 0 and la.is_zero(self.beta):
            raise ValueError("alpha, beta and gamma cannot all vanish")

    def __call__(self, x: Sequence) -> Fraction:
        return self.alpha * eval_Q(self.space, x) + eval_B(self.space, self.beta, x) + self.gamma

    def contains(self, x: Sequence) -> bool:
        return self(x) == 0

    def proportional_to(self, other: "AffineQuadric") -> bool:
        return self.space == other.space and la.proportional(self._coeffs(), other._coeffs())

    def _coeffs(self) -> tuple:
        return (self.alpha,) + self.beta + (self.gamma,)


@dataclass(frozen=True, eq=False)
class Hypersurface:
    """N^{p,q} ∩ {B^(a, xi) = 0}; the normal a is stored up to scale.

    In a definite space the hyperplane must have the sign that gives a
    genuine hypersurface (positive for q = 0, negative for p = 0).
    """

    space: QuadraticSpace
    normal: tuple

    def __post_init__(self):
        a = check_vector(self.normal, self.space.dim + 2, name="normal")
        if la.is_zero(a):
            raise InvalidHypersurface("normal vector must be nonzero")
        object.__setattr__(self, "normal", a)
        sign = self.sign
        if self.space.q == 0 and sign != Sign.POSITIVE:
            raise InvalidHypersurface(f"q = 0 requires a positive hyperplane, got {sign}")
        if self.space.p == 0 and sign != Sign.NEGATIVE:
            raise InvalidHypersurface(f"p = 0 requires a negative hyperplane, got {sign}")

    @property
    def sign(self) -> Sign:
        return Sign.of(eval_Q(self.space.lifted(), self.normal))

    @property
    def hyperplane(self) -> ProjectiveSubspace:
        return hyperplane(self.space, self.normal)

    def contains(self, P) -> bool:
        coords = P.coords if isinstance(P, ProjectivePoint) else la.vec(P)
        return eval_B(self.space.lifted(), self.normal, coords) == 0

    def __eq__(self, other):
        if not isinstance(other, Hypersurface):
            return NotImplemented
        return self.space == other.space and la.proportional(self.normal, other.normal)

    def __hash__(self):
        return hash((self.space, la.primitive(self.normal)))

    def __repr__(self):
        return f"Hypersurface({self.space.p},{self.space.q}; a={ProjectivePoint(self.normal)!r}, {self.sign})"


def affine_to_projective(q: AffineQuadric) -> Hypersurface:
    a = (q.gamma - q.alpha,) + q.beta + (-q.gamma - q.alpha,)
    return Hypersurface(q.space, a)


def projective_to_affine(H: Hypersurface) -> AffineQuadric:
    a = H.normal
    return AffineQuadric(H.space, -(a[0] + a[-1]) / 2, a[1:-1], (a[0] - a[-1]) / 2)


def sign_of(H: Hypersurface) -> Sign:
    return H.sign


def act_hypersurface(M: ConformalMap, H: Hypersurface) -> Hypersurface:
    """Image of H under psi_M: the normal is carried along by M."""
    if M.space != H.space:
        raise DimensionMismatch("map and hypersurface live in different spaces")
    return Hypersurface(H.space, la.matvec(M.matrix, H.normal))


def same_orbit_hypersurface(H: Hypersurface, H2: Hypersurface) -> bool:
    if H.space != H2.space:
        raise DimensionMismatch("hypersurfaces live in different spaces")
    return H.sign == H2.sign


def orbit_map(H: Hypersurface, H2: Hypersurface) -> Witness:
    """A residual-checked element of O(p+1, q+1) carrying H onto H2.

    Raises :class:`~conformal_quadrics.exceptions.SignMismatch` when the signs
    differ (then no such element exists).
    """
    w = orbit_map_hypersurface(H, H2)
    if w.orthogonality_residual > TOL_OUT or w.image_residual > TOL_OUT:
        raise NumericalError(
            f"orbit map residuals too large: {w.orthogonality_residual:.3g}, {w.image_residual:.3g}"
        )
    return w


# -- d-dimensional surfaces -----------------------------------------------------


@dataclass(frozen=True, eq=False)
class SurfaceD:
    """N^{p,q} ∩ h for a projective subspace h of dimension d + 1.

    Construction checks that the intersection really has dimension d, which
    happens exactly when Q^ restricted to h is indefinite or has rank one.
    """

    space: QuadraticSpace
    subspace: ProjectiveSubspace
    d: int = field(init=False)
    signature: Signature = field(init=False)

    def __post_init__(self):
        h = self.subspace
        if not isinstance(h, ProjectiveSubspace):
            h = ProjectiveSubspace(tuple(h))
            object.__setattr__(self, "subspace", h)
        n = self.space.dim
        if h.ambient_dim != n + 2:
            raise DimensionMismatch("subspace does not live in the lifted space")
        d = h.dim - 1
        if not 1 <= d <= n - 1:
            raise InvalidSurface(f"subspace of projective dimension {h.dim} gives d = {d}, need 1..{n - 1}")
        got = quadric_intersection_dim(self.space, h)
        if got != d:
            what = "empty" if got is None else f"of dimension {got}"
            raise InvalidSurface(f"N ∩ h is {what}, expected dimension {d}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "signature", signature(gram(self.space.lifted(), h.basis)))

    @property
    def semidefinite(self) -> bool:
        return not self.signature.indefinite

    def contains(self, P) -> bool:
        coords = P.coords if isinstance(P, ProjectivePoint) else la.vec(P)
        return eval_Q(self.space.lifted(), coords) == 0 and self.subspace.contains(coords)

    @classmethod
    def from_hypersurface(cls, H: Hypersurface) -> "SurfaceD":
        return cls(H.space, H.hyperplane)

    def __repr__(self):
        return f"SurfaceD(d={self.d}, signature={tuple(self.signature)}, {self.subspace!r})"


def make_surface(space: QuadraticSpace, h) -> SurfaceD:
    return SurfaceD(space, h if isinstance(h, ProjectiveSubspace) else ProjectiveSubspace(tuple(h)))


def act_surface(M: ConformalMap, s: SurfaceD) -> SurfaceD:
    if M.space != s.space:
        raise DimensionMismatch("map and surface live in different spaces")
    return SurfaceD(s.space, ProjectiveSubspace(tuple(la.matvec(M.matrix, b) for b in s.subspace.basis)))


def surface_points_equal(s1: SurfaceD, s2: SurfaceD) -> bool:
    """Whether N ∩ h1 and N ∩ h2 are the same point set.

    A semidefinite restriction vanishes exactly on its radical, so such a
    surface is the projective subspace P(rad).  An indefinite restriction
    has isotropic vectors spanning all of h, so the point set determines h.
    The two kinds never coincide: a cone cut out by an indefinite form is
    not a linear subspace.
    """
    if s1.space != s2.space:
        raise DimensionMismatch("surfaces live in different spaces")
    if s1.d != s2.d:
        return False
    if s1.semidefinite and s2.semidefinite:
        return radical(s1.space, s1.subspace) == radical(s2.space, s2.subspace)
    if s1.semidefinite or s2.semidefinite:
        return False
    return s1.subspace == s2.subspace


def _isometric_bases(space: QuadraticSpace, s1: SurfaceD, s2: SurfaceD):
    """Bases u of h1 and v of h2 with equal Gram matrices, plus exactness flag."""
    L = space.lifted()

    def diagonal_basis(s: SurfaceD):
        P, D = congruent_diagonalize(gram(L, s.subspace.basis))
        vs = [la.matvec(la.transpose(s.subspace.basis), col) for col in la.transpose(P)]
        groups = {1: [], -1: [], 0: []}
        for v, i in zip(vs, range(len(vs))):
            groups[(D[i][i] > 0) - (D[i][i] < 0)].append((v, D[i][i]))
        return groups[1] + groups[-1] + groups[0]

    src = diagonal_basis(s1)
    tgt = diagonal_basis(s2)
    scales = []
    for (_, d1), (_, d2) in zip(src, tgt):
        scales.append(Fraction(1) if d1 == 0 else la.rational_sqrt(d1 / d2))
    if all(c is not None for c in scales):
        return [u for u, _ in src], [la.scale(c, v) for c, (v, _) in zip(scales, tgt)], True
    u = [[float(x) for x in v] for v, _ in src]
    v = []
    for (_, d1), (w, d2) in zip(src, tgt):
        c = 1.0 if d1 == 0 else float(np.sqrt(float(d1 / d2)))
        v.append([c * float(x) for x in w])
    return u, v, False


def _subspace_residual(M, s1: SurfaceD, s2: SurfaceD) -> float:
    """Largest relative distance of M b (b in a basis of h1) from h2."""
    Mf = np.asarray(M, dtype=float)
    B2 = np.array([[float(x) for x in b] for b in s2.subspace.basis]).T
    Qb, _ = np.linalg.qr(B2)
    worst = 0.0
    for b in s1.subspace.basis:
        img = Mf @ np.array([float(x) for x in b])
        off = img - Qb @ (Qb.T @ img)
        worst = max(worst, float(np.linalg.norm(off) / np.linalg.norm(img)))
    return worst


def same_orbit_given_realizations(
    s1: SurfaceD, s2: SurfaceD, tol_out: float = TOL_OUT
) -> Optional[Witness]:
    """An element of O(p+1, q+1) mapping h1 onto h2 when the restricted
    signatures agree, otherwise None.

    None only says that *these* realizations are incompatible; the same
    point set can have other realizations with another signature.
    """
    if s1.space != s2.space:
        raise DimensionMismatch("surfaces live in different spaces")
    if s1.d != s2.d:
        raise DimensionMismatch("surfaces have different dimensions")
    if s1.signature != s2.signature:
        return None
    space = s1.space
    u, v, exact = _isometric_bases(space, s1, s2)
    M = extend_isometry(space, u, v, exact=exact, tol_out=tol_out)
    orth = orthogonality_residual(space, M)
    img = _subspace_residual(M, s1, s2)
    if orth > tol_out or img > tol_out:
        raise NumericalError(f"orbit map residuals too large: {orth:.3g}, {img:.3g}")
    return Witness(M, exact, orth, img)


def definite_case_orbit(s1: SurfaceD, s2: SurfaceD, tol_out: float = TOL_OUT) -> Witness:
    """Map between two d-spheres/d-planes of a definite space (p = 0 or q = 0).

    There the restriction to a realizing subspace is always nondegenerate
    and indefinite with one sign of multiplicity one, so the signatures
    agree and a map always exists.
    """
    if not s1.space.definite:
        raise ValueError("definite_case_orbit needs p = 0 or q = 0")
    w = same_orbit_given_realizations(s1, s2, tol_out)
    assert w is not None, "signatures of equal-dimension surfaces differ in a definite space"
    return w


def sample_rational_points(
    space: QuadraticSpace, h: ProjectiveSubspace, count: int, seed: int = 0
) -> list[ProjectivePoint]:
    """Rational points of N ∩ h, found by sweeping lines through one rational
    base point.  Returns an empty list if no rational base point is found
    among the diagonal directions of Q^ restricted to h.
    """
    L = space.lifted()
    basis = h.basis
    P, D = congruent_diagonalize(gram(L, basis))
    dirs = [la.matvec(la.transpose(basis), col) for col in la.transpose(P)]
    d = [D[i][i] for i in range(len(D))]
    base = None
    for i, di in enumerate(d):
        if di == 0:
            base = dirs[i]
            break
    if base is None:
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                r = la.rational_sqrt(-d[j] / d[i]) if d[i] * d[j] < 0 else None
                if r is not None:
                    base = la.add(la.scale(r, dirs[i]), dirs[j])
                    break
            if base is not None:
                break
    if base is None:
        return []
    rng = random.Random(seed)
    out = [ProjectivePoint(base)]
    attempts = 0
    while len(out) < count and attempts < 50 * count:
        attempts += 1
        c = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in basis]
        w = la.matvec(la.transpose(basis), c)
        pt = la.sub(la.scale(eval_Q(L, w), base), la.scale(2 * eval_B(L, base, w), w))
        if not la.is_zero(pt):
            out.append(ProjectivePoint(pt))
    return out

