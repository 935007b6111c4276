"""Projective points and subspaces of RP^{p+q+1}, the quadric N^{p,q} and
the embedding of R^{p,q} into it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import _linalg as la
from ._validation import check_vector
from .exceptions import DimensionMismatch, NotOnQuadric
from .forms import QuadraticSpace, eval_Q, gram, signature

__all__ = [
    "ProjectivePoint",
    "ProjectiveSubspace",
    "embed",
    "unembed",
    "on_quadric",
    "span",
    "member",
    "quadric_intersection_dim",
    "infinity_point",
    "origin_point",
    "radical",
    "hyperplane",
]


@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    """A nonzero rational vector up to a nonzero scalar.

    Two points compare equal when their coordinate vectors are proportional.
    """

    coords: tuple

    def __post_init__(self):
        c = la.vec(self.coords)
        if la.is_zero(c):
            raise ValueError("the zero vector is not a projective point")
        object.__setattr__(self, "coords", c)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return len(self.coords) == len(other.coords) and la.proportional(self.coords, other.coords)

    def __hash__(self):
        return hash(self.canonical())

    def __len__(self):
        return len(self.coords)

    def canonical(self) -> tuple:
        """Integer representative: gcd 1, first nonzero entry positive."""
        return la.primitive(self.coords)

    def __repr__(self):
        return "[" + ":".join(la.fmt(x) for x in self.canonical()) + "]"


@dataclass(frozen=True, eq=False)
class ProjectiveSubspace:
    """Projectivization of a linear subspace, stored as an independent basis."""

    basis: tuple

    def __post_init__(self):
        vs = [la.vec(v) for v in self.basis]
        if not vs or all(la.is_zero(v) for v in vs):
            raise ValueError("a projective subspace needs a nonzero spanning vector")
        if any(len(v) != len(vs[0]) for v in vs):
            raise DimensionMismatch("basis vectors differ in length")
        keep = la.independent_subset(vs)
        object.__setattr__(self, "basis", tuple(vs[i] for i in keep))

    @property
    def dim(self) -> int:
        """Projective dimension."""
        return len(self.basis) - 1

    @property
    def ambient_dim(self) -> int:
        return len(self.basis[0])

    def contains(self, v) -> bool:
        v = v.coords if isinstance(v, ProjectivePoint) else la.vec(v)
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match the ambient space")
        return la.rank(list(self.basis) + [v]) == len(self.basis)

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def __eq__(self, other):
        if not isinstance(other, ProjectiveSubspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and len(self.basis) == len(other.basis)
            and all(other.contains(v) for v in self.basis)
        )

    def __hash__(self):
        r, _ = la.rref(self.basis)
        return hash(tuple(tuple(row) for row in r))

    def intersection(self, other: "ProjectiveSubspace") -> Optional["ProjectiveSubspace"]:
        """Meet of two subspaces, or None when the underlying spaces meet only in 0."""
        k = len(self.basis)
        cols = list(self.basis) + [la.scale(-1, v) for v in other.basis]
        coeffs = la.nullspace(la.transpose(cols))
        vs = [
            tuple(sum((c[i] * self.basis[i][j] for i in range(k)), Fraction(0)) for j in range(self.ambient_dim))
            for c in coeffs
        ]
        vs = [v for v in vs if not la.is_zero(v)]
        return ProjectiveSubspace(tuple(vs)) if vs else None

    def __repr__(self):
        pts = ", ".join(repr(ProjectivePoint(v)) for v in self.basis)
        return f"ProjectiveSubspace(dim={self.dim}: {pts})"


def infinity_point(space: QuadraticSpace) -> ProjectivePoint:
    """[-1:0:...:0:1], the limit of embed(x) as Q(x) grows along a ray."""
    n = space.dim
    return ProjectivePoint((-1,) + (0,) * n + (1,))


def origin_point(space: QuadraticSpace) -> ProjectivePoint:
    n = space.dim
    return ProjectivePoint((1,) + (0,) * n + (1,))


def embed(space: QuadraticSpace, x: Sequence) -> ProjectivePoint:
    """x -> [(1 - Q(x))/2 : x_1 : ... : x_n : (1 + Q(x))/2]."""
    x = check_vector(x, space.dim, name="x")
    qx = eval_Q(space, x)
    return ProjectivePoint(((1 - qx) / 2,) + x + ((1 + qx) / 2,))


def _point(space: QuadraticSpace, P) -> ProjectivePoint:
    if not isinstance(P, ProjectivePoint):
        P = ProjectivePoint(P)
    if len(P) != space.dim + 2:
        raise DimensionMismatch(f"point has {len(P)} coordinates, expected {space.dim + 2}")
    return P


def on_quadric(space: QuadraticSpace, P) -> bool:
    P = _point(space, P)
    return eval_Q(space.lifted(), P.coords) == 0


def unembed(space: QuadraticSpace, P) -> Optional[tuple]:
    """Inverse of :func:`embed`; None for points at infinity (xi_0 + xi_last = 0)."""
    P = _point(space, P)
    if not on_quadric(space, P):
        raise NotOnQuadric(f"{P!r} is not on N^{{{space.p},{space.q}}}")
    s = P.coords[0] + P.coords[-1]
    if s == 0:
        return None
    return tuple(c / s for c in P.coords[1:-1])


def span(vectors: Iterable) -> ProjectiveSubspace:
    vs = [v.coords if isinstance(v, ProjectivePoint) else v for v in vectors]
    return ProjectiveSubspace(tuple(vs))


def member(P, h: ProjectiveSubspace) -> bool:
    return h.contains(P)


def quadric_intersection_dim(space: QuadraticSpace, h: ProjectiveSubspace) -> Optional[int]:
    """Dimension of N^{p,q} ∩ h, or None when the intersection is empty.

    With G the Gram matrix of Q^ restricted to the vector space underlying h:
    an indefinite G leaves a cone of codimension one; a semidefinite G of
    rank r vanishes exactly on its radical, of projective dimension
    dim(h) - r (empty when the radical is zero).
    """
    if h.ambient_dim != space.dim + 2:
        raise DimensionMismatch("subspace does not live in the lifted space")
    sig = signature(gram(space.lifted(), h.basis))
    if sig.indefinite:
        return h.dim - 1
    if sig.n_zero == 0:
        return None
    return h.dim - sig.rank


def radical(space: QuadraticSpace, h: ProjectiveSubspace) -> Optional[ProjectiveSubspace]:
    """Projectivized radical of Q^ restricted to h (None if nondegenerate)."""
    G = gram(space.lifted(), h.basis)
    coeffs = la.nullspace(G)
    if not coeffs:
        return None
    vs = [
        tuple(sum((c[i] * h.basis[i][j] for i in range(len(h.basis))), Fraction(0)) for j in range(h.ambient_dim))
        for c in coeffs
    ]
    return ProjectiveSubspace(tuple(vs))


def hyperplane(space: QuadraticSpace, normal: Sequence) -> ProjectiveSubspace:
    """The hyperplane {xi : B^(a, xi) = 0}."""
    a = check_vector(normal, space.dim + 2, name="normal")
    if la.is_zero(a):
        raise ValueError("normal vector must be nonzero")
    row = tuple(s * x for s, x in zip(space.lifted().diagonal, a))
    return ProjectiveSubspace(tuple(la.nullspace([row])))
