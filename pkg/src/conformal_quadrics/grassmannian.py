"""Gr(2, R^4) as the quadric N^{2,2}.

Wedge coordinates refer to the basis

    f1 = e1^e2, f2 = e1^e3, f3 = e1^e4, f4 = e2^e3, f5 = e2^e4, f6 = e3^e4,

in which v ^ v = (2 x1 x6 - 2 x2 x5 + 2 x3 x4) e1^e2^e3^e4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import _linalg as la
from ._validation import check_square, check_vector
from .exceptions import DomainError
from .forms import QuadraticSpace
from .projective import ProjectivePoint
from .transforms import ConformalMap

__all__ = [
    "PAIRS",
    "WEDGE_GRAM",
    "TO_WEDGE",
    "Plane2",
    "plucker",
    "wedge_Q",
    "wedge_B",
    "is_decomposable",
    "unplucker",
    "sl4_pushforward",
    "to_standard_N22",
    "pushforward_conformal",
]

#: index pairs (i, j), i < j, in basis order f1..f6
PAIRS = tuple(combinations(range(4), 2))

WEDGE_GRAM = la.mat(
    [
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, -1, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, -1, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0],
    ]
)

_h = Fraction(1, 2)
#: Columns are f1+f6/2, f2-f5/2, f3+f4/2 (Q = 1) and f1-f6/2, f2+f5/2,
#: f3-f4/2 (Q = -1), so TO_WEDGE^T WEDGE_GRAM TO_WEDGE = diag(1,1,1,-1,-1,-1).
TO_WEDGE = la.transpose(
    la.mat(
        [
            [1, 0, 0, 0, 0, _h],
            [0, 1, 0, 0, -_h, 0],
            [0, 0, 1, _h, 0, 0],
            [1, 0, 0, 0, 0, -_h],
            [0, 1, 0, 0, _h, 0],
            [0, 0, 1, -_h, 0, 0],
        ]
    )
)
_FROM_WEDGE = la.inverse(TO_WEDGE)
N22 = QuadraticSpace(2, 2)


@dataclass(frozen=True)
class Plane2:
    """A 2-plane in R^4 given by two spanning vectors."""

    u: tuple
    w: tuple

    def __post_init__(self):
        u = check_vector(self.u, 4, name="u")
        w = check_vector(self.w, 4, name="w")
        if all(x == 0 for x in _minors(u, w)):
            raise DomainError("spanning vectors are linearly dependent")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "w", w)


def _minors(u, w) -> tuple:
    return tuple(u[i] * w[j] - u[j] * w[i] for i, j in PAIRS)


def plucker(P: Plane2) -> tuple:
    """The six 2x2 minors of the spanning pair, in basis order."""
    return _minors(P.u, P.w)


def wedge_B(v: Sequence, w: Sequence) -> Fraction:
    v = check_vector(v, 6, name="v")
    w = check_vector(w, 6, name="w")
    return v[0] * w[5] + v[5] * w[0] - v[1] * w[4] - v[4] * w[1] + v[2] * w[3] + v[3] * w[2]


def wedge_Q(v: Sequence) -> Fraction:
    return wedge_B(v, v)


def is_decomposable(v: Sequence) -> bool:
    v = check_vector(v, 6, name="v")
    if la.is_zero(v):
        raise ValueError("zero wedge")
    return wedge_Q(v) == 0


def unplucker(v: Sequence) -> Plane2:
    """A spanning pair for the plane with Plücker coordinates proportional to v.

    With X the antisymmetric 4x4 matrix of v and (i, j) the first pair with
    a nonzero coordinate, rows i and j of X span the plane.
    """
    v = check_vector(v, 6, name="v")
    if not is_decomposable(v):
        raise DomainError("wedge is not decomposable")
    X = [[Fraction(0)] * 4 for _ in range(4)]
    for (i, j), x in zip(PAIRS, v):
        X[i][j] = x
        X[j][i] = -x
    i, j = next(PAIRS[k] for k, x in enumerate(v) if x != 0)
    return Plane2(tuple(X[i]), tuple(X[j]))


def sl4_pushforward(A) -> tuple:
    """Matrix of the induced action of A in SL(4) on wedge coordinates."""
    A = check_square(A, 4, name="A")
    if la.det(A) != 1:
        raise DomainError("A must have determinant 1")
    cols = [_minors(tuple(r[i] for r in A), tuple(r[j] for r in A)) for i, j in PAIRS]
    return la.transpose(cols)


def to_standard_N22(v: Sequence) -> ProjectivePoint:
    """Wedge coordinates -> standard coordinates of R^{3,3}, projectively."""
    v = check_vector(v, 6, name="v")
    return ProjectivePoint(la.matvec(_FROM_WEDGE, v))


def pushforward_conformal(A) -> ConformalMap:
    """The element of O(3,3) acting on N^{2,2} that corresponds to A."""
    At = sl4_pushforward(A)
    return ConformalMap(N22, la.matmul(_FROM_WEDGE, la.matmul(At, TO_WEDGE)))
