"""Quadratic and bilinear forms of signature (p, q), evaluated exactly.

The base space R^{p,q} carries Q(x) = x_1^2 + ... + x_p^2 - x_{p+1}^2 - ...
The lifted space R^{p+1,q+1} carries

    Q^(xi) = xi_0^2 + xi_1^2 + ... + xi_p^2 - xi_{p+1}^2 - ... - xi_{p+q+1}^2

so slot 0 is the extra positive direction and slot p+q+1 the extra negative
one.  Signatures are counted by exact congruence diagonalization, never by
floating-point eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence, Union

from . import _linalg as la
from ._validation import check_square, check_vector
from .exceptions import DimensionMismatch

__all__ = [
    "QuadraticSpace",
    "LiftedSpace",
    "Signature",
    "eval_Q",
    "eval_B",
    "gram",
    "congruent_diagonalize",
    "signature",
]


@dataclass(frozen=True)
class QuadraticSpace:
    """R^{p,q}: p plus signs followed by q minus signs."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("p and q must be nonnegative")
        if self.p + self.q < 2:
            raise ValueError("need p + q >= 2")

    @property
    def dim(self) -> int:
        return self.p + self.q

    @property
    def diagonal(self) -> tuple[int, ...]:
        return (1,) * self.p + (-1,) * self.q

    @property
    def definite(self) -> bool:
        return self.p == 0 or self.q == 0

    def form_matrix(self) -> la.Matrix:
        return la.diag(self.diagonal)

    def lifted(self) -> "LiftedSpace":
        return LiftedSpace(self)


@dataclass(frozen=True)
class LiftedSpace:
    """R^{p+1,q+1} in the coordinate order (xi_0, xi_1..xi_{p+q}, xi_{p+q+1})."""

    base: QuadraticSpace

    @property
    def dim(self) -> int:
        return self.base.dim + 2

    @property
    def diagonal(self) -> tuple[int, ...]:
        return (1,) + self.base.diagonal + (-1,)

    def form_matrix(self) -> la.Matrix:
        return la.diag(self.diagonal)


Space = Union[QuadraticSpace, LiftedSpace]


class Signature(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def rank(self) -> int:
        return self.n_plus + self.n_minus

    @property
    def indefinite(self) -> bool:
        return self.n_plus > 0 and self.n_minus > 0

    @property
    def nondegenerate(self) -> bool:
        return self.n_zero == 0


def _checked(space: Space, x, name="x") -> tuple:
    return check_vector(x, space.dim, name=name)


def eval_Q(space: Space, x: Sequence) -> Fraction:
    """Value of the diagonal quadratic form of ``space`` at ``x``."""
    x = _checked(space, x)
    return sum((s * xi * xi for s, xi in zip(space.diagonal, x)), Fraction(0))


def eval_B(space: Space, x: Sequence, y: Sequence) -> Fraction:
    """Polarization of :func:`eval_Q`; ``eval_B(s, x, x) == eval_Q(s, x)``."""
    x = _checked(space, x)
    y = _checked(space, y, "y")
    return sum((s * a * b for s, a, b in zip(space.diagonal, x, y)), Fraction(0))


def gram(space: Space, vectors: Sequence[Sequence]) -> la.Matrix:
    """Gram matrix of the bilinear form on ``vectors``."""
    vs = [_checked(space, v, "basis vector") for v in vectors]
    return tuple(tuple(eval_B(space, u, v) for v in vs) for u in vs)


def congruent_diagonalize(G) -> tuple[la.Matrix, la.Matrix]:
    """Exact symmetric Gaussian elimination.

    Returns ``(P, D)`` with ``P^T G P == D`` diagonal and ``P`` invertible.
    Pivots on a nonzero diagonal entry when one is left; otherwise, if some
    off-diagonal entry ``G[i][j]`` survives, column/row ``j`` is first added
    into ``i`` so that the new diagonal entry ``2 G[i][j]`` can serve.
    """
    A = [list(r) for r in check_square(G, name="G")]
    n = len(A)
    if n == 0:
        raise DimensionMismatch("empty Gram matrix")
    if any(A[i][j] != A[j][i] for i in range(n) for j in range(i)):
        raise ValueError("Gram matrix must be symmetric")
    P = [list(r) for r in la.identity(n)]

    def add_col(dst: int, src: int, c: Fraction) -> None:
        # A <- E^T A E, P <- P E with E = I + c e_src e_dst^T
        for r in range(n):
            A[r][dst] += c * A[r][src]
        for r in range(n):
            A[dst][r] += c * A[src][r]
        for r in range(n):
            P[r][dst] += c * P[r][src]

    def swap(i: int, j: int) -> None:
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in P:
            row[i], row[j] = row[j], row[i]

    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][i] != 0), None)
        if piv is None:
            pair = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if A[i][j] != 0), None
            )
            if pair is None:
                break
            i, j = pair
            add_col(i, j, Fraction(1))
            piv = i
        swap(k, piv)
        for j in range(k + 1, n):
            if A[k][j] != 0:
                add_col(j, k, -A[k][j] / A[k][k])

    return tuple(map(tuple, P)), tuple(map(tuple, A))


def signature(G) -> Signature:
    """Inertia (n_plus, n_minus, n_zero) of a rational symmetric matrix."""
    _, D = congruent_diagonalize(G)
    d = [D[i][i] for i in range(len(D))]
    return Signature(sum(x > 0 for x in d), sum(x < 0 for x in d), sum(x == 0 for x in d))
