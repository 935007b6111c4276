"""Elements of O(p+1, q+1) acting on N^{p,q} as conformal transformations.

Generator lifts are written in split coordinates

    s = xi_0 + xi_last,   mid = (xi_1, ..., xi_n),   t = xi_0 - xi_last,

in which Q^ = s*t + Q(mid) and an embedded point has s = 1, t = -Q(x).

* translation by b:   s -> s,    mid -> mid + s b,   t -> t - 2B(b, mid) - Q(b) s
* dilation by lam:    s -> s/lam, mid -> mid,        t -> lam t
* rotation by R:      diag(1, R, 1)
* inversion:          diag(-1, 1, ..., 1)

A :class:`GeneratorWord` is a composition written left to right like a
matrix product: ``[g1, g2]`` lifts to ``lift(g1) @ lift(g2)``, so ``g2`` is
applied first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

import numpy as np

from . import _linalg as la
from ._validation import check_square, check_vector
from .exceptions import DimensionMismatch, NotOnQuadric, NotOrthogonal, UndefinedPoint
from .forms import QuadraticSpace, eval_B, eval_Q
from .projective import ProjectivePoint, embed, on_quadric, unembed

__all__ = [
    "ConformalMap",
    "Translate",
    "Rotate",
    "Dilate",
    "Invert",
    "GeneratorWord",
    "verify_orthogonal",
    "identity",
    "inversion",
    "translation",
    "rotation",
    "dilation",
    "lift",
    "act_point",
    "act_affine",
    "decompose",
    "estimate_conformal_factor",
]


def verify_orthogonal(space: QuadraticSpace, M) -> bool:
    """Exact test of M^T J^ M == J^."""
    n = space.dim + 2
    M = check_square(M, n, name="M")
    J = space.lifted().diagonal
    for i in range(n):
        for j in range(i, n):
            v = sum((J[k] * M[k][i] * M[k][j] for k in range(n)), Fraction(0))
            if v != (J[i] if i == j else 0):
                return False
    return True


@dataclass(frozen=True, eq=False)
class ConformalMap:
    """An exactly verified element M of O(p+1, q+1).

    ``M`` and ``-M`` induce the same transformation of N^{p,q}; equality of
    ConformalMap objects is equality of matrices, use :meth:`same_action`
    for the projective comparison.
    """

    space: QuadraticSpace
    matrix: tuple

    def __post_init__(self):
        m = check_square(self.matrix, self.space.dim + 2, name="M")
        if not verify_orthogonal(self.space, m):
            raise NotOrthogonal("matrix does not preserve the lifted quadratic form")
        object.__setattr__(self, "matrix", m)

    def __eq__(self, other):
        if not isinstance(other, ConformalMap):
            return NotImplemented
        return self.space == other.space and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.space, self.matrix))

    def __matmul__(self, other: "ConformalMap") -> "ConformalMap":
        if not isinstance(other, ConformalMap):
            return NotImplemented
        if other.space != self.space:
            raise DimensionMismatch("maps act on different spaces")
        return ConformalMap(self.space, la.matmul(self.matrix, other.matrix))

    def __neg__(self) -> "ConformalMap":
        return ConformalMap(self.space, tuple(la.scale(-1, r) for r in self.matrix))

    def inverse(self) -> "ConformalMap":
        # M^-1 = J M^T J for orthogonal M
        J = self.space.lifted().diagonal
        n = len(J)
        return ConformalMap(
            self.space,
            tuple(tuple(J[i] * self.matrix[j][i] * J[j] for j in range(n)) for i in range(n)),
        )

    def same_action(self, other: "ConformalMap") -> bool:
        return self == other or self == -other

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.matrix])

    def __call__(self, x):
        return act_affine(self, x)


def _from_linear(space: QuadraticSpace, f: Callable[[tuple], tuple]) -> ConformalMap:
    """Build the matrix of a linear map given as a function on column vectors."""
    n = space.dim + 2
    cols = [f(tuple(Fraction(int(i == j)) for i in range(n))) for j in range(n)]
    return ConformalMap(space, la.transpose(cols))


def _split(v: Sequence) -> tuple:
    return v[0] + v[-1], tuple(v[1:-1]), v[0] - v[-1]


def _join(s, mid, t) -> tuple:
    return ((s + t) / 2,) + tuple(mid) + ((s - t) / 2,)


def identity(space: QuadraticSpace) -> ConformalMap:
    return ConformalMap(space, la.identity(space.dim + 2))


def inversion(space: QuadraticSpace) -> ConformalMap:
    """omega_0 = diag(-1, 1, ..., 1); acts on R^{p,q} as x -> x / Q(x)."""
    return ConformalMap(space, la.diag((-1,) + (1,) * (space.dim + 1)))


def translation(space: QuadraticSpace, b: Sequence) -> ConformalMap:
    b = check_vector(b, space.dim, name="b")
    qb = eval_Q(space, b)

    def f(v):
        s, mid, t = _split(v)
        return _join(s, la.add(mid, la.scale(s, b)), t - 2 * eval_B(space, b, mid) - qb * s)

    return _from_linear(space, f)


def rotation(space: QuadraticSpace, R) -> ConformalMap:
    """diag(1, R, 1) for R in O(p, q)."""
    n = space.dim
    R = check_square(R, n, name="R")
    J = space.diagonal
    if la.matmul(la.transpose(R), la.matmul(la.diag(J), R)) != la.diag(J):
        raise NotOrthogonal("R does not preserve the quadratic form of R^{p,q}")
    rows = [(Fraction(1),) + (Fraction(0),) * (n + 1)]
    rows += [(Fraction(0),) + R[i] + (Fraction(0),) for i in range(n)]
    rows += [(Fraction(0),) * (n + 1) + (Fraction(1),)]
    return ConformalMap(space, tuple(rows))


def dilation(space: QuadraticSpace, lam) -> ConformalMap:
    lam = la.frac(lam)
    if lam <= 0:
        raise ValueError("dilation factor must be positive")

    def f(v):
        s, mid, t = _split(v)
        return _join(s / lam, mid, lam * t)

    return _from_linear(space, f)


# -- generator words ----------------------------------------------------------


@dataclass(frozen=True)
class Translate:
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "b", la.vec(self.b))

    def lift(self, space):
        return translation(space, self.b)

    def to_json(self):
        return {"translate": [la.fmt(x) for x in self.b]}


@dataclass(frozen=True)
class Rotate:
    R: tuple

    def __post_init__(self):
        object.__setattr__(self, "R", la.mat(self.R))

    def lift(self, space):
        return rotation(space, self.R)

    def to_json(self):
        return {"rotate": [[la.fmt(x) for x in row] for row in self.R]}


@dataclass(frozen=True)
class Dilate:
    lam: Fraction

    def __post_init__(self):
        lam = la.frac(self.lam)
        if lam <= 0:
            raise ValueError("dilation factor must be positive")
        object.__setattr__(self, "lam", lam)

    def lift(self, space):
        return dilation(space, self.lam)

    def to_json(self):
        return {"dilate": la.fmt(self.lam)}


@dataclass(frozen=True)
class Invert:
    def lift(self, space):
        return inversion(space)

    def to_json(self):
        return {"invert": True}


Generator = Union[Translate, Rotate, Dilate, Invert]
GeneratorWord = list  # list[Generator], composed like a matrix product


def generator_from_json(obj: dict) -> Generator:
    if len(obj) != 1:
        raise ValueError(f"generator must have exactly one tag, got {sorted(obj)}")
    (tag, val), = obj.items()
    if tag == "translate":
        return Translate(val)
    if tag == "rotate":
        return Rotate(val)
    if tag == "dilate":
        return Dilate(val)
    if tag == "invert":
        if val is not True:
            raise ValueError('"invert" must be true')
        return Invert()
    raise ValueError(f"unknown generator tag {tag!r}")


def lift(space: QuadraticSpace, word: Sequence[Generator]) -> ConformalMap:
    M = identity(space)
    for g in word:
        M = M @ g.lift(space)
    return M


# -- action ---------------------------------------------------------------------


def act_point(M: ConformalMap, P) -> ProjectivePoint:
    space = M.space
    if not isinstance(P, ProjectivePoint):
        P = ProjectivePoint(P)
    if not on_quadric(space, P):
        raise NotOnQuadric(f"{P!r} is not on the quadric")
    return ProjectivePoint(la.matvec(M.matrix, P.coords))


def act_affine(M: ConformalMap, x: Sequence) -> Optional[tuple]:
    """iota^-1 ∘ psi_M ∘ iota at x; None when the image is a point at infinity."""
    return unembed(M.space, act_point(M, embed(M.space, x)))


def decompose(M: ConformalMap) -> list:
    """Write psi_M as translations, rotations, dilations and inversions.

    The returned word lifts to ``M`` or ``-M`` exactly.  No attempt is made
    to make it short.
    """
    if not isinstance(M, ConformalMap):
        raise TypeError("decompose expects a ConformalMap")
    space = M.space
    n = space.dim
    e_inf = (Fraction(-1),) + (Fraction(0),) * n + (Fraction(1),)
    origin = (Fraction(1),) + (Fraction(0),) * n + (Fraction(1),)
    word: list = []
    cur = M

    def push(g: Generator) -> None:
        # cur <- g^-1 cur, so that M = word · cur holds throughout
        nonlocal cur
        word.append(g)
        cur = _inverse_generator(g).lift(space) @ cur

    y = la.matvec(cur.matrix, e_inf)
    s, mid, t = _split(y)
    if s != 0 or not la.is_zero(mid):
        if s == 0:
            if t == 0:
                i = next(k for k, m in enumerate(mid) if m != 0)
                push(Translate(tuple(Fraction(-int(k == i)) for k in range(n))))
            push(Invert())
            y = la.matvec(cur.matrix, e_inf)
        x0 = unembed(space, y)
        push(Translate(x0))
        push(Invert())

    b = unembed(space, la.matvec(cur.matrix, origin))
    push(Translate(b))
    mu = la.matvec(cur.matrix, origin)[0]
    R = tuple(tuple(row[1:-1]) for row in cur.matrix[1:-1])
    if mu < 0:
        mu = -mu
        R = tuple(la.scale(-1, r) for r in R)
    word += [Rotate(R), Dilate(1 / mu)]

    word = [g for g in word if not _is_trivial(g, n)]
    assert lift(space, word).same_action(M), "decomposition failed to recompose"
    return word


def _inverse_generator(g: Generator) -> Generator:
    # decompose only peels off translations and inversions
    if isinstance(g, Translate):
        return Translate(la.scale(-1, g.b))
    if isinstance(g, Invert):
        return g
    raise TypeError(f"no inverse rule for {g!r}")


def _is_trivial(g: Generator, n: int) -> bool:
    if isinstance(g, Translate):
        return la.is_zero(g.b)
    if isinstance(g, Dilate):
        return g.lam == 1
    if isinstance(g, Rotate):
        return g.R == la.identity(n)
    return False


# -- numerics -------------------------------------------------------------------


def _float_affine(Mf: np.ndarray, J: np.ndarray, x: np.ndarray) -> np.ndarray:
    qx = float(np.dot(J * x, x))
    xi = np.concatenate(([(1 - qx) / 2], x, [(1 + qx) / 2]))
    eta = Mf @ xi
    s = eta[0] + eta[-1]
    if abs(s) <= 1e-14 * np.max(np.abs(eta)):
        raise UndefinedPoint(f"image of {x.tolist()} is at infinity")
    return eta[1:-1] / s


def estimate_conformal_factor(
    M: ConformalMap, x: Sequence[float], step: float = 1e-5, scheme: str = "central"
) -> tuple[float, float]:
    """Finite-difference check that psi_M pulls back B to Omega^2 B at x.

    Returns ``(omega_sq, residual)`` where ``residual`` is the max-norm of
    A^T J A - Omega^2 J for the numerical Jacobian A.  ``scheme`` is
    ``"central"`` or ``"forward"``.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    space = M.space
    n = space.dim
    x = np.asarray([float(v) for v in x])
    if x.shape != (n,):
        raise DimensionMismatch(f"x must have length {n}")
    J = np.asarray(space.diagonal, dtype=float)
    Mf = M.to_numpy()
    A = np.empty((n, n))
    f0 = _float_affine(Mf, J, x) if scheme == "forward" else None
    for i in range(n):
        e = np.zeros(n)
        e[i] = step
        if scheme == "central":
            A[:, i] = (_float_affine(Mf, J, x + e) - _float_affine(Mf, J, x - e)) / (2 * step)
        elif scheme == "forward":
            A[:, i] = (_float_affine(Mf, J, x + e) - f0) / step
        else:
            raise ValueError(f"unknown scheme {scheme!r}")
    pulled = A.T @ np.diag(J) @ A
    omega_sq = float(np.mean(np.diag(pulled) / J))
    residual = float(np.max(np.abs(pulled - omega_sq * np.diag(J))))
    return omega_sq, residual
