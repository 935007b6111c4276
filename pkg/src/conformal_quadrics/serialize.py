"""JSON encodings shared by the library and the command line.

Rationals travel as strings, ``"3"`` or ``"-5/4"`` (denominator positive,
lowest terms); vectors and matrices as (row-major) arrays of such strings.
Floating-point matrices travel as plain JSON numbers.
"""

from __future__ import annotations

from typing import Any

import numpy as np

from . import _linalg as la
from .forms import QuadraticSpace
from .projective import ProjectivePoint, ProjectiveSubspace
from .quadric_surfaces import AffineQuadric, Hypersurface, SurfaceD
from .transforms import ConformalMap, generator_from_json


def rational(x) -> str:
    return la.fmt(x)


def parse_rational(s):
    if isinstance(s, bool) or not isinstance(s, (str, int, float)):
        raise TypeError(f"expected a rational string or number, got {s!r}")
    return la.frac(s)


def vector(v) -> list[str]:
    return [rational(x) for x in v]


def parse_vector(obj) -> tuple:
    if not isinstance(obj, list):
        raise TypeError("vector must be a JSON array")
    return tuple(parse_rational(x) for x in obj)


def matrix(m) -> list:
    if isinstance(m, np.ndarray) and m.dtype != object:
        return [[float(x) for x in row] for row in m]
    return [[rational(x) for x in row] for row in m]


def parse_matrix(obj) -> tuple:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise TypeError("matrix must be an array of arrays")
    return la.mat(parse_vector(r) for r in obj)


def point(P: ProjectivePoint) -> list[str]:
    return vector(P.canonical())


def subspace(h: ProjectiveSubspace) -> list:
    return [vector(la.primitive(b)) for b in h.basis]


def parse_space(obj: dict) -> QuadraticSpace:
    try:
        p, q = obj["p"], obj["q"]
    except KeyError as exc:
        raise KeyError(f"missing field {exc.args[0]!r}") from None
    if not isinstance(p, int) or not isinstance(q, int) or isinstance(p, bool) or isinstance(q, bool):
        raise TypeError("p and q must be integers")
    return QuadraticSpace(p, q)


def affine_quadric(q: AffineQuadric) -> dict:
    return {
        "p": q.space.p,
        "q": q.space.q,
        "alpha": rational(q.alpha),
        "beta": vector(q.beta),
        "gamma": rational(q.gamma),
    }


def parse_affine_quadric(obj: dict, space: QuadraticSpace | None = None) -> AffineQuadric:
    space = space or parse_space(obj)
    return AffineQuadric(space, parse_rational(obj["alpha"]), parse_vector(obj["beta"]), parse_rational(obj["gamma"]))


def hypersurface(H: Hypersurface) -> dict:
    return {"normal": vector(la.primitive(H.normal))}


def parse_hypersurface(obj: dict, space: QuadraticSpace) -> Hypersurface:
    """Accepts either {"normal": [...]} or the affine fields alpha/beta/gamma."""
    from .quadric_surfaces import affine_to_projective

    if "normal" in obj:
        return Hypersurface(space, parse_vector(obj["normal"]))
    return affine_to_projective(parse_affine_quadric(obj, space))


def surface(s: SurfaceD) -> dict:
    return {"basis": subspace(s.subspace)}


def parse_surface(obj: dict, space: QuadraticSpace) -> SurfaceD:
    basis = obj["basis"]
    if not isinstance(basis, list):
        raise TypeError("basis must be an array of vectors")
    return SurfaceD(space, ProjectiveSubspace(tuple(parse_vector(b) for b in basis)))


def word(w) -> list[dict]:
    return [g.to_json() for g in w]


def parse_word(obj) -> list:
    if not isinstance(obj, list):
        raise TypeError("generator word must be an array")
    return [generator_from_json(g) for g in obj]


def conformal_map(M: ConformalMap) -> dict[str, Any]:
    return {"p": M.space.p, "q": M.space.q, "matrix": matrix(M.matrix)}
