"""Constructive Witt extension in R^{p+1,q+1} by reflections.

Every routine runs either exactly (object arrays of Fractions, chosen
automatically when all inputs are rational) or in binary64 with residual
checks.  The isometry extension works as follows:

1. split the source span into its radical and a complement, diagonalizing
   the complement by congruence;
2. give every radical vector a hyperbolic partner orthogonal to everything
   else, on the source and on the target side alike, which turns each pair
   (r, r') into the orthogonal anisotropic pair (r + r', r - r');
3. map the resulting orthogonal anisotropic families onto each other one
   vector at a time.  At each step both the current image and its target
   are orthogonal to everything already matched, so the reflections used
   fix the earlier vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import _linalg as la
from ._validation import is_exact
from .exceptions import DimensionMismatch, DomainError, NumericalError, SignMismatch
from .forms import QuadraticSpace

__all__ = [
    "Witness",
    "reflection",
    "hyperbolic_partner",
    "map_vector",
    "extend_isometry",
    "orbit_map_hypersurface",
    "orbit_map_null",
    "orthogonality_residual",
    "TOL_IN",
    "TOL_OUT",
]

TOL_IN = 1e-12  # Gram agreement of inputs, relative
TOL_OUT = 1e-9  # residuals of returned matrices, relative
_ISOTROPIC = 1e-12  # |Q(u)| / |u|^2 at or below: isotropic
_ANISOTROPIC = 1e-9  # at or above: anisotropic; in between is refused
_BRANCH = 1e-10  # |Q(u - v)| <= _BRANCH (|u| + |v|)^2 counts as zero
_RANK = 1e-10


@dataclass(frozen=True)
class Witness:
    """An element of O(p+1, q+1) produced by a construction, with its checks."""

    matrix: np.ndarray
    exact: bool
    orthogonality_residual: float
    image_residual: float

    def to_float(self) -> np.ndarray:
        return np.asarray(self.matrix, dtype=float)


def _J(space: QuadraticSpace, exact: bool) -> np.ndarray:
    d = space.lifted().diagonal
    return np.array([Fraction(x) for x in d], dtype=object) if exact else np.array(d, dtype=float)


def _arr(v, exact: bool) -> np.ndarray:
    if exact:
        return np.array([la.frac(x) for x in v], dtype=object)
    return np.array([float(x) for x in v], dtype=float)


def _eye(n: int, exact: bool) -> np.ndarray:
    if exact:
        return np.array(la.identity(n), dtype=object)
    return np.eye(n)


def _auto_exact(exact: Optional[bool], *values) -> bool:
    if exact is not None:
        return exact
    return all(is_exact(v) for v in values)


def _norm(v) -> float:
    return float(np.max(np.abs(np.asarray(v, dtype=float)))) if len(v) else 0.0


def _check_len(space: QuadraticSpace, v) -> None:
    if len(v) != space.dim + 2:
        raise DimensionMismatch(f"vector has length {len(v)}, expected {space.dim + 2}")


def orthogonality_residual(space: QuadraticSpace, M) -> float:
    """max |(M^T J M - J)_ij| evaluated in floating point."""
    Mf = np.asarray(M, dtype=float)
    J = np.diag(np.array(space.lifted().diagonal, dtype=float))
    return float(np.max(np.abs(Mf.T @ J @ Mf - J)))


# -- reflections --------------------------------------------------------------


def _reflection(J: np.ndarray, w: np.ndarray, exact: bool) -> np.ndarray:
    qw = np.dot(J * w, w)
    return _eye(len(w), exact) - np.outer(w, J * w) * (2 / qw if exact else 2.0 / qw)


def reflection(space: QuadraticSpace, w: Sequence, exact: Optional[bool] = None) -> np.ndarray:
    """Matrix of x -> x - 2 B(x, w) / Q(w) w."""
    _check_len(space, w)
    exact = _auto_exact(exact, w)
    J = _J(space, exact)
    w = _arr(w, exact)
    qw = np.dot(J * w, w)
    if exact:
        if qw == 0:
            raise DomainError("cannot reflect in an isotropic vector")
    elif abs(qw) <= _ANISOTROPIC * float(np.dot(w, w)):
        raise NumericalError("reflection vector is isotropic or nearly so")
    return _reflection(J, w, exact)


# -- hyperbolic partners --------------------------------------------------------


def _solve_constraints(rows: list, rhs: list, exact: bool) -> Optional[np.ndarray]:
    """Minimum-norm solution of rows @ z = rhs, None if inconsistent."""
    if exact:
        keep = la.independent_subset([tuple(r) for r in rows])
        A = [tuple(rows[i]) for i in keep]
        b = [rhs[i] for i in keep]
        z = la.min_norm_solve(A, b)
        if any(la.dot(r, z) != c for r, c in zip(rows, rhs)):
            return None
        return np.array(z, dtype=object)
    A = np.array(rows, dtype=float)
    b = np.array(rhs, dtype=float)
    z, *_ = np.linalg.lstsq(A, b, rcond=None)
    scale = max(1.0, float(np.max(np.abs(A))))
    if np.max(np.abs(A @ z - b)) > 1e-8 * scale:
        return None
    return z


def _partner(J, w, avoid, exact) -> np.ndarray:
    rows = [J * w] + [J * u for u in avoid]
    rhs = [1] + [0] * len(avoid)
    if exact:
        rhs = [Fraction(x) for x in rhs]
    z = _solve_constraints(rows, rhs, exact)
    if z is None:
        raise DomainError("no hyperbolic partner exists orthogonal to the given vectors")
    if not exact:
        best = _shortest_partner(J, np.array(rows, dtype=float), z)
        if best is not None:
            return best
    qz = np.dot(J * z, z)
    return z - (qz / 2) * w


def _shortest_partner(J, A: np.ndarray, z0: np.ndarray) -> Optional[np.ndarray]:
    """Euclidean-shortest z with A z = A z0 and Q(z) = 0, or None.

    Writing z = z0 + N y over an orthonormal basis N of ker A, the
    stationarity condition gives y = -mu (I + mu H)^-1 g for the restricted
    form H and g = N^T J z0, leaving one scalar equation in mu.  |y| grows
    with |mu| between the poles, so the root nearest zero is the answer.
    """
    _, sv, vt = np.linalg.svd(A)
    rank = int(np.sum(sv > _RANK * max(1.0, sv[0])))
    N = vt[rank:].T
    if N.shape[1] == 0:
        return None
    h, V = np.linalg.eigh(N.T @ (J[:, None] * N))
    g = V.T @ (N.T @ (J * z0))
    q0 = float(np.dot(J * z0, z0))
    if q0 == 0:
        return z0

    active = np.abs(g) > 1e-14 * max(1.0, float(np.max(np.abs(g))))

    def y_of(mu):
        y = np.zeros_like(g)
        y[active] = -mu * g[active] / (1 + mu * h[active])
        return y

    def f(mu):
        y = y_of(mu)
        return q0 + 2 * float(np.dot(g, y)) + float(np.dot(h * y, y))
    roots = []
    for side in (1.0, -1.0):
        poles = [-1 / x for x, a in zip(h, active) if a and x != 0 and -1 / x * side > 0]
        end = min(poles, key=abs) if poles else None
        lo, hi = 0.0, None
        if end is None:
            step = side
            while abs(step) < 1e12 and np.sign(f(step)) == np.sign(q0):
                step *= 2
            if np.sign(f(step)) == np.sign(q0):
                continue
            hi = step
        else:
            hi = end * (1 - 1e-12)
            if np.sign(f(hi)) == np.sign(q0):
                continue
        for _ in range(200):
            mid = (lo + hi) / 2
            if np.sign(f(mid)) == np.sign(q0):
                lo = mid
            else:
                hi = mid
        roots.append((lo + hi) / 2)
    if not roots:
        return None
    mu = min(roots, key=lambda m: float(np.linalg.norm(y_of(m))))
    z = z0 + N @ (V @ y_of(mu))
    if abs(float(np.dot(J * z, z))) > 1e-12 * max(1.0, float(np.dot(z, z))):
        return None
    return z


def hyperbolic_partner(
    space: QuadraticSpace, w: Sequence, avoid: Sequence[Sequence] = (), exact: Optional[bool] = None
) -> np.ndarray:
    """w' with Q(w') = 0, B(w, w') = 1 and B(w', u) = 0 for every u in ``avoid``.

    ``w`` must be isotropic and orthogonal to ``avoid``.  Among the affine
    family of solutions of the linear conditions the minimum-norm one is
    corrected along ``w``, so the output is deterministic.
    """
    _check_len(space, w)
    for u in avoid:
        _check_len(space, u)
    exact = _auto_exact(exact, w, list(avoid))
    J = _J(space, exact)
    w = _arr(w, exact)
    avoid = [_arr(u, exact) for u in avoid]
    scale = max(1.0, _norm(w)) ** 2
    if _norm(w) == 0:
        raise ValueError("w must be nonzero")
    bad_q = np.dot(J * w, w) != 0 if exact else abs(np.dot(J * w, w)) > _ISOTROPIC * scale
    if bad_q:
        raise DomainError("w is not isotropic")
    for u in avoid:
        b = np.dot(J * w, u)
        if (b != 0) if exact else abs(b) > _ISOTROPIC * max(1.0, _norm(w) * _norm(u)):
            raise DomainError("w must be orthogonal to every vector in avoid")
    return _partner(J, w, avoid, exact)


# -- single vectors ---------------------------------------------------------------


def _residual(J, M, u, v) -> float:
    Mf = np.asarray(M, dtype=float)
    img = float(np.max(np.abs(Mf @ np.asarray(u, dtype=float) - np.asarray(v, dtype=float))))
    Jf = np.diag(np.asarray(J, dtype=float))
    orth = float(np.max(np.abs(Mf.T @ Jf @ Mf - Jf)))
    return max(img, orth)


def _map_anisotropic(J, u, v, exact) -> np.ndarray:
    """Orthogonal M with M u = v by one or two reflections (Q(u) = Q(v) != 0).

    Reflections are in u - v, or in u + v followed by v, so M fixes every
    vector orthogonal to both u and v.
    """
    d = u - v
    s = u + v
    qd = np.dot(J * d, d)
    qs = np.dot(J * s, s)
    qv = np.dot(J * v, v)
    if exact:
        if qd != 0:
            return _reflection(J, d, True)
        return _reflection(J, v, True) @ _reflection(J, s, True)
    if _norm(d) == 0:
        return np.eye(len(u))
    candidates = []
    size = (math.sqrt(float(np.dot(u, u))) + math.sqrt(float(np.dot(v, v)))) ** 2
    if qd != 0:
        candidates.append((abs(qd) <= _BRANCH * size, _reflection(J, d, False)))
    if qs != 0 and qv != 0:
        candidates.append((False, _reflection(J, v, False) @ _reflection(J, s, False)))
    if not candidates:
        raise NumericalError("no usable reflection for this pair of vectors")
    # prefer branches not flagged as near-isotropic, then the smaller residual
    return min(candidates, key=lambda c: (c[0], _residual(J, c[1], u, v)))[1]


def _balance(r, rp, exact: bool):
    """Scale c making r / c and c r' equally long; 1 in exact mode.

    A long isotropic r has a short partner r', and r +- r' are then nearly
    parallel, which ruins the conditioning of the reflections.
    """
    if exact:
        return 1
    return math.sqrt(float(np.linalg.norm(r)) / float(np.linalg.norm(rp)))


def _boost(J, r, rp, lam: float) -> np.ndarray:
    """Orthogonal map r -> lam r, r' -> r' / lam fixing {r, r'}^perp (B(r, r') = 1)."""
    return np.eye(len(J)) + (lam - 1) * np.outer(r, J * rp) + (1 / lam - 1) * np.outer(rp, J * r)


def _sequential(J, sources, targets, exact) -> np.ndarray:
    M = _eye(len(J), exact)
    for x0, y in zip(sources, targets):
        x = M @ x0
        if exact and all(a == b for a, b in zip(x, y)):
            continue
        M = _map_anisotropic(J, x, y, exact) @ M
    return M


def _classify_isotropy(qu, norm_sq: float, exact: bool) -> bool:
    """True when Q(u) is (numerically) zero; refuses ambiguous cases."""
    if exact:
        return qu == 0
    rel = abs(float(qu)) / norm_sq if norm_sq else 0.0
    if rel <= _ISOTROPIC:
        return True
    if rel >= _ANISOTROPIC:
        return False
    raise NumericalError(f"|Q(u)|/|u|^2 = {rel:.3g} is too close to zero to decide isotropy")


def map_vector(space: QuadraticSpace, u: Sequence, v: Sequence, exact: Optional[bool] = None) -> np.ndarray:
    """Orthogonal M with M u = v, given Q(u) = Q(v)."""
    _check_len(space, u)
    _check_len(space, v)
    exact = _auto_exact(exact, u, v)
    J = _J(space, exact)
    u = _arr(u, exact)
    v = _arr(v, exact)
    if _norm(u) == 0 or _norm(v) == 0:
        raise ValueError("u and v must be nonzero")
    qu, qv = np.dot(J * u, u), np.dot(J * v, v)
    scale = max(1.0, _norm(u), _norm(v)) ** 2
    if (qu != qv) if exact else abs(qu - qv) > TOL_IN * scale * len(u):
        raise DomainError(f"Q(u) = {qu} and Q(v) = {qv} differ")
    if _classify_isotropy(qu, float(np.dot(np.asarray(u, float), np.asarray(u, float))), exact):
        up = _partner(J, u, [], exact)
        vp = _partner(J, v, [], exact)
        cu, cv = _balance(u, up, exact), _balance(v, vp, exact)
        M = _sequential(J, [u / cu + cu * up, u / cu - cu * up], [v / cv + cv * vp, v / cv - cv * vp], exact)
        if not exact:
            M = _boost(J, v, vp, cv / cu) @ M
    else:
        M = _map_anisotropic(J, u, v, exact)
    if not exact:
        M = _refine(J, M, [u], [v])
        _verify(space, M, [u], [v])
    return M


# -- tuples -----------------------------------------------------------------------


def _refine(J: np.ndarray, M: np.ndarray, sources: list, targets: list, steps: int = 3) -> np.ndarray:
    """Polish a float solution of M s_i = t_i, M^T J M = J.

    Each round takes one Newton step towards the orthogonal group, then
    corrects the images by the Cayley transform of a least-squares element
    of the Lie algebra, which keeps M orthogonal.  The best iterate wins.
    """
    n = len(J)
    Jm = np.diag(J)
    S = np.array(sources, dtype=float).T
    T = np.array(targets, dtype=float).T
    scale = max(1.0, float(np.max(np.abs(T))))
    # Lie algebra basis: J (e_a e_b^T - e_b e_a^T)
    gens = []
    for a in range(n):
        for b in range(a + 1, n):
            K = np.zeros((n, n))
            K[a, b], K[b, a] = 1.0, -1.0
            gens.append(Jm @ K)
    A = np.array([(G @ T).ravel() for G in gens]).T

    def badness(X):
        orth = float(np.max(np.abs(X.T @ Jm @ X - Jm)))
        return max(orth, float(np.max(np.abs(X @ S - T))) / scale)

    best, best_bad = M, badness(M)
    for _ in range(steps):
        M = M @ (3 * np.eye(n) - Jm @ M.T @ Jm @ M) / 2
        coef, *_ = np.linalg.lstsq(A, (T - M @ S).ravel(), rcond=None)
        D = sum(c * G for c, G in zip(coef, gens))
        M = np.linalg.solve(np.eye(n) - D / 2, np.eye(n) + D / 2) @ M
        bad = badness(M)
        if bad < best_bad:
            best, best_bad = M, bad
    return best


def _float_rank(vectors: list) -> int:
    if not vectors:
        return 0
    s = np.linalg.svd(np.array(vectors, dtype=float), compute_uv=False)
    return int(np.sum(s > _RANK * max(1.0, s[0])))


def _verify(space, M, sources, targets, tol_out: float = TOL_OUT) -> tuple[float, float]:
    scale = max([1.0] + [_norm(w) for w in list(sources) + list(targets)])
    orth = orthogonality_residual(space, M)
    Mf = np.asarray(M, dtype=float)
    img = max(
        [0.0]
        + [
            float(np.max(np.abs(Mf @ np.asarray(s, float) - np.asarray(t, float))))
            for s, t in zip(sources, targets)
        ]
    )
    if orth > tol_out or img > tol_out * scale:
        raise NumericalError(
            f"constructed map fails verification: orthogonality {orth:.3g}, image {img:.3g}"
        )
    return orth, img


def extend_isometry(
    space: QuadraticSpace,
    source: Sequence[Sequence],
    target: Sequence[Sequence],
    exact: Optional[bool] = None,
    tol_in: float = TOL_IN,
    tol_out: float = TOL_OUT,
) -> np.ndarray:
    """Orthogonal M of R^{p+1,q+1} with M source[i] = target[i] for all i.

    The source vectors must be linearly independent and have the same Gram
    matrix as the target vectors (within ``tol_in`` relative in float mode).
    """
    if len(source) != len(target):
        raise DimensionMismatch("source and target must have the same length")
    k = len(source)
    n = space.dim + 2
    if k > n:
        raise DimensionMismatch(f"at most {n} vectors fit in R^{{{space.p + 1},{space.q + 1}}}")
    for w in list(source) + list(target):
        _check_len(space, w)
    exact = _auto_exact(exact, list(source), list(target))
    J = _J(space, exact)
    S = [_arr(w, exact) for w in source]
    T = [_arr(w, exact) for w in target]
    if k == 0:
        return _eye(n, exact)

    G = np.array([[np.dot(J * a, b) for b in S] for a in S], dtype=object if exact else float)
    H = np.array([[np.dot(J * a, b) for b in T] for a in T], dtype=object if exact else float)
    scale = max([1.0] + [_norm(w) for w in S + T]) ** 2
    if exact:
        if not np.array_equal(G, H):
            raise DomainError("source and target Gram matrices differ")
        if la.rank([tuple(w) for w in S]) < k or la.rank([tuple(w) for w in T]) < k:
            raise DomainError("source and target vectors must be linearly independent")
    else:
        if np.max(np.abs(G - H)) > tol_in * scale:
            raise DomainError(
                f"source and target Gram matrices differ by {np.max(np.abs(G - H)):.3g}"
            )
        if _float_rank(S) < k or _float_rank(T) < k:
            raise DomainError("source and target vectors must be linearly independent")

    rad_c, diag_c = _split_radical(G, exact)

    def combine(vs, coeffs):
        return [sum((c[i] * vs[i] for i in range(k)), start=np.zeros(n, dtype=object) if exact else np.zeros(n)) for c in coeffs]

    rad_s, rad_t = combine(S, rad_c), combine(T, rad_c)
    dia_s, dia_t = combine(S, diag_c), combine(T, diag_c)

    def pairs(rad, dia):
        out, partners, scales = [], [], []
        for i, r in enumerate(rad):
            avoid = [x for j, x in enumerate(rad) if j != i] + dia + partners
            partners.append(_partner(J, r, avoid, exact))
        for r, rp in zip(rad, partners):
            c = _balance(r, rp, exact)
            out += [r / c + c * rp, r / c - c * rp]
            scales.append(c)
        return out, partners, scales

    U, part_s, c_s = pairs(rad_s, dia_s)
    V, part_t, c_t = pairs(rad_t, dia_t)
    if exact:
        M = _sequential(J, dia_s + U, dia_t + V, exact)
        for s, t in zip(S, T):
            assert all(a == b for a, b in zip(M @ s, t)), "exact extension failed"
        return M

    candidates = []
    try:
        candidates.append(_complete(J, S + part_s, T + part_t))
    except (NumericalError, np.linalg.LinAlgError):
        pass
    M = _sequential(J, dia_s + U, dia_t + V, exact)
    # undo the balancing: M r_s is (c_s / c_t) r_t so far
    for r, rp, cs, ct in zip(rad_t, part_t, c_s, c_t):
        M = _boost(J, r, rp, ct / cs) @ M
    candidates.append(M)
    failure = None
    for M in candidates:
        M = _refine(J, M, S, T)
        try:
            _verify(space, M, S, T, tol_out)
            return M
        except NumericalError as exc:
            failure = failure or exc
    raise failure


def _complete(J: np.ndarray, base_s: list, base_t: list) -> np.ndarray:
    """M = T_full S_full^-1 from two full bases with equal Gram matrices.

    ``base_s`` and ``base_t`` span nondegenerate subspaces with equal Grams;
    each is completed by a basis of its orthogonal complement that is
    Euclidean-orthonormal before the form is normalized to +-1.
    """
    def full(base):
        B = np.array(base, dtype=float)
        _, sv, vt = np.linalg.svd(B * J)
        rank = int(np.sum(sv > _RANK * max(1.0, sv[0])))
        if rank < len(base):
            raise NumericalError("completion basis is degenerate")
        N = vt[rank:].T
        if N.shape[1] == 0:
            return B.T, ()
        lam, V = np.linalg.eigh(N.T @ (J[:, None] * N))
        if np.min(np.abs(lam)) <= _RANK:
            raise NumericalError("orthogonal complement is numerically degenerate")
        order = np.argsort(-np.sign(lam), kind="stable")
        C = (N @ V[:, order]) / np.sqrt(np.abs(lam[order]))
        return np.hstack([B.T, C]), tuple(np.sign(lam[order]))

    Sf, sig_s = full(base_s)
    Tf, sig_t = full(base_t)
    if sig_s != sig_t:
        raise NumericalError("complements have different signatures")
    return np.linalg.solve(Sf.T, Tf.T).T


def _split_radical(G: np.ndarray, exact: bool) -> tuple[list, list]:
    """Coefficient vectors for a radical basis and a diagonalized complement."""
    k = len(G)
    if exact:
        from .forms import congruent_diagonalize

        rad = la.nullspace([tuple(r) for r in G])
        chosen = list(rad)
        for i in range(k):
            e = tuple(Fraction(int(i == j)) for j in range(k))
            if la.rank(chosen + [e]) > len(chosen):
                chosen.append(e)
        comp = chosen[len(rad):]
        if not comp:
            return rad, []
        Gc = la.matmul(la.matmul(tuple(comp), tuple(map(tuple, G))), la.transpose(tuple(comp)))
        P, D = congruent_diagonalize(Gc)
        assert all(D[i][i] != 0 for i in range(len(D)))
        diag = [tuple(sum((P[j][c] * comp[j][i] for j in range(len(comp))), Fraction(0)) for i in range(k)) for c in range(len(comp))]
        return rad, diag
    w, V = np.linalg.eigh(np.asarray(G, dtype=float))
    cut = _RANK * max(1.0, float(np.max(np.abs(w))))
    rad = [V[:, i] for i in range(k) if abs(w[i]) <= cut]
    diag = [V[:, i] for i in range(k) if abs(w[i]) > cut]
    return rad, diag


# -- hypersurface orbits ------------------------------------------------------------


def _normal(H) -> tuple:
    return tuple(H.normal)


def _hyperplane_residual(space, M, a, a2) -> float:
    """How far M maps {B(a, .) = 0} off {B(a2, .) = 0}, relative."""
    from .projective import hyperplane

    Mf = np.asarray(M, dtype=float)
    J = np.array(space.lifted().diagonal, dtype=float)
    a2f = np.array([float(x) for x in a2])
    worst = 0.0
    for h in hyperplane(space, a).basis:
        hf = np.array([float(x) for x in h])
        img = Mf @ hf
        worst = max(worst, abs(float(np.dot(J * a2f, img))) / (np.linalg.norm(a2f) * np.linalg.norm(img)))
    return worst


def orbit_map_hypersurface(H, H2, exact: Optional[bool] = None) -> Witness:
    """M in O(p+1, q+1) carrying hypersurface H onto H2 (equal signs).

    With normals a, a2 the map sends a to lam * a2 where
    lam = sqrt(Q(a) / Q(a2)); the computation stays exact when that
    square root is rational.
    """
    if H.space != H2.space:
        raise DimensionMismatch("hypersurfaces live in different spaces")
    space = H.space
    L = space.lifted()
    a, a2 = _normal(H), _normal(H2)
    from .forms import eval_Q

    qa, qa2 = eval_Q(L, a), eval_Q(L, a2)
    if (qa > 0) != (qa2 > 0) or (qa < 0) != (qa2 < 0):
        raise SignMismatch("sign mismatch: hypersurfaces lie in different orbits")
    if qa == 0:
        return orbit_map_null(H, H2, exact)
    lam = la.rational_sqrt(qa / qa2)
    if lam is not None and exact is not False:
        M = map_vector(space, a, la.scale(lam, a2), exact=True)
        is_exact = True
    else:
        lam_f = math.sqrt(float(qa) / float(qa2))
        M = map_vector(space, [float(x) for x in a], [lam_f * float(x) for x in a2], exact=False)
        is_exact = False
    return Witness(M, is_exact, orthogonality_residual(space, M), _hyperplane_residual(space, M, a, a2))


def orbit_map_null(H, H2, exact: Optional[bool] = None) -> Witness:
    """Map between two sign-zero hypersurfaces (isotropic normals)."""
    if H.space != H2.space:
        raise DimensionMismatch("hypersurfaces live in different spaces")
    space = H.space
    from .forms import eval_Q

    a, a2 = _normal(H), _normal(H2)
    if eval_Q(space.lifted(), a) != 0 or eval_Q(space.lifted(), a2) != 0:
        raise SignMismatch("sign mismatch: both normals must be isotropic")
    use_exact = exact is not False
    M = map_vector(space, a if use_exact else [float(x) for x in a], a2 if use_exact else [float(x) for x in a2], exact=use_exact)
    return Witness(M, use_exact, orthogonality_residual(space, M), _hyperplane_residual(space, M, a, a2))
