"""Exact linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction`, matrices are tuples of
row tuples.  Everything here is small-dimensional (at most a few dozen
entries), so plain Python loops are fine and keep the arithmetic exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple
Matrix = tuple


def frac(x) -> Fraction:
    """Coerce ``x`` to a Fraction.

    Accepts ints, Fractions, ``"num/den"`` strings and finite floats.  Floats
    are read through their shortest repr, so ``0.1`` becomes ``1/10``.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rational numbers")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if x != x or x in (float("inf"), float("-inf")):
            raise ValueError(f"non-finite value {x!r}")
        return Fraction(repr(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    # numpy scalars and friends
    try:
        import numbers

        if isinstance(x, numbers.Integral):
            return Fraction(int(x))
        if isinstance(x, numbers.Real):
            return frac(float(x))
    except ImportError:  # pragma: no cover
        pass
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def vec(xs: Iterable) -> Vector:
    return tuple(frac(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> Matrix:
    m = tuple(vec(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def identity(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def diag(entries: Sequence) -> Matrix:
    n = len(entries)
    return tuple(
        tuple(frac(entries[i]) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt) for row in a)


def matvec(a: Matrix, v: Sequence) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def dot(u: Sequence, v: Sequence):
    return sum((x * y for x, y in zip(u, v)), Fraction(0))


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(x + y for x, y in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(x - y for x, y in zip(u, v))


def scale(c, v: Sequence) -> Vector:
    return tuple(c * x for x in v)


def is_zero(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [list(map(frac, r)) for r in rows]
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1]) if rows else 0


def independent_subset(vectors: Sequence[Sequence]) -> list[int]:
    """Indices of a maximal linearly independent subset, greedy in input order."""
    chosen: list[int] = []
    basis: list[Sequence] = []
    for i, v in enumerate(vectors):
        if rank(basis + [v]) > len(basis):
            basis.append(v)
            chosen.append(i)
    return chosen


def nullspace(a: Sequence[Sequence], n_cols: int | None = None) -> list[Vector]:
    """Basis of {x : a x = 0}."""
    if not a:
        if n_cols is None:
            raise ValueError("need n_cols for an empty matrix")
        return [tuple(Fraction(int(i == j)) for j in range(n_cols)) for i in range(n_cols)]
    r, pivots = rref(a)
    n = len(a[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, pc in zip(r, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> Vector | None:
    """One solution of a x = b (free variables set to zero), or None."""
    n = len(a[0])
    aug = [list(row) + [frac(bi)] for row, bi in zip(a, b)]
    r, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, pc in zip(r, pivots):
        x[pc] = row[n]
    return tuple(x)


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(row[n:]) for row in r)


def det(a: Matrix) -> Fraction:
    m = [list(map(frac, r)) for r in a]
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        result *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def min_norm_solve(a: Sequence[Sequence], b: Sequence) -> Vector:
    """Least-Euclidean-norm solution of a x = b for full-row-rank a."""
    at = transpose(mat(a))
    gram = matmul(mat(a), at)
    y = solve(gram, b)
    if y is None:
        raise ValueError("rows are linearly dependent")
    return matvec(at, y)


def proportional(u: Sequence, v: Sequence) -> bool:
    """True iff u and v are nonzero multiples of each other (all 2x2 minors vanish)."""
    if is_zero(u) or is_zero(v):
        return False
    n = len(u)
    return all(u[i] * v[j] == u[j] * v[i] for i in range(n) for j in range(i + 1, n))


def primitive(v: Sequence) -> Vector:
    """Integer multiple of v with gcd 1 and positive first nonzero entry."""
    v = vec(v)
    if is_zero(v):
        raise ValueError("zero vector has no primitive representative")
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for k in ints:
        g = gcd(g, k)
    lead = next(k for k in ints if k != 0)
    sgn = 1 if lead > 0 else -1
    return tuple(Fraction(sgn * k // g) for k in ints)


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    x = frac(x)
    if x < 0:
        return None
    n, d = _isqrt_exact(x.numerator), _isqrt_exact(x.denominator)
    if n is None or d is None:
        return None
    return Fraction(n, d)


def _isqrt_exact(n: int) -> int | None:
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


def fmt(x: Fraction) -> str:
    """Canonical string: ``"n"`` for integers, ``"n/d"`` otherwise."""
    x = frac(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
