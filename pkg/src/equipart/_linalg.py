"""Small dense linear algebra over exact rationals or floats.

Every routine here works on plain Python sequences.  When all inputs are
``int``/``Fraction`` the arithmetic is exact and every zero test is an exact
comparison; otherwise values are promoted to ``float`` and zero tests use a
relative tolerance.  Callers that must never flip a sign silently get
``None`` ("too close to call") from the float path instead of a guess.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Optional, Sequence

DEFAULT_TOL = 1e-12


def is_exact(values) -> bool:
    """True when every entry of a (possibly nested) sequence is rational."""
    for v in values:
        if isinstance(v, (list, tuple)):
            if not is_exact(v):
                return False
        elif isinstance(v, bool) or not isinstance(v, Rational):
            return False
    return True


def _promote(rows, exact):
    conv = Fraction if exact else float
    return [[conv(x) for x in row] for row in rows]


def solve(A: Sequence[Sequence], b: Sequence, tol: float = DEFAULT_TOL):
    """Solve ``A x = b`` by Gaussian elimination.

    Returns ``(status, x)`` with status one of ``"unique"``,
    ``"inconsistent"`` or ``"underdetermined"``; ``x`` is only set for
    ``"unique"``.  Over-determined consistent systems are fine.
    """
    exact = is_exact(A) and is_exact(b)
    rows = _promote([list(r) + [bi] for r, bi in zip(A, b)], exact)
    n_eq = len(rows)
    m = len(rows[0]) - 1 if rows else 0
    scale = 1.0
    if not exact:
        scale = max((abs(x) for r in rows for x in r[:m]), default=0.0) or 1.0

    def is_zero(x):
        return x == 0 if exact else abs(x) <= tol * scale

    pivots = []
    r = 0
    for c in range(m):
        if exact:
            p = next((i for i in range(r, n_eq) if rows[i][c] != 0), None)
        else:
            p = max(range(r, n_eq), key=lambda i: abs(rows[i][c]), default=None)
            if p is not None and is_zero(rows[p][c]):
                p = None
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        for i in range(n_eq):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / piv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_eq:
            break

    bscale = 1.0 if exact else max(scale, max(abs(row[m]) for row in rows) or 1.0)
    for i in range(r, n_eq):
        if (rows[i][m] != 0) if exact else abs(rows[i][m]) > tol * bscale:
            return "inconsistent", None
    if len(pivots) < m:
        return "underdetermined", None
    x = [None] * m
    for i, c in enumerate(pivots):
        x[c] = rows[i][m] / rows[i][c]
    return "unique", x


def affine_coordinates(points: Sequence[Sequence], target: Optional[Sequence] = None,
                       tol: float = DEFAULT_TOL):
    """Barycentric coordinates of ``target`` (default: origin) w.r.t. ``points``.

    Returns ``(status, coords)`` as :func:`solve`.
    """
    dim = len(points[0])
    if target is None:
        target = [0] * dim
    A = [[p[i] for p in points] for i in range(dim)] + [[1] * len(points)]
    return solve(A, list(target) + [1], tol)


def int_det(M: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in M]
    n = len(a)
    sgn, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sgn = -sgn
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sgn * a[n - 1][n - 1] if n else 1


def _int_simplex_verdict(points) -> Optional[bool]:
    """Orientation-test shortcut for a full-dimensional integer simplex.

    Returns None when the simplex is degenerate and the general path must
    decide.
    """
    cols = [list(p) + [1] for p in points]
    dim = len(cols)
    full = int_det([[c[i] for c in cols] for i in range(dim)])
    if full == 0:
        return None
    origin = [0] * (dim - 1) + [1]
    for j in range(dim):
        rep = cols[:j] + [origin] + cols[j + 1:]
        dj = int_det([[c[i] for c in rep] for i in range(dim)])
        if dj != 0 and (dj > 0) != (full > 0):
            return False
    return True


def origin_in_hull(points: Sequence[Sequence], tol: float = DEFAULT_TOL) -> Optional[bool]:
    """Decide whether the origin lies in the closed convex hull of ``points``.

    Intended for at most ``dim + 1`` points.  Returns ``None`` on the float
    path when the origin is within tolerance of the hull's relative boundary.
    """
    points = [list(p) for p in points]
    exact = is_exact(points)
    if len(points) == 1:
        p = points[0]
        if exact:
            return all(x == 0 for x in p)
        norm = max(abs(x) for x in p)
        return None if norm <= tol else False
    if exact and len(points) == len(points[0]) + 1 and all(
            isinstance(x, int) for p in points for x in p):
        verdict = _int_simplex_verdict(points)
        if verdict is not None:
            return verdict
    status, lam = affine_coordinates(points, tol=tol)
    if status == "inconsistent":
        return False
    if status == "unique":
        if exact:
            return all(x >= 0 for x in lam)
        lo = min(lam)
        if lo > tol:
            return True
        if lo < -tol:
            return False
        return None
    # affinely dependent: the hull is the union of the hulls of the
    # facets (Caratheodory), so recurse
    verdicts = [origin_in_hull(points[:j] + points[j + 1:], tol) for j in range(len(points))]
    if any(v is True for v in verdicts):
        return True
    if any(v is None for v in verdicts):
        return None
    return False


def sign(x, tol: float = 0.0) -> int:
    if x > tol:
        return 1
    if x < -tol:
        return -1
    return 0
