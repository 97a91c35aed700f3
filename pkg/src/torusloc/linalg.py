"""Small exact linear algebra over Q and Z.

Matrices are lists of rows.  Rational routines take and return
``Fraction`` entries; the integer routines (``echelon_basis``,
``int_nullspace``, ``adjugate``) stay in Python ints throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[Fraction]]


def to_fractions(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = to_fractions(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of {x : rows . x = 0}."""
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One solution of rows . x = rhs, or None when inconsistent."""
    if not rows:
        return []
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[-1]
    return x


def det(rows: Sequence[Sequence]) -> Fraction:
    m = to_fractions(rows)
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return d


def inverse(rows: Sequence[Sequence]) -> Matrix:
    n = len(rows)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def matvec(rows: Sequence[Sequence], v: Sequence) -> list:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in rows]


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b) if a and b else max(a, b)


def common_denominator(values) -> int:
    d = 1
    for x in values:
        d = lcm(d, Fraction(x).denominator)
    return d


def primitive_int(v: Sequence[int]) -> tuple[int, ...]:
    v = [int(x) for x in v]
    g = gcd(*v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def echelon_basis(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Integer row echelon form (Hermite style) of the row lattice.

    The nonzero rows returned form a Z-basis of the lattice generated by
    ``rows``; leading entries are positive and strictly move right.
    """
    m = [list(map(int, r)) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    out: list[list[int]] = []
    for c in range(ncols):
        nz = [r for r in m if r[c] != 0]
        if not nz:
            continue
        rest = [r for r in m if r[c] == 0]
        piv = nz[0]
        for r in nz[1:]:
            g, x, y = xgcd(piv[c], r[c])
            a, b = piv[c] // g, r[c] // g
            new_piv = [x * p + y * q for p, q in zip(piv, r)]
            other = [b * p - a * q for p, q in zip(piv, r)]
            piv = new_piv
            if any(other):
                rest.append(other)
        if piv[c] < 0:
            piv = [-x for x in piv]
        # reduce earlier pivot rows against this one
        for prev in out:
            if prev[c]:
                q = prev[c] // piv[c]
                if q:
                    prev[:] = [p - q * s for p, s in zip(prev, piv)]
        out.append(piv)
        m = [r for r in rest if any(r)]
        if not m:
            break
    return out


def adjugate(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], int]:
    """Integer adjugate and determinant via fraction-free Gauss-Jordan.

    Returns ``(adj, d)`` with ``M @ adj == d * I``.  Raises on singular input.
    """
    n = len(rows)
    a = [list(map(int, r)) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    prev = 1
    sign = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        pk = a[k][k]
        rk = a[k]
        for i in range(n):
            if i == k:
                continue
            ai = a[i]
            f = ai[k]
            a[i] = [(pk * x - f * y) // prev for x, y in zip(ai, rk)]
        # rows other than k are now scaled by pk/prev; keep row k consistent
        prev = pk
    # after the sweep every diagonal entry equals the determinant (up to sign)
    d = a[0][0]
    for i in range(n):
        if a[i][i] != d:
            raise ArithmeticError("fraction-free elimination lost consistency")
    adj = [row[n:] for row in a]
    if sign < 0:
        d = -d
        adj = [[-x for x in row] for row in adj]
    return adj, d

