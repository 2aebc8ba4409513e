"""Exact integer and rational linear algebra helpers.

Everything in this module is pure and deterministic; vectors are tuples of
Python ints, matrices are sequences of rows.  No floating point is used
anywhere: rank, determinant and solving go through fraction-free elimination
or ``fractions.Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

Vec = tuple

def dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))

def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))

def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))

def vneg(a):
    return tuple(-x for x in a)

def vscale(k, a):
    return tuple(k * x for x in a)

def is_zero(a) -> bool:
    return all(x == 0 for x in a)

def content(a) -> int:
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in a:
        g = gcd(g, abs(x))
    return g

def primitive(a):
    """Divide a nonzero integer vector by its content, keeping orientation."""
    g = content(a)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in a) if g > 1 else tuple(a)

def mat_vec(rows, v):
    return tuple(dot(row, v) for row in rows)

def rank(rows) -> int:
    """Rank of an integer (or rational) matrix, by Gaussian elimination."""
    work = [[Fraction(x) for x in row] for row in rows]
    cols = len(work[0]) if work else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][c]
        for i in range(r + 1, len(work)):
            if work[i][c] != 0:
                f = work[i][c] * inv
                for j in range(c, cols):
                    work[i][j] -= f * work[r][j]
        r += 1
        if r == len(work):
            break
    return r

def det(M) -> int:
    """Determinant of a square integer matrix (Bareiss, exact)."""
    n = len(M)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]

def adjugate(M):
    """Adjugate of a square integer matrix: M @ adj(M) == det(M) * I."""
    n = len(M)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[M[r][c] for c in range(n) if c != i] for r in range(n) if r != j]
            adj[i][j] = (-1) ** (i + j) * det(minor)
    return adj

def solve_unique(M, b):
    """Solve M x = b for square nonsingular M; returns a Fraction tuple."""
    d = det(M)
    if d == 0:
        raise ValueError("matrix is singular")
    adj = adjugate(M)
    return tuple(Fraction(dot(row, b), d) for row in adj)

def nullspace_vector(rows, n):
    """Primitive integer spanning vector of a one-dimensional nullspace.

    ``rows`` are integer row vectors of length ``n`` whose common kernel is
    required to be exactly one-dimensional; raises otherwise.
    """
    work = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise ValueError("nullspace is not one-dimensional")
    fc = free[0]
    sol = [Fraction(0)] * n
    sol[fc] = Fraction(1)
    for i, pc in enumerate(pivots):
        sol[pc] = -work[i][fc]
    den = 1
    for x in sol:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = tuple(int(x * den) for x in sol)
    return primitive(ints)

def column_hnf_diag(cols):
    """Diagonal of the lower-triangular column Hermite form of a square
    nonsingular integer matrix given by its columns."""
    n = len(cols)
    work = [list(c) for c in cols]
    diag = []
    for i in range(n):
        live = [j for j in range(i, n) if work[j][i] != 0]
        if not live:
            raise ValueError("matrix is singular")
        # Euclid on the row-i entries of the live columns.
        while len(live) > 1:
            live.sort(key=lambda j: abs(work[j][i]))
            a = live[0]
            for j in live[1:]:
                q = work[j][i] // work[a][i]
                if q:
                    for r in range(n):
                        work[j][r] -= q * work[a][r]
            live = [j for j in live if work[j][i] != 0]
        j = live[0]
        if j != i:
            work[i], work[j] = work[j], work[i]
        if work[i][i] < 0:
            work[i] = [-x for x in work[i]]
        for j in range(i + 1, n):
            if work[j][i] != 0:
                q = work[j][i] // work[i][i]
                for r in range(n):
                    work[j][r] -= q * work[i][r]
        diag.append(work[i][i])
    return diag

def unimodular_clear(a):
    """Columns of a unimodular U with a . U = (g, 0, ..., 0), g = content(a).

    Returns a list of n column vectors; the first spans a solution direction
    for the functional, the rest span its integer kernel.
    """
    n = len(a)
    cols = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    vals = list(a)

    def combine(i, j):
        # Clears vals[j] into vals[i] by a 2x2 unimodular move.
        x, y = vals[i], vals[j]
        while y:
            q = x // y
            x, y = y, x - q * y
            cols[i], cols[j] = cols[j], vsub(cols[i], vscale(q, cols[j]))
            vals[i], vals[j] = vals[j], vals[i] - q * vals[j]

    for j in range(1, n):
        if vals[j] != 0:
            combine(0, j)
    if vals[0] < 0:
        cols[0] = vneg(cols[0])
        vals[0] = -vals[0]
    return cols
