"""Integral quadratic lattices of hyperbolic signature and slice enumeration.

The central object is :class:`NSLattice`, a free abelian group of finite rank
with an integer-valued symmetric bilinear form of signature ``(1, rank - 1)``.
A small catalog of rank-4 lattices relevant to the rest of the package is
available through :func:`catalog`; arbitrary Gram matrices and block
expressions like ``"U(2)+2A1"`` are accepted too.

:func:`solve_slice` enumerates all integer classes with a prescribed pairing
against a fixed positive-square direction and a prescribed self-intersection.
Because the orthogonal complement of such a direction is negative definite,
each slice is a finite set; the enumeration is exact (no floating point).
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt

from .intmath import (
    content,
    det,
    dot,
    is_zero,
    mat_vec,
    unimodular_clear,
    vadd,
    vscale,
    vsub,
)


class NSLattice:
    """A lattice with integer Gram matrix of signature ``(1, rank - 1)``."""

    __slots__ = ("gram", "rank", "name")

    def __init__(self, gram, name=""):
        rows = tuple(tuple(int(x) for x in row) for row in gram)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError("Gram matrix must be square and nonempty")
        for i in range(n):
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        pos, neg, zero = _signature(rows)
        if zero != 0:
            raise ValueError("Gram matrix is degenerate")
        if (pos, neg) != (1, n - 1):
            raise ValueError(
                f"expected signature (1, {n - 1}), got ({pos}, {neg})"
            )
        self.gram = rows
        self.rank = n
        self.name = name

    def pairing(self, a, b) -> int:
        """Bilinear pairing of two integer classes."""
        return sum(a[i] * self.gram[i][j] * b[j]
                   for i in range(self.rank) for j in range(self.rank))

    def square(self, a) -> int:
        return self.pairing(a, a)

    def functional(self, v):
        """Row vector of the linear form ``x -> pairing(v, x)``."""
        return mat_vec(self.gram, v)

    def discriminant(self) -> int:
        return det(self.gram)

    def __repr__(self):
        label = self.name or "?"
        return f"NSLattice({label}, rank={self.rank})"

    def __eq__(self, other):
        return isinstance(other, NSLattice) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)


def _signature(gram):
    """Return ``(positive, negative, zero)`` inertia of a symmetric matrix.

    Congruence diagonalization over the rationals.  When every active
    diagonal entry vanishes but some off-diagonal entry does not, a row/column
    addition creates a nonzero diagonal entry without changing the inertia.
    """
    n = len(gram)
    A = [[Fraction(x) for x in row] for row in gram]
    active = list(range(n))
    pos = neg = 0
    while active:
        p = next((i for i in active if A[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in active for j in active
                         if i != j and A[i][j] != 0), None)
            if pair is None:
                break  # remaining block is identically zero
            i, j = pair
            for k in range(n):
                A[i][k] += A[j][k]
            for k in range(n):
                A[k][i] += A[k][j]
            continue
        if A[p][p] > 0:
            pos += 1
        else:
            neg += 1
        active.remove(p)
        for i in active:
            if A[i][p] != 0:
                f = A[i][p] / A[p][p]
                for k in range(n):
                    A[i][k] -= f * A[p][k]
                for k in range(n):
                    A[k][i] -= f * A[k][p]
    return pos, neg, n - pos - neg


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

def _a_block(m):
    """Negative definite chain block of rank m: -2 on the diagonal, +1 between
    consecutive indices."""
    return [[-2 if i == j else (1 if abs(i - j) == 1 else 0) for j in range(m)]
            for i in range(m)]


def _u_block(k):
    return [[0, k], [k, 0]]


def _direct_sum(blocks):
    n = sum(len(b) for b in blocks)
    G = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        m = len(b)
        for i in range(m):
            for j in range(m):
                G[off + i][off + j] = b[i][j]
        off += m
    return G


_TOKEN = re.compile(
    r"^(?:(?P<mult>\d+)?A(?P<am>\d+)|U(?:\((?P<uk>\d+)\))?|\((?P<diag>-?\d+)\))$"
)


def gram_from_blocks(expr):
    """Build a Gram matrix from a block expression.

    Summands are separated by ``+``: ``(n)`` is a rank-1 block with square
    ``n``, ``Am`` is the rank-m chain block (square -2, consecutive pairing 1),
    optionally with a repetition count as in ``3A1``, and ``U`` / ``U(k)`` is
    the rank-2 block with zero diagonal and off-diagonal entry ``k``.
    """
    blocks = []
    for raw in expr.split("+"):
        tok = raw.strip()
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"unrecognized block {tok!r} in {expr!r}")
        if m.group("am") is not None:
            mult = int(m.group("mult") or 1)
            blocks.extend(_a_block(int(m.group("am"))) for _ in range(mult))
        elif m.group("diag") is not None:
            blocks.append([[int(m.group("diag"))]])
        else:
            blocks.append(_u_block(int(m.group("uk") or 1)))
    if not blocks:
        raise ValueError("empty block expression")
    return _direct_sum(blocks)


_CATALOG_BLOCKS = {
    "V1": "(8)+3A1",
    "V2": "(-4)+(4)+A2",
    "V3": "(4)+A3",
    "V4": "U+2A1",
    "V5": "U(2)+2A1",
    "V6": "U(3)+2A1",
    "V7": "U(4)+2A1",
    "V8": "U+A2",
    "V9": "U(2)+A2",
    "V10": "U(3)+A2",
    "V11": "U(6)+A2",
}

# Three members of the catalog are not block-diagonal in the basis the rest
# of the package works in, so their Gram matrices are given explicitly.
_CATALOG_EXPLICIT = {
    "V12": ((0, 3, 0, 0), (3, -2, 0, 0), (0, 0, -2, 1), (0, 0, 1, -2)),
    "V13": ((2, -1, -1, -1), (-1, -2, 0, 0), (-1, 0, -2, 0), (-1, 0, 0, -2)),
    "V14": ((12, -2, 0, 0), (-2, -2, -1, 0), (0, -1, -2, -1), (0, 0, -1, -2)),
}

CATALOG_NAMES = tuple(f"V{i}" for i in range(1, 15))


def catalog(name):
    """Look up a catalog lattice by name (``"V1"`` .. ``"V14"``), or build one
    from a block expression such as ``"U(3)+2A1"``."""
    key = name.strip().upper()
    if key in _CATALOG_BLOCKS:
        return NSLattice(gram_from_blocks(_CATALOG_BLOCKS[key]), name=key)
    if key in _CATALOG_EXPLICIT:
        return NSLattice(_CATALOG_EXPLICIT[key], name=key)
    return NSLattice(gram_from_blocks(name), name=name.strip())


# ---------------------------------------------------------------------------
# slice enumeration
# ---------------------------------------------------------------------------

def _size_reduce(basis, form_rows):
    """Greedy pairwise size reduction of an integer basis under a positive
    definite form given by precomputed rows ``form_rows`` (so that the form is
    ``u . form_rows(v)``).  Each accepted move strictly shrinks a norm, so the
    sweep terminates."""
    vecs = [tuple(v) for v in basis]

    def norm(u):
        return dot(u, mat_vec(form_rows, u))

    changed = True
    while changed:
        changed = False
        vecs.sort(key=norm)
        for i in range(len(vecs)):
            ni = norm(vecs[i])
            for j in range(len(vecs)):
                if i == j:
                    continue
                t = round(Fraction(dot(vecs[j], mat_vec(form_rows, vecs[i])), ni))
                if t:
                    cand = vsub(vecs[j], vscale(t, vecs[i]))
                    if norm(cand) < norm(vecs[j]):
                        vecs[j] = cand
                        changed = True
    return vecs


def _ldl(M):
    """LDL^T decomposition of a positive definite Fraction matrix."""
    k = len(M)
    L = [[Fraction(0)] * k for _ in range(k)]
    D = [Fraction(0)] * k
    for j in range(k):
        L[j][j] = Fraction(1)
        acc = M[j][j] - sum(D[s] * L[j][s] * L[j][s] for s in range(j))
        if acc <= 0:
            raise ValueError("form is not positive definite")
        D[j] = acc
        for i in range(j + 1, k):
            L[i][j] = (M[i][j] - sum(D[s] * L[i][s] * L[j][s] for s in range(j))) / D[j]
    return L, D


def _int_interval(center, radius_sq):
    """All integers y with (y - center)^2 <= radius_sq, for Fractions.

    The true interval is [center - r, center + r] with r = sqrt(radius_sq);
    each endpoint is bracketed by ``isqrt`` to within one integer, so only two
    candidates per side need an exact test.
    """
    if radius_sq < 0:
        return range(0)
    p, q = center.numerator, center.denominator
    u, v = radius_sq.numerator, radius_sq.denominator
    s = isqrt(u * v)  # floor of sqrt(radius_sq) * v

    def below_upper(y):  # y <= center + sqrt(radius_sq) ?
        d = y - center
        return d <= 0 or d * d <= radius_sq

    def above_lower(y):  # y >= center - sqrt(radius_sq) ?
        d = center - y
        return d <= 0 or d * d <= radius_sq

    hi = (p * v + q * s) // (q * v)  # floor of a lower estimate of the sup
    if below_upper(hi + 1):
        hi += 1
    lo = -((q * (s + 1) - p * v) // (q * v))  # ceil of a lower estimate
    if not above_lower(lo):
        lo += 1
    return range(lo, hi + 1)


def solve_slice(lat, direction, level, target=-2):
    """All integer classes x with ``x . direction == level`` and
    ``x . x == target``, sorted lexicographically.

    ``direction`` must have positive square: its orthogonal complement is then
    negative definite and the slice is a finite ellipsoid section, enumerated
    coordinate by coordinate with exact integer bounds.
    """
    n = lat.rank
    if len(direction) != n:
        raise ValueError("direction has wrong length")
    if lat.square(direction) <= 0:
        raise ValueError("direction must have positive square")
    a = lat.functional(direction)
    g = content(a)
    if level % g:
        return []
    cols = unimodular_clear(a)
    x0 = vscale(level // g, cols[0])
    kernel = cols[1:]

    if not kernel:
        return [x0] if lat.square(x0) == target else []

    neg_gram = [[-x for x in row] for row in lat.gram]
    kernel = _size_reduce(kernel, neg_gram)

    k = len(kernel)
    # Restrict the (negated) form to the kernel:  M positive definite.
    gk = [lat.functional(kv) for kv in kernel]
    M = [[Fraction(-dot(kernel[i], gk[j])) for j in range(k)] for i in range(k)]
    b = [Fraction(dot(x0, gk[j])) for j in range(k)]
    c = lat.square(x0)

    # Solve y^T M y - 2 b^T y + (target - c) = 0 over the integers.
    L, D = _ldl(M)
    # center m = M^{-1} b via forward/back substitution
    z = list(b)
    for i in range(k):
        for j in range(i):
            z[i] -= L[i][j] * z[j]
    for i in range(k):
        z[i] /= D[i]
    m = list(z)
    for i in range(k - 1, -1, -1):
        for j in range(i + 1, k):
            m[i] -= L[j][i] * m[j]
    radius = sum(bi * mi for bi, mi in zip(b, m)) - (target - c)
    if radius < 0:
        return []

    out = []
    y = [0] * k

    def descend(i, budget):
        if i < 0:
            if budget == 0:
                x = x0
                for t in range(k):
                    if y[t]:
                        x = vadd(x, vscale(y[t], kernel[t]))
                out.append(x)
            return
        center = m[i] - sum(L[j][i] * (y[j] - m[j]) for j in range(i + 1, k))
        for yi in _int_interval(center, budget / D[i]):
            y[i] = yi
            descend(i - 1, budget - D[i] * (yi - center) ** 2)
        y[i] = 0

    descend(k - 1, radius)
    return sorted(out)
