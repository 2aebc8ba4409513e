import random
from fractions import Fraction

from k3cone.intmath import (
    adjugate,
    column_hnf_diag,
    content,
    det,
    dot,
    mat_vec,
    nullspace_vector,
    primitive,
    rank,
    solve_unique,
    unimodular_clear,
)


def frac_det(m):
    m = [[Fraction(x) for x in row] for row in m]
    n = len(m)
    sign = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    out = Fraction(sign)
    for i in range(n):
        out *= m[i][i]
    return out


def test_content_primitive():
    assert content([6, -9, 12]) == 3
    assert primitive([6, -9, 12]) == (2, -3, 4)
    assert primitive([0, -4, 0]) == (0, -1, 0)


def test_det_matches_fraction_elimination():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 5)
        m = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        assert det(m) == frac_det(m)


def test_adjugate_identity():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(1, 4)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        d = det(m)
        adj = adjugate(m)
        prod = [[sum(m[i][k] * adj[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)]
        for i in range(n):
            for j in range(n):
                assert prod[i][j] == (d if i == j else 0)


def test_rank_random():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(2, 4)
        k = rng.randint(1, n)
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(k)]
        # duplicate a row: rank must not change
        extended = rows + [rows[0]]
        assert rank(extended) == rank(rows)
        assert rank(rows) <= min(k, n)


def test_solve_unique_roundtrip():
    rng = random.Random(19)
    tried = 0
    while tried < 50:
        n = rng.randint(2, 4)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        if det(m) == 0:
            continue
        tried += 1
        x = [rng.randint(-7, 7) for _ in range(n)]
        b = mat_vec(m, x)
        got = solve_unique(m, b)
        assert list(got) == [Fraction(v) for v in x]


def test_nullspace_vector():
    rng = random.Random(23)
    found = 0
    while found < 30:
        n = rng.randint(2, 4)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n - 1)]
        if rank(rows) == n:
            continue
        v = nullspace_vector(rows, n)
        assert v is not None and any(v)
        for row in rows:
            assert dot(row, v) == 0
        found += 1


def test_unimodular_clear():
    rng = random.Random(31)
    for _ in range(200):
        n = rng.randint(1, 5)
        a = [rng.randint(-9, 9) for _ in range(n)]
        if all(x == 0 for x in a):
            continue
        cols = unimodular_clear(a)
        u = [[cols[j][i] for j in range(n)] for i in range(n)]
        assert abs(det(u)) == 1
        image = [dot(a, c) for c in cols]
        assert image[0] == content(a)
        assert all(x == 0 for x in image[1:])


def test_column_hnf_diag():
    rng = random.Random(37)
    tried = 0
    while tried < 100:
        n = rng.randint(1, 4)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        d = det(m)
        if d == 0:
            continue
        tried += 1
        diag = column_hnf_diag(m)
        assert all(x > 0 for x in diag)
        prod = 1
        for x in diag:
            prod *= x
        assert prod == abs(d)
