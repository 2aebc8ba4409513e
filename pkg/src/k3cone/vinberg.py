"""Fundamental-root enumeration for hyperbolic lattices.

Starting from a class of positive square, roots (classes of square -2) are
enumerated level by level: first the root system orthogonal to the base
class, reduced to a simple system by the separator filtration, then the
strictly positive levels, keeping each candidate that pairs nonnegatively
with everything kept before.  The run stops once the kept roots span the
lattice and every facet of the cone they generate has negative semidefinite
Gram matrix; the survivors are the irreducible classes cutting out the
effective cone.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .intmath import det, dot, mat_vec, rank, vneg
from .lattice import NSLattice, solve_slice
from .polyhedra import Cone


class NonTerminationError(RuntimeError):
    """Raised when the level cap is reached without a validated domain."""


@dataclass(frozen=True)
class CurveConfiguration:
    """A set of square -2 classes together with their pairing matrix."""

    lattice: NSLattice
    curves: tuple
    intersections: tuple

    @classmethod
    def from_curves(cls, lat, curves):
        curves = tuple(sorted(tuple(c) for c in curves))
        inter = tuple(
            tuple(lat.pairing(a, b) for b in curves) for a in curves
        )
        for i, row in enumerate(inter):
            if row[i] != -2:
                raise ValueError(f"class {curves[i]} has square {row[i]}, not -2")
            for j, v in enumerate(row):
                if i != j and v < 0:
                    raise ValueError(
                        f"classes {curves[i]} and {curves[j]} pair negatively"
                    )
        return cls(lat, curves, inter)

    def to_dict(self):
        return {
            "lattice": self.lattice.name,
            "curves": [list(c) for c in self.curves],
            "intersections": [list(r) for r in self.intersections],
        }


@dataclass
class VinbergState:
    """Mutable bookkeeping for one enumeration run."""

    base: tuple
    separator: tuple
    accepted: list


def _lex_positive(v):
    for x in v:
        if x > 0:
            return tuple(v)
        if x < 0:
            return tuple(vneg(v))
    raise ValueError("zero vector has no sign")


def choose_separator(lat, roots):
    """Pick a deterministic separating class for a level-zero root system.

    Returns ``(H, positives)`` where H is an integral combination of the
    roots pairing nonzero with each of them and ``positives`` are the roots
    with positive pairing against H.  Roots come in opposite pairs, so
    exactly one member of each pair survives.
    """
    roots = [tuple(r) for r in roots]
    if not roots:
        return (0,) * lat.rank, ()
    reps = sorted({_lex_positive(r) for r in roots})
    for k in range(1, 201):
        h = [0] * lat.rank
        scale = 1
        for r in reps:
            for i, x in enumerate(r):
                h[i] += scale * x
            scale *= k
        h = tuple(h)
        if all(lat.pairing(h, r) != 0 for r in roots):
            pos = tuple(sorted(r for r in roots if lat.pairing(h, r) > 0))
            return h, pos
    raise RuntimeError("no separating combination found")


def simple_roots(lat, positive, separator):
    """Filter a positive system down to its simple roots.

    Roots are grouped by pairing with the separator; a group is admitted
    one level at a time, keeping the roots that pair nonnegatively with
    everything kept at strictly lower levels.
    """
    positive = [tuple(r) for r in positive]
    if not positive:
        return ()
    height = {r: lat.pairing(r, separator) for r in positive}
    kept = []
    for m in range(min(height.values()), max(height.values()) + 1):
        prior = list(kept)
        for r in sorted(r for r in positive if height[r] == m):
            if all(lat.pairing(r, s) >= 0 for s in prior):
                kept.append(r)
    return tuple(sorted(kept))


def _independent_subset(vectors):
    basis = []
    for v in vectors:
        if rank(basis + [list(v)]) > len(basis):
            basis.append(list(v))
    return basis


def _span_coordinates(vectors):
    """Rewrite vectors in an integer coordinate system for their span."""
    basis = _independent_subset(vectors)
    d = len(basis)
    out = []
    for v in vectors:
        # Solve sum_j q_j basis_j = v by elimination over the rationals.
        rows = [[Fraction(basis[j][i]) for j in range(d)] + [Fraction(v[i])]
                for i in range(len(v))]
        piv = 0
        for col in range(d):
            src = next(r for r in range(piv, len(rows)) if rows[r][col] != 0)
            rows[piv], rows[src] = rows[src], rows[piv]
            lead = rows[piv][col]
            rows[piv] = [x / lead for x in rows[piv]]
            for r in range(len(rows)):
                if r != piv and rows[r][col] != 0:
                    f = rows[r][col]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[piv])]
            piv += 1
        q = [rows[i][d] for i in range(d)]
        lcm = 1
        for x in q:
            lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
        out.append(tuple(int(x * lcm) for x in q))
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _neg_semidefinite(m):
    """Exact test: every principal minor of -m is nonnegative."""
    n = len(m)
    neg = [[-m[i][j] for j in range(n)] for i in range(n)]
    for size in range(1, n + 1):
        for idx in itertools.combinations(range(n), size):
            sub = [[neg[i][j] for j in idx] for i in idx]
            if det(sub) < 0:
                return False
    return True


def validate_domain(cfg):
    """Check the stopping criterion on a root configuration.

    True iff the roots spanning each facet of the cone they generate have
    negative semidefinite Gram matrix.  The cone is taken inside the span
    of the roots; a single root passes trivially.
    """
    roots = cfg.curves
    if not roots:
        return False
    d = rank([list(r) for r in roots])
    if d == 1:
        return True
    coords = _span_coordinates(roots)
    cone = Cone.from_rays(coords)
    for facet in cone.facets:
        on = [i for i, q in enumerate(coords) if dot(facet, q) == 0]
        gram = [[cfg.intersections[i][j] for j in on] for i in on]
        if not _neg_semidefinite(gram):
            return False
    return True


def _default_base(lat):
    n = lat.rank
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        if lat.pairing(e, e) > 0:
            return e
    radius = 1
    while radius <= 8:
        best = None
        for v in itertools.product(range(-radius, radius + 1), repeat=n):
            s = lat.pairing(v, v)
            if s > 0 and (best is None or (s, v) < best):
                best = (s, v)
        if best is not None:
            return best[1]
        radius += 1
    raise ValueError("no class of positive square found")


def run_vinberg(lat, base=None, max_level=30):
    """Enumerate the fundamental roots of a hyperbolic lattice.

    Raises :class:`NonTerminationError` if ``max_level`` is exhausted before
    the stopping criterion validates; lattices whose effective cone is not
    generated by finitely many square -2 classes are expected to do so.
    """
    if base is None:
        base = _default_base(lat)
    base = tuple(base)
    if lat.pairing(base, base) <= 0:
        raise ValueError("base class must have positive square")

    level0 = solve_slice(lat, base, 0)
    separator, positives = choose_separator(lat, level0)
    accepted = list(simple_roots(lat, positives, separator))
    state = VinbergState(base=base, separator=separator, accepted=accepted)

    def finished():
        if not accepted:
            return None
        if rank([list(r) for r in accepted]) < lat.rank:
            return None
        cfg = CurveConfiguration.from_curves(lat, accepted)
        return cfg if validate_domain(cfg) else None

    cfg = finished()
    if cfg is not None:
        return cfg
    for level in range(1, max_level + 1):
        for w in sorted(solve_slice(lat, base, level)):
            if all(lat.pairing(w, r) >= 0 for r in accepted):
                accepted.append(w)
        state.accepted = accepted
        cfg = finished()
        if cfg is not None:
            return cfg
    raise NonTerminationError(
        f"no validated root configuration within {max_level} levels "
        f"({len(accepted)} roots accepted)"
    )


def config_isomorphic(a, b):
    """Match two configurations by a permutation of curves, if one exists.

    Returns a tuple ``p`` with ``a.intersections[i][j] ==
    b.intersections[p[i]][p[j]]`` for all i, j, or None.
    """
    n = len(a.curves)
    if n != len(b.curves):
        return None
    sig_a = [tuple(sorted(row)) for row in a.intersections]
    sig_b = [tuple(sorted(row)) for row in b.intersections]
    if sorted(sig_a) != sorted(sig_b):
        return None
    perm = [None] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        for j in range(n):
            if used[j] or sig_a[i] != sig_b[j]:
                continue
            if any(
                perm[k] is not None
                and a.intersections[i][k] != b.intersections[j][perm[k]]
                for k in range(i)
            ):
                continue
            perm[i] = j
            used[j] = True
            if extend(i + 1):
                return True
            perm[i] = None
            used[j] = False
        return False

    return tuple(perm) if extend(0) else None
