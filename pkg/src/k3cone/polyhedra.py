"""Exact rational polyhedral cones: double description, Hilbert bases.

A :class:`Cone` is a full-dimensional pointed rational cone, stored by both
its extreme rays and its irredundant inner facet normals (all primitive
integer vectors, lexicographically sorted).  Conversion between the two
descriptions is the double description method with algebraic adjacency
testing; everything is exact.

:func:`hilbert_basis` returns the unique minimal integer generating set of a
cone, computed by a placing triangulation into simplicial subcones, coset
enumeration of fundamental-parallelepiped lattice points, and a global
irreducibility sweep.  :func:`has_decomposition` / :func:`decompositions`
answer whether a lattice point splits as a nonnegative integer combination of
prescribed points of the cone.
"""
from __future__ import annotations

from .intmath import (
    adjugate,
    column_hnf_diag,
    det,
    dot,
    is_zero,
    mat_vec,
    primitive,
    rank,
    vadd,
    vscale,
    vsub,
)


def dual_rays(normals, ambient):
    """Ray/lineality description of ``{x : a . x >= 0 for a in normals}``.

    Returns ``(rays, lineality)``: primitive extreme rays modulo the lineality
    space, and a basis of the lineality space.  Incremental insertion: a basis
    vector of the current lineality absorbs a constraint it does not annihilate;
    otherwise rays are split by sign and adjacent (+,-) pairs combine on the
    constraint hyperplane.
    """
    n = ambient
    lin = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    rays = []
    processed = []
    todo = sorted({primitive(a) for a in normals if not is_zero(a)})
    for g in todo:
        widx = next((i for i, v in enumerate(lin) if dot(g, v) != 0), None)
        if widx is not None:
            w = lin.pop(widx)
            if dot(g, w) < 0:
                w = tuple(-x for x in w)
            gw = dot(g, w)
            lin = [primitive(vsub(vscale(gw, u), vscale(dot(g, u), w)))
                   for u in lin]
            rays = [primitive(vsub(vscale(gw, r), vscale(dot(g, r), w)))
                    for r in rays]
            rays.append(w)
        else:
            plus = [r for r in rays if dot(g, r) > 0]
            zero = [r for r in rays if dot(g, r) == 0]
            minus = [r for r in rays if dot(g, r) < 0]
            if minus:
                target = n - len(lin) - 2
                fresh = []
                for p in plus:
                    gp = dot(g, p)
                    for m in minus:
                        tight = [h for h in processed
                                 if dot(h, p) == 0 and dot(h, m) == 0]
                        if rank(tight) != target:
                            continue
                        fresh.append(primitive(
                            vadd(vscale(-dot(g, m), p), vscale(gp, m))))
                rays = plus + zero + fresh
            # no minus rays: the constraint is already satisfied everywhere
        processed.append(g)
    return sorted(set(rays)), lin


class Cone:
    """Full-dimensional pointed rational polyhedral cone."""

    __slots__ = ("ambient", "rays", "facets", "_hilbert")

    def __init__(self, ambient, rays, facets):
        self.ambient = ambient
        self.rays = tuple(rays)
        self.facets = tuple(facets)
        self._hilbert = None

    @classmethod
    def from_rays(cls, rays):
        """Cone generated by integer ray vectors; raises unless the result is
        full-dimensional and pointed."""
        gens = sorted({primitive(r) for r in rays if not is_zero(r)})
        if not gens:
            raise ValueError("no nonzero generators")
        n = len(gens[0])
        facets, lin = dual_rays(gens, n)
        if lin:
            raise ValueError("cone is not full-dimensional")
        if rank(facets) < n:
            raise ValueError("cone is not pointed")
        extreme = [r for r in gens
                   if rank([f for f in facets if dot(f, r) == 0]) == n - 1]
        return cls(n, extreme, sorted(facets))

    @classmethod
    def from_facets(cls, facets):
        """Cone cut out by inner facet normals; raises unless the result is
        full-dimensional and pointed."""
        norms = sorted({primitive(f) for f in facets if not is_zero(f)})
        if not norms:
            raise ValueError("no nonzero facet normals")
        n = len(norms[0])
        rays, lin = dual_rays(norms, n)
        if lin:
            raise ValueError("cone is not pointed")
        if rank(rays) < n:
            raise ValueError("cone is not full-dimensional")
        irred = [f for f in norms
                 if rank([r for r in rays if dot(f, r) == 0]) == n - 1]
        return cls(n, sorted(rays), irred)

    def dual(self):
        """The dual cone under the standard pairing: rays and facet normals
        swap roles."""
        return Cone(self.ambient, self.facets, self.rays)

    def contains(self, x) -> bool:
        return all(dot(f, x) >= 0 for f in self.facets)

    def interior_contains(self, x) -> bool:
        return all(dot(f, x) > 0 for f in self.facets)

    def degree(self, x):
        """Sum of all facet evaluations: a linear functional that is positive
        on every nonzero point of the cone."""
        return sum(dot(f, x) for f in self.facets)

    def to_dict(self):
        return {
            "rays": [list(r) for r in self.rays],
            "facets": [list(f) for f in self.facets],
        }

    def __eq__(self, other):
        return (isinstance(other, Cone) and self.ambient == other.ambient
                and self.rays == other.rays)

    def __hash__(self):
        return hash((self.ambient, self.rays))

    def __repr__(self):
        return (f"Cone(ambient={self.ambient}, rays={len(self.rays)}, "
                f"facets={len(self.facets)})")


def triangulate(cone):
    """Partition a cone into simplicial subcones spanned by its extreme rays.

    Pulling triangulation: each face is coned over from its lexicographically
    smallest ray onto the triangulations of the facets avoiding that ray.
    Returns a list of ray tuples, each of full rank.
    """
    facets = cone.facets
    n = cone.ambient
    memo = {}

    def tri(face):
        key = face
        if key in memo:
            return memo[key]
        d = rank(face)
        if d == 1:
            memo[key] = [face[:1]]
            return memo[key]
        v = face[0]
        out = []
        seen = set()
        for f in facets:
            if dot(f, v) <= 0:
                continue
            sub = tuple(r for r in face if dot(f, r) == 0)
            if not sub or sub in seen:
                continue
            if rank(sub) != d - 1:
                continue
            seen.add(sub)
            out.extend(s + (v,) for s in tri(sub))
        memo[key] = out
        return out

    return tri(tuple(cone.rays))


def parallelepiped_points(simplex):
    """Nonzero lattice points in the half-open fundamental parallelepiped of a
    linearly independent ray tuple, via coset representatives of the sublattice
    the rays span."""
    n = len(simplex[0])
    cols = [list(r) for r in simplex]  # row i of this list = ray i
    B = [[cols[j][i] for j in range(n)] for i in range(n)]  # rays as columns
    d = det(B)
    adj = adjugate(B)
    diag = column_hnf_diag([tuple(B[i][j] for i in range(n)) for j in range(n)])

    points = []
    idx = [0] * n

    def rec(i):
        if i == n:
            y = tuple(idx)
            q = mat_vec(adj, y)
            flo = [q[t] // d for t in range(n)]
            x = tuple(y[t] - sum(B[t][s] * flo[s] for s in range(n))
                      for t in range(n))
            if not is_zero(x):
                points.append(x)
            return
        for v in range(diag[i]):
            idx[i] = v
            rec(i + 1)

    rec(0)
    return points


def hilbert_basis(cone):
    """The minimal generating set of ``cone`` intersected with the integer
    lattice, lexicographically sorted.  Cached on the cone."""
    if cone._hilbert is not None:
        return cone._hilbert
    candidates = set(cone.rays)
    for simplex in triangulate(cone):
        candidates.update(parallelepiped_points(simplex))

    facets = cone.facets
    evals = {x: tuple(dot(f, x) for f in facets) for x in candidates}
    kept = []
    for x in sorted(candidates, key=lambda v: (sum(evals[v]), v)):
        ex = evals[x]
        reducible = False
        for y in kept:
            ey = evals[y]
            if x != y and all(a >= b for a, b in zip(ex, ey)):
                if cone.contains(vsub(x, y)):
                    reducible = True
                    break
        if not reducible:
            kept.append(x)
    cone._hilbert = tuple(sorted(kept))
    return cone._hilbert


def has_decomposition(cone, target, parts, forbid_unit=False):
    """Is ``target`` a nonnegative integer combination of ``parts``?

    All parts must be nonzero points of the pointed cone, so partial residuals
    may be pruned by cone membership.  ``forbid_unit`` excludes the trivial
    single-part decompositions ``target == part``.
    """
    parts = list(parts)
    degs = [cone.degree(p) for p in parts]
    order = sorted(range(len(parts)), key=lambda i: -degs[i])
    parts = [parts[i] for i in order]
    degs = [degs[i] for i in order]
    dead = set()

    def search(i, residual, used):
        if is_zero(residual):
            return not (forbid_unit and used == 1)
        if i == len(parts):
            return False
        key = (i, residual)
        if key in dead:
            return False
        if not cone.contains(residual):
            return False
        top = cone.degree(residual) // degs[i]
        r = residual
        for a in range(top + 1):
            if a and not cone.contains(r):
                break
            if search(i + 1, r, used + (a > 0)):
                return True
            if a < top:
                r = vsub(r, parts[i])
        dead.add(key)
        return False

    return search(0, tuple(target), 0)


def decompositions(cone, target, parts):
    """Yield all coefficient tuples ``(a_1, ..., a_k)`` with
    ``sum a_i parts[i] == target``, coefficients nonnegative integers.  Parts
    must be nonzero points of the pointed cone."""
    parts = [tuple(p) for p in parts]
    degs = [cone.degree(p) for p in parts]
    k = len(parts)
    coeffs = [0] * k

    def search(i, residual):
        if i == k:
            if is_zero(residual):
                yield tuple(coeffs)
            return
        if not cone.contains(residual):
            return
        top = cone.degree(residual) // degs[i]
        r = residual
        for a in range(top + 1):
            if a and not cone.contains(r):
                break
            coeffs[i] = a
            yield from search(i + 1, r)
            if a < top:
                r = vsub(r, parts[i])
        coeffs[i] = 0

    yield from search(0, tuple(target))


def dual_cone(cone, form=None):
    """Dual of a full-dimensional pointed cone.

    With ``form`` (a symmetric integer matrix) the dual is taken with respect
    to that bilinear pairing: ``{x : x . form . r >= 0 for rays r}``, a cone
    whose facet normals are the images of the rays under the form.  Without it
    the standard pairing applies and rays and facets simply swap roles.
    """
    if form is None:
        return cone.dual()
    return Cone.from_facets([mat_vec(form, r) for r in cone.rays])


def enumerate_decompositions(lat, target, parts, witness):
    """All multisets of ``parts`` summing to ``target``.

    ``witness`` must pair strictly positively with every part under the
    lattice form, which bounds each multiplicity by the degree of the
    target.  Returns lexicographically sorted tuples of part vectors with
    repetition; empty when no decomposition exists.
    """
    parts = sorted({tuple(p) for p in parts})
    degs = [lat.pairing(p, witness) for p in parts]
    for p, d in zip(parts, degs):
        if d <= 0:
            raise ValueError(f"part {p} has nonpositive degree against the witness")
    order = sorted(range(len(parts)), key=lambda i: (-degs[i], parts[i]))
    found = []

    def search(k, residual, rdeg, acc):
        if rdeg == 0:
            if is_zero(residual):
                found.append(tuple(sorted(acc)))
            return
        if k == len(order) or rdeg < 0:
            return
        i = order[k]
        p, d = parts[i], degs[i]
        top = rdeg // d
        r = residual
        for a in range(top + 1):
            search(k + 1, r, rdeg - a * d, acc + [p] * a)
            if a < top:
                r = vsub(r, p)

    search(0, tuple(target), lat.pairing(target, witness), [])
    return tuple(sorted(found))
