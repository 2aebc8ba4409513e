import itertools
import random

import pytest

from k3cone.intmath import (
    adjugate,
    content,
    det,
    dot,
    primitive,
    solve_unique,
    vneg,
    vsub,
)
from k3cone.lattice import catalog
from k3cone.polyhedra import (
    Cone,
    decompositions,
    dual_cone,
    enumerate_decompositions,
    has_decomposition,
    hilbert_basis,
    parallelepiped_points,
    triangulate,
)
from k3cone import tables


def form_dual_rays(name):
    """Extreme rays of the form-dual of the cone over the printed curves."""
    lat = catalog(name)
    rec = tables.family(name)
    eff = Cone.from_rays(rec["curves"])
    return dual_cone(eff, form=lat.gram).rays


def test_dual_cone_reproduces_printed_nef_rays():
    for name in ("V4", "V10"):
        assert set(form_dual_rays(name)) == set(tables.family(name)["nef_rays"])


def test_dual_cone_all_families():
    for name in tables.FAMILY_NAMES:
        assert set(form_dual_rays(name)) == set(tables.family(name)["nef_rays"])


def test_dual_cone_simplicial_basis():
    lat = catalog("V10")
    basis = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    d = dual_cone(Cone.from_rays(basis), form=lat.gram)
    adj = adjugate(lat.gram)
    sign = -1 if det(lat.gram) < 0 else 1
    expected = {
        primitive([sign * adj[i][j] for i in range(4)]) for j in range(4)
    }
    assert set(d.rays) == expected
    for r in d.rays:
        for b in basis:
            assert lat.pairing(r, b) >= 0


def test_dual_of_dual_identity():
    for name in tables.FAMILY_NAMES:
        eff = Cone.from_rays(tables.family(name)["curves"])
        back = eff.dual().dual()
        assert set(back.rays) == set(eff.rays)


def test_dual_rejects_lower_dimensional():
    with pytest.raises(ValueError):
        Cone.from_rays([(1, 0, 0), (0, 1, 0), (-1, -1, 0)])


def test_cone_invariants():
    cone = Cone.from_rays(tables.family("V13")["curves"])
    for r in cone.rays:
        assert content(r) == 1
        for f in cone.facets:
            assert dot(f, r) >= 0
    # extremality: dropping any ray changes the cone
    for i in range(len(cone.rays)):
        rest = [r for j, r in enumerate(cone.rays) if j != i]
        try:
            smaller = Cone.from_rays(rest)
        except ValueError:
            continue  # remainder no longer full-dimensional
        assert not smaller.contains(cone.rays[i])


def test_contains_documented():
    lat = catalog("V3")
    rec = tables.family("V3")
    nef = Cone.from_facets([lat.functional(c) for c in rec["curves"]])
    assert nef.contains((1, 0, 1, 1))
    assert nef.contains((0, 0, 0, 0))
    eff = Cone.from_rays(tables.family("V10")["curves"])
    for r in eff.rays:
        assert not eff.contains(vneg(r))


def test_hilbert_basis_2d_pinned():
    cone = Cone.from_rays([(1, 0), (1, 2)])
    assert hilbert_basis(cone) == ((1, 0), (1, 1), (1, 2))


def test_hilbert_basis_eff_v1():
    rec = tables.family("V1")
    eff = Cone.from_rays(rec["curves"])
    hb = hilbert_basis(eff)
    assert len(hb) == 13
    assert set(hb) == set(rec["curves"]) | set(rec["beff_extra"])


def test_hilbert_basis_nef_v10():
    rec = tables.family("V10")
    nef = Cone.from_rays(rec["nef_rays"])
    assert hilbert_basis(nef) == tuple(sorted(rec["bnef"]))


def test_triangulation_covers():
    cone = Cone.from_rays(tables.family("V13")["nef_rays"])
    simplices = triangulate(cone)
    for s in simplices:
        assert len(s) == cone.ambient
        assert all(r in cone.rays for r in s)
        m = [[s[j][i] for j in range(len(s))] for i in range(len(s))]
        assert det(m) != 0
    rng = random.Random(41)
    for _ in range(50):
        coeffs = [rng.randint(0, 5) for _ in cone.rays]
        x = [sum(c * r[i] for c, r in zip(coeffs, cone.rays))
             for i in range(cone.ambient)]
        covered = 0
        for s in simplices:
            m = [[s[j][i] for j in range(len(s))] for i in range(len(s))]
            q = solve_unique(m, x)
            if all(c >= 0 for c in q):
                covered += 1
        assert covered >= 1


def test_parallelepiped_point_count():
    simplex = ((1, 0), (1, 3))
    pts = parallelepiped_points(simplex)
    assert len(pts) == 2  # |det| - 1 interior shifts for this half-open box
    for p in pts:
        assert p != (0, 0)


def test_hilbert_basis_random_oracle():
    """Soundness and completeness certificates on random cones.

    Mutual irreducibility shows nothing in the output is redundant;
    decomposability of every ray and every fundamental-parallelepiped point
    shows the output generates the cone monoid, since any irreducible point
    occurs among those candidates.
    """
    rng = random.Random(97)
    done = 0
    while done < 100:
        n = rng.choice((2, 3))
        rays = [tuple(rng.randint(-5, 5) for _ in range(n))
                for _ in range(rng.randint(n, n + 2))]
        try:
            cone = Cone.from_rays(rays)
        except ValueError:
            continue
        done += 1
        hb = hilbert_basis(cone)
        for x in hb:
            assert cone.contains(x)
            for y in hb:
                if x != y:
                    d = vsub(x, y)
                    assert not (any(d) and cone.contains(d)), (rays, x, y)
        candidates = set(cone.rays)
        for simplex in triangulate(cone):
            candidates.update(parallelepiped_points(simplex))
        for c in candidates:
            assert cone.contains(c)
            assert has_decomposition(cone, c, hb), (rays, c)


def test_hilbert_basis_rank2_box_equality():
    """Exact brute-force comparison in rank 2.

    With ray entries in [-5,5] every irreducible point has coordinates
    bounded by 10, so a radius-12 box decides irreducibility exactly.
    """
    rng = random.Random(53)
    done = 0
    while done < 30:
        rays = [(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(2)]
        try:
            cone = Cone.from_rays(rays)
        except ValueError:
            continue
        done += 1
        hb = hilbert_basis(cone)
        box = [p for p in itertools.product(range(-12, 13), repeat=2)
               if p != (0, 0) and cone.contains(p)]
        boxset = set(box)
        irred = {
            p for p in box
            if not any(q != p and cone.contains(vsub(p, q)) and any(vsub(p, q))
                       for q in boxset)
        }
        assert irred == set(hb), rays


def test_has_decomposition_matches_enumeration():
    rng = random.Random(13)
    cone = Cone.from_rays([(1, 0), (1, 4)])
    hb = hilbert_basis(cone)
    for _ in range(40):
        a = rng.randint(0, 3)
        b = rng.randint(0, 3)
        target = tuple(a * x + b * y for x, y in zip((1, 0), (1, 4)))
        found = list(decompositions(cone, target, hb))
        assert has_decomposition(cone, target, hb) == (len(found) > 0)
        for coeffs in found:
            s = (0, 0)
            for c, h in zip(coeffs, hb):
                s = tuple(x + c * y for x, y in zip(s, h))
            assert s == target


def test_enumerate_decompositions_v10_ample():
    lat = catalog("V10")
    rec = tables.family("V10")
    curves = rec["curves"]
    fibs = [rec["bnef"][i - 1] for i, _, _ in rec["fibrations"]]
    h = rec["bnef"][0]
    decs = enumerate_decompositions(lat, h, list(curves) + fibs, h)
    assert len(decs) == 5
    assert tuple(sorted(curves)) in decs
    pair_decs = [d for d in decs if len(d) == 2]
    assert len(pair_decs) == 4
    for d in pair_decs:
        assert (d[0] in curves) != (d[1] in curves)


def test_enumerate_decompositions_edges():
    lat = catalog("V10")
    w1, w2 = (0, 0, 0, -1), (0, 0, -1, 0)
    target = (0, 0, -1, -1)
    witness = tables.family("V10")["polarization"]["h"]
    decs = enumerate_decompositions(lat, target, [w1, w2], witness)
    assert decs == (tuple(sorted((w1, w2))),)
    assert enumerate_decompositions(lat, (9, 9, 9, 9), [w1, w2], witness) == ()
    with pytest.raises(ValueError):
        enumerate_decompositions(lat, target, [(0, 0, 1, 0)], witness)


def test_serialization_roundtrip():
    cone = Cone.from_rays(tables.family("V9")["curves"])
    data = cone.to_dict()
    assert data["rays"] == [list(r) for r in cone.rays]
    assert data["facets"] == [list(f) for f in cone.facets]
