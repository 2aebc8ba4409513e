import random

import pytest

from k3cone.intmath import content, vneg
from k3cone.lattice import NSLattice
from k3cone.rrk3 import (
    FiberGraphError,
    K3Context,
    _component_label,
    classify_model,
    fibration_classes,
    h0,
    h1,
    h2,
    hyperelliptic_case,
    is_ample,
    is_bpf,
    is_effective,
    is_nef,
    is_very_ample,
    zariski_reduce,
)
from k3cone import tables


def test_build_matches_bundled_data(contexts, records):
    for name in tables.FAMILY_NAMES:
        ctx = contexts[name]
        rec = records[name]
        assert ctx.curves.curves == tuple(sorted(rec["curves"]))
        assert ctx.bnef == tuple(sorted(rec["bnef"]))
        assert set(ctx.beff) == tables.beff_set(name)
        for c in ctx.curves.curves:
            assert ctx.lattice.pairing(ctx.ample_witness, c) > 0


def test_build_rejects_odd_form():
    with pytest.raises(ValueError):
        K3Context.build(NSLattice(((1, 0), (0, -2))))


def test_zariski_reduce_nef_classes(contexts):
    ctx = contexts["V10"]
    for v in ctx.bnef:
        split = zariski_reduce(ctx, v)
        assert split.nef_part == v
        assert split.base_part == ()


def test_zariski_reduce_disjoint_curve_pair(contexts, records):
    ctx = contexts["V3"]
    curves = records["V3"]["curves"]
    im = records["V3"]["intmat"]
    pairs = [(i, j) for i in range(len(im)) for j in range(i + 1, len(im))
             if im[i][j] == 0]
    assert pairs  # V3 does have disjoint curve pairs
    i, j = pairs[0]
    d = tuple(a + b for a, b in zip(curves[i], curves[j]))
    split = zariski_reduce(ctx, d)
    assert split.nef_part == (0, 0, 0, 0)
    assert split.base_part == tuple(sorted((curves[i], curves[j])))
    assert h0(ctx, d) == 1
    assert h1(ctx, d) == 1
    assert h2(ctx, d) == 0


def test_zariski_reduce_sum_recovers_class(contexts):
    ctx = contexts["V1"]
    rng = random.Random(3)
    seen = 0
    while seen < 40:
        d = tuple(rng.randint(-4, 6) for _ in range(4))
        split = zariski_reduce(ctx, d)
        if split is None:
            continue
        seen += 1
        total = list(split.nef_part)
        for c in split.base_part:
            total = [a + b for a, b in zip(total, c)]
        assert tuple(total) == d
        assert is_nef(ctx, split.nef_part)


def test_negative_ample_not_effective(contexts):
    ctx = contexts["V10"]
    assert not is_effective(ctx, (1, 1, -1, -1))
    assert is_effective(ctx, (0, 0, 0, 0))


def test_h0_documented_values(contexts):
    ctx = contexts["V10"]
    assert h0(ctx, (-1, -1, 1, 1)) == 4
    f = fibration_classes(ctx)[0].fiber_class
    assert h0(ctx, tuple(2 * x for x in f)) == 3
    assert h0(ctx, (0, 0, 0, 0)) == 1
    assert h0(ctx, (1, 1, -1, -1)) == 0


def test_cohomology_of_pencil_multiples(contexts):
    for name in ("V1", "V8"):
        ctx = contexts[name]
        f = fibration_classes(ctx)[0].fiber_class
        for a in range(1, 5):
            d = tuple(a * x for x in f)
            assert h0(ctx, d) == a + 1
            assert h1(ctx, d) == a - 1
            assert h2(ctx, d) == 0


def test_riemann_roch_identity_random(contexts):
    rng = random.Random(19)
    for name in ("V3", "V12"):
        ctx = contexts[name]
        for _ in range(500):
            d = tuple(rng.randint(-6, 6) for _ in range(4))
            euler = 2 + ctx.lattice.square(d) // 2
            assert h0(ctx, d) - h1(ctx, d) + h2(ctx, d) == euler
            assert h1(ctx, d) >= 0
            if any(d):
                assert h0(ctx, d) == 0 or h0(ctx, vneg(d)) == 0


def test_nef_ample_documented(contexts):
    ctx3 = contexts["V3"]
    assert is_nef(ctx3, (1, 0, 1, 1))
    assert not is_ample(ctx3, (1, 0, 1, 1))  # degree zero on one curve
    ctx10 = contexts["V10"]
    assert is_ample(ctx10, (-1, -1, 1, 1))
    assert is_nef(ctx10, (0, 0, 0, 0))
    assert not is_ample(ctx10, (0, 0, 0, 0))


def test_big_nef_has_no_higher_cohomology(contexts):
    for name in ("V2", "V10"):
        ctx = contexts[name]
        for v in ctx.bnef:
            if ctx.lattice.square(v) > 0:
                assert h1(ctx, v) == 0, (name, v)
                assert h2(ctx, v) == 0, (name, v)


def test_fibrations_match_bundled_reports(contexts, records):
    for name in tables.FAMILY_NAMES:
        ctx = contexts[name]
        rec = records[name]
        infos = fibration_classes(ctx)
        expected = sorted(
            (rec["bnef"][i - 1], sec, tuple(sorted(labels)))
            for i, sec, labels in rec["fibrations"]
        )
        got = sorted(
            (i.fiber_class, i.has_section, tuple(sorted(i.reducible_fibers)))
            for i in infos
        )
        assert got == expected, name


def test_sections_exactly_v4_and_v8(contexts):
    with_section = {
        name for name, ctx in contexts.items()
        if any(i.has_section for i in fibration_classes(ctx))
    }
    assert with_section == {"V4", "V8"}


def test_fiber_graph_classifier_templates():
    def cycle(n):
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = -2
            g[i][(i + 1) % n] = g[(i + 1) % n][i] = 1
        return g

    assert _component_label([[-2, 2], [2, -2]]) == "A~1"
    assert _component_label(cycle(3)) == "A~2"
    assert _component_label(cycle(8)) == "A~7"

    def tree(n, edges):
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = -2
        for i, j in edges:
            g[i][j] = g[j][i] = 1
        return g

    star = tree(5, [(4, 0), (4, 1), (4, 2), (4, 3)])
    assert _component_label(star) == "D~4"
    d6 = tree(7, [(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6)])
    assert _component_label(d6) == "D~6"
    e6 = tree(7, [(0, 1), (1, 6), (2, 3), (3, 6), (4, 5), (5, 6)])
    assert _component_label(e6) == "E~6"
    e7 = tree(8, [(0, 1), (1, 2), (2, 7), (3, 4), (4, 5), (5, 7), (6, 7)])
    assert _component_label(e7) == "E~7"
    e8 = tree(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 8), (5, 6), (6, 8),
                  (7, 8)])
    assert _component_label(e8) == "E~8"

    with pytest.raises(FiberGraphError):
        _component_label([[-2]])  # a lone curve is not a fiber
    with pytest.raises(FiberGraphError):
        _component_label(tree(4, [(0, 1), (1, 2), (2, 3)]))  # finite A-chain
    with pytest.raises(FiberGraphError):
        _component_label([[-2, 3], [3, -2]])  # triple bond


def test_bpf_documented(contexts, records):
    ctx8 = contexts["V8"]
    b8 = records["V8"]["bnef"]
    assert not is_bpf(ctx8, b8[3])
    assert is_bpf(ctx8, b8[2])
    ctx10 = contexts["V10"]
    for v in ctx10.bnef:
        assert is_bpf(ctx10, v)  # no sections anywhere in this family


def test_bpf_rejects_bad_input(contexts):
    ctx = contexts["V10"]
    with pytest.raises(ValueError):
        is_bpf(ctx, (0, 0, 0, 0))
    with pytest.raises(ValueError):
        is_bpf(ctx, (0, 0, 0, -1))  # a curve is not nef


def test_non_bpf_classes_across_catalog(contexts):
    bad = {}
    for name, ctx in contexts.items():
        for i, v in enumerate(ctx.bnef):
            if ctx.lattice.square(v) > 0 and not is_bpf(ctx, v):
                bad.setdefault(name, []).append((i + 1, v))
    # the pencil-plus-section pattern exists exactly in the two families
    # with sections, hitting one basis element in each
    assert bad == {
        "V4": [(4, (-1, -1, 0, 0))],
        "V8": [(4, (-1, -1, 0, 0))],
    }


def test_hyperelliptic_documented(contexts, records):
    ctx8 = contexts["V8"]
    b8 = records["V8"]["bnef"]
    assert ctx8.lattice.square(b8[2]) == 6
    assert hyperelliptic_case(ctx8, b8[2]) == "A"
    ctx10 = contexts["V10"]
    assert hyperelliptic_case(ctx10, (-1, -1, 1, 1)) is None
    ctx5 = contexts["V5"]
    d5 = records["V5"]["bnef"][0]
    assert ctx5.lattice.square(d5) == 2
    assert hyperelliptic_case(ctx5, d5) == "C"


def test_hyperelliptic_case_b_double_class(contexts):
    # the double of a square-2 nef class: square 8, all coordinates even
    for name, ctx in contexts.items():
        for v in ctx.bnef:
            if ctx.lattice.square(v) != 2:
                continue
            d = tuple(2 * x for x in v)
            case = hyperelliptic_case(ctx, d)
            assert case in ("A", "B")
            if case == "B":
                assert all(x % 2 == 0 for x in d)
            return


def test_very_ample_documented(contexts, records):
    ctx7 = contexts["V7"]
    h7 = records["V7"]["polarization"]["h"]
    assert is_very_ample(ctx7, h7)
    ctx3 = contexts["V3"]
    assert not is_very_ample(ctx3, (1, 0, 1, 1))  # not ample
    ctx5 = contexts["V5"]
    assert not is_very_ample(ctx5, records["V5"]["bnef"][0])  # square 2


def test_classify_model_documented(contexts, records):
    ctx1 = contexts["V1"]
    lbl = classify_model(ctx1, records["V1"]["bnef"][7])
    assert lbl.kind == "CI3QuadricsP5"
    assert lbl.contracted == 3
    assert lbl.hyperelliptic_case is None

    ctx12 = contexts["V12"]
    lbl = classify_model(ctx12, records["V12"]["bnef"][32])
    assert lbl.kind == "DoublePlane"
    assert lbl.contracted == 0

    ctx5 = contexts["V5"]
    lbl = classify_model(ctx5, records["V5"]["bnef"][0])
    assert lbl.kind == "DoublePlane"
    assert lbl.contracted == 3

    ctx8 = contexts["V8"]
    lbl = classify_model(ctx8, records["V8"]["bnef"][2])
    assert lbl.kind == "ConeOverTwistedCubic"
    assert lbl.hyperelliptic_case == "A"

    ctx10 = contexts["V10"]
    lbl = classify_model(ctx10, (-1, -1, 1, 1))
    assert lbl.kind == "QuarticP3"
    assert lbl.contracted == 0


def test_classify_model_square_two_always_double_plane(contexts):
    for name, ctx in contexts.items():
        for v in ctx.bnef:
            if ctx.lattice.square(v) == 2:
                assert classify_model(ctx, v).kind == "DoublePlane", (name, v)


def test_serialization(contexts):
    ctx = contexts["V9"]
    data = ctx.to_dict()
    assert data["lattice"] == "V9"
    assert data["bnef"] == [list(v) for v in ctx.bnef]
    split = zariski_reduce(ctx, ctx.bnef[0])
    assert split.to_dict() == {
        "nef_part": list(ctx.bnef[0]), "base_part": []}
    info = fibration_classes(ctx)[0]
    assert info.to_dict()["fiber_class"] == list(info.fiber_class)
    lbl = classify_model(ctx, ctx.ample_witness)
    d = lbl.to_dict()
    assert d["kind"] in ("DoublePlane", "QuarticP3", "SexticP4",
                         "CI3QuadricsP5", "ConeOverTwistedCubic",
                         "DoubleQuadricCone", "Other")
