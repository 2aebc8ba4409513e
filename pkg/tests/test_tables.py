"""Internal consistency of the bundled catalog data.

Everything here is checkable from the Gram matrices alone: squares,
pairings, sortedness, primitivity, index ranges.  The geometric content
(dual cones, Hilbert bases, root enumeration) is exercised in the module
tests that consume this data.
"""
from math import gcd

import pytest

from k3cone import tables


def test_family_lookup():
    assert tables.family("v3") is tables.family("V3")
    assert tables.family(" V10 ") is tables.family("V10")
    with pytest.raises(KeyError):
        tables.family("V15")


def test_expected_count_tables_cover_all_families():
    assert len(tables.FAMILY_NAMES) == 14
    assert len(tables.EXPECTED_CURVE_COUNTS) == 14
    assert len(tables.EXPECTED_BNEF_COUNTS) == 14
    assert len(tables.EXPECTED_FIBRATION_COUNTS) == 14
    assert set(tables.TABLES) == set(tables.FAMILY_NAMES)


def test_counts_match(records):
    for pos, name in enumerate(tables.FAMILY_NAMES):
        rec = records[name]
        assert len(rec["curves"]) == tables.EXPECTED_CURVE_COUNTS[pos]
        assert len(rec["bnef"]) == tables.EXPECTED_BNEF_COUNTS[pos]
        assert len(rec["fibrations"]) == tables.EXPECTED_FIBRATION_COUNTS[pos]


def test_curves_and_intersection_matrices(lattices, records):
    for name in tables.FAMILY_NAMES:
        lat = lattices[name]
        rec = records[name]
        curves = rec["curves"]
        im = rec["intmat"]
        assert len(im) == len(curves)
        for i, ci in enumerate(curves):
            assert lat.square(ci) == -2, (name, ci)
            for j, cj in enumerate(curves):
                assert lat.pairing(ci, cj) == im[i][j], (name, i, j)
                assert im[i][j] == im[j][i], (name, i, j)


def test_bnef_sorted_unique_and_nef(lattices, records):
    for name in tables.FAMILY_NAMES:
        lat = lattices[name]
        rec = records[name]
        bnef = rec["bnef"]
        assert list(bnef) == sorted(bnef), name
        assert len(set(bnef)) == len(bnef), name
        for v in bnef:
            assert all(lat.pairing(v, c) >= 0 for c in rec["curves"]), (name, v)
        assert set(rec["nef_rays"]) <= set(bnef), name


def test_polarizations(lattices, records):
    for name in tables.FAMILY_NAMES:
        lat = lattices[name]
        rec = records[name]
        pol = rec["polarization"]
        h = pol["h"]
        assert lat.square(h) == pol["square"], name
        assert pol["square"] > 0, name
        degs = tuple(lat.pairing(h, c) for c in rec["curves"])
        assert degs == pol["curve_degrees"], name
        # nef with positive square; degree 0 marks a curve the model contracts
        assert all(d >= 0 for d in degs), name
        assert h in rec["bnef"], name


def test_fibration_records(lattices, records):
    for name in tables.FAMILY_NAMES:
        lat = lattices[name]
        rec = records[name]
        for idx, has_section, labels in rec["fibrations"]:
            assert 1 <= idx <= len(rec["bnef"]), (name, idx)
            f = rec["bnef"][idx - 1]
            assert lat.square(f) == 0, (name, idx)
            g = 0
            for x in f:
                g = gcd(g, x)
            assert g == 1, (name, idx)
            assert isinstance(has_section, bool)
            assert labels, (name, idx)
            for lab in labels:
                assert lab[0] in "ADE" and lab[1] == "~", (name, lab)


def test_cox_indices_in_range(records):
    for name in tables.FAMILY_NAMES:
        rec = records[name]
        cox = rec["cox"]
        if "generator_degrees" in cox:
            continue
        for idx in cox["necessary_nef"] + cox["starred_nef"]:
            assert 1 <= idx <= len(rec["bnef"]), (name, idx)
        assert not set(cox["necessary_nef"]) & set(cox["starred_nef"]), name


def test_effective_generators_disjoint_from_curves(records):
    for name in tables.FAMILY_NAMES:
        rec = records[name]
        for v in rec["beff_extra"]:
            assert v not in rec["curves"], (name, v)


def test_generator_degree_table():
    gd = tables.V14_GENERATOR_DEGREES
    rec = tables.family("V14")
    assert len(gd) == 71
    assert len(set(gd)) == 71
    assert gd[:8] == rec["curves"]
    assert rec["cox"]["reduced"] is True
    assert rec["cox"]["generator_degrees"] == gd


def test_cox_degree_sets(records):
    necessary, starred = tables.cox_degree_sets("V10")
    rec = records["V10"]
    assert set(rec["curves"]) <= necessary
    assert {rec["bnef"][i - 1] for i in rec["cox"]["necessary_nef"]} <= necessary
    assert not starred
    n11, s11 = tables.cox_degree_sets("V11")
    assert len(s11) == 13 and not (n11 & s11)
    n14, s14 = tables.cox_degree_sets("V14")
    assert n14 == set(tables.V14_GENERATOR_DEGREES) and not s14


def test_beff_set():
    assert len(tables.beff_set("V1")) == 13
    assert len(tables.beff_set("V3")) == 5
