"""Degrees of a generating set of the Cox ring.

The candidate degrees are the negative curves, sums of at most three nef
Hilbert-basis elements, and doubled sums of pencil pairs meeting twice.
Candidates are then run through elimination tests (products of sections in
smaller degrees cover the degree) and minimality tests (no product
combination can cover it), leaving each degree Eliminated, Necessary, or
Starred when neither side resolves it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import tables
from .intmath import vadd, vsub
from .polyhedra import enumerate_decompositions
from .rrk3 import (
    K3Context,
    fibration_classes,
    h0,
    h1,
    h2,
    is_bpf,
    is_effective,
    is_nef,
    is_very_ample,
)

SOURCES = ("MinusTwoCurve", "NefSum1", "NefSum2", "NefSum3", "TwoFplusFprime")
STATUSES = ("Eliminated", "Necessary", "Starred")


@dataclass
class CoxCandidate:
    """One candidate degree with its provenance and final status.

    ``trail`` keeps the decisive test records as ``(name, witnesses)``
    pairs, enough to re-verify the verdict.
    """

    degree: tuple
    source: str
    status: str | None = None
    trail: list = field(default_factory=list)

    def to_dict(self):
        return {
            "degree": list(self.degree),
            "source": self.source,
            "status": self.status,
            "trail": [
                {"test": name, "witnesses": [list(w) for w in ws]}
                for name, ws in self.trail
            ],
        }


@dataclass
class CoxDegreeReport:
    lattice: str
    candidates: tuple
    necessary_degrees: tuple
    starred_degrees: tuple

    def to_dict(self):
        return {
            "lattice": self.lattice,
            "necessary_degrees": [list(d) for d in self.necessary_degrees],
            "starred_degrees": [list(d) for d in self.starred_degrees],
            "candidates": [c.to_dict() for c in self.candidates],
        }


def candidate_degrees(ctx):
    """All candidate generator degrees, deduplicated.

    When the same degree arises from several sources the lowest-arity tag
    wins: a curve beats any nef sum, a shorter sum beats a longer one, and
    the doubled pencil-pair form ranks last.
    """
    cands = {}

    def add(deg, source):
        cur = cands.get(deg)
        if cur is None or SOURCES.index(source) < SOURCES.index(cur.source):
            cands[deg] = CoxCandidate(degree=deg, source=source)

    for c in ctx.curves.curves:
        add(c, "MinusTwoCurve")
    bnef = ctx.bnef
    n = len(bnef)
    for i in range(n):
        add(bnef[i], "NefSum1")
    for i in range(n):
        for j in range(i, n):
            add(vadd(bnef[i], bnef[j]), "NefSum2")
    for i in range(n):
        for j in range(i, n):
            ij = vadd(bnef[i], bnef[j])
            for k in range(j, n):
                add(vadd(ij, bnef[k]), "NefSum3")
    fibs = [info.fiber_class for info in fibration_classes(ctx)]
    for f, g in itertools.combinations(fibs, 2):
        if ctx.lattice.pairing(f, g) == 2:
            add(tuple(2 * (a + b) for a, b in zip(f, g)), "TwoFplusFprime")
    return tuple(cands[d] for d in sorted(cands))


def _moves_freely(ctx, v):
    return is_nef(ctx, v) and is_bpf(ctx, v)


def _pair_certificate(ctx, e1, e2):
    """True when members of |e1| and |e2| can be chosen disjoint.

    Certified cases, all lattice-level: two distinct rigid curves with
    pairing zero, or pairing zero with one side base point free — a
    moving member then avoids every component of the other divisor,
    since a base-point-free class is nef and pairs zero with each one.
    """
    if not (any(e1) and any(e2)):
        return False
    if ctx.lattice.pairing(e1, e2) != 0:
        return False
    curves = ctx.curves.curves
    if e1 != e2 and e1 in curves and e2 in curves:
        return True
    if _effective_nonzero(ctx, e2) and _moves_freely(ctx, e1):
        return True
    return _effective_nonzero(ctx, e1) and _moves_freely(ctx, e2)


def _triple_certificate(ctx, trio):
    return all(_pair_certificate(ctx, a, b)
               for a, b in itertools.combinations(trio, 2))


def _effective_nonzero(ctx, v):
    return any(v) and is_effective(ctx, v)


def test_koszul_pair(ctx, d, e1, e2):
    """Eliminate d via products out of two disjoint effective classes.

    Returns True (eliminated), False (conditions fail), or None when the
    disjointness certificate or the effectivity requirements do not hold.
    """
    e1, e2 = tuple(e1), tuple(e2)
    if not _pair_certificate(ctx, e1, e2):
        return None
    d = tuple(d)
    if not (_effective_nonzero(ctx, vsub(d, e1))
            and _effective_nonzero(ctx, vsub(d, e2))):
        return None
    return h1(ctx, vsub(vsub(d, e1), e2)) == 0


def test_koszul_triple(ctx, d, e1, e2, e3):
    """Three-part variant: every pair within the triple must carry a
    disjointness certificate; needs three first-cohomology vanishings
    and one second."""
    e1, e2, e3 = tuple(e1), tuple(e2), tuple(e3)
    if not _triple_certificate(ctx, (e1, e2, e3)):
        return None
    d = tuple(d)
    if not all(_effective_nonzero(ctx, vsub(d, e)) for e in (e1, e2, e3)):
        return None
    if any(h1(ctx, vsub(vsub(d, a), b)) != 0
           for a, b in ((e1, e2), (e1, e3), (e2, e3))):
        return False
    return h2(ctx, vsub(vsub(vsub(d, e1), e2), e3)) == 0


def test_ottem(ctx, d, a, b):
    """Eliminate d = a + b through the multiplication map out of two nef
    classes, the second base point free."""
    a, b = tuple(a), tuple(b)
    if tuple(d) != vadd(a, b):
        return None
    if not (is_nef(ctx, a) and is_nef(ctx, b)):
        return None
    if not any(b) or not is_bpf(ctx, b):
        return None
    if h1(ctx, vsub(a, b)) != 0 or h1(ctx, a) != 0:
        return False
    return h2(ctx, vsub(a, vadd(b, b))) == 0


def test_va(ctx, d):
    """Eliminate d = F + D' with F a pencil splitting into two curves and
    D' very ample, when the section-product image has codimension two."""
    result, _ = _va_search(ctx, d)
    return result


def _va_search(ctx, d):
    d = tuple(d)
    if not is_nef(ctx, d):
        return None, None
    applicable = False
    curves = ctx.curves.curves
    for info in fibration_classes(ctx):
        f = info.fiber_class
        rest = vsub(d, f)
        if not is_very_ample(ctx, rest):
            continue
        for e1, e2 in itertools.combinations_with_replacement(curves, 2):
            if vadd(e1, e2) != f:
                continue
            applicable = True
            codim = h0(ctx, d) - (
                h0(ctx, vsub(d, e1)) + h0(ctx, vsub(d, e2))
                - h0(ctx, vsub(vsub(d, e1), e2)))
            if codim == 2:
                return True, (f, e1, e2)
    return (False, None) if applicable else (None, None)


def test_minimal(ctx, d, surviving):
    """Decide whether a base-point-free degree is forced to carry a
    generator, given the surviving candidate degrees.

    All monomial combinations of d over the other degrees are enumerated;
    the three sufficient conditions inspect their supports.
    """
    ok, _ = _minimal_search(ctx, d, surviving)
    return ok


def _minimal_search(ctx, d, surviving):
    d = tuple(d)
    lat = ctx.lattice
    parts = sorted(set(tuple(p) for p in surviving) - {d})
    decs = enumerate_decompositions(lat, d, parts, ctx.ample_witness)
    supports = [set(dec) for dec in decs]
    curves = set(ctx.curves.curves)
    if all(s & curves for s in supports):
        return True, ("minimal-i", [])
    crossing = [
        (a, b) for a, b in itertools.combinations(sorted(curves), 2)
        if lat.pairing(a, b) > 0
    ]
    for a, b in crossing:
        if all(a in s or b in s for s in supports):
            return True, ("minimal-ii", [a, b])
    for trio in itertools.combinations_with_replacement(sorted(curves), 3):
        if tuple(sum(x) for x in zip(*trio)) != d:
            continue
        if any(h1(ctx, vadd(u, v)) != 0
               for u, v in itertools.combinations(trio, 2)):
            continue
        if all(s & set(trio) for s in supports):
            return True, ("minimal-iii", list(trio))
    return False, None


def _subtraction_pool(ctx):
    """Effective classes usable as subtracted divisors, cheapest first."""
    pool = sorted(set(ctx.curves.curves) | set(ctx.bnef))
    wdeg = {v: ctx.lattice.pairing(v, ctx.ample_witness) for v in pool}
    pool.sort(key=lambda v: (wdeg[v], v))
    return pool, wdeg


def _certified_pairs(ctx):
    pool, wdeg = _subtraction_pool(ctx)
    pairs = []
    for i, e1 in enumerate(pool):
        for e2 in pool[i:]:
            if _pair_certificate(ctx, e1, e2):
                pairs.append((e1, e2))
    pairs.sort(key=lambda p: (wdeg[p[0]] + wdeg[p[1]], p))
    return pairs


def _certified_triples(ctx, pairs):
    ok = {tuple(sorted((a, b))) for a, b in pairs}
    pool = sorted({e for p in pairs for e in p})
    triples = []
    for trio in itertools.combinations_with_replacement(pool, 3):
        if all(tuple(sorted(pq)) in ok
               for pq in itertools.combinations(trio, 2)):
            triples.append(trio)
    return triples


def run_pipeline(ctx, reduced=None):
    """Classify every candidate degree for one surface.

    Hilbert-basis degrees of the effective cone are necessary outright.
    The remaining nef candidates go through the elimination battery (pair
    and triple products, the two-factor multiplication map, the
    pencil-plus-very-ample map); survivors are checked for forced
    generators, and anything still unresolved is reported Starred.  With
    ``reduced`` (the default for the one family whose nef Hilbert basis
    is too large for the full battery) only pair products are tried.
    """
    if reduced is None:
        rec = tables.TABLES.get(ctx.lattice.name)
        reduced = bool(rec and rec["cox"].get("reduced"))

    cands = list(candidate_degrees(ctx))
    index = {c.degree: c for c in cands}
    for deg in ctx.beff:
        # always present: an irreducible effective class is a curve or an
        # irreducible nef class
        c = index[deg]
        c.status = "Necessary"
        c.trail.append(("effective-hilbert-basis", []))

    for c in cands:
        if c.status is None and not is_nef(ctx, c.degree):
            c.status = "Eliminated"
            neg = next(e for e in ctx.curves.curves
                       if ctx.lattice.pairing(c.degree, e) < 0)
            c.trail.append(("base-curve", [neg]))

    pairs = _certified_pairs(ctx)
    triples = [] if reduced else _certified_triples(ctx, pairs)
    bpf_basis = [] if reduced else [
        b for b in ctx.bnef if any(b) and is_bpf(ctx, b)]

    for c in cands:
        if c.status is not None:
            continue
        d = c.degree
        for e1, e2 in pairs:
            if test_koszul_pair(ctx, d, e1, e2):
                c.status = "Eliminated"
                c.trail.append(("koszul-pair", [e1, e2]))
                break
        if c.status is not None or reduced:
            continue
        for trio in triples:
            if test_koszul_triple(ctx, d, *trio):
                c.status = "Eliminated"
                c.trail.append(("koszul-triple", list(trio)))
                break
        if c.status is not None:
            continue
        for b in bpf_basis:
            if b == d:
                continue
            a = vsub(d, b)
            if not is_nef(ctx, a):
                continue
            if test_ottem(ctx, d, a, b):
                c.status = "Eliminated"
                c.trail.append(("ottem", [a, b]))
                break
        if c.status is not None:
            continue
        hit, witness = _va_search(ctx, d)
        if hit:
            c.status = "Eliminated"
            c.trail.append(("va", list(witness)))

    surviving = [c.degree for c in cands if c.status != "Eliminated"]
    for c in cands:
        if c.status is not None:
            continue
        if not is_bpf(ctx, c.degree):
            c.status = "Starred"
            c.trail.append(("minimality-inapplicable", []))
            continue
        ok, witness = _minimal_search(ctx, c.degree, surviving)
        if ok:
            c.status = "Necessary"
            c.trail.append(witness)
        else:
            c.status = "Starred"
            c.trail.append(("minimality-undecided", []))

    necessary = tuple(c.degree for c in cands if c.status == "Necessary")
    starred = tuple(c.degree for c in cands if c.status == "Starred")
    return CoxDegreeReport(
        lattice=ctx.lattice.name,
        candidates=tuple(cands),
        necessary_degrees=necessary,
        starred_degrees=starred,
    )
