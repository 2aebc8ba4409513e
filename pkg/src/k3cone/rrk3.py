"""Linear-system calculus on a lattice-polarized K3 surface.

Every question here reduces to exact integer arithmetic on the Picard
lattice: effectivity and base-locus splitting by repeated subtraction of
negative curves, section counts by the even-lattice Riemann-Roch formula,
base-point-freeness and hyperellipticity by finite checks over the
elliptic pencils, and projective-model labels by a decision table on the
self-intersection and the pencil degrees.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import tables
from .intmath import content, primitive, vneg, vsub
from .lattice import NSLattice, catalog
from .polyhedra import Cone, dual_cone, hilbert_basis
from .vinberg import CurveConfiguration, run_vinberg

MODEL_KINDS = (
    "DoublePlane",
    "QuarticP3",
    "SexticP4",
    "CI3QuadricsP5",
    "ConeOverTwistedCubic",
    "DoubleQuadricCone",
    "Other",
)


class FiberGraphError(ValueError):
    """The curves orthogonal to a pencil do not form a recognized extended
    Dynkin diagram — a bug, or a lattice outside the supported range."""


@dataclass(frozen=True)
class ZariskiSplit:
    """A class written as nef part plus a multiset of base curves.

    ``nef_part + sum(base_part)`` recovers the original class; each curve
    in ``base_part`` paired negatively with the running remainder at the
    moment it was split off.
    """

    nef_part: tuple
    base_part: tuple

    def to_dict(self):
        return {
            "nef_part": list(self.nef_part),
            "base_part": [list(c) for c in self.base_part],
        }


@dataclass(frozen=True)
class FibrationInfo:
    """An elliptic pencil: its primitive fiber class, whether some curve is
    a section, and the extended Dynkin labels of its reducible fibers."""

    fiber_class: tuple
    has_section: bool
    reducible_fibers: tuple

    def to_dict(self):
        return {
            "fiber_class": list(self.fiber_class),
            "has_section": self.has_section,
            "reducible_fibers": list(self.reducible_fibers),
        }


@dataclass(frozen=True)
class ModelLabel:
    """Projective-model classification of a big nef class."""

    kind: str
    contracted: int
    hyperelliptic_case: str | None

    def to_dict(self):
        return {
            "kind": self.kind,
            "contracted": self.contracted,
            "hyperelliptic_case": self.hyperelliptic_case,
        }


@dataclass(frozen=True)
class K3Context:
    """Immutable bundle of the combinatorial data of one surface.

    ``eff`` is the cone over the irreducible negative curves, ``nef`` its
    dual under the intersection form, ``beff``/``bnef`` the Hilbert bases
    of the two cones, and ``ample_witness`` a class pairing strictly
    positively with every curve (used to drive termination arguments).
    """

    lattice: NSLattice
    curves: CurveConfiguration
    eff: Cone
    nef: Cone
    beff: tuple
    bnef: tuple
    ample_witness: tuple

    @classmethod
    def build(cls, lattice, curves=None, max_level=30):
        """Assemble the context for a lattice (name, or NSLattice).

        Without ``curves``, a catalog lattice uses its bundled reference
        coordinates, so indices into ``bnef`` agree with the bundled data;
        any other lattice has its irreducible negative classes enumerated
        from scratch.
        """
        if isinstance(lattice, str):
            lattice = catalog(lattice)
        if any(lattice.gram[i][i] % 2 for i in range(lattice.rank)):
            raise ValueError("the intersection form must be even")
        if curves is None and lattice.name in tables.TABLES:
            curves = tables.family(lattice.name)["curves"]
        if curves is None:
            cfg = run_vinberg(lattice, max_level=max_level)
        elif isinstance(curves, CurveConfiguration):
            cfg = curves
        else:
            cfg = CurveConfiguration.from_curves(lattice, curves)
        eff = Cone.from_rays(cfg.curves)
        nef = dual_cone(eff, form=lattice.gram)
        beff = hilbert_basis(eff)
        bnef = hilbert_basis(nef)
        witness = tuple(sum(col) for col in zip(*bnef))
        for c in cfg.curves:
            if lattice.pairing(witness, c) <= 0:
                raise ValueError(f"no ample witness: degenerate on {c}")
        return cls(lattice=lattice, curves=cfg, eff=eff, nef=nef,
                   beff=beff, bnef=bnef, ample_witness=witness)

    def to_dict(self):
        return {
            "lattice": self.lattice.name,
            "gram": [list(r) for r in self.lattice.gram],
            "curves": self.curves.to_dict(),
            "eff": self.eff.to_dict(),
            "nef": self.nef.to_dict(),
            "beff": [list(v) for v in self.beff],
            "bnef": [list(v) for v in self.bnef],
            "ample_witness": list(self.ample_witness),
        }


def zariski_reduce(ctx, d):
    """Split an effective class into nef part and base curves, or None.

    The loop peels off the first curve (in the canonical ordering) pairing
    negatively with the remainder; it stops when the remainder is nef or
    leaves the effective cone.  The split itself is unique — the ordering
    only fixes which witness sequence is recorded.
    """
    current = tuple(d)
    if len(current) != ctx.lattice.rank:
        raise ValueError("class has wrong rank")
    base = []
    while True:
        if not any(current):
            return ZariskiSplit(current, tuple(sorted(base)))
        if not ctx.eff.contains(current):
            return None
        neg = next((c for c in ctx.curves.curves
                    if ctx.lattice.pairing(current, c) < 0), None)
        if neg is None:
            return ZariskiSplit(current, tuple(sorted(base)))
        base.append(neg)
        current = vsub(current, neg)


def is_effective(ctx, d) -> bool:
    return zariski_reduce(ctx, d) is not None


def h0(ctx, d):
    """Dimension of the space of global sections.

    Zero for non-effective classes.  Otherwise only the nef part carries
    sections: one section when it vanishes, ``a+1`` along a pencil taken
    ``a`` times, ``2 + square/2`` in the big case.
    """
    split = zariski_reduce(ctx, d)
    if split is None:
        return 0
    p = split.nef_part
    if not any(p):
        return 1
    square = ctx.lattice.square(p)
    if square > 0:
        return 2 + square // 2
    return content(p) + 1


def h2(ctx, d):
    return h0(ctx, vneg(d))


def h1(ctx, d):
    euler = 2 + ctx.lattice.square(d) // 2
    return h0(ctx, d) + h0(ctx, vneg(d)) - euler


def is_nef(ctx, d) -> bool:
    return ctx.nef.contains(d)


def is_ample(ctx, d) -> bool:
    return ctx.lattice.square(d) > 0 and ctx.nef.interior_contains(d)


_FIBRATION_CACHE = {}


def fibration_classes(ctx):
    """All elliptic pencils, as FibrationInfo records sorted by class.

    The pencils are the primitive isotropic elements of the nef Hilbert
    basis; a curve meeting the fiber once is a section, and the curves
    not meeting it at all assemble into the reducible fibers.  Results
    are memoized on the defining data, which is immutable.
    """
    key = (ctx.lattice.gram, ctx.curves.curves, ctx.bnef)
    cached = _FIBRATION_CACHE.get(key)
    if cached is not None:
        return cached
    lat = ctx.lattice
    infos = []
    seen = set()
    for v in ctx.bnef:
        if not any(v) or lat.square(v) != 0:
            continue
        f = primitive(v)
        if f in seen:
            continue
        seen.add(f)
        assert ctx.nef.contains(f)
        has_section = any(lat.pairing(e, f) == 1 for e in ctx.curves.curves)
        infos.append(FibrationInfo(f, has_section, _fiber_labels(ctx, f)))
    result = tuple(sorted(infos, key=lambda i: i.fiber_class))
    _FIBRATION_CACHE[key] = result
    return result


def _fiber_labels(ctx, fiber):
    lat = ctx.lattice
    verts = [c for c in ctx.curves.curves if lat.pairing(c, fiber) == 0]
    k = len(verts)
    pair = [[lat.pairing(a, b) for b in verts] for a in verts]
    remaining = set(range(k))
    labels = []
    while remaining:
        comp = []
        stack = [min(remaining)]
        remaining.discard(stack[0])
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in list(remaining):
                if pair[i][j] != 0:
                    remaining.discard(j)
                    stack.append(j)
        comp.sort()
        gram = [[pair[i][j] for j in comp] for i in comp]
        labels.append(_component_label(gram))
    return tuple(sorted(labels))


def _component_label(gram):
    """Name a connected pairing graph as an extended Dynkin diagram."""
    k = len(gram)
    edges = [(i, j, gram[i][j])
             for i in range(k) for j in range(i + 1, k) if gram[i][j] != 0]
    if k == 2 and len(edges) == 1 and edges[0][2] == 2:
        return "A~1"
    if any(w != 1 for _, _, w in edges):
        raise FiberGraphError(f"multiple bond in a {k}-curve fiber graph")
    deg = [sum(1 for j in range(k) if j != i and gram[i][j]) for i in range(k)]
    if k >= 3 and len(edges) == k and all(d == 2 for d in deg):
        return f"A~{k - 1}"
    if len(edges) == k - 1:
        ds = sorted(deg)
        if k == 5 and ds == [1, 1, 1, 1, 4]:
            return "D~4"
        if (6 <= k <= 9 and ds[:4] == [1, 1, 1, 1] and ds[-2:] == [3, 3]
                and all(d == 2 for d in ds[4:-2])):
            return f"D~{k - 1}"
        if ds.count(3) == 1 and ds[-1] == 3:
            arms = _arm_lengths(gram, deg.index(3))
            if arms is not None:
                if k == 7 and arms == [2, 2, 2]:
                    return "E~6"
                if k == 8 and arms == [1, 3, 3]:
                    return "E~7"
                if k == 9 and arms == [1, 2, 5]:
                    return "E~8"
    raise FiberGraphError(f"unrecognized fiber graph on {k} curves")


def _arm_lengths(gram, center):
    """Lengths of the three simple paths leaving a degree-3 tree vertex,
    sorted; None if an arm branches."""
    k = len(gram)
    arms = []
    for start in range(k):
        if start == center or not gram[center][start]:
            continue
        length = 1
        prev, cur = center, start
        while True:
            nxt = [j for j in range(k)
                   if j != prev and j != cur and gram[cur][j]]
            if not nxt:
                break
            if len(nxt) > 1:
                return None
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return sorted(arms)


def is_bpf(ctx, d) -> bool:
    """Whether the complete linear system of a nef effective class is base
    point free.

    The only failure mode is a pencil taken at least twice plus one of its
    sections; the finitely many pencil/section pairs are checked exactly.
    """
    d = tuple(d)
    if not any(d):
        raise ValueError("the zero class has no linear system to test")
    if not is_nef(ctx, d) or not is_effective(ctx, d):
        raise ValueError("class must be nef and effective")
    if ctx.lattice.square(d) == 0:
        return True
    for info in fibration_classes(ctx):
        f = info.fiber_class
        for e in ctx.curves.curves:
            if ctx.lattice.pairing(e, f) != 1:
                continue
            a = _multiple_of(vsub(d, e), f)
            if a is not None and a >= 2:
                return False
    return True


def _multiple_of(v, w):
    """The integer a with v == a*w, or None."""
    a = None
    for x, y in zip(v, w):
        if y == 0:
            if x != 0:
                return None
        else:
            if x % y:
                return None
            q = x // y
            if a is None:
                a = q
            elif q != a:
                return None
    return a


def hyperelliptic_case(ctx, d):
    """Which hyperelliptic mechanism applies to a base-point-free class.

    "C" in square 2; "A" when some pencil meets the class twice; "B" for
    the double of an integral square-2 class (square 8); None otherwise.
    """
    square = ctx.lattice.square(d)
    if square == 2:
        return "C"
    if square >= 4:
        if any(ctx.lattice.pairing(i.fiber_class, d) == 2
               for i in fibration_classes(ctx)):
            return "A"
        if square == 8 and all(x % 2 == 0 for x in d):
            return "B"
    return None


def is_very_ample(ctx, d) -> bool:
    return (is_ample(ctx, d) and is_bpf(ctx, d)
            and hyperelliptic_case(ctx, d) is None
            and ctx.lattice.square(d) >= 4)


def classify_model(ctx, d):
    """Label the projective model of a big nef effective class.

    The decision table keys on the self-intersection, the hyperelliptic
    case and the pencil degrees; anything outside the tabulated shapes is
    reported as Other.  ``contracted`` counts the curves of degree zero,
    which the model maps to singular points.
    """
    lat = ctx.lattice
    d = tuple(d)
    case = hyperelliptic_case(ctx, d)
    square = lat.square(d)
    contracted = sum(1 for c in ctx.curves.curves if lat.pairing(d, c) == 0)
    if square == 2:
        kind = "DoublePlane"
    elif case is None and square == 4:
        kind = "QuarticP3"
    elif case is None and square == 6:
        kind = "SexticP4"
    elif case is None and square == 8 and all(
            lat.pairing(i.fiber_class, d) > 3 for i in fibration_classes(ctx)):
        kind = "CI3QuadricsP5"
    elif case == "A" and _is_cubic_cone_shape(ctx, d):
        kind = "ConeOverTwistedCubic"
    elif case == "B":
        kind = "DoubleQuadricCone"
    else:
        kind = "Other"
    return ModelLabel(kind, contracted, case)


def _is_cubic_cone_shape(ctx, d):
    """Match d = 3F + 2E1 + E2 with F a pencil, E1 a section of it and E2 a
    curve meeting E1 once but not F."""
    lat = ctx.lattice
    curves = ctx.curves.curves
    for info in fibration_classes(ctx):
        f = info.fiber_class
        for e1 in curves:
            if lat.pairing(e1, f) != 1:
                continue
            for e2 in curves:
                if lat.pairing(e2, f) != 0 or lat.pairing(e1, e2) != 1:
                    continue
                built = tuple(3 * a + 2 * b + c for a, b, c in zip(f, e1, e2))
                if built == d:
                    return True
    return False
