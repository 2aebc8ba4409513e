"""Bundled reference data for the fourteen catalog lattices.

For each lattice the package ships the expected results of the full pipeline:
the (-2)-curve classes with their intersection matrix, the Hilbert bases of
the effective and nef cones, the nef-cone extreme rays, a distinguished
polarization with its curve degrees, the elliptic fibration classes with
fiber types and section flags, and the generator-degree report (necessary /
starred).  The ``verify`` command recomputes everything from scratch and
diffs against these records.

Index convention: ``bnef`` is sorted ascending lexicographically and all
1-based indices (fibrations, generator degrees) refer to positions in that
order.
"""
from __future__ import annotations

V1_BNEF = (
    (1, -2, 0, 0), (1, -1, 0, -1), (1, -1, 0, 0), (1, -1, 1, -1),
    (1, -1, 1, 0), (1, 0, 0, -2), (1, 0, 0, -1), (1, 0, 0, 0),
    (1, 0, 1, -1), (1, 0, 1, 0), (1, 0, 2, 0), (2, -3, 0, -2),
    (2, -3, 1, -2), (2, -3, 2, -1), (2, -3, 2, 0), (2, -2, 0, -3),
    (2, -2, 1, -3), (2, -2, 3, -1), (2, -2, 3, 0), (2, -1, 2, -3),
    (2, -1, 3, -2), (2, 0, 2, -3), (2, 0, 3, -2), (3, -5, 2, -2),
    (3, -4, 0, -4), (3, -4, 1, -4), (3, -4, 2, -4), (3, -4, 3, -3),
    (3, -4, 4, -2), (3, -4, 4, -1), (3, -4, 4, 0), (3, -3, 3, -4),
    (3, -3, 4, -3), (3, -2, 2, -5), (3, -2, 4, -4), (3, -2, 5, -2),
    (3, -1, 4, -4), (3, 0, 4, -4), (4, -6, 3, -4), (4, -6, 4, -3),
    (4, -4, 3, -6), (4, -4, 6, -3), (4, -3, 4, -6), (4, -3, 6, -4),
    (5, -8, 4, -4), (5, -6, 5, -6), (5, -6, 6, -5), (5, -5, 6, -6),
    (5, -4, 4, -8), (5, -4, 8, -4), (7, -8, 8, -8),
)

V2_BNEF = (
    (-3, 6, 4, -4), (-3, 6, 8, 4), (-2, 4, 3, -2), (-2, 4, 5, 2),
    (-1, 1, 0, 0), (-1, 2, 1, -1), (-1, 2, 2, 0), (-1, 2, 2, 1),
    (-1, 3, 2, -2), (-1, 3, 3, -1), (-1, 3, 4, 0), (-1, 3, 4, 1),
    (-1, 3, 4, 2), (0, 1, 0, 0), (0, 1, 1, 0), (0, 2, 1, -1),
    (0, 2, 2, 1), (0, 3, 2, -2), (0, 3, 3, -1), (0, 3, 4, 0),
    (0, 3, 4, 1), (0, 3, 4, 2), (1, 1, 0, 0), (1, 2, 1, -1),
    (1, 2, 2, 0), (1, 2, 2, 1), (1, 3, 2, -2), (1, 3, 3, -1),
    (1, 3, 4, 0), (1, 3, 4, 1), (1, 3, 4, 2), (2, 4, 3, -2),
    (2, 4, 5, 2), (3, 6, 4, -4), (3, 6, 8, 4),
)

V13_BNEF = (
    (1, 0, 0, 0), (2, -1, -1, -1), (2, -1, -1, 0), (2, -1, -1, 1),
    (2, -1, 0, -1), (2, -1, 0, 0), (2, -1, 0, 1), (2, -1, 1, -1),
    (2, -1, 1, 0), (2, 0, -1, -1), (2, 0, -1, 0), (2, 0, -1, 1),
    (2, 0, 0, -1), (2, 0, 1, -1), (2, 1, -1, -1), (2, 1, -1, 0),
    (2, 1, 0, -1), (3, -1, 1, 1), (3, 0, 0, 1), (3, 0, 1, 0),
    (3, 1, -1, 1), (3, 1, 0, 0), (3, 1, 1, -1), (4, 0, 1, 1),
    (4, 1, 0, 1), (4, 1, 1, 0), (5, -2, -2, 3), (5, -2, 3, -2),
    (5, 1, 1, 1), (5, 3, -2, -2), (6, -3, -3, 4), (6, -3, 2, 2),
    (6, -3, 4, -3), (6, 2, -3, 2), (6, 2, 2, -3), (6, 4, -3, -3),
    (8, -4, 3, 3), (8, 3, -4, 3), (8, 3, 3, -4),
)

V14_BNEF = (
    (1, -1, 0, -1), (1, -1, 1, -1), (1, 0, -1, -1), (1, 0, 0, -2),
    (1, 0, 0, -1), (1, 0, 0, 0), (1, 0, 1, -2), (1, 1, -1, -1),
    (1, 1, -1, 0), (1, 1, 0, -1), (2, -3, 2, -1), (2, -2, 1, -1),
    (2, -1, -2, -3), (2, -1, -1, -3), (2, 0, -2, -3), (2, 0, -1, -4),
    (2, 1, -3, -2), (2, 1, -2, -3), (2, 1, 0, -4), (2, 1, 1, -4),
    (2, 2, -3, -1), (2, 2, -1, 0), (2, 2, 0, -3), (2, 3, -3, 0),
    (2, 3, -2, -1), (2, 3, -2, 0), (2, 3, -2, 1), (2, 3, -1, -1),
    (3, -1, -3, -5), (3, 0, -4, -4), (3, 1, -1, -6), (3, 1, 2, -7),
    (3, 1, 3, -7), (3, 2, -2, -5), (3, 2, 2, -6), (3, 3, -5, -2),
    (3, 3, -4, -3), (3, 3, -2, -4), (3, 4, -5, -1), (3, 4, -4, -2),
    (3, 4, -2, -3), (3, 4, -1, -3), (3, 5, -4, 1), (3, 5, -3, 1),
    (4, 1, 0, -9), (4, 1, 1, -9), (4, 3, -6, -4), (4, 3, -5, -5),
    (4, 4, -4, -5), (4, 4, 1, -6), (4, 5, -4, -4), (4, 5, 0, -5),
    (4, 6, -6, -1), (4, 6, -5, -2), (5, 1, -1, -11), (5, 2, -7, -6),
    (5, 2, -2, -10), (5, 3, -8, -5), (5, 4, -5, -7), (5, 6, -8, -3),
    (5, 6, -7, -4), (5, 7, -5, -4), (5, 7, -2, -5), (5, 7, -1, -5),
    (5, 8, -8, 0), (5, 8, -7, 0), (6, -2, -7, -9), (6, 5, -10, -5),
    (6, 7, -7, -6), (6, 9, -10, -1), (6, 10, -7, 3), (7, -3, -8, -11),
    (7, 3, 6, -16), (7, 4, -5, -12), (7, 5, -11, -7), (7, 5, -6, -11),
    (7, 8, -12, -4), (7, 9, -12, -3), (7, 10, -6, -6), (7, 10, -5, -6),
    (7, 11, -11, -1), (7, 12, -8, 4), (8, 3, 8, -19), (8, 7, -8, -11),
    (8, 8, -13, -6), (8, 11, -13, -3), (8, 11, -8, -7), (9, 7, -9, -13),
    (9, 10, -10, -10), (9, 11, -15, -5), (9, 11, -10, -9), (9, 13, -9, -7),
    (10, 10, -11, -12), (10, 13, -11, -9), (11, 3, -2, -24),
    (11, 13, -13, -11), (11, 15, -2, -12), (13, 3, -2, -29),
    (13, 18, -2, -14), (14, 10, -23, -13), (14, 22, -23, -1),
    (17, 12, -28, -16), (17, 27, -28, -1), (18, 22, -31, -9),
    (19, 15, -18, -28), (19, 27, -18, -16), (22, 27, -38, -11),
    (23, 18, -22, -34), (23, 27, -26, -24), (23, 33, -22, -19),
    (28, 33, -32, -29),
)

V14_GENERATOR_DEGREES = (
    (1, 0, -1, -2), (0, -1, 1, -1), (1, 2, -1, 0), (2, 2, -3, -2),
    (0, 0, 1, 0), (0, 0, -1, 1), (1, 1, 0, -2), (2, 3, -3, -1),
    (1, -1, 0, -1), (1, 0, -1, -1), (1, 0, 0, 0), (1, 1, -1, -1),
    (1, 1, -1, 0), (2, -3, 2, -1), (2, -2, 1, -1), (2, -1, -2, -3),
    (2, 1, -3, -2), (2, 1, 0, -4), (2, 2, -3, -1), (2, 2, 0, -3),
    (2, 3, -3, 0), (2, 3, -2, 1), (3, 0, -4, -4), (3, 1, 2, -7),
    (3, 2, -2, -5), (3, 2, 2, -6), (3, 3, -5, -2), (3, 3, -2, -4),
    (3, 4, -5, -1), (3, 4, -2, -3), (3, 5, -4, 1), (4, 1, 0, -9),
    (4, 4, -4, -5), (4, 5, -4, -4), (4, 5, 0, -5), (5, 2, -2, -10),
    (5, 3, -8, -5), (5, 7, -2, -5), (5, 8, -8, 0), (6, -2, -7, -9),
    (6, 5, -10, -5), (6, 9, -10, -1), (6, 10, -7, 3), (7, -3, -8, -11),
    (7, 3, 6, -16), (7, 5, -6, -11), (7, 8, -12, -4), (7, 9, -12, -3),
    (7, 10, -6, -6), (7, 12, -8, 4), (8, 3, 8, -19), (8, 7, -8, -11),
    (8, 11, -8, -7), (9, 10, -10, -10), (9, 11, -10, -9),
    (11, 3, -2, -24), (11, 15, -2, -12), (13, 3, -2, -29),
    (13, 18, -2, -14), (14, 10, -23, -13), (14, 22, -23, -1),
    (17, 12, -28, -16), (17, 27, -28, -1), (18, 22, -31, -9),
    (19, 15, -18, -28), (19, 27, -18, -16), (22, 27, -38, -11),
    (23, 18, -22, -34), (23, 27, -26, -24), (23, 33, -22, -19),
    (28, 33, -32, -29),
)

TABLES = {
    "V1": {
        "curves": (
            (1, -1, 0, -2), (1, -1, 2, 0), (0, 0, -1, 0), (2, -2, 2, -3),
            (0, 1, 0, 0), (2, -2, 3, -2), (1, 0, 1, -2), (1, -2, 0, -1),
            (1, 0, 2, -1), (1, -2, 1, 0), (2, -3, 2, -2), (0, 0, 0, 1),
        ),
        "beff_extra": ((1, -1, 1, -1),),
        "nef_rays": (
            (1, -2, 0, 0), (1, 0, 0, -2), (1, 0, 0, 0), (1, 0, 2, 0),
            (3, -4, 0, -4), (3, -4, 2, -4), (3, -4, 4, -2), (3, -4, 4, 0),
            (3, -2, 4, -4), (3, 0, 4, -4), (5, -8, 4, -4), (5, -4, 4, -8),
            (5, -4, 8, -4), (7, -8, 8, -8),
        ),
        "bnef": V1_BNEF,
        "intmat": (
            (-2, 6, 0, 0, 2, 4, 0, 0, 4, 4, 2, 4),
            (6, -2, 4, 4, 2, 0, 4, 4, 0, 0, 2, 0),
            (0, 4, -2, 4, 0, 6, 2, 0, 4, 2, 4, 0),
            (0, 4, 4, -2, 4, 0, 0, 2, 2, 4, 0, 6),
            (2, 2, 0, 4, -2, 4, 0, 4, 0, 4, 6, 0),
            (4, 0, 6, 0, 4, -2, 2, 4, 0, 2, 0, 4),
            (0, 4, 2, 0, 0, 2, -2, 4, 0, 6, 4, 4),
            (0, 4, 0, 2, 4, 4, 4, -2, 6, 0, 0, 2),
            (4, 0, 4, 2, 0, 0, 0, 6, -2, 4, 4, 2),
            (4, 0, 2, 4, 4, 2, 6, 0, 4, -2, 0, 0),
            (2, 2, 4, 0, 6, 0, 4, 0, 4, 0, -2, 4),
            (4, 0, 0, 6, 0, 4, 4, 2, 2, 0, 4, -2),
        ),
        "polarization": {
            "h": (1, -1, 1, -1), "square": 2,
            "curve_degrees": (2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2),
        },
        "fibrations": (
            (1, False, ("A~1", "A~1")), (6, False, ("A~1", "A~1")),
            (11, False, ("A~1", "A~1")), (27, False, ("A~1", "A~1")),
            (29, False, ("A~1", "A~1")), (35, False, ("A~1", "A~1")),
        ),
        "cox": {"necessary_nef": (4,), "starred_nef": (), "extra": (),
                "reduced": False},
    },
    "V2": {
        "curves": (
            (1, 1, 1, 0), (0, 0, 0, 1), (-1, 1, 1, 0),
            (0, 0, -1, -1), (0, 1, 1, -1), (0, 1, 2, 1),
        ),
        "beff_extra": (),
        "nef_rays": (
            (-3, 6, 4, -4), (-3, 6, 8, 4), (-1, 1, 0, 0), (-1, 3, 4, 0),
            (1, 1, 0, 0), (1, 3, 4, 0), (3, 6, 4, -4), (3, 6, 8, 4),
        ),
        "bnef": V2_BNEF,
        "intmat": (
            (-2, 1, 6, 1, 1, 1),
            (1, -2, 1, 1, 3, 0),
            (6, 1, -2, 1, 1, 1),
            (1, 1, 1, -2, 0, 3),
            (1, 3, 1, 0, -2, 1),
            (1, 0, 1, 3, 1, -2),
        ),
        "polarization": {
            "h": (0, 1, 1, 0), "square": 2,
            "curve_degrees": (2, 1, 2, 1, 1, 1),
        },
        "fibrations": (
            (5, False, ("A~2",)), (11, False, ("A~2",)),
            (23, False, ("A~2",)), (29, False, ("A~2",)),
        ),
        "cox": {
            "necessary_nef": (1, 2, 3, 4, 5, 7, 11, 14, 15, 20, 23, 25, 29,
                              32, 33, 34, 35),
            "starred_nef": (), "extra": (), "reduced": False,
        },
    },
    "V3": {
        "curves": (
            (1, 0, 2, 1), (0, 0, 0, -1), (1, 1, 2, 2),
            (0, 1, 0, 0), (0, -1, -1, 0),
        ),
        "beff_extra": (),
        "nef_rays": (
            (1, 0, 0, 0), (1, 1, 2, 1), (2, -1, 2, 1),
            (2, 1, 2, 3), (3, 0, 4, 4),
        ),
        "bnef": (
            (1, 0, 0, 0), (1, 0, 1, 1), (1, 1, 2, 1), (2, -1, 2, 1),
            (2, 0, 2, 1), (2, 1, 2, 2), (2, 1, 2, 3), (3, 0, 4, 3),
            (3, 0, 4, 4), (3, 1, 4, 4),
        ),
        "intmat": (
            (-2, 0, 0, 2, 1),
            (0, -2, 2, 0, 1),
            (0, 2, -2, 0, 1),
            (2, 0, 0, -2, 1),
            (1, 1, 1, 1, -2),
        ),
        "polarization": {
            "h": (1, 0, 1, 1), "square": 2,
            "curve_degrees": (1, 1, 1, 1, 0),
        },
        "fibrations": ((3, False, ("A~1", "A~1")),),
        "cox": {"necessary_nef": (1, 2, 4, 7, 9), "starred_nef": (),
                "extra": (), "reduced": False},
    },
    "V4": {
        "curves": (
            (0, 0, 0, -1), (-1, 0, 1, 0), (1, -1, 0, 0),
            (-1, 0, 0, 1), (0, 0, -1, 0),
        ),
        "beff_extra": (),
        "nef_rays": (
            (-2, -2, 0, 1), (-2, -2, 1, 0), (-2, -2, 1, 1),
            (-1, -1, 0, 0), (-1, 0, 0, 0),
        ),
        "bnef": (
            (-2, -2, 0, 1), (-2, -2, 1, 0), (-2, -2, 1, 1),
            (-1, -1, 0, 0), (-1, 0, 0, 0),
        ),
        "intmat": (
            (-2, 0, 0, 2, 0),
            (0, -2, 1, 0, 2),
            (0, 1, -2, 1, 0),
            (2, 0, 1, -2, 0),
            (0, 2, 0, 0, -2),
        ),
        "polarization": {
            "h": (-2, -2, 1, 1), "square": 4,
            "curve_degrees": (2, 0, 0, 0, 2),
        },
        "fibrations": ((5, True, ("A~1", "A~1")),),
        "cox": {"necessary_nef": (3,), "starred_nef": (),
                "extra": ((-3, -3, 1, 1),), "reduced": False},
    },
    "V5": {
        "curves": (
            (0, -1, 0, 1), (0, -1, 1, 0), (0, 0, 0, -1),
            (-1, 0, 1, 0), (-1, 0, 0, 1), (0, 0, -1, 0),
        ),
        "beff_extra": (),
        "nef_rays": (
            (-1, -1, 0, 1), (-1, -1, 1, 0), (-1, -1, 1, 1),
            (-1, 0, 0, 0), (0, -1, 0, 0),
        ),
        "bnef": (
            (-1, -1, 0, 1), (-1, -1, 1, 0), (-1, -1, 1, 1),
            (-1, 0, 0, 0), (0, -1, 0, 0),
        ),
        "intmat": (
            (-2, 0, 2, 2, 0, 0),
            (0, -2, 0, 0, 2, 2),
            (2, 0, -2, 0, 2, 0),
            (2, 0, 0, -2, 0, 2),
            (0, 2, 2, 0, -2, 0),
            (0, 2, 0, 2, 0, -2),
        ),
        "polarization": {
            "h": (-1, -1, 0, 1), "square": 2,
            "curve_degrees": (0, 2, 2, 2, 0, 0),
        },
        "fibrations": (
            (3, False, ("A~1", "A~1")), (4, False, ("A~1", "A~1")),
            (5, False, ("A~1", "A~1")),
        ),
        "cox": {"necessary_nef": (), "starred_nef": (),
                "extra": ((-2, -2, 1, 1),), "reduced": False},
    },
    "V6": {
        "curves": (
            (0, 0, 0, 1), (-2, -2, -3, -2), (0, -1, 0, -1), (0, 0, 1, 0),
            (-1, 0, 0, -1), (-2, -2, -2, -3), (0, -1, -1, 0), (-1, 0, -1, 0),
        ),
        "beff_extra": (),
        "nef_rays": (
            (-4, -4, -6, -3), (-4, -4, -3, -6), (-3, -2, -3, -3),
            (-2, -3, -3, -3), (-2, -2, -3, 0), (-2, -2, 0, -3),
            (-1, 0, 0, 0), (0, -1, 0, 0),
        ),
        "bnef": (
            (-4, -4, -6, -3), (-4, -4, -3, -6), (-3, -3, -4, -3),
            (-3, -3, -3, -4), (-3, -2, -3, -3), (-3, -2, -3, -2),
            (-3, -2, -2, -3), (-2, -3, -3, -3), (-2, -3, -3, -2),
            (-2, -3, -2, -3), (-2, -2, -3, -1), (-2, -2, -3, 0),
            (-2, -2, -1, -3), (-2, -2, 0, -3), (-1, -1, -1, -1),
            (-1, -1, -1, 0), (-1, -1, 0, -1), (-1, 0, 0, 0), (0, -1, 0, 0),
        ),
        "intmat": (
            (-2, 4, 2, 0, 2, 6, 0, 0),
            (4, -2, 2, 6, 2, 0, 0, 0),
            (2, 2, -2, 0, 1, 0, 0, 3),
            (0, 6, 0, -2, 0, 4, 2, 2),
            (2, 2, 1, 0, -2, 0, 3, 0),
            (6, 0, 0, 4, 0, -2, 2, 2),
            (0, 0, 0, 2, 3, 2, -2, 1),
            (0, 0, 3, 2, 0, 2, 1, -2),
        ),
        "polarization": {
            "h": (-1, -1, -1, -1), "square": 2,
            "curve_degrees": (2, 2, 1, 2, 1, 2, 1, 1),
        },
        "fibrations": (
            (5, False, ("A~1", "A~1")), (8, False, ("A~1", "A~1")),
            (18, False, ("A~1", "A~1")), (19, False, ("A~1", "A~1")),
        ),
        "cox": {"necessary_nef": (15,), "starred_nef": (), "extra": (),
                "reduced": False},
    },
    "V7": {
        "curves": (
            (0, -1, 0, 1), (0, 0, 0, -1), (-1, -1, -2, 1), (-1, -1, -1, 2),
            (0, 0, 1, 0), (-1, 0, 0, 1), (0, -1, -1, 0), (-1, 0, -1, 0),
        ),
        "beff_extra": (),
        "nef_rays": (
            (-2, -1, -2, 2), (-1, -2, -2, 2), (-1, -1, -2, 0),
            (-1, -1, 0, 2), (-1, 0, 0, 0), (0, -1, 0, 0),
        ),
        "bnef": (
            (-2, -2, -3, 2), (-2, -2, -2, 3), (-2, -1, -2, 1),
            (-2, -1, -2, 2), (-2, -1, -1, 2), (-1, -2, -2, 1),
            (-1, -2, -2, 2), (-1, -2, -1, 2), (-1, -1, -2, 0),
            (-1, -1, -1, 0), (-1, -1, -1, 1), (-1, -1, 0, 1),
            (-1, -1, 0, 2), (-1, 0, 0, 0), (0, -1, 0, 0),
        ),
        "intmat": (
            (-2, 2, 2, 0, 0, 2, 0, 4),
            (2, -2, 2, 4, 0, 2, 0, 0),
            (2, 2, -2, 0, 4, 2, 0, 0),
            (0, 4, 0, -2, 2, 0, 2, 2),
            (0, 0, 4, 2, -2, 0, 2, 2),
            (2, 2, 2, 0, 0, -2, 4, 0),
            (0, 0, 0, 2, 2, 4, -2, 2),
            (4, 0, 0, 2, 2, 0, 2, -2),
        ),
        "polarization": {
            "h": (-1, -1, -1, 1), "square": 4,
            "curve_degrees": (2, 2, 2, 2, 2, 2, 2, 2),
        },
        "fibrations": (
            (4, False, ("A~1", "A~1")), (7, False, ("A~1", "A~1")),
            (9, False, ("A~1", "A~1")), (13, False, ("A~1", "A~1")),
            (14, False, ("A~1", "A~1")), (15, False, ("A~1", "A~1")),
        ),
        "cox": {"necessary_nef": (), "starred_nef": (), "extra": (),
                "reduced": False},
    },
    "V8": {
        "curves": (
            (0, 0, 0, 1), (-1, 0, 1, 0), (1, -1, 0, 0), (0, 0, -1, -1),
        ),
        "beff_extra": (),
        "nef_rays": (
            (-3, -3, 1, -1), (-3, -3, 2, 1), (-1, -1, 0, 0), (-1, 0, 0, 0),
        ),
        "bnef": (
            (-3, -3, 1, -1), (-3, -3, 2, 1), (-2, -2, 1, 0),
            (-1, -1, 0, 0), (-1, 0, 0, 0),
        ),
        "intmat": (
            (-2, 1, 0, 1),
            (1, -2, 1, 1),
            (0, 1, -2, 0),
            (1, 1, 0, -2),
        ),
        "polarization": {
            "h": (-2, -2, 1, 0), "square": 6,
            "curve_degrees": (1, 0, 0, 1),
        },
        "fibrations": ((5, True, ("A~2",)),),
        "cox": {"necessary_nef": (1, 2, 3, 5), "starred_nef": (),
                "extra": (), "reduced": False},
    },
    "V9": {
        "curves": (
            (0, 0, 0, 1), (0, -1, 1, 0), (-1, 0, 1, 0), (0, 0, -1, -1),
        ),
        "beff_extra": (),
        "nef_rays": (
            (-3, -3, 2, -2), (-3, -3, 4, 2), (-1, 0, 0, 0), (0, -1, 0, 0),
        ),
        "bnef": (
            (-3, -3, 2, -2), (-3, -3, 4, 2), (-2, -2, 1, -1),
            (-2, -2, 2, 1), (-1, -1, 1, 0), (-1, 0, 0, 0), (0, -1, 0, 0),
        ),
        "intmat": (
            (-2, 1, 1, 1),
            (1, -2, 0, 1),
            (1, 0, -2, 1),
            (1, 1, 1, -2),
        ),
        "polarization": {
            "h": (-1, -1, 1, 0), "square": 2,
            "curve_degrees": (1, 0, 0, 1),
        },
        "fibrations": ((6, False, ("A~2",)), (7, False, ("A~2",))),
        "cox": {"necessary_nef": (1, 2, 3, 4, 6, 7), "starred_nef": (),
                "extra": (), "reduced": False},
    },
    "V10": {
        "curves": (
            (0, 0, 0, -1), (0, -1, 1, 1), (-1, 0, 1, 1), (0, 0, -1, 0),
        ),
        "beff_extra": (),
        "nef_rays": (
            (-1, -1, 1, 2), (-1, -1, 2, 1), (-1, 0, 0, 0), (0, -1, 0, 0),
        ),
        "bnef": (
            (-1, -1, 1, 1), (-1, -1, 1, 2), (-1, -1, 2, 1),
            (-1, 0, 0, 0), (0, -1, 0, 0),
        ),
        "intmat": (
            (-2, 1, 1, 1),
            (1, -2, 1, 1),
            (1, 1, -2, 1),
            (1, 1, 1, -2),
        ),
        "polarization": {
            "h": (-1, -1, 1, 1), "square": 4,
            "curve_degrees": (1, 1, 1, 1),
        },
        "fibrations": (
            (2, False, ("A~2",)), (3, False, ("A~2",)),
            (4, False, ("A~2",)), (5, False, ("A~2",)),
        ),
        "cox": {"necessary_nef": (2, 3, 4, 5), "starred_nef": (),
                "extra": (), "reduced": False},
    },
    "V11": {
        "curves": (
            (0, 0, 0, -1), (0, -1, 1, 1), (-1, -1, 3, 2),
            (-1, 0, 1, 1), (-1, -1, 2, 3), (0, 0, -1, 0),
        ),
        "beff_extra": (),
        "nef_rays": (
            (-3, -2, 6, 6), (-2, -3, 6, 6), (-2, -1, 2, 4), (-2, -1, 4, 2),
            (-1, -2, 2, 4), (-1, -2, 4, 2), (-1, 0, 0, 0), (0, -1, 0, 0),
        ),
        "bnef": (
            (-3, -3, 7, 7), (-3, -2, 5, 6), (-3, -2, 6, 5), (-3, -2, 6, 6),
            (-2, -3, 5, 6), (-2, -3, 6, 5), (-2, -3, 6, 6), (-2, -2, 3, 5),
            (-2, -2, 4, 5), (-2, -2, 5, 3), (-2, -2, 5, 4), (-2, -1, 2, 3),
            (-2, -1, 2, 4), (-2, -1, 3, 2), (-2, -1, 3, 3), (-2, -1, 4, 2),
            (-1, -2, 2, 3), (-1, -2, 2, 4), (-1, -2, 3, 2), (-1, -2, 3, 3),
            (-1, -2, 4, 2), (-1, -1, 1, 1), (-1, -1, 1, 2), (-1, -1, 2, 1),
            (-1, -1, 2, 2), (-1, 0, 0, 0), (0, -1, 0, 0),
        ),
        "intmat": (
            (-2, 1, 1, 1, 4, 1),
            (1, -2, 1, 4, 1, 1),
            (1, 1, -2, 1, 1, 4),
            (1, 4, 1, -2, 1, 1),
            (4, 1, 1, 1, -2, 1),
            (1, 1, 4, 1, 1, -2),
        ),
        "polarization": {
            "h": (-1, -1, 2, 2), "square": 4,
            "curve_degrees": (2, 2, 2, 2, 2, 2),
        },
        "fibrations": (
            (4, False, ("A~2",)), (7, False, ("A~2",)), (13, False, ("A~2",)),
            (16, False, ("A~2",)), (18, False, ("A~2",)), (21, False, ("A~2",)),
            (26, False, ("A~2",)), (27, False, ("A~2",)),
        ),
        "cox": {
            "necessary_nef": (4, 7, 9, 11, 13, 15, 16, 18, 20, 21, 23, 24,
                              26, 27),
            "starred_nef": (1, 2, 3, 5, 6, 8, 10, 12, 14, 17, 19, 22, 25),
            "extra": (), "reduced": False,
        },
    },
    "V12": {
        "curves": (
            (-1, -2, 1, 2), (0, 0, 0, -1), (-1, -3, 1, 1),
            (0, 1, 0, 0), (0, 0, -1, 0), (-1, -2, 2, 1),
        ),
        "beff_extra": (),
        "nef_rays": (
            (-7, -15, 9, 9), (-5, -12, 3, 6), (-5, -12, 6, 3),
            (-4, -6, 3, 6), (-4, -6, 6, 3), (-2, -3, 0, 0),
            (-2, -3, 3, 3), (-1, -3, 0, 0),
        ),
        "bnef": (
            (-7, -15, 9, 9), (-5, -12, 3, 6), (-5, -12, 6, 3),
            (-5, -11, 6, 6), (-4, -9, 3, 5), (-4, -9, 4, 5), (-4, -9, 5, 3),
            (-4, -9, 5, 4), (-4, -6, 3, 6), (-4, -6, 6, 3), (-3, -7, 3, 3),
            (-3, -6, 2, 4), (-3, -6, 3, 4), (-3, -6, 4, 2), (-3, -6, 4, 3),
            (-3, -6, 4, 4), (-3, -5, 2, 4), (-3, -5, 4, 2), (-2, -5, 1, 2),
            (-2, -5, 2, 1), (-2, -4, 1, 2), (-2, -4, 2, 1), (-2, -3, 0, 0),
            (-2, -3, 1, 1), (-2, -3, 1, 2), (-2, -3, 2, 1), (-2, -3, 2, 2),
            (-2, -3, 2, 3), (-2, -3, 3, 2), (-2, -3, 3, 3), (-1, -3, 0, 0),
            (-1, -2, 0, 0), (-1, -2, 1, 1),
        ),
        "intmat": (
            (-2, 3, 0, 1, 0, 1),
            (3, -2, 1, 0, 1, 0),
            (0, 1, -2, 3, 1, 0),
            (1, 0, 3, -2, 0, 1),
            (0, 1, 1, 0, -2, 3),
            (1, 0, 0, 1, 3, -2),
        ),
        "polarization": {
            "h": (-1, -2, 1, 1), "square": 2,
            "curve_degrees": (1, 1, 1, 1, 1, 1),
        },
        "fibrations": ((30, False, ("A~2",)), (31, False, ("A~2",))),
        "cox": {"necessary_nef": (30, 31), "starred_nef": (), "extra": (),
                "reduced": False},
    },
    "V13": {
        "curves": (
            (0, 0, 0, -1), (1, 0, 0, 1), (0, 0, -1, 0),
            (1, 1, 0, 0), (1, 0, 1, 0), (0, -1, 0, 0),
        ),
        "beff_extra": (),
        "nef_rays": (
            (2, -1, -1, -1), (5, 1, 1, 1), (6, -3, -3, 4), (6, -3, 4, -3),
            (6, 4, -3, -3), (8, -4, 3, 3), (8, 3, -4, 3), (8, 3, 3, -4),
        ),
        "bnef": V13_BNEF,
        "intmat": (
            (-2, 3, 0, 1, 1, 0),
            (3, -2, 1, 0, 0, 1),
            (0, 1, -2, 1, 3, 0),
            (1, 0, 1, -2, 0, 3),
            (1, 0, 3, 0, -2, 1),
            (0, 1, 0, 3, 1, -2),
        ),
        "polarization": {
            "h": (1, 0, 0, 0), "square": 2,
            "curve_degrees": (1, 1, 1, 1, 1, 1),
        },
        "fibrations": (),
        "cox": {
            "necessary_nef": (7, 9, 12, 14, 16, 17, 27, 28, 30, 31, 32, 33,
                              34, 35, 36, 37, 38, 39),
            "starred_nef": (1,), "extra": (), "reduced": False,
        },
    },
    "V14": {
        "curves": (
            (1, 0, -1, -2), (0, -1, 1, -1), (1, 2, -1, 0), (2, 2, -3, -2),
            (0, 0, 1, 0), (0, 0, -1, 1), (1, 1, 0, -2), (2, 3, -3, -1),
        ),
        "beff_extra": (),
        "nef_rays": (
            (2, -3, 2, -1), (7, -3, -8, -11), (7, 12, -8, 4),
            (8, 3, 8, -19), (13, 3, -2, -29), (13, 18, -2, -14),
            (17, 12, -28, -16), (17, 27, -28, -1), (22, 27, -38, -11),
            (23, 18, -22, -34), (23, 33, -22, -19), (28, 33, -32, -29),
        ),
        "bnef": V14_BNEF,
        "intmat": (
            (-2, 0, 6, 0, 4, 1, 1, 4),
            (0, -2, 4, 4, 0, 1, 1, 6),
            (6, 4, -2, 4, 0, 1, 1, 0),
            (0, 4, 4, -2, 6, 1, 1, 0),
            (4, 0, 0, 6, -2, 1, 1, 4),
            (1, 1, 1, 1, 1, -2, 3, 1),
            (1, 1, 1, 1, 1, 3, -2, 1),
            (4, 6, 0, 0, 4, 1, 1, -2),
        ),
        "polarization": {
            "h": (1, 1, -1, -1), "square": 2,
            "curve_degrees": (2, 2, 2, 2, 2, 1, 1, 2),
        },
        "fibrations": (),
        "cox": {"necessary_nef": (), "starred_nef": (),
                "extra": (), "generator_degrees": V14_GENERATOR_DEGREES,
                "reduced": True},
    },
}

FAMILY_NAMES = tuple(f"V{i}" for i in range(1, 15))

EXPECTED_CURVE_COUNTS = (12, 6, 5, 5, 6, 8, 8, 4, 4, 4, 6, 6, 6, 8)
EXPECTED_BNEF_COUNTS = (51, 35, 10, 5, 5, 19, 15, 5, 7, 5, 27, 33, 39, 111)
EXPECTED_FIBRATION_COUNTS = (6, 4, 1, 1, 3, 4, 6, 1, 2, 4, 8, 2, 0, 0)


def family(name):
    return TABLES[name.strip().upper()]


def beff_set(name):
    rec = family(name)
    return set(rec["curves"]) | set(rec["beff_extra"])


def cox_degree_sets(name):
    """Return ``(necessary, starred)`` degree sets from the bundled report.

    For the family with the reduced test battery the record stores the full
    generator-degree list instead, all of it treated as necessary.
    """
    rec = family(name)
    cox = rec["cox"]
    if "generator_degrees" in cox:
        return set(cox["generator_degrees"]), set()
    bnef = rec["bnef"]
    necessary = set(rec["curves"]) | set(rec["beff_extra"])
    necessary.update(bnef[i - 1] for i in cox["necessary_nef"])
    necessary.update(cox["extra"])
    starred = {bnef[i - 1] for i in cox["starred_nef"]}
    return necessary, starred
