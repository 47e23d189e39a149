"""Reference catalogs of the small-period classes in the exceptional
cluster quotients of rank 6 and 8.

Each row fixes an orbit-distribution vector and the quivers of the
endomorphism algebras realizing it.  Rank-6 rows whose drawn quiver has a
pendant edge come in two coupled orientations (both occur; they are
exchanged by the arm-swap symmetry of the diagram, which preserves
periodicity but is not a power of the translate), so those rows carry two
directed resolutions.  Rank-8 quivers are fully directed.
"""

from __future__ import annotations

from .tilting import AlgQuiver


def quiver_from_arrows(n: int, arrows) -> AlgQuiver:
    mat = [[0] * n for _ in range(n)]
    for s, t in arrows:
        mat[s][t] += 1
        mat[t][s] -= 1
    return AlgQuiver(tuple(range(n)), tuple(tuple(row) for row in mat))


def _q6(arrows) -> AlgQuiver:
    return quiver_from_arrows(6, arrows)


def _q8(arrows) -> AlgQuiver:
    return quiver_from_arrows(8, arrows)


# rank 6, minimal period 7: distribution over tau-orbits ordered
# (outermost 14, second 14, short-arm 7, central 7).  Rows list drawn
# quivers; each drawn quiver lists its directed resolutions.
E6_PERIOD7_ROWS: list[tuple[tuple[str, ...], list[list[AlgQuiver]]]] = [
    (
        ("2", "2", "1", "1"),
        [
            # two arms into the junction / out of it, pendant either way
            [_q6([(0, 1), (1, 2), (5, 4), (4, 2), (2, 3)]),
             _q6([(0, 1), (1, 2), (5, 4), (4, 2), (3, 2)])],
            [_q6([(0, 1), (2, 1), (5, 4), (2, 4), (2, 3)]),
             _q6([(0, 1), (2, 1), (5, 4), (2, 4), (3, 2)])],
            [_q6([(1, 0), (1, 2), (4, 5), (4, 2), (2, 3)]),
             _q6([(1, 0), (1, 2), (4, 5), (4, 2), (3, 2)])],
            [_q6([(1, 0), (2, 1), (4, 5), (2, 4), (2, 3)]),
             _q6([(1, 0), (2, 1), (4, 5), (2, 4), (3, 2)])],
        ],
    ),
    (
        ("2+2", "0", "1", "1"),
        [
            # two oriented triangles sharing a vertex, pendant either way
            [_q6([(0, 1), (1, 2), (2, 0), (3, 1), (1, 4), (4, 3), (1, 5)]),
             _q6([(0, 1), (1, 2), (2, 0), (3, 1), (1, 4), (4, 3), (5, 1)])],
        ],
    ),
    (
        ("2", "2", "2", "0"),
        [
            # two oriented triangles sharing an edge, pendants on the wings,
            # orientations coupled (both in / both out)
            [_q6([(1, 2), (2, 3), (1, 4), (4, 3), (3, 1), (0, 2), (5, 4)]),
             _q6([(1, 2), (2, 3), (1, 4), (4, 3), (3, 1), (2, 0), (4, 5)])],
        ],
    ),
    (
        ("2+2", "0", "2", "0"),
        [
            [_q6([(0, 3), (5, 3), (1, 0), (4, 5), (1, 2), (4, 2), (2, 3), (3, 1), (3, 4)])],
            [_q6([(3, 0), (3, 5), (0, 1), (5, 4), (2, 1), (2, 4), (3, 2), (1, 3), (4, 3)])],
            [_q6([(3, 0), (3, 5), (0, 1), (5, 4), (1, 2), (4, 2), (2, 3)])],
        ],
    ),
]


# rank 8: distribution over tau-orbits ordered from the long-arm end
# (positions 0 and 1) to the short-arm end (position 7); only the first,
# second, and last orbits are ever populated for small periods.
E8_SMALL_PERIOD_ROWS: list[tuple[int, tuple[str, ...], list[AlgQuiver]]] = [
    (
        4,
        ("4", "4", "0", "0", "0", "0", "0", "0"),
        [
            _q8([(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6), (3, 7)]),
            _q8([(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (5, 1), (6, 2), (7, 3)]),
        ],
    ),
    (
        8,
        ("2+2", "4", "0", "0", "0", "0", "0", "0"),
        [
            _q8([(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (5, 1), (2, 6), (7, 3)]),
        ],
    ),
    (
        8,
        ("2", "2", "0", "0", "0", "0", "0", "2+2"),
        [
            _q8([(0, 1), (1, 2), (2, 3), (3, 4), (5, 4), (4, 6), (6, 7), (7, 1)]),
            _q8([(1, 0), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (6, 7), (7, 1)]),
        ],
    ),
    (
        8,
        ("2+2", "2", "0", "0", "0", "0", "0", "2"),
        [
            _q8([(1, 0), (1, 2), (2, 3), (5, 4), (6, 5), (6, 7), (5, 1), (2, 6), (0, 5), (7, 2)]),
            _q8([(0, 1), (1, 2), (3, 2), (4, 5), (6, 5), (7, 6), (5, 1), (2, 6), (1, 4), (6, 3)]),
        ],
    ),
    (
        8,
        ("4", "2", "0", "0", "0", "0", "0", "2"),
        [
            _q8([(1, 0), (1, 2), (3, 2), (4, 5), (6, 5), (6, 7), (5, 1), (2, 6), (1, 4), (6, 3)]),
            _q8([(1, 0), (1, 2), (3, 2), (4, 5), (6, 5), (6, 7), (5, 1), (2, 6), (0, 5), (7, 2)]),
        ],
    ),
    (
        8,
        ("2+2", "0", "0", "0", "0", "0", "0", "2+2"),
        [
            _q8([(0, 1), (1, 2), (3, 2), (4, 5), (6, 5), (7, 6), (4, 0), (5, 1), (2, 6), (3, 7), (1, 4), (6, 3)]),
            # chirality twin of the quiver above: the double fans attach to
            # the central square with the opposite handedness
            _q8([(0, 3), (0, 7), (1, 0), (1, 4), (2, 1), (2, 5), (3, 2), (3, 6), (4, 7), (5, 3), (6, 5), (7, 1)]),
        ],
    ),
]
