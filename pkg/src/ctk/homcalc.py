"""Hom and Ext dimension calculus on translation quivers.

Hom dimensions in the derived window are computed as hammocks: the mesh
recursion d(x,x) = 1, d(x,y) = max(0, sum over arrows z->y of d(x,z) minus
d(x, tau y)), evaluated left to right in the path grading.  Ext groups in a
finite quotient are orbit sums of shifted window Homs; the quotient is
locally finite so each sum has finite support inside the window.
"""

from __future__ import annotations

import numpy as np

from .arquiver import DerivedWindow, QuotientQuiver, ZVertex
from .diagram import DynkinDiagram


def hammock(w: DerivedWindow, x: ZVertex) -> np.ndarray:
    """Hom(x, -) dimensions over the whole window, indexed [row-1, level-lo].

    Rejects sources whose support could be cut off by the right window edge.
    Results are memoized on the window.
    """
    if x in w._hammocks:
        return w._hammocks[x]
    if not w.in_window(x):
        raise ValueError(f"source {x} outside window [{w.lo}, {w.hi}]")
    n = w.diagram.rank
    levels = w.hi - w.lo + 1
    dims = np.zeros((n, levels), dtype=np.int64)
    dims[x[0] - 1, x[1] - w.lo] = 1
    gx = w.grade(x)
    for v in w.vertices_by_grade():
        if w.grade(v) <= gx:
            continue
        i, p = v
        total = 0
        for (j, q) in w.in_arrows(v):
            total += dims[j - 1, q - w.lo]
        tq = p - 1 - w.lo
        if tq >= 0:
            total -= dims[i - 1, tq]
        dims[i - 1, p - w.lo] = max(0, total)
    if dims[:, -1].any():
        raise ValueError(
            f"Hom support of {x} reaches the window edge; widen the window"
        )
    dims.setflags(write=False)
    w._hammocks[x] = dims
    return dims


def hom_window(w: DerivedWindow, x: ZVertex, y: ZVertex) -> int:
    if not w.in_window(y):
        return 0
    return int(hammock(w, x)[y[0] - 1, y[1] - w.lo])


def hom_derived(w: DerivedWindow, x: ZVertex, y: ZVertex, k: int = 0) -> int:
    """dim Hom(x, y[k]) in the derived window."""
    return hom_window(w, x, w.shift.power(k)(y))


def dim_vector(w: DerivedWindow, x: ZVertex) -> np.ndarray:
    return w.dim_vector(x)


def euler_form(d: DynkinDiagram, u, v) -> int:
    """Euler form of the pinned orientation:
    <u, v> = sum u_i v_i - sum over arrows s->t of u_s v_t."""
    total = sum(int(a) * int(b) for a, b in zip(u, v))
    for s, t in d.arrows:
        total -= int(u[s - 1]) * int(v[t - 1])
    return total


def ext_quotient(q: QuotientQuiver, x: int, y: int, i: int) -> int:
    """dim Ext^i in the quotient: the orbit sum of window Homs
    Hom(lift x, shift^i F^p lift y) over all integers p.

    The sum is complete: translates outside the window lie outside the
    support of the hammock, which is guarded against truncation.
    """
    w = q.window
    ham = hammock(w, q.lift(x))
    base = w.shift.power(i)(q.lift(y))
    total = 0
    for step in (q.functor, q.functor.inverse()):
        v = base
        first = step is q.functor
        while w.in_window(v):
            if first or v != base:
                total += int(ham[v[0] - 1, v[1] - w.lo])
            v = step(v)
            first = False
    return total


def ext_quotient_ranged(q: QuotientQuiver, x: int, y: int, i: int, pmax: int) -> int:
    """Same orbit sum restricted to |p| <= pmax; used to check saturation."""
    w = q.window
    ham = hammock(w, q.lift(x))
    base = w.shift.power(i)(q.lift(y))
    total = 0
    for p in range(-pmax, pmax + 1):
        v = q.functor.power(p)(base)
        if w.in_window(v):
            total += int(ham[v[0] - 1, v[1] - w.lo])
    return total


def ext_cluster(c, x: int, y: int, i: int) -> int:
    """Ext^i between indecomposables of a cluster quotient, 0 < i < m."""
    if not 0 < i < c.m:
        raise ValueError(f"degree {i} out of range 0 < i < {c.m}")
    return ext_quotient(c, x, y, i)


def ext_orbit(o, x: int, y: int, i: int) -> int:
    """Ext^i between indecomposables of a general orbit quotient."""
    if i < 1:
        raise ValueError(f"degree {i} must be positive")
    return ext_quotient(o, x, y, i)


def compat_masks(q: QuotientQuiver, m: int = 2) -> tuple[list[int], list[bool]]:
    """Pairwise compatibility bitmasks and per-vertex self-rigidity.

    Bit j of masks[i] is set when every Ext^d vanishes in both directions
    between i and j for 0 < d < m.  Cached on the quotient.
    """
    cache = getattr(q, "_compat_cache", None)
    if cache is None:
        cache = q._compat_cache = {}
    if m in cache:
        return cache[m]
    nverts = len(q)
    degs = range(1, m)
    ext = [
        [[ext_quotient(q, x, y, d) for y in range(nverts)] for x in range(nverts)]
        for d in degs
    ]
    self_rigid = [all(ext[di][v][v] == 0 for di in range(len(ext))) for v in range(nverts)]
    masks = [0] * nverts
    for x in range(nverts):
        for y in range(x + 1, nverts):
            if all(ext[di][x][y] == 0 and ext[di][y][x] == 0 for di in range(len(ext))):
                masks[x] |= 1 << y
                masks[y] |= 1 << x
    cache[m] = (masks, self_rigid)
    return masks, self_rigid
