"""Translation quivers: the infinite strip Z(Delta), its finite slices, and
finite quotients by powers of the translate and the suspension.

A window models the AR-quiver of the bounded derived category of the path
algebra of the pinned orientation: vertices are pairs (row, level), the mesh
arrows are (s,p)->(t,p) and (t,p)->(s,p+1) for every diagram arrow s->t, and
tau shifts level by -1.  The module slice is knitted from the projectives,
the Serre permutation nu is read off proj -> inj, and the suspension is
derived as tau^{-1} followed by nu rather than hardcoded per type.

Quotients identify vertices along the orbits of an affine row-permutation
map F; the cluster quotient uses F = tau^{-1} compose shift^{m-1}, general
orbit quotients use F = tau^a compose shift^b.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .diagram import DynkinDiagram, build_diagram, coxeter_number

ZVertex = tuple[int, int]  # (row, level)


class OrbitCategoryError(ValueError):
    """Raised when a functor does not act freely with finite quotient."""


@dataclass(frozen=True)
class WindowMap:
    """Affine self-map of Z(Delta): (i, p) -> (rows[i-1], p + offsets[i-1]).

    The translate, the Serre permutation, the suspension and all their
    composites have this shape, and any two such maps built from them
    commute.
    """

    rows: tuple[int, ...]
    offsets: tuple[int, ...]

    def __call__(self, v: ZVertex) -> ZVertex:
        i, p = v
        return (self.rows[i - 1], p + self.offsets[i - 1])

    def after(self, other: "WindowMap") -> "WindowMap":
        """Composite self o other."""
        rows = tuple(self.rows[j - 1] for j in other.rows)
        offs = tuple(
            other.offsets[i] + self.offsets[other.rows[i] - 1]
            for i in range(len(self.rows))
        )
        return WindowMap(rows, offs)

    def inverse(self) -> "WindowMap":
        n = len(self.rows)
        rows = [0] * n
        offs = [0] * n
        for i in range(1, n + 1):
            j = self.rows[i - 1]
            rows[j - 1] = i
            offs[j - 1] = -self.offsets[i - 1]
        return WindowMap(tuple(rows), tuple(offs))

    def power(self, k: int) -> "WindowMap":
        n = len(self.rows)
        result = identity_map(n)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = base.after(result)
        return result

    @property
    def is_identity(self) -> bool:
        return all(o == 0 for o in self.offsets) and all(
            r == i + 1 for i, r in enumerate(self.rows)
        )


def identity_map(n: int) -> WindowMap:
    return WindowMap(tuple(range(1, n + 1)), (0,) * n)


def tau_map(n: int) -> WindowMap:
    return WindowMap(tuple(range(1, n + 1)), (-1,) * n)


class DerivedWindow:
    """A finite slice of Z(Delta) wide enough to hold the module slice plus
    full Hom supports on either side."""

    def __init__(self, diagram: DynkinDiagram, width: int | None = None):
        self.diagram = diagram
        n = diagram.rank
        self.h = coxeter_number(diagram)
        min_width = 3 * self.h
        if width is None:
            width = 3 * self.h + 3 * n + 18
        if width < min_width:
            raise ValueError(
                f"window width {width} too small for {diagram}; need >= {min_width}"
            )
        self.lo = -(self.h + n + 6)
        self.hi = self.lo + width

        # mesh arrow patterns: for a diagram arrow s->t, Z(Delta) has
        # (s,p)->(t,p) and (t,p)->(s,p+1)
        self._out_same: dict[int, list[int]] = {i: [] for i in diagram.vertices}
        self._out_next: dict[int, list[int]] = {i: [] for i in diagram.vertices}
        for s, t in diagram.arrows:
            self._out_same[s].append(t)
            self._out_next[t].append(s)

        self.slice_level = self._heights()
        self.tau = tau_map(n)
        self._knit()
        self._serre()
        self._hammocks: dict[ZVertex, np.ndarray] = {}

    # -- structure ---------------------------------------------------------

    def in_window(self, v: ZVertex) -> bool:
        return self.lo <= v[1] <= self.hi

    def out_arrows(self, v: ZVertex) -> list[ZVertex]:
        i, p = v
        out = [(t, p) for t in self._out_same[i]]
        out += [(s, p + 1) for s in self._out_next[i]]
        return [w for w in out if self.in_window(w)]

    def in_arrows(self, v: ZVertex) -> list[ZVertex]:
        i, p = v
        into = [(s, p) for s in self._out_next[i]]
        into += [(t, p - 1) for t in self._out_same[i]]
        return [w for w in into if self.in_window(w)]

    def grade(self, v: ZVertex) -> int:
        """Path grading: every arrow raises it by exactly one; tau lowers it
        by two."""
        i, p = v
        return 2 * p - self.slice_level[i]

    def vertices_by_grade(self):
        n = self.diagram.rank
        verts = [(i, p) for p in range(self.lo, self.hi + 1) for i in range(1, n + 1)]
        verts.sort(key=lambda v: (self.grade(v), v[0]))
        return verts

    def _heights(self) -> dict[int, int]:
        # a_s = a_t + 1 for each arrow s->t; unique on a tree up to shift
        d = self.diagram
        a = {1: 0}
        frontier = [1]
        arrowset = set(d.arrows)
        while frontier:
            i = frontier.pop()
            for j in d.neighbors(i):
                if j in a:
                    continue
                a[j] = a[i] + 1 if (j, i) in arrowset else a[i] - 1
                frontier.append(j)
        base = min(a.values())
        return {i: v - base for i, v in a.items()}

    # -- module slice ------------------------------------------------------

    def _proj_dim(self, j: int) -> np.ndarray:
        """Dimension vector of the projective at j: indicator of vertices
        reachable from j along diagram arrows."""
        d = self.diagram
        seen = {j}
        frontier = [j]
        while frontier:
            i = frontier.pop()
            for t in self._out_same[i]:
                if t not in seen:
                    seen.add(t)
                    frontier.append(t)
        vec = np.zeros(d.rank, dtype=np.int64)
        for k in seen:
            vec[k - 1] = 1
        return vec

    def _inj_dim(self, j: int) -> np.ndarray:
        d = self.diagram
        seen = {j}
        frontier = [j]
        while frontier:
            i = frontier.pop()
            for s in self._out_next[i]:
                if s not in seen:
                    seen.add(s)
                    frontier.append(s)
        vec = np.zeros(d.rank, dtype=np.int64)
        for k in seen:
            vec[k - 1] = 1
        return vec

    def _knit(self) -> None:
        """Knit the module slice left to right from the projective slice.

        A row continues as long as the mesh candidate stays a nonzero
        nonnegative vector; the positions where rows stop must carry the
        injective dimension vectors.
        """
        d = self.diagram
        n = d.rank
        self.proj: dict[int, ZVertex] = {j: (j, self.slice_level[j]) for j in d.vertices}
        dims: dict[ZVertex, np.ndarray] = {}
        for j in d.vertices:
            dims[self.proj[j]] = self._proj_dim(j)
        modules = set(dims)

        for v in self.vertices_by_grade():
            if v in modules:
                continue
            i, p = v
            u = (i, p - 1)
            if u not in modules:
                continue
            cand = -dims[u]
            for w in self.in_arrows(v):
                if w in modules:
                    cand = cand + dims[w]
            if np.all(cand >= 0) and np.any(cand > 0):
                dims[v] = cand
                modules.add(v)

        expected = n * self.h // 2
        if len(modules) != expected:
            raise RuntimeError(
                f"knitting of {d} produced {len(modules)} modules, expected {expected}"
            )
        self.module_dims = dims
        self.module_slice = modules

        # locate the injectives among the knitted vertices
        self.inj: dict[int, ZVertex] = {}
        inj_dims = {j: self._inj_dim(j) for j in d.vertices}
        for v in modules:
            if (v[0], v[1] + 1) in modules:
                continue  # row continues, not an injective
            for j, vec in inj_dims.items():
                if np.array_equal(dims[v], vec):
                    if j in self.inj:
                        raise RuntimeError(f"injective {j} of {d} located twice")
                    self.inj[j] = v
        if len(self.inj) != n:
            raise RuntimeError(f"could not locate all injectives of {d}")

    # -- Serre permutation and suspension -----------------------------------

    def _serre(self) -> None:
        """nu maps the projective at j to the injective at j and commutes
        with tau; the suspension is tau^{-1} o nu."""
        d = self.diagram
        rows = [0] * d.rank
        offs = [0] * d.rank
        for j in d.vertices:
            pj, ij = self.proj[j], self.inj[j]
            rows[j - 1] = ij[0]
            offs[j - 1] = ij[1] - pj[1]
        self.nu = WindowMap(tuple(rows), tuple(offs))
        self.shift = self.tau.inverse().after(self.nu)

    def dim_vector(self, v: ZVertex) -> np.ndarray:
        if v not in self.module_dims:
            raise ValueError(f"{v} is not in the module slice of {self.diagram}")
        return self.module_dims[v]


def build_window(d: DynkinDiagram, width: int | None = None) -> DerivedWindow:
    return DerivedWindow(d, width)


class QuotientQuiver:
    """Finite quotient of Z(Delta) by the free action of an affine map F.

    Vertices are canonical orbit representatives (r0, q): r0 the smallest
    row of its row-cycle under F, q in [0, |D|) with D the total level
    offset around the cycle.  Vertex ids are assigned in sorted order of
    representatives, so output is reproducible.
    """

    def __init__(self, window: DerivedWindow, functor: WindowMap, label: str):
        self.window = window
        self.diagram = window.diagram
        self.functor = functor
        self.label = label
        n = self.diagram.rank

        # row cycles of F and their total offsets
        self._cycle_data: dict[int, tuple[int, int, int]] = {}
        # row -> (anchor row r0, offset to reach r0 going forward, total D)
        seen: set[int] = set()
        for r in range(1, n + 1):
            if r in seen:
                continue
            cycle = [r]
            i = functor.rows[r - 1]
            while i != r:
                cycle.append(i)
                i = functor.rows[i - 1]
            total = sum(functor.offsets[i - 1] for i in cycle)
            if total == 0:
                k = len(cycle)
                raise OrbitCategoryError(
                    f"{label} does not act freely on Z({self.diagram}): iterate "
                    f"{k} of the functor fixes vertex {(min(cycle), 0)}"
                )
            anchor = min(cycle)
            # walk from anchor, recording cumulative offsets
            cum = 0
            i = anchor
            walk = []
            while True:
                walk.append((i, cum))
                cum += functor.offsets[i - 1]
                i = functor.rows[i - 1]
                if i == anchor:
                    break
            for i, c in walk:
                to_anchor = 0 if i == anchor else total - c
                self._cycle_data[i] = (anchor, to_anchor, total)
            seen.update(cycle)

        reps = []
        done_anchor: set[int] = set()
        for r in range(1, n + 1):
            anchor, _, total = self._cycle_data[r]
            if anchor in done_anchor:
                continue
            done_anchor.add(anchor)
            reps.extend((anchor, q) for q in range(abs(total)))
        reps.sort()
        self._lift = reps
        self._index = {v: k for k, v in enumerate(reps)}

        self.tau = self._induce(window.tau)
        self.shift = self._induce(window.shift)
        self.arrows = self._project_arrows()
        self._orbits()

    # -- projection ---------------------------------------------------------

    def project(self, w: ZVertex) -> int:
        """Quotient vertex id of a window vertex."""
        i, p = w
        anchor, to_anchor, total = self._cycle_data[i]
        q = (p + to_anchor) % abs(total)
        return self._index[(anchor, q)]

    def lift(self, v: int) -> ZVertex:
        return self._lift[v]

    def __len__(self) -> int:
        return len(self._lift)

    @property
    def vertices(self) -> range:
        return range(len(self._lift))

    def _induce(self, wmap: WindowMap) -> tuple[int, ...]:
        return tuple(self.project(wmap(self.lift(v))) for v in self.vertices)

    def _project_arrows(self) -> tuple[tuple[int, int], ...]:
        arrows = []
        for v in self.vertices:
            w = self.lift(v)
            for u in self.window.out_arrows(w):
                arrows.append((v, self.project(u)))
        return tuple(sorted(arrows))

    def in_neighbors(self, v: int) -> list[int]:
        return [a for a, b in self.arrows if b == v]

    def _orbits(self) -> None:
        perm = self.tau
        orbit_of = [-1] * len(self)
        orbits = []
        for v in self.vertices:
            if orbit_of[v] >= 0:
                continue
            cyc = [v]
            w = perm[v]
            while w != v:
                cyc.append(w)
                w = perm[w]
            for u in cyc:
                orbit_of[u] = len(orbits)
            orbits.append(cyc)
        self.tau_orbits = orbits
        self.orbit_of = orbit_of
        self.orbit_lengths = [len(c) for c in orbits]

    # -- functor calculus ----------------------------------------------------

    def apply_functor(self, s: int, t: int, v: int) -> int:
        """Image of v under tau^s [t], computed on quotient permutations."""
        for perm, k in ((self.tau, s), (self.shift, t)):
            if k < 0:
                inv = [0] * len(self)
                for a, b in enumerate(perm):
                    inv[b] = a
                perm, k = tuple(inv), -k
            for _ in range(k):
                v = perm[v]
        return v

    def tau_orbit(self, v: int) -> list[int]:
        out = [v]
        w = self.tau[v]
        while w != v:
            out.append(w)
            w = self.tau[w]
        return out

    def vertex_label(self, v: int) -> str:
        orb = self.orbit_of[v]
        cyc = self.tau_orbits[orb]
        start = cyc.index(min(cyc))
        pos = (cyc.index(v) - start) % len(cyc)
        return f"o{orb}p{pos}"


class ClusterQuiver(QuotientQuiver):
    """Quotient of Z(Delta) by tau^{-1} compose shift^{m-1}; m = 2 is the
    classical cluster category."""

    def __init__(self, d: DynkinDiagram, m: int = 2):
        if m < 2:
            raise ValueError(f"cluster quotient needs m >= 2, got {m}")
        window = _window_for(d, extra=(m - 1) * (coxeter_number(d) + d.rank))
        functor = window.tau.inverse().after(window.shift.power(m - 1))
        super().__init__(window, functor, f"C_{m}({d})")
        self.m = m
        self._alpha_phi()

    def _alpha_phi(self) -> None:
        d = self.diagram
        self.alpha_flags = None
        self.phi = None
        if d.kind != "D":
            return
        forks = {d.rank - 1, d.rank}
        self.alpha_flags = tuple(self.lift(v)[0] in forks for v in self.vertices)
        swap = list(range(1, d.rank + 1))
        swap[d.rank - 2], swap[d.rank - 1] = d.rank, d.rank - 1
        flip = WindowMap(tuple(swap), (0,) * d.rank)
        phi = []
        for v in self.vertices:
            phi.append(self.project(flip(self.lift(v))) if self.alpha_flags[v] else v)
        self.phi = tuple(phi)


class OrbitQuiver(QuotientQuiver):
    """Quotient of Z(Delta) by tau^a compose shift^b, checked to be free
    with finite quotient."""

    def __init__(self, d: DynkinDiagram, a: int, b: int):
        window = _window_for(d, extra=abs(a) + abs(b) * (coxeter_number(d) + d.rank))
        functor = window.tau.power(a).after(window.shift.power(b))
        super().__init__(window, functor, f"O(tau^{a}[{b}])({d})")
        self.functor_exponents = (a, b)


def _window_for(d: DynkinDiagram, extra: int = 0) -> DerivedWindow:
    h = coxeter_number(d)
    return DerivedWindow(d, width=3 * h + 3 * d.rank + 18 + max(0, extra))


def build_cluster_category(d: DynkinDiagram, m: int = 2) -> ClusterQuiver:
    return ClusterQuiver(d, m)


def build_orbit_category(d: DynkinDiagram, a: int, b: int) -> OrbitQuiver:
    return OrbitQuiver(d, a, b)


def cluster_category(kind: str, rank: int, m: int = 2) -> ClusterQuiver:
    """Cached constructor; quotients are immutable so sharing is safe."""
    key = (kind, rank, m)
    if key not in _CLUSTER_CACHE:
        _CLUSTER_CACHE[key] = ClusterQuiver(build_diagram(kind, rank), m)
    return _CLUSTER_CACHE[key]


_CLUSTER_CACHE: dict[tuple[str, int, int], ClusterQuiver] = {}


def to_dot(q: QuotientQuiver, tau_edges: bool = False) -> str:
    """DOT rendering of a quotient quiver; tau drawn dashed when requested."""
    lines = ["digraph {"]
    for v in q.vertices:
        lines.append(f'  "{q.vertex_label(v)}";')
    for u, v in q.arrows:
        lines.append(f'  "{q.vertex_label(u)}" -> "{q.vertex_label(v)}";')
    if tau_edges:
        for v in q.vertices:
            lines.append(
                f'  "{q.vertex_label(v)}" -> "{q.vertex_label(q.tau[v])}" [style=dashed];'
            )
    lines.append("}")
    return "\n".join(lines)
