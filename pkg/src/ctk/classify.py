"""Periodicity classification of cluster tilting objects.

Per object: the least s with tau^s T = T, symmetry detectors on the quiver
of the endomorphism algebra (mirror symmetry about a cut vertex, central
3-cycle symmetry, fork-vertex analysis and necklace symmetry for type D,
orbit distribution vectors for type E), and a canonical quiver form for
isomorphism tests.  verify_theorems runs every check over every object of
a category and reports violations instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .arquiver import ClusterQuiver, cluster_category
from .tilting import AlgQuiver, ExchangeGraph, exchange_graph

# ---------------------------------------------------------------------------
# quiver combinatorics helpers


def adjacency(q: AlgQuiver) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in q.labels}
    for a, b in q.arrow_list():
        adj[a].add(b)
        adj[b].add(a)
    return adj


def arrow_set(q: AlgQuiver) -> set[tuple[int, int]]:
    return set(q.arrow_list())


def components(q: AlgQuiver, keep: set[int]) -> list[set[int]]:
    adj = adjacency(q)
    left = set(keep)
    out = []
    while left:
        seed = left.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w in left:
                    left.discard(w)
                    comp.add(w)
                    frontier.append(w)
        out.append(comp)
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def induced(q: AlgQuiver, keep: set[int]) -> AlgQuiver:
    labels = tuple(sorted(keep))
    pos = {v: i for i, v in enumerate(labels)}
    n = len(labels)
    mat = [[0] * n for _ in range(n)]
    for i, a in enumerate(q.labels):
        for j, b in enumerate(q.labels):
            if a in pos and b in pos:
                mat[pos[a]][pos[b]] = q.matrix[i][j]
    return AlgQuiver(labels, tuple(tuple(r) for r in mat))


def oriented_triangles(q: AlgQuiver) -> list[tuple[int, int, int]]:
    arrows = arrow_set(q)
    out = []
    for a, b in arrows:
        for c in q.labels:
            if c > a and (b, c) in arrows and (c, a) in arrows:
                if a == min(a, b, c):
                    out.append((a, b, c))
    return sorted(set(out))


def undirected_cycles(q: AlgQuiver) -> list[tuple[int, ...]]:
    """All simple cycles of the underlying graph, as canonical vertex tuples."""
    adj = adjacency(q)
    cycles: set[tuple[int, ...]] = set()

    def walk(path: list[int], seen: set[int]) -> None:
        v = path[-1]
        for w in adj[v]:
            if w == path[0] and len(path) >= 3:
                k = path.index(min(path))
                rot = path[k:] + path[:k]
                if len(rot) > 1 and rot[1] > rot[-1]:
                    rot = [rot[0]] + rot[:0:-1]
                cycles.add(tuple(rot))
            elif w not in seen and w > path[0]:
                path.append(w)
                seen.add(w)
                walk(path, seen)
                path.pop()
                seen.discard(w)

    for v in q.labels:
        walk([v], {v})
    return sorted(cycles)


# ---------------------------------------------------------------------------
# canonical forms and isomorphism


@dataclass(frozen=True, order=True)
class CanonicalQuiver:
    """Label-free form: two quivers are isomorphic iff their forms match."""

    rank: int
    code: tuple[int, ...]


def _canonical_code(mat: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Lexicographically minimal placement encoding over all vertex orders,
    found by backtracking; ties are all explored."""
    n = len(mat)
    best: list[tuple[int, ...] | None] = [None]

    def signature(order: list[int], v: int) -> tuple[int, ...]:
        sig = [mat[v][v]]
        for u in order:
            sig.append(mat[v][u])
            sig.append(mat[u][v])
        return tuple(sig)

    def place(order: list[int], used: set[int], code: list[tuple[int, ...]]) -> None:
        if len(order) == n:
            flat = tuple(x for sig in code for x in sig)
            if best[0] is None or flat < best[0]:
                best[0] = flat
            return
        cands = []
        for v in range(n):
            if v in used:
                continue
            cands.append((signature(order, v), v))
        lo = min(sig for sig, _ in cands)
        prefix = tuple(x for sig in code for x in sig) + lo
        if best[0] is not None and prefix > best[0][: len(prefix)]:
            return
        for sig, v in cands:
            if sig != lo:
                continue
            order.append(v)
            used.add(v)
            code.append(sig)
            place(order, used, code)
            order.pop()
            used.discard(v)
            code.pop()

    place([], set(), [])
    assert best[0] is not None
    return best[0]


_CANON_CACHE: dict[tuple, tuple[int, ...]] = {}


def quiver_canonical(q: AlgQuiver) -> CanonicalQuiver:
    mat = q.abstract_matrix()
    if mat not in _CANON_CACHE:
        _CANON_CACHE[mat] = _canonical_code(mat)
    return CanonicalQuiver(q.rank, _CANON_CACHE[mat])


def quiver_iso(q1: AlgQuiver, q2: AlgQuiver) -> bool:
    if q1.rank != q2.rank:
        return False
    return quiver_canonical(q1) == quiver_canonical(q2)


def marked_canonical(q: AlgQuiver, mark: int) -> CanonicalQuiver:
    """Canonical form of a quiver with one distinguished vertex, encoded by
    a sentinel on the diagonal."""
    i = q.labels.index(mark)
    mat = [list(row) for row in q.matrix]
    mat[i][i] = 7
    return CanonicalQuiver(q.rank, _canonical_code(tuple(tuple(r) for r in mat)))


def marked_iso(q1: AlgQuiver, m1: int, q2: AlgQuiver, m2: int) -> bool:
    if q1.rank != q2.rank:
        return False
    return marked_canonical(q1, m1) == marked_canonical(q2, m2)


def quiver_iso_brute(q1: AlgQuiver, q2: AlgQuiver) -> bool:
    """Independent oracle: try every label bijection."""
    if q1.rank != q2.rank:
        return False
    m1, m2 = q1.abstract_matrix(), q2.abstract_matrix()
    n = q1.rank
    for perm in permutations(range(n)):
        if all(
            m1[i][j] == m2[perm[i]][perm[j]] for i in range(n) for j in range(n)
        ):
            return True
    return False


# ---------------------------------------------------------------------------
# periodicity


def minimal_period(c, members) -> int:
    """Least s > 0 with tau^s carrying the summand set to itself."""
    target = frozenset(members)
    cur = list(members)
    bound = 1
    for length in set(c.orbit_lengths):
        bound = bound * length // _gcd(bound, length)
    for s in range(1, bound + 1):
        cur = [c.tau[v] for v in cur]
        if frozenset(cur) == target:
            return s
    raise AssertionError(f"no tau-period below {bound} for {sorted(members)}")


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def phi_object(c: ClusterQuiver, members) -> tuple[int, ...]:
    """Flip every fork-orbit summand; other summands are untouched."""
    if c.phi is None:
        raise ValueError(f"{c.label} has no flip")
    return tuple(sorted(c.phi[v] for v in members))


# ---------------------------------------------------------------------------
# type A detectors


def detect_2symmetric_A(q: AlgQuiver) -> bool:
    """A cut vertex splitting the quiver into equal halves that are
    isomorphic as directed quivers fixing the cut vertex."""
    if q.rank % 2 == 0:
        return False
    labels = set(q.labels)
    for v in q.labels:
        comps = components(q, labels - {v})
        if len(comps) != 2 or len(comps[0]) != len(comps[1]):
            continue
        q1 = induced(q, comps[0] | {v})
        q2 = induced(q, comps[1] | {v})
        if marked_iso(q1, v, q2, v):
            return True
    return False


def detect_3symmetric_A(q: AlgQuiver) -> bool:
    """A central oriented 3-cycle with pairwise isomorphic branches hanging
    at its vertices (isomorphism preserving the connecting vertex)."""
    if q.rank % 3:
        return False
    labels = set(q.labels)
    for tri in oriented_triangles(q):
        tset = set(tri)
        comps = components(q, labels - tset)
        branch = {v: {v} for v in tri}
        ok = True
        adj = adjacency(q)
        for comp in comps:
            attach = {v for v in tri if adj[v] & comp}
            if len(attach) != 1:
                ok = False
                break
            branch[attach.pop()] |= comp
        if not ok:
            continue
        sizes = {v: len(branch[v]) for v in tri}
        if set(sizes.values()) != {q.rank // 3}:
            continue
        b = [induced(q, branch[v]) for v in tri]
        if marked_iso(b[0], tri[0], b[1], tri[1]) and marked_iso(
            b[0], tri[0], b[2], tri[2]
        ):
            return True
    return False


# ---------------------------------------------------------------------------
# type D detectors


@dataclass
class DClassification:
    subtype: int
    alpha_members: tuple[int, ...]
    l: int | None = None
    t: int | None = None
    p: int | None = None
    attach_sizes: tuple[int, ...] | None = None  # subtype 2: sizes at the two stars
    cycle: tuple[int, ...] | list[int] | None = None
    problems: list[str] = field(default_factory=list)


def classify_D(c: ClusterQuiver, members, quiver: AlgQuiver) -> DClassification:
    """Subtype from the fork-orbit summands, cross-checked against the
    quiver shape; subtype 3 additionally gets its necklace symmetry data."""
    alpha = tuple(sorted(v for v in members if c.alpha_flags[v]))
    if len(alpha) < 2:
        out = DClassification(0, alpha)
        out.problems.append(f"only {len(alpha)} fork-orbit summands")
        return out
    if len(alpha) == 2:
        a1, a2 = alpha
        subtype = 1 if c.phi[a1] == a2 else 2
        out = DClassification(subtype, alpha)
        shape = _shape_check_two_alpha(quiver, alpha, subtype)
        if shape is None:
            out.problems.append(f"quiver shape does not match subtype {subtype}")
        elif subtype == 2:
            out.attach_sizes = shape
        return out
    out = DClassification(3, alpha)
    necklace = _necklace_of(quiver, set(alpha))
    if necklace is None:
        out.problems.append("fork-orbit summands do not form a central cycle")
        return out
    cycle, attached = necklace
    keys = [None if a is None else marked_canonical(*a) for a in attached]
    sizes = [0 if a is None else a[0].rank for a in attached]
    a_count = len(cycle)
    t = a_count
    for cand in range(1, a_count):
        if a_count % cand == 0 and all(
            keys[i] == keys[(i + cand) % a_count] for i in range(a_count)
        ):
            t = cand
            break
    out.l = a_count // t
    out.t = t
    out.p = t + sum(sizes[:t])
    out.attach_sizes = tuple(sizes)
    out.cycle = cycle  # cyclic order of fork-orbit summands
    return out


def _shape_check_two_alpha(q: AlgQuiver, alpha, subtype: int):
    """Local shape at the two fork summands.

    Subtype 1: identical in- and out-neighbourhoods (at most one each); the
    generic form is the shared-edge double triangle, the degenerate form a
    plain fork.  Subtype 2: at most one arrow in and out per fork summand,
    never sharing both neighbourhoods; the two sides left after deleting
    the fork summands give the attachment sizes (0 for a collapsed side).
    Returns the attachment sizes, or None when the shape is wrong.
    """
    arrows = arrow_set(q)
    u1, u2 = alpha
    ins1 = {a for a, b in arrows if b == u1}
    ins2 = {a for a, b in arrows if b == u2}
    outs1 = {b for a, b in arrows if a == u1}
    outs2 = {b for a, b in arrows if a == u2}
    if u2 in ins1 | outs1:
        return None
    if max(len(ins1), len(ins2), len(outs1), len(outs2)) > 1:
        return None
    parallel = ins1 == ins2 and outs1 == outs2
    if subtype == 1:
        if not parallel:
            return None
        if ins1 and outs1:
            (x,), (y,) = ins1, outs1
            if (y, x) not in arrows:
                return None
        return ()
    if parallel:
        return None
    comps = components(q, set(q.labels) - {u1, u2})
    if not 1 <= len(comps) <= 2:
        return None
    for comp in comps:
        if not (comp & (ins1 | outs1) and comp & (ins2 | outs2)):
            return None
    sizes = sorted(len(comp) for comp in comps) + [0] * (2 - len(comps))
    return (sizes[0], sizes[1])


def _necklace_of(q: AlgQuiver, alpha: set[int]):
    """Cyclic order of the central cycle plus the marked branch across each
    cycle arrow (None when nothing is attached there)."""
    arrows = arrow_set(q)
    succ = {}
    for v in alpha:
        nxt = [w for w in alpha if (v, w) in arrows]
        if len(nxt) != 1:
            return None
        succ[v] = nxt[0]
    start = min(alpha)
    cycle = [start]
    while True:
        nxt = succ[cycle[-1]]
        if nxt == start:
            break
        cycle.append(nxt)
        if len(cycle) > len(alpha):
            return None
    if len(cycle) != len(alpha):
        return None

    comps = components(q, set(q.labels) - alpha)
    adj = adjacency(q)
    attached: list = [None] * len(cycle)
    for comp in comps:
        touching = [w for w in comp if adj[w] & alpha]
        if len(touching) != 1:
            return None
        w = touching[0]
        hit = None
        for i, v in enumerate(cycle):
            v_next = cycle[(i + 1) % len(cycle)]
            if (v_next, w) in arrows and (w, v) in arrows:
                hit = i
                break
        if hit is None or attached[hit] is not None:
            return None
        attached[hit] = (induced(q, comp), w)
    return cycle, attached


def detect_l_symmetric_D(c: ClusterQuiver, members, quiver: AlgQuiver):
    """(l, t, p) of a subtype-3 object; raises on malformed shape."""
    res = classify_D(c, members, quiver)
    if res.subtype != 3 or res.problems:
        raise ValueError(f"not a well-formed subtype-3 quiver: {res.problems}")
    return res.l, res.t, res.p


# ---------------------------------------------------------------------------
# type E distributions

_E_ORBIT_ROWS = {
    6: (1, 3, 2, 4),
    7: (1, 3, 4, 5, 6, 7, 2),
    8: (8, 7, 6, 5, 4, 3, 2, 1),
}


def orbit_ids_E(c: ClusterQuiver) -> list[int]:
    """Canonical listing of tau-orbit ids: outermost first for E6, bottom
    row of the long arm first for E8."""
    rows = _E_ORBIT_ROWS[c.diagram.rank]
    ids = []
    for r in rows:
        orb = c.orbit_of[c.project((r, 0))]
        if orb not in ids:
            ids.append(orb)
    return ids


def distribution_vector_E(c: ClusterQuiver, members) -> tuple[str, ...]:
    """Per-orbit summand counts with 2 / 2+2 / 4 refinement by closure
    under the half and quarter turns of the orbit."""
    ids = orbit_ids_E(c)
    out = []
    mem = set(members)
    for orb in ids:
        in_orbit = sorted(mem & set(c.tau_orbits[orb]))
        length = c.orbit_lengths[orb]
        out.append(_refine(c, in_orbit, length))
    return tuple(out)


def _refine(c, subset, length: int) -> str:
    k = len(subset)
    if k != 4:
        return str(k)
    if length % 4 == 0 and _closed_under(c, subset, length // 4):
        return "4"
    if _closed_under(c, subset, length // 2):
        return "2+2"
    return "4?"


def _closed_under(c, subset, steps: int) -> bool:
    s = set(subset)
    return all(_tau_power(c, v, steps) in s for v in subset)


def _tau_power(c, v: int, steps: int) -> int:
    for _ in range(steps):
        v = c.tau[v]
    return v


# ---------------------------------------------------------------------------
# co-middle walks (type A alignment)


def comiddle_graph(c) -> dict[int, set[int]]:
    """Edges between the two summands of every mesh whose middle term has
    exactly two indecomposable summands."""
    mids: dict[int, list[int]] = {v: [] for v in c.vertices}
    for a, b in c.arrows:
        mids[b].append(a)
    graph: dict[int, set[int]] = {v: set() for v in c.vertices}
    for v, ins in mids.items():
        if len(ins) == 2:
            a, b = ins
            graph[a].add(b)
            graph[b].add(a)
    return graph


def vertically_aligned(c, x: int, y: int, graph=None) -> bool:
    """Walk of co-middle pairs from x to y."""
    if graph is None:
        graph = comiddle_graph(c)
    if x == y:
        return False
    seen = {x}
    frontier = [x]
    while frontier:
        v = frontier.pop()
        for w in graph[v]:
            if w == y:
                return True
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return False


# ---------------------------------------------------------------------------
# whole-category verification


@dataclass
class ClassificationRecord:
    members: tuple[int, ...]
    min_period: int
    distribution: tuple
    symmetry: str
    quiver_arrows: list[tuple[int, int]]
    quiver_class_id: int

    def to_json(self) -> dict:
        return {
            "members": list(self.members),
            "min_period": self.min_period,
            "distribution": list(self.distribution),
            "symmetry": self.symmetry,
            "quiver": [list(a) for a in self.quiver_arrows],
            "quiver_class_id": self.quiver_class_id,
        }


def orbit_counts(c, members) -> tuple[int, ...]:
    mem = set(members)
    return tuple(len(mem & set(orb)) for orb in c.tau_orbits)


def object_orbits(c, nodes, use_phi: bool = False) -> dict[tuple[int, ...], int]:
    """Orbit index of every object under tau (and the flip when asked)."""
    orbit_of: dict[tuple[int, ...], int] = {}
    nxt = 0
    for start in nodes:
        if start in orbit_of:
            continue
        frontier = [start]
        orbit_of[start] = nxt
        while frontier:
            mem = frontier.pop()
            images = [tuple(sorted(c.tau[v] for v in mem))]
            if use_phi and c.phi is not None:
                images.append(tuple(sorted(c.phi[v] for v in mem)))
            for img in images:
                if img not in orbit_of:
                    orbit_of[img] = nxt
                    frontier.append(img)
        nxt += 1
    return orbit_of


def _tau_orbit_nr(c, v: int) -> int:
    """Position of v's tau-orbit counted from the outermost one (type A)."""
    n = c.diagram.rank
    row = c.lift(v)[0]
    return min(row, n + 1 - row)


def check_type_a_quiver_rules(q: AlgQuiver) -> list[str]:
    """Structural constraints on quivers arising in type A: cycles are
    oriented triangles and vertices have at most four neighbours with the
    stated triangle attachment pattern."""
    out: list[str] = []
    tris = {frozenset(t) for t in oriented_triangles(q)}
    for cyc in undirected_cycles(q):
        if len(cyc) != 3 or frozenset(cyc) not in tris:
            out.append(f"cycle {cyc} is not an oriented triangle")
    adj = adjacency(q)
    for v in q.labels:
        nbrs = adj[v]
        if len(nbrs) > 4:
            out.append(f"vertex {v} has {len(nbrs)} neighbours")
            continue
        in_tri = [t for t in tris if v in t]
        tri_edges = set()
        for t in in_tri:
            tri_edges |= {frozenset((v, w)) for w in t if w != v}
        loose = [w for w in nbrs if frozenset((v, w)) not in tri_edges]
        if len(nbrs) == 4 and not (len(in_tri) == 2 and not loose):
            out.append(f"vertex {v} has four neighbours but not two triangles")
        if len(nbrs) == 3 and not (len(in_tri) == 1 and len(loose) == 1):
            out.append(f"vertex {v} has three neighbours but not triangle+arrow")
    return out


def check_cut_positions(c, members, q: AlgQuiver) -> list[str]:
    """Deleting a quiver vertex leaves at most two parts; the smaller part's
    size determines the tau-orbit of the corresponding summand, counted from
    the outermost orbit."""
    out = []
    labels = set(q.labels)
    for v in q.labels:
        comps = components(q, labels - {v})
        if len(comps) > 2:
            out.append(f"deleting {v} leaves {len(comps)} parts")
            continue
        sizes = sorted(len(comp) for comp in comps) + [0] * (2 - len(comps))
        expected = sizes[0] + 1
        if _tau_orbit_nr(c, v) != expected:
            out.append(
                f"summand {v} lies in orbit {_tau_orbit_nr(c, v)}, cut rule says {expected}"
            )
    return out


def _tau_power_obj(c, members, k: int) -> tuple[int, ...]:
    out = list(members)
    for _ in range(k):
        out = [c.tau[v] for v in out]
    return tuple(sorted(out))


def verify_theorems(kind: str, rank: int, with_records: bool = True) -> dict:
    """Classify every cluster tilting object of the m = 2 quotient and check
    all applicable periodicity statements; violations are report content."""
    c = cluster_category(kind, rank)
    graph = exchange_graph(c)
    report: dict = {
        "category": c.label,
        "objects": len(graph.nodes),
        "violations": [],
        "records": [],
    }
    viol = report["violations"]

    def flag(members, rule, detail):
        viol.append({"object": list(members), "rule": rule, "detail": detail})

    records: list[tuple] = []
    if kind == "A":
        _verify_type_a(c, graph, flag, records)
    elif kind == "D":
        _verify_type_d(c, graph, flag, records)
    else:
        _verify_type_e(c, graph, flag, records)

    if with_records:
        forms = sorted({f for *_x, f in records})
        form_id = {f: i for i, f in enumerate(forms)}
        for members, s, dist, sym, q, f in records:
            report["records"].append(
                ClassificationRecord(
                    members, s, dist, sym, q.arrow_list(), form_id[f]
                ).to_json()
            )
        report["quiver_classes"] = len(forms)
    return report


def _verify_type_a(c, graph, flag, records) -> None:
    n = c.diagram.rank
    full = n + 3
    allowed = {full}
    if n % 2 == 1:
        allowed.add(full // 2)
    if n % 3 == 0:
        allowed.add(full // 3)
    inner_nr = (n + 1) // 2 if n % 2 == 1 else None

    for members, q in graph.nodes.items():
        s = minimal_period(c, members)
        sym = "generic"
        if s not in allowed:
            flag(members, "allowed-periods", f"period {s} not in {sorted(allowed)}")
        two = detect_2symmetric_A(q)
        three = detect_3symmetric_A(q)
        if two:
            sym = "2-symmetric"
        if three:
            sym = "3-symmetric"
        if n % 2 == 1 and (s == full // 2) != two:
            flag(members, "mirror-iff", f"period {s}, mirror-symmetric {two}")
        if n % 2 == 0 and two:
            flag(members, "mirror-iff", "mirror symmetry detected at even rank")
        if n % 3 == 0 and (s == full // 3) != three:
            flag(members, "triangle-iff", f"period {s}, 3-cycle-symmetric {three}")
        if n % 3 != 0 and three:
            flag(members, "triangle-iff", "3-cycle symmetry detected, rank not 3l")
        if n % 2 == 1 and s == full // 2:
            inner = [v for v in members if _tau_orbit_nr(c, v) == inner_nr]
            if len(inner) != 1:
                flag(members, "inner-summand", f"{len(inner)} innermost summands")
        if n % 3 == 0 and s == full // 3:
            deep = [v for v in members if _tau_orbit_nr(c, v) > n // 3]
            if deep:
                flag(members, "outer-orbits-only", f"summands {deep} too deep")
        for msg in check_type_a_quiver_rules(q):
            flag(members, "quiver-rules", msg)
        for msg in check_cut_positions(c, members, q):
            flag(members, "cut-positions", msg)
        records.append((members, s, orbit_counts(c, members), sym, q, quiver_canonical(q)))

    # alignment walks characterize half-turn exchange inside full orbits
    if n % 2 == 1 and n > 1:
        walks = comiddle_graph(c)
        half = full // 2
        for orb in c.tau_orbits:
            if len(orb) != full:
                continue
            for i, x in enumerate(orb):
                for y in orb[i + 1 :]:
                    exchanged = _tau_power_obj(c, (x,), half)[0] == y
                    if exchanged != vertically_aligned(c, x, y, walks):
                        flag((x, y), "alignment-walk", "walk and half-turn disagree")

    # distinct endomorphism quivers correspond exactly to tau-orbits
    orbit_of = object_orbits(c, graph.nodes)
    _check_orbit_quiver_bijection(graph, orbit_of, flag)


def _verify_type_d(c, graph, flag, records) -> None:
    n = c.diagram.rank
    for members, q in graph.nodes.items():
        s = minimal_period(c, members)
        res = classify_D(c, members, q)
        sym = f"subtype-{res.subtype}"
        for msg in res.problems:
            flag(members, "fork-shape", msg)
        if res.problems:
            records.append((members, s, orbit_counts(c, members), sym, q, quiver_canonical(q)))
            continue
        if res.subtype in (2, 3) and s % 2 != 0:
            flag(members, "even-period", f"subtype {res.subtype} has odd period {s}")
        if res.subtype == 1:
            if s != n:
                flag(members, "subtype1-period", f"period {s} != {n}")
        elif res.subtype == 2:
            n1, n2 = res.attach_sizes
            twosym = n1 == n2 and _subtype2_symmetric(c, q, res)
            if twosym:
                sym = "subtype-2 symmetric"
            if n % 2 == 0:
                want = n // 2 if (twosym and n % 4 == 0) else n
                if s != want:
                    flag(members, "subtype2-period", f"period {s}, expected {want}")
                if (s == n // 2) != (twosym and n % 4 == 0):
                    flag(members, "subtype2-iff", f"period {s}, symmetric {twosym}")
            else:
                if s != 2 * n:
                    flag(members, "subtype2-period", f"period {s} != {2 * n}")
            if not _subtype2_offsets(c, res):
                flag(members, "fork-offsets", "no consistent translate offsets")
        else:
            l, t, p = res.l, res.t, res.p
            sym = f"subtype-3 {l}-symmetric (t={t}, p={p})"
            if n % (l * p) != 0 and l * p != n:
                flag(members, "necklace-size", f"l*p = {l * p} does not give {n}")
            want = p if p % 2 == 0 else 2 * p
            if s != want:
                flag(members, "subtype3-period", f"period {s}, expected {want}")
            if not _subtype3_offsets(c, res):
                flag(members, "fork-offsets", "cycle translate offsets fail")
        phi_t = phi_object(c, members)
        if phi_t not in graph.nodes:
            flag(members, "flip-object", "flip image is not cluster tilting")
        elif minimal_period(c, phi_t) != s:
            flag(members, "flip-period", "flip changes the minimal period")
        records.append((members, s, orbit_counts(c, members), sym, q, quiver_canonical(q)))

    orbit_of = object_orbits(c, graph.nodes, use_phi=True)
    _check_orbit_quiver_bijection(graph, orbit_of, flag)


def _subtype2_symmetric(c, q: AlgQuiver, res: DClassification) -> bool:
    """Same marked attachment at both connecting sides."""
    comps = components(q, set(q.labels) - set(res.alpha_members))
    if len(comps) != 2 or len(comps[0]) != len(comps[1]):
        return False
    adj = adjacency(q)
    alpha = set(res.alpha_members)
    marks = []
    for comp in comps:
        touching = [w for w in comp if adj[w] & alpha]
        if len(touching) != 1:
            return False
        marks.append((induced(q, comp), touching[0]))
    return marked_iso(marks[0][0], marks[0][1], marks[1][0], marks[1][1])


def _subtype2_offsets(c, res: DClassification) -> bool:
    a1, a2 = res.alpha_members
    n1, n2 = res.attach_sizes
    for s1, s2 in {(n1, n2), (n2, n1)}:
        first = _tau_power_obj(c, (a2,), s1 + 1)[0]
        second = _tau_power_obj(c, (a1,), s2 + 1)[0]
        if first in (a1, c.phi[a1]) and second in (a2, c.phi[a2]):
            return True
    return False


def _subtype3_offsets(c, res: DClassification) -> bool:
    cyc = list(res.cycle)
    sizes = res.attach_sizes
    for i, v in enumerate(cyc):
        w = cyc[(i + 1) % len(cyc)]
        img = _tau_power_obj(c, (v,), sizes[i] + 1)[0]
        if img not in (w, c.phi[w]):
            return False
    return True


def _verify_type_e(c, graph, flag, records) -> None:
    from . import etables

    rank = c.diagram.rank
    if rank == 6:
        allowed = {7, 14}
        patterns = [
            (dist, [{quiver_canonical(v) for v in variants} for variants in drawn])
            for dist, drawn in etables.E6_PERIOD7_ROWS
        ]
        small = {7}
    elif rank == 7:
        allowed = {10}
        patterns = []
        small = set()
    else:
        allowed = {4, 8, 16}
        patterns = [
            ((per, dist), [{quiver_canonical(q)} for q in qs])
            for per, dist, qs in etables.E8_SMALL_PERIOD_ROWS
        ]
        small = {4, 8}

    for members, q in graph.nodes.items():
        s = minimal_period(c, members)
        dist = distribution_vector_E(c, members)
        sym = "generic"
        if s not in allowed:
            flag(members, "allowed-periods", f"period {s} not in {sorted(allowed)}")
        if s in small:
            key = quiver_canonical(q)
            tag = (s, dist) if rank == 8 else dist
            hits = [
                (pi, qi)
                for pi, (pdist, drawn) in enumerate(patterns)
                if pdist == tag
                for qi, keys in enumerate(drawn)
                if key in keys
            ]
            if len(hits) != 1:
                flag(
                    members,
                    "catalog-match",
                    f"period {s}, distribution {dist}: {len(hits)} catalog rows match "
                    f"quiver {q.arrow_list()}",
                )
            else:
                sym = f"catalog row {hits[0][0]} quiver {hits[0][1]}"
        records.append((members, s, dist, sym, q, quiver_canonical(q)))


def _check_orbit_quiver_bijection(graph, orbit_of, flag) -> None:
    by_orbit: dict[int, set] = {}
    for members, q in graph.nodes.items():
        by_orbit.setdefault(orbit_of[members], set()).add(quiver_canonical(q))
    forms = set()
    for orb, fs in by_orbit.items():
        if len(fs) != 1:
            flag((), "orbit-quiver", f"orbit {orb} carries {len(fs)} quiver classes")
        forms |= fs
    if len(forms) != len(by_orbit):
        flag(
            (),
            "orbit-quiver",
            f"{len(forms)} quiver classes for {len(by_orbit)} object orbits",
        )
