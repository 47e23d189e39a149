"""Rigid sets, cluster tilting objects, and their dual enumeration.

Two independent enumerators are kept in lockstep: a pruned bitset clique
search over the Ext-compatibility graph, and a breadth-first walk of the
exchange graph by single-summand mutation.  Along the mutation walk the
Gabriel quiver of the endomorphism algebra is tracked by skew-symmetric
matrix mutation, anchored at the projective seed; whenever two mutation
paths meet, the two quivers must agree summand for summand.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .arquiver import ClusterQuiver, QuotientQuiver
from .homcalc import compat_masks


@dataclass(frozen=True)
class CTObject:
    """A cluster tilting object, identified by its sorted summand ids."""

    category: QuotientQuiver
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(self.members)))

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class AlgQuiver:
    """Gabriel quiver of an endomorphism algebra.

    ``labels`` are the summand ids and ``matrix`` the skew-symmetric
    exchange matrix in label order: matrix[i][j] > 0 means that many arrows
    labels[i] -> labels[j].
    """

    labels: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.labels)

    def arrow_list(self) -> list[tuple[int, int]]:
        out = []
        for i, row in enumerate(self.matrix):
            for j, bij in enumerate(row):
                out.extend([(self.labels[i], self.labels[j])] * max(0, bij))
        return sorted(out)

    def abstract_matrix(self) -> tuple[tuple[int, ...], ...]:
        return self.matrix

    def relabel(self, old: int, new: int) -> "AlgQuiver":
        """Rename one label, restoring sorted label order."""
        labels = [new if x == old else x for x in self.labels]
        order = sorted(range(len(labels)), key=lambda i: labels[i])
        mat = tuple(
            tuple(self.matrix[a][b] for b in order) for a in order
        )
        return AlgQuiver(tuple(labels[i] for i in order), mat)

    def to_dot(self) -> str:
        lines = ["digraph {"]
        for v in self.labels:
            lines.append(f'  "{v}";')
        for a, b in self.arrow_list():
            lines.append(f'  "{a}" -> "{b}";')
        lines.append("}")
        return "\n".join(lines)


class ExchangeGraph:
    """Exchange graph: nodes are member tuples, values the tracked quiver
    (None when no quiver is tracked), edges labelled by the exchanged pair."""

    def __init__(self, category: QuotientQuiver, m: int):
        self.category = category
        self.m = m
        self.nodes: dict[tuple[int, ...], AlgQuiver | None] = {}
        self.edges: list[tuple[tuple[int, ...], tuple[int, ...], tuple[int, int]]] = []
        self.seed: tuple[int, ...] | None = None

    def __len__(self) -> int:
        return len(self.nodes)


def is_rigid(c: QuotientQuiver, members, m: int = 2) -> bool:
    """True when every Ext^d vanishes for 0 < d < m between all ordered
    pairs from ``members``, self-extensions included."""
    masks, self_rigid = compat_masks(c, m)
    mem = sorted(set(members))
    if any(not self_rigid[v] for v in mem):
        return False
    for a in range(len(mem)):
        for b in range(a + 1, len(mem)):
            if not (masks[mem[a]] >> mem[b]) & 1:
                return False
    return True


def is_cluster_tilting(c: QuotientQuiver, members, m: int = 2) -> bool:
    """Rigid and maximal: no vertex outside has vanishing Ext against every
    member in both directions.  In a cluster quotient a positive answer is
    additionally checked to have exactly rank summands."""
    mem = tuple(sorted(set(members)))
    if not is_rigid(c, mem, m):
        return False
    masks, _ = compat_masks(c, m)
    cand = (1 << len(c)) - 1
    for v in mem:
        cand &= masks[v]
    member_bits = 0
    for v in mem:
        member_bits |= 1 << v
    if cand & ~member_bits:
        return False
    if isinstance(c, ClusterQuiver) and len(mem) != c.diagram.rank:
        raise AssertionError(
            f"maximal rigid set of size {len(mem)} != rank in {c.label}: {mem}"
        )
    return True


def enumerate_brute(c: QuotientQuiver, m: int = 2) -> list[tuple[int, ...]]:
    """All size-rank cliques of the compatibility graph, by pruned bitset
    search over vertices ordered by compatibility degree."""
    masks, self_rigid = compat_masks(c, m)
    n = c.diagram.rank
    verts = [v for v in c.vertices if self_rigid[v]]
    verts.sort(key=lambda v: masks[v].bit_count())
    pos_of = {v: k for k, v in enumerate(verts)}
    omasks = []
    for v in verts:
        bits = 0
        mv = masks[v]
        while mv:
            w = (mv & -mv).bit_length() - 1
            mv &= mv - 1
            if self_rigid[w]:
                bits |= 1 << pos_of[w]
        omasks.append(bits)

    results: list[tuple[int, ...]] = []
    stack: list[int] = []

    def extend(cand: int, depth: int) -> None:
        if depth == n:
            results.append(tuple(sorted(verts[k] for k in stack)))
            return
        while cand:
            k = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            rest = cand & omasks[k]
            if depth + 1 + rest.bit_count() < n:
                continue
            stack.append(k)
            extend(rest, depth + 1)
            stack.pop()

    extend((1 << len(verts)) - 1, 0)
    results.sort()
    return results


def seed_members(c: QuotientQuiver) -> tuple[int, ...]:
    """Image of the projective slice in the quotient."""
    w = c.window
    return tuple(sorted(c.project(w.proj[j]) for j in c.diagram.vertices))


def initial_seed(c: QuotientQuiver, m: int = 2) -> tuple[tuple[int, ...], AlgQuiver]:
    """The projective-slice object together with its quiver, which is the
    pinned orientation itself."""
    w = c.window
    to_member = {j: c.project(w.proj[j]) for j in c.diagram.vertices}
    members = tuple(sorted(to_member.values()))
    if len(set(members)) != c.diagram.rank:
        raise AssertionError(f"projective slice of {c.label} collapsed in the quotient")
    index = {v: i for i, v in enumerate(members)}
    n = c.diagram.rank
    mat = [[0] * n for _ in range(n)]
    for s, t in c.diagram.arrows:
        a, b = index[to_member[s]], index[to_member[t]]
        mat[a][b] += 1
        mat[b][a] -= 1
    quiver = AlgQuiver(members, tuple(tuple(row) for row in mat))
    if not is_cluster_tilting(c, members, m):
        raise AssertionError(f"projective seed of {c.label} is not cluster tilting")
    return members, quiver


def complements(c: QuotientQuiver, base, m: int = 2) -> list[int]:
    """Vertices completing the almost-complete set ``base`` to a rigid set
    of size len(base) + 1."""
    masks, self_rigid = compat_masks(c, m)
    cand = (1 << len(c)) - 1
    for v in base:
        cand &= masks[v]
    out = []
    while cand:
        v = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        if self_rigid[v]:
            out.append(v)
    return out


def mutate(c: QuotientQuiver, members, k: int, m: int = 2) -> tuple[int, ...]:
    """Exchange summand k for the unique other completion of members - {k}."""
    mem = tuple(sorted(members))
    if k not in mem:
        raise ValueError(f"{k} is not a summand of {mem}")
    base = tuple(v for v in mem if v != k)
    comps = [v for v in complements(c, base, m) if v != k]
    if len(comps) != 1:
        raise AssertionError(
            f"summand {k} of {mem} in {c.label} has complements {comps}; "
            "expected exactly one exchange partner"
        )
    return tuple(sorted(base + (comps[0],)))


def fz_mutate(q: AlgQuiver, k: int) -> AlgQuiver:
    """Skew-symmetric matrix mutation at the vertex labelled k."""
    if k not in q.labels:
        raise ValueError(f"vertex {k} not in quiver labels {q.labels}")
    ki = q.labels.index(k)
    return AlgQuiver(q.labels, _fz(q.matrix, ki))


def _fz(mat: tuple[tuple[int, ...], ...], ki: int) -> tuple[tuple[int, ...], ...]:
    n = len(mat)
    out = []
    for i in range(n):
        row = []
        bik = mat[i][ki]
        for j in range(n):
            if i == ki or j == ki:
                row.append(-mat[i][j])
            else:
                bkj = mat[ki][j]
                row.append(mat[i][j] + (abs(bik) * bkj + bik * abs(bkj)) // 2)
        out.append(tuple(row))
    return tuple(out)


def exchange_graph(
    c: QuotientQuiver, m: int = 2, expected: list[tuple[int, ...]] | None = None
) -> ExchangeGraph:
    """Breadth-first mutation walk from the projective seed.

    For m = 2 the quiver is mutated in lockstep and checked for
    path-consistency at every revisit.  The final node set must coincide
    with the clique enumeration (computed here when not supplied) -- this
    is the primary correctness tripwire of the whole artifact.
    """
    track_quivers = m == 2
    graph = ExchangeGraph(c, m)
    seed, seed_quiver = initial_seed(c, m)
    graph.seed = seed
    graph.nodes[seed] = seed_quiver if track_quivers else None
    queue = deque([seed])
    masks, self_rigid = compat_masks(c, m)
    all_bits = (1 << len(c)) - 1

    while queue:
        mem = queue.popleft()
        quiver = graph.nodes[mem]
        for k in mem:
            cand = all_bits
            for v in mem:
                if v != k:
                    cand &= masks[v]
            partners = []
            cc = cand
            while cc:
                v = (cc & -cc).bit_length() - 1
                cc &= cc - 1
                if v != k and self_rigid[v]:
                    partners.append(v)
            if track_quivers and len(partners) != 1:
                raise AssertionError(
                    f"summand {k} of {mem} in {c.label} has exchange partners "
                    f"{partners}; expected exactly one"
                )
            for kstar in partners:
                nxt = tuple(sorted([v for v in mem if v != k] + [kstar]))
                nq = None
                if track_quivers:
                    nq = fz_mutate(quiver, k).relabel(k, kstar)
                if nxt in graph.nodes:
                    if track_quivers and graph.nodes[nxt] != nq:
                        raise AssertionError(
                            f"mutation paths disagree on the quiver of {nxt} in {c.label}"
                        )
                else:
                    graph.nodes[nxt] = nq
                    queue.append(nxt)
                if mem < nxt:
                    graph.edges.append((mem, nxt, (k, kstar)))

    if expected is None:
        expected = enumerate_brute(c, m)
    if sorted(graph.nodes) != list(expected):
        raise AssertionError(
            f"enumerator mismatch in {c.label}: mutation walk found "
            f"{len(graph.nodes)} objects, clique search {len(expected)}"
        )
    return graph


def quiver_of(graph: ExchangeGraph, members) -> AlgQuiver:
    mem = tuple(sorted(members))
    if mem not in graph.nodes:
        raise KeyError(f"{mem} is not a node of this exchange graph")
    q = graph.nodes[mem]
    if q is None:
        raise ValueError("exchange graph was built without quiver tracking")
    return q


def iter_maximal_cliques(masks: list[int], universe: int):
    """Bron-Kerbosch with pivoting over an adjacency bitmask list."""

    def bk(r: int, p: int, x: int):
        if p == 0 and x == 0:
            yield r
            return
        pivot_pool = p | x
        pivot = (pivot_pool & -pivot_pool).bit_length() - 1
        best = pivot
        best_cnt = (p & masks[pivot]).bit_count()
        pool = pivot_pool
        while pool:
            v = (pool & -pool).bit_length() - 1
            pool &= pool - 1
            cnt = (p & masks[v]).bit_count()
            if cnt > best_cnt:
                best, best_cnt = v, cnt
        cand = p & ~masks[best]
        while cand:
            v = (cand & -cand).bit_length() - 1
            bit = 1 << v
            cand &= cand - 1
            yield from bk(r | bit, p & masks[v], x & masks[v])
            p &= ~bit
            x |= bit

    yield from bk(0, universe, 0)


def bits_to_members(bits: int) -> tuple[int, ...]:
    out = []
    while bits:
        out.append((bits & -bits).bit_length() - 1)
        bits &= bits - 1
    return tuple(out)
