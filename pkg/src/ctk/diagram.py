"""Dynkin diagrams of type A/D/E with a pinned orientation and their symmetries.

Vertex numbering is fixed once and for all so that every coordinate the rest
of the package produces is reproducible:

* type A: the path 1 -- 2 -- ... -- n, oriented 1 -> 2 -> ... -> n;
* type D: the path 1 -- ... -- (n-2) plus fork vertices n-1 and n attached
  to n-2; the chain is oriented towards n-2 and both fork arrows point at
  n-2;
* type E: Bourbaki numbering (branch vertex 2 attached to 4, long chain
  1 -- 3 -- 4 -- 5 -- ... ), every arm oriented towards the degree-3
  vertex 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

VALID_KINDS = ("A", "D", "E")


@dataclass(frozen=True)
class DynkinDiagram:
    """A Dynkin tree with a chosen orientation of its edges.

    ``edges`` are unordered pairs (i, j) with i < j; ``arrows`` holds the
    chosen direction of each edge as (source, target).
    """

    kind: str
    rank: int
    edges: tuple[tuple[int, int], ...]
    arrows: tuple[tuple[int, int], ...]

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    def neighbors(self, i: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)

    def __str__(self) -> str:
        return f"{self.kind}{self.rank}"


@dataclass(frozen=True)
class DiagramAutomorphism:
    """Permutation of diagram vertices preserving the undirected edge set."""

    perm: tuple[int, ...]  # perm[i-1] = image of vertex i

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    def compose(self, other: "DiagramAutomorphism") -> "DiagramAutomorphism":
        return DiagramAutomorphism(tuple(self.perm[j - 1] for j in other.perm))

    def inverse(self) -> "DiagramAutomorphism":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm, start=1):
            inv[j - 1] = i
        return DiagramAutomorphism(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.perm, start=1))


def _edges_for(kind: str, rank: int) -> list[tuple[int, int]]:
    if kind == "A":
        return [(i, i + 1) for i in range(1, rank)]
    if kind == "D":
        chain = [(i, i + 1) for i in range(1, rank - 2)]
        return chain + [(rank - 2, rank - 1), (rank - 2, rank)]
    # type E, Bourbaki: 2 hangs off 4, chain is 1-3-4-5-...-rank
    chain = [(1, 3)] + [(i, i + 1) for i in range(3, rank)]
    return chain + [(2, 4)]


def _arrows_for(kind: str, rank: int) -> list[tuple[int, int]]:
    if kind == "A":
        return [(i, i + 1) for i in range(1, rank)]
    if kind == "D":
        chain = [(i, i + 1) for i in range(1, rank - 2)]
        return chain + [(rank - 1, rank - 2), (rank, rank - 2)]
    # all arms flow into the degree-3 vertex 4
    arrows = [(1, 3), (3, 4), (2, 4)]
    arrows += [(i + 1, i) for i in range(4, rank)]
    return arrows


def build_diagram(kind: str, rank: int) -> DynkinDiagram:
    """Return the standard diagram of the given type with its canonical
    orientation.

    Raises ValueError for pairs that are not Dynkin (A: n>=1, D: n>=4,
    E: n in {6,7,8}).
    """
    if kind not in VALID_KINDS:
        raise ValueError(f"unknown diagram kind {kind!r}; expected one of {VALID_KINDS}")
    ok = (kind == "A" and rank >= 1) or (kind == "D" and rank >= 4) or (
        kind == "E" and rank in (6, 7, 8)
    )
    if not ok:
        raise ValueError(f"{kind}{rank} is not a Dynkin diagram")
    edges = tuple(sorted(_edges_for(kind, rank)))
    arrows = tuple(sorted(_arrows_for(kind, rank)))
    return DynkinDiagram(kind, rank, edges, arrows)


def cartan_matrix(d: DynkinDiagram) -> np.ndarray:
    n = d.rank
    c = 2 * np.eye(n, dtype=np.int64)
    for a, b in d.edges:
        c[a - 1, b - 1] = -1
        c[b - 1, a - 1] = -1
    return c


def coxeter_matrix(d: DynkinDiagram) -> np.ndarray:
    """Matrix of a Coxeter element (product of all simple reflections) acting
    on the root lattice in the basis of simple roots."""
    n = d.rank
    cartan = cartan_matrix(d)
    cox = np.eye(n, dtype=np.int64)
    for i in range(n):
        refl = np.eye(n, dtype=np.int64)
        refl[i, :] -= cartan[i, :]
        cox = refl @ cox
    return cox


def coxeter_number(d: DynkinDiagram) -> int:
    """Order of the Coxeter element, obtained by powering its matrix."""
    cox = coxeter_matrix(d)
    identity = np.eye(d.rank, dtype=np.int64)
    power = cox.copy()
    h = 1
    while not np.array_equal(power, identity):
        power = power @ cox
        h += 1
        if h > 1000:
            raise RuntimeError(f"Coxeter element of {d} did not reach the identity")
    return h


def positive_roots(d: DynkinDiagram) -> list[tuple[int, ...]]:
    """All positive roots, as coordinate tuples over the simple roots.

    Computed by closing the simple roots under the simple reflections and
    keeping the nonnegative vectors.
    """
    n = d.rank
    cartan = cartan_matrix(d)
    refls = []
    for i in range(n):
        refl = np.eye(n, dtype=np.int64)
        refl[i, :] -= cartan[i, :]
        refls.append(refl)
    seen: set[tuple[int, ...]] = set()
    frontier = [tuple(int(v) for v in row) for row in np.eye(n, dtype=np.int64)]
    seen.update(frontier)
    while frontier:
        nxt = []
        for root in frontier:
            vec = np.array(root, dtype=np.int64)
            for refl in refls:
                image = tuple(int(v) for v in vec @ refl.T)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return sorted(r for r in seen if all(c >= 0 for c in r))


def automorphisms(d: DynkinDiagram) -> list[DiagramAutomorphism]:
    """Full automorphism group of the underlying undirected graph.

    Backtracking over degree-compatible assignments; fast for trees of
    rank <= 11.
    """
    n = d.rank
    adj: dict[int, set[int]] = {i: set() for i in d.vertices}
    for a, b in d.edges:
        adj[a].add(b)
        adj[b].add(a)
    degree = {i: len(adj[i]) for i in d.vertices}
    found: list[DiagramAutomorphism] = []

    def extend(mapping: dict[int, int], used: set[int]) -> None:
        if len(mapping) == n:
            found.append(DiagramAutomorphism(tuple(mapping[i] for i in d.vertices)))
            return
        i = len(mapping) + 1
        for j in d.vertices:
            if j in used or degree[j] != degree[i]:
                continue
            if all((k not in mapping) or (mapping[k] in adj[j]) for k in adj[i]):
                mapping[i] = j
                used.add(j)
                extend(mapping, used)
                del mapping[i]
                used.discard(j)

    extend({}, set())
    found.sort(key=lambda g: g.perm)
    return found


def automorphisms_brute(d: DynkinDiagram) -> list[DiagramAutomorphism]:
    """Independent oracle: exhaustive search over all vertex permutations."""
    edges = set(d.edges)
    out = []
    for perm in permutations(d.vertices):
        fixed = {tuple(sorted((perm[a - 1], perm[b - 1]))) for a, b in edges}
        if fixed == edges:
            out.append(DiagramAutomorphism(perm))
    return out
