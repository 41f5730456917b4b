"""(k-2)-linear connected components of k-uniform hypergraphs.

The component of a source vertex is grown edge by edge as an *archipelago*:
pairwise disjoint islands, each entered through a designated entry set, tied
together by crossing edges along an arborescence rooted at the source's island.
Every edge of the hypergraph eventually lands in one of three classes:
accepted into the archipelago, cut (an entry plus one outside vertex, which can
never be traversed outward), or exterior (disjoint from the component).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .hypercore import Hypergraph, HypergraphError, Vertex
from .pathcalc import ContractError, find_path

ROOT = 1


class EdgeClass(Enum):
    EXTERIOR = "exterior"
    NEW_CROSSING = "new crossing"
    CROSSING = "crossing"
    CUT = "cut"
    OTHER = "other"


@dataclass(frozen=True)
class Island:
    id: int
    vertices: frozenset[int]
    entry: frozenset[int]
    parent: int | None


@dataclass(frozen=True)
class EdgePartition:
    archipelago: frozenset[int]
    cut: frozenset[int]
    exterior: frozenset[int]

    def label(self, e: int) -> str:
        if e in self.archipelago:
            return "archipelago"
        if e in self.cut:
            return "cut"
        if e in self.exterior:
            return "exterior"
        raise KeyError(e)


class Archipelago:
    """Mutable archipelago state over the vertex ids of one hypergraph.

    ``island_of`` and ``in_entry`` are dense per-vertex arrays (0 means "not in
    the archipelago"); ``parent`` maps each live island id to its parent in the
    arborescence (None for the root, island 1).
    """

    def __init__(self, n: int, source: int):
        self.source = source
        self.island_of = [0] * n
        self.in_entry = [False] * n
        self.members: dict[int, set[int]] = {ROOT: {source}}
        self.entries: dict[int, frozenset[int]] = {ROOT: frozenset((source,))}
        self.parent: dict[int, int | None] = {ROOT: None}
        self.accepted: list[int] = []
        self.accepted_set: set[int] = set()
        self.crossing_arcs: set[tuple[int, int]] = set()
        self.next_id = ROOT + 1
        self.island_of[source] = ROOT
        self.in_entry[source] = True

    def copy(self) -> "Archipelago":
        other = Archipelago.__new__(Archipelago)
        other.source = self.source
        other.island_of = list(self.island_of)
        other.in_entry = list(self.in_entry)
        other.members = {i: set(vs) for i, vs in self.members.items()}
        other.entries = dict(self.entries)
        other.parent = dict(self.parent)
        other.accepted = list(self.accepted)
        other.accepted_set = set(self.accepted_set)
        other.crossing_arcs = set(self.crossing_arcs)
        other.next_id = self.next_id
        return other

    def __eq__(self, other):
        if not isinstance(other, Archipelago):
            return NotImplemented
        return (self.source == other.source and self.island_of == other.island_of
                and self.in_entry == other.in_entry and self.members == other.members
                and self.entries == other.entries and self.parent == other.parent
                and self.accepted_set == other.accepted_set
                and self.crossing_arcs == other.crossing_arcs)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for vs in self.members.values() for v in vs)

    def islands(self) -> list[Island]:
        return [Island(i, frozenset(self.members[i]), self.entries[i], self.parent[i])
                for i in sorted(self.members)]

    def island_partition(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(vs) for vs in self.members.values())

    def entry_sets(self) -> frozenset[frozenset[int]]:
        """Entries of size k-1, i.e. every entry except the source's."""
        return frozenset(e for i, e in self.entries.items() if i != ROOT)

    def root_path(self, i: int) -> list[int]:
        path = [i]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]])
            if len(path) > len(self.parent):
                raise AssertionError("parent map has a cycle")
        return path

    def check_arborescence(self) -> None:
        """Raise AssertionError unless ``parent`` is a tree rooted at island 1."""
        roots = [i for i, p in self.parent.items() if p is None]
        if roots != [ROOT]:
            raise AssertionError(f"expected single root {ROOT}, got {roots}")
        for i in self.parent:
            if self.root_path(i)[-1] != ROOT:
                raise AssertionError(f"island {i} is not below the root")
            p = self.parent[i]
            if p is not None and p not in self.parent:
                raise AssertionError(f"island {i} has dead parent {p}")


def init_archipelago(H: Hypergraph, xstar: Vertex) -> Archipelago:
    try:
        x = H.vid(xstar)
    except KeyError:
        raise HypergraphError(f"unknown vertex {xstar!r}") from None
    return Archipelago(H.n, x)


def _hits(A: Archipelago, edge) -> dict[int, list[int]]:
    groups: dict[int, list[int]] = {}
    for v in edge:
        i = A.island_of[v]
        if i:
            groups.setdefault(i, []).append(v)
    return groups


def _classify_edge(A: Archipelago, k: int, edge) -> EdgeClass:
    groups = _hits(A, edge)
    hit = sum(len(g) for g in groups.values())
    if hit == 0:
        return EdgeClass.EXTERIOR
    if hit == 1:
        return EdgeClass.NEW_CROSSING
    # Entry-marked vertices of island i != 1 are exactly its entry, of size k-1.
    on_entry = any(i != ROOT and len(g) == k - 1 and all(A.in_entry[v] for v in g)
                   for i, g in groups.items())
    if on_entry:
        if hit == k and len(groups) == 2:
            return EdgeClass.CROSSING
        if hit == k - 1:
            return EdgeClass.CUT
    return EdgeClass.OTHER


def classify(A: Archipelago, H: Hypergraph, e: int) -> EdgeClass:
    if e in A.accepted_set:
        raise ContractError(f"edge {e} is already accepted")
    return _classify_edge(A, H.k, H.edges[e])


def _require(A, H, e, kind):
    got = classify(A, H, e)
    if got is not kind:
        raise ContractError(f"edge {e} is of type {got.value!r}, expected {kind.value!r}")


def _accept(A: Archipelago, e: int):
    A.accepted.append(e)
    A.accepted_set.add(e)


def add_new_crossing(A: Archipelago, H: Hypergraph, e: int) -> Archipelago:
    """Accept an edge meeting the archipelago in a single vertex.

    Its k-1 other vertices become a new leaf island whose entry is the whole
    island. Mutates and returns ``A``.
    """
    _require(A, H, e, EdgeClass.NEW_CROSSING)
    edge = H.edges[e]
    (i0,) = _hits(A, edge)
    fresh = frozenset(v for v in edge if not A.island_of[v])
    new = A.next_id
    A.next_id += 1
    for v in fresh:
        A.island_of[v] = new
        A.in_entry[v] = True
    A.members[new] = set(fresh)
    A.entries[new] = fresh
    A.parent[new] = i0
    _accept(A, e)
    return A


def lca(A: Archipelago, ids: Iterable[int]) -> int:
    paths = [A.root_path(i) for i in ids]
    if not paths:
        raise ValueError("lca of an empty set")
    common = set(paths[0]).intersection(*paths[1:])
    return next(i for i in paths[0] if i in common)


def add_other(A: Archipelago, H: Hypergraph, e: int) -> Archipelago:
    """Accept an edge of type "other", merging the islands it ties together.

    All islands on the arborescence paths from the lowest common ancestor of
    the islands meeting ``e`` down to those islands collapse into the ancestor,
    which keeps its entry; ``e``'s fresh vertices join it as well. Mutates and
    returns ``A``.
    """
    _require(A, H, e, EdgeClass.OTHER)
    _merge(A, H.edges[e])
    _accept(A, e)
    return A


def _merge(A: Archipelago, edge) -> tuple[int, list[int]]:
    J0 = set(_hits(A, edge))
    i0 = lca(A, J0)
    merged = set()
    for i in J0:
        while i != i0:
            merged.add(i)
            i = A.parent[i]
    target = A.members[i0]
    changed = []
    for j in sorted(merged):
        for v in A.members.pop(j):
            A.island_of[v] = i0
            target.add(v)
            changed.append(v)
        for v in A.entries.pop(j):
            A.in_entry[v] = False
        del A.parent[j]
    for v in edge:
        if not A.island_of[v]:
            A.island_of[v] = i0
            target.add(v)
            changed.append(v)
    for c, p in A.parent.items():
        if p in merged:
            A.parent[c] = i0
    return i0, changed


def add_crossing(A: Archipelago, H: Hypergraph, e: int) -> Archipelago:
    """Accept a crossing edge ``{x} ∪ entry``; islands and entries are unchanged."""
    _require(A, H, e, EdgeClass.CROSSING)
    groups = _hits(A, H.edges[e])
    head = next(i for i, g in groups.items() if len(g) == H.k - 1)
    tail = next(i for i in groups if i != head)
    A.crossing_arcs.add((tail, head))
    _accept(A, e)
    return A


def _check_input(H: Hypergraph):
    if H.k < 3:
        raise HypergraphError(f"rank must be >= 3, got {H.k}")
    if not H.is_uniform():
        raise HypergraphError("hypergraph is not k-uniform; run uniformize() first")


def partition_archipelago(H: Hypergraph, xstar: Vertex) -> tuple[Archipelago, EdgePartition]:
    """Grow the maximal archipelago of ``xstar`` and split E(H) accordingly.

    Phase 1 repeatedly accepts the lowest-indexed unaccepted edge of type
    "new crossing" or "other"; phase 2 then accepts every "crossing" edge. All
    remaining edges are "cut" or "exterior". Edge types only depend on the
    island and entry status of the edge's own vertices, so after each phase-1
    acceptance only edges incident to relabelled vertices are reclassified;
    the edge picked is the same one a full rescan would pick.
    """
    _check_input(H)
    A = init_archipelago(H, xstar)
    k, E = H.k, H.edges
    incident: list[list[int]] = [[] for _ in range(H.n)]
    for i, e in enumerate(E):
        for v in e:
            incident[v].append(i)

    kinds = [_classify_edge(A, k, e) for e in E]
    growing = (EdgeClass.NEW_CROSSING, EdgeClass.OTHER)
    heap = [i for i, t in enumerate(kinds) if t in growing]
    heapq.heapify(heap)

    while heap:
        e = heapq.heappop(heap)
        if e in A.accepted_set or kinds[e] not in growing:
            continue
        edge = E[e]
        if kinds[e] is EdgeClass.NEW_CROSSING:
            changed = [v for v in edge if not A.island_of[v]]
            add_new_crossing(A, H, e)
        else:
            _, changed = _merge(A, edge)
            _accept(A, e)
        touched = {f for v in changed for f in incident[v] if f not in A.accepted_set}
        for f in touched:
            kinds[f] = _classify_edge(A, k, E[f])
            if kinds[f] in growing:
                heapq.heappush(heap, f)

    for e in range(H.m):
        if e not in A.accepted_set and kinds[e] is EdgeClass.CROSSING:
            add_crossing(A, H, e)

    cut, ext = set(), set()
    for e in range(H.m):
        if e in A.accepted_set:
            continue
        if kinds[e] is EdgeClass.CUT:
            cut.add(e)
        elif kinds[e] is EdgeClass.EXTERIOR:
            ext.add(e)
        else:
            raise AssertionError(f"edge {e} left unclassified as {kinds[e].value!r}")
    return A, EdgePartition(frozenset(A.accepted_set), frozenset(cut), frozenset(ext))


def lcc(H: Hypergraph, xstar: Vertex) -> frozenset[int]:
    """Vertex ids reachable from ``xstar`` by a (k-2)-linear path."""
    A, _ = partition_archipelago(H, xstar)
    return A.vertices


def witness_path(A: Archipelago, H: Hypergraph, xstar: Vertex, target: Vertex,
                 budget: int | None = None) -> list[int]:
    """A (k-2)-linear path from ``xstar`` to ``target`` using accepted edges only."""
    x, y = H.vid(xstar), H.vid(target)
    if A.island_of[y] == 0:
        raise ContractError(f"vertex {H.vertices[y]!r} is not in the archipelago")
    path = find_path(H, {x}, {y}, H.k - 2, edges=A.accepted, budget=budget)
    if path is None:
        raise AssertionError(f"no witness path to {H.vertices[y]!r} among accepted edges")
    return path


def crossing_edges(A: Archipelago, H: Hypergraph) -> list[int]:
    """Accepted edges spanning two islands (the rest lie inside one island)."""
    return [e for e in A.accepted if len({A.island_of[v] for v in H.edges[e]}) > 1]


def result_dict(H: Hypergraph, A: Archipelago, part: EdgePartition) -> dict:
    return {
        "k": H.k,
        "source": H.vertices[A.source],
        "lcc": H.tokens(A.vertices),
        "islands": [
            {"id": isl.id, "entry": H.tokens(isl.entry), "vertices": H.tokens(isl.vertices),
             "parent": isl.parent}
            for isl in A.islands()
        ],
        "edges": {
            "archipelago": sorted(part.archipelago),
            "cut": sorted(part.cut),
            "exterior": sorted(part.exterior),
        },
    }
