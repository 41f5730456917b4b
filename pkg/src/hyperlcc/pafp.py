"""Bicolored line graphs and Paths Avoiding Forbidden Pairs.

A bicolored graph has blue and red edges; PAFP asks for a *blue induced path*
between two nodes: consecutive nodes joined by blue edges, non-consecutive
nodes not adjacent at all. In the line graph of a k-uniform hypergraph with
blue for intersections of size 1..q and red above q, blue induced paths are
exactly the q-linear paths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .archipelago import lcc
from .hypercore import Hypergraph, HypergraphError, HypergraphFormatError, TOKEN_RE, Vertex
from .pathcalc import ContractError


class PafpBudgetExceeded(RuntimeError):
    pass


@dataclass
class BicoloredGraph:
    nodes: list[str] = field(default_factory=list)
    blue: list[set[int]] = field(default_factory=list)
    red: list[set[int]] = field(default_factory=list)

    def __post_init__(self):
        self.index = {tok: i for i, tok in enumerate(self.nodes)}

    def add_node(self, tok: str) -> int:
        if tok not in self.index:
            self.index[tok] = len(self.nodes)
            self.nodes.append(tok)
            self.blue.append(set())
            self.red.append(set())
        return self.index[tok]

    def add_edge(self, u, v, color: str):
        if color not in ("blue", "red"):
            raise ValueError(f"unknown color {color!r}")
        u, v = self.node(u), self.node(v)
        if u == v:
            raise ValueError(f"self-loop on {self.nodes[u]!r}")
        same, other = (self.blue, self.red) if color == "blue" else (self.red, self.blue)
        if v in other[u]:
            raise ValueError(f"{self.nodes[u]!r} and {self.nodes[v]!r} already joined in the other color")
        same[u].add(v)
        same[v].add(u)

    def node(self, u) -> int:
        if isinstance(u, int):
            if 0 <= u < len(self.nodes):
                return u
            raise KeyError(u)
        return self.index[u]

    def neighbors(self, u: int) -> set[int]:
        return self.blue[u] | self.red[u]

    def edges(self, color: str) -> list[tuple[int, int]]:
        adj = self.blue if color == "blue" else self.red
        return [(u, v) for u in range(len(self.nodes)) for v in sorted(adj[u]) if u < v]

    def __eq__(self, other):
        if not isinstance(other, BicoloredGraph):
            return NotImplemented
        return self.nodes == other.nodes and self.blue == other.blue and self.red == other.red


def line_graph(H: Hypergraph, q: int) -> BicoloredGraph:
    """One node ``e<i>`` per hyperedge; blue if 1 <= |e ∩ f| <= q, red if larger."""
    if not 1 <= q <= H.k - 1:
        raise ValueError(f"q must lie in [1, {H.k - 1}]")
    G = BicoloredGraph()
    for i in range(H.m):
        G.add_node(f"e{i}")
    for i, j in combinations(range(H.m), 2):
        size = len(H.edges[i] & H.edges[j])
        if size:
            G.add_edge(i, j, "blue" if size <= q else "red")
    return G


def is_blue_induced_path(G: BicoloredGraph, path) -> bool:
    path = [G.node(u) for u in path]
    if len(set(path)) != len(path):
        return False
    for a in range(len(path)):
        for b in range(a + 1, len(path)):
            u, v = path[a], path[b]
            if b == a + 1:
                if v not in G.blue[u]:
                    return False
            elif v in G.blue[u] or v in G.red[u]:
                return False
    return True


def pafp_exact(G: BicoloredGraph, u, v, budget: int | None = 10_000_000) -> list[int] | None:
    """Backtracking search for a blue induced path from ``u`` to ``v``.

    Exponential in the worst case. Neighbours are tried in index order, so
    the answer is deterministic.
    """
    s, t = G.node(u), G.node(v)
    if s == t:
        raise ValueError("endpoints must differ")
    n = len(G.nodes)
    # blocked[w] > 0: w is on the path or adjacent to a path node other than the last
    blocked = [0] * n
    path = [s]
    blocked[s] += 1
    stack = [iter(sorted(G.blue[s]))]
    expansions = 0
    while stack:
        w = next(stack[-1], None)
        if w is None:
            stack.pop()
            last = path.pop()
            blocked[last] -= 1
            if path:
                for x in G.neighbors(path[-1]):
                    blocked[x] -= 1
            continue
        if blocked[w]:
            continue
        if w == t:
            return path + [w]
        # t adjacent to w means t must come right after w
        if t in G.neighbors(w) and t not in G.blue[w]:
            continue
        expansions += 1
        if budget is not None and expansions > budget:
            raise PafpBudgetExceeded(f"PAFP search exceeded {budget} expansions")
        for x in G.neighbors(path[-1]):
            blocked[x] += 1
        path.append(w)
        blocked[w] += 1
        stack.append(iter(sorted(G.blue[w])))
    return None


def restrict_hypergraph(H: Hypergraph, x: Vertex, y: Vertex, e: int, e2: int) -> Hypergraph:
    """Drop every edge containing ``x`` or ``y`` except ``e`` and ``e2``.

    The vertex universe is kept, so vertex ids stay valid.
    """
    x, y = H.vid(x), H.vid(y)
    if x not in H.edges[e]:
        raise ContractError(f"vertex {H.vertices[x]!r} is not in edge {e}")
    if y not in H.edges[e2]:
        raise ContractError(f"vertex {H.vertices[y]!r} is not in edge {e2}")
    return Hypergraph(H.k, H.vertices, tuple(H.edges[i] for i in restricted_indices(H, x, y, e, e2)))


def restricted_indices(H: Hypergraph, x: int, y: int, e: int, e2: int) -> list[int]:
    """Original indices of the edges kept by :func:`restrict_hypergraph`."""
    return [i for i, f in enumerate(H.edges)
            if i in (e, e2) or (x not in f and y not in f)]


def solve_pafp_via_hypergraph(H: Hypergraph, e: int, e2: int) -> bool:
    """Blue induced path between ``e`` and ``e2`` in the (k-2) line graph?

    Tries every x in e \\ e2 and y in e2 \\ e and asks whether y is in the
    (k-2)-linear component of x once all other edges through x or y are
    removed; only then must such a path start with ``e`` and end with ``e2``.
    """
    if e == e2:
        raise ValueError("edges must differ")
    if not H.is_uniform():
        raise HypergraphError("hypergraph is not k-uniform")
    E = H.edges
    for x in sorted(E[e] - E[e2]):
        for y in sorted(E[e2] - E[e]):
            if y in lcc(restrict_hypergraph(H, x, y, e, e2), x):
                return True
    return False


def screen_forbidden(G: BicoloredGraph) -> list[tuple[int, int, int]]:
    """Induced red paths a-b-c, which no (k-2) line graph contains.

    Two tight intersections |a ∩ b| = |b ∩ c| = k-1 force |a ∩ c| >= k-2 > 0,
    so a and c would have to be adjacent. Each triple is reported once with
    a < c.
    """
    out = []
    for b in range(len(G.nodes)):
        reds = sorted(G.red[b])
        for a, c in combinations(reds, 2):
            if c not in G.neighbors(a):
                out.append((a, b, c))
    return sorted(out)


def parse_bicolored(text: str) -> BicoloredGraph:
    G = BicoloredGraph()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        for tok in parts[1:]:
            if not TOKEN_RE.fullmatch(tok):
                raise HypergraphFormatError(f"invalid node token {tok!r}", lineno)
        if parts[0] == "node" and len(parts) == 2:
            G.add_node(parts[1])
        elif parts[0] in ("b", "r") and len(parts) == 3:
            u, v = G.add_node(parts[1]), G.add_node(parts[2])
            try:
                G.add_edge(u, v, "blue" if parts[0] == "b" else "red")
            except ValueError as exc:
                raise HypergraphFormatError(str(exc), lineno) from None
        else:
            raise HypergraphFormatError(f"expected 'b u v', 'r u v' or 'node u', got {line!r}", lineno)
    return G


def serialize_bicolored(G: BicoloredGraph) -> str:
    lines = [f"node {tok}" for tok in G.nodes]
    lines += [f"b {G.nodes[u]} {G.nodes[v]}" for u, v in G.edges("blue")]
    lines += [f"r {G.nodes[u]} {G.nodes[v]}" for u, v in G.edges("red")]
    return "\n".join(lines) + "\n"
