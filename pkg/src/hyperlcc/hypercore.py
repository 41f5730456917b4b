"""Hypergraph data model, the plain-text edge-list format and uniformization."""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

Vertex = Union[str, int]

TOKEN_RE = re.compile(r"[A-Za-z0-9_.-]+")
HEADER_RE = re.compile(r"k\s*=\s*(\S+)")


class HypergraphError(ValueError):
    """Structurally invalid hypergraph."""


class HypergraphFormatError(HypergraphError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class DuplicateEdgeWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Hypergraph:
    """A hypergraph of rank ``k`` over opaque string tokens.

    Vertices are addressed internally by dense integer ids (their position in
    ``vertices``); every edge is a frozenset of such ids. Most functions in the
    package accept either a token or an id wherever a vertex is expected and
    return ids.
    """

    k: int
    vertices: tuple[str, ...]
    edges: tuple[frozenset[int], ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(frozenset(e) for e in self.edges))
        if not isinstance(self.k, int) or self.k < 3:
            raise HypergraphError(f"rank must be an integer >= 3, got {self.k!r}")
        index = {}
        for i, tok in enumerate(self.vertices):
            if tok in index:
                raise HypergraphError(f"vertex token {tok!r} listed twice")
            index[tok] = i
        object.__setattr__(self, "index", index)
        n = len(self.vertices)
        seen = set()
        for i, e in enumerate(self.edges):
            if len(e) < 2:
                raise HypergraphError(f"edge {i} has {len(e)} vertices, need at least 2")
            if len(e) > self.k:
                raise HypergraphError(f"edge {i} has {len(e)} vertices, rank is {self.k}")
            if any(not (0 <= v < n) for v in e):
                raise HypergraphError(f"edge {i} references an unknown vertex id")
            if e in seen:
                warnings.warn(f"edge {i} duplicates an earlier edge", DuplicateEdgeWarning, stacklevel=3)
            seen.add(e)

    @classmethod
    def from_edges(cls, k: int, edges: Iterable[Sequence[str]]) -> "Hypergraph":
        """Build from token edges, numbering vertices by first appearance."""
        index: dict[str, int] = {}
        id_edges = []
        for i, edge in enumerate(edges):
            ids = []
            for tok in edge:
                tok = str(tok)
                if tok not in index:
                    index[tok] = len(index)
                ids.append(index[tok])
            if len(set(ids)) != len(ids):
                raise HypergraphError(f"edge {i} repeats a vertex")
            id_edges.append(frozenset(ids))
        return cls(k, tuple(index), tuple(id_edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def is_uniform(self) -> bool:
        return all(len(e) == self.k for e in self.edges)

    def vid(self, v: Vertex) -> int:
        """Vertex id of a token or id; KeyError if unknown."""
        if isinstance(v, int):
            if 0 <= v < self.n:
                return v
            raise KeyError(v)
        return self.index[v]

    def vids(self, vs: Iterable[Vertex]) -> frozenset[int]:
        return frozenset(self.vid(v) for v in vs)

    def tokens(self, ids: Iterable[int]) -> list[str]:
        """Tokens of ``ids`` in vertex-id order."""
        return [self.vertices[i] for i in sorted(ids)]

    def edge_tokens(self, i: int) -> list[str]:
        return self.tokens(self.edges[i])

    def vertex_set(self, P: Iterable[int]) -> frozenset[int]:
        """Union of the edges indexed by ``P``."""
        out: set[int] = set()
        for i in P:
            out |= self.edges[i]
        return frozenset(out)

    def duplicate_edges(self) -> list[tuple[int, int]]:
        """(first, later) index pairs of repeated edges."""
        first: dict[frozenset[int], int] = {}
        dups = []
        for i, e in enumerate(self.edges):
            if e in first:
                dups.append((first[e], i))
            else:
                first[e] = i
        return dups


def parse_hypergraph(text: str) -> Hypergraph:
    k = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if k is None:
            match = HEADER_RE.fullmatch(line)
            if match is None:
                raise HypergraphFormatError(f"expected header 'k=<int>', got {line!r}", lineno)
            try:
                k = int(match.group(1))
            except ValueError:
                raise HypergraphFormatError(f"rank {match.group(1)!r} is not an integer", lineno) from None
            if k < 3:
                raise HypergraphFormatError(f"rank must be >= 3, got {k}", lineno)
            continue
        toks = line.split()
        for tok in toks:
            if not TOKEN_RE.fullmatch(tok):
                raise HypergraphFormatError(f"invalid vertex token {tok!r}", lineno)
        if len(set(toks)) != len(toks):
            dup = next(t for t in toks if toks.count(t) > 1)
            raise HypergraphFormatError(f"duplicate vertex {dup!r} in edge", lineno)
        if len(toks) > k:
            raise HypergraphFormatError(f"edge has {len(toks)} vertices, exceeding k={k}", lineno)
        if len(toks) < 2:
            raise HypergraphFormatError(f"edge has {len(toks)} vertex, need at least 2", lineno)
        edges.append(toks)
    if k is None:
        raise HypergraphFormatError("missing header 'k=<int>'")
    return Hypergraph.from_edges(k, edges)


def serialize_hypergraph(H: Hypergraph) -> str:
    # Isolated vertices have no textual representation and are dropped.
    lines = [f"k={H.k}"]
    lines.extend(" ".join(H.edge_tokens(i)) for i in range(H.m))
    return "\n".join(lines) + "\n"


def pad_token(edge_index: int, j: int, taken) -> str:
    tok = f"_pad_{edge_index}_{j}"
    while tok in taken:
        tok += "_"
    return tok


def uniformize(H: Hypergraph) -> Hypergraph:
    """Pad every edge to exactly ``k`` vertices with fresh vertices.

    Edge ``i`` of size ``s`` gains ``_pad_<i>_0`` ... ``_pad_<i>_<k-s-1>``.
    Since the new vertices belong to a single edge, all pairwise intersections
    and hence all q-linear paths between original vertices are unchanged.
    """
    if H.is_uniform():
        return H
    taken = set(H.vertices)
    edges = []
    for i, e in enumerate(H.edges):
        toks = H.tokens(e)
        for j in range(H.k - len(e)):
            tok = pad_token(i, j, taken)
            taken.add(tok)
            toks.append(tok)
        edges.append(toks)
    out = Hypergraph.from_edges(H.k, edges)
    # keep isolated original vertices
    extra = [t for t in H.vertices if t not in out.index]
    if extra:
        out = Hypergraph(H.k, out.vertices + tuple(extra), out.edges)
    return out
