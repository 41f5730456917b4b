"""Graphviz renderings of archipelagos and bicolored graphs."""

from __future__ import annotations

from .archipelago import Archipelago, crossing_edges
from .hypercore import Hypergraph
from .pafp import BicoloredGraph


def _q(tok: str) -> str:
    return '"' + tok.replace('"', '\\"') + '"'


def archipelago_to_dot(H: Hypergraph, A: Archipelago) -> str:
    """Islands as clusters, entry vertices double-circled.

    Each accepted hyperedge is drawn as a point joined to its vertices, in red
    when it is a crossing edge between two islands. Arborescence arcs are
    dashed and run between island clusters.
    """
    lines = ["digraph archipelago {", "  compound=true;", "  node [shape=circle];"]
    anchor = {}
    for isl in A.islands():
        lines.append(f"  subgraph cluster_{isl.id} {{")
        lines.append(f'    label="island {isl.id}";')
        for v in sorted(isl.vertices):
            shape = " [shape=doublecircle]" if v in isl.entry else ""
            lines.append(f"    {_q(H.vertices[v])}{shape};")
        lines.append("  }")
        anchor[isl.id] = H.vertices[min(isl.entry)]
    red = set(crossing_edges(A, H))
    for e in sorted(A.accepted):
        color = "red" if e in red else "black"
        lines.append(f'  {_q(f"e{e}")} [shape=point, color={color}];')
        for v in sorted(H.edges[e]):
            lines.append(f'  {_q(f"e{e}")} -> {_q(H.vertices[v])} [dir=none, color={color}];')
    for isl in A.islands():
        if isl.parent is not None:
            lines.append(f"  {_q(anchor[isl.parent])} -> {_q(anchor[isl.id])} "
                         f"[style=dashed, ltail=cluster_{isl.parent}, lhead=cluster_{isl.id}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def bicolored_to_dot(G: BicoloredGraph) -> str:
    lines = ["graph bicolored {"]
    lines += [f"  {_q(tok)};" for tok in G.nodes]
    for color in ("blue", "red"):
        for u, v in G.edges(color):
            lines.append(f"  {_q(G.nodes[u])} -- {_q(G.nodes[v])} [color={color}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
