"""Self-checks run on a computed archipelago (``partition --verify``)."""

from __future__ import annotations

from .archipelago import Archipelago, EdgePartition, ROOT, witness_path
from .hypercore import Hypergraph
from .oracle import oracle_lcc
from .pathcalc import is_path_from_to

ORACLE_EDGE_LIMIT = 12


def check_partition(H: Hypergraph, A: Archipelago, part: EdgePartition,
                    oracle_limit: int = ORACLE_EDGE_LIMIT) -> list[str]:
    """Return a list of violated invariants (empty when everything holds).

    Structural invariants are always checked; the oracle comparison only runs
    when the hypergraph has at most ``oracle_limit`` edges.
    """
    problems = []
    E = H.edges
    V = A.vertices
    sets = (part.archipelago, part.cut, part.exterior)
    if sum(len(s) for s in sets) != H.m or frozenset().union(*sets) != frozenset(range(H.m)):
        problems.append("edge classes do not partition E(H)")

    seen: set[int] = set()
    for isl in A.islands():
        if seen & isl.vertices:
            problems.append(f"island {isl.id} overlaps another island")
        seen |= isl.vertices
        if not isl.entry <= isl.vertices:
            problems.append(f"entry of island {isl.id} is not inside it")
        want = 1 if isl.id == ROOT else H.k - 1
        if len(isl.entry) != want:
            problems.append(f"entry of island {isl.id} has size {len(isl.entry)}, expected {want}")
    if A.entries[ROOT] != frozenset((A.source,)):
        problems.append("island 1 is not entered at the source")
    try:
        A.check_arborescence()
    except AssertionError as exc:
        problems.append(f"arborescence: {exc}")
    if any(head == ROOT for _, head in A.crossing_arcs):
        problems.append("island 1 has an incoming crossing arc")

    for e in part.archipelago:
        if not E[e] <= V:
            problems.append(f"accepted edge {e} leaves the archipelago")
    entries = A.entry_sets()
    for e in part.cut:
        inside = E[e] & V
        if inside not in entries or len(E[e] - V) != 1:
            problems.append(f"cut edge {e} is not an entry plus one outside vertex")
    for e in part.exterior:
        if E[e] & V:
            problems.append(f"exterior edge {e} meets the archipelago")

    for v in sorted(V):
        P = witness_path(A, H, A.source, v)
        if not is_path_from_to(H, P, {A.source}, {v}, H.k - 2):
            problems.append(f"witness for {H.vertices[v]!r} is not a valid path")
        if not set(P) <= part.archipelago:
            problems.append(f"witness for {H.vertices[v]!r} uses non-accepted edges")

    if H.m <= oracle_limit:
        expected = oracle_lcc(H, A.source, H.k - 2)
        if expected != V:
            problems.append(f"component differs from oracle: got {H.tokens(V)}, oracle {H.tokens(expected)}")
    return problems
