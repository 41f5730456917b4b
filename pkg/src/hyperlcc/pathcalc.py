"""Predicates on edge sequences: q-linear paths, paths from X to Y and
(X, Y)-extendable paths, plus the composition rules that build longer
extendable paths out of shorter ones.

An edge sequence is a list of edge indices into a :class:`Hypergraph`.
Vertex sets may be given as tokens or ids.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .hypercore import Hypergraph, Vertex


class ContractError(ValueError):
    """A documented precondition does not hold."""


class SearchBudgetExceeded(RuntimeError):
    pass


def _vs(H: Hypergraph, X: Iterable[Vertex]) -> frozenset[int]:
    return H.vids(X)


def is_q_linear(H: Hypergraph, P: Sequence[int], q: int) -> bool:
    E = H.edges
    for i in range(len(P)):
        for j in range(i + 1, len(P)):
            size = len(E[P[i]] & E[P[j]])
            if j == i + 1:
                if not 1 <= size <= q:
                    return False
            elif size:
                return False
    return True


def _check_query(X, Y, q):
    if not X or not Y:
        raise ContractError("X and Y must be nonempty")
    if len(X & Y) > q:
        raise ContractError(f"|X & Y| = {len(X & Y)} exceeds q = {q}")


def is_path_from_to(H: Hypergraph, P: Sequence[int], X, Y, q: int) -> bool:
    X, Y = _vs(H, X), _vs(H, Y)
    _check_query(X, Y, q)
    if X & Y:
        return len(P) == 0
    if not P:
        return False
    E = H.edges
    if not (X & E[P[0]]) or any(X & E[i] for i in P[1:]):
        return False
    if not (Y & E[P[-1]]) or any(Y & E[i] for i in P[:-1]):
        return False
    return is_q_linear(H, P, q)


def _check_extendable_query(H, X, Y):
    k = H.k
    if not (1 <= len(X) <= k - 1 and 1 <= len(Y) <= k - 1):
        raise ContractError(f"endpoint sets must have between 1 and {k - 1} vertices")
    if len(X & Y) > k - 2:
        raise ContractError(f"|X & Y| must be at most {k - 2}")


def is_extendable(H: Hypergraph, P: Sequence[int], X, Y) -> bool:
    """True iff ``P`` is an (X, Y)-extendable path.

    That is a (k-2)-linear path from X to Y whose first edge meets X in at most
    k-2 vertices and whose last edge meets Y in at most k-2 vertices, so that
    it can be prolonged at either end by an edge containing X (resp. Y).
    """
    X, Y = _vs(H, X), _vs(H, Y)
    _check_extendable_query(H, X, Y)
    if not is_path_from_to(H, P, X, Y, H.k - 2):
        return False
    if P:
        E = H.edges
        if len(E[P[0]] & X) > H.k - 2 or len(E[P[-1]] & Y) > H.k - 2:
            return False
    return True


def extract_subpath(H: Hypergraph, P: Sequence[int], X, Y, q: int) -> list[int]:
    """The part of ``P`` between its last visit of X before the first visit of Y."""
    X, Y = _vs(H, X), _vs(H, Y)
    E = H.edges
    if not P:
        raise ContractError("P must be nonempty")
    if X & Y:
        raise ContractError("X and Y must be disjoint")
    if not (X & E[P[0]]):
        raise ContractError("first edge of P must meet X")
    if not (Y & E[P[-1]]):
        raise ContractError("last edge of P must meet Y")
    if not is_q_linear(H, P, q):
        raise ContractError(f"P is not {q}-linear")
    s = next(i for i, e in enumerate(P) if E[e] & Y)
    r = max(i for i in range(s + 1) if E[P[i]] & X)
    return list(P[r:s + 1])


def compose(H: Hypergraph, P: Sequence[int], e: int, Q: Sequence[int], A, B, C, D) -> list[int]:
    """Join an (A, B)-extendable path and a (C, D)-extendable path through ``e``.

    Requires A ∪ V(P) ∪ B and C ∪ V(Q) ∪ D to be disjoint, and ``e`` to meet
    the first exactly in B and the second exactly in C. The result is an
    (A, D)-extendable path.
    """
    A, B, C, D = (_vs(H, S) for S in (A, B, C, D))
    if not is_extendable(H, P, A, B):
        raise ContractError("P is not (A, B)-extendable")
    if not is_extendable(H, Q, C, D):
        raise ContractError("Q is not (C, D)-extendable")
    left = A | H.vertex_set(P) | B
    right = C | H.vertex_set(Q) | D
    if left & right:
        raise ContractError("A ∪ V(P) ∪ B and C ∪ V(Q) ∪ D are not disjoint")
    edge = H.edges[e]
    if edge & left != B:
        raise ContractError("e ∩ (A ∪ V(P) ∪ B) differs from B")
    if edge & right != C:
        raise ContractError("e ∩ (C ∪ V(Q) ∪ D) differs from C")
    return [*P, e, *Q]


def widen_endpoint(H: Hypergraph, P: Sequence[int], A, B, wider, at: str = "end") -> bool:
    """Check that an (A, B)-extendable path stays extendable for a wider endpoint.

    With ``at="end"`` the target B is replaced by ``wider`` ⊇ B; with
    ``at="start"`` the source A is. ``wider`` may only add vertices lying
    outside A ∪ V(P) ∪ B.
    """
    A, B, wider = _vs(H, A), _vs(H, B), _vs(H, wider)
    if at not in ("start", "end"):
        raise ValueError(f"at must be 'start' or 'end', got {at!r}")
    if not is_extendable(H, P, A, B):
        raise ContractError("P is not (A, B)-extendable")
    old = B if at == "end" else A
    if not old <= wider:
        raise ContractError("widened set must contain the original endpoint set")
    if len(wider) > H.k - 1:
        raise ContractError(f"widened set has more than {H.k - 1} vertices")
    if wider & (A | H.vertex_set(P) | B) != old:
        raise ContractError("widened set meets A ∪ V(P) ∪ B outside the original endpoint set")
    if at == "end":
        return is_extendable(H, P, A, wider)
    return is_extendable(H, P, wider, B)


def find_path(H: Hypergraph, X, Y, q: int, edges: Iterable[int] | None = None,
              budget: int | None = None) -> list[int] | None:
    """Depth-first search for a q-linear path from X to Y using only ``edges``.

    Returns the first path found (edges tried in index order) or None.
    """
    X, Y = _vs(H, X), _vs(H, Y)
    _check_query(X, Y, q)
    if X & Y:
        return []
    E = H.edges
    pool = sorted(set(range(H.m) if edges is None else edges))
    # Edges meeting X can only come first.
    starts = [i for i in pool if E[i] & X]
    incident: dict[int, list[int]] = {}
    for i in pool:
        if not (E[i] & X):
            for v in E[i]:
                incident.setdefault(v, []).append(i)

    def candidates(i):
        return iter(sorted({f for v in E[i] for f in incident.get(v, ())}))

    blocked = [0] * H.n
    count = 0
    for s in starts:
        if E[s] & Y:
            return [s]
        path = [s]
        on_path = {s}
        stack = [candidates(s)]
        while stack:
            f = next(stack[-1], None)
            if f is None:
                stack.pop()
                on_path.discard(path.pop())
                if path:
                    for v in E[path[-1]]:
                        blocked[v] -= 1
                continue
            last = E[path[-1]]
            if f in on_path or not 1 <= len(E[f] & last) <= q or any(blocked[v] for v in E[f]):
                continue
            count += 1
            if budget is not None and count > budget:
                raise SearchBudgetExceeded(f"path search exceeded {budget} extensions")
            for v in last:
                blocked[v] += 1
            path.append(f)
            on_path.add(f)
            if E[f] & Y:
                return path
            stack.append(candidates(f))
    return None
