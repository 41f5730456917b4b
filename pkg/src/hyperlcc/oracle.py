"""Exhaustive ground truth for small instances.

Everything here enumerates edge sequences directly, pruning as soon as a
pairwise intersection rule is broken. It shares no code with the archipelago
algorithm and is exponential on purpose.
"""

from __future__ import annotations

from typing import Iterable

from .hypercore import Hypergraph, Vertex

DEFAULT_BUDGET = 10_000_000


class BudgetExceeded(RuntimeError):
    pass


class _Counter:
    def __init__(self, budget):
        self.budget = budget
        self.used = 0

    def tick(self):
        self.used += 1
        if self.budget is not None and self.used > self.budget:
            raise BudgetExceeded(f"oracle exceeded {self.budget} extensions")


def _pool(H, edges):
    return sorted(set(range(H.m) if edges is None else edges))


def _walk(H, pool, first_ok, later_ok, q, counter, max_len=None):
    """Yield every q-linear path (as a tuple) whose first edge passes
    ``first_ok`` and whose other edges pass ``later_ok``, in lexicographic
    order of edge indices."""
    E = H.edges

    def extend(path, used):
        yield path
        if max_len is not None and len(path) >= max_len:
            return
        last = E[path[-1]]
        for f in pool:
            if f in path or not later_ok(f):
                continue
            size = len(E[f] & last)
            if size < 1 or size > q or E[f] & used:
                continue
            counter.tick()
            yield from extend(path + (f,), used | last)

    for s in pool:
        if first_ok(s):
            counter.tick()
            yield from extend((s,), frozenset())


def oracle_lcc(H: Hypergraph, xstar: Vertex, q: int, edges: Iterable[int] | None = None,
               budget: int | None = DEFAULT_BUDGET) -> frozenset[int]:
    """All vertices reachable from ``xstar`` by a q-linear path.

    A vertex y is reachable iff it lies on some q-linear path whose first edge
    is the only one containing x*: cutting such a path at its first edge
    meeting y gives a path from x* to y.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    x = H.vid(xstar)
    E = H.edges
    pool = _pool(H, edges)
    goal = set().union(*(E[i] for i in pool)) if pool else set()
    found = {x}
    counter = _Counter(budget)
    for path in _walk(H, pool, lambda i: x in E[i], lambda i: x not in E[i], q, counter):
        found |= E[path[-1]]
        if found >= goal:
            break
    return frozenset(found)


def oracle_extendable_exists(H: Hypergraph, X, Y, edges: Iterable[int] | None = None,
                             budget: int | None = DEFAULT_BUDGET) -> bool:
    """Whether an (X, Y)-extendable path exists using only ``edges``."""
    X, Y = H.vids(X), H.vids(Y)
    k = H.k
    if not (1 <= len(X) <= k - 1 and 1 <= len(Y) <= k - 1) or len(X & Y) > k - 2:
        raise ValueError("invalid endpoint sets for an extendable path")
    if X & Y:
        return True
    E = H.edges
    pool = _pool(H, edges)
    counter = _Counter(budget)

    def first_ok(i):
        return 1 <= len(E[i] & X) <= k - 2

    def later_ok(i):
        return not (E[i] & X)

    for path in _walk(H, pool, first_ok, later_ok, k - 2, counter):
        if any(E[i] & Y for i in path[:-1]):
            continue
        last = E[path[-1]]
        if 1 <= len(last & Y) <= k - 2:
            return True
    return False


def enumerate_paths(H: Hypergraph, xstar: Vertex, q: int, max_len: int,
                    budget: int | None = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All q-linear paths from ``xstar`` with at most ``max_len`` edges.

    The empty path comes first; the rest are in lexicographic order of edge
    indices. Only the first edge of a path may contain ``xstar``.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    x = H.vid(xstar)
    E = H.edges
    out: list[tuple[int, ...]] = [()]
    if max_len == 0:
        return out
    counter = _Counter(budget)
    out.extend(_walk(H, _pool(H, None), lambda i: x in E[i], lambda i: x not in E[i],
                     q, counter, max_len=max_len))
    return out


def brute_force_lcc(H: Hypergraph, xstar: Vertex, q: int) -> frozenset[int]:
    """Reachability by testing every ordered selection of distinct edges.

    No pruning at all; only usable for a handful of edges. Serves as a check
    on the pruned enumeration above.
    """
    from itertools import permutations

    x = H.vid(xstar)
    E = H.edges
    found = {x}
    for L in range(1, H.m + 1):
        for P in permutations(range(H.m), L):
            if x not in E[P[0]] or any(x in E[i] for i in P[1:]):
                continue
            ok = True
            for i in range(L):
                for j in range(i + 1, L):
                    size = len(E[P[i]] & E[P[j]])
                    if (j == i + 1 and not 1 <= size <= q) or (j > i + 1 and size):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                found |= E[P[-1]]
    return frozenset(found)
