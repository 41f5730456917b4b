"""Seeded instance generators."""

from __future__ import annotations

import random

from .hypercore import Hypergraph

DEFAULT_SEED = 20240601


def gen_random(n: int, m: int, k: int, seed: int = DEFAULT_SEED) -> Hypergraph:
    """``m`` edges, each a uniformly random k-subset of vertices ``0..n-1``."""
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    if m < 0:
        raise ValueError("m must be >= 0")
    rng = random.Random(seed)
    edges = [[str(v) for v in sorted(rng.sample(range(n), k))] for _ in range(m)]
    return Hypergraph.from_edges(k, edges)


def gen_chain(length: int, k: int) -> Hypergraph:
    """A linear path of ``length`` edges; consecutive edges share one vertex.

    Vertex ``0`` lies in the first edge only and is the intended source.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    edges = []
    start = 0
    for _ in range(length):
        edges.append([str(v) for v in range(start, start + k)])
        start += k - 1
    return Hypergraph.from_edges(k, edges)
