"""Shared graph builders for the test modules."""

import random

from domexc.graphs import Graph, from_edges


def random_graph(n: int, bits: int) -> Graph:
    """Graph on n vertices from the low bits of an integer, column order."""
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits >> idx & 1:
                edges.append((u, v))
            idx += 1
    return from_edges(n, edges)


def shuffled(g: Graph, seed: int) -> Graph:
    order = list(range(g.n))
    random.Random(seed).shuffle(order)
    return g.relabel(order)
