# tests/oracles.py

"""
Slow, obviously-correct reference implementations the fast code is checked against.
"""

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from host_model import EdgeSet, PartiteShape, complement_in_host


def random_edge_set(rng, shape, density):
    keep = np.flatnonzero(rng.random(shape.host_edge_count) < density)
    bits = 0
    for i in keep:
        bits |= 1 << int(i)
    return EdgeSet(shape, bits)


def random_shape(rng, max_vertices, min_parts=2):
    """Ragged shape with at most `max_vertices` vertices."""
    while True:
        j = int(rng.integers(min_parts, max_vertices + 1))
        sizes = [int(s) for s in rng.integers(1, 4, size=j)]
        while sum(sizes) > max_vertices and len(sizes) > min_parts:
            sizes.pop()
        if sum(sizes) <= max_vertices:
            return PartiteShape(tuple(sizes))


def neighbour_sets(edges):
    adj = [set() for _ in range(edges.shape.total_vertices)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def brute_matching_number(edges):
    """Match the lowest unmatched vertex with each neighbour, or leave it unmatched."""
    adj = neighbour_sets(edges)

    @lru_cache(maxsize=None)
    def best(available):
        if not available:
            return 0
        v = min(available)
        rest = available - {v}
        result = best(rest)
        for w in adj[v] & rest:
            result = max(result, 1 + best(rest - {w}))
        return result

    return best(frozenset(range(len(adj))))


def brute_has_cycle(edges, length):
    """Try every L-tuple of distinct vertices as a cycle."""
    adj = neighbour_sets(edges)
    total = len(adj)
    if length < 3 or length > total:
        return False
    for subset in combinations(range(total), length):
        chosen = set(subset)
        if any(len(adj[v] & chosen) < 2 for v in subset):
            continue
        first = subset[0]
        for rest in permutations(subset[1:]):
            if rest[0] > rest[-1]:
                continue
            cycle = (first,) + rest
            if all(cycle[(i + 1) % length] in adj[cycle[i]] for i in range(length)):
                return True
    return False


def brute_good_coloring_exists(shape, n, length):
    """Literal enumeration of all 2^E red/blue splits of the host."""
    for bits in range(1 << shape.host_edge_count):
        red = EdgeSet(shape, bits)
        if brute_matching_number(red) >= n:
            continue
        if brute_has_cycle(complement_in_host(shape, red), length):
            continue
        return True
    return False


def small_shapes(max_edges, max_vertices=13):
    """Every shape (non-increasing part sizes, two or more parts) within the edge bound."""
    def partitions(total, largest):
        if total == 0:
            yield ()
            return
        for first in range(min(total, largest), 0, -1):
            for rest in partitions(total - first, first):
                yield (first,) + rest

    shapes = []
    for total in range(2, max_vertices + 1):
        for sizes in partitions(total, total):
            if len(sizes) < 2:
                continue
            shape = PartiteShape(sizes)
            if shape.host_edge_count <= max_edges:
                shapes.append(shape)
    return shapes
