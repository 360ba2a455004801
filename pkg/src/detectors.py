# src/detectors.py

"""
Exact detectors for the two patterns traded off by a good coloring:
n-stripes (matchings of size n) and cycles of one fixed length L.

The public functions take an EdgeSet. The `*_masks` helpers work directly on
a list of neighbour bitmasks so the search can call them on its own mutable
state without building EdgeSets.
"""

import logging
from collections import deque
from dataclasses import dataclass

from errors import DomainError
from host_model import iter_bits, popcount

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatchingWitness:
    """Pairwise vertex-disjoint edges, each (u, v) with u < v, sorted."""
    edges: tuple

    @property
    def size(self):
        return len(self.edges)

    def free_vertices(self, total):
        """Vertices not covered by the matching."""
        covered = {x for e in self.edges for x in e}
        return [x for x in range(total) if x not in covered]


@dataclass(frozen=True)
class CycleWitness:
    """A cycle as an ordered tuple of distinct linear vertex indices."""
    vertices: tuple

    @property
    def length(self):
        return len(self.vertices)

    def refs(self, shape):
        return [shape.vertex(x) for x in self.vertices]

    def edges(self):
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


# ---------------------------------------------------------------------------
# Maximum matching (Edmonds' blossom algorithm on bitmask adjacency)
# ---------------------------------------------------------------------------

def augment_matching(adj, mate, root):
    """
    Search for an augmenting path starting at the free vertex `root`.

    On success the path is flipped into `mate` in place and True is returned.
    Blossoms are contracted by relabelling their vertices to a common base.
    """
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in iter_bits(adj[v]):
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur_base = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur_base, to, blossom)
                mark_path(to, cur_base, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur_base
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    while to != -1:
                        pv = parent[to]
                        ppv = mate[pv]
                        mate[to] = pv
                        mate[pv] = to
                        to = ppv
                    return True
                used[mate[to]] = True
                queue.append(mate[to])
    return False


def maximum_matching_masks(adj):
    """Maximum matching of a bitmask graph as a `mate` list (-1 = free)."""
    n = len(adj)
    mate = [-1] * n
    # greedy start, then one augmenting search per free vertex
    for u in range(n):
        if mate[u] == -1:
            for v in iter_bits(adj[u]):
                if mate[v] == -1:
                    mate[u], mate[v] = v, u
                    break
    for u in range(n):
        if mate[u] == -1 and adj[u]:
            augment_matching(adj, mate, u)
    return mate


def grow_matching_after_edge(adj, mate, u, v):
    """
    Restore maximality after edge uv was added to `adj`.

    `mate` must be a maximum matching of the graph without uv. Any augmenting
    path of the new graph uses uv, so at most one augmentation is needed.
    Returns True when the matching grew by one.
    """
    if mate[u] == -1 and mate[v] == -1:
        mate[u], mate[v] = v, u
        return True
    if mate[u] == -1:
        return augment_matching(adj, mate, u)
    if mate[v] == -1:
        return augment_matching(adj, mate, v)
    for x in range(len(adj)):
        if mate[x] == -1 and adj[x] and augment_matching(adj, mate, x):
            return True
    return False


def _witness_from_mate(mate):
    return MatchingWitness(tuple((u, w) for u, w in enumerate(mate) if w > u))


def matching_number(edges):
    """
    Size of a maximum matching of `edges` (general graphs).

    Returns:
        Tuple (nu, MatchingWitness)
    """
    witness = _witness_from_mate(maximum_matching_masks(list(edges.adjacency)))
    return witness.size, witness


def contains_stripe(edges, n):
    """True iff `edges` contains n pairwise vertex-disjoint edges."""
    if n < 1:
        raise DomainError(f"stripe size must be at least 1, got {n}")
    return matching_number(edges)[0] >= n


# ---------------------------------------------------------------------------
# Fixed-length paths and cycles
# ---------------------------------------------------------------------------

def path_between_masks(adj, u, v, interior_len):
    """
    Lexicographically least u-v path with exactly `interior_len` interior vertices.

    Returns:
        List of vertices from u to v, or None
    """
    if u == v:
        raise DomainError("path endpoints must differ")
    if interior_len == 0:
        return [u, v] if adj[u] >> v & 1 else None
    total = len(adj)
    if interior_len > total - 2:
        return None
    target = adj[v]
    if not target:
        return None
    everything = (1 << total) - 1
    path = [u]

    def extend(cur, visited, remaining):
        if remaining == 1:
            candidates = adj[cur] & target & ~visited
            if candidates:
                path.append((candidates & -candidates).bit_length() - 1)
                return True
            return False
        if popcount(everything & ~visited) < remaining:
            return False
        for w in iter_bits(adj[cur] & ~visited):
            path.append(w)
            if extend(w, visited | 1 << w, remaining - 1):
                return True
            path.pop()
        return False

    if extend(u, 1 << u | 1 << v, interior_len):
        path.append(v)
        return path
    return None


def find_path_between(edges, u, v, interior_len):
    """Path from u to v of interior_len + 1 edges with distinct vertices, or None."""
    return path_between_masks(edges.adjacency, u, v, interior_len)


def bipartition_masks(adj):
    """Side (0/1) of every vertex of a bipartite bitmask graph, or None."""
    side = [-1] * len(adj)
    for start in range(len(adj)):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in iter_bits(adj[x]):
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    return side


def cycle_masks(adj, length):
    """
    Lexicographically least cycle on exactly `length` vertices.

    The cycle is reported starting at its smallest vertex, with the second
    vertex smaller than the last one.
    """
    total = len(adj)
    if length < 3 or length > total:
        return None
    if length % 2 and bipartition_masks(adj) is not None:
        return None
    for s in range(total):
        allowed = ((1 << total) - 1) & ~((1 << (s + 1)) - 1)
        if popcount(adj[s] & allowed) < 2:
            continue
        path = [s]

        def extend(cur, visited, depth):
            if depth == length - 1:
                above_second = ~((1 << (path[1] + 1)) - 1)
                closing = adj[cur] & adj[s] & allowed & ~visited & above_second
                if closing:
                    path.append((closing & -closing).bit_length() - 1)
                    return True
                return False
            if popcount(allowed & ~visited) < length - depth:
                return False
            for w in iter_bits(adj[cur] & allowed & ~visited):
                path.append(w)
                if extend(w, visited | 1 << w, depth + 1):
                    return True
                path.pop()
            return False

        if extend(s, 1 << s, 1):
            return path
    return None


def find_cycle(edges, length):
    """CycleWitness for a cycle of exactly `length` vertices in `edges`, or None."""
    found = cycle_masks(edges.adjacency, length)
    return CycleWitness(tuple(found)) if found is not None else None


def is_bipartite(edges):
    """
    Two-colour the graph by BFS.

    Returns:
        Tuple (ok, side) where side[v] is 0/1 when ok, else None
    """
    side = bipartition_masks(edges.adjacency)
    return (False, None) if side is None else (True, side)


def validate_matching(edges, witness):
    """True iff the witness is a matching inside `edges`."""
    seen = set()
    for u, v in witness.edges:
        if u in seen or v in seen or u == v or (u, v) not in edges:
            return False
        seen.update((u, v))
    return True


def validate_cycle(edges, witness, length=None):
    """True iff the witness is a cycle (of `length` vertices, if given) inside `edges`."""
    vs = witness.vertices
    if len(set(vs)) != len(vs) or len(vs) < 3:
        return False
    if length is not None and len(vs) != length:
        return False
    return all((a, b) in edges for a, b in witness.edges())
