# src/host_model.py

"""
Complete multipartite hosts K_{j x t}, their edge sets and 2-colorings.

Vertices are numbered linearly: parts ascending, slots ascending within a
part. Host edges are the cross-part pairs (u, v) with u < v, indexed in
lexicographic order. An EdgeSet is a bitmask over those edge indices, bound
to one shape; mixing shapes is an error.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import networkx as nx
import numpy as np

from config import HostLimits
from errors import Graph6Error, HostCapExceeded, ShapeError

logger = logging.getLogger(__name__)


def iter_bits(mask):
    """Yield the indices of the set bits of `mask`, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    return bin(mask).count("1")


def check_caps(shape, limits=None):
    """Raise HostCapExceeded when `shape` is over the vertex or edge caps."""
    limits = limits or HostLimits()
    if shape.total_vertices > limits.max_vertices:
        raise HostCapExceeded(
            f"host has {shape.total_vertices} vertices, cap is {limits.max_vertices}")
    if shape.host_edge_count > limits.max_host_edges:
        raise HostCapExceeded(
            f"host has {shape.host_edge_count} edges, cap is {limits.max_host_edges}")


@dataclass(frozen=True)
class VertexRef:
    """A vertex named by (part, slot), both 0-based."""
    part: int
    slot: int


@dataclass(frozen=True)
class PartiteShape:
    """
    The host K_{j x t}: one entry per part giving its number of slots.

    A shape carries no size cap itself: operations that materialise a host
    call check_caps with the configured HostLimits.
    """
    part_sizes: tuple

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.part_sizes)
        if not sizes:
            raise ShapeError("a host needs at least one part")
        if any(s < 1 for s in sizes):
            raise ShapeError(f"part sizes must be positive, got {list(sizes)}")
        object.__setattr__(self, "part_sizes", sizes)

    @classmethod
    def uniform(cls, j, t):
        return cls((t,) * j)

    @classmethod
    def from_json(cls, data):
        """Parse the descriptor {"parts": [t, ...]}."""
        try:
            return cls(tuple(data["parts"]))
        except (KeyError, TypeError, ValueError) as e:
            raise ShapeError(f"bad shape descriptor {data!r}: {e}") from e

    def to_json(self):
        return {"parts": list(self.part_sizes)}

    @property
    def j(self):
        return len(self.part_sizes)

    @property
    def total_vertices(self):
        return sum(self.part_sizes)

    @property
    def host_edge_count(self):
        total = self.total_vertices
        return total * (total - 1) // 2 - sum(s * (s - 1) // 2 for s in self.part_sizes)

    @cached_property
    def offsets(self):
        """Linear index of slot 0 of every part."""
        return tuple(int(x) for x in np.concatenate(([0], np.cumsum(self.part_sizes)[:-1])))

    @cached_property
    def part_of(self):
        """Part index of every linear vertex."""
        return tuple(p for p, size in enumerate(self.part_sizes) for _ in range(size))

    @cached_property
    def edges(self):
        """All host edges as (u, v), u < v, in edge-index order."""
        part_of = self.part_of
        return tuple((u, v) for u, v in combinations(range(self.total_vertices), 2)
                     if part_of[u] != part_of[v])

    @cached_property
    def edge_index(self):
        """Matrix mapping a vertex pair to its edge index, -1 for non-edges."""
        total = self.total_vertices
        index = np.full((total, total), -1, dtype=np.int32)
        for i, (u, v) in enumerate(self.edges):
            index[u, v] = index[v, u] = i
        return index

    @cached_property
    def full_mask(self):
        return (1 << self.host_edge_count) - 1

    def linear(self, ref):
        """Linear index of a VertexRef."""
        if not 0 <= ref.part < self.j or not 0 <= ref.slot < self.part_sizes[ref.part]:
            raise ShapeError(f"{ref} is not a vertex of {list(self.part_sizes)}")
        return self.offsets[ref.part] + ref.slot

    def vertex(self, linear):
        """VertexRef of a linear index."""
        if not 0 <= linear < self.total_vertices:
            raise ShapeError(f"vertex {linear} out of range")
        part = self.part_of[linear]
        return VertexRef(part, linear - self.offsets[part])

    def index_of(self, u, v):
        """Edge index of the host edge {u, v}; ShapeError for non-edges."""
        total = self.total_vertices
        if not (0 <= u < total and 0 <= v < total):
            raise ShapeError(f"pair ({u}, {v}) out of range for {total} vertices")
        idx = int(self.edge_index[u, v])
        if idx < 0:
            raise ShapeError(f"pair ({u}, {v}) lies inside one part and is not a host edge")
        return idx


@dataclass(frozen=True)
class EdgeSet:
    """A subgraph of the host, stored as a bitmask over host edge indices."""
    shape: PartiteShape
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits > self.shape.full_mask:
            raise ShapeError("edge mask has bits outside the host")

    @classmethod
    def empty(cls, shape):
        return cls(shape, 0)

    @classmethod
    def full(cls, shape):
        return cls(shape, shape.full_mask)

    @classmethod
    def from_pairs(cls, shape, pairs):
        bits = 0
        for u, v in pairs:
            bits |= 1 << shape.index_of(int(u), int(v))
        return cls(shape, bits)

    def __len__(self):
        return popcount(self.bits)

    def __contains__(self, pair):
        u, v = pair
        total = self.shape.total_vertices
        if not (0 <= u < total and 0 <= v < total):
            return False
        idx = int(self.shape.edge_index[u, v])
        return idx >= 0 and bool(self.bits >> idx & 1)

    def __iter__(self):
        edges = self.shape.edges
        return (edges[i] for i in iter_bits(self.bits))

    def pairs(self):
        return list(self)

    def indices(self):
        return list(iter_bits(self.bits))

    @cached_property
    def adjacency(self):
        """Neighbour bitmask of every vertex."""
        adj = [0] * self.shape.total_vertices
        for u, v in self:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def degree(self, v):
        return popcount(self.adjacency[v])

    def _require_same_shape(self, other):
        if other.shape != self.shape:
            raise ShapeError(
                f"edge sets live on different hosts: {list(self.shape.part_sizes)} "
                f"vs {list(other.shape.part_sizes)}")

    def union(self, other):
        self._require_same_shape(other)
        return EdgeSet(self.shape, self.bits | other.bits)

    def difference(self, other):
        self._require_same_shape(other)
        return EdgeSet(self.shape, self.bits & ~other.bits)

    def with_edge(self, u, v):
        return EdgeSet(self.shape, self.bits | 1 << self.shape.index_of(u, v))

    def without_edge(self, u, v):
        return EdgeSet(self.shape, self.bits & ~(1 << self.shape.index_of(u, v)))

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.shape.total_vertices))
        graph.add_edges_from(self)
        return graph


@dataclass(frozen=True)
class Coloring:
    """A red/blue split of the host; blue is everything that is not red."""
    shape: PartiteShape
    red: EdgeSet

    def __post_init__(self):
        if self.red.shape != self.shape:
            raise ShapeError("red edge set belongs to a different host")

    @classmethod
    def from_red_pairs(cls, shape, pairs):
        return cls(shape, EdgeSet.from_pairs(shape, pairs))

    @classmethod
    def all_red(cls, shape):
        return cls(shape, EdgeSet.full(shape))

    @classmethod
    def all_blue(cls, shape):
        return cls(shape, EdgeSet.empty(shape))

    @cached_property
    def blue(self):
        return complement_in_host(self.shape, self.red)

    def to_json(self):
        return {"shape": self.shape.to_json(), "red_edges": [list(e) for e in self.red]}

    @classmethod
    def from_json(cls, data):
        try:
            shape = PartiteShape.from_json(data["shape"])
            return cls.from_red_pairs(shape, data["red_edges"])
        except (KeyError, TypeError, ValueError) as e:
            raise ShapeError(f"bad coloring descriptor: {e}") from e


def host_edges(shape):
    """All host edges of `shape` in canonical order."""
    return list(shape.edges)


def complement_in_host(shape, edges):
    """Host edges of `shape` that are not in `edges`."""
    if edges.shape != shape:
        raise ShapeError("edge set belongs to a different host")
    return EdgeSet(shape, shape.full_mask & ~edges.bits)


def delete_slot(shape, coloring, v, allow_empty_part=False):
    """
    Remove vertex `v` from the host and restrict the coloring to the rest.

    Args:
        shape: Host the coloring lives on
        coloring: Coloring to restrict
        v: VertexRef of the slot to delete
        allow_empty_part: Permit deleting the last slot of a part (the part disappears)

    Returns:
        Coloring on the reduced shape
    """
    if coloring.shape != shape:
        raise ShapeError("coloring belongs to a different host")
    removed = shape.linear(v)
    sizes = list(shape.part_sizes)
    if sizes[v.part] == 1:
        if not allow_empty_part:
            raise ShapeError(f"deleting {v} would empty part {v.part}")
        del sizes[v.part]
    else:
        sizes[v.part] -= 1
    if not sizes:
        raise ShapeError("cannot delete the only vertex of the host")
    reduced = PartiteShape(tuple(sizes))

    def shift(x):
        return x - 1 if x > removed else x

    red = [(shift(a), shift(b)) for a, b in coloring.red if removed not in (a, b)]
    return Coloring.from_red_pairs(reduced, red)


def restrict_uniform(coloring):
    """Delete slot 0 of every part: K_{j x t} -> K_{j x (t-1)}."""
    shape = coloring.shape
    if min(shape.part_sizes) < 2:
        raise ShapeError("every part needs two slots to restrict")
    result = coloring
    for part in range(shape.j):
        result = delete_slot(result.shape, result, VertexRef(part, 0))
    return result


def vertex_permutation(shape, part_perm, slot_perms):
    """Linear vertex map of the automorphism (part_perm, slot_perms)."""
    j = shape.j
    if sorted(part_perm) != list(range(j)):
        raise ShapeError(f"{list(part_perm)} is not a permutation of the parts")
    if len(slot_perms) != j:
        raise ShapeError("need one slot permutation per part")
    sizes = shape.part_sizes
    for p, q in enumerate(part_perm):
        if sizes[p] != sizes[q]:
            raise ShapeError(f"part {p} (size {sizes[p]}) cannot map to part {q} (size {sizes[q]})")
        if sorted(slot_perms[p]) != list(range(sizes[p])):
            raise ShapeError(f"slot map of part {p} is not a permutation")
    return [shape.offsets[part_perm[p]] + slot_perms[p][s]
            for p, size in enumerate(sizes) for s in range(size)]


def part_slot_permute(coloring, part_perm, slot_perms):
    """
    Image of a coloring under a host automorphism.

    Vertex (p, s) is sent to (part_perm[p], slot_perms[p][s]); parts may only
    be exchanged with parts of the same size.
    """
    shape = coloring.shape
    image = vertex_permutation(shape, part_perm, slot_perms)
    return Coloring.from_red_pairs(shape, ((image[u], image[v]) for u, v in coloring.red))


def encode_graph6(edges):
    """graph6 text (no header) of an EdgeSet on the linear vertex order."""
    graph = edges.to_networkx()
    data = nx.to_graph6_bytes(graph, nodes=range(edges.shape.total_vertices), header=False)
    return data.decode("ascii").strip()


def decode_graph6(text, shape):
    """Parse graph6 text into an EdgeSet of `shape`; every edge must be a host edge."""
    raw = text.strip()
    if raw.startswith(">>graph6<<"):
        raw = raw[len(">>graph6<<"):]
    if not raw:
        raise Graph6Error("empty graph6 text")
    try:
        graph = nx.from_graph6_bytes(raw.encode("ascii"))
    except (ValueError, IndexError, UnicodeEncodeError, nx.NetworkXError) as e:
        raise Graph6Error(f"malformed graph6 {raw!r}: {e}") from e
    if graph.number_of_nodes() != shape.total_vertices:
        raise Graph6Error(
            f"graph6 has {graph.number_of_nodes()} vertices, host has {shape.total_vertices}")
    part_of = shape.part_of
    bits = 0
    for u, v in graph.edges():
        if part_of[u] == part_of[v]:
            raise Graph6Error(f"edge ({u}, {v}) joins two vertices of part {part_of[u]}")
        bits |= 1 << shape.index_of(u, v)
    return EdgeSet(shape, bits)
