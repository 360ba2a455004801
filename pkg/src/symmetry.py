# src/symmetry.py

"""
Host automorphisms and the lex-leader test used to break symmetry in search.

Automorphisms of K_{j x t} permute equal-size parts and permute slots inside
each part. The test only needs a set of automorphisms, not the full group:
using fewer of them prunes less but never wrongly.
"""

import logging
from itertools import combinations

from host_model import vertex_permutation

logger = logging.getLogger(__name__)

# RED sorts before BLUE, matching the order the search tries colours in
RED = 0
BLUE = 1
UNDECIDED = -1


def _identity(shape):
    return list(range(shape.j)), [list(range(s)) for s in shape.part_sizes]


def part_transpositions(shape):
    """Vertex maps swapping two equal-size parts slot by slot."""
    maps = []
    for p, q in combinations(range(shape.j), 2):
        if shape.part_sizes[p] != shape.part_sizes[q]:
            continue
        part_perm, slot_perms = _identity(shape)
        part_perm[p], part_perm[q] = q, p
        maps.append(vertex_permutation(shape, part_perm, slot_perms))
    return maps


def slot_transpositions(shape):
    """Vertex maps swapping two slots of one part."""
    maps = []
    for p, size in enumerate(shape.part_sizes):
        for a, b in combinations(range(size), 2):
            part_perm, slot_perms = _identity(shape)
            slot_perms[p][a], slot_perms[p][b] = b, a
            maps.append(vertex_permutation(shape, part_perm, slot_perms))
    return maps


def automorphism_generators(shape, cap=4096):
    """
    Part and slot transpositions, then their pairwise products, up to `cap` maps.
    """
    parts = part_transpositions(shape)
    slots = slot_transpositions(shape)
    maps = (parts + slots)[:cap]
    for sigma in parts:
        for tau in slots:
            if len(maps) >= cap:
                return maps
            maps.append([sigma[tau[x]] for x in range(len(sigma))])
    return maps


def position_permutation(shape, order, vertex_map):
    """
    Express a vertex automorphism on search positions.

    Position k holds host edge order[k]; the result sends k to the position of
    the image of that edge.
    """
    position = {edge: k for k, edge in enumerate(order)}
    edges = shape.edges
    perm = []
    for edge in order:
        u, v = edges[edge]
        perm.append(position[shape.index_of(vertex_map[u], vertex_map[v])])
    return perm


class LexLeader:
    """
    Lex-leader pruning over the decided prefix of a partial assignment.

    An assignment a is pruned when, for one of the stored maps pi, the image
    b[k] = a[pi[k]] is already lexicographically smaller on positions where
    both sides are decided. The lexicographically least member of every orbit
    is never pruned.
    """

    def __init__(self, shape, order, cap=4096):
        self.moved = []
        for vertex_map in automorphism_generators(shape, cap):
            perm = position_permutation(shape, order, vertex_map)
            moved = [(k, target) for k, target in enumerate(perm) if k != target]
            if moved:
                self.moved.append(moved)
        logger.debug("lex-leader uses %d automorphisms", len(self.moved))

    def __len__(self):
        return len(self.moved)

    def prune(self, assignment):
        for moved in self.moved:
            for k, target in moved:
                x = assignment[k]
                if x == UNDECIDED:
                    break
                y = assignment[target]
                if y == UNDECIDED:
                    break
                if y < x:
                    return True
                if y > x:
                    break
        return False


def lex_leader_prune(shape, order, assignment, cap=4096):
    """One-shot form of LexLeader(shape, order, cap).prune(assignment)."""
    return LexLeader(shape, order, cap).prune(assignment)
