# src/cnf_export.py

"""
Propositional form of "K_{j x t} has a good coloring".

One variable per host edge (true = red, variable = edge index + 1). Every
host C_L gets a clause asking for a red edge on it; every set of n pairwise
disjoint host edges gets a clause asking for a blue edge among them. The
formula is satisfiable iff a good coloring exists.
"""

import io
import json
import logging
from dataclasses import dataclass

from pysat.formula import CNF
from pysat.solvers import Solver

from config import CnfConfig
from constructions import DEFAULT_CYCLE, verify_good
from errors import ClauseCapExceeded, DomainError, RamseyError
from host_model import Coloring, EdgeSet, check_caps, iter_bits

logger = logging.getLogger(__name__)


def host_cycles(shape, length):
    """
    Every cycle on `length` vertices of the host, once each, as edge-index lists.

    A cycle is listed from its smallest vertex with the second vertex smaller
    than the last, which picks one of its 2L rotations/reflections.
    """
    total = shape.total_vertices
    if length < 3 or length > total:
        return
    full = EdgeSet.full(shape)
    adj = full.adjacency
    index = shape.index_of
    for s in range(total):
        allowed = ((1 << total) - 1) & ~((1 << (s + 1)) - 1)
        stack = [(s, 1 << s, [s])]
        while stack:
            cur, visited, path = stack.pop()
            if len(path) == length:
                if adj[cur] >> s & 1 and path[1] < cur:
                    yield [index(path[i], path[(i + 1) % length]) for i in range(length)]
                continue
            for w in sorted(iter_bits(adj[cur] & allowed & ~visited), reverse=True):
                stack.append((w, visited | 1 << w, path + [w]))


def disjoint_edge_sets(shape, n):
    """Every set of n pairwise vertex-disjoint host edges, as sorted edge-index tuples."""
    edges = shape.edges

    def extend(start, covered, chosen):
        if len(chosen) == n:
            yield tuple(chosen)
            return
        for i in range(start, len(edges)):
            u, v = edges[i]
            mask = 1 << u | 1 << v
            if covered & mask:
                continue
            chosen.append(i)
            yield from extend(i + 1, covered | mask, chosen)
            chosen.pop()

    yield from extend(0, 0, [])


@dataclass
class CnfExport:
    """Exported formula plus the data needed to read a model back."""
    shape: object
    n: int
    length: int
    cnf: CNF
    cycle_clauses: int
    stripe_clauses: int

    @property
    def num_vars(self):
        return self.shape.host_edge_count

    def variable_map(self):
        """DIMACS variable -> [u, v] host edge."""
        return {str(i + 1): list(edge) for i, edge in enumerate(self.shape.edges)}

    def to_dimacs(self):
        comments = [
            f"c good colorings of K with parts {list(self.shape.part_sizes)}",
            f"c no red {self.n}K_2, no blue C_{self.length}",
            f"c cycle clauses {self.cycle_clauses}, stripe clauses {self.stripe_clauses}",
        ]
        out = io.StringIO()
        self.cnf.to_fp(out, comments=comments)
        return out.getvalue()

    def write(self, path, map_path=None):
        """Write the DIMACS file and its JSON variable-map sidecar."""
        with open(path, 'w') as f:
            f.write(self.to_dimacs())
        map_path = map_path or f"{path}.map.json"
        with open(map_path, 'w') as f:
            json.dump({"shape": self.shape.to_json(), "n": self.n, "L": self.length,
                       "variables": self.variable_map()}, f, indent=2)
        return path, map_path


def export_cnf(shape, n, length=DEFAULT_CYCLE, config=None, limits=None):
    """
    Build the CNF for (shape, n, L).

    Raises:
        ClauseCapExceeded: when the formula would exceed config.clause_cap clauses
        HostCapExceeded: when the host is over `limits` (default HostLimits())
    """
    if n < 1:
        raise DomainError(f"stripe size must be at least 1, got {n}")
    check_caps(shape, limits)
    cap = (config or CnfConfig()).clause_cap
    cnf = CNF()
    cycles = 0
    for cycle in host_cycles(shape, length):
        cnf.append([e + 1 for e in cycle])
        cycles += 1
        if len(cnf.clauses) > cap:
            raise ClauseCapExceeded(f"more than {cap} clauses (cycle clauses alone)")
    stripes = 0
    for chosen in disjoint_edge_sets(shape, n):
        cnf.append([-(e + 1) for e in chosen])
        stripes += 1
        if len(cnf.clauses) > cap:
            raise ClauseCapExceeded(f"more than {cap} clauses")
    cnf.nv = max(cnf.nv, shape.host_edge_count)
    logger.info("CNF for %s, n=%d, L=%d: %d vars, %d cycle + %d stripe clauses",
                list(shape.part_sizes), n, length, cnf.nv, cycles, stripes)
    return CnfExport(shape, n, length, cnf, cycles, stripes)


def decode_model(shape, model):
    """Coloring whose red edges are the true edge variables of a model."""
    bits = 0
    for literal in model:
        if 0 < literal <= shape.host_edge_count:
            bits |= 1 << (literal - 1)
    return Coloring(shape, EdgeSet(shape, bits))


def solve_cnf(export, solver_name="m22"):
    """
    Solve an exported formula in-process.

    Returns:
        A verified good Coloring, or None when the formula is unsatisfiable
    """
    with Solver(name=solver_name, bootstrap_with=export.cnf.clauses) as solver:
        if not solver.solve():
            return None
        model = solver.get_model() or []
    coloring = decode_model(export.shape, model)
    if not verify_good(coloring, export.n, export.length).is_good:
        raise RamseyError("SAT model decodes to a coloring that is not good")
    return coloring
