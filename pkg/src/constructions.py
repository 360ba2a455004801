# src/constructions.py

"""
Extremal ("good") colorings witnessing the lower bounds m_j(nK_2, C_7) > m - 1.

Each regime of the formula has one construction on K_{j x (m-1)}. Special
vertices (clique members, cone apex, star centres) sit at fixed positions of
the linear order so repeated runs emit identical certificates. Every
construction is checked with the detectors before it is returned.
"""

import logging
from dataclasses import dataclass
from itertools import combinations

from detectors import find_cycle, matching_number
from errors import ConstructionError, DomainError
from formula import Regime, ramsey_value
from host_model import Coloring, PartiteShape, check_caps

logger = logging.getLogger(__name__)

DEFAULT_CYCLE = 7


@dataclass(frozen=True)
class GoodnessReport:
    """Outcome of checking one coloring against (nK_2, C_L)."""
    n: int
    length: int
    nu_red: int
    stripe_found: bool
    matching: object
    cycle_witness: object
    is_good: bool

    def to_json(self):
        return {
            "n": self.n,
            "L": self.length,
            "nu_red": self.nu_red,
            "stripe_found": self.stripe_found,
            "max_matching": [list(e) for e in self.matching.edges],
            "cycle_witness": list(self.cycle_witness.vertices) if self.cycle_witness else None,
            "is_good": self.is_good,
        }


def verify_good(coloring, n, length=DEFAULT_CYCLE):
    """
    Check that red has no n-stripe and blue has no cycle of `length` vertices.

    Args:
        coloring: Coloring to check
        n: Forbidden stripe size in red
        length: Forbidden cycle length in blue

    Returns:
        GoodnessReport carrying a maximum red matching and any blue cycle
    """
    if n < 1:
        raise DomainError(f"stripe size must be at least 1, got {n}")
    nu, matching = matching_number(coloring.red)
    cycle = find_cycle(coloring.blue, length)
    stripe = nu >= n
    return GoodnessReport(
        n=n,
        length=length,
        nu_red=nu,
        stripe_found=stripe,
        matching=matching,
        cycle_witness=cycle,
        is_good=not stripe and cycle is None,
    )


def clique_coloring(j, n):
    """Red is a clique on the last j-3 vertices of K_j; blue is K_3 + (j-3)K_1."""
    shape = PartiteShape.uniform(j, 1)
    red = combinations(range(3, j), 2)
    coloring = Coloring.from_red_pairs(shape, red)
    if j - 3 > 2 * n - 1:
        raise ConstructionError(f"clique on {j - 3} vertices would hold {n}K_2")
    return coloring


def star_coloring(j, n):
    """Red is every edge at the first n-1 vertices of K_j; blue is a clique on the rest."""
    shape = PartiteShape.uniform(j, 1)
    centres = range(n - 1)
    red = [(u, v) for u in centres for v in range(u + 1, j)]
    return Coloring.from_red_pairs(shape, red)


def cone_coloring(j):
    """
    Red is K_1 + K_{(j-2) x 2} on K_{j x 2}.

    The apex is x_1^1 (vertex 0); the red multipartite part spans parts 3..j.
    Part 2 and the second slot of part 1 only carry blue edges.
    """
    shape = PartiteShape.uniform(j, 2)
    rest = range(4, 2 * j)
    red = [(0, v) for v in rest]
    red += [(u, v) for u, v in combinations(rest, 2) if shape.part_of[u] != shape.part_of[v]]
    return Coloring.from_red_pairs(shape, red)


def bipartite_family_coloring(j, t0):
    """Red is K_{(j-1) x t0} on parts 2..j; blue is K_{t0, (j-1) t0} from part 1."""
    shape = PartiteShape.uniform(j, t0)
    red = [(u, v) for u, v in shape.edges if shape.part_of[u] != 0]
    return Coloring.from_red_pairs(shape, red)


def lower_bound_coloring(j, n, infinite_slots=3, limits=None):
    """
    Extremal coloring for the (j, n) cell, verified good before returning.

    Args:
        j: Number of parts
        n: Stripe size
        infinite_slots: Slots per part for the all-blue K_{2 x T} of the j = 2 row
        limits: HostLimits for the witness host; defaults to HostLimits()

    Returns:
        Coloring of K_{j x (m-1)}, or None when m = 1
    """
    if j < 2 or n < 2:
        raise DomainError(f"constructions need j >= 2 and n >= 2, got j={j}, n={n}")
    result = ramsey_value(j, n)
    if result.regime is Regime.VALUE1:
        logger.debug("m_%d(%dK_2, C_7) = 1: empty host, nothing to construct", j, n)
        return None
    slots = infinite_slots if result.value.is_infinite else result.value.t - 1
    check_caps(PartiteShape.uniform(j, slots), limits)

    if result.regime is Regime.INFINITE_J2:
        coloring = Coloring.all_blue(PartiteShape.uniform(2, infinite_slots))
    elif result.regime is Regime.VALUE2_CLIQUE:
        coloring = clique_coloring(j, n)
    elif result.regime is Regime.VALUE2_STARS:
        coloring = star_coloring(j, n)
    elif result.regime is Regime.VALUE3_CONE:
        coloring = cone_coloring(j)
    else:
        coloring = bipartite_family_coloring(j, result.value.t - 1)

    report = verify_good(coloring, n)
    if not report.is_good:
        raise ConstructionError(
            f"{result.regime} coloring for j={j}, n={n} is not good: "
            f"nu(red)={report.nu_red}, blue cycle={report.cycle_witness}")
    logger.debug("built %s coloring for j=%d, n=%d on %s", result.regime, j, n,
                 list(coloring.shape.part_sizes))
    return coloring


def red_vertex_count(coloring):
    """Number of vertices touched by a red edge."""
    return sum(1 for mask in coloring.red.adjacency if mask)
