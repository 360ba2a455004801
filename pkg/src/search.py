# src/search.py

"""
Exhaustive search for good colorings of K_{j x t}: no red nK_2, no blue C_L.

The search walks the host edges in a fixed order and colours each one red or
blue. A branch dies as soon as
  - red reaches matching number n (kept incrementally by one augmenting
    search per new red edge), or
  - the new blue edge uv closes a blue C_L (a blue u-v path with L-2
    interior vertices already exists).
Optional pruning: lex-leader symmetry breaking over host automorphisms, and
dominance, which keeps only leaves whose red set is maximal under
nu(red) <= n-1. Removing blue edges never creates a blue cycle, so a good
coloring exists iff a red-maximal one does.

An Exhausted verdict is only produced by a search that ran to completion.
"""

import logging
import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from enum import Enum
from itertools import product

from config import CertifyConfig, SearchConfig
from constructions import DEFAULT_CYCLE, verify_good
from detectors import grow_matching_after_edge, path_between_masks
from errors import DomainError, HostCapExceeded, RamseyError
from formula import ramsey_value
from host_model import Coloring, EdgeSet, PartiteShape, check_caps
from symmetry import BLUE, RED, UNDECIDED, LexLeader

logger = logging.getLogger(__name__)

SearchOptions = SearchConfig

PRUNE_REASONS = ("stripe", "cycle", "dominance", "symmetry")
_CHECK_EVERY = 4096


class Verdict(str, Enum):
    GOOD_COLORING = "good-coloring"
    EXHAUSTED = "exhausted"
    BUDGET_EXCEEDED = "budget-exceeded"

    def __str__(self):
        return self.value


@dataclass
class ExhaustionCertificate:
    """Record of a complete search that found no good coloring."""
    shape: PartiteShape
    n: int
    length: int
    nodes_explored: int
    prunes_by_reason: dict
    wall_time: float
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.nodes_explored < 1:
            raise ValueError("an exhaustion certificate covers at least the root node")

    def to_json(self):
        return {
            "shape": self.shape.to_json(),
            "n": self.n,
            "L": self.length,
            "nodes_explored": self.nodes_explored,
            "prunes_by_reason": dict(self.prunes_by_reason),
            "wall_time": round(self.wall_time, 6),
            "options": dict(self.options),
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            shape=PartiteShape.from_json(data["shape"]),
            n=int(data["n"]),
            length=int(data["L"]),
            nodes_explored=int(data["nodes_explored"]),
            prunes_by_reason=dict(data["prunes_by_reason"]),
            wall_time=float(data["wall_time"]),
            options=dict(data.get("options", {})),
        )


@dataclass
class SearchResult:
    verdict: Verdict
    coloring: Coloring = None
    certificate: ExhaustionCertificate = None
    nodes_explored: int = 0
    prunes_by_reason: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def found(self):
        return self.verdict is Verdict.GOOD_COLORING

    @property
    def exhausted(self):
        return self.verdict is Verdict.EXHAUSTED


class _Stop(Exception):
    """Raised inside the search loop when the budget runs out or another worker won."""


def edge_order(shape, mode):
    """
    Host edge indices in search order.

    "natural" is the canonical edge order. "degree_guided" takes edges by
    their larger endpoint first, so the first decisions all touch the first
    few vertices and both prunes fire early.
    """
    indices = range(shape.host_edge_count)
    if mode == "natural":
        return list(indices)
    edges = shape.edges
    return sorted(indices, key=lambda i: (edges[i][1], edges[i][0]))


class GoodColoringSearch:
    """
    Depth-first search state for one (shape, n, L) instance.

    Args:
        shape: Host to colour
        n: Forbidden red stripe size
        length: Forbidden blue cycle length
        options: SearchOptions
        deadline: Absolute time.monotonic() value at which to stop
        stop_event: Shared event set by whichever worker finds a coloring
    """

    def __init__(self, shape, n, length, options, deadline=None, stop_event=None):
        self.shape = shape
        self.n = n
        self.length = length
        self.options = options
        self.deadline = deadline if deadline is not None else time.monotonic() + options.time_budget
        self.stop_event = stop_event

        self.order = edge_order(shape, options.edge_order)
        self.pairs = [shape.edges[i] for i in self.order]
        total = shape.total_vertices
        self.red_adj = [0] * total
        self.blue_adj = [0] * total
        self.mate = [-1] * total
        self.nu = 0
        self.assigned = [UNDECIDED] * len(self.order)
        self.saved_mate = [None] * len(self.order)
        self.check_cycles = 3 <= length <= total
        self.lex = LexLeader(shape, self.order, options.symmetry_cap) \
            if options.symmetry == "lex_leader" else None

        self.nodes = 1
        self.prunes = dict.fromkeys(PRUNE_REASONS, 0)

    # -- state updates -----------------------------------------------------

    def _assign(self, pos, value):
        """Colour position `pos`; returns a prune reason instead when it fails."""
        u, v = self.pairs[pos]
        if value == BLUE:
            if self.check_cycles and path_between_masks(
                    self.blue_adj, u, v, self.length - 2) is not None:
                return "cycle"
            self.blue_adj[u] |= 1 << v
            self.blue_adj[v] |= 1 << u
        else:
            self.red_adj[u] |= 1 << v
            self.red_adj[v] |= 1 << u
            before = self.mate[:]
            if grow_matching_after_edge(self.red_adj, self.mate, u, v):
                if self.nu + 1 >= self.n:
                    self.mate = before
                    self.red_adj[u] &= ~(1 << v)
                    self.red_adj[v] &= ~(1 << u)
                    return "stripe"
                self.nu += 1
                self.saved_mate[pos] = before
        self.assigned[pos] = value
        return None

    def _undo(self, pos):
        u, v = self.pairs[pos]
        if self.assigned[pos] == BLUE:
            self.blue_adj[u] &= ~(1 << v)
            self.blue_adj[v] &= ~(1 << u)
        else:
            self.red_adj[u] &= ~(1 << v)
            self.red_adj[v] &= ~(1 << u)
            if self.saved_mate[pos] is not None:
                self.mate = self.saved_mate[pos]
                self.saved_mate[pos] = None
                self.nu -= 1
        self.assigned[pos] = UNDECIDED

    def _tick(self):
        if self.nodes >= self.options.node_budget:
            raise _Stop("node budget")
        self.nodes += 1
        if self.nodes % _CHECK_EVERY == 0:
            if time.monotonic() > self.deadline:
                raise _Stop("time budget")
            if self.stop_event is not None and self.stop_event.is_set():
                raise _Stop("cancelled")

    # -- leaves ------------------------------------------------------------

    def _red_is_maximal(self):
        """False when some blue edge could turn red without creating nK_2."""
        for pos, value in enumerate(self.assigned):
            if value != BLUE:
                continue
            u, v = self.pairs[pos]
            adj = self.red_adj[:]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            grew = grow_matching_after_edge(adj, self.mate[:], u, v)
            if not grew or self.nu + 1 < self.n:
                return False
        return True

    def _coloring(self):
        bits = 0
        for pos, value in enumerate(self.assigned):
            if value == RED:
                bits |= 1 << self.order[pos]
        return Coloring(self.shape, EdgeSet(self.shape, bits))

    def _accept_leaf(self):
        if self.options.dominance and not self._red_is_maximal():
            self.prunes["dominance"] += 1
            return None
        coloring = self._coloring()
        report = verify_good(coloring, self.n, self.length)
        if not report.is_good:
            raise RamseyError(f"search state produced a coloring that is not good: {report}")
        return coloring

    # -- driver ------------------------------------------------------------

    def _place(self, pos, value):
        reason = self._assign(pos, value)
        if reason is not None:
            self.prunes[reason] += 1
            return False
        if self.lex is not None and self.lex.prune(self.assigned):
            self.prunes["symmetry"] += 1
            return False
        return True

    def run(self, prefix=()):
        """
        Search below a fixed prefix of colours.

        Returns:
            (Verdict, Coloring or None); BUDGET_EXCEEDED also covers cancellation
        """
        try:
            for pos, value in enumerate(prefix):
                self._tick()
                if not self._place(pos, value):
                    return Verdict.EXHAUSTED, None
            found = self._dfs(len(prefix))
        except _Stop as stop:
            logger.debug("search stopped after %d nodes: %s", self.nodes, stop)
            return Verdict.BUDGET_EXCEEDED, None
        if found is not None:
            return Verdict.GOOD_COLORING, found
        return Verdict.EXHAUSTED, None

    def _dfs(self, start):
        values = (RED, BLUE)
        size = len(self.order)
        tried = [0] * size
        pos = start
        while True:
            if pos == size:
                found = self._accept_leaf()
                if found is not None:
                    return found
                pos -= 1
                continue
            if pos < start:
                return None
            if self.assigned[pos] != UNDECIDED:
                self._undo(pos)
            k = tried[pos]
            if k == len(values):
                tried[pos] = 0
                pos -= 1
                continue
            tried[pos] = k + 1
            self._tick()
            if self._place(pos, values[k]):
                pos += 1


def _run_task(shape_parts, n, length, options, deadline, prefix, stop_event):
    search = GoodColoringSearch(PartiteShape(tuple(shape_parts)), n, length, options,
                                deadline=deadline, stop_event=stop_event)
    verdict, coloring = search.run(prefix)
    if verdict is Verdict.GOOD_COLORING and stop_event is not None:
        stop_event.set()
    red = coloring.red.bits if coloring is not None else None
    return verdict, red, search.nodes, search.prunes


def _parallel(shape, n, length, options, deadline):
    depth = min(options.split_depth, shape.host_edge_count)
    prefixes = list(product((RED, BLUE), repeat=depth))
    # node_budget is a total over all tasks
    task_options = replace(options, node_budget=max(1, options.node_budget // len(prefixes)))
    nodes, prunes = 0, dict.fromkeys(PRUNE_REASONS, 0)
    verdicts, found_bits = [], None
    logger.info("splitting search into %d tasks over %d workers (%d nodes each)",
                len(prefixes), options.workers, task_options.node_budget)
    with multiprocessing.Manager() as manager:
        stop_event = manager.Event()
        with ProcessPoolExecutor(max_workers=options.workers) as pool:
            futures = [pool.submit(_run_task, shape.part_sizes, n, length, task_options,
                                   deadline, prefix, stop_event) for prefix in prefixes]
            for future in futures:
                verdict, red, task_nodes, task_prunes = future.result()
                nodes += task_nodes
                for reason, count in task_prunes.items():
                    prunes[reason] += count
                verdicts.append(verdict)
                if verdict is Verdict.GOOD_COLORING and found_bits is None:
                    found_bits = red
    if found_bits is not None:
        return Verdict.GOOD_COLORING, Coloring(shape, EdgeSet(shape, found_bits)), nodes, prunes
    if any(v is Verdict.BUDGET_EXCEEDED for v in verdicts):
        return Verdict.BUDGET_EXCEEDED, None, nodes, prunes
    return Verdict.EXHAUSTED, None, nodes, prunes


def find_good_coloring(shape, n, length=DEFAULT_CYCLE, options=None, limits=None):
    """
    Decide whether `shape` admits a coloring with no red nK_2 and no blue C_L.

    Args:
        shape: Host K_{j x t} (or a ragged PartiteShape)
        n: Forbidden red stripe size (>= 1)
        length: Forbidden blue cycle length
        options: SearchOptions; defaults to SearchOptions()
        limits: HostLimits to enforce; defaults to HostLimits()

    Returns:
        SearchResult with verdict GOOD_COLORING, EXHAUSTED or BUDGET_EXCEEDED
    """
    if n < 1:
        raise DomainError(f"stripe size must be at least 1, got {n}")
    if length < 3:
        raise DomainError(f"cycle length must be at least 3, got {length}")
    check_caps(shape, limits)
    options = options or SearchOptions()
    started = time.monotonic()
    deadline = started + options.time_budget

    if options.workers > 1 and shape.host_edge_count > options.split_depth:
        verdict, coloring, nodes, prunes = _parallel(shape, n, length, options, deadline)
    else:
        search = GoodColoringSearch(shape, n, length, options, deadline=deadline)
        verdict, coloring = search.run()
        nodes, prunes = search.nodes, search.prunes
    elapsed = time.monotonic() - started

    result = SearchResult(verdict, nodes_explored=nodes, prunes_by_reason=prunes, wall_time=elapsed)
    if verdict is Verdict.GOOD_COLORING:
        if not verify_good(coloring, n, length).is_good:
            raise RamseyError("search returned a coloring that fails verification")
        result.coloring = coloring
    elif verdict is Verdict.EXHAUSTED:
        result.certificate = ExhaustionCertificate(
            shape=shape, n=n, length=length, nodes_explored=nodes,
            prunes_by_reason=prunes, wall_time=elapsed, options=asdict(options))
    logger.info("search on %s, n=%d, L=%d: %s after %d nodes (%.2fs)",
                list(shape.part_sizes), n, length, verdict, nodes, elapsed)
    return result


@dataclass
class UpperBoundResult:
    """Outcome of certify_upper_bound."""
    j: int
    n: int
    t: int
    status: str                 # "exhausted" | "unverified" | "refuted"
    certificate: ExhaustionCertificate = None
    counterexample: Coloring = None
    reason: str = ""

    @property
    def verified(self):
        return self.status == "exhausted"


def certify_upper_bound(j, n, config=None, limits=None):
    """
    Machine-check m_j(nK_2, C_7) <= formula value by exhausting K_{j x m}.

    Hosts over the desk-scale cap are not searched and come back unverified.
    """
    config = config or CertifyConfig()
    result = ramsey_value(j, n)
    if result.value.is_infinite:
        raise DomainError(f"m_{j}({n}K_2, C_7) is infinite; no finite upper bound exists")
    t = result.value.t
    shape = PartiteShape.uniform(j, t)
    try:
        check_caps(shape, limits)
    except HostCapExceeded as e:
        return UpperBoundResult(j, n, t, "unverified", reason=str(e))
    if shape.host_edge_count > config.desk_max_host_edges:
        return UpperBoundResult(
            j, n, t, "unverified",
            reason=f"K_{{{j}x{t}}} has {shape.host_edge_count} edges, over the desk-scale cap "
                   f"of {config.desk_max_host_edges}")

    search = find_good_coloring(shape, n, DEFAULT_CYCLE, config.search, limits)
    if search.exhausted:
        return UpperBoundResult(j, n, t, "exhausted", certificate=search.certificate)
    if search.found:
        logger.error("good coloring found on K_{%dx%d} for n=%d: formula value %d is refuted",
                     j, t, n, t)
        return UpperBoundResult(j, n, t, "refuted", counterexample=search.coloring,
                                reason="search found a good coloring at t = formula value")
    return UpperBoundResult(j, n, t, "unverified",
                            reason=f"search budget exhausted after {search.nodes_explored} nodes")
