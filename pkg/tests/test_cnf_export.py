# tests/test_cnf_export.py

import json
from itertools import combinations

import pytest

from cnf_export import decode_model, disjoint_edge_sets, export_cnf, host_cycles, solve_cnf
from config import CnfConfig, HostLimits
from constructions import verify_good
from errors import ClauseCapExceeded, DomainError, HostCapExceeded
from host_model import PartiteShape
from oracles import small_shapes
from search import find_good_coloring


def test_complete_graph_on_eight_vertices():
    export = export_cnf(PartiteShape.uniform(8, 1), 2)
    assert export.num_vars == 28
    assert export.stripe_clauses == 210
    # 8 choices of the missing vertex times 6!/2 cyclic orders
    assert export.cycle_clauses == 8 * 360
    assert len(export.cnf.clauses) == 210 + 2880


def test_five_vertices_have_no_cycle_clauses():
    export = export_cnf(PartiteShape.uniform(5, 1), 2)
    assert export.cycle_clauses == 0
    assert export.stripe_clauses == 15
    coloring = solve_cnf(export)
    assert coloring is not None
    assert verify_good(coloring, 2).is_good


def test_cycle_clauses_are_distinct_cycles():
    shape = PartiteShape((2, 2, 2))
    cycles = list(host_cycles(shape, 4))
    assert len({frozenset(c) for c in cycles}) == len(cycles)
    for cycle in cycles:
        assert len(cycle) == 4
        endpoints = [x for e in cycle for x in shape.edges[e]]
        assert all(endpoints.count(x) == 2 for x in set(endpoints))


def test_disjoint_edge_sets_are_matchings():
    shape = PartiteShape((2, 1, 1))
    sets = list(disjoint_edge_sets(shape, 2))
    expected = [
        (a, b) for a, b in combinations(range(shape.host_edge_count), 2)
        if not set(shape.edges[a]) & set(shape.edges[b])
    ]
    assert sets == expected


def test_dimacs_text():
    export = export_cnf(PartiteShape.uniform(4, 1), 2, 3)
    text = export.to_dimacs()
    lines = text.splitlines()
    assert all(line.startswith("c ") for line in lines[:3])
    assert lines[3] == f"p cnf 6 {export.cycle_clauses + export.stripe_clauses}"
    assert all(line.endswith(" 0") for line in lines[4:])


def test_write_with_variable_map(tmp_path):
    shape = PartiteShape((2, 2))
    export = export_cnf(shape, 2, 4)
    dimacs_path, map_path = export.write(str(tmp_path / "k22.cnf"))
    assert map_path == dimacs_path + ".map.json"
    with open(map_path) as f:
        data = json.load(f)
    assert data["shape"] == {"parts": [2, 2]}
    assert data["variables"] == {"1": [0, 2], "2": [0, 3], "3": [1, 2], "4": [1, 3]}
    with open(dimacs_path) as f:
        assert "p cnf 4 3" in f.read()


def test_decode_model():
    shape = PartiteShape((2, 2))
    coloring = decode_model(shape, [1, -2, 3, -4, 9])
    assert coloring.red.pairs() == [(0, 2), (1, 2)]


def test_clause_cap():
    with pytest.raises(ClauseCapExceeded):
        export_cnf(PartiteShape.uniform(8, 1), 2, 7, CnfConfig(clause_cap=100))


def test_host_cap():
    with pytest.raises(HostCapExceeded):
        export_cnf(PartiteShape.uniform(8, 1), 2, 7, limits=HostLimits(max_vertices=7))


def test_stripe_size_must_be_positive():
    with pytest.raises(DomainError):
        export_cnf(PartiteShape((1, 1)), 0)


def test_unsatisfiable_formula():
    export = export_cnf(PartiteShape.uniform(6, 1), 2, 5)
    assert solve_cnf(export) is None


@pytest.mark.parametrize("sizes", [(2, 2, 2), (3, 3), (1,) * 6, (2, 2, 1, 1), (4, 2), (3, 2, 1)])
def test_satisfiability_matches_search(sizes):
    shape = PartiteShape(sizes)
    for n in (1, 2, 3):
        for length in (4, 5, 6):
            sat = solve_cnf(export_cnf(shape, n, length)) is not None
            assert sat == find_good_coloring(shape, n, length).found, (sizes, n, length)


@pytest.mark.slow
def test_satisfiability_matches_search_on_every_small_host():
    for shape in small_shapes(16, max_vertices=9):
        for n in (1, 2, 3):
            for length in (4, 5, 7):
                sat = solve_cnf(export_cnf(shape, n, length)) is not None
                assert sat == find_good_coloring(shape, n, length).found
