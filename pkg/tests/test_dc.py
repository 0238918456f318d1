import pytest

import oracles
from conftest import H
from hypermaps.dc import (
    CONTRACTION,
    DELETION,
    DCOperation,
    allowable_trees,
    canonical_process,
    contract_step,
    delete_step,
    duality_transport,
    enumerate_dc_graphs,
    evaluate_polynomial,
    find_process,
    format_polynomial,
    format_trace,
    hypercontract,
    hyperdelete,
    is_allowable,
    map_edges,
    run_process,
    tutte_polynomial,
    validate_dc_graph,
)
from hypermaps.errors import Disconnects, Isthmus, NotAMap, NotDisconnecting, PreconditionError
from hypermaps.hypermap import Hypermap
from hypermaps.spanning import count_spanning_hypertrees

HEX_EDGES = [(1, 5), (5, 6), (2, 3), (1, 3), (3, 4)]
HEX_TRACE = """\
C (1,5) topo=+ genus=1
C (5,6) topo=+ genus=1
C (2,3) topo=+ genus=1
D (3,4) topo=- genus=0
D (1,3) topo=+ genus=0
"""


def test_hyperdelete_and_hypercontract(example):
    h = example("three_trees")
    d = hyperdelete(h, (1, 2))
    assert d.alpha.format() == "(1,3)(4,5)" and d.sigma == h.sigma
    c = hypercontract(h, (1, 2))
    assert c.sigma.format() == "(1,4,2,5)" and c.alpha.format() == "(2,3)(4,5)"


def test_contraction_of_a_chord():
    h = Hypermap.parse("(1,2,3,4)", "(1,3)(2,4)", 4)
    c = hypercontract(h, (1, 3))
    assert c.sigma.format() == "(1,2)(3,4)" and c.alpha.format() == "(2,4)"
    with pytest.raises(Disconnects):
        hypercontract(Hypermap.parse("(1,2,3,4)", "(1,2)(3,4)", 4), (1, 2))


def test_step_errors(example):
    with pytest.raises(NotDisconnecting):
        hyperdelete(example("three_trees"), (1, 4))
    with pytest.raises(Isthmus):
        hyperdelete(example("edge"), (1, 2))


def test_topological_iff_genus_preserved():
    rng = oracles.rng(11)
    done = 0
    while done < 500:
        h = H(*oracles.random_pair(rng, rng.randint(2, 9)))
        cyc = [c for c in h.alpha.cycles(include_fixed=False)]
        if not cyc:
            continue
        c = cyc[rng.randrange(len(cyc))]
        i, j = rng.sample(c, 2)
        for step in (delete_step, contract_step):
            try:
                r = step(h, (i, j))
            except PreconditionError:
                continue
            assert r.genus_change in (0, -1)
            assert r.topological == (r.genus_change == 0)
        done += 1


def test_duality_transport():
    rng = oracles.rng(12)
    for _ in range(500):
        h = H(*oracles.random_pair(rng, rng.randint(2, 9)))
        i, j = rng.sample(range(1, h.n + 1), 2)
        assert duality_transport(h, (i, j)).holds


def test_hexagon_graph_and_trace(example):
    h = example("hexagon")
    assert validate_dc_graph(h, HEX_EDGES)
    trees = list(allowable_trees(h, HEX_EDGES))
    assert {frozenset(map(str, t)) for t in trees} == {frozenset({"(2,3)", "(5,6)", "(1,5)"})}
    proc = canonical_process(h, HEX_EDGES, trees[0])
    result = run_process(h, proc)
    assert format_trace(result.trace) == HEX_TRACE
    assert result.final.sigma.cycle_count() == 1 and result.final.alpha.is_identity()


def test_dc_graph_counts(example):
    assert sum(1 for _ in enumerate_dc_graphs(example("hexagon"))) == 149
    assert sum(1 for _ in enumerate_dc_graphs(example("three_trees"))) == 3


def test_allowable_orientation(example):
    h = example("hexagon")
    tree = next(allowable_trees(h, HEX_EDGES))
    assert is_allowable(h, HEX_EDGES, tree)
    assert not is_allowable(h, HEX_EDGES, [(1, 3), (5, 6), (1, 5)])


def test_run_process_reports_failing_step(example):
    h = example("three_trees")
    with pytest.raises(PreconditionError, match="step 0"):
        run_process(h, [DCOperation(DELETION, (1, 4))])
    with pytest.raises(PreconditionError):
        run_process(h, [DCOperation(CONTRACTION, (2, 3))])


def test_dc_graphs_match_process_oracle_small():
    for n in range(1, 6):
        for s, a in oracles.all_pairs(n):
            h = H(s, a)
            valid = set()
            for es in oracles.locally_tree_like_sets(a):
                v = validate_dc_graph(h, es)
                assert v == oracles.dc_process_exists(s, a, es), (s, a, sorted(es))
                if v:
                    valid.add(es)
            found = {frozenset((e.i, e.j) for e in g.edges) for g in enumerate_dc_graphs(h)}
            assert found == valid


def test_canonical_process_runs_for_every_graph():
    rng = oracles.rng(13)
    for _ in range(60):
        h = H(*oracles.random_pair(rng, rng.randint(2, 6)))
        for g in enumerate_dc_graphs(h):
            tree = next(allowable_trees(h, g.edges))
            run_process(h, canonical_process(h, g, tree))


def test_find_process_agrees_with_oracle(example):
    h = example("hexagon")
    s, a = h.sigma.images, h.alpha.images
    ops = find_process(h, HEX_EDGES)
    assert ops is not None
    run_process(h, ops)
    path = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]
    assert (find_process(h, path) is not None) == oracles.dc_process_exists(s, a, path) == validate_dc_graph(h, path)


# -- Tutte polynomial -------------------------------------------------------------


def test_triangle_polynomial(example):
    h = example("triangle")
    poly = tutte_polynomial(h)
    assert poly == {(2, 0): 1, (1, 0): 1, (0, 1): 1}
    assert format_polynomial(poly) == ["x^0 y^1: 1", "x^1 y^0: 1", "x^2 y^0: 1"]


def test_tutte_needs_a_map(example):
    with pytest.raises(NotAMap):
        tutte_polynomial(example("three_trees"))


def _random_maps(seed, count):
    rng = oracles.rng(seed)
    out = []
    while len(out) < count:
        s, a = oracles.random_map_pair(rng, rng.choice((2, 4, 6, 8)))
        out.append((s, a))
    return rng, out


def test_tutte_against_oracles():
    _, maps = _random_maps(14, 50)
    for s, a in maps:
        h = H(s, a)
        poly = tutte_polynomial(h)
        nv, edges = oracles.map_graph(s, a)
        assert evaluate_polynomial(poly, 1, 1) == oracles.spanning_tree_count(nv, edges) == count_spanning_hypertrees(h)
        assert evaluate_polynomial(poly, 2, 2) == 2 ** len(edges)
        assert poly == oracles.tutte_by_deletion_contraction(nv, edges)


def test_tutte_numbering_invariance():
    rng, maps = _random_maps(15, 20)
    for s, a in maps:
        h = H(s, a)
        base = tutte_polynomial(h)
        edges = map_edges(h)
        for _ in range(20):
            rng.shuffle(edges)
            assert tutte_polynomial(h, edges) == base
