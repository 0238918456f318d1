import pytest

import oracles
from conftest import H
from hypermaps.errors import NotSpanning, PreconditionError
from hypermaps.hypermap import Hypermap, genus_of
from hypermaps.noncrossing import is_refinement
from hypermaps.perm import Permutation, parse_cycles
from hypermaps.spanning import (
    complexity,
    count_spanning,
    count_spanning_hypertrees,
    count_via_recursion,
    dual_span,
    face_tour,
    first_branch_index,
    in_face_set,
    in_vertex_set,
    is_compatible_tours,
    machi_set,
    one_line_conditions,
    one_line_diagram,
    recursion_branches,
    spanning_hypertrees,
    spanning_unicellular,
    two_disk_diagram,
    vertex_tour,
)


def pc(text, n):
    return parse_cycles(text, n)


def test_three_trees_exact_set(example):
    h = example("three_trees")
    thetas = {s.theta.format() for s in spanning_hypertrees(h)}
    assert thetas == {"(1,2,3)", "(2,3)(4,5)", "(1,3)(4,5)"}
    assert count_via_recursion(h, 0) == 3


def test_torus_counts(example):
    h = example("torus9")
    assert h.genus == 1
    assert count_spanning_hypertrees(h) == 21
    assert count_via_recursion(h, 0) == 21
    assert len(oracles.spanning_oracle(h.sigma.images, h.alpha.images, 0)) == 21
    assert complexity(h) == count_via_recursion(h, 1) == 21


def test_torus_single_block_span_has_genus_zero(example):
    h = example("torus9")
    theta = pc("(1,2,3)", 9)
    face = theta.inverse() * h.sigma
    assert face.format() == "(1,4,7,3,6,9,2,5,8)"
    assert genus_of(h.sigma, theta) == 0
    with pytest.raises(NotSpanning):
        face_tour(h, theta)  # a hypertree, not a genus 1 span


def test_torus_compatible_tours(example):
    h = example("torus9")
    eta = vertex_tour(h, pc("(1,2)(5,6)", 9)).cycle
    zeta = face_tour(h, pc("(1,2)(5,6)(7,8,9)", 9)).cycle
    assert eta.format() == "(1,4,7,2,6,9,3,5,8)"
    assert zeta.format() == "(1,4,9,3,5,7,2,6,8)"
    assert (eta * zeta.inverse()).format() == "(7,8,9)"
    assert is_compatible_tours(h, eta, zeta)


def test_planar_face_tour():
    h = Hypermap.parse("(1,2,3)(4,5,6)(7,8,9,10)(11,12)", "(1,6)(2,11,9,5)(3,7)(4,10)(8,12)", 12)
    zeta = face_tour(h, pc("(2,9)(4,10)(8,12)", 12))
    assert zeta.listing() == (1, 9, 4, 5, 6, 10, 7, 12, 11, 8, 2, 3)


def test_bernardi_tours(example):
    h = example("bernardi")
    eta = vertex_tour(h, pc("(1,7)(2,8)(4,10)", 12))
    zeta = face_tour(h, pc("(1,7)(2,8)(3,9)(4,10)(6,12)", 12))
    assert eta.listing() == (1, 10, 4, 8, 11, 9, 2, 12, 7, 3, 6, 5)
    assert zeta.listing() == (1, 10, 4, 8, 11, 3, 12, 7, 9, 2, 6, 5)
    assert is_compatible_tours(h, eta.cycle, zeta.cycle)
    assert (eta.cycle * zeta.cycle.inverse()).format() == "(3,9)(6,12)"
    assert eta.cycle in machi_set(h, "vertex")
    d = two_disk_diagram(h, eta.cycle, zeta.cycle).to_dict()
    assert d["bipole_edges"] == [[3, 9], [6, 12]]
    assert d["genus"] == 1


def test_single_edge_sets(example):
    h = example("edge")
    assert machi_set(h, "face") == machi_set(h, "vertex") == {pc("(1,2)", 2)}


def test_tour_errors(example):
    h = example("bernardi")
    with pytest.raises(PreconditionError):
        is_compatible_tours(h, Permutation.identity(12), Permutation.identity(12))
    with pytest.raises(NotSpanning):
        face_tour(h, pc("(1,2)", 12))
    with pytest.raises(ValueError):
        machi_set(h, "edge")


def test_spans_are_refinements_and_unicellular():
    rng = oracles.rng(4)
    for _ in range(100):
        n = rng.randint(1, 8)
        h = H(*oracles.random_pair(rng, n))
        for g in range(h.genus + 1):
            for s in spanning_unicellular(h, g):
                assert is_refinement(s.theta, h.alpha)
                assert s.face_tour.is_circular()
                assert genus_of(h.sigma, s.theta) == g


def test_recursion_matches_brute_force_and_oracle():
    rng = oracles.rng(5)
    for trial in range(500):
        n = rng.randint(1, 9)
        s, a = oracles.random_pair(rng, n)
        h = H(s, a)
        g = rng.randint(0, h.genus)
        brute = count_spanning(h, g)
        assert count_via_recursion(h, g) == brute
        if n <= 7:
            assert len(oracles.spanning_oracle(s, a, g)) == brute


def _branch_check(s, a):
    h = H(s, a)
    if h.alpha.is_identity():
        return
    c = max(h.alpha.cycles(include_fixed=False), key=len)
    for g in range(h.genus + 1):
        groups = {}
        for sp in spanning_unicellular(h, g):
            k = first_branch_index(sp.theta, c)
            groups[k] = groups.get(k, 0) + 1
        branch = {k: count_spanning(Hypermap(sk, ak), gk) for k, sk, ak, gk in recursion_branches(h.sigma, h.alpha, g, c)}
        branch = {k: v for k, v in branch.items() if v}
        assert groups == branch, (s, a, g)


def test_branch_classification_exhaustive_small():
    for n in range(1, 7):
        for s, a in oracles.all_pairs(n):
            _branch_check(s, a)


def test_branch_classification_sampled_up_to_eight():
    rng = oracles.rng(6)
    for _ in range(150):
        _branch_check(*oracles.random_pair(rng, rng.randint(6, 8)))


def _machi_check(s, a):
    h = H(s, a)
    spans = list(spanning_unicellular(h, h.genus))
    images = {sp.face_tour for sp in spans}
    assert len(images) == len(spans)  # injective
    by_definition = {Permutation(c) for c in oracles.circular_perms(h.n) if in_face_set(h, Permutation(c))}
    assert images == by_definition
    trees = {sp.face_tour for sp in spanning_hypertrees(h)}
    assert trees == {Permutation(c) for c in oracles.circular_perms(h.n) if in_vertex_set(h, Permutation(c))}


def test_machi_exhaustive_small():
    for n in range(1, 7):
        for s, a in oracles.all_pairs(n):
            _machi_check(s, a)


def test_machi_sampled_up_to_seven():
    rng = oracles.rng(7)
    for _ in range(150):
        _machi_check(*oracles.random_pair(rng, 7))


def test_dual_span_genus_sum():
    rng = oracles.rng(8)
    done = 0
    while done < 500:
        h = H(*oracles.random_pair(rng, rng.randint(1, 9)))
        g = rng.randint(0, h.genus)
        spans = list(spanning_unicellular(h, g))
        if not spans:
            continue
        sp = spans[rng.randrange(len(spans))]
        d = dual_span(h, sp.theta)
        assert d.genus + sp.genus == h.genus
        back = dual_span(h.dual(), d.theta)
        assert back.host.pair == h.pair and back.theta == sp.theta
        done += 1


def test_genus_zero_tours_coincide():
    rng = oracles.rng(9)
    seen = 0
    while seen < 50:
        h = H(*oracles.random_pair(rng, rng.randint(2, 8)))
        if h.genus:
            continue
        for sp in spanning_hypertrees(h):
            assert face_tour(h, sp.theta).cycle == vertex_tour(h, sp.theta.inverse()).cycle
        seen += 1


def _one_line_check(h):
    tours = {sp.face_tour for sp in spanning_hypertrees(h)}
    for sp in spanning_hypertrees(h):
        assert one_line_diagram(h, sp.theta).is_noncrossing()
    passing = {Permutation(c) for c in oracles.circular_perms(h.n) if one_line_conditions(h, Permutation(c))}
    assert passing == tours


def test_one_line_characterization():
    for n in range(1, 6):
        for s, a in oracles.all_pairs(n):
            h = H(s, a)
            if h.genus == 0:
                _one_line_check(h)
    rng = oracles.rng(10)
    count = 0
    while count < 30:
        h = H(*oracles.random_pair(rng, rng.randint(6, 7)))
        if h.genus == 0:
            _one_line_check(h)
            count += 1


def test_one_line_diagram_dict():
    h = Hypermap.parse("(1,2,3)(4,5,6)(7,8,9,10)(11,12)", "(1,6)(2,11,9,5)(3,7)(4,10)(8,12)", 12)
    d = one_line_diagram(h, pc("(2,9)(4,10)(8,12)", 12)).to_dict()
    assert d["order"] == [1, 9, 4, 5, 6, 10, 7, 12, 11, 8, 2, 3]
    assert [1, 5] in d["upper_arcs"]
