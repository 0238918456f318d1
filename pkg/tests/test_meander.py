import pytest

from hypermaps.errors import NotSpanning, PreconditionError
from hypermaps.meander import (
    MeanderDiagram,
    StampFolding,
    count_meanders,
    count_semimeanders,
    foldings_oracle,
    franz_view,
    meanders_oracle,
    nested_monopole,
    noncrossing_matchings,
    parallel_dipole,
    span_to_folding,
    span_to_meander,
)
from hypermaps.perm import parse_cycles
from hypermaps.spanning import spanning_hypertrees


def test_meander_counts_match_oracle():
    counts = [count_meanders(n) for n in range(1, 6)]
    assert counts == [len(meanders_oracle(n)) for n in range(1, 6)]
    assert counts == [1, 2, 8, 42, 262]


def test_small_meander_oracle_by_hand():
    assert meanders_oracle(1) == {MeanderDiagram(((1, 2),), ((1, 2),))}
    assert meanders_oracle(2) == {
        MeanderDiagram(((1, 2), (3, 4)), ((1, 4), (2, 3))),
        MeanderDiagram(((1, 4), (2, 3)), ((1, 2), (3, 4))),
    }


def test_semimeander_counts_match_oracle():
    counts = [count_semimeanders(n) for n in range(1, 9)]
    assert counts == [len(foldings_oracle(n - 1)) for n in range(1, 9)]
    assert counts == [1, 1, 2, 4, 10, 24, 66, 174]


def test_literal_sublist_rule_overcounts():
    """Forbidding only the two sublist shapes lets crossing foldings in."""
    literal = [len(foldings_oracle(k, rule="literal")) for k in range(8)]
    assert literal == [1, 1, 2, 5, 18, 70, 340, 1743]
    assert all(foldings_oracle(k) <= foldings_oracle(k, rule="literal") for k in range(6))


def test_folding_images_equal_oracle():
    for n in range(1, 8):
        host = nested_monopole(n).reciprocal()
        image = [span_to_folding(host, s.theta) for s in spanning_hypertrees(host)]
        assert len(set(image)) == len(image)
        assert set(image) == foldings_oracle(n - 1)


def test_meander_images_equal_oracle():
    for n in range(1, 6):
        host = parallel_dipole(n).reciprocal()
        image = [span_to_meander(host, s.theta) for s in spanning_hypertrees(host)]
        assert len(set(image)) == len(image)
        assert set(image) == meanders_oracle(n)


def test_worked_foldings():
    h5 = nested_monopole(5).reciprocal()
    assert h5.faces.format() == "(2,3)(4,5)"
    assert span_to_folding(h5, parse_cycles("(1,5,3)", 5)).perm == (1, 2, 3, 4, 5)
    h6 = nested_monopole(6).reciprocal()
    assert span_to_folding(h6, parse_cycles("(2,4)(3,6)", 6)).perm == (1, 4, 6, 5, 3, 2)


def test_worked_meander():
    h = parallel_dipole(4).reciprocal()
    assert h.faces.format() == "(1,2)(3,4)(5,6)(7,8)"
    m = span_to_meander(h, parse_cycles("(1,3,5)(4,6)", 8))
    assert m.is_valid()


def test_family_shapes():
    assert nested_monopole(4).sigma.format() == "(1,2,4,3)"
    assert nested_monopole(4).alpha.format() == "(1,2)(3,4)"
    d = parallel_dipole(3)
    assert d.sigma.format() == "(1,3,5)(2,6,4)"
    assert d.alpha.format() == "(1,6)(2,3)(4,5)"
    with pytest.raises(PreconditionError):
        nested_monopole(0)


def test_folding_validation():
    assert StampFolding((1, 2, 3)).is_valid()
    with pytest.raises(PreconditionError):
        StampFolding((2, 1, 3))
    with pytest.raises(NotSpanning):
        span_to_folding(nested_monopole(4).reciprocal(), parse_cycles("(1,4)(2,3)", 4))


def test_noncrossing_matchings_are_catalan():
    assert [sum(1 for _ in noncrossing_matchings(tuple(range(2 * k)))) for k in range(6)] == [1, 1, 2, 5, 14, 42]


def test_franz_view_pairs():
    n = 3
    host = parallel_dipole(n).reciprocal()
    for s in spanning_hypertrees(host):
        plain, primed = franz_view(n, s.theta)
        assert sorted(x for b in plain for x in b) == [1, 2, 3]
        assert sorted(x for b in primed for x in b) == [1, 2, 3]
