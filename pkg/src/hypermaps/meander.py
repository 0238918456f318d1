"""Nested monopoles, parallel dipoles, stamp foldings and meanders.

Spanning hypertrees of the reciprocal of a nested monopole read off as
stamp foldings, and those of the reciprocal of a parallel dipole as
meanders. Both directions are checked against direct enumerators that know
nothing about hypermaps.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .errors import NotSpanning, PreconditionError
from .hypermap import Hypermap
from .perm import Permutation
from .spanning import count_spanning_hypertrees, face_tour

__all__ = [
    "StampFolding",
    "MeanderDiagram",
    "nested_monopole",
    "parallel_dipole",
    "count_semimeanders",
    "count_meanders",
    "foldings_oracle",
    "meanders_oracle",
    "noncrossing_matchings",
    "span_to_folding",
    "span_to_meander",
    "franz_view",
]


def _arcs_cross(a: tuple, b: tuple) -> bool:
    (p, q), (r, s) = sorted(a), sorted(b)
    return p < r < q < s or r < p < s < q


def _folding_arcs(perm: tuple) -> tuple:
    """Upper arcs 2i--2i+1 and lower arcs 2i-1--2i, as position pairs."""
    pos = {x: k for k, x in enumerate(perm)}
    n = len(perm)
    upper = [(pos[x], pos[x + 1]) for x in range(2, n, 2)]
    lower = [(pos[x], pos[x + 1]) for x in range(1, n, 2)]
    return upper, lower


def _noncrossing(arcs: list) -> bool:
    return not any(_arcs_cross(arcs[i], arcs[j]) for i in range(len(arcs)) for j in range(i + 1, len(arcs)))


def _has_literal_sublist(perm: tuple) -> bool:
    """True if ``perm`` contains (2i,2j,2i+1,2j+1) or (2i-1,2j-1,2i,2j) as a
    (not necessarily contiguous) sublist."""
    pos = {x: k for k, x in enumerate(perm)}
    n = len(perm)
    for start in (2, 1):
        firsts = [a for a in range(start, n, 2)]
        for a in firsts:
            for b in firsts:
                if a != b and pos[a] < pos[b] < pos[a + 1] < pos[b + 1]:
                    return True
    return False


@dataclass(frozen=True)
class StampFolding:
    perm: tuple

    def __post_init__(self):
        p = tuple(self.perm)
        if sorted(p) != list(range(1, len(p) + 1)) or (p and p[0] != 1):
            raise PreconditionError(f"{p} is not a permutation list starting with 1")
        object.__setattr__(self, "perm", p)

    @property
    def order(self) -> int:
        return len(self.perm)

    def arcs(self) -> tuple:
        return _folding_arcs(self.perm)

    def is_valid(self) -> bool:
        upper, lower = self.arcs()
        return _noncrossing(upper) and _noncrossing(lower)

    def passes_literal_sublist_test(self) -> bool:
        return not _has_literal_sublist(self.perm)


@dataclass(frozen=True)
class MeanderDiagram:
    """Two perfect matchings on positions 1..2n, as sorted lists of arcs."""

    upper: tuple
    lower: tuple

    @property
    def order(self) -> int:
        return len(self.upper)

    def is_valid(self) -> bool:
        return (
            _is_matching(self.upper, 2 * self.order)
            and _is_matching(self.lower, 2 * self.order)
            and _noncrossing(list(self.upper))
            and _noncrossing(list(self.lower))
            and _single_loop(self.upper, self.lower)
        )

    def meandric_permutation(self) -> tuple:
        """Positions in the order the loop visits them, starting at 1 along
        its upper arc."""
        up = _partner(self.upper)
        low = _partner(self.lower)
        out = [1]
        x, use_upper = 1, True
        while True:
            x = up[x] if use_upper else low[x]
            use_upper = not use_upper
            if x == 1:
                return tuple(out)
            out.append(x)


def _partner(arcs) -> dict:
    d = {}
    for a, b in arcs:
        d[a], d[b] = b, a
    return d


def _is_matching(arcs, m: int) -> bool:
    pts = sorted(x for a in arcs for x in a)
    return pts == list(range(1, m + 1))


def _single_loop(upper, lower) -> bool:
    if not upper:
        return False
    up, low = _partner(upper), _partner(lower)
    x, steps = 1, 0
    while True:
        x = low[up[x]]
        steps += 1
        if x == 1:
            break
    return steps == len(upper)


# -- the two families of hypermaps -------------------------------------------


def nested_monopole(order: int) -> Hypermap:
    """Monopole with order/2 nested edges on ``order`` points.

    Even order 2m: vertex (2,4,...,2m,2m-1,...,3,1), edges (1,2)...(2m-1,2m).
    Odd order 2m+1: vertex (2,4,...,2m,2m+1,2m-1,...,3,1), edges
    (1,2)...(2m-1,2m) and the fixed point 2m+1.
    """
    if not isinstance(order, int) or order < 1:
        raise PreconditionError(f"order must be a positive integer (twice the number of edges), got {order!r}")
    m = order // 2
    evens = list(range(2, 2 * m + 1, 2))
    odds = list(range(2 * m - 1, 0, -2))
    vertex = evens + ([order] if order % 2 else []) + odds
    edges = [(2 * k - 1, 2 * k) for k in range(1, m + 1)]
    return Hypermap(
        Permutation.from_cycles([tuple(vertex)], order),
        Permutation.from_cycles(edges, order),
        name=f"nested monopole, order {order}",
    )


def parallel_dipole(n: int) -> Hypermap:
    """Dipole with ``n`` parallel edges on 2n points."""
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"number of edges must be a positive integer, got {n!r}")
    top = tuple(range(1, 2 * n, 2))
    bottom = tuple(range(2 * n, 0, -2))
    edges = [(2 * n, 1)] + [(2 * k, 2 * k + 1) for k in range(1, n)]
    return Hypermap(
        Permutation.from_cycles([top, bottom], 2 * n),
        Permutation.from_cycles(edges, 2 * n),
        name=f"parallel dipole, {n} edges",
    )


def count_semimeanders(n: int) -> int:
    return count_spanning_hypertrees(nested_monopole(n).reciprocal())


def count_meanders(n: int) -> int:
    return count_spanning_hypertrees(parallel_dipole(n).reciprocal())


# -- oracles -----------------------------------------------------------------


def foldings_oracle(k: int, rule: str = "arcs") -> set:
    """All foldings of ``k`` stamps, as lists of 1..k+1 starting with 1.

    ``rule="arcs"`` keeps lists whose upper arcs 2i--2i+1 and lower arcs
    2i-1--2i are each pairwise noncrossing. ``rule="literal"`` only forbids
    the sublists (2i,2j,2i+1,2j+1) and (2i-1,2j-1,2i,2j) read with 2i before
    2i+1, which lets some crossing arc pairs through.
    """
    if k < 0:
        raise PreconditionError("number of stamps must be nonnegative")
    if rule not in ("arcs", "literal"):
        raise ValueError(f"rule must be 'arcs' or 'literal', not {rule!r}")
    out = set()
    for rest in permutations(range(2, k + 2)):
        f = StampFolding((1,) + rest)
        ok = f.is_valid() if rule == "arcs" else f.passes_literal_sublist_test()
        if ok:
            out.add(f)
    return out


def noncrossing_matchings(points: tuple) -> Iterator[tuple]:
    """Noncrossing perfect matchings of consecutive ``points``, arcs in order."""
    if not points:
        yield ()
        return
    first = points[0]
    for k in range(1, len(points), 2):
        for inner in noncrossing_matchings(points[1:k]):
            for outer in noncrossing_matchings(points[k + 1 :]):
                yield ((first, points[k]),) + inner + outer


def meanders_oracle(n: int) -> set:
    """Pairs of noncrossing perfect matchings on 1..2n forming one loop."""
    if n < 1:
        raise PreconditionError("meander order must be positive")
    pts = tuple(range(1, 2 * n + 1))
    matchings = [tuple(sorted(m)) for m in noncrossing_matchings(pts)]
    return {MeanderDiagram(u, l) for u in matchings for l in matchings if _single_loop(u, l)}


# -- bijections --------------------------------------------------------------


def _listing(h: Hypermap, theta: Permutation) -> tuple:
    try:
        tour = face_tour(h, theta)
    except NotSpanning as e:
        raise NotSpanning(f"not a spanning hypertree: {e}") from None
    if h.genus != 0:
        raise PreconditionError("host must have genus 0")
    return tour.cycle.cycle_of(1)


def span_to_folding(h: Hypermap, theta: Permutation) -> StampFolding:
    """Read theta^-1 sigma from 1 as a folding list."""
    return StampFolding(_listing(h, theta))


def span_to_meander(h: Hypermap, theta: Permutation) -> MeanderDiagram:
    """Place the points along theta^-1 sigma read from 1; faces give the
    upper arcs and vertices the lower arcs."""
    order = _listing(h, theta)
    pos = {x: k for k, x in enumerate(order, 1)}

    def arcs(perm):
        return tuple(sorted(tuple(sorted((pos[a], pos[b]))) for a, b in perm.cycles(include_fixed=False)))

    return MeanderDiagram(arcs(h.faces), arcs(h.sigma))


def franz_view(n: int, theta: Permutation) -> tuple:
    """A spanning hypertree of the reciprocal dipole as two noncrossing
    partitions: relabel 2i+1 -> i (i < n), 1 -> n and 2i -> i'.

    Returns (unprimed blocks, primed blocks); primed blocks hold the
    integers i standing for i'.
    """
    if theta.n != 2 * n:
        raise PreconditionError(f"theta must act on {2 * n} points")

    def relabel(x):
        if x % 2 == 0:
            return ("'", x // 2)
        return ("", n if x == 1 else (x - 1) // 2)

    plain, primed = [], []
    for c in theta.cycles():
        labels = [relabel(x) for x in c]
        kinds = {k for k, _ in labels}
        if len(kinds) != 1:
            raise PreconditionError("a cycle of theta mixes odd and even points")
        block = tuple(v for _, v in labels)
        (primed if kinds == {"'"} else plain).append(block)
    return tuple(sorted(plain)), tuple(sorted(primed))
