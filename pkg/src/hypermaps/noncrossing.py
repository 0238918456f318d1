"""Refinements of permutations and noncrossing partitions of a cycle.

A permutation ``theta`` refines ``gamma`` when every cycle of ``gamma`` is
replaced by a noncrossing partition of its points, each block written as a
cycle in the circular order of the host cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .errors import PreconditionError
from .perm import Permutation

__all__ = [
    "NoncrossingPartition",
    "noncrossing_partitions",
    "is_noncrossing",
    "is_refinement",
    "refinements",
    "count_refinements",
    "catalan",
    "kreweras_complement",
    "noncrossing_trees",
    "crosses",
]


def catalan(m: int) -> int:
    c = 1
    for k in range(m):
        c = c * 2 * (2 * k + 1) // (k + 2)
    return c


@dataclass(frozen=True)
class NoncrossingPartition:
    """Blocks of a noncrossing partition of ``host`` (a cycle, as a tuple).

    Each block lists its points in the circular order of ``host``
    starting from the block's first point in that order.
    """

    host: tuple
    parts: tuple

    def __post_init__(self):
        pts = sorted(x for b in self.parts for x in b)
        if pts != sorted(self.host):
            raise PreconditionError("blocks do not partition the host cycle")
        pos = {x: k for k, x in enumerate(self.host)}
        labels = {}
        for k, b in enumerate(self.parts):
            for x in b:
                labels[pos[x]] = k
        if _has_crossing([labels[k] for k in range(len(self.host))]):
            raise PreconditionError("blocks cross in the host's circular order")

    def as_permutation(self, n: int) -> Permutation:
        return Permutation.from_cycles(self.parts, n)


def _has_crossing(labels: Sequence[int]) -> bool:
    # labels[k] is the block of the k-th point; scan with a stack of open blocks
    last = {}
    for k, b in enumerate(labels):
        last[b] = k
    stack = []
    for k, b in enumerate(labels):
        if stack and stack[-1] == b:
            if last[b] == k:
                stack.pop()
            continue
        if b in stack:
            return True
        if last[b] != k:
            stack.append(b)
    return False


def _nc_blocks(seq: tuple) -> Iterator[list]:
    """Noncrossing partitions of ``seq`` (linear order), blocks in order.

    Recursion on the next element sharing a block with ``seq[0]``: none,
    then ``seq[1]``, ``seq[2]``, ...
    """
    m = len(seq)
    if m == 0:
        yield []
        return
    head = seq[0]
    for rest in _nc_blocks(seq[1:]):
        yield [(head,)] + rest
    for k in range(1, m):
        for inner in _nc_blocks(seq[1:k]):
            for outer in _nc_blocks(seq[k:]):
                # outer[0] is the block of seq[k]
                yield [(head,) + outer[0]] + inner + outer[1:]


def noncrossing_partitions(host: Sequence[int]) -> Iterator[NoncrossingPartition]:
    host = tuple(host)
    for blocks in _nc_blocks(host):
        yield NoncrossingPartition(host, tuple(blocks))


def _cycle_refinement_images(cyc: tuple) -> list:
    """Per host cycle, each refinement as a tuple of (point, image) pairs."""
    out = []
    for blocks in _nc_blocks(cyc):
        pairs = []
        for b in blocks:
            for a, c in zip(b, b[1:] + b[:1]):
                pairs.append((a, c))
        out.append(tuple(pairs))
    return out


def refinements(gamma: Permutation) -> Iterator[Permutation]:
    """Every refinement of ``gamma``, in a fixed canonical order.

    The Cartesian product runs over the cycles of ``gamma`` sorted by their
    minimum; within a cycle the order is that of ``noncrossing_partitions``.
    """
    n = gamma.n
    factors = [_cycle_refinement_images(c) for c in gamma.cycles() if len(c) > 1]
    base = list(range(1, n + 1))
    for choice in product(*factors):
        img = base[:]
        for pairs in choice:
            for a, c in pairs:
                img[a - 1] = c
        yield Permutation(img, check=False)


def count_refinements(gamma: Permutation) -> int:
    total = 1
    for c in gamma.cycles():
        total *= catalan(len(c))
    return total


def is_refinement(theta: Permutation, gamma: Permutation) -> bool:
    """Two-condition test: ``i`` and ``theta(i)`` share a cycle of ``gamma``,
    and z(theta^-1 gamma) + z(theta) == n + z(gamma)."""
    if theta.n != gamma.n:
        return False
    idx = gamma.cycle_index()
    for x, y in enumerate(theta.images, 1):
        if idx[x] != idx[y]:
            return False
    n = gamma.n
    return (theta.inverse() * gamma).cycle_count() + theta.cycle_count() == n + gamma.cycle_count()


def is_noncrossing(host: Sequence[int], theta_part: Permutation) -> bool:
    """Whether the cycles of ``theta_part`` on the points of ``host`` form a
    noncrossing partition with blocks oriented along ``host``.

    ``theta_part`` must move only points of ``host``.
    """
    host = tuple(host)
    pts = set(host)
    for x in range(1, theta_part.n + 1):
        if x not in pts and theta_part(x) != x:
            raise PreconditionError(f"point {x} is moved but not on the host cycle")
    if len(pts) != len(host):
        raise PreconditionError("host cycle repeats a point")
    n = theta_part.n
    host_perm = Permutation.from_cycles([host], n) if host else Permutation.identity(n)
    return is_refinement(theta_part, host_perm)


def kreweras_complement(alpha: Permutation, gamma: Permutation) -> Permutation:
    """Return ``delta = alpha^-1 gamma^-1`` so that gamma * alpha * delta = id.

    Requires ``gamma * alpha`` to refine ``alpha``.
    """
    if not is_refinement(gamma * alpha, alpha):
        raise PreconditionError("gamma * alpha is not a refinement of alpha")
    return alpha.inverse() * gamma.inverse()


def crosses(order: dict, e: tuple, f: tuple) -> bool:
    """Whether chords ``e`` and ``f`` cross; ``order`` maps points to circle positions."""
    a, b = sorted((order[e[0]], order[e[1]]))
    c, d = sorted((order[f[0]], order[f[1]]))
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def noncrossing_trees(points: Sequence[int]) -> Iterator[tuple]:
    """Noncrossing spanning trees on ``points`` placed on a circle in the given order.

    Each tree is a tuple of (u, v) pairs with u < v, sorted. Depth-first
    search over candidate chords with crossing and cycle pruning.
    """
    points = tuple(points)
    m = len(points)
    if m <= 1:
        yield ()
        return
    order = {x: k for k, x in enumerate(points)}
    chords = [tuple(sorted((points[a], points[b]))) for a in range(m) for b in range(a + 1, m)]
    chords.sort(key=lambda e: (order[e[0]], order[e[1]]) if order[e[0]] < order[e[1]] else (order[e[1]], order[e[0]]))
    need = m - 1
    total = len(chords)

    parent = {x: x for x in points}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    chosen = []

    def dfs(k):
        if len(chosen) == need:
            yield tuple(sorted(chosen))
            return
        if total - k < need - len(chosen):
            return
        e = chords[k]
        ru, rv = find(e[0]), find(e[1])
        if ru != rv and not any(crosses(order, e, f) for f in chosen):
            parent[ru] = rv
            chosen.append(e)
            yield from dfs(k + 1)
            chosen.pop()
            parent[ru] = ru
        yield from dfs(k + 1)

    yield from dfs(0)
