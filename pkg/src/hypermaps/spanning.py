"""Spanning unicellular hypermaps, spanning hypertrees and their tours.

``(sigma, theta)`` spans ``(sigma, alpha)`` when ``theta`` refines ``alpha``.
A spanning structure is unicellular when ``theta^-1 sigma`` is a single
cycle (the face tour); a spanning hypertree is a unicellular span of genus 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import NotSpanning, PreconditionError
from .hypermap import Hypermap, genus_of, is_transitive
from .noncrossing import _has_crossing, is_refinement, refinements
from .perm import Permutation

__all__ = [
    "SpanningStructure",
    "Tour",
    "OneLineDiagram",
    "TwoDiskDiagram",
    "spanning_unicellular",
    "spanning_hypertrees",
    "count_spanning",
    "count_spanning_hypertrees",
    "complexity",
    "count_via_recursion",
    "recursion_branches",
    "first_branch_index",
    "face_tour",
    "vertex_tour",
    "in_face_set",
    "in_vertex_set",
    "machi_set",
    "dual_span",
    "is_compatible_tours",
    "one_line_diagram",
    "one_line_conditions",
    "two_disk_diagram",
]


@dataclass(frozen=True)
class SpanningStructure:
    host: Hypermap = field(repr=False)
    theta: Permutation
    genus: int
    face_tour: Permutation

    @property
    def is_hypertree(self) -> bool:
        return self.genus == 0


@dataclass(frozen=True)
class Tour:
    kind: str  # "face" or "vertex"
    cycle: Permutation

    def __post_init__(self):
        if self.kind not in ("face", "vertex"):
            raise ValueError(f"unknown tour kind {self.kind!r}")
        if not self.cycle.is_circular():
            raise PreconditionError(f"{self.kind} tour {self.cycle} is not circular")

    def listing(self, start: int = 1) -> tuple:
        return self.cycle.cycle_of(start)


def _unicellular_genus(sigma: Permutation, theta: Permutation) -> Optional[int]:
    """Genus of (sigma, theta) if theta^-1 sigma is circular, else None."""
    face = theta.inverse() * sigma
    if not face.is_circular():
        return None
    return (sigma.n + 1 - sigma.cycle_count() - theta.cycle_count()) // 2


def spanning_unicellular(h: Hypermap, g: int) -> Iterator[SpanningStructure]:
    """Genus ``g`` unicellular hypermaps spanning ``h``, in refinement order.

    Brute force over ``refinements(h.alpha)``.
    """
    sigma = h.sigma
    n = h.n
    if n == 0:
        return
    zs = sigma.cycle_count()
    target = n + 1 - zs - 2 * g
    for theta in refinements(h.alpha):
        if theta.cycle_count() != target:
            continue
        face = theta.inverse() * sigma
        if face.is_circular():
            yield SpanningStructure(h, theta, g, face)


def spanning_hypertrees(h: Hypermap) -> Iterator[SpanningStructure]:
    return spanning_unicellular(h, 0)


def count_spanning(h: Hypermap, g: int) -> int:
    return sum(1 for _ in spanning_unicellular(h, g))


def count_spanning_hypertrees(h: Hypermap) -> int:
    return count_spanning(h, 0)


def complexity(h: Hypermap) -> int:
    """Number of unicellular spans whose genus equals the genus of ``h``."""
    return count_spanning(h, h.genus)


# -- recursive count ------------------------------------------------------


def _pivot_cycle(alpha: Permutation) -> Optional[tuple]:
    best = None
    for c in alpha.cycles(include_fixed=False):
        if best is None or len(c) < len(best):
            best = c
    return best


def recursion_branches(sigma: Permutation, alpha: Permutation, g: int, cycle: Optional[tuple] = None):
    """The reduced pairs of the disjoint-union decomposition.

    Yields ``(k, sigma_k, alpha_k, g_k)`` for k = 1..m along the nontrivial
    alpha-cycle ``(a_1, ..., a_m)`` (by default the shortest one). Branches
    whose pair is intransitive are skipped; their set is empty.
    """
    c = cycle if cycle is not None else _pivot_cycle(alpha)
    if c is None:
        return
    a1, am = c[0], c[-1]
    alpha1 = alpha.swap_right(a1, am)
    if is_transitive(sigma, alpha1):
        yield 1, sigma, alpha1, g
    for k in range(2, len(c) + 1):
        ak = c[k - 1]
        sig_k = sigma.swap_left(a1, ak)
        alp_k = alpha.swap_left(a1, ak)
        if k >= 3:
            alp_k = alp_k.swap_right(a1, c[k - 2])
        if not is_transitive(sig_k, alp_k):
            continue
        g_k = g if sigma.connects(a1, ak) else g - 1
        yield k, sig_k, alp_k, g_k


def count_via_recursion(h: Hypermap, g: int) -> int:
    """Count genus-``g`` unicellular spans by repeated hyperdeletion and
    hypercontraction on one hyperedge; exact-pair memoization."""
    memo: dict = {}

    def count(sigma: Permutation, alpha: Permutation, g: int) -> int:
        if g < 0:
            return 0
        key = (sigma, alpha, g)
        if key in memo:
            return memo[key]
        if 2 * g > sigma.n + 2 - sigma.cycle_count() - alpha.cycle_count() - (alpha.inverse() * sigma).cycle_count():
            result = 0
        elif alpha.is_identity():
            result = 1 if sigma.cycle_count() == 1 and genus_of(sigma, alpha) == g else 0
        else:
            result = sum(count(s, a, gk) for _, s, a, gk in recursion_branches(sigma, alpha, g))
        memo[key] = result
        return result

    if h.n == 0:
        return 0
    return count(h.sigma, h.alpha, g)


def first_branch_index(theta: Permutation, cycle: tuple) -> int:
    """Index k of the branch that contains ``theta`` for the hyperedge ``cycle``.

    1 if ``cycle[0]`` is fixed by ``theta``; otherwise the position (1-based)
    along ``cycle`` of the next point sharing a theta-cycle with ``cycle[0]``.
    """
    a1 = cycle[0]
    if theta(a1) == a1:
        return 1
    mine = set(theta.cycle_of(a1))
    for k, x in enumerate(cycle[1:], 2):
        if x in mine:
            return k
    raise PreconditionError("theta does not refine the given cycle")


# -- tours ----------------------------------------------------------------


def _check_span(h: Hypermap, theta: Permutation, genus: Optional[int]) -> int:
    if not is_refinement(theta, h.alpha):
        raise NotSpanning(f"{theta} is not a refinement of alpha")
    g = _unicellular_genus(h.sigma, theta)
    if g is None:
        raise NotSpanning(f"(sigma, {theta}) is not unicellular")
    if genus is not None and g != genus:
        raise NotSpanning(f"(sigma, {theta}) has genus {g}, expected {genus}")
    return g


def face_tour(h: Hypermap, theta: Permutation) -> Tour:
    """``theta^-1 sigma`` for a genus-g unicellular span, g the genus of ``h``."""
    _check_span(h, theta, h.genus)
    return Tour("face", theta.inverse() * h.sigma)


def vertex_tour(h: Hypermap, gamma: Permutation) -> Tour:
    """``gamma sigma`` where ``(sigma, gamma^-1)`` is a spanning hypertree."""
    _check_span(h, gamma.inverse(), 0)
    return Tour("vertex", gamma * h.sigma)


def in_face_set(h: Hypermap, zeta: Permutation) -> bool:
    """Direct membership test for the face-tour set: zeta circular,
    g(sigma, zeta) = g(sigma, alpha^-1 sigma) and g(alpha^-1 sigma, zeta) = 0."""
    if not zeta.is_circular():
        return False
    return genus_of(h.sigma, zeta) == genus_of(h.sigma, h.faces) and genus_of(h.faces, zeta) == 0


def in_vertex_set(h: Hypermap, eta: Permutation) -> bool:
    """Direct membership test for the vertex-tour set: eta circular,
    g(alpha^-1 sigma, eta) = g(sigma, alpha) and g(sigma, eta) = 0."""
    if not eta.is_circular():
        return False
    return genus_of(h.faces, eta) == h.genus and genus_of(h.sigma, eta) == 0


def machi_set(h: Hypermap, mode: str = "face") -> set:
    """Image of the spans under theta -> theta^-1 sigma (face mode, genus g
    spans) or gamma -> gamma sigma (vertex mode, spanning hypertrees)."""
    if mode == "face":
        return {s.face_tour for s in spanning_unicellular(h, h.genus)}
    if mode == "vertex":
        # gamma = theta^-1, so gamma sigma is again theta^-1 sigma
        return {s.face_tour for s in spanning_unicellular(h, 0)}
    raise ValueError(f"mode must be 'face' or 'vertex', not {mode!r}")


def dual_span(h: Hypermap, theta: Permutation) -> SpanningStructure:
    """Transport a unicellular span of ``h`` to the dual: theta -> alpha^-1 theta."""
    _check_span(h, theta, None)
    d = h.dual()
    theta_d = h.alpha.inverse() * theta
    g = _check_span(d, theta_d, None)
    return SpanningStructure(d, theta_d, g, theta_d.inverse() * d.sigma)


def is_compatible_tours(h: Hypermap, eta: Permutation, zeta: Permutation) -> bool:
    if not eta.is_circular() or not zeta.is_circular():
        raise PreconditionError("tours must be circular permutations")
    if not (in_vertex_set(h, eta) and in_face_set(h, zeta)):
        return False
    return genus_of(eta, eta * zeta.inverse()) == h.genus


# -- diagrams -------------------------------------------------------------


def _blocks_in_order(perm: Permutation, pos: dict) -> list:
    """Cycles of ``perm`` rotated to start at their leftmost position,
    sorted by that position."""
    out = []
    for c in perm.cycles():
        k = min(range(len(c)), key=lambda i: pos[c[i]])
        out.append(c[k:] + c[:k])
    out.sort(key=lambda b: pos[b[0]])
    return out


def _oriented_noncrossing(blocks: list, pos: dict) -> bool:
    labels = [0] * len(pos)
    for b, block in enumerate(blocks):
        seq = [pos[x] for x in block]
        if seq != sorted(seq):
            return False
        for p in seq:
            labels[p] = b
    return not _has_crossing(labels)


@dataclass(frozen=True)
class OneLineDiagram:
    order: tuple
    upper_arcs: tuple  # blocks of alpha^-1 sigma
    lower_arcs: tuple  # blocks of sigma

    def positions(self) -> dict:
        return {x: k for k, x in enumerate(self.order)}

    def is_noncrossing(self) -> bool:
        pos = self.positions()
        return _oriented_noncrossing(list(self.upper_arcs), pos) and _oriented_noncrossing(list(self.lower_arcs), pos)

    def to_dict(self) -> dict:
        return {
            "kind": "one-line",
            "order": list(self.order),
            "upper_arcs": [list(b) for b in self.upper_arcs],
            "lower_arcs": [list(b) for b in self.lower_arcs],
            "shading": {"upper": "faces", "lower": "vertices"},
        }


def one_line_conditions(h: Hypermap, zeta: Permutation) -> bool:
    """Both arc families of the listing of ``zeta`` from 1 are noncrossing,
    with each block read left to right along its cycle."""
    if not zeta.is_circular():
        return False
    order = zeta.cycle_of(1)
    pos = {x: k for k, x in enumerate(order)}
    return _oriented_noncrossing(_blocks_in_order(h.faces, pos), pos) and _oriented_noncrossing(
        _blocks_in_order(h.sigma, pos), pos
    )


def one_line_diagram(h: Hypermap, theta: Permutation) -> OneLineDiagram:
    zeta = face_tour(h, theta).cycle
    order = zeta.cycle_of(1)
    pos = {x: k for k, x in enumerate(order)}
    return OneLineDiagram(
        order=order,
        upper_arcs=tuple(_blocks_in_order(h.faces, pos)),
        lower_arcs=tuple(_blocks_in_order(h.sigma, pos)),
    )


@dataclass(frozen=True)
class TwoDiskDiagram:
    eta: Tour
    zeta: Tour
    vertex_partition: tuple
    face_partition: tuple
    bipole_edges: tuple
    genus: int

    def to_dict(self) -> dict:
        return {
            "kind": "two-disk",
            "genus": self.genus,
            "eta": list(self.eta.listing()),
            "zeta": list(self.zeta.listing()),
            "vertex_partition": [list(b) for b in self.vertex_partition],
            "face_partition": [list(b) for b in self.face_partition],
            "bipole_edges": [list(c) for c in self.bipole_edges],
            "shading": {"eta": "vertices", "zeta": "faces"},
        }


def two_disk_diagram(h: Hypermap, eta: Permutation, zeta: Permutation) -> TwoDiskDiagram:
    if not is_compatible_tours(h, eta, zeta):
        raise PreconditionError("(eta, zeta) is not a compatible pair of tours")
    eta_order = eta.cycle_of(1)
    zeta_order = zeta.cycle_of(1)
    epos = {x: k for k, x in enumerate(eta_order)}
    zpos = {x: k for k, x in enumerate(zeta_order)}
    bipole = eta * zeta.inverse()
    return TwoDiskDiagram(
        eta=Tour("vertex", eta),
        zeta=Tour("face", zeta),
        vertex_partition=tuple(_blocks_in_order(h.sigma, epos)),
        face_partition=tuple(_blocks_in_order(h.faces, zpos)),
        bipole_edges=tuple(bipole.cycles(include_fixed=False)),
        genus=genus_of(eta, bipole),
    )
