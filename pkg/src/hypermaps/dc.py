"""Hyperdeletion, hypercontraction and deletion-contraction processes.

A hyperdeletion replaces (sigma, alpha) with (sigma, alpha t) and a
hypercontraction with (t sigma, t alpha), where the transposition t swaps two
points of one alpha-cycle. A deletion-contraction process is a sequence of
hyperdeletions and topological hypercontractions ending in a single vertex
with no hyperedges left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import (
    Disconnects,
    HypermapError,
    Isthmus,
    NotAMap,
    NotDisconnecting,
    NotTransitive,
    PreconditionError,
)
from .hypermap import Hypermap, is_map, is_transitive
from .noncrossing import crosses, is_refinement, noncrossing_trees
from .perm import Permutation, Transposition
from .spanning import spanning_hypertrees

DELETION = "D"
CONTRACTION = "C"


@dataclass(frozen=True)
class DCOperation:
    kind: str  # "D" or "C"
    t: Transposition
    topological: Optional[bool] = None
    genus: Optional[int] = None  # genus after the step, filled in by run_process

    def __post_init__(self):
        if self.kind not in (DELETION, CONTRACTION):
            raise ValueError(f"operation kind must be 'D' or 'C', not {self.kind!r}")

    def format(self) -> str:
        s = f"{self.kind} {self.t}"
        if self.topological is not None:
            s += " topo=" + ("+" if self.topological else "-")
        if self.genus is not None:
            s += f" genus={self.genus}"
        return s


class StepResult(NamedTuple):
    hypermap: Hypermap
    topological: bool
    genus_change: int


def _as_transposition(t) -> Transposition:
    return t if isinstance(t, Transposition) else Transposition.of(*t)


def _check_disconnecting(h: Hypermap, t: Transposition):
    if t.j > h.n or t.i < 1:
        raise NotDisconnecting(f"{t} is outside 1..{h.n}")
    if h.alpha.connects(t.i, t.j):
        raise NotDisconnecting(f"{t} joins two different hyperedges")


def delete_step(h: Hypermap, t) -> StepResult:
    t = _as_transposition(t)
    _check_disconnecting(h, t)
    try:
        out = Hypermap(h.sigma, h.alpha.swap_right(t.i, t.j))
    except NotTransitive:
        raise Isthmus(f"deleting {t} disconnects the hypermap") from None
    topo = h.faces.connects(t.i, t.j)
    return StepResult(out, topo, out.genus - h.genus)


def contract_step(h: Hypermap, t) -> StepResult:
    t = _as_transposition(t)
    _check_disconnecting(h, t)
    try:
        out = Hypermap(h.sigma.swap_left(t.i, t.j), h.alpha.swap_left(t.i, t.j))
    except NotTransitive:
        raise Disconnects(f"contracting {t} disconnects the hypermap") from None
    topo = h.sigma.connects(t.i, t.j)
    return StepResult(out, topo, out.genus - h.genus)


def hyperdelete(h: Hypermap, t) -> Hypermap:
    """(sigma, alpha t). Topological iff t joins two faces; see ``delete_step``."""
    return delete_step(h, t).hypermap


def hypercontract(h: Hypermap, t) -> Hypermap:
    """(t sigma, t alpha). Topological iff t joins two vertices."""
    return contract_step(h, t).hypermap


class DualityCheck(NamedTuple):
    deletion: Optional[StepResult]
    contraction_on_dual: Optional[StepResult]
    holds: bool


def duality_transport(h: Hypermap, t) -> DualityCheck:
    """Compare deleting ``t`` in ``h`` with contracting ``t`` in the dual.

    The check holds when both fail in the same way, or both succeed with
    equal topological flags and the dual of the deletion equals the
    contraction.
    """
    t = _as_transposition(t)
    d = c = None
    d_err = c_err = None
    try:
        d = delete_step(h, t)
    except PreconditionError as e:
        d_err = type(e)
    try:
        c = contract_step(h.dual(), t)
    except PreconditionError as e:
        c_err = type(e)
    if d is None or c is None:
        pairs = {(None, None), (Isthmus, Disconnects), (NotDisconnecting, NotDisconnecting)}
        return DualityCheck(d, c, (d_err, c_err) in pairs)
    ok = d.topological == c.topological and d.hypermap.dual() == c.hypermap and d.genus_change == c.genus_change
    return DualityCheck(d, c, ok)


# -- deletion-contraction graphs ----------------------------------------------


@dataclass(frozen=True)
class DCGraph:
    host: Hypermap = field(repr=False, compare=False)
    edges: frozenset

    def vertices(self) -> list:
        return self.host.sigma.cycles()

    def sorted_edges(self) -> list:
        return sorted(self.edges)


def _normalize_edges(edges: Iterable) -> frozenset:
    return frozenset(_as_transposition(e) for e in edges)


def _alpha_orders(alpha: Permutation) -> dict:
    """point -> (cycle id, position in the alpha-cycle)."""
    out = {}
    for k, c in enumerate(alpha.cycles()):
        for p, x in enumerate(c):
            out[x] = (k, p)
    return out


def is_locally_tree_like(h: Hypermap, edges) -> bool:
    """Edges stay inside alpha-cycles and form a noncrossing tree on each."""
    edges = _normalize_edges(edges)
    where = _alpha_orders(h.alpha)
    per_cycle: dict = {}
    for e in edges:
        if e.j > h.n or e.i < 1 or where[e.i][0] != where[e.j][0]:
            return False
        per_cycle.setdefault(where[e.i][0], []).append(e)
    for k, c in enumerate(h.alpha.cycles()):
        es = per_cycle.get(k, [])
        if len(es) != len(c) - 1:
            return False
        parent = {x: x for x in c}

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for e in es:
            a, b = find(e.i), find(e.j)
            if a == b:
                return False
            parent[a] = b
        order = {x: p for p, x in enumerate(c)}
        for a in range(len(es)):
            for b in range(a + 1, len(es)):
                if crosses(order, es[a], es[b]):
                    return False
    return True


def _edges_at_points(h: Hypermap, edges) -> dict:
    """point u -> edges at u listed along the alpha^-1 cycle starting at u."""
    ainv = h.alpha.inverse()
    at: dict = {}
    for e in edges:
        at.setdefault(e.i, set()).add(e)
        at.setdefault(e.j, set()).add(e)
    out = {}
    for u, es in at.items():
        rank = {}
        x, k = ainv(u), 1
        while x != u:
            rank[x] = k
            x, k = ainv(x), k + 1
        out[u] = sorted(es, key=lambda e: rank[e.j if e.i == u else e.i])
    return out


def is_allowable(h: Hypermap, edges, tree) -> bool:
    """``tree`` is a spanning tree of the vertex graph and, around every
    point, its edges come before the remaining edges in alpha^-1 order."""
    edges = _normalize_edges(edges)
    tree = _normalize_edges(tree)
    if not tree <= edges:
        return False
    if not _spans_vertices(h, tree):
        return False
    for u, es in _edges_at_points(h, edges).items():
        seen_deletion = False
        for e in es:
            if e in tree:
                if seen_deletion:
                    return False
            else:
                seen_deletion = True
    return True


def _spans_vertices(h: Hypermap, tree) -> bool:
    idx = h.sigma.cycle_index()
    nv = h.sigma.cycle_count()
    if len(tree) != nv - 1:
        return False
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for e in tree:
        a, b = find(idx[e.i]), find(idx[e.j])
        if a == b:
            return False
        parent[a] = b
    return True


def allowable_trees(h: Hypermap, edges) -> Iterator[frozenset]:
    """Depth-first search over spanning trees of the vertex graph, pruning
    on cycles and on the number of edges still available."""
    edges = sorted(_normalize_edges(edges))
    idx = h.sigma.cycle_index()
    need = h.sigma.cycle_count() - 1
    parent = list(range(h.sigma.cycle_count()))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    chosen: list = []

    def dfs(k):
        if len(chosen) == need:
            tree = frozenset(chosen)
            if is_allowable(h, edges, tree):
                yield tree
            return
        if len(edges) - k < need - len(chosen):
            return
        e = edges[k]
        a, b = find(idx[e.i]), find(idx[e.j])
        if a != b:
            parent[a] = b
            chosen.append(e)
            yield from dfs(k + 1)
            chosen.pop()
            parent[a] = a
        yield from dfs(k + 1)

    yield from dfs(0)


def validate_dc_graph(h: Hypermap, edges) -> bool:
    """Locally tree-like and admits at least one allowable spanning tree."""
    edges = _normalize_edges(edges)
    if not is_locally_tree_like(h, edges):
        return False
    return next(allowable_trees(h, edges), None) is not None


def enumerate_dc_graphs(h: Hypermap) -> Iterator[DCGraph]:
    """Every deletion-contraction graph exactly once.

    For each spanning hypertree (sigma, gamma^-1), with delta = alpha^-1 gamma^-1,
    choose a noncrossing tree on every cycle of gamma and of delta, points
    placed in the order of the surrounding alpha-cycle.
    """
    alpha_inv = h.alpha.inverse()
    where = _alpha_orders(h.alpha)
    seen = set()
    for span in spanning_hypertrees(h):
        gamma_inv = span.theta
        delta = alpha_inv * gamma_inv
        blocks = [c for c in gamma_inv.cycles(include_fixed=False)]
        blocks += [c for c in delta.cycles(include_fixed=False)]
        choices = []
        for c in blocks:
            pts = sorted(c, key=lambda x: where[x][1])
            choices.append([tuple(Transposition.of(u, v) for u, v in t) for t in noncrossing_trees(pts)])
        for pick in product(*choices):
            es = frozenset(e for part in pick for e in part)
            if es not in seen:
                seen.add(es)
                yield DCGraph(h, es)


# -- processes ---------------------------------------------------------------


@dataclass
class DCProcess:
    host: Hypermap
    ops: list

    def trace_lines(self) -> list:
        return [op.format() for op in self.ops]


def _factor_cycle(seq: tuple, tree: set) -> list:
    """Transpositions L (tree edges) with L[0] L[1] ... L[-1] equal to the
    cycle ``seq``; a leaf is split off by (s_1..s_m) = (s_1..s_k)(s_k,s_m)(s_k..s_{m-1})."""
    m = len(seq)
    if m <= 1:
        return []
    deg = {x: 0 for x in seq}
    for e in tree:
        deg[e.i] += 1
        deg[e.j] += 1
    leaf_pos = next(p for p, x in enumerate(seq) if deg[x] == 1)
    seq = seq[leaf_pos + 1 :] + seq[: leaf_pos + 1]
    leaf = seq[-1]
    edge = next(e for e in tree if leaf in e)
    nb = edge.j if edge.i == leaf else edge.i
    k = seq.index(nb)
    left = seq[: k + 1]
    right = seq[k:-1]
    rest = tree - {edge}
    left_set, right_set = set(left), set(right)
    t1 = {e for e in rest if e.i in left_set and e.j in left_set}
    t2 = rest - t1
    if any(not (e.i in right_set and e.j in right_set) for e in t2):
        raise PreconditionError("tree is not noncrossing on its cycle")
    return _factor_cycle(left, t1) + [edge] + _factor_cycle(right, t2)


def _product(ts: list, n: int) -> Permutation:
    p = Permutation.identity(n)
    for t in ts:
        p = p.swap_right(t.i, t.j)
    return p


def _components(edges) -> list:
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            x = parent[x]
        return x

    for e in edges:
        a, b = find(e.i), find(e.j)
        if a != b:
            parent[a] = b
    groups: dict = {}
    for x in list(parent):
        groups.setdefault(find(x), set()).add(x)
    return [frozenset(g) for g in groups.values()]


def canonical_process(h: Hypermap, g: DCGraph, tree) -> DCProcess:
    """All contractions (one gamma-cycle at a time), then all deletions
    (one delta-cycle at a time), each cycle ordered by the leaf recursion."""
    edges = g.edges if isinstance(g, DCGraph) else _normalize_edges(g)
    tree = _normalize_edges(tree)
    if not is_locally_tree_like(h, edges) or not is_allowable(h, edges, tree):
        raise PreconditionError("tree is not allowable in the given graph")
    n = h.n
    where = _alpha_orders(h.alpha)
    # gamma^-1 lists each contraction component in alpha order
    gamma_inv_cycles = []
    for comp in _components(tree):
        gamma_inv_cycles.append(tuple(sorted(comp, key=lambda x: where[x][1])))
    gamma_inv = Permutation.from_cycles(gamma_inv_cycles, n)
    if not is_refinement(gamma_inv, h.alpha):
        raise PreconditionError("contraction edges do not refine alpha")
    gamma = gamma_inv.inverse()
    delta = h.alpha.inverse() * gamma_inv
    deletions = edges - tree
    del_comps = set(_components(deletions))
    delta_sets = {frozenset(c) for c in delta.cycles(include_fixed=False)}
    if del_comps != delta_sets:
        raise PreconditionError("deletion edges do not match the cycles of alpha^-1 gamma^-1")

    ops = []
    for c in gamma.cycles(include_fixed=False):
        sub = {e for e in tree if e.i in c}
        factors = _factor_cycle(c, sub)
        assert _product(factors, n) == Permutation.from_cycles([c], n)
        ops += [DCOperation(CONTRACTION, t) for t in reversed(factors)]
    for c in delta.cycles(include_fixed=False):
        sub = {e for e in deletions if e.i in c}
        factors = _factor_cycle(c, sub)
        assert _product(factors, n) == Permutation.from_cycles([c], n)
        ops += [DCOperation(DELETION, t) for t in factors]
    return DCProcess(h, ops)


class ProcessResult(NamedTuple):
    final: Hypermap
    trace: list  # DCOperation with topological flag and genus filled in


def run_process(h: Hypermap, ops) -> ProcessResult:
    """Apply ``ops`` in order, validating each step and the end state."""
    if isinstance(ops, DCProcess):
        ops = ops.ops
    cur = h
    trace = []
    for k, op in enumerate(ops):
        if not isinstance(op, DCOperation):
            op = DCOperation(op[0], _as_transposition(op[1]))
        try:
            step = delete_step(cur, op.t) if op.kind == DELETION else contract_step(cur, op.t)
        except HypermapError as e:
            raise type(e)(f"step {k}: {e}") from None
        if op.kind == CONTRACTION and not step.topological:
            raise PreconditionError(f"step {k}: contraction of {op.t} is not topological")
        cur = step.hypermap
        trace.append(DCOperation(op.kind, op.t, step.topological, cur.genus))
    if cur.sigma.cycle_count() != 1 or not cur.alpha.is_identity():
        raise PreconditionError("process does not end at a single vertex without hyperedges")
    return ProcessResult(cur, trace)


def format_trace(trace) -> str:
    return "".join(op.format() + "\n" for op in trace)


def find_process(h: Hypermap, edges) -> Optional[list]:
    """Search over all orders and all deletion/contraction choices for a
    process using exactly ``edges``; None if there is none."""
    edges = _normalize_edges(edges)
    dead = set()

    def search(sigma, alpha, remaining):
        if not remaining:
            if alpha.is_identity() and sigma.cycle_count() == 1:
                return []
            return None
        key = (sigma, alpha, remaining)
        if key in dead:
            return None
        # cycles of alpha only split, so an edge across two cycles is stuck
        if sigma.cycle_count() - 1 > len(remaining) or any(alpha.connects(t.i, t.j) for t in remaining):
            dead.add(key)
            return None
        for t in sorted(remaining):
            rest = remaining - {t}
            a2 = alpha.swap_right(t.i, t.j)
            if is_transitive(sigma, a2):
                found = search(sigma, a2, rest)
                if found is not None:
                    return [DCOperation(DELETION, t)] + found
            if sigma.connects(t.i, t.j):
                s3, a3 = sigma.swap_left(t.i, t.j), alpha.swap_left(t.i, t.j)
                if is_transitive(s3, a3):
                    found = search(s3, a3, rest)
                    if found is not None:
                        return [DCOperation(CONTRACTION, t)] + found
        dead.add(key)
        return None

    return search(h.sigma, h.alpha, edges)


def process_activities(h: Hypermap, ops) -> tuple:
    """(internal, external): contractions forced because deletion would be an
    isthmus, and deletions forced because contraction would not be topological."""
    internal = external = 0
    cur = h
    for op in ops:
        t = op.t
        if op.kind == CONTRACTION:
            try:
                delete_step(cur, t)
            except Isthmus:
                internal += 1
            cur = contract_step(cur, t).hypermap
        else:
            if not cur.sigma.connects(t.i, t.j):
                external += 1
            cur = delete_step(cur, t).hypermap
    return internal, external


# -- Tutte polynomial of a map ------------------------------------------------


def map_edges(h: Hypermap) -> list:
    """The 2-cycles of alpha, as transpositions sorted by smaller point."""
    return [Transposition.of(*c) for c in h.alpha.cycles(include_fixed=False)]


def tutte_polynomial(h: Hypermap, numbering: Optional[list] = None) -> dict:
    """Tutte polynomial of a map as ``{(i, j): coeff}`` for x^i y^j.

    Sum over spanning trees of x^(internal activity) y^(external activity),
    where edges are processed from the highest number down: a tree edge is
    internally active when it is the lowest-numbered edge of its fundamental
    cut and a non-tree edge is externally active when it is the lowest of its
    fundamental cycle. ``numbering`` lists the edges from number 1 upward;
    by default edges are numbered in the order of ``map_edges``.
    """
    if not is_map(h):
        raise NotAMap("the Tutte polynomial is only defined here for maps")
    edges = map_edges(h)
    if numbering is not None:
        numbering = [_as_transposition(e) for e in numbering]
        if sorted(numbering) != sorted(edges):
            raise PreconditionError("numbering must list every edge exactly once")
        edges = numbering
    rank = {e: k for k, e in enumerate(edges)}
    idx = h.sigma.cycle_index()
    nv = h.sigma.cycle_count()
    poly: dict = {}
    for span in spanning_hypertrees(h):
        tree = {Transposition.of(*c) for c in span.theta.cycles(include_fixed=False)}
        ia = sum(1 for e in tree if _lowest_in_cut(e, tree, edges, rank, idx, nv))
        ea = sum(1 for e in edges if e not in tree and _lowest_in_cycle(e, tree, rank, idx, nv))
        poly[(ia, ea)] = poly.get((ia, ea), 0) + 1
    return poly


def _tree_components(tree_edges, idx, nv) -> list:
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for e in tree_edges:
        a, b = find(idx[e.i]), find(idx[e.j])
        if a != b:
            parent[a] = b
    return [find(v) for v in range(nv)]


def _lowest_in_cut(e, tree, edges, rank, idx, nv) -> bool:
    comp = _tree_components(tree - {e}, idx, nv)
    side = comp[idx[e.i]]
    for f in edges:
        if f != e and (comp[idx[f.i]] == side) != (comp[idx[f.j]] == side) and rank[f] < rank[e]:
            return False
    return True


def _lowest_in_cycle(e, tree, rank, idx, nv) -> bool:
    # the fundamental cycle of e is e plus the tree path between its ends
    for f in tree:
        comp = _tree_components(tree - {f}, idx, nv)
        if comp[idx[e.i]] != comp[idx[e.j]] and rank[f] < rank[e]:
            return False
    return True


def format_polynomial(poly: dict) -> list:
    """Sorted ``x^a y^b: coeff`` lines."""
    return [f"x^{a} y^{b}: {c}" for (a, b), c in sorted(poly.items()) if c]


def evaluate_polynomial(poly: dict, x, y):
    return sum(c * x**a * y**b for (a, b), c in poly.items())
