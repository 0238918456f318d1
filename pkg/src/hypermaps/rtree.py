"""Labeled plane trees for spanning hypertrees of the reciprocal of a map.

A spanning hypertree (alpha, theta) of the reciprocal of a map (sigma, alpha)
is drawn as a plane tree: one node per cycle of theta, colored by the vertex
of sigma that contains it, one node of color 0 for every loop edge, and the
edges of the map joining them. The tree is itself a map on the original
points plus two midpoint points per loop edge.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, NamedTuple, Optional, Sequence

from .errors import (
    Disconnects,
    IllegalMerge,
    IllegalSplit,
    IncoherentTree,
    NotAMap,
    NotSpanning,
    ParseError,
    PreconditionError,
    SplitDisconnects,
    SplitLeavesCycle,
)
from .hypermap import Hypermap, genus_of, is_map, is_transitive
from .noncrossing import is_refinement
from .perm import Permutation
from .spanning import spanning_hypertrees

__all__ = [
    "EdgeLabel",
    "Node",
    "VertexEdgeLabeling",
    "LabeledPlaneTree",
    "label_map",
    "labeled_map",
    "span_to_tree",
    "tree_to_span",
    "vertex_split",
    "trees_by_splitting",
    "reduction_move",
    "reduction_moves",
    "franz_earnshaw_reduce",
    "move_graph",
    "cubic_count",
]


class EdgeLabel(NamedTuple):
    number: int
    primed: bool = False

    def __str__(self) -> str:
        return f"{self.number}'" if self.primed else str(self.number)

    @classmethod
    def parse(cls, text) -> "EdgeLabel":
        if isinstance(text, EdgeLabel):
            return text
        if isinstance(text, int):
            return cls(text)
        m = re.fullmatch(r"\s*(\d+)\s*('?)\s*", str(text))
        if not m:
            raise ParseError(f"bad edge label {text!r}")
        return cls(int(m.group(1)), bool(m.group(2)))


class Node(NamedTuple):
    color: int
    labels: tuple  # EdgeLabels in counterclockwise order

    def __str__(self) -> str:
        return f"{self.color}:(" + ",".join(map(str, self.labels)) + ")"


def _rotate_min(labels: tuple) -> tuple:
    if not labels:
        return labels
    k = labels.index(min(labels))
    return labels[k:] + labels[:k]


# -- vertex-edge labeling -----------------------------------------------------


@dataclass
class VertexEdgeLabeling:
    host: Hypermap
    vertex_numbers: dict  # sigma-cycle (canonical tuple) -> int
    edge_numbers: dict  # alpha-cycle (canonical tuple) -> int
    loop_duplicates: dict  # loop edge number j -> EdgeLabel(j, True)
    point_coords: dict  # point -> (vertex number, EdgeLabel)

    def __post_init__(self):
        self._points = {v: k for k, v in self.point_coords.items()}

    def point_of(self, vertex: int, label: EdgeLabel) -> int:
        try:
            return self._points[(vertex, label)]
        except KeyError:
            raise IncoherentTree(f"no point labeled ({vertex},{label})") from None

    def loops(self) -> list:
        """Loop edges as (a, b, j) with a carrying j and b carrying j'."""
        out = []
        for c, j in self.edge_numbers.items():
            if j in self.loop_duplicates:
                out.append((c[0], c[1], j))
        return sorted(out, key=lambda t: t[2])

    def edge_labels(self) -> list:
        return sorted(lab for _, lab in self.point_coords.values())

    def format_cycle(self, cycle) -> str:
        return "(" + ",".join(f"({self.point_coords[x][0]},{self.point_coords[x][1]})" for x in cycle) + ")"


def label_map(h: Hypermap, vertex_numbers: Optional[Sequence[int]] = None, edge_numbers: Optional[Sequence[int]] = None) -> VertexEdgeLabeling:
    """Number vertices and edges (cycles ordered by their least point unless
    ``vertex_numbers`` / ``edge_numbers`` give the numbers in that order).

    For a loop (a, b) with a < b the point a gets label j and b gets j'.
    """
    if not is_map(h):
        raise NotAMap("vertex-edge labelings are defined for maps")
    vcycles = h.sigma.cycles()
    ecycles = h.alpha.cycles()
    vnum = list(vertex_numbers) if vertex_numbers is not None else list(range(1, len(vcycles) + 1))
    enum = list(edge_numbers) if edge_numbers is not None else list(range(1, len(ecycles) + 1))
    if len(vnum) != len(vcycles) or len(set(vnum)) != len(vnum) or any(v < 1 for v in vnum):
        raise PreconditionError("vertex numbers must be distinct positive integers, one per vertex")
    if len(enum) != len(ecycles) or len(set(enum)) != len(enum) or any(e < 1 for e in enum):
        raise PreconditionError("edge numbers must be distinct positive integers, one per edge")
    vertex_numbers_d = dict(zip(vcycles, vnum))
    edge_numbers_d = dict(zip(ecycles, enum))
    vof = {}
    for c, v in vertex_numbers_d.items():
        for x in c:
            vof[x] = v
    coords = {}
    dup = {}
    for c, j in edge_numbers_d.items():
        if len(c) == 2 and vof[c[0]] == vof[c[1]]:
            dup[j] = EdgeLabel(j, True)
            coords[c[0]] = (vof[c[0]], EdgeLabel(j))
            coords[c[1]] = (vof[c[1]], EdgeLabel(j, True))
        else:
            for x in c:
                coords[x] = (vof[x], EdgeLabel(j))
    return VertexEdgeLabeling(h, vertex_numbers_d, edge_numbers_d, dup, coords)


# -- the tree as a map ----------------------------------------------------------


def labeled_map(h: Hypermap, theta: Permutation, labeling: Optional[VertexEdgeLabeling] = None) -> tuple:
    """The labeled map (sigma', alpha') of a refinement ``theta`` of sigma.

    Points n+1, n+2, ... are midpoints: loop k (in label order) gets n+2k-1
    on the j side and n+2k on the j' side, and these two form a vertex.
    """
    lab = labeling or label_map(h)
    n = h.n
    loops = lab.loops()
    s_img = list(theta.images) + [0] * (2 * len(loops))
    a_img = list(h.alpha.images) + [0] * (2 * len(loops))
    for k, (a, b, _) in enumerate(loops):
        p, q = n + 2 * k + 1, n + 2 * k + 2
        s_img[p - 1], s_img[q - 1] = q, p
        a_img[a - 1], a_img[p - 1] = p, a
        a_img[b - 1], a_img[q - 1] = q, b
    return Permutation(s_img, check=False), Permutation(a_img, check=False)


def _is_plane_tree(sigma_p: Permutation, alpha_p: Permutation) -> bool:
    if not is_transitive(sigma_p, alpha_p):
        return False
    faces = alpha_p.inverse() * sigma_p
    return faces.cycle_count() == 1 and genus_of(sigma_p, alpha_p) == 0


@dataclass(frozen=True)
class LabeledPlaneTree:
    """Nodes as (color, labels in counterclockwise order); color 0 marks
    the midpoint of a loop edge. Normalized: labels rotated to start at the
    least label, nodes sorted."""

    nodes: tuple

    def __post_init__(self):
        nodes = tuple(sorted(Node(int(c), _rotate_min(tuple(EdgeLabel.parse(x) for x in labs))) for c, labs in self.nodes))
        object.__setattr__(self, "nodes", nodes)

    def incidences(self) -> dict:
        """EdgeLabel -> list of node indices carrying it."""
        inc: dict = {}
        for k, node in enumerate(self.nodes):
            for lab in node.labels:
                inc.setdefault(lab, []).append(k)
        return inc

    def edges(self) -> list:
        """(label, node a, node b) for every label carried by two nodes."""
        return sorted((lab, ks[0], ks[1]) for lab, ks in self.incidences().items() if len(ks) == 2)

    def is_tree(self) -> bool:
        inc = self.incidences()
        if any(len(ks) > 2 for ks in inc.values()):
            return False
        es = self.edges()
        if len(es) != len(self.nodes) - 1:
            return False
        parent = list(range(len(self.nodes)))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for _, a, b in es:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True

    # serialization ---------------------------------------------------------

    def to_text(self) -> str:
        """Nested form rooted at the first node: ``@c(...)`` for the root,
        ``label@c(...)`` for the node reached through ``label``, bare ``label``
        for a half-edge. Children follow the counterclockwise order, starting
        after the edge we arrived by."""
        inc = self.incidences()

        def other(lab, k):
            ks = inc[lab]
            if len(ks) == 1:
                return None
            return ks[1] if ks[0] == k else ks[0]

        def render(k, via):
            labs = self.nodes[k].labels
            if via is not None:
                i = labs.index(via)
                labs = labs[i + 1 :] + labs[:i]
            parts = []
            for lab in labs:
                nxt = other(lab, k)
                parts.append(str(lab) if nxt is None else f"{lab}{render(nxt, lab)}")
            return f"@{self.nodes[k].color}(" + ",".join(parts) + ")"

        if not self.nodes:
            return ""
        return render(0, None)

    @classmethod
    def from_text(cls, text: str) -> "LabeledPlaneTree":
        """Parse the form written by ``to_text``."""
        text = re.sub(r"\s+", "", text)
        head = re.compile(r"@(\d+)\(")
        label_re = re.compile(r"\d+'?")
        nodes = []
        pos = 0

        def node(via):
            nonlocal pos
            m = head.match(text, pos)
            if not m:
                raise ParseError(f"expected '@color(' at offset {pos}")
            color = int(m.group(1))
            pos = m.end()
            labels = [] if via is None else [via]
            while not text.startswith(")", pos):
                m = label_re.match(text, pos)
                if not m:
                    raise ParseError(f"expected an edge label at offset {pos}")
                pos = m.end()
                lab = EdgeLabel.parse(m.group(0))
                labels.append(lab)
                if text.startswith("@", pos):
                    node(lab)
                if text.startswith(",", pos):
                    pos += 1
                elif not text.startswith(")", pos):
                    raise ParseError(f"expected ',' or ')' at offset {pos}")
            pos += 1
            nodes.append((color, tuple(labels)))

        if text:
            node(None)
        if pos != len(text):
            raise ParseError(f"trailing text at offset {pos}")
        return cls(tuple(nodes))

    def to_dot(self) -> str:
        lines = ["graph tree {"]
        for k, nd in enumerate(self.nodes):
            shape = "point" if nd.color == 0 else "circle"
            lines.append(f'  n{k} [label="{nd.color}", shape={shape}];')
        for k, (lab, a, b) in enumerate(self.edges()):
            lines.append(f'  n{a} -- n{b} [label="{lab}"];')
        for lab, ks in sorted(self.incidences().items()):
            if len(ks) == 1:
                lines.append(f'  h{lab.number}{"p" if lab.primed else ""} [shape=none, label=""];')
                lines.append(f'  n{ks[0]} -- h{lab.number}{"p" if lab.primed else ""} [label="{lab}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _check_reciprocal_hypertree(h: Hypermap, theta: Permutation):
    if theta.n != h.n or not is_refinement(theta, h.sigma):
        raise NotSpanning(f"{theta} is not a refinement of sigma")
    face = theta.inverse() * h.alpha
    if face.cycle_count() != 1 or genus_of(h.alpha, theta) != 0:
        raise NotSpanning(f"(alpha, {theta}) is not a hypertree")


def span_to_tree(h: Hypermap, theta: Permutation, labeling: Optional[VertexEdgeLabeling] = None) -> LabeledPlaneTree:
    """The labeled plane tree of a spanning hypertree (alpha, theta) of the
    reciprocal of ``h``."""
    lab = labeling or label_map(h)
    _check_reciprocal_hypertree(h, theta)
    nodes = []
    for c in theta.cycles():
        color = lab.point_coords[c[0]][0]
        nodes.append((color, tuple(lab.point_coords[x][1] for x in c)))
    for _, _, j in lab.loops():
        nodes.append((0, (EdgeLabel(j), EdgeLabel(j, True))))
    return LabeledPlaneTree(tuple(nodes))


def _tree_to_refinement(h: Hypermap, t: LabeledPlaneTree, lab: VertexEdgeLabeling) -> Permutation:
    cycles = []
    seen = set()
    mids = set()
    for node in t.nodes:
        if node.color == 0:
            labs = node.labels
            if len(labs) != 2 or labs[0].number != labs[1].number or labs[0].primed or not labs[1].primed:
                raise IncoherentTree(f"color-0 node {node} is not the midpoint of a loop")
            mids.add(labs[0].number)
            continue
        pts = tuple(lab.point_of(node.color, x) for x in node.labels)
        for x in pts:
            if x in seen:
                raise IncoherentTree(f"point {x} appears on two nodes")
            seen.add(x)
        cycles.append(pts)
    if len(seen) != h.n:
        raise IncoherentTree("the tree does not use every point of the map")
    if mids != set(lab.loop_duplicates):
        raise IncoherentTree("color-0 nodes do not match the loop edges")
    theta = Permutation.from_cycles(cycles, h.n)
    if not is_refinement(theta, h.sigma):
        raise IncoherentTree("cyclic orders at the nodes do not refine the vertices")
    return theta


def tree_to_span(h: Hypermap, t: LabeledPlaneTree, labeling: Optional[VertexEdgeLabeling] = None) -> Permutation:
    """Inverse of ``span_to_tree``: restrict the tree's rotation to the
    original points."""
    lab = labeling or label_map(h)
    theta = _tree_to_refinement(h, t, lab)
    if not _is_plane_tree(*labeled_map(h, theta, lab)):
        raise NotSpanning("the labeled map is not a plane tree")
    return theta


# -- vertex splitting -----------------------------------------------------------


def vertex_split(h: Hypermap, i: int, j: int) -> Hypermap:
    """((i,j) sigma, (i,j) alpha) for i, j on one vertex."""
    if i == j or h.sigma.connects(i, j):
        raise PreconditionError(f"points {i} and {j} are not on the same vertex")
    sigma = h.sigma.swap_left(i, j)
    alpha = h.alpha.swap_left(i, j)
    if not is_transitive(sigma, alpha):
        raise Disconnects(f"splitting at ({i},{j}) disconnects the hypermap")
    return Hypermap(sigma, alpha)


def trees_by_splitting(h: Hypermap) -> set:
    """Refinements theta reached as plane trees by splitting vertices of the
    loop-subdivided map, edges kept fixed, never splitting a midpoint.

    Breadth-first over connected intermediate maps.
    """
    lab = label_map(h)
    sigma0, alpha0 = labeled_map(h, h.sigma, lab)
    n = h.n
    start = sigma0
    seen = {start}
    queue = deque([start])
    found = set()
    while queue:
        s = queue.popleft()
        if _is_plane_tree(s, alpha0):
            found.add(Permutation(s.images[:n], check=False))
        for c in s.cycles(include_fixed=False):
            if c[0] > n:
                continue
            for a, b in combinations(c, 2):
                s2 = s.swap_left(a, b)
                if s2 in seen or not is_transitive(s2, alpha0):
                    continue
                seen.add(s2)
                queue.append(s2)
    return found


# -- reduction moves ------------------------------------------------------------


def _node_points(node: Node, lab: VertexEdgeLabeling) -> tuple:
    return tuple(lab.point_of(node.color, x) for x in node.labels)


def _resolve_node(t: LabeledPlaneTree, ref) -> Node:
    if isinstance(ref, int):
        return t.nodes[ref]
    if isinstance(ref, tuple) and len(ref) == 2 and not isinstance(ref, Node):
        return Node(int(ref[0]), tuple(EdgeLabel.parse(x) for x in ref[1]))
    return ref


def _replace_cycles(theta: Permutation, old: list, new: list) -> Permutation:
    cyc = [c for c in theta.cycles() if set(c) not in [set(o) for o in old]]
    return Permutation.from_cycles(cyc + list(new), theta.n)


def _graph_cycle_edges(h: Hypermap, theta: Permutation, lab: VertexEdgeLabeling) -> tuple:
    """Nodes and cycle-edge labels of the (unicyclic) graph of ``theta``."""
    sigma_p, alpha_p = labeled_map(h, theta, lab)
    idx = sigma_p.cycle_index()
    edges = []
    for c in alpha_p.cycles(include_fixed=False):
        a, b = c
        label = lab.point_coords[a][1] if a <= h.n else lab.point_coords[b][1]
        edges.append((label, idx[a], idx[b]))
    nv = sigma_p.cycle_count()

    def connected(skip):
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        comps = nv
        for k, (_, a, b) in enumerate(edges):
            if k == skip:
                continue
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                comps -= 1
        return comps == 1

    return {e[0] for k, e in enumerate(edges) if connected(k)}


def _merge(h, t, lab, merge):
    u, v = (_resolve_node(t, m) for m in merge)
    if u not in t.nodes or v not in t.nodes or u == v:
        raise IllegalMerge("merge needs two distinct nodes of the tree")
    if u.color != v.color or u.color == 0:
        raise IllegalMerge("only two nodes of the same positive color can merge")
    theta = _tree_to_refinement(h, t, lab)
    pu, pv = _node_points(u, lab), _node_points(v, lab)
    host = h.sigma.cycle_of(pu[0])
    order = {x: k for k, x in enumerate(host)}
    merged = tuple(sorted(pu + pv, key=order.__getitem__))
    theta_m = _replace_cycles(theta, [pu, pv], [merged])
    if not is_refinement(theta_m, h.sigma):
        raise IllegalMerge(f"merging {u} and {v} crosses another block")
    return theta_m, merged


def _apply_split(h, lab, theta_m, split):
    color, piece_a, piece_b = split
    pa = tuple(lab.point_of(color, EdgeLabel.parse(x)) for x in piece_a)
    pb = tuple(lab.point_of(color, EdgeLabel.parse(x)) for x in piece_b)
    if not pa or not pb:
        raise IllegalSplit("both pieces of a split must be nonempty")
    cyc = theta_m.cycle_of(pa[0])
    if set(cyc) != set(pa) | set(pb) or len(cyc) != len(pa) + len(pb):
        raise IllegalSplit("the pieces do not partition one node")
    k = cyc.index(pa[0])
    rot = cyc[k:] + cyc[:k]
    if rot[: len(pa)] != pa or rot[len(pa) :] != pb:
        raise IllegalSplit("pieces must be consecutive arcs of the node, in order")
    theta_s = _replace_cycles(theta_m, [cyc], [pa, pb])
    if _is_plane_tree(*labeled_map(h, theta_s, lab)):
        return theta_s
    on_cycle = _graph_cycle_edges(h, theta_m, lab)
    labels_a = {lab.point_coords[x][1] for x in pa}
    labels_b = {lab.point_coords[x][1] for x in pb}
    here = (labels_a | labels_b) & on_cycle
    if not here:
        raise SplitDisconnects("the split node is not on the cycle, so the split disconnects the graph")
    if here <= labels_a or here <= labels_b:
        raise SplitLeavesCycle("both cycle edges stay on one piece; the cycle survives and the graph falls apart")
    raise IllegalSplit("split does not produce a tree")


def reduction_move(h: Hypermap, t: LabeledPlaneTree, merge, split, labeling: Optional[VertexEdgeLabeling] = None) -> LabeledPlaneTree:
    """Merge two nodes of one color, then split one node to break the cycle.

    ``merge`` is a pair of nodes (``Node``, (color, labels) or index into
    ``t.nodes``); ``split`` is ``(color, piece_a, piece_b)`` where the pieces
    are consecutive runs of labels around one node of the merged graph.
    """
    lab = labeling or label_map(h)
    theta_m, _ = _merge(h, t, lab, merge)
    theta_s = _apply_split(h, lab, theta_m, split)
    return span_to_tree(h, theta_s, lab)


def _splits_of(node_labels: tuple) -> Iterator[tuple]:
    k = len(node_labels)
    for p in range(k):
        for q in range(p + 1, k):
            yield node_labels[p:q], node_labels[q:] + node_labels[:p]


def reduction_moves(h: Hypermap, t: LabeledPlaneTree, labeling: Optional[VertexEdgeLabeling] = None) -> Iterator[tuple]:
    """Every legal (merge, split, resulting tree), in a fixed order."""
    lab = labeling or label_map(h)
    nodes = t.nodes
    for a, b in combinations(range(len(nodes)), 2):
        if nodes[a].color != nodes[b].color or nodes[a].color == 0:
            continue
        try:
            theta_m, _ = _merge(h, t, lab, (a, b))
        except IllegalMerge:
            continue
        merged_tree = _nodes_of(h, theta_m, lab)
        for node in merged_tree:
            if node.color == 0:
                continue
            for pa, pb in _splits_of(node.labels):
                split = (node.color, pa, pb)
                try:
                    theta_s = _apply_split(h, lab, theta_m, split)
                except IllegalSplit:
                    continue
                yield (nodes[a], nodes[b]), split, span_to_tree(h, theta_s, lab)


def _nodes_of(h, theta, lab) -> list:
    out = []
    for c in theta.cycles():
        out.append(Node(lab.point_coords[c[0]][0], tuple(lab.point_coords[x][1] for x in c)))
    return out


def franz_earnshaw_reduce(h: Hypermap, t: LabeledPlaneTree, labeling: Optional[VertexEdgeLabeling] = None):
    """The reduction rule with a fixed order on points.

    Take the first vertex (by number) split into several nodes; merge the
    node holding its first point with the node holding the first point
    outside it along the vertex; then apply the first legal split of a
    node whose color is larger than that vertex. Returns (merge, split,
    tree), or None when every vertex is a single node or no such split
    exists. Blocks of lower-numbered vertices only grow, so repeated
    reduction terminates.
    """
    lab = labeling or label_map(h)
    theta = _tree_to_refinement(h, t, lab)
    for vcycle, number in sorted(lab.vertex_numbers.items(), key=lambda kv: kv[1]):
        first = theta.cycle_of(vcycle[0])
        if len(first) == len(vcycle):
            continue
        other = next(x for x in vcycle if x not in first)
        to_node = {frozenset(_node_points(nd, lab)): nd for nd in t.nodes if nd.color}
        u = to_node[frozenset(first)]
        v = to_node[frozenset(theta.cycle_of(other))]
        theta_m, _ = _merge(h, t, lab, (u, v))
        for node in _nodes_of(h, theta_m, lab):
            if node.color <= number:
                continue
            for pa, pb in _splits_of(node.labels):
                split = (node.color, pa, pb)
                try:
                    theta_s = _apply_split(h, lab, theta_m, split)
                except IllegalSplit:
                    continue
                return (u, v), split, span_to_tree(h, theta_s, lab)
        return None
    return None


def move_graph(h: Hypermap) -> tuple:
    """(number of trees, number of move edges, connected?) for the graph
    whose vertices are all trees and whose edges are reduction moves."""
    lab = label_map(h)
    trees = [span_to_tree(h, s.theta, lab) for s in spanning_hypertrees(h.reciprocal())]
    index = {tr: k for k, tr in enumerate(trees)}
    adj = {k: set() for k in range(len(trees))}
    for k, tr in enumerate(trees):
        for _, _, res in reduction_moves(h, tr, lab):
            if res != tr:
                adj[k].add(index[res])
                adj[index[res]].add(k)
    n_edges = sum(len(v) for v in adj.values()) // 2
    if not trees:
        return 0, 0, True
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(trees), n_edges, len(seen) == len(trees)


# -- cubic maps -----------------------------------------------------------------


def _set_partitions(items: list) -> Iterator[list]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1 :]
        yield [[first]] + part


def cubic_count(h: Hypermap) -> int:
    """Count abstract trees whose edges are the edges of ``h`` and whose
    nodes are colored by vertices, each vertex's edges shared out among its
    nodes. Vertices of degree at most 3, no loops, no half-edges."""
    if not is_map(h):
        raise NotAMap("cubic_count needs a map")
    vcycles = h.sigma.cycles()
    if any(len(c) > 3 for c in vcycles):
        raise PreconditionError("every vertex must have degree at most 3")
    idx = h.sigma.cycle_index()
    edges = h.alpha.cycles()
    if any(len(e) != 2 for e in edges):
        raise PreconditionError("every edge must have two ends")
    if any(idx[a] == idx[b] for a, b in edges):
        raise PreconditionError("loops are not allowed")
    # each vertex: the points (edge ends) it holds; a node is a block of them
    per_vertex = [list(c) for c in vcycles]
    count = 0
    for choice in product(*(list(_set_partitions(pts)) for pts in per_vertex)):
        block_of = {}
        nblocks = 0
        for blocks in choice:
            for b in blocks:
                for x in b:
                    block_of[x] = nblocks
                nblocks += 1
        if len(edges) != nblocks - 1:
            continue
        parent = list(range(nblocks))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        ok = True
        for a, b in edges:
            ra, rb = find(block_of[a]), find(block_of[b])
            if ra == rb:
                ok = False
                break
            parent[ra] = rb
        if ok:
            count += 1
    return count
