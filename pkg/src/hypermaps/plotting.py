"""Matplotlib figures: one-line diagrams, meanders, stamp foldings, labeled
plane trees and count plots.

SVG output is made byte-stable by fixing the hash salt and dropping the
date from the metadata.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Arc  # noqa: E402

_RC = {
    "svg.hashsalt": "hypermaps",
    "svg.fonttype": "none",
    "font.size": 9,
    "axes.linewidth": 0.8,
}

UPPER = "#1f4e9c"
LOWER = "#b3261e"


def _save(fig, path):
    fmt = str(path).rsplit(".", 1)[-1].lower()
    meta = {"Date": None} if fmt == "svg" else None
    fig.savefig(path, format=fmt, metadata=meta, bbox_inches="tight")
    plt.close(fig)


def _arc(ax, x0, x1, upper, color, lw=1.2):
    mid, width = (x0 + x1) / 2.0, abs(x1 - x0)
    t1, t2 = (0, 180) if upper else (180, 360)
    ax.add_patch(Arc((mid, 0), width, width, theta1=t1, theta2=t2, color=color, lw=lw))


def _line_axes(npoints, labels):
    fig, ax = plt.subplots(figsize=(max(3.0, 0.45 * npoints + 1), 2.6))
    xs = list(range(npoints))
    ax.axhline(0, color="0.6", lw=0.6, zorder=0)
    ax.scatter(xs, [0] * npoints, s=14, color="k", zorder=3)
    for x, lab in zip(xs, labels):
        ax.annotate(str(lab), (x, 0), xytext=(3, 3), textcoords="offset points", fontsize=7)
    ax.set_xlim(-0.8, npoints - 0.2)
    ax.set_ylim(-(npoints / 2.0 + 0.5), npoints / 2.0 + 0.5)
    ax.set_aspect("equal")
    ax.axis("off")
    return fig, ax


def _draw_blocks(ax, blocks, pos, upper, color):
    """Each block is drawn as the arcs between cyclically consecutive points."""
    for b in blocks:
        if len(b) < 2:
            continue
        pts = [pos[x] for x in b]
        pairs = list(zip(pts, pts[1:]))
        if len(pts) > 2:
            pairs.append((pts[-1], pts[0]))
        for a, c in pairs:
            _arc(ax, a, c, upper, color)


def plot_one_line(diagram, path, title=None):
    """Faces above the line, vertices below."""
    with plt.rc_context(_RC):
        pos = {x: k for k, x in enumerate(diagram.order)}
        fig, ax = _line_axes(len(diagram.order), diagram.order)
        _draw_blocks(ax, diagram.upper_arcs, pos, True, UPPER)
        _draw_blocks(ax, diagram.lower_arcs, pos, False, LOWER)
        if title:
            ax.set_title(title)
        _save(fig, path)


def plot_meander(meander, path, title=None):
    with plt.rc_context(_RC):
        m = 2 * meander.order
        fig, ax = _line_axes(m, range(1, m + 1))
        for a, b in meander.upper:
            _arc(ax, a - 1, b - 1, True, UPPER)
        for a, b in meander.lower:
            _arc(ax, a - 1, b - 1, False, LOWER)
        if title:
            ax.set_title(title)
        _save(fig, path)


def plot_folding(folding, path, title=None):
    with plt.rc_context(_RC):
        fig, ax = _line_axes(folding.order, folding.perm)
        upper, lower = folding.arcs()
        for a, b in upper:
            _arc(ax, a, b, True, UPPER)
        for a, b in lower:
            _arc(ax, a, b, False, LOWER)
        if title:
            ax.set_title(title)
        _save(fig, path)


def _tree_layout(tree):
    """Layered layout from node 0: depth down, leaves spread left to right
    in counterclockwise order."""
    inc = tree.incidences()
    x_of, depth = {}, {}
    counter = [0]

    def visit(k, via, d):
        depth[k] = d
        labs = list(tree.nodes[k].labels)
        if via is not None:
            i = labs.index(via)
            labs = labs[i + 1 :] + labs[:i]
        kids = []
        for lab in labs:
            ks = inc[lab]
            if len(ks) == 2:
                kids.append((lab, ks[1] if ks[0] == k else ks[0]))
        if not kids:
            x_of[k] = counter[0]
            counter[0] += 1
            return
        for lab, c in kids:
            visit(c, lab, d + 1)
        x_of[k] = sum(x_of[c] for _, c in kids) / len(kids)

    if tree.nodes:
        visit(0, None, 0)
    return {k: (x_of[k], -depth[k]) for k in x_of}


def plot_tree(tree, path, title=None):
    with plt.rc_context(_RC):
        xy = _tree_layout(tree)
        width = max([p[0] for p in xy.values()] + [1])
        height = max([-p[1] for p in xy.values()] + [1])
        fig, ax = plt.subplots(figsize=(1.2 + 0.7 * width, 1.2 + 0.8 * height))
        for lab, a, b in tree.edges():
            (x0, y0), (x1, y1) = xy[a], xy[b]
            ax.plot([x0, x1], [y0, y1], color="0.3", lw=1.0, zorder=1)
            ax.annotate(str(lab), ((x0 + x1) / 2, (y0 + y1) / 2), fontsize=7, color=UPPER)
        for k, (x, y) in sorted(xy.items()):
            color = tree.nodes[k].color
            if color == 0:
                ax.scatter([x], [y], s=12, color="k", zorder=2)
            else:
                ax.scatter([x], [y], s=180, facecolor="white", edgecolor="k", zorder=2)
                ax.annotate(str(color), (x, y), ha="center", va="center", fontsize=8, zorder=3)
        ax.margins(0.2)
        ax.axis("off")
        if title:
            ax.set_title(title)
        _save(fig, path)


def plot_counts(rows, path, labels=("order", "count"), title=None):
    """Counts against order on a log scale."""
    with plt.rc_context(_RC):
        xs = [r[0] for r in rows]
        ys = [r[1] for r in rows]
        fig, ax = plt.subplots(figsize=(4.0, 2.8))
        ax.plot(xs, ys, marker="o", color=UPPER, lw=1.0)
        if ys and min(ys) > 0:
            ax.set_yscale("log")
        ax.set_xlabel(labels[0])
        ax.set_ylabel(labels[1])
        ax.set_xticks(xs)
        if title:
            ax.set_title(title)
        _save(fig, path)
