"""Command-line interface.

Every subcommand except ``meanders`` reads a hypermap file. Exit status is
1 for parse errors, 2 for validation errors and 3 for precondition errors;
messages go to standard error.
"""

import argparse
import os
import re
import sys
from pathlib import Path

from . import dc, io, meander, rtree, spanning
from .errors import HypermapError, ParseError, PreconditionError, ValidationError
from .perm import parse_cycles

TRANSFORMS = {
    "dual": "dual",
    "reciprocal": "reciprocal",
    "hyperdual": "hyperdual",
    "mirror": "mirror",
    "kreweras": "kreweras_dual",
}

_PAIR = re.compile(r"\(\s*(\d+)\s*[, ]\s*(\d+)\s*\)")


def parse_edges(text):
    """``"(1,5)(5,6)"`` -> [(1, 5), (5, 6)]; pairs may share points."""
    stripped = _PAIR.sub("", text).replace(",", "").strip()
    if stripped:
        raise ParseError(f"cannot read edge list {text!r}")
    return [(int(a), int(b)) for a, b in _PAIR.findall(text)]


def _emit(text, output=None):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _warn(msg):
    print(f"warning: {msg}", file=sys.stderr)


def _load(args):
    hf = io.read_hypermap_file(args.file)
    return hf, hf.hypermap()


def _labeling(hf, h):
    return rtree.label_map(h, hf.vertex_numbers, hf.edge_numbers)


# -- subcommands -------------------------------------------------------------


def cmd_genus(args):
    _, h = _load(args)
    print(h.genus)


def cmd_transform(args):
    _, h = _load(args)
    t = getattr(h, TRANSFORMS[args.op])()
    _emit(io.hypermap_to_text(t, f"{args.op} of {h.name}" if h.name else None))


def cmd_count(args):
    _, h = _load(args)
    if args.method == "brute":
        print(spanning.count_spanning(h, args.genus))
    else:
        print(spanning.count_via_recursion(h, args.genus))


def cmd_enumerate(args):
    _, h = _load(args)
    lines = sorted(s.theta.format() or "()" for s in spanning.spanning_unicellular(h, args.genus))
    _emit("".join(x + "\n" for x in lines))


def cmd_tours(args):
    _, h = _load(args)
    tours = spanning.machi_set(h, args.kind)
    lines = sorted("(" + ",".join(map(str, z.cycle_of(1))) + ")" for z in tours)
    _emit("".join(x + "\n" for x in lines))


def cmd_dc(args):
    _, h = _load(args)
    if args.action == "enumerate":
        lines = ["".join(str(e) for e in g.sorted_edges()) or "()" for g in dc.enumerate_dc_graphs(h)]
        _emit("".join(x + "\n" for x in sorted(lines)))
        return 0
    if args.edges is None:
        raise PreconditionError(f"dc {args.action} needs --edges")
    edges = parse_edges(args.edges)
    if args.action == "validate":
        if not dc.validate_dc_graph(h, edges):
            print("invalid: no deletion-contraction process uses exactly these edges", file=sys.stderr)
            return 3
        tree = next(dc.allowable_trees(h, edges))
        print("valid")
        print("tree " + "".join(str(e) for e in sorted(tree)))
        return 0
    # run
    if not dc.validate_dc_graph(h, edges):
        raise PreconditionError("edges do not form a deletion-contraction graph")
    tree = next(dc.allowable_trees(h, edges))
    proc = dc.canonical_process(h, edges, tree)
    result = dc.run_process(h, proc)
    text = dc.format_trace(result.trace)
    if args.trace:
        Path(args.trace).write_text(text)
        print(f"{len(result.trace)} steps, final genus {result.final.genus}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_tutte(args):
    _, h = _load(args)
    for line in dc.format_polynomial(dc.tutte_polynomial(h)):
        print(line)


def _meander_rows(order, semi, oracle):
    rows = []
    for k in range(1, order + 1):
        if semi:
            c = len(meander.foldings_oracle(k - 1)) if oracle else meander.count_semimeanders(k)
        else:
            c = len(meander.meanders_oracle(k)) if oracle else meander.count_meanders(k)
        rows.append((k, c))
    return rows


def _meander_listing(order, semi, oracle):
    if semi:
        if oracle:
            items = meander.foldings_oracle(order - 1)
        else:
            host = meander.nested_monopole(order).reciprocal()
            items = {meander.span_to_folding(host, s.theta) for s in spanning.spanning_hypertrees(host)}
        return sorted(",".join(map(str, f.perm)) for f in items)
    if oracle:
        items = meander.meanders_oracle(order)
    else:
        host = meander.parallel_dipole(order).reciprocal()
        items = {meander.span_to_meander(host, s.theta) for s in spanning.spanning_hypertrees(host)}
    return sorted(",".join(map(str, m.meandric_permutation())) for m in items)


def cmd_meanders(args):
    if args.order < 1:
        raise PreconditionError("--order must be at least 1")
    if args.list:
        _emit("".join(x + "\n" for x in _meander_listing(args.order, args.semi, args.oracle)))
        return 0
    if args.all or args.figure:
        rows = _meander_rows(args.order, args.semi, args.oracle)
    else:
        k = args.order
        if args.semi:
            c = len(meander.foldings_oracle(k - 1)) if args.oracle else meander.count_semimeanders(k)
        else:
            c = len(meander.meanders_oracle(k)) if args.oracle else meander.count_meanders(k)
        rows = [(k, c)]
    _emit(io.counts_tsv(rows if args.all else rows[-1:]))
    if args.figure:
        from .plotting import plot_counts

        label = "semimeanders" if args.semi else "meanders"
        plot_counts(rows, args.figure, labels=("order", label))
    return 0


def cmd_rtree(args):
    hf, h = _load(args)
    lab = _labeling(hf, h)
    host = h.reciprocal()
    if args.action == "enumerate":
        lines = sorted(rtree.span_to_tree(h, s.theta, lab).to_text() for s in spanning.spanning_hypertrees(host))
        _emit("".join(x + "\n" for x in lines))
        return 0
    if args.tree:
        tree = rtree.LabeledPlaneTree.from_text(args.tree)
    elif args.theta:
        tree = rtree.span_to_tree(h, parse_cycles(args.theta, h.n), lab)
    else:
        first = next(spanning.spanning_hypertrees(host), None)
        if first is None:
            raise PreconditionError("the reciprocal has no spanning hypertree")
        tree = rtree.span_to_tree(h, first.theta, lab)
    seen = {tree}
    print(tree.to_text())
    for _ in range(args.max_steps):
        step = rtree.franz_earnshaw_reduce(h, tree, lab)
        if step is None:
            break
        tree = step[2]
        print(tree.to_text())
        if tree in seen:
            _warn("reduction revisited a tree; stopping")
            break
        seen.add(tree)
    return 0


def _first_compatible(h):
    for hz in spanning.spanning_unicellular(h, h.genus):
        for hv in spanning.spanning_hypertrees(h):
            if spanning.is_compatible_tours(h, hv.face_tour, hz.face_tour):
                return hv.face_tour, hz.face_tour
    raise PreconditionError("no compatible pair of tours")


def cmd_diagram(args):
    hf, h = _load(args)
    fmt = args.format
    if args.kind == "tree":
        lab = _labeling(hf, h)
        if args.theta:
            theta = parse_cycles(args.theta, h.n)
        else:
            first = next(spanning.spanning_hypertrees(h.reciprocal()), None)
            if first is None:
                raise PreconditionError("the reciprocal has no spanning hypertree")
            theta = first.theta
        tree = rtree.span_to_tree(h, theta, lab)
        if fmt == "svg":
            from .plotting import plot_tree

            plot_tree(tree, _svg_target(args))
            return 0
        if fmt == "dot":
            _emit(tree.to_dot(), args.output)
        else:
            _emit(io.to_json({"kind": "tree", "tree": tree.to_text()}), args.output)
        return 0

    if args.kind == "one-line":
        if args.theta:
            theta = parse_cycles(args.theta, h.n)
        else:
            first = next(spanning.spanning_unicellular(h, h.genus), None)
            if first is None:
                raise PreconditionError("no unicellular span of the host genus")
            theta = first.theta
        d = spanning.one_line_diagram(h, theta)
        if fmt == "svg":
            if h.genus == 0:
                from .plotting import plot_one_line

                plot_one_line(d, _svg_target(args))
                return 0
            _warn("one-line diagrams are drawn only for genus 0; writing JSON to standard output instead")
            fmt, args.output = "json", None
        if fmt == "dot":
            _emit(io.arcs_dot(list(d.order), list(d.upper_arcs), list(d.lower_arcs)), args.output)
        else:
            _emit(io.to_json(d.to_dict()), args.output)
        return 0

    # two-disk
    if args.eta or args.zeta:
        if not (args.eta and args.zeta):
            raise PreconditionError("give both --eta and --zeta")
        eta, zeta = parse_cycles(args.eta, h.n), parse_cycles(args.zeta, h.n)
    else:
        eta, zeta = _first_compatible(h)
    d = spanning.two_disk_diagram(h, eta, zeta)
    if fmt == "svg":
        _warn("two-disk diagrams are exported as data only; writing JSON to standard output instead")
        fmt, args.output = "json", None
    if fmt == "dot":
        _emit(io.arcs_dot(list(d.eta.listing()), list(d.face_partition), list(d.vertex_partition)), args.output)
    else:
        _emit(io.to_json(d.to_dict()), args.output)
    return 0


def _svg_target(args):
    if not args.output:
        raise PreconditionError("--format svg needs --output")
    return args.output


# -- parser ------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="hypermaps", description="Hypermaps as pairs of permutations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("genus", help="print the genus")
    s.add_argument("file")
    s.set_defaults(func=cmd_genus)

    s = sub.add_parser("transform", help="print a transformed hypermap")
    s.add_argument("--op", choices=sorted(TRANSFORMS), required=True)
    s.add_argument("file")
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("count", help="count spanning unicellular hypermaps of a genus")
    s.add_argument("--genus", type=int, default=0)
    s.add_argument("--method", choices=("brute", "recursion"), default="brute")
    s.add_argument("file")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("enumerate", help="list spanning unicellular hypermaps of a genus")
    s.add_argument("--genus", type=int, default=0)
    s.add_argument("file")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("tours", help="list face or vertex tours")
    s.add_argument("--kind", choices=("face", "vertex"), default="face")
    s.add_argument("file")
    s.set_defaults(func=cmd_tours)

    s = sub.add_parser("dc", help="deletion-contraction graphs and processes")
    s.add_argument("action", choices=("validate", "enumerate", "run"))
    s.add_argument("file")
    s.add_argument("--edges", help='transpositions such as "(1,5)(5,6)"')
    s.add_argument("--trace", help="write the process trace to this file")
    s.set_defaults(func=cmd_dc)

    s = sub.add_parser("tutte", help="Tutte polynomial of a map")
    s.add_argument("file")
    s.set_defaults(func=cmd_tutte)

    s = sub.add_parser("meanders", help="meander and semimeander counts")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--semi", action="store_true", help="semimeanders (stamp foldings)")
    s.add_argument("--list", action="store_true", help="list the objects instead of counting")
    s.add_argument("--oracle", action="store_true", help="use the direct enumerator")
    s.add_argument("--all", action="store_true", help="print every order from 1 up")
    s.add_argument("--figure", help="write a count plot (SVG) to this path")
    s.set_defaults(func=cmd_meanders)

    s = sub.add_parser("rtree", help="labeled plane trees of the reciprocal")
    s.add_argument("action", choices=("enumerate", "reduce"))
    s.add_argument("file")
    s.add_argument("--tree", help="starting tree in text form")
    s.add_argument("--theta", help="starting spanning hypertree of the reciprocal")
    s.add_argument("--max-steps", type=int, default=100)
    s.set_defaults(func=cmd_rtree)

    s = sub.add_parser("diagram", help="emit a diagram")
    s.add_argument("--kind", choices=("one-line", "two-disk", "tree"), default="one-line")
    s.add_argument("--format", choices=("json", "dot", "svg"), default="json")
    s.add_argument("--theta")
    s.add_argument("--eta")
    s.add_argument("--zeta")
    s.add_argument("--output", "-o")
    s.add_argument("file")
    s.set_defaults(func=cmd_diagram)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        status = args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 1
    except ValidationError as e:
        print(f"invalid hypermap: {e}", file=sys.stderr)
        return 2
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except HypermapError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        # output cut short by a pager or head; not an error
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
