"""The hypermap text format and serializers (JSON arc schema, DOT, TSV).

A hypermap file holds ``key = value`` lines; ``#`` starts a comment::

    name = small example
    n = 5
    sigma = (1,4)(2,5)(3)
    alpha = (1,2,3)(4,5)

Optional ``vertex_numbers`` and ``edge_numbers`` (comma separated, one per
cycle in order of least point) fix a vertex-edge labeling of a map.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import ParseError
from .hypermap import Hypermap
from .perm import parse_cycles

_REQUIRED = ("n", "sigma", "alpha")
_OPTIONAL = ("name", "vertex_numbers", "edge_numbers")


@dataclass
class HypermapFile:
    n: int
    sigma_text: str
    alpha_text: str
    name: Optional[str] = None
    vertex_numbers: Optional[list] = field(default=None)
    edge_numbers: Optional[list] = field(default=None)

    def hypermap(self) -> Hypermap:
        return Hypermap(parse_cycles(self.sigma_text, self.n), parse_cycles(self.alpha_text, self.n), name=self.name)

    def to_text(self) -> str:
        lines = []
        if self.name:
            lines.append(f"name = {self.name}")
        lines.append(f"n = {self.n}")
        lines.append(f"sigma = {self.sigma_text}")
        lines.append(f"alpha = {self.alpha_text}")
        if self.vertex_numbers:
            lines.append("vertex_numbers = " + ",".join(map(str, self.vertex_numbers)))
        if self.edge_numbers:
            lines.append("edge_numbers = " + ",".join(map(str, self.edge_numbers)))
        return "\n".join(lines) + "\n"


def _int_list(key: str, value: str) -> list:
    try:
        return [int(x) for x in value.replace(" ", "").split(",") if x]
    except ValueError:
        raise ParseError(f"{key} must be a comma separated list of integers") from None


def parse_hypermap_text(text: str) -> HypermapFile:
    fields: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in _REQUIRED + _OPTIONAL:
            raise ParseError(f"line {lineno}: unknown key {key!r}")
        if key in fields:
            raise ParseError(f"line {lineno}: key {key!r} given twice")
        fields[key] = value
    missing = [k for k in _REQUIRED if k not in fields]
    if missing:
        raise ParseError("missing " + ", ".join(missing))
    try:
        n = int(fields["n"])
    except ValueError:
        raise ParseError(f"n must be an integer, got {fields['n']!r}") from None
    if n < 0:
        raise ParseError("n must be nonnegative")
    hf = HypermapFile(
        n=n,
        sigma_text=fields["sigma"],
        alpha_text=fields["alpha"],
        name=fields.get("name") or None,
        vertex_numbers=_int_list("vertex_numbers", fields["vertex_numbers"]) if "vertex_numbers" in fields else None,
        edge_numbers=_int_list("edge_numbers", fields["edge_numbers"]) if "edge_numbers" in fields else None,
    )
    # catch malformed cycles at parse time
    parse_cycles(hf.sigma_text, n)
    parse_cycles(hf.alpha_text, n)
    return hf


def read_hypermap_file(path) -> HypermapFile:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None
    return parse_hypermap_text(text)


def load_hypermap(path) -> Hypermap:
    return read_hypermap_file(path).hypermap()


def hypermap_to_text(h: Hypermap, name: Optional[str] = None) -> str:
    return HypermapFile(h.n, h.sigma.format(), h.alpha.format(), name or h.name).to_text()


def data_dir() -> Path:
    return Path(__file__).parent / "data"


def example_files() -> list:
    return sorted(data_dir().glob("*.hm"))


# -- other formats ----------------------------------------------------------------


def to_json(obj) -> str:
    """Stable JSON for diagram dictionaries."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def counts_tsv(rows) -> str:
    """``order<TAB>count`` lines."""
    return "".join(f"{a}\t{b}\n" for a, b in rows)


def hypermap_dot(h: Hypermap) -> str:
    """Bipartite vertex/hyperedge incidence graph; each point is an edge."""
    lines = ["graph hypermap {"]
    for k, c in enumerate(h.sigma.cycles()):
        lines.append(f'  v{k} [label="' + ",".join(map(str, c)) + '", shape=circle];')
    for k, c in enumerate(h.alpha.cycles()):
        lines.append(f'  e{k} [label="' + ",".join(map(str, c)) + '", shape=box];')
    vidx = h.sigma.cycle_index()
    eidx = h.alpha.cycle_index()
    for x in range(1, h.n + 1):
        lines.append(f'  v{vidx[x]} -- e{eidx[x]} [label="{x}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def arcs_dot(order: list, upper: list, lower: list) -> str:
    """Points on a line with upper and lower arc blocks, as DOT."""
    lines = ["graph arcs {", "  rankdir=LR;"]
    for x in order:
        lines.append(f'  p{x} [label="{x}"];')
    lines.append("  " + " -- ".join(f"p{x}" for x in order) + " [style=invis];" if len(order) > 1 else "")
    for color, blocks in (("blue", upper), ("red", lower)):
        for b in blocks:
            pairs = list(zip(b, b[1:])) + ([(b[-1], b[0])] if len(b) > 2 else [])
            for a, c in pairs:
                lines.append(f"  p{a} -- p{c} [color={color}];")
    lines.append("}")
    return "\n".join(x for x in lines if x) + "\n"
