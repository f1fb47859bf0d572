"""Simple undirected graphs on vertices 0..n-1, the named families, and text I/O.

Formats handled here:

* graph6 (McKay's format, as produced by nauty's ``showg``/``geng``)
* edge list: first line ``n``, then one ``u v`` pair per line
* DOT and JSON export, optionally annotated with a tessellation cover
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

Edge = tuple[int, int]

FAMILIES = (
    "wheel",
    "windmill",
    "extended_wheel",
    "star",
    "complete",
    "cycle",
    "path",
    "petersen",
)


class GraphError(ValueError):
    """Raised for invalid graph data or generator parameters."""


class ParseError(GraphError):
    def __init__(self, message: str, line: Optional[int] = None, offset: Optional[int] = None):
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif offset is not None:
            where = f"offset {offset}: "
        super().__init__(where + message)
        self.line = line
        self.offset = offset


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        normed = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} out of range for n={self.n}")
            normed.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(normed))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as an int bitmask."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for a, b in combinations(vs, 2))

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to 0..k-1, plus the map new label -> old label."""
        old = sorted(vertices)
        index = {v: i for i, v in enumerate(old)}
        sub = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph.from_edges(len(old), sub), old

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def edgeless(n: int) -> Graph:
    return Graph(n)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)

    def label(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}({args})"


def _require(cond: bool, msg: str):
    if not cond:
        raise GraphError(msg)


def wheel(n: int) -> Graph:
    """W_n: rim cycle 0..n-1 and hub n joined to every rim vertex."""
    _require(n > 2, f"wheel needs n > 2, got {n}")
    rim = [(i, (i + 1) % n) for i in range(n)]
    spokes = [(i, n) for i in range(n)]
    return Graph.from_edges(n + 1, rim + spokes)


def extended_wheel(n: int) -> Graph:
    """E_{3,n}: W_{3n} plus all edges between rim vertices with equal residue mod 3."""
    _require(n >= 2, f"extended_wheel needs n >= 2, got {n}")
    base = wheel(3 * n)
    extra = [
        (3 * i + r, 3 * j + r)
        for r in range(3)
        for i, j in combinations(range(n), 2)
    ]
    return Graph.from_edges(base.n, list(base.edges) + extra)


def windmill(blades: int, size: int = 3) -> Graph:
    """``blades`` copies of K_size glued at hub vertex 0."""
    _require(blades >= 1, f"windmill needs at least one blade, got {blades}")
    _require(size >= 2, f"windmill blade size must be >= 2, got {size}")
    edges = []
    for b in range(blades):
        blade = [0] + [1 + b * (size - 1) + i for i in range(size - 1)]
        edges.extend(combinations(blade, 2))
    return Graph.from_edges(1 + blades * (size - 1), edges)


def star(k: int) -> Graph:
    """S_k: centre 0 with leaves 1..k."""
    _require(k >= 1, f"star needs k >= 1, got {k}")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


_GENERATORS = {
    "wheel": (wheel, ("n",)),
    "windmill": (windmill, ("l", "s")),
    "extended_wheel": (extended_wheel, ("n",)),
    "star": (star, ("k",)),
    "complete": (complete, ("n",)),
    "cycle": (cycle, ("n",)),
    "path": (path, ("n",)),
    "petersen": (petersen, ()),
}


def gen_family(spec: FamilySpec) -> Graph:
    if spec.family not in _GENERATORS:
        raise GraphError(f"unknown family {spec.family!r}; choose from {', '.join(FAMILIES)}")
    fn, names = _GENERATORS[spec.family]
    unknown = set(spec.params) - set(names)
    if unknown:
        raise GraphError(f"{spec.family} does not take {sorted(unknown)}")
    args = {}
    for name in names:
        if name in spec.params:
            args[name] = int(spec.params[name])
        elif not (spec.family == "windmill" and name == "s"):
            raise GraphError(f"{spec.family} requires parameter {name!r}")
    if spec.family == "windmill":
        return windmill(args["l"], args.get("s", 3))
    return fn(*args.values())


# --- graph6 ---------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"graph too large for graph6: n={n}")


def to_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [_encode_n(g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string", offset=0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", offset=pos)
    vals = [ord(c) - 63 for c in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated 8-byte size header", offset=0)
        n, pos = 0, 8
        for v in vals[2:8]:
            n = (n << 6) | v
    else:
        if len(vals) < 4:
            raise ParseError("truncated 4-byte size header", offset=0)
        n, pos = 0, 4
        for v in vals[1:4]:
            n = (n << 6) | v
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, found {len(body)}", offset=pos)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte, bit = divmod(k, 6)
            if (body[byte] >> (5 - bit)) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("nonzero padding bits", offset=pos + need - 1)
    return Graph.from_edges(n, edges)


# --- edge list ------------------------------------------------------------


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    rows = [(i, ln) for i, ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise ParseError("missing vertex-count header", line=1)
    hline, head = rows[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"header must be a vertex count, got {head!r}", line=hline) from None
    if n < 0:
        raise ParseError(f"negative vertex count {n}", line=hline)
    seen = set()
    for lineno, ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {ln!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {ln!r}", line=lineno) from None
        if u == v:
            raise ParseError(f"loop at vertex {u}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1} in {ln!r}", line=lineno)
        e = _norm(u, v)
        if e in seen:
            raise ParseError(f"duplicate edge {e}", line=lineno)
        seen.add(e)
    return Graph.from_edges(n, seen)


def parse_graph(text: str, format: str) -> Graph:
    if format == "graph6":
        return from_graph6(text)
    if format == "edge_list":
        return from_edge_list(text)
    raise GraphError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: str) -> str:
    if format == "graph6":
        return to_graph6(g)
    if format == "edge_list":
        return to_edge_list(g)
    raise GraphError(f"unknown graph format {format!r}")


# --- annotated export -----------------------------------------------------

# Enough distinct colours for every cover the exact solver can produce.
PALETTE = (
    "red", "blue", "green3", "orange", "purple", "brown", "magenta", "cyan4",
    "gold3", "navy", "darkgreen", "deeppink", "gray40", "olivedrab", "sienna", "teal",
)


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges]}


def graph_from_dict(d: dict) -> Graph:
    try:
        return Graph.from_edges(int(d["n"]), [tuple(e) for e in d["edges"]])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad graph JSON: {exc}") from None


def export_annotated(g: Graph, cover=None, format: str = "dot") -> str:
    """DOT or JSON rendering of ``g``; with a cover, edges carry the tessellation index."""
    from .tessellation import InvalidCover, edge_set, is_valid_cover

    if cover is not None:
        missing = is_valid_cover(g, cover)
        if missing:
            raise InvalidCover(missing)

    if format == "json":
        out = graph_to_dict(g)
        if cover is not None:
            out["cover"] = [
                {
                    "polygons": [list(p) for p in t.polygons],
                    "edges": [list(e) for e in sorted(edge_set(g, t))],
                }
                for t in cover.tessellations
            ]
        return json.dumps(out)

    if format != "dot":
        raise GraphError(f"unknown export format {format!r}")
    first = {}
    if cover is not None:
        for idx, t in enumerate(cover.tessellations):
            for e in edge_set(g, t):
                first.setdefault(e, idx)
    lines = ["graph G {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.sorted_edges:
        if (u, v) in first:
            idx = first[(u, v)]
            colour = PALETTE[idx % len(PALETTE)]
            lines.append(f'  {u} -- {v} [color="{colour}", tessellation={idx}];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
