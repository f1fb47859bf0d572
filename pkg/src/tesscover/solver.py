"""Bounds, exact decision/optimisation, and greedy heuristics for tessellation covers.

The exact search treats a k-tessellation cover as k layers of edges. Within a
layer the chosen edges must form vertex-disjoint cliques of the host graph,
so putting edge {u, v} into a layer merges the layer's polygons around u and
v, and the merge is legal only if the union is still a clique. Closure is
automatic: every pair inside a merged polygon becomes covered by that layer.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Optional

from .cliques import _bits, clique_graph, clique_number_at, maximal_cliques
from .coloring import chromatic_number, is_bipartite
from .graph import Graph
from .tessellation import (
    DEFAULT_CAP,
    Tessellation,
    TessellationCover,
    edge_bits,
    edge_mask,
    enumerate_tessellations,
    enumerate_tessellations_restricted,
    is_valid_cover,
)

# Beyond this the CLI refuses exact search unless asked for a heuristic.
ENVELOPE_VERTICES = 25
ENVELOPE_EDGES = 60
ENVELOPE_K = 8


class SearchTimeout(RuntimeError):
    """Exact search ran past its deadline; no answer was produced."""


class IncompleteCover(RuntimeError):
    """The (capped) tessellation stream ran out before every edge was covered."""


@dataclass(frozen=True)
class BoundsReport:
    lower: int
    upper: int
    lower_reason: str
    upper_witness: TessellationCover

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "lower_reason": self.lower_reason}


@dataclass(frozen=True)
class CoverResult:
    t_number: int
    witness: TessellationCover
    method: str  # "exact" | "greedy" | "upper_bound_construction"
    stats: dict = field(default_factory=dict, compare=False)


def is_clique_union(g: Graph) -> bool:
    """True when every connected component is a complete graph."""
    return all(g.induced(c)[0].m == len(c) * (len(c) - 1) // 2 for c in g.components())


def local_degree_bound(g: Graph, cliques=None) -> int:
    """max over v of ceil(deg(v) / (omega_v - 1)).

    A tessellation puts v in one polygon, so it covers at most omega_v - 1
    of the edges at v.
    """
    omega = clique_number_at(g, cliques)
    best = 0
    for v in range(g.n):
        d = g.degree(v)
        if d:
            best = max(best, math.ceil(d / (omega[v] - 1)))
    return best


def _structural_bound(g: Graph) -> tuple[int, str]:
    if not g.edges:
        return 0, "edgeless"
    if is_clique_union(g):
        return 1, "clique_union"
    return 2, "bipartite_clique_graph"


def rigorous_lower_bound(g: Graph) -> int:
    """Lower bound that does not rely on the clique-graph 2-colourability theorem."""
    return max(_structural_bound(g)[0], local_degree_bound(g))


def lower_bound(g: Graph) -> tuple[int, str]:
    if not g.edges:
        return 0, "edgeless"
    cliques = maximal_cliques(g)
    value, reason = _structural_bound(g)
    if value == 2 and not is_bipartite(clique_graph(g).base)[0]:
        value, reason = 3, "non_bipartite_clique_graph"
    local = local_degree_bound(g, cliques)
    if local > value:
        return local, "local_degree"
    return value, reason


def upper_bound_via_clique_coloring(g: Graph) -> TessellationCover:
    """One tessellation per colour class of an optimal colouring of K(g).

    Cliques sharing a colour are pairwise disjoint, so each class plus
    singletons is a tessellation, and every edge lies in some maximal clique.
    """
    if not g.edges:
        return TessellationCover()
    kg = clique_graph(g)
    _, col = chromatic_number(kg.base)
    tess = []
    for members in col.classes():
        polys = [kg.cliques[i] for i in members if len(kg.cliques[i]) > 1]
        if polys:
            tess.append(Tessellation.completed(polys, g.n))
    return TessellationCover(tuple(tess))


def bounds(g: Graph) -> BoundsReport:
    lo, reason = lower_bound(g)
    up = upper_bound_via_clique_coloring(g)
    return BoundsReport(lo, len(up), reason, up)


# --- exact decision -------------------------------------------------------


def _edge_order(g: Graph) -> list[tuple[int, int]]:
    """Most constrained first: descending min(omega_u, omega_v), then lexicographic."""
    omega = clique_number_at(g)
    return sorted(g.edges, key=lambda e: (-min(omega[e[0]], omega[e[1]]), e))


class _LayerSearch:
    def __init__(self, g: Graph, k: int, deadline: Optional[float]):
        self.g = g
        self.k = k
        self.deadline = deadline
        self.nodes = 0
        n = g.n
        self.closed = [g.adj_mask[v] | (1 << v) for v in range(n)]
        self.order = _edge_order(g)
        self.eid = {e: i for i, e in enumerate(self.order)}
        self.cov = [0] * len(self.order)
        self.poly = [[1 << v for v in range(n)] for _ in range(k)]
        self.used = 0

    def _is_clique(self, mask: int) -> bool:
        closed = self.closed
        for x in _bits(mask):
            if mask & ~closed[x]:
                return False
        return True

    def _pairs(self, a: int, b: int):
        eid = self.eid
        for x in _bits(a):
            for y in _bits(b):
                yield eid[(x, y) if x < y else (y, x)]

    def _merge(self, layer: int, a: int, b: int):
        row = self.poly[layer]
        m = a | b
        for x in _bits(m):
            row[x] = m
        cov = self.cov
        for i in self._pairs(a, b):
            cov[i] += 1

    def _split(self, layer: int, a: int, b: int):
        row = self.poly[layer]
        for x in _bits(a):
            row[x] = a
        for x in _bits(b):
            row[x] = b
        cov = self.cov
        for i in self._pairs(a, b):
            cov[i] -= 1

    def _feasible_somewhere(self, start: int) -> bool:
        """With every layer in use, each uncovered edge must still fit in some layer."""
        order, cov, poly = self.order, self.cov, self.poly
        for i in range(start, len(order)):
            if cov[i]:
                continue
            u, v = order[i]
            if not any(self._is_clique(poly[L][u] | poly[L][v]) for L in range(self.k)):
                return False
        return True

    def run(self) -> bool:
        return self._rec(0)

    def _rec(self, pos: int) -> bool:
        order, cov = self.order, self.cov
        while pos < len(order) and cov[pos]:
            pos += 1
        if pos == len(order):
            return True
        self.nodes += 1
        if self.deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise SearchTimeout(f"exact search for k={self.k} exceeded its time limit")
        u, v = order[pos]
        # layers beyond the first unused one are symmetric to it
        for layer in range(min(self.used + 1, self.k)):
            row = self.poly[layer]
            a, b = row[u], row[v]
            if not self._is_clique(a | b):
                continue
            opened = layer == self.used
            if opened:
                self.used += 1
            self._merge(layer, a, b)
            ok = self.used < self.k or self._feasible_somewhere(pos + 1)
            if ok and self._rec(pos + 1):
                return True
            self._split(layer, a, b)
            if opened:
                self.used -= 1
        return False

    def witness(self) -> TessellationCover:
        tess = []
        for layer in range(self.used):
            polys = {m for m in self.poly[layer]}
            tess.append(Tessellation.of(tuple(_bits(m)) for m in polys))
        return TessellationCover(tuple(tess))


def _decide_connected(g: Graph, k: int, deadline, stats) -> Optional[TessellationCover]:
    if not g.edges:
        return TessellationCover()
    if k <= 0 or rigorous_lower_bound(g) > k:
        return None
    search = _LayerSearch(g, k, deadline)
    found = search.run()
    stats["nodes"] = stats.get("nodes", 0) + search.nodes
    return search.witness() if found else None


def _merge_components(n: int, parts: list[tuple[list[int], TessellationCover]]) -> TessellationCover:
    """Stack per-component covers layer by layer, padding short ones with singletons."""
    size = max((len(c) for _, c in parts), default=0)
    layers = []
    for j in range(size):
        polys = []
        for old, cover in parts:
            if j < len(cover):
                polys.extend(tuple(old[v] for v in p) for p in cover.tessellations[j].polygons)
        layers.append(Tessellation.completed(polys, n))
    return TessellationCover(tuple(layers))


def decide_k_tessellable(
    g: Graph,
    k: int,
    timeout: Optional[float] = None,
    split_components: bool = True,
    stats: Optional[dict] = None,
) -> Optional[TessellationCover]:
    """A cover of ``g`` with at most ``k`` tessellations, or None if there is none.

    Exact. Raises SearchTimeout if ``timeout`` seconds elapse first.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    stats = {} if stats is None else stats
    deadline = None if timeout is None else time.monotonic() + timeout
    if not g.edges:
        return TessellationCover()
    if not split_components:
        return _decide_connected(g, k, deadline, stats)
    parts = []
    for comp in g.components():
        sub, old = g.induced(comp)
        if not sub.edges:
            continue
        cover = _decide_connected(sub, k, deadline, stats)
        if cover is None:
            return None
        parts.append((old, cover))
    return _merge_components(g.n, parts)


def _exact_connected(g: Graph, certified: bool, deadline, stats) -> TessellationCover:
    start = rigorous_lower_bound(g) if certified else lower_bound(g)[0]
    upper = upper_bound_via_clique_coloring(g)
    for k in range(start, len(upper)):
        remaining = None if deadline is None else deadline - time.monotonic()
        if remaining is not None and remaining <= 0:
            raise SearchTimeout("exact search exceeded its time limit")
        cover = decide_k_tessellable(g, k, timeout=remaining, split_components=False, stats=stats)
        if cover is not None:
            return cover
    # every smaller k was refuted, so the colouring construction is optimal
    return upper


def tessellation_number(
    g: Graph,
    timeout: Optional[float] = None,
    certified: bool = False,
    split_components: bool = True,
) -> CoverResult:
    """Exact T(g) with a minimum cover as witness.

    Tries k upward from the lower bound; the clique-colouring cover caps the
    search. ``certified=True`` starts from bounds that do not depend on the
    clique-graph characterisation of 2-tessellable graphs, so every k below
    the answer is refuted by search.
    """
    stats: dict = {}
    deadline = None if timeout is None else time.monotonic() + timeout
    if not g.edges:
        return CoverResult(0, TessellationCover(), "exact", stats)
    if split_components:
        parts = []
        for comp in g.components():
            sub, old = g.induced(comp)
            if sub.edges:
                parts.append((old, _exact_connected(sub, certified, deadline, stats)))
        witness = _merge_components(g.n, parts)
    else:
        witness = _exact_connected(g, certified, deadline, stats)
    assert not is_valid_cover(g, witness)
    return CoverResult(len(witness), witness, "exact", stats)


# --- set-cover formulations -----------------------------------------------


def _prune_dominated(masks: list[int]) -> list[int]:
    """Indices of masks not strictly contained in another (first copy of duplicates kept)."""
    order = sorted(range(len(masks)), key=lambda i: -masks[i].bit_count())
    kept: list[int] = []
    seen = set()
    for i in order:
        m = masks[i]
        if m in seen:
            continue
        if any(m & ~masks[j] == 0 for j in kept):
            continue
        seen.add(m)
        kept.append(i)
    return sorted(kept)


def min_set_cover(masks: list[int], full: int, limit: Optional[int] = None) -> Optional[list[int]]:
    """Smallest list of indices whose masks OR to ``full``, by breadth-first search over unions."""
    if full == 0:
        return []
    idx = _prune_dominated(masks)
    level = {0: None}
    parent: dict[int, tuple[int, int]] = {}
    depth = 0
    while level and (limit is None or depth < limit):
        depth += 1
        nxt = {}
        for m in level:
            for i in idx:
                u = m | masks[i]
                if u == m or u in parent or u in nxt:
                    continue
                nxt[u] = None
                parent[u] = (m, i)
                if u == full:
                    chosen = []
                    while u:
                        u, j = parent[u]
                        chosen.append(j)
                    return chosen[::-1]
        level = nxt
    return None


def greedy_cover(g: Graph, cap: Optional[int] = DEFAULT_CAP) -> CoverResult:
    """Greedy set cover over the restricted tessellation stream.

    Each round takes the tessellation covering most uncovered edges; ties go
    to the lexicographically least canonical tessellation.
    """
    if not g.edges:
        return CoverResult(0, TessellationCover(), "greedy")
    bits = edge_bits(g)
    full = (1 << len(bits)) - 1
    stream = enumerate_tessellations_restricted(g, cap)
    items = [(t, edge_mask(g, t, bits)) for t in stream]
    covered = 0
    chosen = []
    while covered != full:
        best = None
        for t, m in items:
            gain = (m & ~covered).bit_count()
            if gain == 0:
                continue
            if best is None or gain > best[0] or (gain == best[0] and t.polygons < best[1].polygons):
                best = (gain, t, m)
        if best is None:
            raise IncompleteCover(
                f"stream truncated after {stream.emitted} tessellations with "
                f"{(full & ~covered).bit_count()} edges uncovered"
            )
        chosen.append(best[1])
        covered |= best[2]
    return CoverResult(len(chosen), TessellationCover(tuple(chosen)), "greedy",
                       {"stream_size": len(items), "truncated": stream.truncated})


def contains_maximal_polygon(t: Tessellation, maximal: set) -> bool:
    return any(p in maximal for p in t.polygons)


def restricted_minimum(g: Graph, cap: Optional[int] = DEFAULT_CAP, limit: Optional[int] = None):
    """Minimum cover using only tessellations with a maximal-clique polygon.

    Returns ``(cover or None, truncated)``.
    """
    if not g.edges:
        return TessellationCover(), False
    bits = edge_bits(g)
    stream = enumerate_tessellations_restricted(g, cap)
    tess = list(stream)
    masks = [edge_mask(g, t, bits) for t in tess]
    chosen = min_set_cover(masks, (1 << len(bits)) - 1, limit)
    if chosen is None:
        return None, stream.truncated
    return TessellationCover(tuple(tess[i] for i in chosen)), stream.truncated


def maximal_polygon_check(
    g: Graph,
    cap: Optional[int] = DEFAULT_CAP,
    timeout: Optional[float] = None,
):
    """Does some minimum cover use a maximal clique as a polygon in every tessellation?

    Returns ``(True, cover)``, ``(False, None)`` or ``(None, None)`` when the
    search space could not be exhausted.
    """
    try:
        t = tessellation_number(g, timeout=timeout).t_number
    except SearchTimeout:
        return None, None
    if t == 0:
        return True, TessellationCover()
    cover, truncated = restricted_minimum(g, cap, limit=t)
    if cover is not None:
        return True, cover
    if not truncated:
        return False, None
    if g.n <= 8:
        # exhaustive fallback: all tessellations, filtered to the restricted ones
        maximal = set(maximal_cliques(g))
        bits = edge_bits(g)
        tess = [x for x in enumerate_tessellations(g, None) if contains_maximal_polygon(x, maximal)]
        chosen = min_set_cover([edge_mask(g, x, bits) for x in tess], (1 << len(bits)) - 1, limit=t)
        if chosen is None:
            return False, None
        return True, TessellationCover(tuple(tess[i] for i in chosen))
    return None, None
