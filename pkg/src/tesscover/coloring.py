"""Exact vertex/edge colouring and bipartiteness with certificates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .cliques import maximal_cliques
from .graph import Edge, Graph


@dataclass(frozen=True)
class Coloring:
    assignment: tuple[int, ...]  # vertex -> colour id
    colors_used: int

    def is_proper(self, g: Graph) -> bool:
        if len(self.assignment) != g.n:
            return False
        if any(self.assignment[u] == self.assignment[v] for u, v in g.edges):
            return False
        return set(self.assignment) == set(range(self.colors_used))

    def classes(self) -> list[list[int]]:
        out = [[] for _ in range(self.colors_used)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return out


def _relabel(colors: list[int]) -> Coloring:
    """Renumber colours by first appearance so ids are 0..k-1."""
    remap: dict[int, int] = {}
    for c in colors:
        remap.setdefault(c, len(remap))
    return Coloring(tuple(remap[c] for c in colors), len(remap))


def dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    colors = [-1] * n
    sat = [set() for _ in range(n)]
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (len(sat[u]), g.degree(u), -u),
        )
        c = 0
        while c in sat[v]:
            c += 1
        colors[v] = c
        for w in g.adj[v]:
            sat[w].add(c)
    return colors


def chromatic_number(g: Graph) -> tuple[int, Coloring]:
    """Exact chromatic number by DSATUR branch and bound.

    Seeded with the greedy DSATUR colouring as incumbent and the largest
    clique as lower bound. Branches on the lowest-index uncoloured vertex of
    maximum saturation, so the witness is deterministic.
    """
    n = g.n
    if n == 0:
        return 0, Coloring((), 0)
    if not g.edges:
        return 1, Coloring((0,) * n, 1)

    best_colors = dsatur_greedy(g)
    best = max(best_colors) + 1
    lower = max(len(c) for c in maximal_cliques(g))
    if lower == best:
        col = _relabel(best_colors)
        assert col.is_proper(g)
        return best, col

    adj = [sorted(a) for a in g.adj]
    colors = [-1] * n
    # nbr_count[v][c]: coloured neighbours of v with colour c
    nbr_count = [[0] * best for _ in range(n)]
    sat = [0] * n

    def assign(v, c):
        colors[v] = c
        for w in adj[v]:
            if nbr_count[w][c] == 0:
                sat[w] += 1
            nbr_count[w][c] += 1

    def unassign(v, c):
        colors[v] = -1
        for w in adj[v]:
            nbr_count[w][c] -= 1
            if nbr_count[w][c] == 0:
                sat[w] -= 1

    def search(colored: int, used: int) -> bool:
        nonlocal best, best_colors
        if colored == n:
            best = used
            best_colors = colors[:]
            return best == lower
        v, top = -1, -1
        for u in range(n):
            if colors[u] < 0 and sat[u] > top:
                v, top = u, sat[u]
        counts = nbr_count[v]
        c = 0
        # only colourings strictly better than the incumbent are explored
        while c <= used and c < best - 1:
            if not counts[c]:
                assign(v, c)
                done = search(colored + 1, max(used, c + 1))
                unassign(v, c)
                if done:
                    return True
            c += 1
        return False

    search(0, 0)
    col = _relabel(best_colors)
    assert col.is_proper(g) and col.colors_used == best
    return best, col


def is_bipartite(g: Graph) -> tuple[bool, object]:
    """Return ``(True, 2-colouring)`` or ``(False, odd cycle as a vertex list)``."""
    side = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adj[u]):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif side[w] == side[u]:
                    return False, _odd_cycle(u, w, parent, depth)
    colouring = Coloring(tuple(side), len(set(side))) if g.n else Coloring((), 0)
    return True, colouring


def _odd_cycle(u, w, parent, depth):
    a, b = [u], [w]
    while depth[a[-1]] > depth[b[-1]]:
        a.append(parent[a[-1]])
    while depth[b[-1]] > depth[a[-1]]:
        b.append(parent[b[-1]])
    while a[-1] != b[-1]:
        a.append(parent[a[-1]])
        b.append(parent[b[-1]])
    return a + b[-2::-1]


def line_graph(g: Graph) -> tuple[Graph, tuple[Edge, ...]]:
    edges = g.sorted_edges
    at = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        at[u].append(i)
        at[v].append(i)
    ledges = set()
    for inc in at:
        for x in range(len(inc)):
            for y in range(x + 1, len(inc)):
                ledges.add((inc[x], inc[y]))
    return Graph.from_edges(len(edges), ledges), edges


def chromatic_index(g: Graph) -> tuple[int, dict[Edge, int]]:
    """Exact chromatic index via the chromatic number of the line graph."""
    lg, edges = line_graph(g)
    k, col = chromatic_number(lg)
    return k, {e: col.assignment[i] for i, e in enumerate(edges)}
