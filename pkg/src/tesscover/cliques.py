"""Maximal clique enumeration and the clique graph operator K."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

Clique = tuple[int, ...]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _to_tuple(mask: int) -> Clique:
    return tuple(_bits(mask))


def maximal_cliques(g: Graph) -> list[Clique]:
    """All inclusion-maximal cliques of ``g``, each sorted, in lexicographic order.

    Bron-Kerbosch with Tomita pivoting over bitmask vertex sets. Isolated
    vertices come out as singleton cliques. Worst case is exponential
    (3^(n/3) cliques), which is irrelevant at the sizes used here.
    """
    adj = g.adj_mask
    found: list[int] = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            found.append(r)
            return
        # pivot maximising |P ∩ N(u)|
        pivot = max(_bits(p | x), key=lambda u: (adj[u] & p).bit_count())
        for v in _bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    cliques = sorted(_to_tuple(r) for r in found)

    covered = set()
    for c in cliques:
        for i, u in enumerate(c):
            for v in c[i + 1:]:
                covered.add((u, v))
    assert covered == g.edges, "maximal cliques failed to cover every edge"
    return cliques


def clique_number_at(g: Graph, cliques: list[Clique] | None = None) -> list[int]:
    """omega_v: size of the largest clique containing each vertex."""
    if cliques is None:
        cliques = maximal_cliques(g)
    best = [1] * g.n
    for c in cliques:
        for v in c:
            best[v] = max(best[v], len(c))
    return best


@dataclass(frozen=True)
class CliqueGraph:
    """K(g): one vertex per maximal clique, adjacent when the cliques intersect.

    ``cliques[i]`` is the clique of the host graph behind vertex ``i`` of ``base``.
    """

    base: Graph
    cliques: tuple[Clique, ...]


def clique_graph(g: Graph) -> CliqueGraph:
    cliques = maximal_cliques(g)
    sets = [frozenset(c) for c in cliques]
    edges = [
        (i, j)
        for i in range(len(sets))
        for j in range(i + 1, len(sets))
        if sets[i] & sets[j]
    ]
    return CliqueGraph(Graph.from_edges(len(cliques), edges), tuple(cliques))
