"""How the appendix-style heuristic compares with the exact answer.

For every labelled graph on up to --max-n vertices: the greedy cover size,
the exact T, chi(K), and the minimum achievable using only tessellations that
contain a maximal clique. Prints summary counts and a few witnesses.
"""

import argparse
from collections import Counter
from itertools import combinations

from tesscover.cliques import clique_graph
from tesscover.coloring import chromatic_number
from tesscover.graph import Graph
from tesscover.solver import greedy_cover, restricted_minimum, tessellation_number


def labelled(max_n):
    for n in range(max_n + 1):
        pairs = list(combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--show", type=int, default=3)
    args = ap.parse_args()

    stats = Counter()
    examples = {"greedy>chi(K)": [], "restricted>T": []}
    for g in labelled(args.max_n):
        if not g.edges:
            continue
        stats["graphs"] += 1
        T = tessellation_number(g).t_number
        chi = chromatic_number(clique_graph(g).base)[0]
        greedy = greedy_cover(g).t_number
        restricted = len(restricted_minimum(g)[0])
        stats["greedy==T"] += greedy == T
        if greedy > chi:
            stats["greedy>chi(K)"] += 1
            examples["greedy>chi(K)"].append((g, T, chi, greedy))
        if restricted > T:
            stats["restricted>T"] += 1
            examples["restricted>T"].append((g, T, chi, restricted))

    for k, v in stats.items():
        print(f"{k:>15}: {v}")
    for name, rows in examples.items():
        for g, T, chi, size in rows[: args.show]:
            print(f"{name}: edges {sorted(g.edges)}  T={T} chi(K)={chi} size={size}")


if __name__ == "__main__":
    main()
