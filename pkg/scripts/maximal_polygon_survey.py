"""Is there always a minimum cover whose every tessellation has a maximal-clique polygon?

Runs maximal_polygon_check on one graph per isomorphism class (networkx
atlas, connected, up to --max-n vertices) and lists every negative instance
with its exact minimum cover and the best restricted cover.
"""

import argparse
from collections import Counter

import networkx as nx

from tesscover.graph import Graph, to_graph6
from tesscover.solver import maximal_polygon_check, restricted_minimum, tessellation_number


def fmt(cover):
    return " | ".join(" ".join("{" + ",".join(map(str, p)) + "}" for p in t.nontrivial()) for t in cover)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6, choices=range(1, 8))
    args = ap.parse_args()

    outcomes = Counter()
    negatives = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == 0 or h.number_of_nodes() > args.max_n or not nx.is_connected(h):
            continue
        g = Graph.from_edges(h.number_of_nodes(), h.edges())
        status, _ = maximal_polygon_check(g)
        outcomes[status] += 1
        if status is False:
            negatives.append(g)

    print(f"connected graphs up to {args.max_n} vertices: "
          f"{outcomes[True]} yes, {outcomes[False]} no, {outcomes[None]} unknown")
    for g in negatives:
        exact = tessellation_number(g)
        restricted, _ = restricted_minimum(g)
        print(f"\n{to_graph6(g)}  edges {sorted(g.edges)}")
        print(f"  T = {exact.t_number}: {fmt(exact.witness)}")
        print(f"  best with a maximal clique in every tessellation = {len(restricted)}: {fmt(restricted)}")


if __name__ == "__main__":
    main()
