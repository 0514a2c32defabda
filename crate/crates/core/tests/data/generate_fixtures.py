"""Regenerates the oracle fixtures used by the integration tests.

Everything here is computed with networkx and numpy, independently of the
Rust implementation:

* atlas7.g6      -- the 1044 non-isomorphic graphs on 7 vertices
* oracle.json    -- graph6 encodings, spectral radii, clique counts and
                   degree data for a mix of atlas and random graphs

Run from this directory: python3 generate_fixtures.py
"""

import json
import random
from itertools import combinations

import networkx as nx
import numpy as np


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def clique_counts(g):
    counts = [0] * g.number_of_nodes()
    for c in nx.enumerate_all_cliques(g):
        counts[len(c) - 1] += 1
    return counts


def record(g):
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    n = g.number_of_nodes()
    a = nx.to_numpy_array(g, nodelist=range(n))
    eig = np.linalg.eigvalsh(a)
    degrees = [d for _, d in sorted(g.degree())]
    max_common_adjacent = max(
        (len(set(g[u]) & set(g[v])) for u, v in g.edges()), default=0
    )
    max_common_any = max(
        (len(set(g[u]) & set(g[v])) for u, v in combinations(range(n), 2)),
        default=0,
    )
    return {
        "graph6": g6(g),
        "n": n,
        "edges": sorted([min(u, v), max(u, v)] for u, v in g.edges()),
        "mu": float(eig[-1]) if n else 0.0,
        "eigenvalues": [float(x) for x in eig[::-1]],
        "clique_counts": clique_counts(g),
        "degrees": degrees,
        "connected": nx.is_connected(g),
        "max_common_adjacent": max_common_adjacent,
        "max_common_any": max_common_any,
    }


def main():
    atlas = nx.graph_atlas_g()
    seven = [g for g in atlas if g.number_of_nodes() == 7]
    assert len(seven) == 1044
    with open("atlas7.g6", "w") as f:
        for g in seven:
            f.write(g6(g) + "\n")

    rng = random.Random(20240601)
    graphs = [g for g in atlas if 1 <= g.number_of_nodes() <= 5]
    graphs += rng.sample([g for g in atlas if g.number_of_nodes() == 6], 40)
    # Dense graphs stay small so the clique enumeration remains cheap.
    for n, ps in [(8, [0.2, 0.5, 0.8]), (9, [0.2, 0.5, 0.8]), (12, [0.2, 0.5, 0.8]),
                  (20, [0.1, 0.5, 0.7]), (40, [0.1, 0.3]), (63, [0.05, 0.2]),
                  (64, [0.05, 0.2]), (65, [0.05, 0.2]), (70, [0.05, 0.2]), (100, [0.05, 0.1])]:
        for p in ps:
            graphs.append(nx.gnp_random_graph(n, p, seed=rng.randrange(2**31)))
    with open("oracle.json", "w") as f:
        json.dump([record(g) for g in graphs], f, separators=(",", ":"))


if __name__ == "__main__":
    main()
