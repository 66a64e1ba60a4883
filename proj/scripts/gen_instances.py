#!/usr/bin/env python3
"""Regenerates the bundled benchmark instances under data/instances/.

Families:
  myciel3..myciel7   repeated Mycielski construction starting from C5
  queen5.5..queen8.8 n x n queen graphs (same row, column or diagonal)
  jean               Les Miserables character coappearance graph (Knuth's
                     Stanford GraphBase data, via networkx) plus the three
                     isolated characters, 80 vertices / 254 edges
  dsjc125.1          seeded stand-in: uniform random graph with the same
                     size as the classic instance (125 vertices, 736 edges).
                     It is NOT the original DSJC125.1 drawing, so no best
                     known result applies; see data/manifest.txt.

The mycielski/queen graphs are the standard constructions; any relabeling
of the classic COLOR instances leaves coloring objectives unchanged.
"""

import os
import random

OUT = os.path.join(os.path.dirname(__file__), "..", "data", "instances")


def write_col(name, n, edges, comments=()):
    path = os.path.join(OUT, name + ".col")
    edges = sorted(set((min(u, v), max(u, v)) for u, v in edges))
    assert all(1 <= u < v <= n for u, v in edges), name
    with open(path, "w") as f:
        for line in comments:
            f.write("c " + line + "\n")
        f.write("p edge %d %d\n" % (n, len(edges)))
        for u, v in edges:
            f.write("e %d %d\n" % (u, v))
    print("%-12s n=%-4d m=%d" % (name, n, len(edges)))


def mycielskian(n, edges):
    # vertices 1..n, shadows n+1..2n, apex 2n+1
    out = list(edges)
    for u, v in edges:
        out.append((u, v + n))
        out.append((v, u + n))
    apex = 2 * n + 1
    for u in range(1, n + 1):
        out.append((u + n, apex))
    return 2 * n + 1, out


def gen_myciels():
    n, edges = 5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    for k in range(3, 8):
        n, edges = mycielskian(n, edges)
        write_col("myciel%d" % k, n, edges,
                  ["myciel%d: Mycielski construction, triangle free with" % k,
                   "increasing chromatic number"])


def gen_queens():
    for n in range(5, 9):
        edges = []
        def vid(r, c):
            return r * n + c + 1
        for r1 in range(n):
            for c1 in range(n):
                for r2 in range(n):
                    for c2 in range(n):
                        if (r1, c1) >= (r2, c2):
                            continue
                        if r1 == r2 or c1 == c2 or abs(r1 - r2) == abs(c1 - c2):
                            edges.append((vid(r1, c1), vid(r2, c2)))
        write_col("queen%d.%d" % (n, n), n * n, edges,
                  ["queen%d.%d: one vertex per square of a %dx%d board," % (n, n, n, n),
                   "edges join squares on a common row, column or diagonal"])


def gen_jean():
    import networkx as nx
    g = nx.les_miserables_graph()
    names = sorted(g.nodes())
    idx = {name: i + 1 for i, name in enumerate(names)}
    edges = [(idx[u], idx[v]) for u, v in g.edges()]
    n = len(names) + 3  # three characters never co-appear with anyone
    write_col("jean", n, edges,
              ["jean: Les Miserables character coappearance graph from",
               "Knuth's Stanford GraphBase data; vertices 78-80 are the",
               "isolated characters"])


def gen_dsjc_standin():
    rng = random.Random(125736)
    n = 125
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    rng.shuffle(pairs)
    write_col("dsjc125.1", n, pairs[:736],
              ["dsjc125.1 (stand-in): seeded uniform random graph with the",
               "same size as the classic instance (125 vertices, 736 edges).",
               "Not the original drawing; best known results do not apply."])


if __name__ == "__main__":
    os.makedirs(OUT, exist_ok=True)
    gen_myciels()
    gen_queens()
    gen_jean()
    gen_dsjc_standin()
