"""Regenerates the named-graph catalog (graph6 files + manifest).

Usage: python3 tools/gen_catalog.py crates/core/catalog
"""
import itertools
import os
import sys

import networkx as nx


def lcf(n, shifts, reps):
    return nx.LCF_graph(n, shifts, reps)


def coxeter():
    # Kneser graph KG(7,3) with the seven lines of a Fano plane removed.
    fano = [{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}]
    verts = [frozenset(c) for c in itertools.combinations(range(7), 3) if set(c) not in fano]
    g = nx.Graph()
    g.add_nodes_from(range(len(verts)))
    for i, j in itertools.combinations(range(len(verts)), 2):
        if not verts[i] & verts[j]:
            g.add_edge(i, j)
    return g


def poussin():
    g = nx.Graph({2: [7, 8, 3, 4], 1: [7, 6], 0: [6, 5, 4], 3: [5]})
    nx.add_cycle(g, list(range(3)))
    nx.add_cycle(g, list(range(3, 9)))
    nx.add_cycle(g, list(range(9, 14)))
    nx.add_path(g, [8, 12, 7, 11, 6, 10, 5, 9, 3, 13, 8, 12])
    g.add_edges_from((14, i) for i in range(9, 14))
    return nx.convert_node_labels_to_integers(g, ordering="sorted")


def durer():
    # generalized Petersen graph GP(6, 2)
    g = nx.Graph()
    for i in range(6):
        g.add_edge(i, (i + 1) % 6)
        g.add_edge(i, 6 + i)
        g.add_edge(6 + i, 6 + (i + 2) % 6)
    return g


def nonredundant_k3():
    g = nx.Graph()
    g.add_nodes_from(range(7))
    edges = [(1, 2), (1, 6), (2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5), (5, 6), (6, 7)]
    g.add_edges_from((u - 1, v - 1) for u, v in edges)
    return g


GRAPHS = [
    ("petersen", nx.petersen_graph),
    ("heawood", nx.heawood_graph),
    ("coxeter", coxeter),
    ("icosahedron", nx.icosahedral_graph),
    ("hexahedron", nx.cubical_graph),
    ("dodecahedron", nx.dodecahedral_graph),
    ("moebius_kantor", nx.moebius_kantor_graph),
    ("desargues", nx.desargues_graph),
    ("pappus", nx.pappus_graph),
    ("nauru", lambda: lcf(24, [5, -9, 7, -7, 9, -5], 4)),
    ("franklin", lambda: lcf(12, [5, -5], 6)),
    ("folkman", lambda: lcf(20, [5, -7, -7, 5], 5)),
    ("tutte_coxeter", lambda: lcf(30, [-13, -9, 7, -7, 9, 13], 5)),
    ("frucht", nx.frucht_graph),
    ("poussin", poussin),
    ("truncated_tetrahedron", nx.truncated_tetrahedron_graph),
    ("durer", durer),
    ("bidiakis_cube", lambda: lcf(12, [6, 4, -4], 4)),
    ("krackhardt_kite", nx.krackhardt_kite_graph),
    ("mcgee", lambda: lcf(24, [12, 7, -7], 8)),
    ("dyck", lambda: lcf(32, [5, -5, 13, -13], 8)),
    ("f26a", lambda: lcf(26, [-7, 7], 13)),
    ("gray", lambda: lcf(54, [-25, 7, -7, 13, -13, 25], 9)),
    ("foster", lambda: lcf(90, [17, -9, 37, -37, 9, -17], 15)),
    ("nonredundant_k3", nonredundant_k3),
]


def main(out):
    os.makedirs(out, exist_ok=True)
    rows = []
    for name, make in GRAPHS:
        g = nx.convert_node_labels_to_integers(make(), ordering="sorted")
        code = nx.to_graph6_bytes(g, header=False).decode().strip()
        fname = f"{name}.g6"
        with open(os.path.join(out, fname), "w") as f:
            f.write(code + "\n")
        rows.append((name, fname))
        degs = sorted({d for _, d in g.degree()})
        print(f"{name:24s} n={g.number_of_nodes():3d} m={g.number_of_edges():4d} degrees={degs}")
    with open(os.path.join(out, "catalog.csv"), "w") as f:
        f.write("name,file\n")
        for name, fname in rows:
            f.write(f"{name},{fname}\n")


if __name__ == "__main__":
    main(sys.argv[1])
