"""Independent reference values frozen into the C++ tests.

Everything here is plain brute force over vertex subsets on networkx graphs, sharing no
code with the C++ solvers. Run: python3 tests/oracles/frozen_values.py
"""
import itertools

import networkx as nx


def closed_masks(g):
    idx = {v: i for i, v in enumerate(g.nodes())}
    masks = []
    for v in g.nodes():
        m = 1 << idx[v]
        for u in g.neighbors(v):
            m |= 1 << idx[u]
        masks.append(m)
    return masks


def gamma(g):
    n = g.number_of_nodes()
    masks = closed_masks(g)
    full = (1 << n) - 1
    for k in range(1, n + 1):
        for combo in itertools.combinations(range(n), k):
            cover = 0
            for v in combo:
                cover |= masks[v]
            if cover == full:
                return k
    return 0


def rho(g):
    n = g.number_of_nodes()
    dist = dict(nx.all_pairs_shortest_path_length(g))
    nodes = list(g.nodes())
    best = 0
    for k in range(1, n + 1):
        found = False
        for combo in itertools.combinations(nodes, k):
            if all(dist[a].get(b, 99) >= 3 for a, b in itertools.combinations(combo, 2)):
                found = True
                break
        if not found:
            break
        best = k
    return best


def tight(k):
    g = nx.Graph()
    x = lambda j: j - 1
    y = lambda j: 2 * k + j - 1
    g.add_nodes_from(range(4 * k))
    for i in range(1, k + 1):
        for a in (2 * i - 1, 2 * i):
            for b in (2 * i - 1, 2 * i):
                g.add_edge(x(a), y(b))
    for i in range(1, k):
        g.add_edge(x(2 * i), y(2 * i + 1))
    return g


def sun():
    return nx.Graph([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 2), (2, 4), (0, 4)])


def rook(n):
    return nx.convert_node_labels_to_integers(
        nx.cartesian_product(nx.complete_graph(n), nx.complete_graph(n)), ordering="sorted")


def bicubic_classes(n):
    """All connected cubic bipartite graphs of order n up to isomorphism, via networkx
    isomorphism tests over every 3-regular biadjacency matrix."""
    h = n // 2
    reps = []
    triples = list(itertools.combinations(range(h), 3))
    for rows in itertools.combinations_with_replacement(triples, h):
        col = [0] * h
        for r in rows:
            for c in r:
                col[c] += 1
        if any(c != 3 for c in col):
            continue
        g = nx.Graph()
        g.add_nodes_from(range(n))
        for i, r in enumerate(rows):
            for c in r:
                g.add_edge(i, h + c)
        if not nx.is_connected(g):
            continue
        if any(nx.is_isomorphic(g, r) for r in reps):
            continue
        reps.append(g)
    return reps


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def s6(g):
    return nx.to_sparse6_bytes(g, header=False).decode().strip()


if __name__ == "__main__":
    named = {
        "K1": nx.empty_graph(1),
        "C4": nx.cycle_graph(4),
        "C5": nx.cycle_graph(5),
        "C6": nx.cycle_graph(6),
        "P7": nx.path_graph(7),
        "K33": nx.complete_bipartite_graph(3, 3),
        "Q3": nx.hypercube_graph(3),
        "Petersen": nx.petersen_graph(),
        "Heawood": nx.heawood_graph(),
        "sun": sun(),
        "rook3": rook(3),
        "rook4": rook(4),
        "tight3": tight(3),
        "tight5": tight(5),
    }
    for name, g in named.items():
        g = nx.convert_node_labels_to_integers(g, ordering="sorted")
        print(f"{name}: graph6={g6(g)} gamma={gamma(g)} rho={rho(g)}")
    for name in ("P7", "Petersen"):
        g = nx.convert_node_labels_to_integers(named[name], ordering="sorted")
        print(f"{name}: sparse6={s6(g)} edges={sorted(tuple(sorted(e)) for e in g.edges())}")
    big = nx.cycle_graph(70)
    big.add_edge(0, 35)
    print(f"C70+chord: sparse6={s6(big)} m={big.number_of_edges()}")
    for n in (6, 8, 10, 12):
        reps = bicubic_classes(n)
        print(f"bicubic n={n}: count={len(reps)} gamma_rho={sorted((gamma(g), rho(g)) for g in reps)}")
