"""Slow, independent reference implementations used to pin expected values.

Nothing here calls into the solver paths it checks: paths come from networkx,
colorings are enumerated with itertools.product, and decompositions are
explored over the whole forest rather than per component.
"""

import itertools
import random
from collections import Counter
from functools import lru_cache

import networkx as nx

from cfclab.graph import build_tree


def nx_tree(tree):
    g = nx.Graph()
    g.add_nodes_from(range(tree.n))
    for i, (u, v) in enumerate(tree.edges):
        g.add_edge(u, v, index=i)
    return g


def path_colors(g, colors, u, v):
    nodes = nx.shortest_path(g, u, v)
    return [colors[g.edges[a, b]["index"]] for a, b in zip(nodes, nodes[1:])]


def cfc_oracle(tree, colors):
    """First failing pair by explicit per-pair color multisets, or None."""
    g = nx_tree(tree)
    for u in range(tree.n):
        for v in range(u + 1, tree.n):
            counts = Counter(path_colors(g, colors, u, v))
            if 1 not in counts.values():
                return (u, v)
    return None


def odd_oracle(tree, colors):
    g = nx_tree(tree)
    for u in range(tree.n):
        for v in range(u + 1, tree.n):
            counts = Counter(path_colors(g, colors, u, v))
            if all(c % 2 == 0 for c in counts.values()):
                return (u, v)
    return None


def ranking_oracle(tree, labels):
    """First equal-label edge pair lacking a larger label between them, or None."""
    g = nx_tree(tree)
    for e in range(tree.m):
        for f in range(e + 1, tree.m):
            if labels[e] != labels[f]:
                continue
            # the longest endpoint-to-endpoint path contains both edges
            best = max(
                (nx.shortest_path(g, a, b) for a in tree.edges[e] for b in tree.edges[f] if a != b),
                key=len,
            )
            between = [labels[g.edges[a, b]["index"]] for a, b in zip(best, best[1:])]
            if max(between) <= labels[e]:
                return (e, f)
    return None


def min_colors(tree, oracle, limit=None):
    """Smallest k with a valid k-coloring, enumerating every product coloring."""
    limit = tree.m if limit is None else limit
    for k in range(1, limit + 1):
        for colors in itertools.product(range(1, k + 1), repeat=tree.m):
            if oracle(tree, colors) is None:
                return k
    return None


def bridges_oracle(n, edges):
    """Edges whose removal disconnects the graph."""
    out = []
    for i in range(len(edges)):
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(e for j, e in enumerate(edges) if j != i)
        if not nx.is_connected(g):
            out.append(i)
    return out


def balanced_oracle(tree):
    diffs = {}
    for i in range(tree.m):
        g = nx_tree(tree)
        g.remove_edge(*tree.edges[i])
        a, b = (len(c) for c in nx.connected_components(g))
        diffs[i] = abs(a - b)
    best = min(diffs.values())
    return {i for i, d in diffs.items() if d == best}


def min_depth_oracle(tree):
    """Fewest rounds over every combination of per-component balanced-edge picks."""
    g = nx_tree(tree)

    @lru_cache(maxsize=None)
    def rounds(alive):
        h = nx.Graph()
        h.add_nodes_from(range(tree.n))
        h.add_edges_from(tree.edges[i] for i in alive)
        options = []
        for comp in nx.connected_components(h):
            if len(comp) < 2:
                continue
            sub = h.subgraph(comp)
            diffs = {}
            for a, b in sub.edges:
                k = sub.copy()
                k.remove_edge(a, b)
                x, y = (len(c) for c in nx.connected_components(k))
                diffs[g.edges[a, b]["index"]] = abs(x - y)
            best = min(diffs.values())
            options.append([i for i, d in diffs.items() if d == best])
        if not options:
            return 0
        return 1 + min(rounds(alive - frozenset(pick)) for pick in itertools.product(*options))

    return rounds(frozenset(range(tree.m)))


def all_labeled_trees(n):
    """Every labeled tree on n vertices, one per Pruefer sequence."""
    if n == 1:
        yield build_tree(1, [])
        return
    if n == 2:
        yield build_tree(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield nx_to_tree(nx.from_prufer_sequence(list(seq)))


def nx_to_tree(g):
    return build_tree(g.number_of_nodes(), sorted(tuple(sorted(e)) for e in g.edges))


def dominated_tree(n, delta, seed):
    """Random tree on n vertices whose maximum degree is exactly delta (delta > n/2)."""
    rng = random.Random(seed)
    while True:
        hub = rng.randrange(n)
        others = [v for v in range(n) if v != hub]
        seq = [hub] * (delta - 1) + [rng.choice(others) for _ in range(n - 2 - (delta - 1))]
        rng.shuffle(seq)
        tree = nx_to_tree(nx.from_prufer_sequence(seq))
        if max(d for _, d in nx_tree(tree).degree) == delta:
            return tree
