"""Exact cfc, edge-ranking and odd-connection numbers by backtracking.

Edges are colored in breadth-first order from a centroid. A vertex pair is
checked as soon as the last edge on its path receives a color, so violations
surface a few levels below where they were introduced.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from .decompose import algorithm1, ranking_from_trace
from .errors import BudgetExceeded, TooLarge, TrivialTree
from .graph import Graph, Tree, canonical_form, cut_edge_forest, split
from .verify import EdgeColoring

DEFAULT_BUDGET = 10**8
OC_MAX_N = 12


def default_budget() -> int:
    return int(os.environ.get("CFCLAB_BUDGET", DEFAULT_BUDGET))


@dataclass(frozen=True)
class SearchReport:
    value: int
    certificate: EdgeColoring
    lower_bound_used: int
    upper_bound_used: int
    nodes_explored: int
    closed_form: str | None = None

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "lb": self.lower_bound_used,
            "ub": self.upper_bound_used,
            "closed_form": self.closed_form,
            "nodes": self.nodes_explored,
            "certificate": list(self.certificate.colors),
        }


@dataclass(frozen=True)
class CriticalityReport:
    is_critical: bool
    cfc_value: int
    # per edge index, cfc of each component of T - e with at least one edge
    per_edge: tuple[tuple[int, ...], ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "critical": self.is_critical,
            "cfc": self.cfc_value,
            "per_edge": [list(p) for p in self.per_edge],
        }


class Bounds(NamedTuple):
    h: int
    lower: int
    upper: int
    resolved: int | None


def log2_ceil(n: int) -> int:
    return (n - 1).bit_length() if n > 1 else 0


def centroid(tree: Tree) -> int:
    """Vertex minimizing its largest remaining branch; lowest label on ties."""
    order, parent, _ = tree.rooted(0)
    size = [1] * tree.n
    for x in reversed(order[1:]):
        size[parent[x]] += size[x]
    best, best_v = tree.n, 0
    for v in range(tree.n):
        heaviest = tree.n - size[v]
        for y, _ in tree.adjacency[v]:
            if parent[y] == v:
                heaviest = max(heaviest, size[y])
        if heaviest < best:
            best, best_v = heaviest, v
    return best_v


class _Layout:
    """Edge order plus, per position, the vertex-pair paths completed there."""

    def __init__(self, tree: Tree):
        root = centroid(tree)
        order, parent, parent_edge = tree.rooted(root)
        self.root = root
        self.edges = [parent_edge[x] for x in order[1:]]
        pos = {x: i for i, x in enumerate(order[1:])}
        pos[root] = -1
        self.parent_pos = [pos[parent[x]] for x in order[1:]]
        depth = [0] * tree.n
        for x in order[1:]:
            depth[x] = depth[parent[x]] + 1
        self.checks: list[list[tuple[int, ...]]] = [[] for _ in self.edges]
        for a in range(tree.n):
            for b in range(a + 1, tree.n):
                x, y = a, b
                path = []
                while x != y:
                    if depth[x] < depth[y]:
                        x, y = y, x
                    path.append(pos[x])
                    x = parent[x]
                if len(path) > 1:
                    self.checks[max(path)].append(tuple(path))


def _unique_color(path, colors) -> bool:
    once = more = 0
    for p in path:
        b = 1 << colors[p]
        more |= once & b
        once |= b
    return bool(once & ~more)


def _unique_max(path, colors) -> bool:
    top = mult = 0
    for p in path:
        c = colors[p]
        if c > top:
            top, mult = c, 1
        elif c == top:
            mult += 1
    return mult == 1


class _Search:
    def __init__(self, tree: Tree, kind: str, budget: int):
        self.tree = tree
        self.kind = kind
        self.budget = budget
        self.nodes = 0
        self.layout = _Layout(tree)

    def run(self, k: int, accept: Callable[[list[int]], bool] | None = None) -> EdgeColoring | None:
        """A k-coloring (in edge-index order) satisfying ``kind``, or None."""
        m = len(self.layout.edges)
        colors = [0] * m
        checks = self.layout.checks
        parent_pos = self.layout.parent_pos
        kind = self.kind
        # labels carry order in a ranking, so colors cannot be introduced canonically
        canonical = kind != "rank"
        path_ok = _unique_max if kind == "rank" else _unique_color
        prefix = [0] * m
        taken: set[int] = {0}

        def rec(i: int, used: int) -> bool:
            if i == m:
                return accept is None or accept(colors)
            top = min(k, used + 1) if canonical else k
            for col in range(1, top + 1):
                self.nodes += 1
                if self.nodes > self.budget:
                    raise _OutOfBudget
                colors[i] = col
                if kind == "oc":
                    pp = parent_pos[i]
                    mask = (prefix[pp] if pp >= 0 else 0) ^ (1 << col)
                    if mask in taken:
                        continue
                    prefix[i] = mask
                    taken.add(mask)
                    if rec(i + 1, max(used, col)):
                        return True
                    taken.discard(mask)
                    continue
                if all(path_ok(p, colors) for p in checks[i]):
                    if rec(i + 1, max(used, col)):
                        return True
            colors[i] = 0
            return False

        if not rec(0, 0):
            return None
        out = [0] * m
        for i, e in enumerate(self.layout.edges):
            out[e] = colors[i]
        return EdgeColoring(tuple(out), k)


class _OutOfBudget(Exception):
    pass


def _require_nontrivial(tree: Tree) -> None:
    if tree.n < 2:
        raise TrivialTree("a single vertex has no edges to color")


def cfc_lower_bound(tree: Tree) -> int:
    """max(max degree, ceil(log2 n)); the diameter bound never exceeds the log term."""
    _require_nontrivial(tree)
    return max(tree.max_degree, log2_ceil(tree.n))


def _is_double_star(tree: Tree) -> bool:
    return tree.diameter == 3


def cfc_fast_path(tree: Tree) -> int | None:
    """Closed-form cfc where one is known, else None."""
    _require_nontrivial(tree)
    n, delta = tree.n, tree.max_degree
    if 2 * delta >= n + 2:
        return delta
    if delta <= 2:
        return log2_ceil(n)
    if _is_double_star(tree):
        return delta
    return None


def _climb(tree: Tree, kind: str, lb: int, ub: int, ub_cert: EdgeColoring, budget: int,
           accept=None) -> SearchReport:
    search = _Search(tree, kind, budget)
    for k in range(lb, ub):
        try:
            found = search.run(k, accept)
        except _OutOfBudget:
            raise BudgetExceeded(k, ub, search.nodes) from None
        if found is not None:
            return SearchReport(k, found, lb, ub, search.nodes)
    return SearchReport(ub, ub_cert, lb, ub, search.nodes)


def cfc_exact(tree: Tree, budget: int | None = None) -> SearchReport:
    """Exact conflict-free connection number with a certificate coloring.

    Raises BudgetExceeded carrying the bracket when the node budget runs out.
    """
    _require_nontrivial(tree)
    budget = default_budget() if budget is None else budget
    lb = cfc_lower_bound(tree)
    coloring, tr = algorithm1(tree)
    if lb == tr.d:
        return SearchReport(lb, coloring, lb, lb, 0, "bound-sandwich")
    return _climb(tree, "cfc", lb, tr.d, coloring, budget)


def rank_exact(tree: Tree, budget: int | None = None) -> SearchReport:
    """Exact edge-ranking number; the depth-inverted labeling seeds the upper bound."""
    _require_nontrivial(tree)
    budget = default_budget() if budget is None else budget
    lb = cfc_lower_bound(tree)
    _, tr = algorithm1(tree)
    labels = ranking_from_trace(tr)
    if lb == tr.d:
        return SearchReport(lb, labels, lb, lb, 0, "bound-sandwich")
    return _climb(tree, "rank", lb, tr.d, labels, budget)


def oc_exact(tree: Tree, budget: int | None = None) -> SearchReport:
    """Exact odd-connection number, for trees of at most 12 vertices."""
    _require_nontrivial(tree)
    if tree.n > OC_MAX_N:
        raise TooLarge(f"oc search is limited to n <= {OC_MAX_N}, got {tree.n}")
    budget = default_budget() if budget is None else budget
    lb = log2_ceil(tree.n)
    coloring, tr = algorithm1(tree)
    if lb == tr.d:
        return SearchReport(lb, coloring, lb, lb, 0, "bound-sandwich")
    return _climb(tree, "oc", lb, tr.d, coloring, budget)


def is_cfc_critical(tree: Tree, budget: int | None = None) -> CriticalityReport:
    """Check that deleting any edge leaves components of strictly smaller cfc."""
    if tree.n < 3:
        raise TrivialTree("criticality needs at least 3 vertices")
    memo: dict[str, int] = {}

    def cfc_of(t: Tree) -> int:
        if t.n == 2:
            return 1
        key = canonical_form(t)
        if key not in memo:
            memo[key] = cfc_exact(t, budget).value
        return memo[key]

    value = cfc_of(tree)
    per_edge = []
    for e in range(tree.m):
        per_edge.append(tuple(cfc_of(side) for side in split(tree, e) if side.n > 1))
    critical = all(v < value for sides in per_edge for v in sides)
    return CriticalityReport(critical, value, tuple(per_edge))


def has_singleton_class(colors) -> bool:
    counts: dict[int, int] = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    return 1 in counts.values()


def general_bounds(graph: Graph, budget: int | None = None) -> Bounds:
    """Bracket cfc(G) by the largest cfc among the bridge-induced subtrees.

    A bridgeless graph gets the known exact answer: 1 if complete, else 2.
    """
    forest = cut_edge_forest(graph)
    if not forest:
        value = 1 if graph.is_complete() else 2
        return Bounds(0, value, value, value)
    values = [cfc_exact(t, budget).value for t in forest]
    h = max(values)
    if graph.is_tree():
        return Bounds(h, h, h, h)
    resolved = None
    top = [t for t, v in zip(forest, values) if v == h]
    if h >= 2 and len(top) == 1:
        if _has_optimal_with_singleton(top[0], h, budget):
            resolved = h
    return Bounds(h, h, h + 1, resolved)


def _has_optimal_with_singleton(tree: Tree, k: int, budget: int | None) -> bool:
    budget = default_budget() if budget is None else budget
    search = _Search(tree, "cfc", budget)
    try:
        return search.run(k, has_singleton_class) is not None
    except _OutOfBudget:
        raise BudgetExceeded(k, k + 1, search.nodes) from None


def upper_formula(tree: Tree) -> float:
    """(D - 2) log2 n / (log2 D - 1) for maximum degree D >= 3."""
    delta = tree.max_degree
    return (delta - 2) * math.log2(tree.n) / (math.log2(delta) - 1)
