"""Immutable trees and simple graphs with the structural queries used elsewhere.

Vertices are dense integers ``0..n-1``. Edge identity is list position, so an
edge index means the same thing to every module that receives the tree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    BadEdgeIndex,
    BadLabel,
    CycleDetected,
    Disconnected,
    DuplicateEdge,
    SameVertex,
    SelfLoop,
    TrivialTree,
)

Edge = tuple[int, int]


def _normalize_edges(n: int, edge_list: Iterable[Sequence[int]]) -> tuple[Edge, ...]:
    if n < 1:
        raise BadLabel(f"vertex count must be >= 1, got {n}")
    seen: set[Edge] = set()
    edges = []
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        for x in (u, v):
            if not 0 <= x < n:
                raise BadLabel(f"vertex {x} outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge {key} listed twice")
        seen.add(key)
        edges.append((u, v))
    return tuple(edges)


class _DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def _is_connected(n: int, edges: Sequence[Edge]) -> bool:
    ds = _DisjointSet(n)
    parts = n
    for u, v in edges:
        if ds.union(u, v):
            parts -= 1
    return parts == 1


@dataclass(frozen=True)
class Tree:
    """A validated labeled tree.

    ``origin`` optionally maps each local vertex to a vertex of a parent tree;
    it is set by :func:`split` and :func:`induced_subtree` so colorings can be
    restricted back and forth.
    """

    n: int
    edges: tuple[Edge, ...]
    origin: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the (neighbor, edge index) pairs in edge-index order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        table = {}
        for i, (u, v) in enumerate(self.edges):
            table[(u, v)] = i
            table[(v, u)] = i
        return table

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def farthest(self, source: int) -> tuple[int, int]:
        """Return (vertex, distance) of the lowest-labeled vertex farthest from source."""
        dist = self.distances(source)
        best = max(dist)
        return dist.index(best), best

    def distances(self, source: int) -> list[int]:
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y, _ in self.adjacency[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    @cached_property
    def diameter(self) -> int:
        a, _ = self.farthest(0)
        _, d = self.farthest(a)
        return d

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adjacency[v]) == 1]

    def rooted(self, root: int) -> tuple[list[int], list[int], list[int]]:
        """BFS from root: (order, parent vertex, parent edge index); -1 at the root."""
        parent = [-1] * self.n
        parent_edge = [-1] * self.n
        seen = [False] * self.n
        seen[root] = True
        order = [root]
        for x in order:
            for y, e in self.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    parent_edge[y] = e
                    order.append(y)
        return order, parent, parent_edge

    def to_edge_list(self) -> list[list[int]]:
        return [list(e) for e in self.edges]


def build_tree(n: int, edge_list: Iterable[Sequence[int]]) -> Tree:
    """Validate ``edge_list`` as a tree on ``0..n-1`` and freeze it."""
    edges = _normalize_edges(n, edge_list)
    ds = _DisjointSet(n)
    for u, v in edges:
        if not ds.union(u, v):
            raise CycleDetected(f"edge ({u}, {v}) closes a cycle")
    if len(edges) != n - 1:
        raise Disconnected(f"{n} vertices need {n - 1} edges, got {len(edges)}")
    return Tree(n, edges)


def path_edges(tree: Tree, u: int, v: int) -> list[int]:
    """Edge indices of the unique u-v path, in order from u to v."""
    for x in (u, v):
        if not 0 <= x < tree.n:
            raise BadLabel(f"vertex {x} outside 0..{tree.n - 1}")
    if u == v:
        raise SameVertex(f"path from {u} to itself")
    _, parent, parent_edge = tree.rooted(v)
    out = []
    x = u
    while x != v:
        out.append(parent_edge[x])
        x = parent[x]
    return out


def _component(tree: Tree, start: int, banned_edge: int) -> list[int]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y, e in tree.adjacency[x]:
            if e != banned_edge and y not in seen:
                seen.add(y)
                stack.append(y)
    return sorted(seen)


def induced_subtree(tree: Tree, vertices: Iterable[int]) -> Tree:
    """Subtree induced by ``vertices`` (must be connected), relabeled densely.

    Local labels follow ascending parent labels; edges keep parent edge order.
    """
    keep = sorted(set(vertices))
    local = {v: i for i, v in enumerate(keep)}
    edges = [(local[u], local[v]) for u, v in tree.edges if u in local and v in local]
    sub = build_tree(len(keep), edges)
    # origin points at the tree passed in, never further up
    return Tree(sub.n, sub.edges, tuple(keep))


def split(tree: Tree, e: int) -> tuple[Tree, Tree]:
    """The two components of T - e; the side holding the lower endpoint label first."""
    if not 0 <= e < tree.m:
        raise BadEdgeIndex(f"edge index {e} outside 0..{tree.m - 1}")
    u, v = tree.edges[e]
    lo, hi = min(u, v), max(u, v)
    return induced_subtree(tree, _component(tree, lo, e)), induced_subtree(tree, _component(tree, hi, e))


def split_sizes(tree: Tree) -> list[int]:
    """For each edge, the size of the side not containing vertex 0."""
    order, parent, parent_edge = tree.rooted(0)
    size = [1] * tree.n
    out = [0] * tree.m
    for x in reversed(order[1:]):
        size[parent[x]] += size[x]
        out[parent_edge[x]] = size[x]
    return out


def balanced_edges(tree: Tree) -> set[int]:
    """All edges whose removal minimizes the size difference of the two sides."""
    if tree.n < 2:
        raise TrivialTree("a single vertex has no edges")
    diffs = [abs(tree.n - 2 * s) for s in split_sizes(tree)]
    best = min(diffs)
    return {i for i, d in enumerate(diffs) if d == best}


@dataclass(frozen=True)
class Graph:
    """A connected simple graph."""

    n: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(a) for a in adj)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_tree(self) -> bool:
        return self.m == self.n - 1


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    edges = _normalize_edges(n, edge_list)
    if not _is_connected(n, edges):
        raise Disconnected("graph is not connected")
    return Graph(n, edges)


def bridges(graph: Graph) -> list[int]:
    """Indices of cut-edges, ascending (iterative low-link DFS)."""
    n = graph.n
    disc = [-1] * n
    low = [0] * n
    found = []
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, edge used to enter, neighbor cursor)
        stack = [(root, -1, 0)]
        while stack:
            x, via, i = stack[-1]
            adj = graph.adjacency[x]
            if i < len(adj):
                stack[-1] = (x, via, i + 1)
                y, e = adj[i]
                if e == via:
                    continue
                if disc[y] < 0:
                    disc[y] = low[y] = timer
                    timer += 1
                    stack.append((y, e, 0))
                else:
                    low[x] = min(low[x], disc[y])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[x])
                    if low[x] > disc[p]:
                        found.append(via)
    return sorted(found)


def cut_edge_forest(graph: Graph) -> list[Tree]:
    """Nontrivial components of the subgraph spanned by the bridges, as Trees.

    Each returned tree carries ``origin`` mapping its vertices to graph labels.
    Components are ordered by their lowest graph vertex.
    """
    cut = bridges(graph)
    if not cut:
        return []
    ds = _DisjointSet(graph.n)
    for e in cut:
        ds.union(*graph.edges[e])
    groups: dict[int, list[int]] = {}
    for e in cut:
        groups.setdefault(ds.find(graph.edges[e][0]), []).append(e)
    out = []
    for members in groups.values():
        verts = sorted({x for e in members for x in graph.edges[e]})
        local = {v: i for i, v in enumerate(verts)}
        tree = build_tree(len(verts), [(local[graph.edges[e][0]], local[graph.edges[e][1]]) for e in members])
        out.append(Tree(tree.n, tree.edges, tuple(verts)))
    out.sort(key=lambda t: t.origin[0])
    return out


def _rooted_code(tree: Tree, root: int) -> str:
    order, parent, _ = tree.rooted(root)
    children: list[list[str]] = [[] for _ in range(tree.n)]
    code = [""] * tree.n
    for x in reversed(order):
        code[x] = "(" + "".join(sorted(children[x])) + ")"
        if parent[x] >= 0:
            children[parent[x]].append(code[x])
    return code[root]


def canonical_form(tree: Tree) -> str:
    """Isomorphism-invariant string: the smallest rooted AHU code over all roots."""
    return min(_rooted_code(tree, r) for r in range(tree.n))
