"""Checks for edge colorings of trees: conflict-free, odd connection, edge ranking.

All pair scans walk vertex pairs ``(u, v)`` with ``u < v`` in lexicographic
order and report the first failure, so witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CoverageError, NotALeaf, NotASubtree, SameVertex
from .graph import Tree, path_edges


@dataclass(frozen=True)
class EdgeColoring:
    """Colors per edge index, 1-based. ``k`` defaults to the largest color used."""

    colors: tuple[int, ...]
    k: int = -1

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        if self.k < 0:
            object.__setattr__(self, "k", max(colors, default=0))

    @classmethod
    def of(cls, colors: Iterable[int], k: int | None = None) -> "EdgeColoring":
        return cls(tuple(colors), -1 if k is None else k)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, e: int) -> int:
        return self.colors[e]

    @property
    def used(self) -> int:
        """Number of distinct colors actually present."""
        return len(set(self.colors))

    def class_sizes(self) -> dict[int, int]:
        sizes: dict[int, int] = {}
        for c in self.colors:
            sizes[c] = sizes.get(c, 0) + 1
        return sizes


@dataclass(frozen=True)
class ParityVector:
    """Bit ``i - 1`` of ``bits`` is the parity of color ``i`` on a path."""

    bits: int
    k: int

    def is_zero(self) -> bool:
        return self.bits == 0

    def __str__(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.k))


@dataclass(frozen=True)
class Verdict:
    valid: bool
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.valid


def _check_coverage(tree: Tree, c: EdgeColoring) -> None:
    if len(c.colors) != tree.m:
        raise CoverageError(f"coloring covers {len(c.colors)} edges, tree has {tree.m}")
    for e, col in enumerate(c.colors):
        if not 1 <= col <= max(c.k, 0):
            raise CoverageError(f"edge {e} has color {col}, expected 1..{c.k}")


def _path_mask(tree: Tree, c: EdgeColoring, u: int, v: int) -> int:
    bits = 0
    for e in path_edges(tree, u, v):
        bits ^= 1 << (c.colors[e] - 1)
    return bits


def parity_vector(tree: Tree, c: EdgeColoring, u: int, v: int) -> ParityVector:
    if u == v:
        raise SameVertex(f"path from {u} to itself")
    _check_coverage(tree, c)
    return ParityVector(_path_mask(tree, c, u, v), c.k)


def parity_spectrum(tree: Tree, c: EdgeColoring, leaf: int) -> list[ParityVector]:
    """Parity vectors of the paths from ``leaf`` to every other vertex, ascending."""
    if tree.degree(leaf) != 1:
        raise NotALeaf(f"vertex {leaf} has degree {tree.degree(leaf)}")
    _check_coverage(tree, c)
    prefix = _prefix_parities(tree, c, leaf)
    return [ParityVector(prefix[v], c.k) for v in range(tree.n) if v != leaf]


def _prefix_parities(tree: Tree, c: EdgeColoring, root: int) -> list[int]:
    order, parent, parent_edge = tree.rooted(root)
    prefix = [0] * tree.n
    for x in order[1:]:
        prefix[x] = prefix[parent[x]] ^ (1 << (c.colors[parent_edge[x]] - 1))
    return prefix


def _scan_from(tree: Tree, c: EdgeColoring, source: int) -> list[int]:
    """For each vertex, how many colors appear exactly once on its path from source."""
    counts = [0] * (c.k + 2)
    unique = [0] * tree.n
    ones = 0
    # iterative DFS; negative entries undo the edge color on the way back
    stack: list[tuple[int, int, int]] = [(source, -1, 0)]
    while stack:
        x, prev, col = stack.pop()
        if col < 0:
            col = -col
            counts[col] -= 1
            if counts[col] == 1:
                ones += 1
            elif counts[col] == 0:
                ones -= 1
            continue
        if col:
            counts[col] += 1
            if counts[col] == 1:
                ones += 1
            elif counts[col] == 2:
                ones -= 1
            stack.append((x, prev, -col))
        unique[x] = ones
        for y, e in tree.adjacency[x]:
            if y != prev:
                stack.append((y, x, c.colors[e]))
    return unique


def is_cfc_coloring(tree: Tree, c: EdgeColoring) -> Verdict:
    """Every vertex pair's path must carry a color used exactly once on it."""
    _check_coverage(tree, c)
    for u in range(tree.n - 1):
        unique = _scan_from(tree, c, u)
        for v in range(u + 1, tree.n):
            if unique[v] == 0:
                return Verdict(False, (u, v))
    return Verdict(True)


def is_odd_connected(tree: Tree, c: EdgeColoring) -> Verdict:
    """Every vertex pair's path must have a nonzero parity vector.

    The parity of the u-v path is the XOR of the root-to-u and root-to-v
    parities, so a pair fails exactly when those prefixes coincide.
    """
    _check_coverage(tree, c)
    if tree.n < 2:
        return Verdict(True)
    prefix = _prefix_parities(tree, c, 0)
    for u in range(tree.n - 1):
        for v in range(u + 1, tree.n):
            if prefix[u] == prefix[v]:
                return Verdict(False, (u, v))
    return Verdict(True)


def _spanning_path(tree: Tree, e: int, f: int) -> list[int]:
    """Shortest path containing both edges e and f, endpoints included."""
    best: list[int] = []
    for a in tree.edges[e]:
        for b in tree.edges[f]:
            if a != b:
                p = path_edges(tree, a, b)
                if len(p) > len(best):
                    best = p
    return best


def _ranking_witness(tree: Tree, labels: EdgeColoring) -> tuple[int, int] | None:
    """First same-label edge pair with no larger label on the path joining them."""
    for e in range(tree.m):
        for f in range(e + 1, tree.m):
            lab = labels.colors[e]
            if labels.colors[f] != lab:
                continue
            if not any(labels.colors[g] > lab for g in _spanning_path(tree, e, f)):
                return (e, f)
    return None


def _unique_max_everywhere(tree: Tree, labels: EdgeColoring) -> bool:
    # a labeling is a ranking iff the top label on every vertex path is unique
    for source in range(tree.n):
        stack = [(source, -1, 0, 0)]
        while stack:
            x, prev, top, mult = stack.pop()
            if mult > 1:
                return False
            for y, e in tree.adjacency[x]:
                if y == prev:
                    continue
                lab = labels.colors[e]
                if lab > top:
                    stack.append((y, x, lab, 1))
                elif lab == top:
                    stack.append((y, x, top, mult + 1))
                else:
                    stack.append((y, x, top, mult))
    return True


def is_edge_ranking(tree: Tree, labels: EdgeColoring) -> Verdict:
    """Equal labels must always be separated by a strictly larger label.

    Witnesses are pairs of edge indices ``(e, f)`` with ``e < f``.
    """
    _check_coverage(tree, labels)
    if _unique_max_everywhere(tree, labels):
        return Verdict(True)
    return Verdict(False, _ranking_witness(tree, labels))


def renumber(colors: Sequence[int]) -> EdgeColoring:
    """Map the distinct colors onto 1..k' keeping their relative order."""
    rank = {col: i + 1 for i, col in enumerate(sorted(set(colors)))}
    return EdgeColoring.of(rank[col] for col in colors)


def restrict_coloring(tree: Tree, c: EdgeColoring, sub: Tree) -> EdgeColoring:
    """Restrict ``c`` to the edges of ``sub``, whose ``origin`` labels point into ``tree``."""
    _check_coverage(tree, c)
    origin = sub.origin if sub.origin is not None else tuple(range(sub.n))
    picked = []
    for a, b in sub.edges:
        try:
            x, y = origin[a], origin[b]
            picked.append(c.colors[tree.edge_index[(x, y)]])
        except (IndexError, KeyError):
            raise NotASubtree(f"edge ({a}, {b}) of the subtree is not an edge of the tree") from None
    return renumber(picked)
