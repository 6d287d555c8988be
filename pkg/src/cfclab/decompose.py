"""Iterated balanced-edge deletion.

Each round deletes one balanced edge from every component that still has an
edge. The round number of an edge is its depth, and coloring every edge by its
depth gives a conflict-free connection coloring: on any path, the edge deleted
first is the only one of its depth there.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass

from .errors import BadParams, TooLarge, TrivialTree
from .graph import Tree, balanced_edges, canonical_form, split
from .verify import EdgeColoring

LOWEST_INDEX = "lowest-edge-index"
SEEDED_RANDOM = "seeded-random"
POLICIES = (LOWEST_INDEX, SEEDED_RANDOM)

MIN_DEPTH_MAX_N = 40


@dataclass(frozen=True)
class DecompositionTrace:
    depth_of: tuple[int, ...]
    rounds: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return len(self.rounds)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "rounds": [list(r) for r in self.rounds],
            "coloring": list(self.depth_of),
        }


def _chooser(policy: str, seed: int | None):
    if policy == LOWEST_INDEX:
        return min
    if policy == SEEDED_RANDOM:
        if seed is None:
            raise BadParams("seeded-random policy needs a seed")
        rng = random.Random(seed)
        return lambda cands: rng.choice(sorted(cands))
    raise BadParams(f"unknown tie-break policy {policy!r}; expected one of {POLICIES}")


def _balanced_in(tree: Tree, alive: list[bool], comp: list[int]) -> list[int]:
    """Balanced edges of the component holding comp[0], over live edges only."""
    root = comp[0]
    parent = {root: -1}
    parent_edge = {root: -1}
    order = [root]
    for x in order:
        for y, e in tree.adjacency[x]:
            if alive[e] and y not in parent:
                parent[y] = x
                parent_edge[y] = e
                order.append(y)
    size = dict.fromkeys(order, 1)
    for x in reversed(order[1:]):
        size[parent[x]] += size[x]
    total = len(order)
    best = min(abs(total - 2 * size[x]) for x in order[1:])
    return [parent_edge[x] for x in order[1:] if abs(total - 2 * size[x]) == best]


def _collect(tree: Tree, alive: list[bool], start: int) -> list[int]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y, e in tree.adjacency[x]:
            if alive[e] and y not in seen:
                seen.add(y)
                stack.append(y)
    return sorted(seen)


def trace(tree: Tree, policy: str = LOWEST_INDEX, seed: int | None = None) -> DecompositionTrace:
    """Run the deletion rounds and record every edge's depth."""
    pick = _chooser(policy, seed)
    alive = [True] * tree.m
    depth_of = [0] * tree.m
    rounds: list[tuple[int, ...]] = []
    components = [list(range(tree.n))] if tree.n >= 2 else []
    while components:
        level = len(rounds) + 1
        deleted = []
        survivors = []
        for comp in components:
            cands = _balanced_in(tree, alive, comp)
            e = pick(cands)
            alive[e] = False
            depth_of[e] = level
            deleted.append(e)
            u, v = tree.edges[e]
            for side in (_collect(tree, alive, u), _collect(tree, alive, v)):
                if len(side) > 1:
                    survivors.append(side)
        rounds.append(tuple(sorted(deleted)))
        components = sorted(survivors)
    return DecompositionTrace(tuple(depth_of), tuple(rounds))


def algorithm1(tree: Tree, policy: str = LOWEST_INDEX, seed: int | None = None) -> tuple[EdgeColoring, DecompositionTrace]:
    """Color every edge by the round that deletes it."""
    if tree.n < 2:
        raise TrivialTree("a single vertex has nothing to color")
    tr = trace(tree, policy, seed)
    return EdgeColoring(tr.depth_of, tr.d), tr


def depth(tree: Tree, policy: str = LOWEST_INDEX, seed: int | None = None) -> int:
    if tree.n == 1:
        return 0
    return trace(tree, policy, seed).d


def ranking_from_trace(tr: DecompositionTrace) -> EdgeColoring:
    """Invert depths into labels: earlier rounds get larger labels."""
    top = tr.d + 1
    return EdgeColoring(tuple(top - d for d in tr.depth_of), tr.d)


class MinDepthSolver:
    """Memoized minimum depth over all balanced-edge choices.

    The memo is keyed by canonical form, so isomorphic subtrees are solved
    once. One solver may be shared between threads.
    """

    def __init__(self, max_n: int = MIN_DEPTH_MAX_N):
        self.max_n = max_n
        self._memo: dict[str, int] = {}
        self._lock = threading.Lock()

    def __call__(self, tree: Tree) -> int:
        if tree.n > self.max_n:
            raise TooLarge(f"min_depth is exponential; n={tree.n} exceeds {self.max_n}")
        return self._solve(tree)

    def _solve(self, tree: Tree) -> int:
        if tree.n == 1:
            return 0
        if tree.n == 2:
            return 1
        key = canonical_form(tree)
        with self._lock:
            hit = self._memo.get(key)
        if hit is not None:
            return hit
        best = None
        for e in sorted(balanced_edges(tree)):
            left, right = split(tree, e)
            value = 1 + max(self._solve(left), self._solve(right))
            if best is None or value < best:
                best = value
        with self._lock:
            self._memo[key] = best
        return best


_shared = MinDepthSolver()


def min_depth(tree: Tree) -> int:
    """Smallest number of rounds reachable by any sequence of tie-breaks."""
    return _shared(tree)
