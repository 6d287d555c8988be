"""Named tree families, their known cfc colorings, and uniform random trees.

Labeling conventions (stable, so edge indices can be pinned in tests):

* path ``n``: vertices along the path, edge ``i`` joins ``i`` and ``i+1``.
* star ``k``: center 0, edge ``i`` joins 0 and ``i+1``.
* double_star ``a b``: centers 0 (degree ``a``) and 1 (degree ``b``); edge 0
  joins them, then the leaves of 0, then the leaves of 1.
* binomial ``k``: root 0; the second copy of ``B_{k-1}`` is offset by
  ``2^(k-2)``; its edges follow the first copy's, then the joining edge.
* complete_binary ``k``: heap order, edge ``i`` joins ``i+1`` to its parent.
* Q ``k``: centers 0 and 1, shared vertex 2; edges 0-2, 1-2, then the leaves
  of 0, then the leaves of 1.
* R ``k``: star center 0, shared vertex 1, path vertices ``2..2^(k-2)+1``,
  then the remaining star leaves; edge 0 joins 0 and 1, path edges follow.
* A ``k``: like R but built from a star with ``k`` leaves and a path on
  ``2^(k-1)`` vertices.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field

from .decompose import algorithm1
from .errors import BadParams, NoConstruction
from .graph import Tree, build_tree
from .verify import EdgeColoring

FAMILIES = ("path", "star", "double_star", "binomial", "complete_binary", "Q", "R", "A", "random")

_ARITY = {
    "path": 1,
    "star": 1,
    "double_star": 2,
    "binomial": 1,
    "complete_binary": 1,
    "Q": 1,
    "R": 1,
    "A": 1,
    "random": 1,
}

_MINIMUM = {
    "path": 1,
    "star": 1,
    "double_star": 2,
    "binomial": 1,
    "complete_binary": 1,
    "Q": 2,
    "R": 2,
    "A": 2,
    "random": 1,
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = field(default=())
    seed: int | None = None

    def tag(self) -> str:
        body = ",".join(str(p) for p in self.params)
        if self.seed is not None:
            return f"{self.family}({body};seed={self.seed})"
        return f"{self.family}({body})"


def _check(spec: FamilySpec) -> None:
    if spec.family not in _ARITY:
        raise BadParams(f"unknown family {spec.family!r}; expected one of {FAMILIES}")
    if len(spec.params) != _ARITY[spec.family]:
        raise BadParams(f"{spec.family} takes {_ARITY[spec.family]} integer parameter(s)")
    low = _MINIMUM[spec.family]
    if any(p < low for p in spec.params):
        raise BadParams(f"{spec.family} parameters must be >= {low}, got {spec.params}")
    if spec.family == "random" and spec.seed is None:
        raise BadParams("random trees need a seed")


def path(n: int) -> Tree:
    return build_tree(n, [(i, i + 1) for i in range(n - 1)])


def star(k: int) -> Tree:
    return build_tree(k + 1, [(0, i) for i in range(1, k + 1)])


def double_star(a: int, b: int) -> Tree:
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a - 1)]
    edges += [(1, a + 1 + i) for i in range(b - 1)]
    return build_tree(a + b, edges)


def _binomial_edges(k: int) -> list[tuple[int, int]]:
    if k == 1:
        return []
    half = _binomial_edges(k - 1)
    off = 1 << (k - 2)
    return half + [(u + off, v + off) for u, v in half] + [(0, off)]


def binomial(k: int) -> Tree:
    return build_tree(1 << (k - 1), _binomial_edges(k))


def complete_binary(k: int) -> Tree:
    n = (1 << k) - 1
    return build_tree(n, [((i - 1) // 2, i) for i in range(1, n)])


def q_tree(k: int) -> Tree:
    edges = [(0, 2), (1, 2)]
    edges += [(0, 3 + i) for i in range(k - 2)]
    edges += [(1, k + 1 + i) for i in range(k - 2)]
    return build_tree(2 * k - 1, edges)


def _broom(leaves: int, path_len: int) -> Tree:
    """Star with ``leaves`` leaves, one of which starts a path of ``path_len`` vertices."""
    edges = [(0, 1)]
    edges += [(v, v + 1) for v in range(1, path_len)]
    first = path_len + 1
    edges += [(0, first + i) for i in range(leaves - 1)]
    return build_tree(leaves + path_len, edges)


def r_tree(k: int) -> Tree:
    return _broom(k - 1, (1 << (k - 2)) + 1)


def a_tree(k: int) -> Tree:
    return _broom(k, 1 << (k - 1))


def random_tree(n: int, seed: int) -> Tree:
    """Uniform labeled tree on n vertices, decoded from a random Pruefer sequence."""
    if n < 1:
        raise BadParams(f"n must be >= 1, got {n}")
    if n == 1:
        return build_tree(1, [])
    rng = random.Random(seed)
    return prufer_decode(n, [rng.randrange(n) for _ in range(n - 2)])


def prufer_decode(n: int, seq: list[int]) -> Tree:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return build_tree(n, edges)


def generate(spec: FamilySpec) -> Tree:
    _check(spec)
    p = spec.params
    fam = spec.family
    if fam == "path":
        return path(p[0])
    if fam == "star":
        return star(p[0])
    if fam == "double_star":
        return double_star(p[0], p[1])
    if fam == "binomial":
        return binomial(p[0])
    if fam == "complete_binary":
        return complete_binary(p[0])
    if fam == "Q":
        return q_tree(p[0])
    if fam == "R":
        return r_tree(p[0])
    if fam == "A":
        return a_tree(p[0])
    return random_tree(p[0], spec.seed)


def _double_star_coloring(a: int, b: int) -> EdgeColoring:
    # central edge 1; each center's leaves count up from 2, so the larger
    # center alone spends all max(a, b) colors
    colors = [1] + list(range(2, a + 1)) + list(range(2, b + 1))
    return EdgeColoring(tuple(colors), max(a, b))


def _q_coloring(k: int) -> EdgeColoring:
    # u-w gets 1, v-w gets 2, leaves of u get 3..k, leaves of v reuse 3..k
    colors = [1, 2] + list(range(3, k + 1)) + list(range(3, k + 1))
    return EdgeColoring(tuple(colors), k)


def _r_coloring(k: int) -> EdgeColoring:
    # path beyond the shared vertex: its own optimal coloring on colors 1..k-2;
    # shared vertex to path gets k, star center to shared vertex gets k-1,
    # other star leaves get 1..k-2
    plen = 1 << (k - 2)
    tail = path(plen)
    tail_colors = list(algorithm1(tail)[0].colors) if plen > 1 else []
    colors = [k - 1, k] + tail_colors + list(range(1, k - 1))
    return EdgeColoring(tuple(colors), k)


def generate_with_certificate(spec: FamilySpec) -> tuple[Tree, EdgeColoring, int]:
    """Tree, a conflict-free coloring known from its construction, and its cfc."""
    tree = generate(spec)
    fam = spec.family
    p = spec.params
    if fam in ("path", "star", "binomial"):
        if tree.n == 1:
            return tree, EdgeColoring((), 0), 0
        coloring, tr = algorithm1(tree)
        return tree, coloring, tr.d
    if fam == "double_star":
        return tree, _double_star_coloring(*p), max(p)
    if fam == "Q":
        return tree, _q_coloring(p[0]), p[0]
    if fam == "R":
        return tree, _r_coloring(p[0]), p[0]
    raise NoConstruction(f"no certificate construction for family {fam!r}")
