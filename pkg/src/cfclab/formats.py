"""Text formats: edge lists, coloring files, DOT export.

Edge list: first non-comment line ``n m``, then ``m`` lines ``u v``. Lines
starting with ``#`` and blank lines are skipped. Anything after the ``m``
edge lines is handed back to the caller, which lets a coloring ride along in
the same stream (``gen ... --certificate | verify``).

Coloring: optional header ``k <count>``, then ``edge_index color`` lines.
"""

from __future__ import annotations

from .errors import CoverageError, FormatError
from .graph import Graph, Tree, build_graph, build_tree
from .verify import EdgeColoring

# DOT colors by color id (1-based); ids beyond the palette wrap around
PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#ff7f0e",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
)


def _content_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _ints(line: str, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise FormatError(f"expected {count} integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"non-integer field in {line!r}") from None


def _read_pairs(text: str) -> tuple[int, list[list[int]], list[str]]:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty edge list")
    n, m = _ints(lines[0], 2)
    if len(lines) < 1 + m:
        raise FormatError(f"header promises {m} edges, found {len(lines) - 1}")
    pairs = [_ints(ln, 2) for ln in lines[1 : 1 + m]]
    return n, pairs, lines[1 + m :]


def read_tree(text: str) -> tuple[Tree, list[str]]:
    """Parse an edge list into a Tree; also return any trailing content lines."""
    n, pairs, rest = _read_pairs(text)
    return build_tree(n, pairs), rest


def read_graph(text: str) -> Graph:
    n, pairs, _ = _read_pairs(text)
    return build_graph(n, pairs)


def write_edges(n: int, edges, canonical: bool = False) -> str:
    if canonical:
        edges = sorted((min(u, v), max(u, v)) for u, v in edges)
    lines = [f"{n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def write_tree(tree: Tree, canonical: bool = False) -> str:
    """Edge-list text. ``canonical`` sorts normalized edges, which renumbers them."""
    return write_edges(tree.n, tree.edges, canonical)


def read_coloring(lines: list[str] | str, m: int) -> EdgeColoring:
    if isinstance(lines, str):
        lines = _content_lines(lines)
    k = None
    colors: dict[int, int] = {}
    for ln in lines:
        parts = ln.split()
        if parts and parts[0] == "k":
            k = _ints(" ".join(parts[1:]), 1)[0]
            continue
        e, c = _ints(ln, 2)
        if not 0 <= e < m:
            raise FormatError(f"edge index {e} outside 0..{m - 1}")
        if e in colors:
            raise FormatError(f"edge {e} colored twice")
        colors[e] = c
    missing = [e for e in range(m) if e not in colors]
    if missing:
        raise CoverageError(f"no color for edges {missing}")
    return EdgeColoring.of((colors[e] for e in range(m)), k)


def write_coloring(c: EdgeColoring) -> str:
    lines = [f"k {c.k}"] + [f"{e} {col}" for e, col in enumerate(c.colors)]
    return "\n".join(lines) + "\n"


def to_dot(tree: Tree, coloring: EdgeColoring | None = None, depth_of=None) -> str:
    """Undirected DOT graph; edges labeled and colored by color id, pen width by depth."""
    out = ["graph T {", "  node [shape=circle];"]
    for v in range(tree.n):
        out.append(f"  {v};")
    for e, (u, v) in enumerate(tree.edges):
        attrs = [f'taillabel="e{e}"', 'labelfontsize=8']
        if coloring is not None:
            col = coloring.colors[e]
            attrs.append(f'label="{col}"')
            attrs.append(f'color="{PALETTE[(col - 1) % len(PALETTE)]}"')
        if depth_of is not None:
            top = max(depth_of) if depth_of else 1
            attrs.append(f"penwidth={1 + top - depth_of[e]}")
        out.append(f"  {u} -- {v} [{', '.join(attrs)}];")
    out.append("}")
    return "\n".join(out) + "\n"
