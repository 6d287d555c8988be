import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from cfclab.families import prufer_decode  # noqa: E402

_ACCEPTANCE: list[str] = []


@st.composite
def trees(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        from cfclab.graph import build_tree

        return build_tree(n, [(0, 1)] if n == 2 else [])
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return prufer_decode(n, seq)


@st.composite
def colored_trees(draw, min_n=2, max_n=9, max_k=3):
    tree = draw(trees(min_n, max_n))
    k = draw(st.integers(1, max_k))
    colors = draw(st.lists(st.integers(1, k), min_size=tree.m, max_size=tree.m))
    return tree, colors


@pytest.fixture
def criterion():
    """Record a one-line pass/fail result for the acceptance summary."""

    def record(label: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
