"""Measurement sweeps: exact cfc against the minimum decomposition depth.

Each tree yields one JSON-lines record. The ``D < 2 cfc`` question is only
measured here; a record where it fails is kept with its full edge list so it
can be replayed on its own.
"""

from __future__ import annotations

import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator

from .decompose import depth, min_depth
from .errors import BadParams, BudgetExceeded, CfcError
from .exact import cfc_exact, log2_ceil
from .families import FamilySpec, generate, random_tree
from .graph import Tree, build_tree

SCHEMA_VERSION = 1
DEFAULT_MAX_N = 14


def default_max_n() -> int:
    return int(os.environ.get("CFCLAB_MAX_N", DEFAULT_MAX_N))


class SweepAborted(CfcError):
    """A record broke a proven bound, which means a solver bug."""


@dataclass(frozen=True)
class SweepRecord:
    tree_id: str
    n: int
    delta: int
    cfc: int | None
    D: int | None
    d_default: int
    ratio: float | None
    conjecture_337_holds: bool | None
    lb_ok: bool | None
    edges: list
    status: str = "ok"
    lb: int | None = None
    ub: int | None = None
    v: int = SCHEMA_VERSION

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "SweepRecord":
        return cls(**json.loads(line))

    def tree(self) -> Tree:
        return build_tree(self.n, self.edges)


@dataclass(frozen=True)
class Job:
    tree_id: str
    n: int
    edges: tuple
    budget: int | None


def measure(job: Job) -> SweepRecord:
    tree = build_tree(job.n, job.edges)
    edges = [list(e) for e in tree.edges]
    delta = tree.max_degree
    if tree.n < 2:
        return SweepRecord(job.tree_id, tree.n, delta, 0, 0, 0, None, None, True, edges)
    d_default = depth(tree)
    try:
        cfc = cfc_exact(tree, job.budget).value
    except BudgetExceeded as exc:
        return SweepRecord(job.tree_id, tree.n, delta, None, None, d_default, None, None, None,
                           edges, status="budget_exceeded", lb=exc.lower, ub=exc.upper)
    big_d = min_depth(tree)
    lb_ok = cfc >= log2_ceil(tree.n)
    return SweepRecord(job.tree_id, tree.n, delta, cfc, big_d, d_default, big_d / cfc,
                       big_d < 2 * cfc, lb_ok, edges)


def random_jobs(count: int, n_lo: int, n_hi: int, seed: int, budget: int | None = None,
                max_n: int | None = None) -> list[Job]:
    max_n = default_max_n() if max_n is None else max_n
    if not 1 <= n_lo <= n_hi:
        raise BadParams(f"bad n range [{n_lo}, {n_hi}]")
    if n_hi > max_n:
        raise BadParams(f"n up to {n_hi} exceeds the exact-solver limit {max_n} (CFCLAB_MAX_N)")
    rng = random.Random(seed)
    jobs = []
    for i in range(count):
        n = rng.randint(n_lo, n_hi)
        tree_seed = rng.getrandbits(32)
        tree = random_tree(n, tree_seed)
        jobs.append(Job(f"random:{seed}:{i}:{tree_seed}", n, tree.edges, budget))
    return jobs


def family_jobs(family: str, values: Iterable[int], budget: int | None = None) -> list[Job]:
    jobs = []
    for p in values:
        spec = FamilySpec(family, (p,))
        tree = generate(spec)
        jobs.append(Job(spec.tag(), tree.n, tree.edges, budget))
    return jobs


def run(jobs: list[Job], workers: int = 1) -> Iterator[SweepRecord]:
    """Measure every job; records come back in job order whatever the pool does."""
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            yield from _checked(pool.map(measure, jobs))
    else:
        yield from _checked(map(measure, jobs))


def _checked(records: Iterable[SweepRecord]) -> Iterator[SweepRecord]:
    for rec in records:
        if rec.lb_ok is False:
            raise SweepAborted(f"{rec.tree_id}: cfc {rec.cfc} below ceil(log2 {rec.n})")
        yield rec


def summarize(records: list[SweepRecord]) -> dict:
    solved = [r for r in records if r.status == "ok" and r.ratio is not None]
    ratios = [r.ratio for r in solved]
    return {
        "v": SCHEMA_VERSION,
        "records": len(records),
        "solved": len(solved),
        "budget_exceeded": sum(r.status == "budget_exceeded" for r in records),
        "min_ratio": min(ratios) if ratios else None,
        "max_ratio": max(ratios) if ratios else None,
        "violations": [asdict(r) for r in solved if not r.conjecture_337_holds],
    }


def write_report(records: Iterable[SweepRecord], path) -> list[SweepRecord]:
    kept = []
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for rec in records:
            fh.write(rec.to_json() + "\n")
            kept.append(rec)
    return kept


def read_report(path) -> list[SweepRecord]:
    with open(path, encoding="utf-8") as fh:
        return [SweepRecord.from_json(ln) for ln in fh if ln.strip()]
