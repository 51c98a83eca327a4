"""Benchmark harness: run the pipeline over a corpus and report ratios.

A corpus is a JSON-able dict::

    {
      "seed": 7,                  # master seed (CLI --seed overrides)
      "exact_threshold": 9,       # exact optimum when n <= threshold
      "budget": 10000000,         # oracle node budget per instance
      "instances": [
        {"kind": "tight", "q": 5},
        {"kind": "diamond", "k": 2},
        {"kind": "gnp", "n": 8, "p": 0.5, "count": 20},
        {"kind": "file", "path": "graph.el"}
      ]
    }

Instance graphs and per-instance run seeds derive deterministically from
the master seed, so records come out identical regardless of worker count.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .errors import BudgetExceededError, ValidationError
from .generators import gen_diamond_family, gen_random, gen_tight_family
from .graph import Graph, graph_new, read_edgelist
from .oracle import DEFAULT_BUDGET, exact_max_outerplanar, upper_bound
from .sts import run_sts

DEFAULT_EXACT_THRESHOLD = 9


@dataclass(frozen=True)
class BenchRecord:
    instance_id: str
    n: int
    m: int
    output_edges: int
    r: int
    c: int
    bound: int
    bound_is_exact: bool
    ratio_lower_bound: float
    seed: int
    wall_time: float
    budget_exhausted: bool = False


def _expand(corpus: dict, master_seed: int) -> list[tuple[str, int, tuple, int]]:
    """Flatten the corpus into (id, n, edges, run_seed) work items."""
    rng = random.Random(master_seed)
    items = []
    for entry in corpus.get("instances", []):
        kind = entry.get("kind")
        if kind == "tight":
            g = gen_tight_family(entry["q"])
            items.append((f"tight-q{entry['q']}", g))
        elif kind == "diamond":
            inst = gen_diamond_family(entry["k"])
            items.append((f"diamond-k{entry['k']}", inst.graph))
        elif kind == "gnp":
            count = entry.get("count", 1)
            for i in range(count):
                gseed = rng.randrange(2**32)
                g = gen_random(entry["n"], entry["p"], gseed)
                items.append((f"gnp-n{entry['n']}-p{entry['p']}-{i}", g))
        elif kind == "file":
            with open(entry["path"], encoding="utf-8") as fh:
                g = read_edgelist(fh.read())
            items.append((entry.get("id", entry["path"]), g))
        else:
            raise ValidationError(f"unknown instance kind {kind!r}")
    return [
        (iid, g.n, g.edges, rng.randrange(2**32)) for iid, g in items
    ]


def _bench_one(item: tuple[str, int, tuple, int, int, int]) -> BenchRecord:
    iid, n, edges, run_seed, threshold, budget = item
    g = graph_new(n, edges)
    start = time.perf_counter()
    solution = run_sts(g, seed=run_seed)
    exhausted = False
    if g.n <= threshold:
        try:
            bound = exact_max_outerplanar(g, budget=budget).opt
            exact = True
        except BudgetExceededError:
            bound = upper_bound(g)
            exact = False
            exhausted = True
    else:
        bound = upper_bound(g)
        exact = False
    elapsed = time.perf_counter() - start
    ratio = solution.m / bound if bound > 0 else 1.0
    return BenchRecord(
        instance_id=iid,
        n=g.n,
        m=g.m,
        output_edges=solution.m,
        r=solution.r,
        c=solution.c,
        bound=bound,
        bound_is_exact=exact,
        ratio_lower_bound=ratio,
        seed=run_seed,
        wall_time=elapsed,
        budget_exhausted=exhausted,
    )


def bench_run(
    corpus: dict, seed: int | None = None, jobs: int = 1
) -> tuple[list[BenchRecord], dict]:
    """Run the pipeline on every corpus instance; return records and report."""
    master_seed = corpus.get("seed", 0) if seed is None else seed
    threshold = corpus.get("exact_threshold", DEFAULT_EXACT_THRESHOLD)
    budget = corpus.get("budget", DEFAULT_BUDGET)
    work = [
        (iid, n, edges, run_seed, threshold, budget)
        for iid, n, edges, run_seed in _expand(corpus, master_seed)
    ]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_bench_one, work))
    else:
        records = [_bench_one(item) for item in work]
    ratios = [rec.ratio_lower_bound for rec in records]
    summary = {
        "instances": len(records),
        "min_ratio": min(ratios) if ratios else None,
        "mean_ratio": sum(ratios) / len(ratios) if ratios else None,
    }
    report = {
        "config": {
            "seed": master_seed,
            "exact_threshold": threshold,
            "budget": budget,
            "jobs": jobs,
        },
        "records": [asdict(rec) for rec in records],
        "summary": summary,
    }
    return records, report
