"""Exact maximum outerplanar subgraph at desk scale, plus the edge bound.

The optimum decomposes over blocks of the input: a cycle of any subgraph
stays inside one block, so per-block optima can be summed. Within a
non-outerplanar block the search enumerates circular orders of the block's
vertices (one per rotation and reflection class) and, for each order, runs
the classic interval DP for the best triangulated-polygon template,
scoring a template edge only when the input actually has it. Every
outerplanar subgraph extends to such a template, so the sweep is exact;
it stops early when a block hits its Euler bound ``2 n_b - 3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import BudgetExceededError
from .graph import Edge, Graph, connected_components, induced_subgraph
from .outerplanar import block_decomposition, is_outerplanar

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class ExactResult:
    opt: int
    witness: tuple[Edge, ...]
    nodes_explored: int


def upper_bound(g: Graph) -> int:
    """Per-component outerplanar edge bound: min(m_i, 2 n_i - 3) for n_i >= 3."""
    labels = connected_components(g)
    k = max(labels) + 1 if labels else 0
    sizes = [0] * k
    counts = [0] * k
    for v in range(g.n):
        sizes[labels[v]] += 1
    for u, _v in g.edges:
        counts[labels[u]] += 1
    total = 0
    for size, m in zip(sizes, counts):
        total += m if size <= 2 else min(m, 2 * size - 3)
    return total


def _dp_cost(nb: int) -> int:
    # split candidates over all intervals: sum over lengths of count * (len-1)
    return sum((nb - length) * (length - 1) for length in range(2, nb))


def _polygon_dp(order: tuple[int, ...], w: list[list[int]]) -> int:
    nb = len(order)
    boundary = sum(w[order[i]][order[i + 1]] for i in range(nb - 1))
    boundary += w[order[-1]][order[0]]
    m = [[0] * nb for _ in range(nb)]
    for length in range(2, nb):
        for i in range(nb - length):
            j = i + length
            oi = order[i]
            oj = order[j]
            row_i = m[i]
            best = 0
            for k in range(i + 1, j):
                ok = order[k]
                val = row_i[k] + m[k][j]
                if k > i + 1:
                    val += w[oi][ok]
                if j > k + 1:
                    val += w[ok][oj]
                if val > best:
                    best = val
            row_i[j] = best
    return boundary + m[0][nb - 1]


def _polygon_dp_witness(order: tuple[int, ...], w: list[list[int]]) -> list[tuple[int, int]]:
    """Local edges (as index pairs into the block) of one best template."""
    nb = len(order)
    m = [[0] * nb for _ in range(nb)]
    split = [[0] * nb for _ in range(nb)]
    for length in range(2, nb):
        for i in range(nb - length):
            j = i + length
            best, best_k = -1, i + 1
            for k in range(i + 1, j):
                val = m[i][k] + m[k][j]
                if k > i + 1:
                    val += w[order[i]][order[k]]
                if j > k + 1:
                    val += w[order[k]][order[j]]
                if val > best:
                    best, best_k = val, k
            m[i][j] = best
            split[i][j] = best_k
    edges = []
    for i in range(nb - 1):
        if w[order[i]][order[i + 1]]:
            edges.append((order[i], order[i + 1]))
    if w[order[-1]][order[0]]:
        edges.append((order[-1], order[0]))
    stack = [(0, nb - 1)]
    while stack:
        i, j = stack.pop()
        if j - i < 2:
            continue
        k = split[i][j]
        if k > i + 1 and w[order[i]][order[k]]:
            edges.append((order[i], order[k]))
        if j > k + 1 and w[order[k]][order[j]]:
            edges.append((order[k], order[j]))
        stack.append((i, k))
        stack.append((k, j))
    return edges


def _block_optimum(
    block: Graph, budget_left: int
) -> tuple[int, list[tuple[int, int]], int, bool]:
    """(best, local witness edges, nodes used, finished) for one 2-connected block."""
    nb = block.n
    w = [[0] * nb for _ in range(nb)]
    for u, v in block.edges:
        w[u][v] = w[v][u] = 1
    ub = min(block.m, 2 * nb - 3)
    cost = _dp_cost(nb)
    best = -1
    best_order: tuple[int, ...] | None = None
    nodes = 0
    finished = True
    others = tuple(range(1, nb))
    for perm in permutations(others):
        if perm[0] > perm[-1]:
            continue  # reflection of an order already tried
        if nodes + cost > budget_left:
            finished = False
            break
        nodes += cost
        order = (0,) + perm
        val = _polygon_dp(order, w)
        if val > best:
            best = val
            best_order = order
            if best == ub:
                break
    witness = _polygon_dp_witness(best_order, w) if best_order is not None else []
    if best < 0:
        best = nb - 1  # spanning tree fallback when no order was evaluated
        witness = []
    return best, witness, nodes, finished


def exact_max_outerplanar(g: Graph, budget: int = DEFAULT_BUDGET) -> ExactResult:
    """Edge count and witness of a maximum outerplanar subgraph of ``g``.

    Raises :class:`BudgetExceededError` carrying the best lower bound proved
    so far when the search exceeds ``budget`` candidate evaluations.
    """
    blocks = [b for b in block_decomposition(g).blocks if b.edges]
    total = 0
    witness: list[Edge] = []
    nodes = 0
    for idx, block in enumerate(blocks):
        if block.is_bridge:
            total += 1
            witness.append(block.edges[0])
            continue
        sub, back = induced_subgraph(g, block.vertices)
        if is_outerplanar(sub):
            total += sub.m
            witness.extend(block.edges)
            continue
        best, local_edges, used, finished = _block_optimum(sub, budget - nodes)
        nodes += used
        if not finished:
            remaining = sum(len(b.vertices) - 1 for b in blocks[idx + 1:])
            lower = total + max(best, sub.n - 1) + remaining
            raise BudgetExceededError(
                f"budget of {budget} nodes exhausted", lower, nodes
            )
        total += best
        for a, b in local_edges:
            u, v = back[a], back[b]
            witness.append((u, v) if u < v else (v, u))
    return ExactResult(total, tuple(sorted(witness)), nodes)
