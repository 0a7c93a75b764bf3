"""Exact maximum-clique search: branch and bound with a greedy-coloring bound.

Vertices are 0..V-1 and adjacency is given as one int bitmask per vertex.
The search is deterministic: vertices are pre-ordered by non-increasing
degree and the coloring walks candidates in that fixed order.  A node budget
caps the branch count; on exhaustion the best clique found so far is returned
with ``complete=False``.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class CliqueResult:
    size: int
    members: tuple[int, ...]  # vertex ids in the caller's numbering
    complete: bool
    nodes: int


class _BudgetExhausted(Exception):
    pass


def _greedy_clique(adj: list[int], order: list[int]) -> list[int]:
    """Cheap initial clique: scan vertices in order, keep mutually adjacent ones."""
    clique: list[int] = []
    mask = -1
    for v in order:
        if mask == -1 or (mask >> v) & 1:
            clique.append(v)
            mask = adj[v] if mask == -1 else mask & adj[v]
    return clique


def max_clique(adjacency: list[int], node_budget: int = 10_000_000) -> CliqueResult:
    """Maximum clique of the graph; exact if the node budget is not exhausted."""
    n = len(adjacency)
    if n == 0:
        return CliqueResult(0, (), True, 0)

    # Relabel by non-increasing degree; better coloring bounds come first.
    order = sorted(range(n), key=lambda v: (-adjacency[v].bit_count(), v))
    pos = {v: i for i, v in enumerate(order)}
    adj = [0] * n
    for v in range(n):
        row = 0
        mask = adjacency[v]
        while mask:
            low = mask & -mask
            row |= 1 << pos[low.bit_length() - 1]
            mask ^= low
        adj[pos[v]] = row

    seed = _greedy_clique(adjacency, order)
    best = len(seed)
    best_members = [pos[v] for v in seed]
    nodes = 0

    def color_sort(cand: int) -> tuple[list[int], list[int]]:
        """Greedy coloring of the candidate set; returns vertices and their color counts.

        Vertices come out grouped by color class, so colors[i] (the number of
        classes used up to and including vertex i) is an upper bound on any
        clique inside the candidates up to that point.
        """
        vertices: list[int] = []
        bounds: list[int] = []
        color = 0
        while cand:
            color += 1
            available = cand
            while available:
                low = available & -available
                v = low.bit_length() - 1
                vertices.append(v)
                bounds.append(color)
                available &= ~adj[v]
                cand ^= low
                available &= cand
        return vertices, bounds

    stack: list[int] = []

    def expand(cand: int) -> None:
        nonlocal best, best_members, nodes
        nodes += 1
        if nodes > node_budget:
            raise _BudgetExhausted
        vertices, bounds = color_sort(cand)
        for i in range(len(vertices) - 1, -1, -1):
            if len(stack) + bounds[i] <= best:
                return
            v = vertices[i]
            stack.append(v)
            sub = cand & adj[v]
            if sub:
                expand(sub)
            elif len(stack) > best:
                best = len(stack)
                best_members = stack.copy()
            stack.pop()
            cand &= ~(1 << v)

    complete = True
    try:
        expand((1 << n) - 1)
    except _BudgetExhausted:
        complete = False

    members = tuple(sorted(order[i] for i in best_members))
    return CliqueResult(best, members, complete, nodes)
