"""Orientations of hypergraph edges and their interplay with colorings.

An orientation picks one head vertex inside each edge; it is stored as a
tuple aligned with the edge indices of the hypergraph.  Edge i points at
edge j when the head of i lies in j but is not j's head; an orientation
is acyclic when this relation on edge indices has no cycle.  Repeated
edges have distinct indices and may form a 2-cycle by aiming at each
other.

A coloring is a map from the vertices to {1, ..., n}.  It is compatible
with an orientation when every head carries the maximal color of its
edge, and strictly compatible when every head is the unique maximizer.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Mapping, Sequence

from .hypergraph import Hypergraph


def validate_orientation(h: Hypergraph, heads: Sequence[str]) -> tuple:
    heads = tuple(heads)
    if len(heads) != len(h.edges):
        raise ValueError(
            f"orientation assigns {len(heads)} heads to {len(h.edges)} edges"
        )
    for i, (head, edge) in enumerate(zip(heads, h.edges)):
        if head not in edge:
            raise ValueError(f"head {head!r} of edge {i} is not one of its vertices")
    return heads


def _points_at(edges, heads, i: int, j: int) -> bool:
    return i != j and heads[i] in edges[j] and heads[i] != heads[j]


def is_acyclic(h: Hypergraph, heads: Sequence[str]) -> bool:
    """Depth-first search for a cycle on the edge-index digraph."""
    heads = validate_orientation(h, heads)
    edges = h.edges
    m = len(edges)
    state = [0] * m  # 0 unvisited, 1 on stack, 2 done
    for start in range(m):
        if state[start]:
            continue
        stack = [(start, 0)]
        state[start] = 1
        while stack:
            node, nxt = stack[-1]
            advanced = False
            for j in range(nxt, m):
                if _points_at(edges, heads, node, j):
                    stack[-1] = (node, j + 1)
                    if state[j] == 1:
                        return False
                    if state[j] == 0:
                        state[j] = 1
                        stack.append((j, 0))
                    advanced = True
                    break
            if not advanced:
                state[node] = 2
                stack.pop()
    return True


def all_orientations(h: Hypergraph) -> Iterator[tuple]:
    """Every head assignment, in lexicographic order over sorted edges."""
    return product(*(sorted(e) for e in h.edges))


def orientation_count(h: Hypergraph) -> int:
    total = 1
    for e in h.edges:
        total *= len(e)
    return total


def _closes_cycle(edges, heads, k: int) -> bool:
    """Whether edges 0..k with the given heads contain a cycle through k.

    Used to prune partial assignments: a cycle among assigned edges
    survives in every extension.
    """
    stack = [k]
    seen = {k}
    while stack:
        i = stack.pop()
        for j in range(k + 1):
            if _points_at(edges, heads, i, j):
                if j == k:
                    return True
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
    return False


def acyclic_orientations(h: Hypergraph) -> Iterator[tuple]:
    """All acyclic orientations, by backtracking with cycle pruning.

    Output order and content match filtering all_orientations through
    is_acyclic.
    """
    edges = h.edges
    m = len(edges)
    choices = [sorted(e) for e in edges]
    heads: list = [None] * m

    def rec(k: int) -> Iterator[tuple]:
        if k == m:
            yield tuple(heads)
            return
        for head in choices[k]:
            heads[k] = head
            if not _closes_cycle(edges, heads, k):
                yield from rec(k + 1)
        heads[k] = None

    return rec(0)


def colorings(vertices, n: int) -> Iterator[dict]:
    """All maps from the vertices to {1..n}, in lexicographic label order."""
    labels = sorted(vertices)
    for combo in product(range(1, n + 1), repeat=len(labels)):
        yield dict(zip(labels, combo))


def is_compatible(h: Hypergraph, heads: Sequence[str], coloring: Mapping[str, int]) -> bool:
    """Every head attains the maximal color of its edge."""
    heads = validate_orientation(h, heads)
    for head, edge in zip(heads, h.edges):
        if coloring[head] != max(coloring[v] for v in edge):
            return False
    return True


def is_strictly_compatible(
    h: Hypergraph, heads: Sequence[str], coloring: Mapping[str, int]
) -> bool:
    """Every head is the one and only vertex of maximal color in its edge."""
    heads = validate_orientation(h, heads)
    for head, edge in zip(heads, h.edges):
        top = max(coloring[v] for v in edge)
        if coloring[head] != top:
            return False
        if sum(1 for v in edge if coloring[v] == top) != 1:
            return False
    return True


def count_compatible_pairs(h: Hypergraph, n: int, strict: bool = False) -> int:
    """Number of (acyclic orientation, coloring) pairs that are compatible.

    Iterates over colorings and, for each, over the head assignments that
    realize the edge maxima; acyclicity of each candidate is memoized.
    """
    if n < 0:
        raise ValueError("number of colors must be >= 0")
    edges = h.edges
    acyclic_memo: dict[tuple, bool] = {}

    def acyclic(heads: tuple) -> bool:
        hit = acyclic_memo.get(heads)
        if hit is None:
            hit = acyclic_memo[heads] = is_acyclic(h, heads)
        return hit

    total = 0
    for coloring in colorings(h.vertices, n):
        argmax = []
        for e in edges:
            top = max(coloring[v] for v in e)
            argmax.append(sorted(v for v in e if coloring[v] == top))
        if strict:
            if all(len(a) == 1 for a in argmax):
                heads = tuple(a[0] for a in argmax)
                if acyclic(heads):
                    total += 1
        else:
            for heads in product(*argmax):
                if acyclic(heads):
                    total += 1
    return total
