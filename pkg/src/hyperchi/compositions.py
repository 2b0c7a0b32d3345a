"""Ordered set decompositions and compositions of a finite label set.

A decomposition is a sequence of pairwise disjoint blocks whose union is
the ground set; empty blocks are allowed.  A composition additionally
forbids empty blocks.  Length-n decompositions are in bijection with
functions from the ground set to {1, ..., n} (block i = preimage of i+1),
which is how colorings are enumerated elsewhere.

Vertex labels are strings; every enumeration order is derived from the
lexicographic order on labels so output is deterministic.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence


class SetDecomposition:
    """Ordered, pairwise disjoint blocks covering a ground set."""

    __slots__ = ("blocks", "ground", "_index")

    def __init__(self, blocks: Iterable[Iterable[str]], ground=None):
        blocks = tuple(frozenset(b) for b in blocks)
        index: dict[str, int] = {}
        for i, block in enumerate(blocks):
            for v in block:
                if v in index:
                    raise ValueError(f"blocks are not disjoint: {v!r} repeats")
                index[v] = i
        union = frozenset(index)
        if ground is None:
            ground = union
        else:
            ground = frozenset(ground)
            if union != ground:
                raise ValueError("blocks do not cover the ground set")
        self.blocks = blocks
        self.ground = ground
        self._index = index

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __getitem__(self, i):
        return self.blocks[i]

    def index_of(self, v: str) -> int:
        """0-based index of the block containing v."""
        return self._index[v]

    def cano(self) -> "SetComposition":
        """Drop empty blocks, keeping order."""
        return SetComposition([b for b in self.blocks if b], self.ground)

    def restrict(self, subset: Iterable[str]) -> "SetDecomposition":
        sub = frozenset(subset)
        return SetDecomposition([b & sub for b in self.blocks], sub)

    def coloring(self) -> dict[str, int]:
        """The function ground -> {1..len} with block i = preimage of i+1."""
        return {v: i + 1 for v, i in self._index.items()}

    def __eq__(self, other):
        if not isinstance(other, SetDecomposition):
            return NotImplemented
        return self.blocks == other.blocks and self.ground == other.ground

    def __hash__(self):
        return hash((self.blocks, self.ground))

    def __repr__(self):
        inner = ", ".join("{" + ",".join(sorted(b)) + "}" for b in self.blocks)
        return f"({inner})"


class SetComposition(SetDecomposition):
    """A decomposition without empty blocks."""

    __slots__ = ()

    def __init__(self, blocks, ground=None):
        super().__init__(blocks, ground)
        if any(not b for b in self.blocks):
            raise ValueError("a composition cannot contain an empty block")


def from_coloring(coloring: Mapping[str, int], n: int) -> SetDecomposition:
    """Inverse of SetDecomposition.coloring for colors in {1..n}."""
    blocks: list[set] = [set() for _ in range(n)]
    for v, c in coloring.items():
        if not 1 <= c <= n:
            raise ValueError(f"color {c} of {v!r} outside 1..{n}")
        blocks[c - 1].add(v)
    return SetDecomposition(blocks, frozenset(coloring))


def _nonempty_subsets(labels: Sequence[str]) -> Iterator[frozenset]:
    for mask in range(1, 1 << len(labels)):
        yield frozenset(labels[i] for i in range(len(labels)) if mask >> i & 1)


def enumerate_set_compositions(ground: Iterable[str]) -> Iterator[SetComposition]:
    """All ordered set partitions of the ground set, each exactly once.

    The empty ground set yields the single empty composition.  The count
    for an m-set is the m-th ordered Bell number.
    """
    ground = frozenset(ground)

    def rec(remaining: tuple) -> Iterator[tuple]:
        if not remaining:
            yield ()
            return
        for first in _nonempty_subsets(remaining):
            rest = tuple(v for v in remaining if v not in first)
            for tail in rec(rest):
                yield (first,) + tail

    for blocks in rec(tuple(sorted(ground))):
        yield SetComposition(blocks, ground)


def enumerate_decompositions(ground: Iterable[str], n: int) -> Iterator[SetDecomposition]:
    """All n^|ground| decompositions of length n (functions to {1..n})."""
    if n < 0:
        raise ValueError("length must be >= 0")
    labels = sorted(frozenset(ground))
    for colors in product(range(n), repeat=len(labels)):
        blocks: list[list] = [[] for _ in range(n)]
        for v, c in zip(labels, colors):
            blocks[c].append(v)
        yield SetDecomposition(blocks, frozenset(labels))


def refinements(comp: SetComposition) -> Iterator[SetComposition]:
    """All compositions splitting each block into consecutive sub-blocks."""
    per_block = [
        [c.blocks for c in enumerate_set_compositions(block)] for block in comp.blocks
    ]
    for choice in product(*per_block):
        blocks: tuple = ()
        for piece in choice:
            blocks += piece
        yield SetComposition(blocks, comp.ground)


def shuffles(p: SetComposition, q: SetComposition) -> Iterator[SetComposition]:
    """Compositions of the disjoint union restricting to p and to q.

    A shuffle interleaves the blocks of p and q, merging a block of each
    at a position where both are consumed; dropping empty intersections
    recovers p on one ground set and q on the other.
    """
    if p.ground & q.ground:
        raise ValueError("shuffled compositions must have disjoint grounds")
    ground = p.ground | q.ground

    def rec(i: int, j: int):
        if i == len(p.blocks) and j == len(q.blocks):
            yield ()
            return
        if i < len(p.blocks):
            for tail in rec(i + 1, j):
                yield (p.blocks[i],) + tail
        if j < len(q.blocks):
            for tail in rec(i, j + 1):
                yield (q.blocks[j],) + tail
        if i < len(p.blocks) and j < len(q.blocks):
            for tail in rec(i + 1, j + 1):
                yield (p.blocks[i] | q.blocks[j],) + tail

    seen = set()
    for blocks in rec(0, 0):
        if blocks not in seen:
            seen.add(blocks)
            yield SetComposition(blocks, ground)


def is_acyclic_arcs(vertices: Iterable[str], arcs: Iterable[tuple]) -> bool:
    """Whether the arc set is a DAG on the given vertices (Kahn's algorithm)."""
    vertices = set(vertices)
    succ: dict[str, set] = {v: set() for v in vertices}
    indeg = {v: 0 for v in vertices}
    for u, w in arcs:
        if u not in vertices or w not in vertices:
            raise ValueError(f"arc ({u!r}, {w!r}) leaves the vertex set")
        if w not in succ[u]:
            succ[u].add(w)
            indeg[w] += 1
    queue = [v for v in vertices if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == len(vertices)


def signed_constrained_sum(
    ground: Iterable[str], arcs: Iterable[tuple], comp: SetComposition
) -> int:
    """sum of (-1)^length over refinements Q of comp with Q(v) < Q(w) per arc.

    The arc set must be acyclic.  The closed value is 0 when some arc
    already violates the block order of comp, and (-1)^|ground| otherwise;
    this function computes the sum by honest enumeration.
    """
    ground = frozenset(ground)
    arcs = tuple(arcs)
    if comp.ground != ground:
        raise ValueError("composition is not over the given ground set")
    if any(u == w for u, w in arcs):
        raise ValueError("arc set has a self-loop")
    if not is_acyclic_arcs(ground, arcs):
        raise ValueError("arc set has a directed cycle")
    total = 0
    for q in refinements(comp):
        if all(q.index_of(u) < q.index_of(w) for u, w in arcs):
            total += (-1) ** len(q)
    return total
