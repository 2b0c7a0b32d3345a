"""Hypergraphs with multiset edges, their merge/split operations, and the
alternating-sum antipode.

A hypergraph is a finite set of string-labeled vertices together with an
indexed sequence of nonempty vertex subsets (edges).  Edge identity is
positional, so repeated edges are distinct carriers of orientations, but
equality and hashing compare the edge multiset: two hypergraphs are equal
iff they have the same vertex set and the same edges with multiplicity.
Two hypergraphs over different vertex sets are never equal, even with
identical edge lists.

Splitting along an ordered decomposition (S_1, ..., S_k) of the vertex
set produces one piece per block: the piece on S_i keeps the traces on
S_i of the edges that survived the earlier blocks and are not contained
in them.  Merging is disjoint union.  The antipode is the alternating
sum, over all compositions of the vertex set, of merge-after-split.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .compositions import SetDecomposition, enumerate_set_compositions


class Hypergraph:
    __slots__ = ("vertices", "edges", "_canon", "_hash")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Iterable[str]] = ()):
        vertices = frozenset(vertices)
        for v in vertices:
            if not isinstance(v, str):
                raise ValueError(f"vertex labels must be strings, got {v!r}")
        edge_list = []
        for e in edges:
            e = frozenset(e)
            if not e:
                raise ValueError("edges must be nonempty")
            if not e <= vertices:
                bad = sorted(e - vertices)
                raise ValueError(f"edge uses unknown vertices: {bad}")
            edge_list.append(e)
        self.vertices = vertices
        self.edges = tuple(edge_list)
        self._canon = tuple(sorted(self.edges, key=_edge_key))
        self._hash = hash((self.vertices, self._canon))

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.vertices == other.vertices and self._canon == other._canon

    def __hash__(self):
        return self._hash

    def __repr__(self):
        es = ", ".join("{" + ",".join(sorted(e)) + "}" for e in self.edges)
        vs = ",".join(sorted(self.vertices))
        return f"Hypergraph({{{vs}}}; [{es}])"

    def restrict(self, subset: Iterable[str]) -> "Hypergraph":
        """Keep the edges entirely contained in the subset."""
        sub = frozenset(subset)
        if not sub <= self.vertices:
            raise ValueError("restriction set is not a subset of the vertices")
        return Hypergraph(sub, [e for e in self.edges if e <= sub])

    def contract(self, subset: Iterable[str]) -> "Hypergraph":
        """Drop the subset; edges not inside it survive as traces.

        Each surviving edge meets the complement, so traces are nonempty
        and multiplicity is preserved.
        """
        sub = frozenset(subset)
        if not sub <= self.vertices:
            raise ValueError("contraction set is not a subset of the vertices")
        rest = self.vertices - sub
        return Hypergraph(rest, [e & rest for e in self.edges if not e <= sub])

    def relabel(self, mapping: Mapping[str, str]) -> "Hypergraph":
        images = set()
        for v in self.vertices:
            if v not in mapping:
                raise ValueError(f"relabeling is not defined on {v!r}")
            w = mapping[v]
            if w in images:
                raise ValueError("relabeling is not injective")
            images.add(w)
        return Hypergraph(
            (mapping[v] for v in self.vertices),
            ([mapping[v] for v in e] for e in self.edges),
        )

    def is_discrete(self) -> bool:
        """True iff every edge has at most one vertex (the basic character)."""
        return all(len(e) <= 1 for e in self.edges)

    def isolated_vertices(self) -> frozenset:
        covered = frozenset().union(*self.edges) if self.edges else frozenset()
        return self.vertices - covered


def _edge_key(e: frozenset):
    return (len(e), tuple(sorted(e)))


def disjoint_union(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
    """Merge two hypergraphs on disjoint vertex sets."""
    if h1.vertices & h2.vertices:
        shared = sorted(h1.vertices & h2.vertices)
        raise ValueError(f"vertex sets overlap: {shared}")
    return Hypergraph(h1.vertices | h2.vertices, h1.edges + h2.edges)


def iterated_coproduct(h: Hypergraph, blocks) -> tuple:
    """Split h along an ordered decomposition of its vertex set.

    Folds left to right: the piece on block i is the restriction of what
    remains after contracting the earlier blocks.  Coassociativity makes
    the fold order irrelevant.
    """
    if not isinstance(blocks, SetDecomposition):
        blocks = SetDecomposition(blocks, h.vertices)
    if blocks.ground != h.vertices:
        raise ValueError("decomposition does not cover the vertex set")
    pieces = []
    rest = h
    for block in blocks:
        pieces.append(rest.restrict(block))
        rest = rest.contract(block)
    return tuple(pieces)


class FormalSum:
    """Integer combination of hypergraphs over one vertex set.

    Terms are kept in canonical form; zero coefficients are dropped.
    """

    __slots__ = ("terms", "ground")

    def __init__(self, terms: Mapping[Hypergraph, int] | None = None, ground=None):
        acc: dict[Hypergraph, int] = {}
        grounds = set()
        for h, c in (terms or {}).items():
            grounds.add(h.vertices)
            if c:
                acc[h] = acc.get(h, 0) + c
        if len(grounds) > 1:
            raise ValueError("terms live over different vertex sets")
        if ground is None and grounds:
            ground = next(iter(grounds))
        self.ground = frozenset(ground) if ground is not None else frozenset()
        self.terms = {h: c for h, c in acc.items() if c}

    @classmethod
    def of(cls, h: Hypergraph, coefficient: int = 1) -> "FormalSum":
        return cls({h: coefficient}, h.vertices)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        if self.ground != other.ground and self.terms and other.terms:
            raise ValueError("cannot add sums over different vertex sets")
        merged = dict(self.terms)
        for h, c in other.terms.items():
            merged[h] = merged.get(h, 0) + c
        return FormalSum(merged, self.ground or other.ground)

    def __rmul__(self, scalar: int) -> "FormalSum":
        return FormalSum({h: scalar * c for h, c in self.terms.items()}, self.ground)

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple]:
        """Yield (coefficient, hypergraph) pairs in canonical order."""
        def key(h: Hypergraph):
            return tuple(_edge_key(e) for e in h._canon)

        for h in sorted(self.terms, key=key):
            yield self.terms[h], h

    def coefficient(self, h: Hypergraph) -> int:
        return self.terms.get(h, 0)

    def __repr__(self):
        if not self.terms:
            return "FormalSum(0)"
        bits = [f"{c:+d}*{h!r}" for c, h in self]
        return "FormalSum(" + " ".join(bits) + ")"


def antipode(h: Hypergraph) -> FormalSum:
    """Alternating sum over all compositions of merge-after-split.

    sum over compositions (S_1,...,S_k) of (-1)^k times the disjoint
    union of the split pieces.  The empty hypergraph is its own antipode.
    Work grows like the ordered Bell number of the vertex count.
    """
    if not h.vertices:
        return FormalSum.of(h)
    acc: dict[Hypergraph, int] = {}
    for comp in enumerate_set_compositions(h.vertices):
        edges: tuple = ()
        rest = h
        for block in comp:
            edges += rest.restrict(block).edges
            rest = rest.contract(block)
        term = Hypergraph(h.vertices, edges)
        sign = (-1) ** len(comp)
        acc[term] = acc.get(term, 0) + sign
    return FormalSum(acc, h.vertices)


def to_json_dict(h: Hypergraph) -> dict:
    """Canonical JSON form: sorted vertices, edges sorted by (size, labels)."""
    return {
        "vertices": sorted(h.vertices),
        "edges": [sorted(e) for e in h._canon],
    }


def from_json_dict(data) -> Hypergraph:
    if not isinstance(data, dict):
        raise ValueError("hypergraph JSON must be an object")
    for key in ("vertices", "edges"):
        if key not in data:
            raise ValueError(f"missing {key!r}")
    vertices = data["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ValueError("'vertices' must be an array of strings")
    if len(set(vertices)) != len(vertices):
        dup = sorted(v for v in set(vertices) if vertices.count(v) > 1)
        raise ValueError(f"duplicate vertex labels: {dup}")
    vset = frozenset(vertices)
    edges = data["edges"]
    if not isinstance(edges, list):
        raise ValueError("'edges' must be an array")
    parsed = []
    for i, e in enumerate(edges):
        if not isinstance(e, list) or not all(isinstance(v, str) for v in e):
            raise ValueError(f"edges[{i}]: must be an array of strings")
        if not e:
            raise ValueError(f"edges[{i}]: empty edge")
        if len(set(e)) != len(e):
            raise ValueError(f"edges[{i}]: duplicate vertex labels")
        unknown = sorted(set(e) - vset)
        if unknown:
            raise ValueError(f"edges[{i}]: unknown vertices {unknown}")
        parsed.append(e)
    return Hypergraph(vset, parsed)
