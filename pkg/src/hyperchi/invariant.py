"""The coloring invariant of a hypergraph, computed three independent ways.

For a nonnegative number of colors n the invariant counts, equivalently:

  * length-n ordered splits of the vertex set whose pieces are all
    discrete (the defining sum, ``chi_eval_definition``);
  * colorings with {1..n} in which every edge has a unique vertex of
    maximal color (``chi_eval_colorings``).

``chi_polynomial`` produces the exact polynomial through the acyclic
orientation expansion: every acyclic orientation contributes, for every
composition of its head set respecting the head-dominance constraints, a
strict-chain power sum whose exponents are the sizes of the layers of
non-head vertices swept up block by block.  Evaluating the polynomial at
-n and multiplying by (-1)^|vertices| counts compatible pairs of acyclic
orientations and colorings, which is the reciprocity law the test suite
pins down.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Union

from .combinatorics import f_polynomial
from .compositions import (
    SetComposition,
    enumerate_decompositions,
    enumerate_set_compositions,
    is_acyclic_arcs,
)
from .hypergraph import FormalSum, Hypergraph
from .orientations import acyclic_orientations, colorings
from .polynomial import Polynomial


class ConstraintSystem:
    """Head set of an orientation plus its dominance constraints.

    A constraint (v, w) records that vertex v lies in an edge headed by w
    (and is itself a head), so in any counted composition v's block must
    come before w's.  For an acyclic orientation the constraint digraph
    is acyclic.
    """

    __slots__ = ("heads", "constraints")

    def __init__(self, heads, constraints):
        self.heads = frozenset(heads)
        constraints = frozenset((u, w) for u, w in constraints)
        for u, w in constraints:
            if u not in self.heads or w not in self.heads:
                raise ValueError(f"constraint ({u!r}, {w!r}) leaves the head set")
        self.constraints = constraints

    @classmethod
    def from_orientation(cls, h: Hypergraph, heads) -> "ConstraintSystem":
        head_set = frozenset(heads)
        constraints = set()
        for head, edge in zip(heads, h.edges):
            for v in edge:
                if v != head and v in head_set:
                    constraints.add((v, head))
        return cls(head_set, constraints)

    def is_acyclic(self) -> bool:
        return is_acyclic_arcs(self.heads, self.constraints)

    def __repr__(self):
        cs = sorted(self.constraints)
        return f"ConstraintSystem(heads={sorted(self.heads)}, constraints={cs})"


def constrained_compositions(
    system: ConstraintSystem, strict: bool = True
) -> Iterator[SetComposition]:
    """Compositions of the head set respecting every constraint.

    strict: v's block strictly before w's; otherwise ties are allowed.
    """
    if not system.is_acyclic():
        raise ValueError("constraint digraph has a directed cycle")
    for comp in enumerate_set_compositions(system.heads):
        if strict:
            ok = all(comp.index_of(u) < comp.index_of(w) for u, w in system.constraints)
        else:
            ok = all(comp.index_of(u) <= comp.index_of(w) for u, w in system.constraints)
        if ok:
            yield comp


@lru_cache(maxsize=None)
def chi_eval_definition(h: Hypergraph, n: int) -> int:
    """The defining sum: count length-n splits with all pieces discrete."""
    if n < 0:
        raise ValueError("n must be >= 0")
    count = 0
    for decomp in enumerate_decompositions(h.vertices, n):
        rest = h
        for block in decomp:
            piece = rest.restrict(block)
            if not piece.is_discrete():
                break
            rest = rest.contract(block)
        else:
            count += 1
    return count


def chi_eval_colorings(h: Hypergraph, n: int) -> int:
    """Count colorings in which every edge has a unique maximal vertex."""
    if n < 0:
        raise ValueError("n must be >= 0")
    count = 0
    for coloring in colorings(h.vertices, n):
        for e in h.edges:
            top = max(coloring[v] for v in e)
            if sum(1 for v in e if coloring[v] == top) != 1:
                break
        else:
            count += 1
    return count


@lru_cache(maxsize=None)
def chi_polynomial(h: Hypergraph) -> Polynomial:
    """Exact invariant polynomial via the acyclic-orientation expansion.

    Isolated vertices contribute a factor n each.  For each acyclic
    orientation and each strictly constrained composition (P_1,...,P_l)
    of its heads, layer i collects the vertices of edges headed inside
    P_i that are neither heads nor already collected; the term is the
    strict-chain power sum with the layer sizes as exponents (zero sizes
    are kept: they still occupy a strictly increasing slot).
    """
    total = Polynomial.ZERO
    for heads in acyclic_orientations(h):
        head_set = frozenset(heads)
        system = ConstraintSystem.from_orientation(h, heads)
        for comp in constrained_compositions(system, strict=True):
            used = set(head_set)
            exponents = []
            for block in comp:
                layer = set()
                for head, edge in zip(heads, h.edges):
                    if head in block:
                        layer |= edge
                layer -= used
                used |= layer
                exponents.append(len(layer))
            total = total + f_polynomial(exponents)
    return total.shift(len(h.isolated_vertices()))


def chi_eval_negative(h: Hypergraph, n: int) -> int:
    """(-1)^|vertices| times the polynomial at -n.

    Equals the number of compatible pairs of acyclic orientations and
    colorings with {1..n}.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    value = (-1) ** len(h.vertices) * chi_polynomial(h)(-n)
    return _exact_int(value)


def chi_on_formal_sum(
    fsum: FormalSum, at: Optional[int] = None
) -> Union[Polynomial, int]:
    """Linear extension of the invariant over a formal sum.

    With ``at=None`` returns the combined polynomial.  For an integer
    evaluation point the value is exact; nonnegative points are computed
    through the defining count of each term, negative ones through the
    term polynomials.
    """
    if at is None:
        acc = Polynomial.ZERO
        for c, term in fsum:
            acc = acc + c * chi_polynomial(term)
        return acc
    if at >= 0:
        return sum(c * chi_eval_definition(term, at) for c, term in fsum)
    value = sum((c * chi_polynomial(term)(at) for c, term in fsum), Fraction(0))
    return _exact_int(value)


def _exact_int(value: Fraction) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {value}")
    return int(value)
