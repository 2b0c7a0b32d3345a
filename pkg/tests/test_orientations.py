import pytest
from conftest import random_hypergraphs

from hyperchi import (
    Hypergraph,
    acyclic_orientations,
    all_orientations,
    colorings,
    count_compatible_pairs,
    is_acyclic,
    is_compatible,
    is_strictly_compatible,
    orientation_count,
)

EXAMPLE_H = Hypergraph("1234", [{"1", "2", "3"}, {"2", "3", "4"}])


def test_is_acyclic_examples():
    single = Hypergraph("ab", [{"a", "b"}])
    assert is_acyclic(single, ("a",))
    # the two cyclic orientations of the worked example
    assert not is_acyclic(EXAMPLE_H, ("2", "3"))
    assert not is_acyclic(EXAMPLE_H, ("3", "2"))
    # repeated edges aiming at each other form a 2-cycle
    doubled = Hypergraph("ab", [{"a", "b"}, {"a", "b"}])
    assert not is_acyclic(doubled, ("a", "b"))
    assert is_acyclic(doubled, ("a", "a"))


def test_validate_orientation():
    with pytest.raises(ValueError):
        is_acyclic(EXAMPLE_H, ("1",))
    with pytest.raises(ValueError):
        is_acyclic(EXAMPLE_H, ("4", "2"))


def test_acyclic_orientation_counts():
    assert sum(1 for _ in acyclic_orientations(EXAMPLE_H)) == 7
    assert orientation_count(EXAMPLE_H) == 9
    edgeless = Hypergraph("abc")
    assert list(acyclic_orientations(edgeless)) == [()]
    triangle = Hypergraph("abc", [{"a", "b"}, {"b", "c"}, {"a", "c"}])
    assert sum(1 for _ in acyclic_orientations(triangle)) == 6
    assert orientation_count(triangle) == 8


def test_pruned_enumeration_matches_filtering():
    for h in list(random_hypergraphs(20, 4, 4, seed=17)) + [EXAMPLE_H]:
        filtered = [f for f in all_orientations(h) if is_acyclic(h, f)]
        assert list(acyclic_orientations(h)) == filtered


def test_compatibility_examples():
    single = Hypergraph("ab", [{"a", "b"}])
    assert not is_compatible(single, ("a",), {"a": 1, "b": 2})
    assert is_compatible(single, ("b",), {"a": 1, "b": 2})
    assert is_strictly_compatible(single, ("b",), {"a": 1, "b": 2})
    # constant colorings are compatible with every acyclic orientation
    for h in random_hypergraphs(10, 3, 3, seed=19):
        flat = {v: 1 for v in h.vertices}
        for f in acyclic_orientations(h):
            assert is_compatible(h, f, flat)
            if any(len(e) >= 2 for e in h.edges):
                assert not is_strictly_compatible(h, f, flat)


def test_two_color_instance_counts():
    # with colors 1 on {1,4} and 2 on {2,3} the worked example has four
    # compatible orientations of which two are acyclic, and no strictly
    # compatible one (each edge has two maximal vertices)
    coloring = {"1": 1, "2": 2, "3": 2, "4": 1}
    compat = [f for f in all_orientations(EXAMPLE_H) if is_compatible(EXAMPLE_H, f, coloring)]
    assert len(compat) == 4
    assert sum(1 for f in compat if is_acyclic(EXAMPLE_H, f)) == 2
    assert not any(is_strictly_compatible(EXAMPLE_H, f, coloring) for f in compat)


def test_count_compatible_pairs_examples():
    single = Hypergraph("ab", [{"a", "b"}])
    assert count_compatible_pairs(single, 2, strict=False) == 6
    assert count_compatible_pairs(single, 2, strict=True) == 2
    assert count_compatible_pairs(EXAMPLE_H, 1, strict=False) == 7


def test_strict_implies_compatible():
    for h in random_hypergraphs(8, 4, 3, seed=23):
        for n in range(3):
            assert count_compatible_pairs(h, n, strict=True) <= count_compatible_pairs(
                h, n, strict=False
            )
        for f in acyclic_orientations(h):
            for coloring in colorings(h.vertices, 2):
                if is_strictly_compatible(h, f, coloring):
                    assert is_compatible(h, f, coloring)


def test_uniquely_maximal_coloring_has_one_strict_acyclic_orientation():
    for h in list(random_hypergraphs(12, 4, 3, seed=29)) + [EXAMPLE_H]:
        acyclic = list(acyclic_orientations(h))
        for n in range(4):
            for coloring in colorings(h.vertices, n):
                unique_max = all(
                    sum(1 for v in e if coloring[v] == max(coloring[w] for w in e)) == 1
                    for e in h.edges
                )
                strict = [f for f in acyclic if is_strictly_compatible(h, f, coloring)]
                if unique_max:
                    induced = tuple(
                        max(sorted(e), key=lambda v: coloring[v]) for e in h.edges
                    )
                    assert is_acyclic(h, induced)
                    assert strict == [induced]
                else:
                    assert strict == []


def test_counts_invariant_under_relabel():
    sigma = {"v1": "d", "v2": "c", "v3": "b", "v4": "a"}
    for h in random_hypergraphs(10, 4, 3, seed=31):
        relabeled = h.relabel(sigma)
        assert orientation_count(h) == orientation_count(relabeled)
        assert sum(1 for _ in acyclic_orientations(h)) == sum(
            1 for _ in acyclic_orientations(relabeled)
        )
