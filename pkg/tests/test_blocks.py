from fractions import Fraction

import pytest

from partalg.blocks import (
    block_crosscheck,
    chain_classes,
    delta_successor,
    genfun,
    genfun_classes,
    genfun_equal,
    is_delta_chain,
    is_delta_pair,
    label_set,
    reduced_form_case,
    reduced_form_check,
)
from partalg.bounds import BoundError
from partalg.combinatorics import EMPTY, GraphVertex, Shape, partitions_of

S = Shape


def V(k, parts, l):
    return GraphVertex(2 * k, l, Shape(parts))


def pair_components(k, delta):
    """Join every pair of labels related by a delta-pair, by brute force."""
    labels = label_set(k, delta)
    shapes = labels.shapes()
    parent = {s: s for s in shapes}

    def find(s):
        while parent[s] != s:
            s = parent[s]
        return s

    for a in shapes:
        for b in shapes:
            if is_delta_pair(a, b, delta):
                parent[find(a)] = find(b)
    groups = {}
    for s in shapes:
        groups.setdefault(find(s), set()).add(labels.vertex_of(s))
    return {frozenset(g) for g in groups.values()}


def test_delta_pair_examples():
    assert is_delta_pair(EMPTY, S([2]), 1)
    assert is_delta_pair(S([2]), S([2, 1]), 1)
    assert not is_delta_pair(S([2]), S([3]), 1)
    assert not is_delta_pair(EMPTY, S([1]), Fraction(1, 2))


def test_successor_examples():
    assert delta_successor(EMPTY, 1, 3) == S([2])
    assert delta_successor(S([2]), 1, 3) == S([2, 1])
    assert delta_successor(S([2, 1]), 1, 3) is None


def test_chain_example():
    classes = chain_classes(3, 1).classes
    big = [c for c in classes if len(c) > 1]
    assert big == [(V(3, [], 3), V(3, [2], 1), V(3, [2, 1], 0))]
    assert sum(len(c) for c in classes) == len(label_set(3, 1).members)


def test_half_integer_singletons():
    assert all(len(c) == 1 for c in chain_classes(2, Fraction(1, 2)).classes)
    assert all(len(c) == 1 for c in genfun_classes(2, Fraction(1, 2)).classes)


def test_delta_zero_excludes_empty():
    labels = label_set(2, 0)
    assert V(2, [], 2) not in labels.members
    assert len(labels.members) == 3
    covered = [v for c in chain_classes(2, 0).classes for v in c]
    assert sorted(covered) == sorted(labels.members)


@pytest.mark.parametrize("parts,l", [([], 3), ([2], 1), ([2, 1], 0)])
def test_balanced_example(parts, l):
    g = genfun(V(3, parts, l), 1)
    assert g.is_one()
    assert g.num == () and g.den == ()


def test_balanced_example_equal():
    gs = [genfun(V(3, p, l), 1) for p, l in [([], 3), ([2], 1), ([2, 1], 0)]]
    assert all(genfun_equal(a, b) for a in gs for b in gs)


def test_generic_labels_distinct():
    gs = [genfun(v, 5) for v in label_set(2, 5).members]
    assert len(gs) == 4
    for i, a in enumerate(gs):
        for j, b in enumerate(gs):
            assert genfun_equal(a, b) == (i == j)


def test_genfun_delta_mismatch():
    with pytest.raises(ValueError):
        genfun_equal(genfun(V(2, [1], 1), 1), genfun(V(2, [1], 1), 2))


def test_trivial_factors_kept():
    # at d = 2 the numerator parameter 1 encodes the constant factor 1
    g = genfun(V(2, [1, 1], 0), 2)
    assert g.num == (0, 1) and g.den == (-1, 0)
    g = genfun(V(2, [2], 0), 2)
    assert g.num == (0,) and g.den == (0,)


def test_reduced_form_examples():
    v = V(3, [2, 1], 0)
    assert reduced_form_case(v, 10) == 1
    g = genfun(v, 10)
    assert list(g.num) == [0, 1, 2] and sorted(g.den) == [-1, 0, 1]
    assert reduced_form_check(v, 10)
    assert reduced_form_case(v, -1) == 2
    g = genfun(v, -1)
    assert list(g.num) == [1, 2] and list(g.den) == [0, 1]
    assert reduced_form_check(v, -1)
    assert reduced_form_check(V(3, [], 3), 2)


@pytest.mark.parametrize("k", range(1, 6))
def test_reduced_form_all(k):
    for v in label_set(k, 7).members:
        for d in range(-k - 3, 2 * k + 3):
            if reduced_form_case(v, d) is not None:
                assert reduced_form_check(v, d), (v, d)


def test_crosscheck_examples():
    assert block_crosscheck(3, 1)
    assert block_crosscheck(4, Fraction(3, 2))


@pytest.mark.parametrize("k", range(1, 6))
@pytest.mark.parametrize("delta", range(-4, 11))
def test_chains_match_pair_closure(k, delta):
    assert chain_classes(k, delta).as_sets() == pair_components(k, delta)


@pytest.mark.parametrize("k", range(1, 6))
@pytest.mark.parametrize("delta", range(-4, 11))
def test_classes_are_chains(k, delta):
    for cls in chain_classes(k, delta).classes:
        shapes = [v.shape for v in cls]
        assert is_delta_chain(shapes, delta)
        for a, b in zip(shapes, shapes[1:]):
            assert b.contains(a)


def test_successor_unique():
    for k in range(1, 7):
        for d in range(-6, 11):
            for n in range(k + 1):
                for tau in partitions_of(n):
                    lam = delta_successor(tau, d, k)
                    brute = [x for m in range(n + 1, k + 1) for x in partitions_of(m) if is_delta_pair(tau, x, d)]
                    assert brute == ([] if lam is None else [lam])


def test_block_bound():
    with pytest.raises(BoundError):
        chain_classes(7, 1)


def test_partition_json():
    js = chain_classes(3, 1).to_json()
    assert [{"shape": [], "l": 3}, {"shape": [2], "l": 1}, {"shape": [2, 1], "l": 0}] in js
