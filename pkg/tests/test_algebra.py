from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import bell
from partalg.algebra import (
    AlgebraError,
    Element,
    commutes_with_generators,
    diagram_in_level,
    e_diagram,
    element_from_json,
    gen_e,
    gen_s,
    generator_names,
    generators,
    in_subalgebra,
    s_diagram,
    word,
)
from partalg.coeff import DeltaPoly, ModeError, Ring, SYMBOLIC
from partalg.diagram import all_diagrams, canonicalize, compose, identity

d = DeltaPoly.delta()

small_rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))
small_polys = st.lists(small_rationals, max_size=3).map(DeltaPoly)


@st.composite
def elements(draw, k=None, ring=SYMBOLIC):
    if k is None:
        k = draw(st.integers(1, 3))
    basis = all_diagrams(k)
    picks = draw(st.lists(st.sampled_from(basis), max_size=6))
    coeff = small_polys if ring.symbolic else small_rationals
    return Element(k, ring, {p: draw(coeff) for p in picks})


@st.composite
def element_triples(draw):
    k = draw(st.integers(1, 3))
    return draw(elements(k)), draw(elements(k)), draw(elements(k))


def naive_product(a: Element, b: Element) -> dict:
    """Term-by-term product with plain scalar arithmetic."""
    out: dict = {}
    dv = a.ring.delta_value()
    for x, cx in a.terms.items():
        for y, cy in b.terms.items():
            res = compose(x, y)
            c = cx * cy * dv ** res.removed
            out[res.product] = out.get(res.product, 0 * c) + c
    return {p: c for p, c in out.items() if c != 0}


def test_add_zero_and_negation():
    a = gen_e(2, 2) * 3 + gen_s(1, 2)
    assert a + Element.zero(2) == a
    assert a + (-1) * a == 0


def test_delta_coefficient():
    e2 = gen_e(2, 2)
    x = e2 * d + e2
    assert x.coefficient(e_diagram(2, 2)) == DeltaPoly((1, 1))
    assert len(x) == 1


def test_e1_squared_is_delta_e1():
    e1 = gen_e(1, 1)
    assert e1 * e1 == e1 * d


def test_generator_examples():
    assert {frozenset(b) for b in e_diagram(1, 1).blocks} == {frozenset({1}), frozenset({-1})}
    assert {frozenset(b) for b in e_diagram(2, 2).blocks} == {frozenset({1, 2, -1, -2})}
    assert {frozenset(b) for b in s_diagram(1, 2).blocks} == {frozenset({1, -2}), frozenset({2, -1})}


def test_generator_ranges():
    with pytest.raises(AlgebraError):
        gen_s(2, 2)
    with pytest.raises(AlgebraError):
        gen_e(4, 2)
    assert generator_names(4) == [("e", 1), ("e", 2), ("e", 3), ("s", 1)]
    assert generator_names(5) == [("e", 1), ("e", 2), ("e", 3), ("e", 4), ("s", 1)]


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_generators_are_star_invariant(k):
    for _, _, g in generators(2 * k, k):
        assert g.star() == g


@pytest.mark.parametrize("k", [1, 2, 3])
def test_identity_in_every_level(k):
    one = Element.one(k)
    assert all(in_subalgebra(one, r) for r in range(2 * k + 1))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_membership_along_ladder(k):
    # e_{2k-2} joins strands k-1 and k, which the odd level above it must not see
    x = gen_e(2 * k - 2, k)
    assert not in_subalgebra(x, 2 * k - 2)
    assert in_subalgebra(x, 2 * k - 1)
    top = gen_e(2 * k - 1, k)
    assert not in_subalgebra(top, 2 * k - 1)
    assert in_subalgebra(top, 2 * k)
    assert not in_subalgebra(gen_s(k - 1, k), 2 * k - 1)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_generators_span_each_level(k):
    """Right multiplication by level-r generators reaches exactly the level-r diagrams."""
    for r in range(2 * k + 1):
        gens = [g for _, _, g in generators(r, k)]
        gd = [next(iter(g.terms)) for g in gens]
        seen = {identity(k)}
        todo = [identity(k)]
        while todo:
            x = todo.pop()
            for g in gd:
                y = compose(x, g).product
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        level = {p for p in all_diagrams(k) if diagram_in_level(p, r)}
        assert seen == level
        assert len(level) == bell(r)


def test_non_commuting_generators():
    e1, e2 = gen_e(1, 2), gen_e(2, 2)
    assert e1 * e2 != e2 * e1
    assert not commutes_with_generators(e1, 4)


def test_commutes_requires_membership():
    with pytest.raises(AlgebraError):
        commutes_with_generators(gen_e(3, 2), 3)


def test_mode_mismatch():
    with pytest.raises((ModeError, AlgebraError)):
        gen_e(1, 2) + gen_e(1, 2, Ring(3))
    with pytest.raises((ModeError, AlgebraError)):
        gen_e(1, 2) * gen_e(1, 3)


def test_specialize_element():
    x = gen_e(1, 2) * (d * d - 1)
    assert x.specialize(3) == gen_e(1, 2, Ring(3)) * 8


def test_word():
    assert word([("e", 1), ("e", 1)], 2) == gen_e(1, 2) * d
    assert word([("s", 1), ("s", 1)], 2) == Element.one(2)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_basic_relations(k):
    one = Element.one(k)
    for i in range(1, k):
        s = gen_s(i, k)
        assert s * s == one
        e = gen_e(2 * i, k)
        assert e * e == e
    for i in range(1, k + 1):
        e = gen_e(2 * i - 1, k)
        assert e * e == e * d


@settings(max_examples=60, deadline=None)
@given(element_triples())
def test_associative_and_distributive(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=60, deadline=None)
@given(element_triples())
def test_star_is_anti_automorphism(triple):
    a, b, _ = triple
    assert (a * b).star() == b.star() * a.star()
    assert a.star().star() == a


@settings(max_examples=80, deadline=None)
@given(element_triples())
def test_poly_kernel_matches_naive(triple):
    a, b, _ = triple
    assert (a * b).terms == naive_product(a, b)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 3).flatmap(lambda k: st.tuples(elements(k), elements(k))),
       st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4)))
def test_specialization_commutes_with_product(pair, x):
    a, b = pair
    sa, sb = a.specialize(x), b.specialize(x)
    assert (a * b).specialize(x) == sa * sb
    assert (sa * sb).terms == naive_product(sa, sb)


@given(elements())
def test_json_round_trip(a):
    assert element_from_json(a.to_json()) == a


@given(elements(ring=Ring(Fraction(3, 2))))
def test_json_round_trip_rational(a):
    assert element_from_json(a.to_json()) == a


def test_json_shape():
    x = Element.from_diagram(canonicalize(1, [[1], [-1]]), SYMBOLIC, d)
    assert x.to_json() == {"k": 1, "mode": "poly",
                           "terms": [{"coeff": ["0", "1"], "diagram": [[1], [-1]]}]}
