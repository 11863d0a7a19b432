"""Simplicial complexes: construction, duality, nonfaces, links."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperbetti import (
    Hypergraph,
    ParameterError,
    SimplicialComplex,
    alexander_dual,
    clique_complex,
    independence_complex,
    link,
    make_complete,
    minimal_nonfaces,
    restrict,
)
from hyperbetti.bitsets import mask_of
from hyperbetti.complexes import components, minimal_transversals, pad_facets


def test_facets_must_form_antichain():
    with pytest.raises(ParameterError):
        SimplicialComplex(3, frozenset({0b011, 0b111}))


def test_void_versus_empty_complex():
    """The void complex has no faces at all; {} still has the empty face."""
    void = SimplicialComplex(3, frozenset())
    empty = SimplicialComplex(3, frozenset({0}))
    assert void.is_void and not empty.is_void
    assert empty.has_face(0) and not void.has_face(0)
    assert SimplicialComplex.from_json(void.to_json()) == void
    assert SimplicialComplex.from_json(empty.to_json()) == empty
    revived = SimplicialComplex.from_json_obj({"n": 3, "facets": [], "void": False})
    assert revived == empty


def test_from_faces_keeps_maximal_only():
    c = SimplicialComplex.from_faces(4, [[0, 1], [1], [1, 2, 3], [2, 3]])
    assert c.facets == frozenset({0b0011, 0b1110})


def test_independence_complex_of_a_path():
    g = Hypergraph(3, frozenset({0b011, 0b110}))
    c = independence_complex(g)
    assert c.facets == frozenset({0b101, 0b010})


def test_clique_complex_fills_low_dimensions():
    """Sets smaller than the uniformity are faces for free."""
    h = Hypergraph(4, frozenset({mask_of([0, 1, 2])}))
    c = clique_complex(h, 3)
    assert c.has_face(mask_of([0, 3]))
    assert c.has_face(mask_of([0, 1, 2]))
    assert not c.has_face(mask_of([1, 2, 3]))


def test_minimal_nonfaces_of_independence_complex_are_edges():
    h = Hypergraph(5, frozenset({0b00111, 0b11100}))
    assert minimal_nonfaces(independence_complex(h)) == h.edges


def test_minimal_transversals_square():
    """Transversals of the two diagonals of a 4-cycle are the sides."""
    hits = minimal_transversals([0b0101, 0b1010])
    assert hits == frozenset({0b0011, 0b0110, 0b1100, 0b1001})


def test_alexander_dual_of_hollow_square():
    c = SimplicialComplex.from_faces(4, [[0, 1], [1, 2], [2, 3], [0, 3]])
    d = alexander_dual(c)
    assert d.facets == frozenset({0b0101, 0b1010})


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.data())
def test_alexander_dual_is_an_involution(n, data):
    """Dualizing twice gives back the original complex."""
    universe = list(range(1, 1 << n))
    facets = data.draw(st.lists(st.sampled_from(universe), min_size=1, max_size=4))
    c = SimplicialComplex.from_faces(n, facets)
    assert alexander_dual(alexander_dual(c)) == c


def test_restrict_drops_outside_vertices():
    c = SimplicialComplex.from_faces(4, [[0, 1, 2], [2, 3]])
    r = restrict(c, mask_of([0, 1, 3]))
    assert r.facets == frozenset({0b0011, 0b1000})


def test_link_of_a_vertex():
    c = SimplicialComplex.from_faces(4, [[0, 1, 2], [2, 3]])
    lk = link(c, mask_of([2]))
    assert lk.facets == frozenset({0b0011, 0b1000})


def test_components_counts_pieces():
    c = SimplicialComplex.from_faces(5, [[0, 1], [1, 2], [3, 4]])
    assert len(components(c)) == 2


def test_pad_facets_restores_dimension():
    """Small facets get padded up toward the uniform dimension."""
    c = SimplicialComplex.from_faces(5, [[0, 1, 2], [3]])
    p = pad_facets(c, 3)
    assert all(f.bit_count() >= 2 for f in p.facets)


def test_clique_complex_of_complete_is_a_simplex():
    h = make_complete(4, 3)
    c = clique_complex(h, 3)
    assert c.facets == frozenset({0b1111})
