"""Betti tables: the restriction-homology route against every other route."""

from __future__ import annotations

import pytest

from hyperbetti import (
    GF2,
    GF3,
    QQ,
    BettiTable,
    Hypergraph,
    SizeBudgetError,
    check_conn_depth_theorem,
    clique_ideal_betti,
    connectivity,
    cycle_betti_closed_form,
    edge_ideal_betti,
    hochster_betti,
    independence_complex,
    is_cohen_macaulay,
    knd_complement_betti,
    line_betti_closed_form,
    line_betti_degenerate,
    make_complete,
    make_cycle,
    make_line,
    make_star_overlap,
    star_betti_closed_form,
    taylor_betti_free_vertex,
)
from hyperbetti.betti import resolution_stats
from hyperbetti.bitsets import mask_of


# Reference tables frozen from the restriction-homology sum over the
# rationals; every closed-form route below must land on them exactly.
LINE_3_3_1 = {(0, 0): 1, (1, 3): 3, (2, 5): 2, (2, 6): 1, (3, 7): 1}
CYCLE_4_3_1 = {(0, 0): 1, (1, 3): 4, (2, 5): 4, (2, 6): 2, (3, 7): 4, (4, 8): 1}
STAR_3_3_2 = {(0, 0): 1, (1, 3): 3, (2, 4): 3, (3, 5): 1}
LINE_4_2_1 = {(0, 0): 1, (1, 2): 4, (2, 3): 3, (2, 4): 1, (3, 5): 1}
KND_5_3 = {(0, 0): 1, (1, 3): 10, (2, 4): 15, (3, 5): 6}


def test_line_restriction_sum_matches_frozen_table():
    assert edge_ideal_betti(make_line(3, 3, 1), QQ).entries == LINE_3_3_1


def test_line_closed_form_matches_frozen_table():
    assert line_betti_closed_form(3, 3, 1).entries == LINE_3_3_1


def test_cycle_both_routes_match_frozen_table():
    assert edge_ideal_betti(make_cycle(4, 3, 1), QQ).entries == CYCLE_4_3_1
    assert cycle_betti_closed_form(4, 3, 1).entries == CYCLE_4_3_1


def test_star_both_routes_match_frozen_table():
    assert edge_ideal_betti(make_star_overlap(3, 3, 2), QQ).entries == STAR_3_3_2
    assert star_betti_closed_form(3, 3, 2).entries == STAR_3_3_2


def test_degenerate_line_is_the_graph_path_case():
    """Edge size exactly twice the overlap routes through its own formula."""
    assert edge_ideal_betti(make_line(4, 2, 1), QQ).entries == LINE_4_2_1
    assert line_betti_degenerate(4, 1).entries == LINE_4_2_1


def test_complete_complement_closed_form():
    """Non-edge ideal of the complete 3-uniform hypergraph on 5 vertices."""
    assert knd_complement_betti(5, 3).entries == KND_5_3


def test_table_is_field_independent_on_small_lines():
    h = make_line(3, 3, 1)
    assert (
        edge_ideal_betti(h, QQ).entries
        == edge_ideal_betti(h, GF2).entries
        == edge_ideal_betti(h, GF3).entries
    )


def test_taylor_bound_is_exact_for_generic_overlaps():
    """Generator supports with a free vertex each resolve without cancellation."""
    h = Hypergraph(4, frozenset({0b0111, 0b1110}))
    assert taylor_betti_free_vertex(h).entries == edge_ideal_betti(h, QQ).entries


def test_characteristic_can_change_the_table():
    """An edge set carving out a closed surface feels the coefficient field."""
    from hyperbetti import SimplicialComplex, minimal_nonfaces

    rp2 = [
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
        [1, 2, 4], [1, 3, 4], [1, 3, 5], [2, 3, 5], [2, 4, 5],
    ]
    surface = SimplicialComplex.from_faces(6, rp2)
    h = Hypergraph(6, minimal_nonfaces(surface))
    assert independence_complex(h) == surface
    over_q = edge_ideal_betti(h, QQ)
    over_2 = edge_ideal_betti(h, GF2)
    assert over_q.entries != over_2.entries
    assert over_2.beta(3, 6) == over_q.beta(3, 6) + 1


def test_threaded_sweep_equals_serial():
    h = make_cycle(4, 3, 1)
    serial = edge_ideal_betti(h, QQ)
    fanned = edge_ideal_betti(h, QQ, threads=4)
    assert serial.entries == fanned.entries


def test_vertex_budget_is_enforced():
    with pytest.raises(SizeBudgetError):
        edge_ideal_betti(make_line(3, 3, 1), QQ, vertex_budget=5)


def test_quotient_ideal_conventions_shift_by_one():
    t = edge_ideal_betti(make_line(3, 3, 1), QQ)
    ideal_view = t.as_ideal()
    assert ideal_view.beta(0, 3) == t.beta(1, 3)
    assert ideal_view.as_quotient().entries == t.entries


def test_table_json_and_csv_roundtrip():
    t = edge_ideal_betti(make_line(2, 3, 1), QQ)
    assert BettiTable.from_json(t.to_json()).entries == t.entries
    lines = t.to_csv().strip().splitlines()
    assert lines[0] == "i,j,beta"
    assert len(lines) == len(t.entries) + 1


def test_projective_dimension_and_regularity():
    t = edge_ideal_betti(make_line(3, 3, 1), QQ)
    assert t.projective_dimension == 3
    assert t.regularity == 4


def test_connectivity_of_near_complete():
    """Dropping one edge from the complete hypergraph keeps connectivity high."""
    h = make_complete(5, 3)
    edges = set(h.edges)
    edges.discard(mask_of([0, 1, 2]))
    assert connectivity(Hypergraph(5, frozenset(edges)), QQ, 3) == 2


def test_connectivity_none_for_complete():
    assert connectivity(make_complete(4, 3), QQ, 3) is None


def test_conn_depth_equivalence_on_a_line():
    rep = check_conn_depth_theorem(make_line(3, 3, 1))
    assert rep.matches and rep.equivalence_holds


def test_cohen_macaulay_examples():
    """A simplex boundary is CM; two far-apart edges are not."""
    from hyperbetti import SimplicialComplex

    sphere = SimplicialComplex.from_faces(4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
    assert is_cohen_macaulay(sphere, QQ)
    broken = SimplicialComplex.from_faces(4, [[0, 1], [2, 3]])
    assert not is_cohen_macaulay(broken, QQ)


def test_resolution_stats_depth():
    t = edge_ideal_betti(make_line(3, 3, 1), QQ)
    stats = resolution_stats(t, 3)
    assert stats.projective_dimension == 3
    assert stats.depth == 7 - 3
