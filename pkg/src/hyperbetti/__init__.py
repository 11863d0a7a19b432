"""Exact graded Betti numbers, shellability, and chordality for the
edge ideals of uniform hypergraphs.

Everything is computed over exact arithmetic (rationals or prime
fields), with the restriction-homology sum as the ground truth and
independent combinatorial routes layered on top; ``run_check`` replays
any of the registered cross-checks over a parameter grid.
"""

from .betti import (
    BettiTable,
    ConnectivityReport,
    check_conn_depth_theorem,
    clique_ideal_betti,
    connectivity,
    cycle_betti_closed_form,
    cycle_betti_degenerate,
    edge_ideal_betti,
    froberg_cm_check,
    hochster_betti,
    is_cohen_macaulay,
    knd_complement_betti,
    line_betti_closed_form,
    line_betti_degenerate,
    rsequence_betti_table,
    star_betti_closed_form,
    taylor_betti_free_vertex,
)
from .chordal import (
    AttachmentSequence,
    AttachmentStep,
    RealizationReport,
    build_chordal,
    chordal_graph_recognize,
    enumerate_sequences,
    realization_search,
)
from .complexes import (
    SimplicialComplex,
    alexander_dual,
    clique_complex,
    independence_complex,
    link,
    minimal_nonfaces,
    restrict,
)
from .errors import ParameterError, PreconditionError, SizeBudgetError
from .homology import GF2, GF3, QQ, FieldSpec, parse_field, reduced_homology_dims
from .hypergraph import (
    FamilySpec,
    Hypergraph,
    canonical_hash,
    canonical_json,
    make_complete,
    make_cycle,
    make_line,
    make_multipartite,
    make_star_overlap,
)
from .ideal import (
    MonomialIdeal,
    QuotientCertificate,
    ShellingCertificate,
    edge_ideal,
    search_d_quotients,
    search_d_shelling,
    stanley_reisner_ideal,
    verify_d_quotients,
    verify_d_shelling,
)
from .verify import THEOREM_IDS, VerificationReport, run_check

__all__ = [
    "AttachmentSequence",
    "AttachmentStep",
    "BettiTable",
    "ConnectivityReport",
    "FamilySpec",
    "FieldSpec",
    "GF2",
    "GF3",
    "Hypergraph",
    "MonomialIdeal",
    "ParameterError",
    "PreconditionError",
    "QQ",
    "QuotientCertificate",
    "RealizationReport",
    "ShellingCertificate",
    "SimplicialComplex",
    "SizeBudgetError",
    "THEOREM_IDS",
    "VerificationReport",
    "alexander_dual",
    "build_chordal",
    "canonical_hash",
    "canonical_json",
    "check_conn_depth_theorem",
    "chordal_graph_recognize",
    "clique_complex",
    "clique_ideal_betti",
    "connectivity",
    "cycle_betti_closed_form",
    "cycle_betti_degenerate",
    "edge_ideal",
    "edge_ideal_betti",
    "enumerate_sequences",
    "froberg_cm_check",
    "hochster_betti",
    "independence_complex",
    "is_cohen_macaulay",
    "knd_complement_betti",
    "line_betti_closed_form",
    "line_betti_degenerate",
    "link",
    "make_complete",
    "make_cycle",
    "make_line",
    "make_multipartite",
    "make_star_overlap",
    "minimal_nonfaces",
    "parse_field",
    "realization_search",
    "reduced_homology_dims",
    "restrict",
    "rsequence_betti_table",
    "run_check",
    "search_d_quotients",
    "search_d_shelling",
    "stanley_reisner_ideal",
    "star_betti_closed_form",
    "taylor_betti_free_vertex",
    "verify_d_quotients",
    "verify_d_shelling",
]
