"""Registry of machine checks: every closed form against an independent route.

Each check walks a parameter grid and compares two computations that share
as little code as possible — a formula against the restriction-homology
oracle, a combinatorial recognizer against an algebraic search, a
classification against a from-scratch decision procedure.  The result is a
report with one record per instance, so a mismatch pinpoints the exact
parameters (and serialized objects) needed to replay it.

Grid strings are comma-separated ``key=value`` or ``key=lo..hi`` pairs,
e.g. ``"n=3..6,alpha=1..2"``; a bare word (``"small-world"``) selects a
named preset.  Every check has usable defaults, so the grid argument is
optional throughout.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Mapping, Sequence

from .betti import (
    BettiTable,
    check_conn_depth_theorem,
    count_cycle_subconfigs,
    count_line_subconfigs,
    cycle_betti_closed_form,
    cycle_betti_degenerate,
    edge_ideal_betti,
    enumerate_cycle_subconfigs,
    enumerate_line_subconfigs,
    froberg_cm_check,
    hochster_betti,
    knd_complement_betti,
    line_betti_closed_form,
    line_betti_degenerate,
    resolution_stats,
    star_betti_closed_form,
    taylor_betti_free_vertex,
)
from .bitsets import bits_of, mask_of
from .chordal import (
    AttachmentSequence,
    AttachmentStep,
    build_chordal_with_chunks,
    chordal_graph_recognize,
    complement_diameter,
    enumerate_sequences,
    two_gluing_classification,
    two_gluing_empirical,
)
from .complexes import (
    SimplicialComplex,
    clique_complex,
    independence_complex,
    pad_facets,
    strip_small_facets,
)
from .errors import ParameterError, PreconditionError
from .homology import GF2, GF3, QQ, FieldSpec
from .hypergraph import (
    Hypergraph,
    every_edge_has_free_vertex,
    make_cycle,
    make_line,
    make_star_overlap,
)
from .ideal import (
    MonomialIdeal,
    ShellingRefusal,
    betti_splitting_check,
    duality_bridge,
    extend_ring,
    rsequence_betti_closed_form,
    rsequence_colon_profile,
    search_d_quotients,
    search_d_shelling,
    sr_complex,
    stanley_reisner_ideal,
    verify_d_shelling,
)

FIELD_TRIPLE = (GF2, GF3, QQ)

THEOREM_IDS = (
    "betti",
    "u",
    "b1",
    "l",
    "P",
    "PI",
    "b",
    "k",
    "betti1",
    "to",
    "star",
    "hypergraph",
    "graph-corollary",
    "Td-shellable",
    "two-gluing",
    "diameter",
    "AdRd",
    "conn-depth",
    "homconn",
    "cm-froberg",
    "knd-complement",
    "dquot-dshell",
    "betti-splitting",
    "rsequence",
    "lin-quot",
)


# -- report types ------------------------------------------------------


@dataclass(frozen=True)
class InstanceResult:
    """One grid point: what was checked and how it went."""

    instance: str
    status: str  # "match" | "mismatch" | "skipped"
    details: str = ""
    elapsed_ms: int = 0


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    grid: str
    results: tuple[InstanceResult, ...]
    notes: tuple[str, ...] = ()
    total_ms: int = 0

    @property
    def matched(self) -> int:
        return sum(1 for r in self.results if r.status == "match")

    @property
    def mismatched(self) -> int:
        return sum(1 for r in self.results if r.status == "mismatch")

    @property
    def skipped(self) -> int:
        return sum(1 for r in self.results if r.status == "skipped")

    @property
    def ok(self) -> bool:
        return self.mismatched == 0

    def summary_line(self) -> str:
        return (
            f"theorem={self.theorem} instances={len(self.results)} "
            f"match={self.matched} mismatch={self.mismatched} skipped={self.skipped}"
        )

    def to_json_obj(self, include_timings: bool = False) -> dict:
        obj: dict = {
            "theorem": self.theorem,
            "grid": self.grid,
            "summary": {
                "instances": len(self.results),
                "match": self.matched,
                "mismatch": self.mismatched,
                "skipped": self.skipped,
            },
            "notes": list(self.notes),
            "results": [
                {"instance": r.instance, "status": r.status, "details": r.details}
                for r in self.results
            ],
        }
        if include_timings:
            obj["timings_ms"] = {
                "total": self.total_ms,
                "instances": [r.elapsed_ms for r in self.results],
            }
        return obj


class SkipInstance(Exception):
    """Raised inside a check body to mark the instance as skipped."""


# -- grid handling -----------------------------------------------------


def parse_grid(text: str | None) -> dict:
    """Parse ``key=value`` / ``key=lo..hi`` pairs, or a named preset."""
    if not text:
        return {}
    text = text.strip()
    if "=" not in text:
        return {"preset": text}
    grid: dict = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ParameterError(f"grid entry {part!r} is not key=value")
        key, _, raw = part.partition("=")
        key = key.strip()
        raw = raw.strip()
        try:
            if ".." in raw:
                lo, _, hi = raw.partition("..")
                grid[key] = (int(lo), int(hi))
            else:
                v = int(raw)
                grid[key] = (v, v)
        except ValueError as exc:
            raise ParameterError(f"grid value {raw!r} for {key!r} is not integral") from exc
    return grid


def _span(grid: Mapping, key: str, lo: int, hi: int) -> range:
    if key in grid:
        glo, ghi = grid[key]
        return range(glo, ghi + 1)
    return range(lo, hi + 1)


def _val(grid: Mapping, key: str, default: int) -> int:
    if key in grid:
        lo, hi = grid[key]
        if lo != hi:
            raise ParameterError(f"grid key {key!r} takes a single value")
        return lo
    return default


def _stride(items: list, cap: int) -> list:
    """Deterministic evenly spaced subsample when the pool overruns a cap."""
    if cap <= 0 or len(items) <= cap:
        return items
    step = len(items) / cap
    return [items[int(k * step)] for k in range(cap)]


# -- shared helpers ----------------------------------------------------


def _instance(label: str, fn: Callable[[], str | None]) -> InstanceResult:
    t0 = time.perf_counter()
    try:
        flaw = fn()
    except SkipInstance as skip:
        ms = int(1000 * (time.perf_counter() - t0))
        return InstanceResult(label, "skipped", str(skip), ms)
    ms = int(1000 * (time.perf_counter() - t0))
    if flaw is None:
        return InstanceResult(label, "match", "", ms)
    return InstanceResult(label, "mismatch", flaw, ms)


def _table_diff(expected: BettiTable, actual: BettiTable) -> str | None:
    a = expected.as_quotient().entries
    b = actual.as_quotient().entries
    if a == b:
        return None
    cells = [
        f"(i={i},j={j}): expected {a.get((i, j), 0)} got {b.get((i, j), 0)}"
        for i, j in sorted(set(a) | set(b))
        if a.get((i, j), 0) != b.get((i, j), 0)
    ]
    return (
        "; ".join(cells)
        + f" || expected table {expected.to_json()} || actual table {actual.to_json()}"
    )


def _edges_label(h: Hypergraph) -> str:
    return "|".join(
        "".join(str(v) for v in sorted(bits_of(m))) for m in sorted(h.edges)
    )


_ABC = "abcdefghijklmnopqrstuvwxyz"


def _gens_label(ideal: MonomialIdeal) -> str:
    return ",".join(
        "".join(_ABC[v] for v in sorted(bits_of(m))) for m in ideal.generators
    )


def _partitions(i: int, cap: int | None = None) -> Iterable[tuple[int, ...]]:
    cap = i if cap is None else cap
    if i == 0:
        yield ()
        return
    for first in range(min(i, cap), 0, -1):
        for rest in _partitions(i - first, first):
            yield (first,) + rest


def _free_vertex_pool(grid: Mapping) -> list[tuple[str, Hypergraph]]:
    """Hypergraphs in which every edge keeps a vertex of its own: the
    overlap families in their spread regimes plus seeded random ones
    padded with a dedicated fresh vertex per edge."""
    nmax = _val(grid, "n", 4)
    pool: list[tuple[str, Hypergraph]] = []
    for d in _span(grid, "d", 2, 4):
        for alpha in _span(grid, "alpha", 1, 2):
            if d <= 2 * alpha:
                continue
            for n in range(1, nmax + 1):
                pool.append((f"line n={n} d={d} alpha={alpha}", make_line(n, d, alpha)))
            for n in range(3, nmax + 1):
                pool.append((f"cycle n={n} d={d} alpha={alpha}", make_cycle(n, d, alpha)))
        for alpha in _span(grid, "alpha", 1, 2):
            if alpha < d:
                for n in range(1, nmax + 1):
                    pool.append(
                        (f"star n={n} d={d} alpha={alpha}", make_star_overlap(n, d, alpha))
                    )
    for alpha in _span(grid, "alpha", 1, 2):
        pool.append((f"line n=2 d={2 * alpha} alpha={alpha}", make_line(2, 2 * alpha, alpha)))
    rng = random.Random(_val(grid, "seed", 11))
    for trial in range(_val(grid, "count", 8)):
        d = rng.randrange(2, 5)
        base = rng.randrange(max(2, d - 1), 5)
        n_edges = rng.randrange(1, 5)
        cores = [
            mask_of(rng.sample(range(base), min(d - 1, base)))
            for _ in range(n_edges)
        ]
        edges = frozenset(
            core | (1 << (base + idx)) for idx, core in enumerate(cores)
        )
        h = Hypergraph(base + n_edges, edges)
        assert every_edge_has_free_vertex(h)
        pool.append((f"random trial={trial} edges={_edges_label(h)}", h))
    return pool


# -- closed-form-versus-oracle checks ----------------------------------


def check_betti(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Total Betti numbers are edge-subset counts when every edge has a
    free vertex."""
    out = []
    for label, h in _free_vertex_pool(grid):
        t = len(h.edges)
        expected = {i: comb(t, i) for i in range(t + 1)}
        for fld in FIELD_TRIPLE:
            def body(h=h, expected=expected, fld=fld):
                got = edge_ideal_betti(h, fld).totals()
                if got != expected:
                    return f"totals expected {expected} got {got}"
                return None

            out.append(_instance(f"{label} field={fld.label}", body))
    return out, []


def check_u(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Edge-subset resolution counting agrees with the homology oracle on
    free-vertex hypergraphs."""
    out = []
    for label, h in _free_vertex_pool(grid):
        expected = taylor_betti_free_vertex(h)
        for fld in FIELD_TRIPLE:
            out.append(
                _instance(
                    f"{label} field={fld.label}",
                    lambda h=h, e=expected, f=fld: _table_diff(e, edge_ideal_betti(h, f)),
                )
            )
    return out, []


def check_P(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Line tables in the spread regime (edge size exceeding twice the
    overlap) against the oracle."""
    out = []
    for d in _span(grid, "d", 2, 4):
        for alpha in _span(grid, "alpha", 1, 2):
            if d <= 2 * alpha:
                continue
            for n in _span(grid, "n", 1, 6):
                expected = line_betti_closed_form(n, d, alpha)
                for fld in FIELD_TRIPLE:
                    out.append(
                        _instance(
                            f"line n={n} d={d} alpha={alpha} field={fld.label}",
                            lambda n=n, d=d, a=alpha, f=fld, e=expected: _table_diff(
                                e, edge_ideal_betti(make_line(n, d, a), f)
                            ),
                        )
                    )
    return out, []


def check_PI(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Line tables in the tight regime (edge size exactly twice the
    overlap) against the oracle."""
    out = []
    for alpha in _span(grid, "alpha", 1, 2):
        for n in _span(grid, "n", 1, 6):
            expected = line_betti_degenerate(n, alpha)
            for fld in FIELD_TRIPLE:
                out.append(
                    _instance(
                        f"line n={n} d={2 * alpha} alpha={alpha} field={fld.label}",
                        lambda n=n, a=alpha, f=fld, e=expected: _table_diff(
                            e, edge_ideal_betti(make_line(n, 2 * a, a), f)
                        ),
                    )
                )
    return out, []


def check_b1(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Top homological row of spread-regime lines: a single 1 in the
    degree that sums every edge."""
    out = []
    for d in _span(grid, "d", 2, 4):
        for alpha in _span(grid, "alpha", 1, 2):
            if d <= 2 * alpha:
                continue
            for n in _span(grid, "n", 1, 6):
                expected = {(n, n * (d - alpha) + alpha): 1}
                for fld in FIELD_TRIPLE:
                    def body(n=n, d=d, a=alpha, f=fld, e=expected):
                        table = edge_ideal_betti(make_line(n, d, a), f)
                        row = {k: v for k, v in table.entries.items() if k[0] == n}
                        if row != e:
                            return f"top row expected {e} got {row}"
                        return None

                    out.append(
                        _instance(
                            f"line n={n} d={d} alpha={alpha} field={fld.label}", body
                        )
                    )
    return out, []


def check_betti1(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Closed cycle tables in the spread regime against the oracle."""
    out = []
    for d in _span(grid, "d", 2, 4):
        for alpha in _span(grid, "alpha", 1, 2):
            if d <= 2 * alpha:
                continue
            for n in _span(grid, "n", 3, 6):
                expected = cycle_betti_closed_form(n, d, alpha)
                for fld in FIELD_TRIPLE:
                    out.append(
                        _instance(
                            f"cycle n={n} d={d} alpha={alpha} field={fld.label}",
                            lambda n=n, d=d, a=alpha, f=fld, e=expected: _table_diff(
                                e, edge_ideal_betti(make_cycle(n, d, a), f)
                            ),
                        )
                    )
    notes = [
        "run-index note: the entry formula is summed over 1 <= r <= i; an r = 0 "
        "term would carry the empty binomial C(i-1,-1) and contribute nothing, "
        "so the implemented range starts at 1 and the choice is recorded here."
    ]
    return out, notes


def check_to(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Closed cycle tables in the tight regime against the oracle,
    including the three residue-dependent top entries."""
    out = []
    for alpha in _span(grid, "alpha", 1, 2):
        for n in _span(grid, "n", 3, 6):
            expected = cycle_betti_degenerate(n, alpha)
            for fld in FIELD_TRIPLE:
                out.append(
                    _instance(
                        f"cycle n={n} d={2 * alpha} alpha={alpha} field={fld.label}",
                        lambda n=n, a=alpha, f=fld, e=expected: _table_diff(
                            e, edge_ideal_betti(make_cycle(n, 2 * a, a), f)
                        ),
                    )
                )
    return out, []


def check_b(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Top homological row of spread-regime cycles: a single 1 in the
    degree covering every vertex."""
    out = []
    for d in _span(grid, "d", 2, 4):
        for alpha in _span(grid, "alpha", 1, 2):
            if d <= 2 * alpha:
                continue
            for n in _span(grid, "n", 3, 6):
                expected = {(n, n * (d - alpha)): 1}
                for fld in FIELD_TRIPLE:
                    def body(n=n, d=d, a=alpha, f=fld, e=expected):
                        table = edge_ideal_betti(make_cycle(n, d, a), f)
                        row = {k: v for k, v in table.entries.items() if k[0] == n}
                        if row != e:
                            return f"top row expected {e} got {row}"
                        return None

                    out.append(
                        _instance(
                            f"cycle n={n} d={d} alpha={alpha} field={fld.label}", body
                        )
                    )
    return out, []


def check_star(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Common-core family tables against the oracle."""
    out = []
    for d in _span(grid, "d", 2, 4):
        for alpha in _span(grid, "alpha", 1, 2):
            if not 1 <= alpha < d:
                continue
            for n in _span(grid, "n", 1, 6):
                expected = star_betti_closed_form(n, d, alpha)
                for fld in FIELD_TRIPLE:
                    out.append(
                        _instance(
                            f"star n={n} d={d} alpha={alpha} field={fld.label}",
                            lambda n=n, d=d, a=alpha, f=fld, e=expected: _table_diff(
                                e, edge_ideal_betti(make_star_overlap(n, d, a), f)
                            ),
                        )
                    )
    return out, []


def check_l(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Run-placement counts along a path: closed form versus full subset
    enumeration."""
    out = []
    imax = _val(grid, "i", 6)
    for n in _span(grid, "n", 1, 8):
        for i in range(1, min(imax, n) + 1):
            for part in _partitions(i):
                def body(part=part, n=n):
                    a = count_line_subconfigs(part, n)
                    b = enumerate_line_subconfigs(part, n)
                    if a != b:
                        return f"closed form {a} != enumeration {b}"
                    return None

                out.append(_instance(f"path runs={list(part)} n={n}", body))
    return out, []


def check_k(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Run-placement counts around a cycle: closed form versus full
    subset enumeration."""
    out = []
    imax = _val(grid, "i", 6)
    for n in _span(grid, "n", 3, 8):
        for i in range(1, min(imax, n) + 1):
            for part in _partitions(i):
                def body(part=part, n=n):
                    a = count_cycle_subconfigs(part, n)
                    b = enumerate_cycle_subconfigs(part, n)
                    if a != b:
                        return f"closed form {a} != enumeration {b}"
                    return None

                out.append(_instance(f"cycle runs={list(part)} n={n}", body))
    return out, []


def check_knd(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Skeleton-quotient tables of the edgeless hypergraph against the
    closed product of binomials."""
    out = []
    for n in _span(grid, "n", 2, 6):
        for d in _span(grid, "d", 2, 6):
            if d > n:
                continue
            expected = knd_complement_betti(n, d)
            for fld in FIELD_TRIPLE:
                def body(n=n, d=d, f=fld, e=expected):
                    from .betti import clique_ideal_betti

                    h = Hypergraph(n, frozenset())
                    return _table_diff(e, clique_ideal_betti(h, d, f))

                out.append(_instance(f"edgeless n={n} d={d} field={fld.label}", body))
    return out, []


# -- connectivity, depth, Cohen-Macaulay -------------------------------


def _conn_pool(grid: Mapping) -> list[tuple[str, Hypergraph, int]]:
    """Family members small enough for full-subset scans, plus seeded
    random 3-uniform hypergraphs."""
    cap = _val(grid, "vcap", 11)
    pool: list[tuple[str, Hypergraph, int]] = []
    for d in _span(grid, "d", 2, 4):
        for alpha in _span(grid, "alpha", 1, 2):
            if 2 * alpha <= d:
                for n in _span(grid, "n", 1, 6):
                    h = make_line(n, d, alpha)
                    if h.num_vertices <= cap:
                        pool.append((f"line n={n} d={d} alpha={alpha}", h, d))
                for n in _span(grid, "n", 3, 6):
                    h = make_cycle(n, d, alpha)
                    if h.num_vertices <= cap:
                        pool.append((f"cycle n={n} d={d} alpha={alpha}", h, d))
            if alpha < d:
                for n in _span(grid, "n", 1, 6):
                    h = make_star_overlap(n, d, alpha)
                    if h.num_vertices <= cap:
                        pool.append((f"star n={n} d={d} alpha={alpha}", h, d))
    rng = random.Random(_val(grid, "seed", 7))
    for trial in range(_val(grid, "count", 200)):
        n = rng.randrange(4, 9)
        all_triples = [mask_of(c) for c in combinations(range(n), 3)]
        n_edges = rng.randrange(1, min(len(all_triples), 3 * n) + 1)
        h = Hypergraph(n, frozenset(rng.sample(all_triples, n_edges)))
        pool.append((f"random trial={trial} n={n} edges={_edges_label(h)}", h, 3))
    return pool


def _conn_fields(trial_label: str, index: int) -> tuple[FieldSpec, ...]:
    """Families run over all three fields; random instances run over GF(2)
    with every tenth re-run over the other two."""
    if not trial_label.startswith("random"):
        return FIELD_TRIPLE
    if index % 10 == 0:
        return FIELD_TRIPLE
    return (GF2,)


def check_conn_depth(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Connectivity by direct removal scan equals the value implied by the
    linear-strand length of the resolution."""
    out = []
    for index, (label, h, d) in enumerate(_conn_pool(grid)):
        for fld in _conn_fields(label, index):
            def body(h=h, d=d, fld=fld):
                try:
                    rep = check_conn_depth_theorem(h, fld, d)
                except PreconditionError as exc:
                    raise SkipInstance(str(exc)) from exc
                if not rep.matches:
                    return (
                        f"direct connectivity {rep.connectivity_direct} != "
                        f"strand route {rep.connectivity_from_strand} "
                        f"(pd={rep.pd} depth={rep.depth} strand={rep.linear_strand_length})"
                    )
                return None

            out.append(_instance(f"{label} field={fld.label}", body))
    notes = [
        "field policy: family instances run over GF(2), GF(3) and Q;"
        " random instances run over GF(2) with every tenth re-run over all three."
    ]
    return out, notes


def check_homconn(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Zero connectivity holds exactly when the resolution is as long and
    as linear as the vertex count allows."""
    out = []
    for index, (label, h, d) in enumerate(_conn_pool(grid)):
        for fld in _conn_fields(label, index):
            def body(h=h, d=d, fld=fld):
                try:
                    rep = check_conn_depth_theorem(h, fld, d)
                except PreconditionError as exc:
                    raise SkipInstance(str(exc)) from exc
                if not rep.equivalence_holds:
                    return (
                        f"connectivity {rep.connectivity_direct} but resolution-shape "
                        f"route says zero={rep.depth_route_zero} "
                        f"(pd={rep.pd} depth={rep.depth} strand={rep.linear_strand_length})"
                    )
                return None

            out.append(_instance(f"{label} field={fld.label}", body))
    return out, []


def _cm_pool(grid: Mapping) -> list[tuple[str, SimplicialComplex]]:
    pool: list[tuple[str, SimplicialComplex]] = []
    cap = _val(grid, "vcap", 10)
    for d in (2, 3):
        for alpha in (1,):
            for n in range(1, 5):
                h = make_line(n, d, alpha)
                if h.num_vertices <= cap:
                    pool.append((f"clique line n={n} d={d}", clique_complex(h, d)))
            for n in range(3, 5):
                h = make_cycle(n, d, alpha)
                if h.num_vertices <= cap:
                    pool.append((f"clique cycle n={n} d={d}", clique_complex(h, d)))
    pool.append(("empty-face complex n=3", SimplicialComplex.from_faces(3, [0])))
    pool.append(("full simplex n=4", SimplicialComplex.from_faces(4, [0b1111])))
    pool.append(
        (
            "triangle boundary",
            SimplicialComplex.from_faces(3, [0b011, 0b101, 0b110]),
        )
    )
    pool.append(
        (
            "two disjoint segments",
            SimplicialComplex.from_faces(4, [0b0011, 0b1100]),
        )
    )
    rng = random.Random(_val(grid, "seed", 13))
    for trial in range(_val(grid, "count", 24)):
        n = rng.randrange(4, 8)
        all_triples = [mask_of(c) for c in combinations(range(n), 3)]
        n_edges = rng.randrange(1, len(all_triples) + 1)
        h = Hypergraph(n, frozenset(rng.sample(all_triples, n_edges)))
        kind = rng.choice(("independence", "clique"))
        c = independence_complex(h) if kind == "independence" else clique_complex(h, 3)
        pool.append((f"random {kind} trial={trial} edges={_edges_label(h)}", c))
    return pool


def check_cm_froberg(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """The restriction-vanishing criterion for Cohen-Macaulayness agrees
    with depth read off the full Betti table."""
    out = []
    for label, c in _cm_pool(grid):
        for fld in FIELD_TRIPLE:
            def body(c=c, fld=fld):
                crit = froberg_cm_check(c, fld)
                table = hochster_betti(c, fld)
                m = c.vertices.bit_count()
                e = (c.dim if c.dim is not None else -1) + 1
                depth_route = (m - table.projective_dimension) == e
                if crit != depth_route:
                    return (
                        f"vanishing criterion says {crit}, Betti-table depth "
                        f"{m - table.projective_dimension} vs dimension {e} says {depth_route}"
                    )
                return None

            out.append(_instance(f"{label} field={fld.label}", body))
    return out, []


# -- chordal structure checks ------------------------------------------


def _sequence_pool(
    grid: Mapping, dmin: int, dmax: int, vmax: int, steps: int, cap: int
) -> list[tuple[str, AttachmentSequence]]:
    """Deduplicated builder inputs: every attachment sequence within the
    bounds, one representative per labeled output hypergraph."""
    pool: list[tuple[str, AttachmentSequence]] = []
    seen: set[tuple[int, frozenset[int]]] = set()
    for d in _span(grid, "d", dmin, dmax):
        for seq in enumerate_sequences(
            d, _val(grid, "n", vmax), _val(grid, "steps", steps)
        ):
            h, _ = build_chordal_with_chunks(seq)
            key = (h.n_vertices, h.edges)
            if key in seen:
                continue
            seen.add(key)
            steps_label = ";".join(
                f"{s.size}+{sorted(s.glue)}" if s.glue else str(s.size)
                for s in seq.steps
            )
            pool.append((f"d={d} steps={steps_label}", seq))
    return _stride(pool, _val(grid, "count", cap))


def check_hypergraph(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Every buildable hypergraph yields a nonface ideal with linear
    quotients (the algebraic shadow of being chordal).

    Searches run with a spare ring variable so the property depends on
    the generators alone (see extend_ring)."""
    out = []
    for label, seq in _sequence_pool(grid, 2, 3, 7, 3, 400):
        def body(seq=seq):
            h, _ = build_chordal_with_chunks(seq)
            ideal = stanley_reisner_ideal(clique_complex(h, seq.d))
            if ideal.is_zero:
                raise SkipInstance("complete hypergraph: nonface ideal is zero")
            ordering = search_d_quotients(
                extend_ring(ideal), 1, max_generators=len(ideal.generators)
            )
            if ordering is None:
                return (
                    f"no linear quotients for generators {_gens_label(ideal)} "
                    f"on {ideal.n_vertices} vertices"
                )
            return None

        out.append(_instance(label, body))
    return out, []


def check_graph_corollary(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Chordality of a graph is equivalent to linear quotients of its
    nonadjacency ideal — checked over every labeled graph in range."""
    out = []
    for n in _span(grid, "n", 1, 6):
        pairs = [mask_of(p) for p in combinations(range(n), 2)]
        for code in range(1 << len(pairs)):
            edges = frozenset(pairs[k] for k in range(len(pairs)) if code >> k & 1)
            g = Hypergraph(n, edges)

            def body(g=g, n=n):
                ideal = stanley_reisner_ideal(clique_complex(g, 2))
                if ideal.is_zero:
                    raise SkipInstance("complete graph: nonface ideal is zero")
                rep = chordal_graph_recognize(g)
                gens = len(ideal.generators)
                if rep.is_chordal:
                    ordering = search_d_quotients(
                        extend_ring(ideal), 1, max_generators=gens
                    )
                    if ordering is None:
                        return "recognizer says chordal but no linear quotients exist"
                    return None
                table = hochster_betti(
                    sr_complex(ideal), GF2, nonface_hint=sorted(ideal.generators)
                )
                if any(j != i + 1 for (i, j) in table.entries if i >= 1):
                    return None  # nonlinear resolution certifies absence
                ordering = search_d_quotients(
                    extend_ring(ideal), 1, max_generators=gens
                )
                if ordering is not None:
                    return (
                        f"chordless cycle {rep.chordless_cycle} found but the ideal "
                        f"has linear quotients under {ordering}"
                    )
                return None

            out.append(_instance(f"graph n={n} edges={_edges_label(g)}", body))
    notes = [
        "absence route: a mismatch on the non-chordal side requires linear "
        "quotients to exist; a nonlinear resolution over GF(2) rules that out "
        "immediately, and exhaustive ordering search settles the rest."
    ]
    return out, notes


def _td_sequences(grid: Mapping) -> list[tuple[str, AttachmentSequence]]:
    """Sequences whose pieces all have one more vertex than their glue:
    a first complete piece, then one fresh vertex per step."""
    pool: list[tuple[str, AttachmentSequence]] = []
    vmax = _val(grid, "n", 10)
    extra = _val(grid, "steps", 3)
    for d in _span(grid, "d", 2, 3):
        for base in range(d - 1, 5):
            size = base + 1

            def grow(
                steps: tuple[AttachmentStep, ...],
                chunks: tuple[int, ...],
                n: int,
                d: int = d,
                base: int = base,
                size: int = size,
            ) -> None:
                pool.append(
                    (
                        f"d={d} glue={base} steps="
                        + ";".join(
                            f"{s.size}+{sorted(s.glue)}" if s.glue else str(s.size)
                            for s in steps
                        ),
                        AttachmentSequence(d, steps),
                    )
                )
                if len(steps) > extra or n >= vmax:
                    return
                glues = set()
                for c in chunks:
                    for gmask in combinations(sorted(bits_of(c)), base):
                        glues.add(gmask)
                for gmask in sorted(glues):
                    step = AttachmentStep(size, gmask)
                    chunk = mask_of(gmask) | (1 << n)
                    grow(steps + (step,), chunks + (chunk,), n + 1)

            first = AttachmentStep(size)
            grow((first,), (mask_of(range(size)),), size)
    seen: set[tuple[int, frozenset[int]]] = set()
    dedup = []
    for label, seq in pool:
        h, _ = build_chordal_with_chunks(seq)
        key = (h.n_vertices, h.edges)
        if key not in seen:
            seen.add(key)
            dedup.append((label, seq))
    return _stride(dedup, _val(grid, "count", 80))


def check_td_shellable(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """One-vertex-at-a-time builds: the complex spanned by the complete
    pieces is shelled by construction order and is Cohen-Macaulay."""
    out = []
    for label, seq in _td_sequences(grid):
        def body(seq=seq):
            h, chunks = build_chordal_with_chunks(seq)
            distinct = tuple(dict.fromkeys(chunks))
            cc = SimplicialComplex.from_faces(h.n_vertices, distinct)
            sizes = {c.bit_count() for c in distinct}
            if len(sizes) != 1:
                return f"piece complex not pure: sizes {sorted(sizes)}"
            cert = verify_d_shelling(cc, distinct, 1)
            if isinstance(cert, ShellingRefusal):
                return f"construction order is not a 1-shelling: {cert.reason}"
            for fld in FIELD_TRIPLE:
                if not froberg_cm_check(cc, fld):
                    return f"piece complex not Cohen-Macaulay over {fld.label}"
            return None

        out.append(_instance(label, body))
    return out, []


def check_two_gluing(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """The linear-quotients classification of two glued complete pieces
    against a from-scratch decision on the edge ideal."""
    out = []
    nmax = _val(grid, "n", 9)
    for d in _span(grid, "d", 2, 3):
        for m in range(d, nmax + 1):
            for i in range(1, nmax + 1):
                for j in range(0, min(i, m + 1)):
                    if m + i - j > nmax or j >= i:
                        continue

                    def body(m=m, i=i, j=j, d=d):
                        predicted = two_gluing_classification(m, i, j, d)
                        observed = two_gluing_empirical(m, i, j, d)
                        if predicted != observed:
                            return f"classification {predicted} but computation {observed}"
                        return None

                    out.append(_instance(f"m={m} i={i} j={j} d={d}", body))
    return out, []


def check_diameter(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Complements of built chordal graphs are within three steps of
    every vertex whenever they are connected."""
    out = []
    pool = _sequence_pool({**grid, "d": (2, 2)}, 2, 2, 9, 3, 1200)
    rng = random.Random(_val(grid, "seed", 5))
    randoms: list[tuple[str, AttachmentSequence]] = []
    for trial in range(_val(grid, "count2", 200)):
        steps = [AttachmentStep(rng.randrange(1, 5))]
        chunks = [mask_of(range(steps[0].size))]
        n = steps[0].size
        for _ in range(rng.randrange(1, 5)):
            host = rng.choice(chunks)
            host_verts = sorted(bits_of(host))
            j = rng.randrange(0, len(host_verts) + 1)
            glue = tuple(sorted(rng.sample(host_verts, j)))
            size = j + rng.randrange(1, 4)
            if n + size - j > 9:
                continue
            steps.append(AttachmentStep(size, glue))
            chunks.append(mask_of(glue) | (((1 << (size - j)) - 1) << n))
            n += size - j
        randoms.append(
            (f"random trial={trial}", AttachmentSequence(2, tuple(steps)))
        )
    for label, seq in pool + randoms:
        def body(seq=seq):
            g, _ = build_chordal_with_chunks(seq)
            diam = complement_diameter(g)
            if diam is None:
                raise SkipInstance("complement disconnected")
            if diam > 3:
                return f"complement diameter {diam} on edges {_edges_label(g)}"
            return None

        out.append(_instance(label, body))
    return out, []


def check_adrd(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Removing undersized facets and then restoring the small skeleton
    reproduces the original edge-span complex exactly."""
    out = []
    for label, seq in _sequence_pool(grid, 2, 4, 7, 3, 100000):
        def body(seq=seq):
            h, _ = build_chordal_with_chunks(seq)
            c = clique_complex(h, seq.d)
            back = pad_facets(strip_small_facets(c, seq.d), seq.d)
            if back != c:
                return (
                    f"round trip changed the complex: facets {sorted(c.facets)} "
                    f"-> {sorted(back.facets)}"
                )
            return None

        out.append(_instance(label, body))
    return out, []


# -- ideal-side checks -------------------------------------------------


def _ideal_pool(grid: Mapping, nmax: int, gmax: int) -> list[tuple[str, MonomialIdeal]]:
    """Every equigenerated squarefree ideal in the given ambient range."""
    pool = []
    for n in _span(grid, "n", 2, nmax):
        for degree in _span(grid, "degree", 2, 3):
            if degree > n:
                continue
            supports = [mask_of(c) for c in combinations(range(n), degree)]
            for count in range(1, _val(grid, "gens", gmax) + 1):
                for chosen in combinations(supports, count):
                    pool.append(
                        (
                            f"n={n}",
                            MonomialIdeal(n, tuple(sorted(chosen))),
                        )
                    )
    return pool


def check_dquot_dshell(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Colon-degree orderings exist precisely when the complement-support
    complex is shellable at the matching codimension — both sides searched
    independently for every ideal in range."""
    preset = grid.get("preset")
    if preset == "small-world":
        nmax, gmax = 6, 5
    elif preset is None:
        nmax, gmax = 5, 4
    else:
        raise ParameterError(f"unknown preset {preset!r}")
    out = []
    for prefix, ideal in _ideal_pool(grid, nmax, gmax):
        for d in _span(grid, "dq", 1, 3):
            def body(ideal=ideal, d=d):
                q = search_d_quotients(
                    ideal, d, max_generators=len(ideal.generators)
                )
                s = search_d_shelling(
                    duality_bridge(ideal), d, max_facets=len(ideal.generators)
                )
                if (q is None) != (s is None):
                    return (
                        f"quotients {'found ' + str(q) if q is not None else 'absent'} "
                        f"but dual shelling {'found ' + str(s) if s is not None else 'absent'}"
                    )
                return None

            out.append(
                _instance(f"{prefix} gens={_gens_label(ideal)} d={d}", body)
            )
    return out, []


def check_betti_splitting(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Whenever a colon-degree ordering exists, the quotient's total Betti
    numbers split as the shifted sum over the per-step colon ideals."""
    out = []
    showcase = [
        MonomialIdeal(6, (0b000111, 0b011100, 0b110010, 0b101001)),
        MonomialIdeal(9, (0b000000111, 0b000011100, 0b001100100, 0b110000100)),
    ]
    pool = [("showcase", i) for i in showcase] + _ideal_pool(grid, 5, 4)
    for prefix, ideal in pool:
        dprime = ideal.generator_degree
        if dprime is None:
            continue
        found: tuple[int, tuple[int, ...]] | None = None
        for d in _span(grid, "dq", 1, 3):
            ordering = search_d_quotients(ideal, d, max_generators=len(ideal.generators))
            if ordering is not None and len(ideal.generators) > 1:
                found = (d, ordering)
                break
        if found is None:
            continue
        d, ordering = found

        def body(ideal=ideal, ordering=ordering, dprime=dprime):
            rep = betti_splitting_check(ideal, ordering, dprime, QQ)
            flaws = []
            if not rep.sum_identity_holds:
                flaws.append("total-sum identity fails")
            if not rep.graded_identity_holds:
                flaws.append("graded identity fails")
            if not rep.degree_disjointness_holds:
                flaws.append("degree disjointness fails")
            if flaws:
                return "; ".join(flaws) + f" (colon totals {rep.colon_totals})"
            return None

        out.append(
            _instance(f"{prefix} gens={_gens_label(ideal)} d={d}", body)
        )
    return out, []


def check_rsequence(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """When every colon ideal is generated by a regular sequence, the full
    graded table follows from the colon sizes alone — compared against
    the oracle over all three fields."""
    out = []
    pool: list[tuple[str, MonomialIdeal, int, tuple[int, ...]]] = []
    showcase = MonomialIdeal(
        9, (0b000000111, 0b000011100, 0b001100100, 0b110000100)
    )
    pool.append(
        (
            "one-core-three-petals",
            showcase,
            2,
            rsequence_colon_profile(showcase, (0, 1, 2, 3), 2),
        )
    )
    for dprime in _span(grid, "degree", 2, 4):
        for t in range(3, _val(grid, "gens", 4) + 1):
            n = 1 + t * (dprime - 1)
            gens = []
            for s in range(t):
                petal = mask_of(range(1 + s * (dprime - 1), 1 + (s + 1) * (dprime - 1)))
                gens.append(1 | petal)
            ideal = MonomialIdeal(n, tuple(gens))
            ordering = tuple(range(t))
            profile = rsequence_colon_profile(ideal, ordering, dprime - 1)
            pool.append((f"sunflower t={t} degree={dprime}", ideal, dprime - 1, profile))
    for prefix, ideal in _ideal_pool(grid, 5, 3):
        dprime = ideal.generator_degree
        if dprime is None or len(ideal.generators) < 2:
            continue
        placed = False
        for d in _span(grid, "dq", 1, 3):
            if placed:
                break
            ordering = search_d_quotients(ideal, d, max_generators=len(ideal.generators))
            if ordering is None:
                continue
            try:
                profile = rsequence_colon_profile(ideal, ordering, d)
            except PreconditionError:
                continue
            pool.append((f"{prefix} gens={_gens_label(ideal)}", ideal, d, profile))
            placed = True
    pool = _stride(pool, _val(grid, "count", 160))
    for label, ideal, d, profile in pool:
        dprime = ideal.generator_degree
        expected = rsequence_betti_closed_form(profile, d, dprime, ideal.n_vertices)
        for fld in FIELD_TRIPLE:
            def body(ideal=ideal, e=expected, fld=fld):
                actual = hochster_betti(
                    sr_complex(ideal), fld, nonface_hint=sorted(ideal.generators)
                )
                return _table_diff(e, actual)

            out.append(
                _instance(f"{label} d={d} profile={list(profile)} field={fld.label}", body)
            )
    return out, []


def check_lin_quot(grid: Mapping) -> tuple[list[InstanceResult], list[str]]:
    """Linear quotients force a linear resolution, over every test field."""
    out = []
    pool: list[tuple[str, MonomialIdeal]] = []
    for label, seq in _sequence_pool(grid, 2, 3, 6, 3, 60):
        h, _ = build_chordal_with_chunks(seq)
        ideal = stanley_reisner_ideal(clique_complex(h, seq.d))
        if not ideal.is_zero:
            pool.append((f"nonface ideal of {label}", ideal))
    pool.extend(
        (f"{p} gens={_gens_label(i)}", i) for p, i in _ideal_pool(grid, 5, 4)
    )
    pool = _stride(pool, _val(grid, "count", 500))
    for label, ideal in pool:
        def body(ideal=ideal):
            ordering = search_d_quotients(
                extend_ring(ideal), 1, max_generators=len(ideal.generators)
            )
            if ordering is None:
                raise SkipInstance("no linear quotients; statement does not apply")
            dprime = ideal.generator_degree
            for fld in FIELD_TRIPLE:
                table = hochster_betti(
                    sr_complex(ideal), fld, nonface_hint=sorted(ideal.generators)
                )
                stats = resolution_stats(table, dprime)
                if not stats.has_linear_resolution:
                    return (
                        f"linear quotients under {ordering} but nonlinear entries "
                        f"over {fld.label}: {table.to_json()}"
                    )
            return None

        out.append(_instance(label, body))
    return out, []


# -- registry ----------------------------------------------------------


REGISTRY: dict[str, Callable[[Mapping], tuple[list[InstanceResult], list[str]]]] = {
    "betti": check_betti,
    "u": check_u,
    "b1": check_b1,
    "l": check_l,
    "P": check_P,
    "PI": check_PI,
    "b": check_b,
    "k": check_k,
    "betti1": check_betti1,
    "to": check_to,
    "star": check_star,
    "hypergraph": check_hypergraph,
    "graph-corollary": check_graph_corollary,
    "Td-shellable": check_td_shellable,
    "two-gluing": check_two_gluing,
    "diameter": check_diameter,
    "AdRd": check_adrd,
    "conn-depth": check_conn_depth,
    "homconn": check_homconn,
    "cm-froberg": check_cm_froberg,
    "knd-complement": check_knd,
    "dquot-dshell": check_dquot_dshell,
    "betti-splitting": check_betti_splitting,
    "rsequence": check_rsequence,
    "lin-quot": check_lin_quot,
}

assert tuple(REGISTRY) == THEOREM_IDS


def run_check(theorem: str, grid: str | None = None) -> VerificationReport:
    """Run one registered check over a grid string (or its defaults)."""
    if theorem not in REGISTRY:
        raise ParameterError(
            f"unknown theorem id {theorem!r}; known ids: {', '.join(THEOREM_IDS)}"
        )
    t0 = time.perf_counter()
    results, notes = REGISTRY[theorem](parse_grid(grid))
    total_ms = int(1000 * (time.perf_counter() - t0))
    return VerificationReport(
        theorem=theorem,
        grid=grid if grid else "default",
        results=tuple(results),
        notes=tuple(notes),
        total_ms=total_ms,
    )
