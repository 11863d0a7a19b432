"""Squarefree monomial ideals: colon quotients, degree-d quotient orders,
d-shellability of facet orders, and the dual bridge between the two.

Supports are vertex bitmasks throughout, matching the rest of the package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bitsets import bits_of, contains, mask_of, max_antichain, min_antichain
from .complexes import SimplicialComplex, minimal_nonfaces, minimal_transversals
from .errors import ParameterError, PreconditionError, SizeBudgetError
from .homology import QQ, FieldSpec
from .hypergraph import MAX_VERTICES, Hypergraph


@dataclass(frozen=True)
class MonomialIdeal:
    """A squarefree monomial ideal, kept as an ordered tuple of support masks.

    The zero ideal has no generators; a generator mask of 0 stands for the
    monomial 1, i.e. the unit ideal (which only ever shows up as a colon
    result, never as user input).
    """

    n_vertices: int
    generators: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n_vertices <= MAX_VERTICES:
            raise ParameterError(f"n_vertices out of range: {self.n_vertices}")
        gens = tuple(int(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        ring = self.ring_mask
        for g in gens:
            if g & ~ring:
                raise ParameterError(f"generator {g:b} uses variables beyond x{self.n_vertices}")
        if len(set(gens)) != len(gens):
            raise ParameterError("repeated generator support")

    @property
    def ring_mask(self) -> int:
        return (1 << self.n_vertices) - 1

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return 0 in self.generators

    @property
    def is_minimal(self) -> bool:
        """Whether the stored generators form the unique minimal generating set."""
        return min_antichain(self.generators) == frozenset(self.generators)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({g.bit_count() for g in self.generators}))

    @property
    def generator_degree(self) -> int | None:
        """Common generator degree, or None if mixed or zero."""
        degs = self.degrees
        return degs[0] if len(degs) == 1 else None

    def minimalize(self) -> "MonomialIdeal":
        keep = min_antichain(self.generators)
        return MonomialIdeal(self.n_vertices, tuple(g for g in self.generators if g in keep))

    @staticmethod
    def from_supports(n: int, supports: Iterable) -> "MonomialIdeal":
        gens = []
        for s in supports:
            gens.append(int(s) if isinstance(s, int) else mask_of(s))
        return MonomialIdeal(n, tuple(gens))

    def to_json_obj(self) -> dict:
        return {"n": self.n_vertices, "generators": [bits_of(g) for g in self.generators]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json_obj(obj: dict) -> "MonomialIdeal":
        return MonomialIdeal.from_supports(obj["n"], obj["generators"])

    @staticmethod
    def from_json(text: str) -> "MonomialIdeal":
        return MonomialIdeal.from_json_obj(json.loads(text))

    def export_text(self) -> str:
        """One generator per line as a product of variable names x1..xn."""
        lines = []
        for g in self.generators:
            lines.append("1" if g == 0 else "*".join(f"x{v + 1}" for v in bits_of(g)))
        return "\n".join(lines)


def edge_ideal(h: Hypergraph) -> MonomialIdeal:
    """The ideal generated by the edge supports, in sorted vertex order."""
    gens = sorted(h.edges, key=bits_of)
    return MonomialIdeal(h.n_vertices, tuple(gens))


def stanley_reisner_ideal(c: SimplicialComplex) -> MonomialIdeal:
    """Generators = minimal nonfaces; absent ground vertices contribute singletons."""
    if c.is_void:
        raise PreconditionError("void complex has no Stanley-Reisner presentation")
    gens = set(minimal_nonfaces(c))
    ring = (1 << c.n_vertices) - 1
    for v in bits_of(ring & ~c.vertices):
        gens.add(1 << v)
    return MonomialIdeal(c.n_vertices, tuple(sorted(gens, key=bits_of)))


def sr_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose nonfaces are exactly the supports in the ideal."""
    facets = frozenset(ideal.ring_mask & ~t for t in minimal_transversals(ideal.generators))
    return SimplicialComplex(ideal.n_vertices, facets)


def colon_by_generator(prefix: MonomialIdeal, m: int) -> MonomialIdeal:
    """Minimal generators of (prefix : x^m) for a squarefree support m.

    An empty prefix gives the zero ideal; a prefix member dividing x^m gives
    the unit ideal.
    """
    if prefix.is_zero:
        return MonomialIdeal(prefix.n_vertices, ())
    keep = min_antichain(g & ~m for g in prefix.generators)
    return MonomialIdeal(prefix.n_vertices, tuple(sorted(keep, key=bits_of)))


# --------------------------------------------------------------------------
# d-quotients


@dataclass(frozen=True)
class QuotientCertificate:
    """Witness that an ordering realizes d-quotients: the per-step colon generators."""

    d: int
    ordering: tuple[int, ...]
    colon_generators: tuple[tuple[int, ...], ...]

    def to_json_obj(self) -> dict:
        return {
            "d": self.d,
            "ordering": list(self.ordering),
            "colon_generators": [[bits_of(g) for g in step] for step in self.colon_generators],
        }


@dataclass(frozen=True)
class QuotientRefusal:
    step: int
    offending: int
    reason: str


def _check_ordering(length: int, ordering: Sequence[int]) -> tuple[int, ...]:
    order = tuple(int(i) for i in ordering)
    if sorted(order) != list(range(length)):
        raise ParameterError("ordering is not a permutation of the generators")
    return order


def _colon_step_flaw(ideal: MonomialIdeal, used: Sequence[int], s: int, d: int):
    """First offending colon generator at the step appending generator s, if any.

    Returns (colon gens, offending mask or None, reason).  A colon generator b
    with b | m_s covering the whole ring marks a generator sharing no variable
    with m_s; that step is refused so the dual facet ordering is refused at the
    matching point (its intersection with the earlier facets would be empty).
    """
    prefix = MonomialIdeal(ideal.n_vertices, tuple(ideal.generators[i] for i in used))
    m = ideal.generators[s]
    colon = colon_by_generator(prefix, m)
    for b in colon.generators:
        if b.bit_count() != d:
            return colon.generators, b, f"colon generator of degree {b.bit_count()}, expected {d}"
        if (b | m) == ideal.ring_mask:
            return (
                colon.generators,
                b,
                "every earlier generator covers all variables outside this one; "
                "the dual facet meets the earlier facets emptily",
            )
    return colon.generators, None, ""


def verify_d_quotients(
    ideal: MonomialIdeal, ordering: Sequence[int], d: int
) -> QuotientCertificate | QuotientRefusal:
    """Walk the ordering and accept iff every colon is minimally generated in degree d."""
    if not ideal.is_minimal:
        raise PreconditionError("generators must be a minimal generating set")
    if d < 1:
        raise ParameterError("d must be positive")
    order = _check_ordering(len(ideal.generators), ordering)
    steps: list[tuple[int, ...]] = []
    for pos in range(len(order)):
        if pos == 0:
            steps.append(())
            continue
        gens, bad, reason = _colon_step_flaw(ideal, order[:pos], order[pos], d)
        if bad is not None:
            return QuotientRefusal(pos, bad, reason)
        steps.append(gens)
    return QuotientCertificate(d, order, tuple(steps))


def search_d_quotients(
    ideal: MonomialIdeal, d: int, max_generators: int = 12, node_budget: int | None = None
) -> tuple[int, ...] | None:
    """Find an ordering with d-quotients, or prove that none exists.

    Whether a generator may be appended depends only on the *set* already
    placed, so the backtracking memoizes dead prefix sets.  Branching follows
    sorted support order for reproducible witnesses.
    """
    if not ideal.is_minimal:
        raise PreconditionError("generators must be a minimal generating set")
    t = len(ideal.generators)
    if t > max_generators:
        raise SizeBudgetError(f"{t} generators exceeds the search bound {max_generators}")
    if t == 0:
        return ()
    branch = sorted(range(t), key=lambda i: bits_of(ideal.generators[i]))
    dead: set[frozenset[int]] = set()
    nodes = 0

    def extend(used: list[int], used_set: frozenset[int]) -> tuple[int, ...] | None:
        nonlocal nodes
        if len(used) == t:
            return tuple(used)
        if used_set in dead:
            return None
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise SizeBudgetError("search node budget exhausted")
        for s in branch:
            if s in used_set:
                continue
            if used and _colon_step_flaw(ideal, used, s, d)[1] is not None:
                continue
            found = extend(used + [s], used_set | {s})
            if found is not None:
                return found
        dead.add(used_set)
        return None

    return extend([], frozenset())


# --------------------------------------------------------------------------
# d-shellings


@dataclass(frozen=True)
class ShellingCertificate:
    """Facet ordering plus, per step, the removable d-sets witnessing the order."""

    d: int
    ordering: tuple[int, ...]
    removed_sets: tuple[tuple[int, ...], ...]

    def to_json_obj(self) -> dict:
        return {
            "d": self.d,
            "ordering": [bits_of(f) for f in self.ordering],
            "removed_sets": [[bits_of(a) for a in step] for step in self.removed_sets],
        }


@dataclass(frozen=True)
class ShellingRefusal:
    step: int
    reason: str


def _purity_flaw(facet: int, earlier: Sequence[int], d: int) -> str:
    """Refusal reason for one step of the intersection-purity route, or ''.

    The boundary piece shared with the earlier facets must be generated by
    proper nonempty faces of dimension |F| - d - 1.
    """
    want = facet.bit_count() - d
    if want < 1:
        return f"facet of size {facet.bit_count()} leaves no room for proper degree-{d} removal"
    tops = max_antichain(facet & g for g in earlier)
    if tops == frozenset({0}):
        return "facet meets no earlier facet"
    for x in tops:
        if x.bit_count() != want:
            return f"shared boundary has a maximal face of size {x.bit_count()}, expected {want}"
    return ""


def _pairwise_step(facet: int, earlier: Sequence[int], d: int):
    """Witness d-sets for one step of the pairwise route, or a refusal reason.

    Candidate removals are the differences F \\ F_k of size exactly d; every
    earlier facet must avoid one of them entirely.
    """
    cands = sorted(
        {facet & ~g for g in earlier if (facet & ~g).bit_count() == d and (facet & ~g) != facet},
        key=bits_of,
    )
    for g in earlier:
        if not any(a & g == 0 for a in cands):
            return None, f"no removable d-set avoids the earlier facet {{{''.join(map(str, bits_of(g)))}}}"
    return tuple(cands), ""


def verify_d_shelling(
    c: SimplicialComplex, ordering: Sequence[int], d: int
) -> ShellingCertificate | ShellingRefusal:
    """Check a facet ordering for d-shellability.

    Runs the intersection-purity condition and the pairwise removable-set
    condition independently; the two are equivalent, and disagreement is an
    internal error.  The certificate carries the pairwise witnesses.
    """
    if c.is_void:
        raise PreconditionError("void complex has no facet ordering")
    if d < 1:
        raise ParameterError("d must be positive")
    order = tuple(int(f) for f in ordering)
    if frozenset(order) != c.facets or len(order) != len(c.facets):
        raise ParameterError("ordering must list every facet exactly once")
    steps: list[tuple[int, ...]] = []
    verdicts: list[tuple[int, str]] = []
    for pos in range(1, len(order)):
        reason_a = _purity_flaw(order[pos], order[:pos], d)
        witnesses, reason_b = _pairwise_step(order[pos], order[:pos], d)
        if bool(reason_a) != (witnesses is None):
            raise RuntimeError(
                f"internal disagreement between shelling routes at step {pos}: "
                f"{reason_a!r} vs {reason_b!r}"
            )
        if reason_a:
            verdicts.append((pos, reason_a))
            break
        steps.append(witnesses)
    if verdicts:
        return ShellingRefusal(*verdicts[0])
    return ShellingCertificate(d, order, ((),) + tuple(steps))


def search_d_shelling(
    c: SimplicialComplex, d: int, max_facets: int = 12, node_budget: int | None = None
) -> tuple[int, ...] | None:
    """Find a d-shelling order of the facets, or prove that none exists."""
    if c.is_void:
        raise PreconditionError("void complex has no facet ordering")
    facets = sorted(c.facets, key=bits_of)
    t = len(facets)
    if t > max_facets:
        raise SizeBudgetError(f"{t} facets exceeds the search bound {max_facets}")
    if t == 1:
        return (facets[0],)
    dead: set[frozenset[int]] = set()
    nodes = 0

    def extend(used: list[int], used_set: frozenset[int]) -> tuple[int, ...] | None:
        nonlocal nodes
        if len(used) == t:
            return tuple(used)
        if used_set in dead:
            return None
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise SizeBudgetError("search node budget exhausted")
        for f in facets:
            if f in used_set:
                continue
            if used and _purity_flaw(f, used, d):
                continue
            found = extend(used + [f], used_set | {f})
            if found is not None:
                return found
        dead.add(used_set)
        return None

    return extend([], frozenset())


# --------------------------------------------------------------------------
# Alexander-dual bridge


def extend_ring(ideal: MonomialIdeal, extra: int = 1) -> MonomialIdeal:
    """The same generators inside a ring with extra unused variables.

    Colon ideals are untouched, but the refusals for a colon generator
    covering everything outside its monomial can no longer fire, so
    quotient detection on the extension depends on the generators alone
    and not on the ambient ring.  On the dual side the extension is a
    cone, which removes the empty-intersection refusals the same way.
    """
    if extra < 0:
        raise ParameterError("cannot remove variables")
    return MonomialIdeal(ideal.n_vertices + extra, ideal.generators)


def duality_bridge(ideal: MonomialIdeal) -> SimplicialComplex:
    """Complex whose facets are the ring-complements of the generators.

    d-quotient orders of the ideal and d-shellings of this complex are the
    same permutations, with identical witness sets.
    """
    if not ideal.is_minimal:
        raise PreconditionError("generators must be a minimal generating set")
    ring = ideal.ring_mask
    return SimplicialComplex(ideal.n_vertices, frozenset(ring & ~g for g in ideal.generators))


def shelling_order_from_quotient(ideal: MonomialIdeal, ordering: Sequence[int]) -> tuple[int, ...]:
    order = _check_ordering(len(ideal.generators), ordering)
    ring = ideal.ring_mask
    return tuple(ring & ~ideal.generators[i] for i in order)


def quotient_order_from_shelling(ideal: MonomialIdeal, facet_order: Sequence[int]) -> tuple[int, ...]:
    ring = ideal.ring_mask
    pos = {g: i for i, g in enumerate(ideal.generators)}
    try:
        return tuple(pos[ring & ~f] for f in facet_order)
    except KeyError:
        raise ParameterError("facet order does not match the ideal's dual complex") from None


# --------------------------------------------------------------------------
# Betti splittings along a quotient order


@dataclass(frozen=True)
class SplittingReport:
    d: int
    gen_degree: int
    quotient_table_entries: tuple[tuple[int, int, int], ...]
    colon_totals: tuple[tuple[int, ...], ...]
    sum_identity_holds: bool
    graded_identity_holds: bool
    degree_disjointness_holds: bool


def betti_splitting_check(
    ideal: MonomialIdeal,
    ordering: Sequence[int],
    d_prime: int,
    field: FieldSpec = QQ,
) -> SplittingReport:
    """Verify the splitting consequences of a d-quotients order.

    Checks, against the homological oracle, that for 2 <= i <= pd the i-th
    total Betti number of R/I is the sum over steps s >= 2 of the (i-1)-st
    Betti number of R over the step's colon ideal (shifted by d_prime in j),
    and that each step's shifted colon table shares no degree with the table
    of the prefix ideal in homological degrees >= 2.
    """
    from .betti import hochster_betti

    if not ideal.is_zero and ideal.generator_degree != d_prime:
        raise PreconditionError(f"generators must all have degree {d_prime}")
    d0 = d_prime if len(ideal.generators) <= 1 else _common_colon_degree(ideal, ordering)
    cert = verify_d_quotients(ideal, ordering, d0)
    if isinstance(cert, QuotientRefusal):
        raise PreconditionError(f"ordering has no uniform-degree quotients: {cert.reason}")
    d = cert.d

    def table_of(mi: MonomialIdeal):
        return hochster_betti(
            sr_complex(mi), field, nonface_hint=tuple(sorted(mi.generators, key=bits_of))
        )

    full = table_of(ideal)
    pd = full.projective_dimension
    order = cert.ordering
    colon_tables = []
    prefix_tables = []
    for pos in range(1, len(order)):
        prefix = MonomialIdeal(ideal.n_vertices, tuple(ideal.generators[i] for i in order[:pos]))
        colon = colon_by_generator(prefix, ideal.generators[order[pos]])
        for b in colon.generators:
            assert contains(ideal.ring_mask, b) and b.bit_count() == d
        colon_tables.append(table_of(colon))
        prefix_tables.append(table_of(prefix))

    sum_ok = True
    for i in range(2, pd + 1):
        if full.total(i) != sum(t.total(i - 1) for t in colon_tables):
            sum_ok = False
    graded_ok = True
    degrees = {j for (_, j) in full.entries} | {
        j + d_prime for t in colon_tables for (_, j) in t.entries
    }
    for i in range(2, pd + 1):
        for j in degrees:
            lhs = full.beta(i, j)
            rhs = sum(t.beta(i - 1, j - d_prime) for t in colon_tables)
            if lhs != rhs:
                graded_ok = False
    disjoint_ok = True
    for colon_t, prefix_t in zip(colon_tables, prefix_tables):
        shifted = {(i, j + d_prime) for (i, j) in colon_t.entries if i >= 2}
        if shifted & {(i, j) for (i, j) in prefix_t.entries if i >= 2}:
            disjoint_ok = False

    max_i = max([pd] + [t.projective_dimension + 1 for t in colon_tables])
    return SplittingReport(
        d=d,
        gen_degree=d_prime,
        quotient_table_entries=tuple(sorted((i, j, b) for (i, j), b in full.entries.items())),
        colon_totals=tuple(
            tuple(t.total(i) for i in range(1, max_i + 1)) for t in colon_tables
        ),
        sum_identity_holds=sum_ok,
        graded_identity_holds=graded_ok,
        degree_disjointness_holds=disjoint_ok,
    )


def _common_colon_degree(ideal: MonomialIdeal, ordering: Sequence[int]) -> int:
    """The uniform degree of all colon generators along the ordering."""
    order = _check_ordering(len(ideal.generators), ordering)
    degs = set()
    for pos in range(1, len(order)):
        prefix = MonomialIdeal(ideal.n_vertices, tuple(ideal.generators[i] for i in order[:pos]))
        colon = colon_by_generator(prefix, ideal.generators[order[pos]])
        degs.update(b.bit_count() for b in colon.generators)
    if len(degs) != 1:
        raise PreconditionError(f"colon generators do not share one degree: {sorted(degs)}")
    return degs.pop()


def rsequence_colon_profile(
    ideal: MonomialIdeal, ordering: Sequence[int], d: int
) -> tuple[int, ...]:
    """Sizes of the per-step colon generating sets, after checking each is a
    regular sequence (pairwise-disjoint supports, all of degree d)."""
    cert = verify_d_quotients(ideal, ordering, d)
    if isinstance(cert, QuotientRefusal):
        raise PreconditionError(f"ordering does not give {d}-quotients: {cert.reason}")
    sizes = []
    for pos in range(1, len(cert.ordering)):
        gens = cert.colon_generators[pos]
        for a in range(len(gens)):
            for b in range(a + 1, len(gens)):
                if gens[a] & gens[b]:
                    raise PreconditionError(
                        f"colon generators at step {pos} share variables; not a regular sequence"
                    )
        sizes.append(len(gens))
    return tuple(sizes)


def rsequence_betti_closed_form(
    colon_sizes: Sequence[int], d: int, d_prime: int, n_vars: int
):
    """Closed-form graded table from the colon-size profile.

    Beyond the generator row, entries sit at j = i + d' - 1 + (i-1)(d-1) with
    value sum_s C(r_s, i-1).
    """
    from .betti import rsequence_betti_table

    return rsequence_betti_table(colon_sizes, d, d_prime, n_vars)


# --------------------------------------------------------------------------
# Links of d-shellable complexes


@dataclass(frozen=True)
class LinkSpotcheckReport:
    faces_checked: int
    all_pass: bool
    failures: tuple[tuple[int, int], ...]


def link_shellability_spotcheck(
    c: SimplicialComplex, ordering: Sequence[int], d: int, face_budget: int = 1 << 16
) -> LinkSpotcheckReport:
    """Verify that every link inherits the d-shelling through the induced order."""
    from .complexes import enumerate_faces

    base = verify_d_shelling(c, ordering, d)
    if isinstance(base, ShellingRefusal):
        raise PreconditionError(f"ordering is not a {d}-shelling: {base.reason}")
    faces = [f for fs in enumerate_faces(c, budget=face_budget).values() for f in fs]
    failures = []
    for face in faces:
        star = [g for g in ordering if contains(g, face)]
        link_facets = frozenset(g & ~face for g in star)
        link_c = SimplicialComplex(c.n_vertices, link_facets, vertices=c.vertices & ~face)
        verdict = verify_d_shelling(link_c, tuple(g & ~face for g in star), d)
        if isinstance(verdict, ShellingRefusal):
            failures.append((face, verdict.step))
    return LinkSpotcheckReport(len(faces), not failures, tuple(failures))
