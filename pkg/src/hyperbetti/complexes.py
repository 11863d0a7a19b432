"""Simplicial complexes as facet lists over bitmask ground sets.

The two constructions used throughout are the independence complex of a
hypergraph (faces = sets containing no edge) and, for d-uniform input,
the clique-style complex whose faces are the sets all of whose
d-subsets are edges.  Everything is exact and pure Python.

Conventions: a complex with no faces at all is *void* (``facets`` is
empty); the complex whose only face is the empty set has ``facets ==
{0}``.  The ground set is carried explicitly so restriction and
Alexander duality are unambiguous.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .bitsets import bits_of, contains, k_submasks, max_antichain, min_antichain, submasks
from .errors import ParameterError, PreconditionError, SizeBudgetError
from .hypergraph import Hypergraph, canonical_json


@dataclass(frozen=True)
class SimplicialComplex:
    n_vertices: int
    facets: frozenset[int]
    vertices: int = -1  # ground-set mask; -1 means all ambient vertices

    def __post_init__(self) -> None:
        if not 0 <= self.n_vertices <= 63:
            raise ParameterError("vertex count must be between 0 and 63")
        full = (1 << self.n_vertices) - 1
        if self.vertices == -1:
            object.__setattr__(self, "vertices", full)
        if self.vertices & ~full:
            raise ParameterError("ground-set mask outside ambient range")
        if not isinstance(self.facets, frozenset):
            object.__setattr__(self, "facets", frozenset(self.facets))
        fl = sorted(self.facets)
        for i, a in enumerate(fl):
            if a & ~self.vertices:
                raise ParameterError("facet uses a vertex outside the ground set")
            for b in fl[i + 1 :]:
                if contains(a, b) or contains(b, a):
                    raise ParameterError("facets must be mutually incomparable")

    # -- structure ----------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        """True for the complex whose only face is the empty set."""
        return self.facets == frozenset({0})

    @property
    def dim(self) -> int | None:
        """Dimension, or None for the void complex.  Empty complex: -1."""
        if self.is_void:
            return None
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({f.bit_count() for f in self.facets}) <= 1

    def has_face(self, face: int) -> bool:
        return any(contains(f, face) for f in self.facets)

    def facet_list(self) -> list[tuple[int, ...]]:
        return sorted(tuple(bits_of(f)) for f in self.facets)

    # -- serialization ------------------------------------------------

    def to_json_obj(self) -> dict:
        obj: dict = {
            "n": self.n_vertices,
            "facets": [list(t) for t in self.facet_list()],
            "void": self.is_void,
        }
        if self.vertices != (1 << self.n_vertices) - 1:
            obj["vertices"] = bits_of(self.vertices)
        return obj

    def to_json(self) -> str:
        return canonical_json(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SimplicialComplex":
        from .bitsets import mask_of

        n = int(obj["n"])
        facets = frozenset(mask_of(f) for f in obj["facets"])
        if not facets and obj.get("void") is False:
            facets = frozenset({0})
        vertices = mask_of(obj["vertices"]) if "vertices" in obj else -1
        return cls(n, facets, vertices)

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        return cls.from_json_obj(json.loads(text))

    @classmethod
    def from_faces(cls, n: int, faces, vertices: int = -1) -> "SimplicialComplex":
        """Build from any generating family of faces (maximal ones kept)."""
        from .bitsets import mask_of

        masks = [f if isinstance(f, int) else mask_of(f) for f in faces]
        return cls(n, max_antichain(masks), vertices)


# -- transversals and nonfaces ---------------------------------------


def minimal_transversals(masks) -> frozenset[int]:
    """All minimal sets meeting every mask in the family.

    Incremental dualization: fold one mask in at a time, keeping the
    family of minimal partial transversals reduced.  An empty family has
    the empty set as its unique transversal; a family containing the
    empty mask has none.
    """
    trans: frozenset[int] = frozenset({0})
    for m in sorted(set(masks)):
        if m == 0:
            return frozenset()
        hit = [t for t in trans if t & m]
        missed = [t for t in trans if not t & m]
        grown = set(hit)
        for t in missed:
            mm = m
            while mm:
                low = mm & -mm
                grown.add(t | low)
                mm ^= low
        trans = min_antichain(grown)
    return trans


def minimal_nonfaces(c: SimplicialComplex) -> frozenset[int]:
    """Minimal subsets of the ground set that are not faces.

    A set misses every facet exactly when it meets every facet
    complement, so these are the minimal transversals of the
    complemented facet family.
    """
    return minimal_transversals(c.vertices & ~f for f in c.facets)


def independence_complex(h: Hypergraph) -> SimplicialComplex:
    """Faces are the sets containing no edge of h."""
    facets = frozenset(
        h.vertices & ~t for t in minimal_transversals(h.edges)
    )
    return SimplicialComplex(h.n_vertices, facets, h.vertices)


def clique_complex(h: Hypergraph, d: int) -> SimplicialComplex:
    """Faces are the vertex sets all of whose d-subsets are edges.

    Sets with fewer than d vertices are faces unconditionally, so the
    facets are the maximal d-wise-complete sets together with any
    (d-1)-set lying in no edge.
    """
    if d < 2:
        raise ParameterError("edge size d must be at least 2")
    if not h.is_uniform(d):
        raise PreconditionError(f"clique-style complex needs {d}-uniform input")
    m = h.vertices.bit_count()
    if m < d:
        return SimplicialComplex(h.n_vertices, frozenset({h.vertices}), h.vertices)
    # grow cliques upward from the edges
    cliques: set[int] = set(h.edges)
    frontier = set(h.edges)
    while frontier:
        nxt: set[int] = set()
        for c in frontier:
            rest = h.vertices & ~c
            while rest:
                low = rest & -rest
                rest ^= low
                cand = c | low
                if cand in cliques or cand in nxt:
                    continue
                if all(
                    (sub | low) in h.edges
                    for sub in k_submasks(c, d - 1)
                ):
                    nxt.add(cand)
        cliques |= nxt
        frontier = nxt
    small = [
        s
        for s in k_submasks(h.vertices, d - 1)
        if not any(contains(e, s) for e in h.edges)
    ]
    return SimplicialComplex(
        h.n_vertices, max_antichain(list(cliques) + small), h.vertices
    )


# -- operations -------------------------------------------------------


def restrict(c: SimplicialComplex, vmask: int) -> SimplicialComplex:
    """Induced subcomplex on a subset of the ground set (labels kept)."""
    if vmask & ~c.vertices:
        raise ParameterError("restriction set must lie inside the ground set")
    return SimplicialComplex(
        c.n_vertices, max_antichain(f & vmask for f in c.facets), vmask
    )


def link(c: SimplicialComplex, face: int) -> SimplicialComplex:
    """Link of a face: what can be added to it.  Void if face is absent."""
    carriers = [f for f in c.facets if contains(f, face)]
    return SimplicialComplex(
        c.n_vertices,
        max_antichain(f & ~face for f in carriers),
        c.vertices & ~face,
    )


def alexander_dual(c: SimplicialComplex) -> SimplicialComplex:
    """Complex whose faces are complements of the nonfaces of c.

    Its facets are the ground-set complements of the minimal nonfaces.
    The double dual returns the original complex.
    """
    facets = frozenset(c.vertices & ~m for m in minimal_nonfaces(c))
    return SimplicialComplex(c.n_vertices, facets, c.vertices)


def components(c: SimplicialComplex) -> list[frozenset[int]]:
    """Facet classes of the connectivity relation (shared vertices)."""
    remaining = set(c.facets)
    out: list[frozenset[int]] = []
    while remaining:
        seed = remaining.pop()
        comp = {seed}
        span = seed
        changed = True
        while changed:
            changed = False
            for f in list(remaining):
                if f & span or f == 0 == span:
                    remaining.discard(f)
                    comp.add(f)
                    span |= f
                    changed = True
        out.append(frozenset(comp))
    return out


def enumerate_faces(c: SimplicialComplex, budget: int = 1 << 22) -> dict[int, list[int]]:
    """All faces grouped by size.  Raises when the submask count Σ 2^|F|
    over facets exceeds the budget (the enumeration cost bound)."""
    cost = sum(1 << f.bit_count() for f in c.facets)
    if cost > budget:
        raise SizeBudgetError(
            f"face enumeration cost {cost} exceeds the face budget {budget}"
        )
    seen: set[int] = set()
    for f in c.facets:
        for sub in submasks(f):
            if sub in seen:
                continue
            seen.add(sub)
    by_size: dict[int, list[int]] = {}
    for face in seen:
        by_size.setdefault(face.bit_count(), []).append(face)
    return by_size


# -- skeleton strip / pad ---------------------------------------------


def strip_small_facets(c: SimplicialComplex, d: int) -> SimplicialComplex:
    """Drop facets smaller than d, keeping every vertex as a face.

    Inverse to pad_facets on clique-style complexes: the small facets
    thrown away there are exactly the (d-1)-sets the padding restores.
    """
    kept = [f for f in c.facets if f.bit_count() >= d]
    singles = [1 << v for v in bits_of(c.vertices)]
    base = max_antichain(kept + singles)
    if not base and not c.is_void:
        base = frozenset({0})
    return SimplicialComplex(c.n_vertices, base, c.vertices)


def pad_facets(c: SimplicialComplex, d: int) -> SimplicialComplex:
    """Adjoin the full (d-2)-skeleton of the ground simplex.

    Every set of fewer than d vertices becomes a face; larger faces are
    untouched.
    """
    m = c.vertices.bit_count()
    k = min(d - 1, m)
    fill = list(k_submasks(c.vertices, k))
    return SimplicialComplex(
        c.n_vertices, max_antichain(list(c.facets) + fill), c.vertices
    )


# -- quasi-forest leaf orders -----------------------------------------


def _is_leaf(facet: int, others: tuple[int, ...]) -> bool:
    if not others:
        return True
    best = max(others, key=lambda g: (facet & g).bit_count())
    joint = facet & best
    return all(contains(joint, facet & g) for g in others)


def quasi_forest_leaf_order(
    c: SimplicialComplex, max_facets: int = 14
) -> tuple[int, ...] | None:
    """An ordering whose every prefix ends in a leaf, or None.

    A facet is a leaf when one single other facet (a branch) swallows
    all its intersections.  The search peels leaves from the back with
    memoized dead ends, handling facet components independently.
    """
    if len(c.facets) > max_facets:
        raise SizeBudgetError(
            f"leaf-order search limited to {max_facets} facets, got {len(c.facets)}"
        )
    order: list[int] = []
    for comp in components(c):
        part = _leaf_order_component(tuple(sorted(comp)))
        if part is None:
            return None
        order.extend(part)
    return tuple(order)


@lru_cache(maxsize=None)
def _leaf_order_component(facets: tuple[int, ...]) -> tuple[int, ...] | None:
    if len(facets) <= 1:
        return facets
    for k, f in enumerate(facets):
        rest = facets[:k] + facets[k + 1 :]
        if _is_leaf(f, rest):
            head = _leaf_order_component(rest)
            if head is not None:
                return head + (f,)
    return None
