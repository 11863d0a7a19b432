"""Simple hypergraphs on bitmask vertex sets, plus the stock families.

A hypergraph here is *simple*: no edge contains another and every edge
has at least two vertices.  Vertices are labeled ``0..n_vertices-1`` and
every vertex set (edges included) is an int bitmask.  Instances are
immutable; all operations return new values.

An induced subhypergraph keeps the ambient labeling and records which
vertices are actually present in ``vertices``; for ordinary hypergraphs
that mask is simply all of ``0..n_vertices-1``.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial

from .bitsets import bits_of, contains, k_submasks, mask_of
from .errors import ParameterError, PreconditionError

MAX_VERTICES = 63


@dataclass(frozen=True)
class Hypergraph:
    """A simple hypergraph with an explicit ambient vertex set."""

    n_vertices: int
    edges: frozenset[int]
    vertices: int = -1  # bitmask of present vertices; -1 means all of them

    def __post_init__(self) -> None:
        if not 0 <= self.n_vertices <= MAX_VERTICES:
            raise ParameterError(
                f"vertex count must be between 0 and {MAX_VERTICES}, got {self.n_vertices}"
            )
        full = (1 << self.n_vertices) - 1
        if self.vertices == -1:
            object.__setattr__(self, "vertices", full)
        if self.vertices & ~full:
            raise ParameterError("vertex mask uses labels outside the ambient range")
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))
        for e in self.edges:
            if e & ~self.vertices:
                raise ParameterError("edge uses a vertex not present in the hypergraph")
            if e.bit_count() < 2:
                raise ParameterError("edges need at least two vertices")
        edge_list = sorted(self.edges)
        for a_i, a in enumerate(edge_list):
            for b in edge_list[a_i + 1 :]:
                if a & ~b == 0 or b & ~a == 0:
                    raise ParameterError("edges must form an antichain (simple hypergraph)")

    # -- basic views --------------------------------------------------

    @property
    def num_vertices(self) -> int:
        """Number of vertices actually present (not the ambient width)."""
        return self.vertices.bit_count()

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def uniform_degree(self) -> int | None:
        """Common edge size if the hypergraph is uniform, else None."""
        sizes = {e.bit_count() for e in self.edges}
        if len(sizes) == 1:
            return sizes.pop()
        return None

    def is_uniform(self, d: int) -> bool:
        """True when every edge has exactly d vertices (vacuous if edgeless)."""
        return all(e.bit_count() == d for e in self.edges)

    def edge_list(self) -> list[tuple[int, ...]]:
        """Edges as sorted vertex tuples, in lexicographic order."""
        return sorted(tuple(bits_of(e)) for e in self.edges)

    def vertex_list(self) -> list[int]:
        return bits_of(self.vertices)

    # -- serialization ------------------------------------------------

    def to_json_obj(self) -> dict:
        obj: dict = {"n": self.n_vertices, "edges": [list(t) for t in self.edge_list()]}
        if self.vertices != (1 << self.n_vertices) - 1:
            obj["vertices"] = self.vertex_list()
        return obj

    def to_json(self) -> str:
        return canonical_json(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Hypergraph":
        try:
            n = int(obj["n"])
            edges = frozenset(mask_of(e) for e in obj["edges"])
        except (KeyError, TypeError) as exc:
            raise ParameterError(f"malformed hypergraph object: {exc}") from exc
        vertices = mask_of(obj["vertices"]) if "vertices" in obj else -1
        return cls(n, edges, vertices)

    @classmethod
    def from_json(cls, text: str) -> "Hypergraph":
        return cls.from_json_obj(json.loads(text))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Hypergraph":
        """Build from an iterable of vertex iterables."""
        return cls(n, frozenset(mask_of(e) for e in edges))


def canonical_json(obj) -> str:
    """Serialize with sorted keys and no whitespace; byte-stable."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def canonical_hash(h: Hypergraph) -> str:
    """SHA-256 of the canonical serialization; stable across runs."""
    return hashlib.sha256(h.to_json().encode("ascii")).hexdigest()


@dataclass(frozen=True)
class FamilySpec:
    """Which stock family an instance came from, for closed-form routing."""

    kind: str  # complete | line | cycle | star | multipartite
    n: int | None = None
    d: int | None = None
    alpha: int | None = None
    parts: tuple[int, ...] | None = None

    def to_json_obj(self) -> dict:
        obj: dict = {"kind": self.kind}
        for key in ("n", "d", "alpha"):
            if getattr(self, key) is not None:
                obj[key] = getattr(self, key)
        if self.parts is not None:
            obj["parts"] = list(self.parts)
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> "FamilySpec":
        return cls(
            kind=obj["kind"],
            n=obj.get("n"),
            d=obj.get("d"),
            alpha=obj.get("alpha"),
            parts=tuple(obj["parts"]) if "parts" in obj else None,
        )


# -- families ---------------------------------------------------------


def make_complete(n: int, d: int) -> Hypergraph:
    """All d-subsets of n vertices; with n < d just n isolated vertices."""
    if d < 2:
        raise ParameterError("edge size d must be at least 2")
    if n < 0:
        raise ParameterError("vertex count must be nonnegative")
    edges = frozenset(mask_of(c) for c in combinations(range(n), d))
    return Hypergraph(n, edges)


def make_line(n: int, d: int, alpha: int) -> Hypergraph:
    """n edges of size d in a row, consecutive edges sharing alpha vertices.

    Edge k (1-based) occupies positions [(k-1)(d-alpha), (k-1)(d-alpha)+d);
    the total vertex count is n(d-alpha)+alpha.  Requires 2*alpha <= d so
    that non-consecutive edges are disjoint.
    """
    _check_overlap_params(n, d, alpha, min_edges=1)
    step = d - alpha
    edges = frozenset(mask_of(range(k * step, k * step + d)) for k in range(n))
    return Hypergraph(n * step + alpha, edges)


def make_cycle(n: int, d: int, alpha: int) -> Hypergraph:
    """n edges of size d arranged cyclically, adjacent overlap alpha.

    The last edge wraps around to share its final alpha vertices with the
    first edge; the total vertex count is n(d-alpha).
    """
    _check_overlap_params(n, d, alpha, min_edges=3)
    step = d - alpha
    total = n * step
    edges = frozenset(
        mask_of((k * step + t) % total for t in range(d)) for k in range(n)
    )
    return Hypergraph(total, edges)


def make_star_overlap(n: int, d: int, alpha: int) -> Hypergraph:
    """n edges of size d through one common core of alpha vertices.

    Pairwise intersections all equal the core, and d > alpha keeps a free
    vertex in every edge.  Total vertex count: alpha + n(d-alpha).
    """
    if n < 1:
        raise ParameterError("need at least one edge")
    if d < 2:
        raise ParameterError("edge size d must be at least 2")
    if not 1 <= alpha < d:
        raise ParameterError("core size alpha must satisfy 1 <= alpha < d")
    core = mask_of(range(alpha))
    step = d - alpha
    edges = frozenset(
        core | mask_of(range(alpha + k * step, alpha + (k + 1) * step))
        for k in range(n)
    )
    return Hypergraph(alpha + n * step, edges)


def make_multipartite(parts: tuple[int, ...] | list[int], d: int) -> Hypergraph:
    """Complete multipartite: d-subsets meeting at least two vertex classes."""
    if d < 2:
        raise ParameterError("edge size d must be at least 2")
    parts = tuple(parts)
    if not parts or any(p < 1 for p in parts):
        raise ParameterError("each part needs at least one vertex")
    n = sum(parts)
    part_masks = []
    start = 0
    for p in parts:
        part_masks.append(mask_of(range(start, start + p)))
        start += p
    edges = set()
    for c in combinations(range(n), d):
        m = mask_of(c)
        if not any(contains(pm, m) for pm in part_masks):
            edges.add(m)
    return Hypergraph(n, frozenset(edges))


def _check_overlap_params(n: int, d: int, alpha: int, min_edges: int) -> None:
    if n < min_edges:
        raise ParameterError(f"need at least {min_edges} edges, got {n}")
    if d < 2:
        raise ParameterError("edge size d must be at least 2")
    if alpha < 1:
        raise ParameterError("overlap alpha must be at least 1")
    if 2 * alpha > d:
        raise ParameterError("overlap must satisfy 2*alpha <= d")


# -- operations -------------------------------------------------------


def complement(h: Hypergraph, d: int) -> Hypergraph:
    """d-subsets of the present vertices that are not edges of h."""
    if not h.is_uniform(d):
        raise PreconditionError(f"complement needs a {d}-uniform hypergraph")
    edges = frozenset(
        m for m in k_submasks(h.vertices, d) if m not in h.edges
    )
    return Hypergraph(h.n_vertices, edges, h.vertices)


def induced(h: Hypergraph, vertices) -> Hypergraph:
    """Induced subhypergraph on a vertex subset, keeping original labels."""
    vmask = vertices if isinstance(vertices, int) else mask_of(vertices)
    if vmask & ~h.vertices:
        raise ParameterError("induced subset must consist of present vertices")
    edges = frozenset(e for e in h.edges if contains(vmask, e))
    return Hypergraph(h.n_vertices, edges, vmask)


def free_vertices(h: Hypergraph) -> dict[int, int]:
    """Map each edge to the mask of its vertices lying in no other edge."""
    out = {}
    for e in h.edges:
        others = 0
        for f in h.edges:
            if f != e:
                others |= f
        out[e] = e & ~others
    return out


def every_edge_has_free_vertex(h: Hypergraph) -> bool:
    return all(m != 0 for m in free_vertices(h).values())


# -- isomorphism (small instances only) -------------------------------


def are_isomorphic(a: Hypergraph, b: Hypergraph, max_n: int = 10) -> bool:
    """Brute-force isomorphism test on the present vertices.

    Only intended for small instances; guards at max_n present vertices.
    """
    if a.num_vertices != b.num_vertices or a.edge_count != b.edge_count:
        return False
    if sorted(e.bit_count() for e in a.edges) != sorted(e.bit_count() for e in b.edges):
        return False
    n = a.num_vertices
    if n > max_n:
        raise PreconditionError(f"isomorphism test limited to {max_n} vertices")
    va, vb = a.vertex_list(), b.vertex_list()
    target = frozenset(b.edges)
    # quick invariant: multiset of vertex degrees
    if _degree_profile(a, va) != _degree_profile(b, vb):
        return False
    for perm in permutations(vb):
        relabel = dict(zip(va, perm))
        mapped = frozenset(
            mask_of(relabel[v] for v in bits_of(e)) for e in a.edges
        )
        if mapped == target:
            return True
    return False


def _degree_profile(h: Hypergraph, vs: list[int]) -> list[int]:
    return sorted(sum(1 for e in h.edges if e >> v & 1) for v in vs)


def canonical_form(h: Hypergraph) -> tuple[int, tuple[int, ...]]:
    """A relabeling-invariant key: (vertex count, minimal edge multiset).

    Uses degree-refinement to cut the permutation search; falls back to
    the full symmetric group within refinement classes, so it is meant
    for small instances (the isomorphism-search tools that call it stay
    below ten vertices).
    """
    vs = h.vertex_list()
    n = len(vs)
    if n == 0:
        return (0, ())
    # iterative refinement by (degree, multiset of neighbor classes)
    cls = {v: 0 for v in vs}
    for _ in range(n):
        sig = {}
        for v in vs:
            neigh = sorted(
                tuple(sorted(cls[u] for u in bits_of(e) if u != v))
                for e in h.edges
                if e >> v & 1
            )
            sig[v] = (cls[v], tuple(neigh))
        order = sorted(set(sig.values()))
        new_cls = {v: order.index(sig[v]) for v in vs}
        if new_cls == cls:
            break
        cls = new_cls
    groups: dict[int, list[int]] = {}
    for v in vs:
        groups.setdefault(cls[v], []).append(v)
    blocks = [groups[c] for c in sorted(groups)]
    if _perm_budget(blocks) > 50000:
        raise PreconditionError("canonical form search too large for this instance")
    best: tuple[int, ...] | None = None
    for perm in _block_permutations(blocks):
        relabel = {v: i for i, v in enumerate(perm)}
        key = tuple(sorted(mask_of(relabel[v] for v in bits_of(e)) for e in h.edges))
        if best is None or key < best:
            best = key
    return (n, best if best is not None else ())


def _perm_budget(blocks: list[list[int]]) -> int:
    total = 1
    for b in blocks:
        total *= factorial(len(b))
    return total


def _block_permutations(blocks: list[list[int]]):
    """Permutations respecting the refinement classes, concatenated."""
    def rec(i: int, prefix: list[int]):
        if i == len(blocks):
            yield tuple(prefix)
            return
        for perm in permutations(blocks[i]):
            yield from rec(i + 1, prefix + list(perm))

    yield from rec(0, [])
