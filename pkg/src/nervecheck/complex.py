"""Finite abstract simplicial complexes, flag completions of graphs and the
structural predicates used on nerves (flagness, no-square, fullness, links,
joins).

Vertex ids are plain integers.  Complexes read from files get dense ids in
input order; derived complexes (full subcomplexes, links, complements) keep
the ids of the complex they came from so witnesses can be reported in terms
of the original vertices.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

Face = tuple[int, ...]


class ComplexError(ValueError):
    """Raised for malformed complexes or invalid arguments to complex operations."""


def _normalize_face(face: Iterable[int]) -> Face:
    f = tuple(sorted(set(face)))
    if not f:
        raise ComplexError("empty face")
    return f


def _maximal(faces: Iterable[Face]) -> tuple[Face, ...]:
    # sort by size descending so any superset is seen before its subsets
    uniq = sorted(set(faces), key=lambda f: (-len(f), f))
    kept: list[Face] = []
    kept_sets: list[frozenset[int]] = []
    by_vertex: dict[int, list[int]] = defaultdict(list)
    for f in uniq:
        fs = frozenset(f)
        candidates = by_vertex.get(f[0], ())
        if any(fs <= kept_sets[i] for i in candidates):
            continue
        idx = len(kept)
        kept.append(f)
        kept_sets.append(fs)
        for v in f:
            by_vertex[v].append(idx)
    return tuple(sorted(kept))


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on integer vertices."""

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    labels: Mapping[int, str] = field(default_factory=dict)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, int]],
        vertices: Iterable[int] = (),
        labels: Mapping[int, str] | None = None,
    ) -> "Graph":
        es: set[tuple[int, int]] = set()
        vs = set(vertices)
        for u, v in edges:
            if u == v:
                raise ComplexError(f"loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in es:
                raise ComplexError(f"multi-edge {e}")
            es.add(e)
            vs.update(e)
        return cls(tuple(sorted(vs)), frozenset(es), dict(labels or {}))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(n) for v, n in adj.items()}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency.get(u, ())

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def induced(self, vs: Iterable[int]) -> "Graph":
        keep = set(vs)
        return Graph(
            tuple(sorted(keep)),
            frozenset(e for e in self.edges if e[0] in keep and e[1] in keep),
            {v: l for v, l in self.labels.items() if v in keep},
        )

    def relabel(self, mapping: Mapping[int, int]) -> "Graph":
        return Graph.from_edges(
            ((mapping[u], mapping[v]) for u, v in self.edges),
            (mapping[v] for v in self.vertices),
        )

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph(|V|={len(self.vertices)}, |E|={len(self.edges)})"


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(itertools.combinations(range(n), 2), range(n))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(((i, a + j) for i in range(a) for j in range(b)), range(a + b))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(((i, (i + 1) % n) for i in range(n)), range(n))


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """A finite abstract simplicial complex stored by its maximal faces.

    ``stage_tags`` maps a face to a free-form tag (the disk generator uses it
    to record the construction stage of every simplex).
    """

    maximal_faces: tuple[Face, ...]
    labels: Mapping[int, str] = field(default_factory=dict)
    name: str = ""
    stage_tags: Mapping[Face, str] = field(default_factory=dict)

    @classmethod
    def from_faces(
        cls,
        faces: Iterable[Iterable[int]],
        labels: Mapping[int, str] | None = None,
        name: str = "",
        stage_tags: Mapping[Face, str] | None = None,
    ) -> "SimplicialComplex":
        normalized = [_normalize_face(f) for f in faces]
        return cls(_maximal(normalized), dict(labels or {}), name, dict(stage_tags or {}))

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls(())

    def validate(self) -> None:
        """Check the stored invariants (used after deserialization)."""
        sets = [frozenset(f) for f in self.maximal_faces]
        for f in self.maximal_faces:
            if list(f) != sorted(set(f)) or not f:
                raise ComplexError(f"face {f} is not strictly sorted")
        for i, a in enumerate(sets):
            for j, b in enumerate(sets):
                if i != j and a <= b:
                    raise ComplexError(f"face {self.maximal_faces[i]} is not maximal")
        for face in self.stage_tags:
            if face not in self.face_set:
                raise ComplexError(f"tag attached to missing face {face}")

    # -- face lattice ---------------------------------------------------

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.maximal_faces for v in f}))

    @cached_property
    def face_set(self) -> frozenset[Face]:
        out: set[Face] = set()
        for f in self.maximal_faces:
            for k in range(1, len(f) + 1):
                out.update(itertools.combinations(f, k))
        return frozenset(out)

    @cached_property
    def faces_by_dim(self) -> tuple[tuple[Face, ...], ...]:
        if not self.maximal_faces:
            return ()
        top = max(len(f) for f in self.maximal_faces)
        buckets: list[list[Face]] = [[] for _ in range(top)]
        for f in self.face_set:
            buckets[len(f) - 1].append(f)
        return tuple(tuple(sorted(b)) for b in buckets)

    @property
    def dim(self) -> int:
        return len(self.faces_by_dim) - 1

    def faces(self, k: int) -> tuple[Face, ...]:
        if 0 <= k < len(self.faces_by_dim):
            return self.faces_by_dim[k]
        return ()

    def all_faces(self) -> list[Face]:
        """Nonempty faces sorted by dimension then lexicographically."""
        return [f for bucket in self.faces_by_dim for f in bucket]

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.faces_by_dim)

    def has_face(self, face: Iterable[int]) -> bool:
        f = tuple(sorted(set(face)))
        return not f or f in self.face_set

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.faces(1):
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(n) for v, n in adj.items()}

    def one_skeleton(self) -> Graph:
        return Graph(self.vertices, frozenset(self.faces(1)), dict(self.labels))

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def face_label(self, face: Iterable[int]) -> str:
        return "{" + ",".join(self.label(v) for v in face) + "}"

    @property
    def is_empty(self) -> bool:
        return not self.maximal_faces

    def is_simplex(self) -> bool:
        return len(self.maximal_faces) == 1

    def with_name(self, name: str) -> "SimplicialComplex":
        return SimplicialComplex(self.maximal_faces, self.labels, name, self.stage_tags)

    def relabel(self, mapping: Mapping[int, int]) -> "SimplicialComplex":
        """Rename vertex ids through ``mapping`` (labels follow their vertices)."""
        faces = [tuple(sorted(mapping[v] for v in f)) for f in self.maximal_faces]
        labels = {mapping[v]: l for v, l in self.labels.items() if v in mapping}
        tags = {tuple(sorted(mapping[v] for v in f)): t for f, t in self.stage_tags.items()}
        return SimplicialComplex(_maximal(faces), labels, self.name, tags)

    def compact(self) -> "SimplicialComplex":
        """Relabel to dense ids 0..n-1 in the current vertex order, keeping
        every vertex's displayed label (including default ones)."""
        out = self.relabel({v: i for i, v in enumerate(self.vertices)})
        return SimplicialComplex(out.maximal_faces, {i: self.label(v) for i, v in enumerate(self.vertices)}, out.name, out.stage_tags)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.maximal_faces == other.maximal_faces

    def __hash__(self) -> int:
        return hash(self.maximal_faces)

    def __repr__(self) -> str:
        nm = f"{self.name!r}, " if self.name else ""
        return f"SimplicialComplex({nm}f={self.f_vector()})"


# -- constructors ----------------------------------------------------------


def cliques_up_to(adj: Mapping[int, frozenset[int]], max_size: int) -> Iterable[Face]:
    """Yield every clique (as a sorted tuple) of size 1..max_size."""

    def extend(clique: Face, cand: list[int]):
        yield clique
        if len(clique) == max_size:
            return
        for i, v in enumerate(cand):
            yield from extend(clique + (v,), [w for w in cand[i + 1 :] if w in adj[v]])

    for v in sorted(adj):
        yield from extend((v,), sorted(w for w in adj[v] if w > v))


def _maximal_cliques(g: Graph) -> list[Face]:
    import networkx as nx

    return [tuple(sorted(c)) for c in nx.find_cliques(g.to_networkx())]


def from_graph(g: Graph, name: str = "") -> SimplicialComplex:
    """Flag complex whose simplices are the cliques of ``g``."""
    for u, v in g.edges:
        if u == v:
            raise ComplexError("graph has a loop")
    faces = _maximal_cliques(g) if g.vertices else []
    return SimplicialComplex.from_faces(faces, g.labels, name)


def simplex(k: int, offset: int = 0) -> SimplicialComplex:
    """The full k-simplex on vertices offset..offset+k."""
    return SimplicialComplex.from_faces([range(offset, offset + k + 1)], name=f"simplex({k})")


# -- flagness and hyperbolicity ---------------------------------------------


@dataclass(frozen=True)
class FlagReport:
    is_flag: bool
    violations: tuple[Face, ...]

    def by_kind(self) -> dict[str, list[Face]]:
        kinds = {3: "empty triangle", 4: "empty K4"}
        out: dict[str, list[Face]] = defaultdict(list)
        for v in self.violations:
            out[kinds.get(len(v), f"empty K{len(v)}")].append(v)
        return dict(out)


def validate_flag(c: SimplicialComplex) -> FlagReport:
    """Report the 1-skeleton cliques that span no simplex.

    Only cliques up to size dim+2 need to be examined: any larger unspanned
    clique contains an unspanned one of size dim+2.
    """
    if c.is_empty:
        return FlagReport(True, ())
    bound = c.dim + 2
    faces = c.face_set
    violations = []
    for q in cliques_up_to(c.adjacency, bound):
        if len(q) >= 3 and q not in faces:
            # report minimal violations only
            if all(sub in faces for sub in itertools.combinations(q, len(q) - 1)):
                violations.append(q)
    violations.sort(key=lambda f: (len(f), f))
    return FlagReport(not violations, tuple(violations))


def has_empty_square(c: SimplicialComplex) -> tuple[int, int, int, int] | None:
    """Return (a, b, c, d) spanning an induced 4-cycle a-b-c-d-a, or None.

    Scans, for every non-adjacent pair {a, c}, the common neighbours for a
    non-adjacent pair {b, d}.  The lexicographically least witness is
    returned.
    """
    adj = c.adjacency
    best = None
    for a in c.vertices:
        na = adj[a]
        for cc in c.vertices:
            if cc <= a or cc in na:
                continue
            common = sorted(na & adj[cc])
            for i, b in enumerate(common):
                for d in common[i + 1 :]:
                    if d not in adj[b]:
                        w = (a, b, cc, d)
                        if best is None or w < best:
                            best = w
                        break
                if best is not None and best[0] == a and best[1] == b:
                    break
        if best is not None:
            return best
    return best


def full_subcomplex(c: SimplicialComplex, vs: Iterable[int]) -> SimplicialComplex:
    """All faces of ``c`` whose vertices lie in ``vs``."""
    keep = set(vs)
    unknown = keep - set(c.vertices)
    if unknown:
        raise ComplexError(f"unknown vertex ids {sorted(unknown)}")
    pieces = []
    for f in c.maximal_faces:
        g = tuple(v for v in f if v in keep)
        if g:
            pieces.append(g)
    labels = {v: l for v, l in c.labels.items() if v in keep}
    tags = {f: t for f, t in c.stage_tags.items() if set(f) <= keep}
    return SimplicialComplex(_maximal(pieces), labels, c.name, tags)


def is_subcomplex(c: SimplicialComplex, sub: SimplicialComplex) -> bool:
    return all(f in c.face_set for f in sub.maximal_faces)


def is_full(c: SimplicialComplex, sub: SimplicialComplex) -> bool:
    """True iff ``sub`` coincides with the full subcomplex of ``c`` on its vertices."""
    if not is_subcomplex(c, sub):
        raise ComplexError("not a subcomplex")
    return full_subcomplex(c, sub.vertices) == sub


def link(c: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    """Faces t disjoint from s with t ∪ s a face of c."""
    sf = tuple(sorted(set(s)))
    if sf and sf not in c.face_set:
        raise ComplexError(f"{sf} is not a face")
    ss = set(sf)
    pieces = []
    for f in c.maximal_faces:
        if ss <= set(f):
            rest = tuple(v for v in f if v not in ss)
            if rest:
                pieces.append(rest)
    labels = {v: l for v, l in c.labels.items()}
    return SimplicialComplex(_maximal(pieces), {v: labels[v] for p in pieces for v in p if v in labels})


def join(a: SimplicialComplex, b: SimplicialComplex, name: str = "") -> SimplicialComplex:
    """Simplicial join; b's vertex ids are shifted past a's."""
    shift = (max(a.vertices) + 1) if a.vertices else 0
    bmap = {v: v + shift - (min(b.vertices) if b.vertices else 0) for v in b.vertices}
    b2 = b.relabel(bmap)
    if a.is_empty:
        faces = list(b2.maximal_faces)
    elif b2.is_empty:
        faces = list(a.maximal_faces)
    else:
        faces = [fa + fb for fa in a.maximal_faces for fb in b2.maximal_faces]
    labels = dict(a.labels)
    labels.update(b2.labels)
    tags = dict(a.stage_tags)
    tags.update(b2.stage_tags)
    return SimplicialComplex.from_faces(faces, labels, name, tags)


def point(label: str = "apex") -> SimplicialComplex:
    return SimplicialComplex.from_faces([(0,)], {0: label})


def cone(c: SimplicialComplex, apex_label: str | None = None) -> SimplicialComplex:
    label = apex_label or _fresh_label(c, "apex")
    out = join(c, point(label), name=f"cone({c.name})" if c.name else "")
    return out


def suspension(c: SimplicialComplex) -> SimplicialComplex:
    two_points = SimplicialComplex.from_faces([(0,), (1,)], {0: "north", 1: "south"})
    return join(c, two_points, name=f"susp({c.name})" if c.name else "")


def _fresh_label(c: SimplicialComplex, base: str) -> str:
    used = {c.label(v) for v in c.vertices}
    if base not in used:
        return base
    i = 1
    while f"{base}{i}" in used:
        i += 1
    return f"{base}{i}"


def euler_characteristic(c: SimplicialComplex) -> int:
    return sum((-1) ** k * n for k, n in enumerate(c.f_vector()))


def connected_components(vertices: Iterable[int], adj: Mapping[int, Iterable[int]]) -> list[list[int]]:
    """Components of the graph induced on ``vertices``."""
    keep = set(vertices)
    seen: set[int] = set()
    comps = []
    for s in sorted(keep):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in keep and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(c: SimplicialComplex) -> bool:
    return len(connected_components(c.vertices, c.adjacency)) <= 1


def barycentric_subdivision(c: SimplicialComplex) -> tuple[SimplicialComplex, dict[int, Face]]:
    """First barycentric subdivision; returns the complex and the map
    new vertex -> face of ``c`` it is the barycenter of."""
    faces = c.all_faces()
    index = {f: i for i, f in enumerate(faces)}
    chains = []
    for top in c.maximal_faces:
        for perm in itertools.permutations(top):
            chain = tuple(index[tuple(sorted(perm[: k + 1]))] for k in range(len(perm)))
            chains.append(chain)
    sd = SimplicialComplex.from_faces(chains, {i: c.face_label(f) for f, i in index.items()})
    return sd, {i: f for f, i in index.items()}
