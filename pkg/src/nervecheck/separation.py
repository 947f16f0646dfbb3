"""Inseparability of flag complexes and lonely-edge detection.

Separation by a full subcomplex F is decided on the full subcomplex spanned
by the vertices outside F, which is a deformation retract of |c| minus |F|.
A set separates when what remains has at least two nonempty components.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .complex import ComplexError, Face, SimplicialComplex, connected_components

KINDS = ("disconnected", "nonadjacent-pair", "simplex", "simplex-suspension")


@dataclass(frozen=True)
class SeparationWitness:
    kind: str
    vertex_set: tuple[int, ...]
    components: tuple[tuple[int, ...], ...] = ()


@dataclass(frozen=True)
class SeparationVerdict:
    inseparable: bool
    witness: SeparationWitness | None = None


def _components(adj: Mapping[int, frozenset[int]], removed: set[int]) -> list[list[int]]:
    return connected_components((v for v in adj if v not in removed), adj)


def _articulation_points(adj: Mapping[int, frozenset[int]], removed: set[int]) -> set[int]:
    """Cut vertices of the graph induced on the vertices not in ``removed``."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cut: set[int] = set()
    t = 0
    for root in sorted(adj):
        if root in removed or root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w in removed or w == parent:
                    continue
                if w in disc:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                else:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p == root:
                    root_children += 1
                elif low[v] >= disc[p]:
                    cut.add(p)
        if root_children >= 2:
            cut.add(root)
    return cut


def separating_vertices(adj: Mapping[int, frozenset[int]], removed: set[int]) -> tuple[set[int], list[list[int]]]:
    """Vertices v outside ``removed`` with removed ∪ {v} separating.

    Also returns the components left by ``removed`` alone.
    """
    comps = _components(adj, removed)
    if len(comps) >= 3:
        return {v for comp in comps for v in comp}, comps
    if len(comps) == 2:
        return {v for comp in comps for v in comp if len(comp) > 1}, comps
    if not comps:
        return set(), comps
    return _articulation_points(adj, removed), comps


def _witness(kind: str, vs: Iterable[int], adj: Mapping[int, frozenset[int]]) -> SeparationWitness:
    removed = set(vs)
    comps = _components(adj, removed)
    return SeparationWitness(kind, tuple(sorted(removed)), tuple(tuple(c) for c in comps))


def find_separating_pair(c: SimplicialComplex) -> tuple[int, int] | None:
    adj = c.adjacency
    for u in c.vertices:
        seps, _ = separating_vertices(adj, {u})
        cands = sorted(v for v in seps if v > u and v not in adj[u])
        if cands:
            return (u, cands[0])
    return None


def find_separating_simplex(c: SimplicialComplex) -> Face | None:
    adj = c.adjacency
    cut = _articulation_points(adj, set())
    if cut:
        return (min(cut),)
    for f in c.all_faces():
        if len(f) > 1 and len(_components(adj, set(f))) >= 2:
            return f
    return None


def find_separating_suspension(c: SimplicialComplex) -> tuple[Face, int, int] | None:
    """Least (σ, u, v) with u, v non-adjacent in lk(σ) and σ∪{u,v} separating.

    In a flag complex the full subcomplex on σ∪{u,v} is then the suspension
    of σ, so no isomorphism test is needed.
    """
    adj = c.adjacency
    for sigma in c.all_faces():
        common = set.intersection(*(set(adj[x]) for x in sigma)) - set(sigma)
        for u in sorted(common):
            partners = [v for v in common if v > u and v not in adj[u]]
            if not partners:
                continue
            seps, _ = separating_vertices(adj, set(sigma) | {u})
            hits = sorted(v for v in partners if v in seps)
            if hits:
                return sigma, u, hits[0]
    return None


def is_inseparable(c: SimplicialComplex) -> SeparationVerdict:
    """Run the four separation clauses in order and return the first witness."""
    adj = c.adjacency
    comps = _components(adj, set())
    if len(comps) >= 2:
        return SeparationVerdict(False, SeparationWitness("disconnected", (), tuple(tuple(x) for x in comps)))
    pair = find_separating_pair(c)
    if pair is not None:
        return SeparationVerdict(False, _witness("nonadjacent-pair", pair, adj))
    face = find_separating_simplex(c)
    if face is not None:
        return SeparationVerdict(False, _witness("simplex", face, adj))
    susp = find_separating_suspension(c)
    if susp is not None:
        sigma, u, v = susp
        return SeparationVerdict(False, _witness("simplex-suspension", set(sigma) | {u, v}, adj))
    return SeparationVerdict(True)


def lonely_edges(c: SimplicialComplex) -> list[tuple[int, int]]:
    """Edges lying in no triangle."""
    if c.dim > 2:
        raise ComplexError("lonely edges are defined for complexes of dimension <= 2")
    covered = {e for t in c.faces(2) for e in itertools.combinations(t, 2)}
    return [e for e in c.faces(1) if e not in covered]


# -- independent model through the barycentric subdivision -------------------


def subdivision_complement_components(c: SimplicialComplex, removed: SimplicialComplex) -> int:
    """Number of components of |c| minus |removed| for any subcomplex.

    Uses the full subcomplex of the barycentric subdivision on the
    barycenters of faces not in ``removed``; only the 1-skeleton matters
    for connectivity, and two faces are joined there iff one contains the
    other.
    """
    keep = [f for f in c.all_faces() if f not in removed.face_set]
    keep_set = set(keep)
    adj: dict[Face, set[Face]] = {f: set() for f in keep}
    for f in keep:
        for k in range(1, len(f)):
            for sub in itertools.combinations(f, k):
                if sub in keep_set:
                    adj[f].add(sub)
                    adj[sub].add(f)
    return len(connected_components(keep, adj))


def point_set_separates(c: SimplicialComplex, points: Iterable[int]) -> bool:
    """Whether removing the given vertices (as points) disconnects |c|."""
    pts = SimplicialComplex.from_faces([(p,) for p in points])
    return subdivision_complement_components(c, pts) >= 2


def has_separating_vertex_pair(c: SimplicialComplex) -> bool:
    """Some one or two vertices, removed as points, disconnect |c|."""
    vs = c.vertices
    if any(point_set_separates(c, [v]) for v in vs):
        return True
    return any(point_set_separates(c, p) for p in itertools.combinations(vs, 2))

