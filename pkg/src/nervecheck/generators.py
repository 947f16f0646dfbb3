"""Parametric families of nerves: cycles, cross-polytopes, subdivided graphs,
the Dra subdivision of 2-complexes, a Möbius-band surface nerve and the
staged 3-ball triangulations."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from .complex import (
    ComplexError,
    Face,
    Graph,
    SimplicialComplex,
    complete_bipartite_graph,
    complete_graph,
    simplex,
)

STAGES = ("s1", "s2", "s3", "s4", "s5", "s6")


def cycle_complex(n: int) -> SimplicialComplex:
    """The n-cycle; for n = 3 the flag completion is a 2-simplex."""
    if n < 3:
        raise ComplexError("cycle needs at least 3 vertices")
    if n == 3:
        return SimplicialComplex.from_faces([(0, 1, 2)], {i: str(i) for i in range(3)}, "cycle3-flag")
    faces = [(i, (i + 1) % n) for i in range(n)]
    return SimplicialComplex.from_faces(faces, {i: str(i) for i in range(n)}, f"cycle{n}")


def cross_polytope(k: int) -> SimplicialComplex:
    """Boundary of the k-dimensional cross-polytope: the k-fold join of S^0."""
    if k < 1:
        raise ComplexError("cross-polytope dimension must be >= 1")
    faces = [tuple(2 * i + b for i, b in enumerate(bits)) for bits in itertools.product((0, 1), repeat=k)]
    labels = {2 * i + b: f"{'+-'[b]}{i}" for i in range(k) for b in (0, 1)}
    return SimplicialComplex.from_faces(faces, labels, f"cross-polytope{k}")


def subdivided_graph_complex(
    g: Graph, pieces: int | Mapping[tuple[int, int], int] = 2, name: str = ""
) -> SimplicialComplex:
    """Replace every edge of ``g`` by a path with the given number of edges.

    Branch vertices keep their ids; interior vertices get fresh ids above
    them.  Edges of a triangle left with one piece make the result non-flag.
    """
    offset = (max(g.vertices) + 1) if g.vertices else 0
    faces: list[Face] = [(v,) for v in g.vertices]
    labels = {v: g.label(v) for v in g.vertices}
    for u, v in g.sorted_edges():
        k = pieces if isinstance(pieces, int) else pieces.get((u, v), pieces.get((v, u), 1))
        if k < 1:
            raise ComplexError("an edge needs at least one piece")
        path = [u]
        for j in range(1, k):
            labels[offset] = f"{g.label(u)}-{g.label(v)}.{j}"
            path.append(offset)
            offset += 1
        path.append(v)
        faces += list(zip(path, path[1:]))
    return SimplicialComplex.from_faces(faces, labels, name)


def subdivided_k5(pieces: int = 2) -> SimplicialComplex:
    g = complete_graph(5)
    g = Graph(g.vertices, g.edges, {i: "abcde"[i] for i in range(5)})
    return subdivided_graph_complex(g, pieces, f"subdivided-k5-{pieces}")


def subdivided_k33(pieces: int = 2) -> SimplicialComplex:
    g = complete_bipartite_graph(3, 3)
    g = Graph(g.vertices, g.edges, {i: ("a0", "a1", "a2", "b0", "b1", "b2")[i] for i in range(6)})
    return subdivided_graph_complex(g, pieces, f"subdivided-k33-{pieces}")


# -- Dra subdivision ----------------------------------------------------------


@dataclass(frozen=True)
class DraMaps:
    """Vertex bookkeeping of one Dra subdivision step."""

    midpoint: Mapping[tuple[int, int], int]
    interior: Mapping[tuple[Face, int], int]


def dra_subdivision_with_maps(c: SimplicialComplex) -> tuple[SimplicialComplex, DraMaps]:
    if c.dim > 2:
        raise ComplexError("Dra subdivision is defined for complexes of dimension <= 2")
    next_id = (max(c.vertices) + 1) if c.vertices else 0
    labels = {v: c.label(v) for v in c.vertices}
    mid: dict[tuple[int, int], int] = {}
    for a, b in c.faces(1):
        mid[(a, b)] = next_id
        labels[next_id] = f"m({c.label(a)},{c.label(b)})"
        next_id += 1

    def m(x: int, y: int) -> int:
        return mid[(x, y) if x < y else (y, x)]

    interior: dict[tuple[Face, int], int] = {}
    faces: list[Face] = [(v,) for v in c.vertices]
    covered_edges: set[tuple[int, int]] = set()
    for tri in c.faces(2):
        a, b, cc = tri
        tl = ",".join(c.label(x) for x in tri)
        for corner in tri:
            interior[(tri, corner)] = next_id
            labels[next_id] = f"i({c.label(corner)};{tl})"
            next_id += 1
        g, h, i = (interior[(tri, x)] for x in tri)
        d, e, f = m(b, cc), m(cc, a), m(a, b)
        faces += [
            (a, g, e), (a, g, f), (b, h, f), (b, h, d), (cc, i, d),
            (cc, i, e), (g, h, f), (h, i, d), (i, g, e), (g, h, i),
        ]
        covered_edges.update(((a, b), (a, cc), (b, cc)))
    for a, b in c.faces(1):
        if (a, b) not in covered_edges:
            faces += [(a, mid[(a, b)]), (mid[(a, b)], b)]
    out = SimplicialComplex.from_faces(faces, labels, f"dra({c.name})" if c.name else "")
    return out, DraMaps(mid, interior)


def dra_subdivision(c: SimplicialComplex) -> SimplicialComplex:
    """Halve every edge and replace each triangle by the ten-triangle pattern."""
    return dra_subdivision_with_maps(c)[0]


def dra_path(path: list[int], maps: DraMaps) -> list[int]:
    """Image of an edge path under one Dra step (midpoints inserted)."""
    out = [path[0]]
    for a, b in zip(path, path[1:]):
        out += [maps.midpoint[(a, b) if a < b else (b, a)], b]
    return out


# -- surfaces -----------------------------------------------------------------

RP2_6_FACES = (
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6),
)


def rp2_6() -> SimplicialComplex:
    """The six-vertex minimal triangulation of the real projective plane."""
    faces = [tuple(v - 1 for v in f) for f in RP2_6_FACES]
    return SimplicialComplex.from_faces(faces, {i: str(i + 1) for i in range(6)}, "rp2-6")


def moebius_k5_nerve() -> tuple[SimplicialComplex, Graph]:
    """Projective plane minus one triangle, with a K5 on vertices 1..5.

    Every edge of the projective plane lies in two triangles, so removing a
    single triangle leaves no lonely edge and keeps the full K6 1-skeleton.
    """
    faces = [tuple(v - 1 for v in f) for f in RP2_6_FACES if f != (2, 4, 6)]
    c = SimplicialComplex.from_faces(faces, {i: str(i + 1) for i in range(6)}, "moebius-k5")
    k5 = Graph.from_edges(itertools.combinations(range(5), 2), labels={i: str(i + 1) for i in range(5)})
    return c, k5


# -- the staged 3-ball ----------------------------------------------------------


@dataclass(frozen=True)
class DiskVertices:
    """Vertex ids of the staged disk, indexed by equator position."""

    n: int
    north: int
    south: int
    e: tuple[int, ...]
    u: tuple[int, ...]
    l: tuple[int, ...]
    m: tuple[int, ...]
    w: tuple[int, ...]

    @property
    def size(self) -> int:
        return 4 * self.n


def disk_vertices(n: int) -> DiskVertices:
    k = 4 * n
    rng = iter(range(2 + 5 * k))
    north, south = next(rng), next(rng)
    e, u, l, m, w = (tuple(next(rng) for _ in range(k)) for _ in range(5))
    return DiskVertices(n, north, south, e, u, l, m, w)


def north_selected(i: int) -> bool:
    """Whether the stage-5 simplex at equator vertex i sits on the north side.

    The pattern around the equator is N, N, S, S repeated.
    """
    return i % 4 in (0, 1)


def disk_triangulation(n: int) -> SimplicialComplex:
    """Six-stage flag triangulation of the 3-ball on a 4n-cycle equator.

    Vertices: poles N, S; equator e_i; apexes u_i (north) and l_i (south)
    of the stage-2 simplices over the equator edge e_i e_{i+1}; m_i, the new
    vertex of the stage-4 suspension over that edge; w_i, the new vertex of
    the stage-5 simplex at e_i.  Indices are taken mod 4n.
    """
    if n < 2:
        raise ComplexError("the disk family starts at n = 2")
    dv = disk_vertices(n)
    k = dv.size
    N, S, e, u, l, m, w = dv.north, dv.south, dv.e, dv.u, dv.l, dv.m, dv.w
    nxt = lambda i: (i + 1) % k  # noqa: E731
    prv = lambda i: (i - 1) % k  # noqa: E731
    tags: dict[Face, str] = {}

    def add(stage: str, *vs: int) -> None:
        f = tuple(sorted(vs))
        if f in tags:
            raise AssertionError(f"simplex {f} generated twice")
        tags[f] = stage

    for i in range(k):
        add("s1", N, S, e[i], e[nxt(i)])
    for i in range(k):
        add("s2", N, e[i], e[nxt(i)], u[i])
        add("s2", S, e[i], e[nxt(i)], l[i])
    for i in range(k):
        add("s3", N, e[i], u[prv(i)], u[i])
        add("s3", S, e[i], l[prv(i)], l[i])
    for i in range(k):
        add("s4", e[i], e[nxt(i)], m[i], u[i])
        add("s4", e[i], e[nxt(i)], m[i], l[i])
    for i in range(k):
        apex = u if north_selected(i) else l
        add("s5", e[i], apex[prv(i)], apex[i], w[i])
    for i in range(k):
        apex = u if north_selected(i) else l
        add("s6", e[i], apex[i], m[i], w[i])
        add("s6", e[i], apex[prv(i)], m[prv(i)], w[i])

    labels = {N: "N", S: "S"}
    for i in range(k):
        labels[e[i]] = f"e{i}"
        labels[u[i]] = f"u{i}"
        labels[l[i]] = f"l{i}"
        labels[m[i]] = f"m{i}"
        labels[w[i]] = f"w{i}"
    c = SimplicialComplex.from_faces(tags, labels, f"disk3-{n}", tags)
    if len(c.maximal_faces) != len(tags):
        raise AssertionError("a stage simplex is contained in another")
    return c


def disk_k33_branches(n: int) -> tuple[Graph, dict[tuple[int, int], list[int]]]:
    """A K3,3 subdivision in the disk: the stage-6 zigzag cycle, the axis and
    four 2-paths through pole apexes.

    Returns K3,3 on branch ids {N, m0, m4} x {S, m2, m6} (the poles joined
    by the undivided axis) and the path of each edge.
    """
    dv = disk_vertices(n)
    k = dv.size
    N, S, m, w, u, l = dv.north, dv.south, dv.m, dv.w, dv.u, dv.l

    def zig(i: int, steps: int) -> list[int]:
        # m_i - w_{i+1} - m_{i+1} - ... along the stage-6 cycle
        path = [m[i % k]]
        for _ in range(steps):
            i += 1
            path += [w[i % k], m[i % k]]
        return path

    # apexes free of stage-5 simplices: u_i for i = 2 mod 4, l_i for i = 0 mod 4
    a1, a2 = m[0], m[4]
    b1, b2 = m[2], m[6]
    paths = {
        (N, S): [N, S],
        (N, b1): [N, u[2], b1],
        (N, b2): [N, u[6], b2],
        (a1, S): [a1, l[0], S],
        (a2, S): [a2, l[4], S],
        (a1, b1): zig(0, 2),
        (b1, a2): zig(2, 2),
        (a2, b2): zig(4, 2),
        (b2, a1): zig(6, k - 6),
    }
    g = Graph.from_edges(paths.keys())
    return g, {(min(a, b), max(a, b)): (pth if a < b else pth[::-1]) for (a, b), pth in paths.items()}


# -- boundary / externality ---------------------------------------------------


def boundary_complex(c: SimplicialComplex) -> SimplicialComplex:
    """Codimension-one faces lying in exactly one top-dimensional face.

    Intended for pure complexes (manifolds with boundary)."""
    d = c.dim
    if d < 1:
        return SimplicialComplex.empty()
    count: Counter[Face] = Counter()
    for f in c.faces(d):
        for sub in itertools.combinations(f, d):
            count[sub] += 1
    bd = [f for f, k in count.items() if k == 1]
    return SimplicialComplex.from_faces(bd, {v: c.label(v) for f in bd for v in f})


def externality(c: SimplicialComplex, face: Face, boundary: SimplicialComplex | None = None) -> str:
    """'external' if the face lies in the boundary complex, else 'internal'."""
    bd = boundary if boundary is not None else boundary_complex(c)
    if tuple(sorted(face)) not in c.face_set:
        return "unknown"
    return "external" if bd.has_face(face) else "internal"


def stage_counts(c: SimplicialComplex) -> dict[str, int]:
    counts = Counter(c.stage_tags.values())
    return {s: counts.get(s, 0) for s in sorted(counts)}


def stage_edges(c: SimplicialComplex, stage: str) -> set[tuple[int, int]]:
    """Edges first introduced by simplices of the given stage."""
    order = {s: i for i, s in enumerate(STAGES)}
    first: dict[tuple[int, int], str] = {}
    for f, s in sorted(c.stage_tags.items(), key=lambda fs: order.get(fs[1], 99)):
        for e in itertools.combinations(f, 2):
            first.setdefault(e, s)
    return {e for e, s in first.items() if s == stage}


def family(name: str, n: int | None = None) -> SimplicialComplex:
    """Look up a generator by CLI family name."""
    if name == "cycle":
        return cycle_complex(n or 5)
    if name == "cross-polytope":
        return cross_polytope(n or 3)
    if name == "subdivided-k5":
        return subdivided_k5(n or 2)
    if name == "subdivided-k33":
        return subdivided_k33(n or 2)
    if name == "disk3":
        return disk_triangulation(n or 2)
    if name == "moebius-k5":
        return moebius_k5_nerve()[0]
    if name == "rp2":
        return rp2_6()
    if name == "simplex":
        return simplex(n if n is not None else 2).with_name(f"simplex-{n if n is not None else 2}")
    raise ComplexError(f"unknown family {name!r}")


FAMILIES = ("cycle", "cross-polytope", "subdivided-k5", "subdivided-k33", "disk3", "moebius-k5", "rp2", "simplex")
