"""Planarity, weak minors, full (induced) edge subdivisions of K5 / K3,3 in
flag complexes, SG-non-planarity certificates and the witness graph whose
Ib-contraction recovers the certificate graph.
"""

from __future__ import annotations

import itertools
import json
import sys
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

import networkx as nx

from .complex import (
    Graph,
    SimplicialComplex,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    euler_characteristic,
    full_subcomplex,
)

Edge = tuple[int, int]
Path = tuple[int, ...]


def _e(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class BudgetExceeded(Exception):
    """Raised inside searches when the node budget runs out."""


# -- planarity ----------------------------------------------------------------


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: Mapping[int, tuple[int, ...]] | None = None  # clockwise rotation system
    kuratowski: Graph | None = None  # subdivision of K5 or K3,3


def is_planar(g: Graph) -> PlanarityResult:
    """Left-right planarity test; on failure returns a Kuratowski subgraph."""
    ng = g.to_networkx()
    planar, cert = nx.check_planarity(ng, counterexample=True)
    if planar:
        rotation = {v: tuple(cert.neighbors_cw_order(v)) for v in sorted(cert.nodes)}
        return PlanarityResult(True, embedding=rotation)
    return PlanarityResult(False, kuratowski=Graph.from_edges(cert.edges(), cert.nodes))


def kuratowski_type(sub: Graph) -> str:
    """'K5' or 'K3,3' for a subdivision of one of them."""
    branch = [v for v in sub.vertices if sub.degree(v) >= 3]
    return "K5" if len(branch) == 5 else "K3,3"


# -- contractions and weak minors ---------------------------------------------


def contract_edges(g: Graph, es: Iterable[Edge]) -> tuple[Graph, dict[int, int]]:
    """Contract ``es`` (loops dropped, parallels merged).

    Returns the contracted graph, whose vertices are the least original id
    of each class, and the map original vertex -> new vertex.
    """
    parent = {v: v for v in g.vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in es:
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    origin = {v: find(v) for v in g.vertices}
    new_edges = {_e(origin[u], origin[v]) for u, v in g.edges if origin[u] != origin[v]}
    return Graph.from_edges(new_edges, set(origin.values())), origin


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx())


def is_weak_minor(target: Graph, source: Graph, budget: int = 200_000) -> bool | None:
    """Whether contractions alone turn ``source`` into ``target``.

    Returns None when the search budget is exhausted before an answer.
    """
    nt, et = len(target.vertices), len(target.edges)
    if nt > len(source.vertices) or et > len(source.edges):
        return False
    tcomp = nx.number_connected_components(target.to_networkx()) if nt else 0
    if nt and nx.number_connected_components(source.to_networkx()) != tcomp:
        return False
    tdeg = sorted(target.degree(v) for v in target.vertices)
    seen: set[frozenset[Edge]] = set()
    count = 0

    def canon(g: Graph) -> frozenset[Edge]:
        return frozenset(g.edges) | frozenset((v, v) for v in g.vertices)

    def rec(g: Graph) -> bool:
        nonlocal count
        count += 1
        if count > budget:
            raise BudgetExceeded
        if len(g.edges) < et:
            return False
        if len(g.vertices) == nt:
            return sorted(g.degree(v) for v in g.vertices) == tdeg and is_isomorphic(g, target)
        for e in g.sorted_edges():
            h, _ = contract_edges(g, [e])
            key = canon(h)
            if key in seen:
                continue
            seen.add(key)
            if rec(h):
                return True
        return False

    try:
        return rec(source)
    except BudgetExceeded:
        return None


def hamiltonian_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All Hamiltonian cycles, each once: starts at the least vertex, and the
    second vertex is smaller than the last."""
    vs = g.vertices
    if len(vs) < 3:
        return []
    start = vs[0]
    out = []

    def rec(path: list[int], seen: set[int]) -> None:
        if len(path) == len(vs):
            if g.has_edge(path[-1], start) and path[1] < path[-1]:
                out.append(tuple(path))
            return
        for w in sorted(g.adjacency[path[-1]]):
            if w not in seen:
                seen.add(w)
                path.append(w)
                rec(path, seen)
                path.pop()
                seen.discard(w)

    rec([start], {start})
    return out


def cycle_edges(cycle: Sequence[int]) -> set[Edge]:
    return {_e(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}


# -- certificates ---------------------------------------------------------------


@dataclass(frozen=True)
class Chord:
    s_path: Path
    l_arc: Path


@dataclass(frozen=True)
class SgCertificate:
    """G (on host branch vertex ids), its Hamiltonian cycle D, the edge
    subdivision Γ, the cycle C realizing D and one (S, L) pair per chord."""

    g: Graph
    d: tuple[int, ...]
    gamma_map: Mapping[Edge, Path]
    c_vertices: tuple[int, ...]
    chords: tuple[Chord, ...]

    def undivided_edges(self) -> list[Edge]:
        return sorted(e for e, p in self.gamma_map.items() if len(p) == 2)

    def gamma_vertices(self) -> set[int]:
        return {v for p in self.gamma_map.values() for v in p}

    def to_json_dict(self, c: SimplicialComplex) -> dict:
        lab = c.label
        return {
            "g": {
                "vertices": [lab(v) for v in self.g.vertices],
                "edges": [[lab(u), lab(v)] for u, v in self.g.sorted_edges()],
            },
            "d": [lab(v) for v in self.d],
            "gamma_map": [
                {"edge": [lab(e[0]), lab(e[1])], "path": [lab(v) for v in self.gamma_map[e]]}
                for e in sorted(self.gamma_map)
            ],
            "c_vertices": [lab(v) for v in self.c_vertices],
            "chords": [
                {"s_path": [lab(v) for v in ch.s_path], "l_arc": [lab(v) for v in ch.l_arc]}
                for ch in self.chords
            ],
        }

    def dumps(self, c: SimplicialComplex) -> str:
        return json.dumps(self.to_json_dict(c), indent=1) + "\n"


class CertificateFormatError(ValueError):
    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("; ".join(problems))


def certificate_from_json(c: SimplicialComplex, data: dict) -> SgCertificate:
    """Parse the JSON mirror, reporting every malformed field."""
    ids = {c.label(v): v for v in c.vertices}
    problems: list[str] = []

    def vid(x, where: str) -> int:
        if x not in ids:
            problems.append(f"{where}: unknown vertex {x!r}")
            return -1
        return ids[x]

    def vlist(xs, where: str) -> tuple[int, ...]:
        if not isinstance(xs, list):
            problems.append(f"{where}: expected a list")
            return ()
        return tuple(vid(x, where) for x in xs)

    if not isinstance(data, dict):
        raise CertificateFormatError(["certificate must be a JSON object"])
    for key in ("g", "d", "gamma_map", "c_vertices", "chords"):
        if key not in data:
            problems.append(f"missing field {key!r}")
    if problems:
        raise CertificateFormatError(problems)
    gd = data["g"]
    gv = vlist(gd.get("vertices"), "g.vertices") if isinstance(gd, dict) else ()
    gedges: list[Edge] = []
    if isinstance(gd, dict) and isinstance(gd.get("edges"), list):
        for pair in gd["edges"]:
            if isinstance(pair, list) and len(pair) == 2:
                gedges.append((vid(pair[0], "g.edges"), vid(pair[1], "g.edges")))
            else:
                problems.append("g.edges: each edge needs two endpoints")
    else:
        problems.append("g: expected {vertices, edges}")
    d = vlist(data["d"], "d")
    gamma: dict[Edge, Path] = {}
    if isinstance(data["gamma_map"], list):
        for item in data["gamma_map"]:
            try:
                a, b = (vid(x, "gamma_map.edge") for x in item["edge"])
                gamma[(a, b)] = vlist(item["path"], "gamma_map.path")
            except (KeyError, TypeError, ValueError):
                problems.append("gamma_map: entries need 'edge' (2 vertices) and 'path'")
    else:
        problems.append("gamma_map: expected a list")
    cv = vlist(data["c_vertices"], "c_vertices")
    chords = []
    if isinstance(data["chords"], list):
        for i, item in enumerate(data["chords"]):
            try:
                chords.append(Chord(vlist(item["s_path"], f"chords[{i}].s_path"), vlist(item["l_arc"], f"chords[{i}].l_arc")))
            except (KeyError, TypeError):
                problems.append(f"chords[{i}]: needs 's_path' and 'l_arc'")
    else:
        problems.append("chords: expected a list")
    if problems:
        raise CertificateFormatError(problems)
    loops = [e for e in gedges if e[0] == e[1]]
    if loops:
        raise CertificateFormatError([f"g.edges: loop at {c.label(loops[0][0])}"])
    # keep multi-edges visible to the verifier instead of failing here
    g = Graph(tuple(sorted(set(gv))), frozenset(_e(*e) for e in gedges), {v: c.label(v) for v in gv})
    if len({_e(*e) for e in gedges}) != len(gedges) or len(set(gv)) != len(gv):
        g = Graph(g.vertices, g.edges, {**g.labels, -1: "multi"})
    oriented: dict[Edge, Path] = {}
    for (a, b), p in gamma.items():
        oriented[_e(a, b)] = p if a < b else tuple(reversed(p))
    return SgCertificate(g, d, oriented, cv, tuple(chords))


def load_certificate(c: SimplicialComplex, text: str) -> SgCertificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError([f"invalid JSON: {exc}"]) from exc
    return certificate_from_json(c, data)


CLAUSES = (
    "g-simple",
    "d-hamiltonian",
    "g-min-degree",
    "g-nonplanar",
    "gamma-paths",
    "gamma-disjoint",
    "c-concatenation",
    "c-full",
    "chords-match",
    "s-meets-c-at-endpoints",
    "s-length",
    "l-arc",
    "s-l-full",
)


@dataclass(frozen=True)
class CertificateVerdict:
    valid: bool
    failed: tuple[str, ...]
    messages: tuple[str, ...] = ()


def _is_induced_path_union(c: SimplicialComplex, edges: set[Edge]) -> bool:
    """Whether the 1-dimensional complex with these edges is full in c."""
    vs = {v for e in edges for v in e}
    sub = full_subcomplex(c, vs)
    return sub.dim <= 1 and set(sub.faces(1)) == edges


def _cyclic_arcs(cycle: Sequence[int], a: int, b: int) -> tuple[Path, Path]:
    """The two arcs of a cyclic sequence from a to b."""
    n = len(cycle)
    i, j = cycle.index(a), cycle.index(b)
    fwd = tuple(cycle[(i + k) % n] for k in range((j - i) % n + 1))
    bwd = tuple(cycle[(i - k) % n] for k in range((i - j) % n + 1))
    return fwd, bwd


def verify_sg_certificate(c: SimplicialComplex, cert: SgCertificate) -> CertificateVerdict:
    """Check every hypothesis of the embedding theorem; list failed clauses."""
    failed: list[str] = []
    msgs: list[str] = []

    def fail(clause: str, msg: str) -> None:
        if clause not in failed:
            failed.append(clause)
        msgs.append(f"{clause}: {msg}")

    g = cert.g
    vset = set(c.vertices)
    if -1 in g.labels or any(u == v for u, v in g.edges):
        fail("g-simple", "g has loops or repeated vertices/edges")
    if sorted(cert.d) != list(g.vertices) or len(cert.d) < 3:
        fail("d-hamiltonian", "d does not visit every vertex of g exactly once")
    elif not cycle_edges(cert.d) <= set(g.edges):
        fail("d-hamiltonian", "consecutive vertices of d are not adjacent in g")
    low = [v for v in g.vertices if g.degree(v) < 3]
    if low:
        fail("g-min-degree", f"vertices of degree < 3: {[c.label(v) for v in low]}")
    if not failed and is_planar(g).planar:
        fail("g-nonplanar", "g is planar")

    # Γ
    if set(cert.gamma_map) != set(g.edges):
        fail("gamma-paths", "gamma_map keys differ from the edges of g")
    interior_owner: dict[int, Edge] = {}
    for e, p in sorted(cert.gamma_map.items()):
        if len(p) < 2 or {p[0], p[-1]} != set(e):
            fail("gamma-paths", f"path for {e} does not join its endpoints")
            continue
        if any(v not in vset for v in p):
            fail("gamma-paths", f"path for {e} leaves the complex")
            continue
        if any(not c.has_face((x, y)) for x, y in zip(p, p[1:])):
            fail("gamma-paths", f"path for {e} uses a non-edge")
        if len(set(p)) != len(p):
            fail("gamma-paths", f"path for {e} is not simple")
        for v in p[1:-1]:
            if v in g.adjacency or v in interior_owner:
                fail("gamma-disjoint", f"vertex {c.label(v)} is shared by two paths")
            interior_owner[v] = e
    if failed:
        return CertificateVerdict(False, tuple(failed), tuple(msgs))

    # C
    expected: list[int] = []
    d = cert.d
    for i in range(len(d)):
        a, b = d[i], d[(i + 1) % len(d)]
        p = cert.gamma_map[_e(a, b)]
        p = p if p[0] == a else tuple(reversed(p))
        expected += list(p[:-1])
    if tuple(expected) != tuple(cert.c_vertices):
        fail("c-concatenation", "c_vertices is not the concatenation of the paths along d")
        return CertificateVerdict(False, tuple(failed), tuple(msgs))
    cyc = cert.c_vertices
    c_edges = cycle_edges(cyc)
    if not _is_induced_path_union(c, c_edges):
        fail("c-full", "the cycle C is not a full subcomplex")

    # chords
    d_edges = cycle_edges(d)
    chord_edges = sorted(set(g.edges) - d_edges)
    by_ends = {}
    for ch in cert.chords:
        if len(ch.s_path) >= 2:
            by_ends[_e(ch.s_path[0], ch.s_path[-1])] = ch
    if sorted(by_ends) != chord_edges or len(cert.chords) != len(chord_edges):
        fail("chords-match", "chords do not correspond one-to-one to the edges of g off d")
    cset = set(cyc)
    for i, ch in enumerate(cert.chords):
        s = ch.s_path
        if len(s) < 2:
            continue
        key = _e(s[0], s[-1])
        gp = cert.gamma_map.get(key)
        if gp is None or (tuple(s) != gp and tuple(reversed(s)) != gp):
            fail("chords-match", f"chord {i} is not the Γ-path of an edge of g")
        if set(s) & cset != {s[0], s[-1]}:
            fail("s-meets-c-at-endpoints", f"chord {i} meets C away from its endpoints")
        if len(s) < 3:
            fail("s-length", f"chord {i} has fewer than 2 edges")
        arc = tuple(ch.l_arc)
        if len(arc) < 2 or {arc[0], arc[-1]} != {s[0], s[-1]} or arc not in (
            _cyclic_arcs(cyc, arc[0], arc[-1]) if arc[0] in cset and arc[-1] in cset else ()
        ):
            fail("l-arc", f"l_arc of chord {i} is not an arc of C between the chord endpoints")
            continue
        union = {_e(x, y) for x, y in zip(s, s[1:])} | {_e(x, y) for x, y in zip(arc, arc[1:])}
        if not _is_induced_path_union(c, union):
            fail("s-l-full", f"S∪L of chord {i} is not a full subcomplex")
    return CertificateVerdict(not failed, tuple(failed), tuple(msgs))


def build_certificate(
    c: SimplicialComplex, g: Graph, gamma: Mapping[Edge, Path], d: Sequence[int]
) -> SgCertificate:
    """Assemble C and the chord arcs for a subdivision Γ and cycle D of g.

    For each chord the shorter arc of C is tried first, then the other.
    """
    gamma = {e: (p if p[0] == e[0] else tuple(reversed(p))) for e, p in gamma.items()}
    cyc: list[int] = []
    for i in range(len(d)):
        a, b = d[i], d[(i + 1) % len(d)]
        p = gamma[_e(a, b)]
        p = p if p[0] == a else tuple(reversed(p))
        cyc += list(p[:-1])
    chords = []
    for e in sorted(set(g.edges) - cycle_edges(d)):
        s = gamma[e]
        arcs = sorted(_cyclic_arcs(cyc, s[0], s[-1]), key=lambda a: (len(a), a))
        chosen = arcs[0]
        for arc in arcs:
            union = {_e(x, y) for x, y in zip(s, s[1:])} | {_e(x, y) for x, y in zip(arc, arc[1:])}
            if _is_induced_path_union(c, union):
                chosen = arc
                break
        chords.append(Chord(tuple(s), chosen))
    return SgCertificate(g, tuple(d), dict(gamma), tuple(cyc), tuple(chords))


# -- witness graph --------------------------------------------------------------


@dataclass(frozen=True)
class WitnessEdge:
    endpoints: tuple[tuple[int, int], tuple[int, int]]
    kind: str  # "Ia", "Ib" or "II"
    source: str


@dataclass(frozen=True)
class WitnessGraph:
    """Symbolic vertices <a|b> (ordered nerve vertex pairs) in cyclic order."""

    vertices: tuple[tuple[int, int], ...]
    cyclic_order: tuple[tuple[int, int], ...]
    edges: tuple[WitnessEdge, ...]

    def to_graph(self) -> tuple[Graph, dict[tuple[int, int], int]]:
        index = {v: i for i, v in enumerate(self.cyclic_order)}
        g = Graph.from_edges(
            ((index[e.endpoints[0]], index[e.endpoints[1]]) for e in self.edges), range(len(index))
        )
        return g, index

    def edges_of_kind(self, kind: str) -> list[WitnessEdge]:
        return [e for e in self.edges if e.kind == kind]


def build_embedding_witness(cert: SgCertificate) -> WitnessGraph:
    """Blocks of the branch vertices in D order; inside the block of x the
    points <x|y> are sorted by decreasing cyclic distance from x to y along C.
    Consecutive points of one block give Ib edges, consecutive blocks Ia
    edges, and each chord one II edge."""
    cyc = cert.c_vertices
    pos = {v: i for i, v in enumerate(cyc)}
    n = len(cyc)
    partners: dict[int, list[int]] = {x: [] for x in cert.d}
    chord_ends = []
    for ch in cert.chords:
        a, b = ch.s_path[0], ch.s_path[-1]
        partners[a].append(b)
        partners[b].append(a)
        chord_ends.append((a, b))
    blocks: list[list[tuple[int, int]]] = []
    for x in cert.d:
        ordered = sorted(partners[x], key=lambda y: (-((pos[y] - pos[x]) % n), y))
        blocks.append([(x, y) for y in ordered])
    order = tuple(p for b in blocks for p in b)
    edges: list[WitnessEdge] = []
    for bi, block in enumerate(blocks):
        for p, q in zip(block, block[1:]):
            edges.append(WitnessEdge((p, q), "Ib", f"block {bi}"))
    nb = len(blocks)
    for bi in range(nb):
        p, q = blocks[bi][-1], blocks[(bi + 1) % nb][0]
        edges.append(WitnessEdge((p, q), "Ia", f"blocks {bi}|{(bi + 1) % nb}"))
    for k, (a, b) in enumerate(chord_ends):
        edges.append(WitnessEdge(((a, b), (b, a)), "II", f"chord {k}"))
    return WitnessGraph(order, order, tuple(edges))


def witness_contraction(w: WitnessGraph) -> tuple[Graph, dict[int, int]]:
    """Contract the Ib edges; new vertices are relabelled to block owners."""
    g, index = w.to_graph()
    ib = [(index[e.endpoints[0]], index[e.endpoints[1]]) for e in w.edges_of_kind("Ib")]
    h, origin = contract_edges(g, ib)
    owner = {origin[index[v]]: v[0] for v in w.cyclic_order}
    return h.relabel(owner), owner


# -- planarity of nerves --------------------------------------------------------


def _surface_genus_zero(c: SimplicialComplex) -> bool | None:
    """For a connected pure 2-dimensional surface (possibly with boundary),
    whether it embeds in the sphere; None if c is not such a surface."""
    tris = c.faces(2)
    if c.dim != 2 or any(len(f) != 3 for f in c.maximal_faces):
        return None
    edge_tris: dict[Edge, list[tuple[int, ...]]] = {}
    for t in tris:
        for e in itertools.combinations(t, 2):
            edge_tris.setdefault(e, []).append(t)
    if any(len(ts) > 2 for ts in edge_tris.values()):
        return None
    # vertex links must be a single path or cycle
    for v in c.vertices:
        lk = [tuple(x for x in t if x != v) for t in tris if v in t]
        deg: dict[int, int] = {}
        for a, b in lk:
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        if any(k > 2 for k in deg.values()):
            return None
        adj: dict[int, set[int]] = {x: set() for x in deg}
        for a, b in lk:
            adj[a].add(b)
            adj[b].add(a)
        if len(connected_components(adj, adj)) != 1:
            return None
    # orientability by propagating triangle orientations
    orient: dict[tuple[int, ...], tuple[int, int, int]] = {}
    for start in tris:
        if start in orient:
            continue
        orient[start] = start
        queue = deque([start])
        while queue:
            t = queue.popleft()
            o = orient[t]
            directed = {(o[0], o[1]), (o[1], o[2]), (o[2], o[0])}
            for e in itertools.combinations(t, 2):
                for s in edge_tris[e]:
                    if s == t:
                        continue
                    x, y = (e[0], e[1]) if (e[0], e[1]) in directed else (e[1], e[0])
                    z = next(v for v in s if v not in e)
                    want = (y, x, z)  # opposite direction on the shared edge
                    if s in orient:
                        so = orient[s]
                        sd = {(so[0], so[1]), (so[1], so[2]), (so[2], so[0])}
                        if (y, x) not in sd:
                            return False
                    else:
                        orient[s] = want
                        queue.append(s)
    boundary_edges = [e for e, ts in edge_tris.items() if len(ts) == 1]
    badj: dict[int, set[int]] = {}
    for a, b in boundary_edges:
        badj.setdefault(a, set()).add(b)
        badj.setdefault(b, set()).add(a)
    holes = len(connected_components(badj, badj)) if badj else 0
    return euler_characteristic(c) == 2 - holes


def nerve_is_planar(c: SimplicialComplex) -> bool | None:
    """True if |c| certifiably embeds in the 2-sphere, False if it certifiably
    does not, None when neither is established here."""
    comps = connected_components(c.vertices, c.adjacency)
    verdicts = []
    for comp in comps:
        sub = full_subcomplex(c, comp)
        if sub.dim <= 1:
            verdicts.append(is_planar(sub.one_skeleton()).planar)
        elif sub.dim == 2:
            verdicts.append(_surface_genus_zero(sub))
        else:
            verdicts.append(None)
    if any(v is False for v in verdicts):
        # a non-planar graph inside the complex rules out any embedding
        return False
    if all(v is True for v in verdicts):
        return True
    return None


# -- full subdivision search ------------------------------------------------------


@dataclass
class SubdivisionResult:
    status: str  # "found", "none" or "inconclusive"
    branch: dict[int, int] = field(default_factory=dict)  # target vertex -> host vertex
    gamma: dict[Edge, Path] = field(default_factory=dict)  # target edge -> host path
    nodes: int = 0
    payload: object = None


class _Found(Exception):
    pass


class _SubdivisionSearch:
    """Backtracking search for an induced edge subdivision of ``target``.

    Invariant: the set ``used`` of host vertices induces exactly the edges of
    the partial subdivision.  A vertex may join a path only if its used
    neighbours are its predecessor (and, for the last interior vertex, the
    far endpoint).  Branch vertices adjacent to another branch vertex must
    be joined by an undivided edge of the target.
    """

    def __init__(
        self,
        c: SimplicialComplex,
        target: Graph,
        min_pieces: Mapping[Edge, int],
        accept: Callable[[dict[int, int], dict[Edge, Path]], object],
        budget: int,
        hint: Mapping[int, int] | None = None,
        pool: set[int] | None = None,
    ):
        self.adj = c.adjacency
        self.pool = pool
        self.t = target
        self.min = {e: min_pieces.get(e, 1) for e in target.edges}
        self.accept = accept
        self.budget = budget
        self.hint = dict(hint or {})
        self.nodes = 0
        self.phi: dict[int, int] = {}
        self.inv: dict[int, int] = {}
        self.used: set[int] = set()
        self.gamma: dict[Edge, Path] = {}
        self.result: object = None
        self.complete = True

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded

    def used_nbrs(self, x: int) -> set[int]:
        return self.adj[x] & self.used

    def run(self) -> SubdivisionResult:
        tv = sorted(self.t.vertices, key=lambda v: (-self.t.degree(v), v))
        first = next((v for v in tv if v in self.hint), tv[0])
        deg = self.t.degree(first)
        if first in self.hint:
            hosts = [self.hint[first]]
        else:
            hosts = sorted(
                (
                    v
                    for v in self.adj
                    if len(self.adj[v]) >= deg
                    and v not in self.hint.values()
                    and (self.pool is None or v in self.pool)
                ),
                key=lambda v: (-len(self.adj[v]), v),
            )
        try:
            for h in hosts:
                self.tick()
                self.place(first, h)
                self.step()
                self.unplace(first, h)
        except _Found:
            return SubdivisionResult("found", dict(self.phi), dict(self.gamma), self.nodes, self.result)
        except BudgetExceeded:
            return SubdivisionResult("inconclusive", nodes=self.nodes)
        return SubdivisionResult("none", nodes=self.nodes)

    # -- bookkeeping
    def place(self, t: int, h: int) -> None:
        self.phi[t] = h
        self.inv[h] = t
        self.used.add(h)

    def unplace(self, t: int, h: int) -> None:
        del self.phi[t]
        del self.inv[h]
        self.used.discard(h)

    def pending(self) -> list[Edge]:
        return [e for e in sorted(self.t.edges) if e not in self.gamma and e[0] in self.phi and e[1] in self.phi]

    def room_ok(self) -> bool:
        """Every placed branch vertex still has enough usable neighbours."""
        for t, h in self.phi.items():
            need = sum(1 for s in self.t.adjacency[t] if _e(t, s) not in self.gamma)
            if not need:
                continue
            free = 0
            for x in self.adj[h]:
                if x not in self.used and self.used_nbrs(x) == {h}:
                    free += 1
                elif x in self.inv and _e(t, self.inv[x]) not in self.gamma:
                    free += 1
                if free >= need:
                    break
            if free < need:
                return False
        return True

    # -- recursion
    def step(self) -> None:
        pend = self.pending()
        if pend:
            self.route_closing(pend[0])
            return
        if len(self.phi) == len(self.t.vertices):
            out = self.accept(dict(self.phi), dict(self.gamma))
            if out is not None:
                self.result = out
                raise _Found
            return
        if not self.room_ok():
            return
        unplaced = [t for t in self.t.vertices if t not in self.phi]
        t = min(unplaced, key=lambda v: (-sum(1 for s in self.t.adjacency[v] if s in self.phi), v))
        src = min(s for s in self.t.adjacency[t] if s in self.phi)
        self.route_extension(src, t)

    def route_closing(self, e: Edge) -> None:
        a, b = self.phi[e[0]], self.phi[e[1]]
        if b in self.adj[a]:
            return  # adjacent branch vertices are routed when placed
        dist = self.distances_to(b, {a})
        if a not in dist:
            return
        path = [a]
        minlen = self.min[e]

        def rec(x: int) -> None:
            self.tick()
            nbrs = sorted(
                (y for y in self.adj[x] if y in dist and y not in self.used),
                key=lambda y: (dist[y], y),
            )
            for y in nbrs:
                un = self.used_nbrs(y)
                if not un <= {x, b}:
                    continue
                path.append(y)
                self.used.add(y)
                if b in un:
                    if x in un and len(path) >= minlen:
                        path.append(b)
                        self.gamma[e] = tuple(path) if e[0] == self.inv[a] else tuple(reversed(path))
                        self.step()
                        del self.gamma[e]
                        path.pop()
                else:
                    rec(y)
                self.used.discard(y)
                path.pop()

        rec(a)

    def distances_to(self, b: int, extra: set[int]) -> dict[int, int]:
        """BFS distances to b through unused vertices whose used neighbours
        are only b (plus the start vertices in ``extra``)."""
        dist = {b: 0}
        queue = deque([b])
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if y in dist:
                    continue
                if y in extra:
                    dist[y] = dist[x] + 1
                    continue
                if y in self.used:
                    continue
                if not self.used_nbrs(y) <= {b} | extra:
                    continue
                dist[y] = dist[x] + 1
                queue.append(y)
        return dist

    def route_extension(self, s: int, t: int) -> None:
        """Route the edge (s, t) from phi[s] to a fresh host vertex for t."""
        a = self.phi[s]
        e = _e(s, t)
        need = self.t.degree(t)
        target_host = self.hint.get(t)
        forbidden = set(self.hint.values())
        max_len = len(self.adj)
        for length in range(max(1, self.min[e]), max_len + 1):
            path = [a]
            any_longer = False

            def rec(x: int) -> None:
                nonlocal any_longer
                self.tick()
                for y in sorted(self.adj[x]):
                    if y in self.used:
                        continue
                    un = self.used_nbrs(y)
                    if len(path) == length:
                        if un == {x} and y not in forbidden:
                            any_longer = True
                        if target_host is not None and y != target_host:
                            continue
                        if target_host is None and (
                            y in forbidden
                            or len(self.adj[y]) < need
                            or (self.pool is not None and y not in self.pool)
                        ):
                            continue
                        self.try_branch(t, y, path, un, e, s)
                    else:
                        if un != {x} or y in forbidden:
                            continue
                        path.append(y)
                        self.used.add(y)
                        rec(y)
                        self.used.discard(y)
                        path.pop()

            rec(a)
            if not any_longer:
                break

    def try_branch(self, t: int, y: int, path: list[int], un: set[int], e: Edge, s: int) -> None:
        x = path[-1]
        forced = []
        for z in un - {x}:
            tz = self.inv.get(z)
            if tz is None or (tz == s and len(path) > 1):
                return
            fe = _e(t, tz)
            if fe not in self.t.edges or fe in self.gamma or self.min[fe] > 1:
                return
            forced.append((fe, z))
        full = path + [y]
        self.place(t, y)
        self.gamma[e] = tuple(full) if e[0] == s else tuple(reversed(full))
        for fe, z in forced:
            self.gamma[fe] = (z, y) if self.inv[z] == fe[0] else (y, z)
        self.step()
        for fe, _ in forced:
            del self.gamma[fe]
        del self.gamma[e]
        self.unplace(t, y)


def find_full_subdivision(
    c: SimplicialComplex,
    target: Graph,
    min_pieces: Mapping[Edge, int] | int = 1,
    budget: int = 1_000_000,
    hint: Mapping[int, int] | None = None,
    accept: Callable[[dict[int, int], dict[Edge, Path]], object] | None = None,
    pool: Iterable[int] | None = None,
) -> SubdivisionResult:
    """Search for an edge subdivision of ``target`` that is a full subcomplex
    of ``c``, each edge e subdivided into at least ``min_pieces[e]`` pieces.

    ``hint`` fixes the host images of some target vertices and ``pool``
    restricts the remaining branch images.  ``accept`` may reject complete
    subdivisions (return None) to continue the search.
    """
    mp = {e: min_pieces for e in target.edges} if isinstance(min_pieces, int) else {
        _e(*k): v for k, v in min_pieces.items()
    }
    mp = {e: max(1, v) for e, v in mp.items()}

    def default_accept(phi, gamma):
        return _triangle_free(gamma) or None

    search = _SubdivisionSearch(
        c, target, mp, accept or default_accept, budget, hint, set(pool) if pool is not None else None
    )
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * len(c.vertices) + 1000))
    try:
        return search.run()
    finally:
        sys.setrecursionlimit(limit)


def _triangle_free(gamma: Mapping[Edge, Path]) -> bool:
    direct = [(p[0], p[-1]) for p in gamma.values() if len(p) == 2]
    adj: dict[int, set[int]] = {}
    for a, b in direct:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return not any(adj[a] & adj[b] for a, b in direct)


TARGETS = {"K3,3": complete_bipartite_graph(3, 3), "K5": complete_graph(5)}


@dataclass
class SgSearchResult:
    status: str  # "found", "none", "inconclusive"
    certificate: SgCertificate | None = None
    nodes: int = 0
    target: str | None = None


def high_degree_pool(c: SimplicialComplex, size: int) -> set[int]:
    """The ``size`` highest-degree vertices, extended by ties."""
    degs = sorted((len(c.adjacency[v]) for v in c.vertices), reverse=True)
    if len(degs) <= size:
        return set(c.vertices)
    cutoff = degs[size - 1]
    return {v for v in c.vertices if len(c.adjacency[v]) >= cutoff}


def search_sg_certificate(
    c: SimplicialComplex,
    budget: int = 2_000_000,
    targets: Sequence[str] = ("K3,3", "K5"),
    hint: Mapping[str, Mapping[int, int]] | None = None,
) -> SgSearchResult:
    """Look for an SG-non-planarity certificate built on a full subdivision
    of K3,3 or K5.

    A first pass only places branch vertices among the highest-degree
    vertices (cheap, and where branch points usually sit after
    subdivision); a second, exhaustive pass lifts that restriction.  Budget
    exhaustion gives 'inconclusive', never 'none'.
    """
    used = 0
    exhausted = {name: False for name in targets}
    phases = [(name, True) for name in targets] + [(name, False) for name in targets]
    for idx, (name, restricted) in enumerate(phases):
        remaining = budget - used
        if remaining <= 0:
            break
        share = budget // 40 if restricted else remaining // (len(phases) - idx)
        target = TARGETS[name]
        cycles = hamiltonian_cycles(target)

        def accept(phi: dict[int, int], gamma: dict[Edge, Path], target=target, cycles=cycles):
            if not _triangle_free(gamma):
                return None
            undivided = {e for e, p in gamma.items() if len(p) == 2}
            for cyc in cycles:
                if not undivided <= cycle_edges(cyc):
                    continue
                g = target.relabel(phi)
                host_gamma = {_e(phi[a], phi[b]): p for (a, b), p in gamma.items()}
                cert = build_certificate(c, g, host_gamma, [phi[v] for v in cyc])
                if verify_sg_certificate(c, cert).valid:
                    return cert
            return None

        pool = high_degree_pool(c, 2 * len(target.vertices)) if restricted else None
        res = find_full_subdivision(c, target, 1, max(share, 1), (hint or {}).get(name), accept, pool)
        used += res.nodes
        if res.status == "found":
            return SgSearchResult("found", res.payload, used, name)  # type: ignore[arg-type]
        if res.status == "none" and not restricted:
            exhausted[name] = True
    return SgSearchResult("none" if all(exhausted.values()) else "inconclusive", None, used)
