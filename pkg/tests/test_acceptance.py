"""Acceptance suite.  Each test carries a ``criterion`` marker; the session
summary prints one PASS/FAIL line per criterion.  Tolerances are exact
unless a time bound is stated on the test."""

import itertools
import random
import time

import pytest

from nervecheck.cli import main
from nervecheck.cohomology import boundary_dimension, complement_complex, reduced_cohomology
from nervecheck.complex import (
    Graph,
    SimplicialComplex,
    cone,
    euler_characteristic,
    from_graph,
    has_empty_square,
    is_connected,
    is_full,
    validate_flag,
)
from nervecheck.coxeter import ball_sizes, sphere_sizes
from nervecheck.generators import (
    cross_polytope,
    cycle_complex,
    disk_triangulation,
    dra_path,
    dra_subdivision,
    dra_subdivision_with_maps,
    moebius_k5_nerve,
    subdivided_k5,
    subdivided_k33,
)
from nervecheck.io import write_complex
from nervecheck.nonplanarity import (
    build_embedding_witness,
    is_isomorphic,
    is_planar,
    search_sg_certificate,
    witness_contraction,
)
from nervecheck.report import run_check
from nervecheck.separation import has_separating_vertex_pair, is_inseparable, lonely_edges

from corpus import flag_corpus, random_flag_complex, two_complex_corpus
from oracles import barycentric_complement, has_kuratowski_subdivision, naive_sphere_sizes

DISK_SECONDS = 60
FAMILY_SECONDS = 300
MOEBIUS_SECONDS = 300


def criterion(n, title):
    return pytest.mark.criterion(n, title)


def cli_check(tmp_path, c, *extra):
    path = tmp_path / f"{c.name}.txt"
    write_complex(c, path)
    return main(["check", str(path), "--no-cache", *extra])


def _assert_certified(v):
    assert v.label == "menger-certified", {k: (r.status, r.detail) for k, r in v.checks.items()}


# -- 1 ---------------------------------------------------------------------------


@criterion(1, "disk_triangulation(2) is menger-certified")
def test_disk_is_certified(tmp_path, capsys):
    start = time.perf_counter()
    c = disk_triangulation(2)
    assert validate_flag(c).is_flag and c.dim == 3  # no 4-simplex, so no K5 clique
    assert has_empty_square(c) is None
    v = run_check(c, use_cache=False)
    _assert_certified(v)
    cert = v.certificate
    undivided = cert.undivided_edges()
    assert len(cert.g.vertices) == 6 and len(cert.g.edges) == 9
    assert [sorted(c.label(x) for x in e) for e in undivided] == [["N", "S"]]
    assert cli_check(tmp_path, c) == 0
    assert "conclusion: menger-certified" in capsys.readouterr().out
    assert time.perf_counter() - start < DISK_SECONDS


# -- 2 ---------------------------------------------------------------------------


@criterion(2, "disk_triangulation(n) is menger-certified for n = 3, 4")
@pytest.mark.parametrize("n", [3, 4])
def test_disk_family_is_certified(n):
    start = time.perf_counter()
    v = run_check(disk_triangulation(n), use_cache=False)
    _assert_certified(v)
    assert time.perf_counter() - start < FAMILY_SECONDS


# -- 3 ---------------------------------------------------------------------------


@criterion(3, "cone tower keeps flag and no-square; ball sizes add up")
def test_cone_tower():
    disk = disk_triangulation(2)
    tower = [disk, cone(disk), cone(cone(disk))]
    for c in tower[1:]:
        assert validate_flag(c).is_flag
        assert has_empty_square(c) is None
    for lower, upper in zip(tower, tower[1:]):
        b = ball_sizes(sphere_sizes(lower, 4))
        bc = ball_sizes(sphere_sizes(upper, 4))
        assert bc == [b[r] + (b[r - 1] if r else 0) for r in range(5)]


# -- 4 ---------------------------------------------------------------------------


@criterion(4, "Moebius K5 nerve after two Dra subdivisions is menger-certified")
def test_moebius_nerve(tmp_path, capsys):
    start = time.perf_counter()
    raw = moebius_k5_nerve()[0]
    assert euler_characteristic(raw) == 0
    assert lonely_edges(raw) == []
    assert reduced_cohomology(raw, 2).is_trivial
    c = dra_subdivision(dra_subdivision(raw)).with_name("moebius-dd")
    assert cli_check(tmp_path, c) == 0
    assert "conclusion: menger-certified" in capsys.readouterr().out
    assert time.perf_counter() - start < MOEBIUS_SECONDS


# -- 5 ---------------------------------------------------------------------------

CORPUS = two_complex_corpus()


def _edge_subsets(edges, rng):
    if len(edges) <= 10:
        for k in range(1, len(edges) + 1):
            yield from itertools.combinations(edges, k)
        return
    yield tuple(edges)
    for e in edges:
        yield (e,)
    for _ in range(64):
        yield tuple(e for e in edges if rng.random() < 0.5)


def _lemma_hypotheses(c):
    return is_connected(c) and not lonely_edges(c) and not has_separating_vertex_pair(c)


@criterion(5, "Dra subdivision: flag, no square, full 1-subcomplexes, inseparable after two steps")
def test_dra_lemma_suite():
    assert len(CORPUS) >= 50
    rng = random.Random(5)
    hypotheses_met = 0
    for c in CORPUS:
        d, maps = dra_subdivision_with_maps(c)
        assert validate_flag(d).is_flag, c.name
        assert has_empty_square(d) is None, c.name
        edges = list(c.faces(1))
        for chosen in _edge_subsets(edges, rng):
            pieces = set()
            for a, b in chosen:
                p = dra_path([a, b], maps)
                pieces.update(tuple(sorted(x)) for x in zip(p, p[1:]))
            if pieces:
                assert is_full(d, SimplicialComplex.from_faces(pieces)), (c.name, chosen)
        if _lemma_hypotheses(c):
            hypotheses_met += 1
            assert is_inseparable(dra_subdivision(d)).inseparable, c.name
    assert hypotheses_met >= 20


# -- 6 ---------------------------------------------------------------------------


@criterion(6, "boundary dimension fixtures")
def test_dimension_fixtures():
    assert [boundary_dimension(cycle_complex(n)) for n in range(5, 10)] == [1] * 5
    assert boundary_dimension(cross_polytope(3)) == 2
    assert boundary_dimension(disk_triangulation(2)) == 1


# -- 7 ---------------------------------------------------------------------------


@criterion(7, "witness graph contracts to G and is non-planar")
@pytest.mark.parametrize("make", [subdivided_k5, subdivided_k33, disk_triangulation], ids=["K5", "K3,3", "disk"])
def test_witness_graph(make):
    c = make(2)
    res = search_sg_certificate(c)
    assert res.status == "found"
    w = build_embedding_witness(res.certificate)
    h, _ = witness_contraction(w)
    assert is_isomorphic(h, res.certificate.g)
    assert not is_planar(w.to_graph()[0]).planar


# -- 8 ---------------------------------------------------------------------------


@criterion(8, "oracle agreement: complements, planarity, growth")
def test_complement_oracle():
    for c in flag_corpus():
        assert len(c.vertices) <= 8
        for face in c.all_faces():
            direct = complement_complex(c, face)
            model = barycentric_complement(c, face)
            for n in range(-1, c.dim + 1):
                assert reduced_cohomology(direct, n) == reduced_cohomology(model, n), (c.name, face, n)


@criterion(8, "oracle agreement: complements, planarity, growth")
def test_planarity_oracle():
    graphs = [c.one_skeleton() for c in CORPUS + flag_corpus() if len(c.vertices) <= 10]
    assert len(graphs) >= 50
    for g in graphs:
        assert is_planar(g).planar == (not has_kuratowski_subdivision(g.vertices, g.edges))


@criterion(8, "oracle agreement: complements, planarity, growth")
def test_growth_oracle():
    rng = random.Random(8)
    nerves = [c for c in flag_corpus() if len(c.vertices) <= 6]
    nerves += [random_flag_complex(rng, max_vertices=6) for _ in range(20)]
    nerves += [from_graph(Graph.from_edges([], range(k))) for k in (1, 2, 3)]
    for c in nerves:
        assert sphere_sizes(c, 5) == naive_sphere_sizes(c.vertices, c.one_skeleton().edges, 5), c.name


# -- 9 ---------------------------------------------------------------------------


@criterion(9, "negative controls")
def test_negative_controls():
    assert run_check(cycle_complex(5)).label == "refuted-by(inseparable)"
    assert run_check(cross_polytope(3)).label == "refuted-by(cohomology)"
    disk = run_check(dra_subdivision(SimplicialComplex.from_faces([(0, 1, 2)], name="simplex")))
    assert disk.label == "refuted-by(inseparable)"
    assert disk.checks["sg_nonplanar"].status == "fail"
    assert "no certificate found" in disk.checks["sg_nonplanar"].detail
