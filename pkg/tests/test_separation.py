import itertools

import pytest
from hypothesis import given

from nervecheck.complex import (
    ComplexError,
    SimplicialComplex,
    cone,
    connected_components,
    from_graph,
    full_subcomplex,
    simplex,
)
from nervecheck.generators import cross_polytope, cycle_complex, dra_subdivision, disk_triangulation, moebius_k5_nerve
from nervecheck.separation import (
    is_inseparable,
    lonely_edges,
    point_set_separates,
    subdivision_complement_components,
)

from corpus import flag_corpus
from test_complex import graphs


def test_cycle_has_nonadjacent_pair():
    v = is_inseparable(cycle_complex(5))
    assert not v.inseparable
    assert v.witness.kind == "nonadjacent-pair"
    assert v.witness.vertex_set == (0, 2)
    assert len(v.witness.components) == 2


def test_disconnected_witness():
    v = is_inseparable(SimplicialComplex.from_faces([(0, 1), (2, 3)]))
    assert v.witness.kind == "disconnected"


def test_cut_vertex_is_a_separating_simplex():
    bowtie = SimplicialComplex.from_faces([(0, 1, 2), (2, 3, 4)])
    v = is_inseparable(bowtie)
    assert v.witness.kind == "simplex" and v.witness.vertex_set == (2,)


def test_separating_edge():
    # two triangles glued along an edge
    c = SimplicialComplex.from_faces([(0, 1, 2), (0, 1, 3)])
    v = is_inseparable(c)
    assert v.witness.kind == "simplex" and v.witness.vertex_set == (0, 1)


def test_separating_suspension():
    # a corner of the once-subdivided triangle is cut off by a 2-path,
    # the suspension of its middle vertex
    c = dra_subdivision(simplex(2))
    v = is_inseparable(c)
    assert v.witness.kind == "simplex-suspension"
    piece = full_subcomplex(c, v.witness.vertex_set)
    assert piece.f_vector() == (3, 2)
    assert len(v.witness.components) >= 2


def test_octahedron_is_inseparable():
    assert is_inseparable(cross_polytope(3)).inseparable


def test_disk_is_inseparable():
    assert is_inseparable(disk_triangulation(2)).inseparable


@given(graphs(max_vertices=8))
def test_cone_is_never_disconnected(g):
    c = cone(from_graph(g))
    v = is_inseparable(c)
    assert v.inseparable or v.witness.kind != "disconnected"


@given(graphs(max_vertices=8))
def test_witness_really_separates(g):
    c = from_graph(g)
    v = is_inseparable(c)
    assert v.inseparable == (v.witness is None)
    if v.witness is not None and v.witness.kind != "disconnected":
        w = v.witness
        assert len(w.components) >= 2
        removed = full_subcomplex(c, w.vertex_set)
        assert subdivision_complement_components(c, removed) >= 2


@pytest.mark.parametrize("c", flag_corpus(), ids=lambda c: c.name)
def test_retraction_model_agrees_with_barycentric_model(c):
    adj = c.adjacency
    candidates = list(c.all_faces())
    candidates += [p for p in itertools.combinations(c.vertices, 2) if p[1] not in adj[p[0]]]
    for f in candidates:
        rest = [v for v in c.vertices if v not in f]
        direct = len(connected_components(rest, adj))
        model = subdivision_complement_components(c, full_subcomplex(c, f))
        assert direct == model, f


def test_lonely_edges():
    c5 = cycle_complex(5)
    assert lonely_edges(c5) == list(c5.faces(1))
    pendant = SimplicialComplex.from_faces([(0, 1, 2), (2, 3)])
    assert lonely_edges(pendant) == [(2, 3)]
    assert lonely_edges(moebius_k5_nerve()[0]) == []
    with pytest.raises(ComplexError):
        lonely_edges(simplex(3))


def test_point_separation():
    assert point_set_separates(cycle_complex(5), [0, 2])
    assert not point_set_separates(cycle_complex(5), [0])
    assert not point_set_separates(simplex(2), [0, 1])
