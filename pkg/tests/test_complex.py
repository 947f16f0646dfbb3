import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nervecheck.complex import (
    ComplexError,
    Graph,
    SimplicialComplex,
    barycentric_subdivision,
    complete_graph,
    cone,
    cycle_graph,
    euler_characteristic,
    from_graph,
    full_subcomplex,
    has_empty_square,
    is_full,
    join,
    link,
    point,
    simplex,
    suspension,
    validate_flag,
)
from nervecheck.generators import cross_polytope, cycle_complex

from oracles import has_square_brute


def graphs(max_vertices=9):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_vertices))
        pairs = list(itertools.combinations(range(n), 2))
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        return Graph.from_edges(chosen, vertices=range(n))

    return build()


def complexes(max_vertices=7, max_faces=8):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_vertices))
        faces = draw(
            st.lists(st.sets(st.integers(0, n - 1), min_size=1, max_size=4), min_size=1, max_size=max_faces)
        )
        return SimplicialComplex.from_faces(faces)

    return build()


def reduced_euler(c):
    return euler_characteristic(c) - 1


# -- construction ---------------------------------------------------------------


def test_from_graph_four_cycle():
    c = from_graph(cycle_graph(4))
    assert c.f_vector() == (4, 4)


def test_from_graph_triangle_and_k4():
    assert from_graph(complete_graph(3)).maximal_faces == ((0, 1, 2),)
    assert from_graph(complete_graph(4)).maximal_faces == ((0, 1, 2, 3),)


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(ComplexError):
        Graph.from_edges([(1, 1)])
    with pytest.raises(ComplexError):
        Graph.from_edges([(1, 2), (2, 1)])


def test_maximal_faces_are_reduced():
    c = SimplicialComplex.from_faces([(0, 1), (0, 1, 2), (3,), (2, 1)])
    assert c.maximal_faces == ((0, 1, 2), (3,))
    assert c.f_vector() == (4, 3, 1)


def test_empty_face_rejected():
    with pytest.raises(ComplexError):
        SimplicialComplex.from_faces([()])


# -- flagness and squares ---------------------------------------------------------


def test_empty_triangle_is_reported():
    c = SimplicialComplex.from_faces([(0, 1), (1, 2), (0, 2)])
    rep = validate_flag(c)
    assert not rep.is_flag
    assert rep.violations == ((0, 1, 2),)
    assert rep.by_kind() == {"empty triangle": [(0, 1, 2)]}


def test_empty_tetrahedron_is_reported_minimally():
    boundary = SimplicialComplex.from_faces(itertools.combinations(range(4), 3))
    rep = validate_flag(boundary)
    assert rep.violations == ((0, 1, 2, 3),)
    assert rep.by_kind() == {"empty K4": [(0, 1, 2, 3)]}


def test_octahedron_is_flag():
    assert validate_flag(cross_polytope(3)).is_flag


@given(graphs())
def test_from_graph_is_flag(g):
    assert validate_flag(from_graph(g)).is_flag


@given(graphs())
def test_round_trip_through_one_skeleton(g):
    c = from_graph(g)
    assert from_graph(c.one_skeleton()) == c


def test_square_examples():
    assert has_empty_square(cycle_complex(4)) is not None
    assert has_empty_square(cycle_complex(5)) is None
    a, b, c, d = has_empty_square(cross_polytope(3))
    adj = cross_polytope(3).adjacency
    assert b in adj[a] and c in adj[b] and d in adj[c] and a in adj[d]
    assert c not in adj[a] and d not in adj[b]


@given(graphs(max_vertices=12))
def test_square_matches_brute_force(g):
    c = from_graph(g)
    w = has_empty_square(c)
    assert (w is not None) == has_square_brute(c.vertices, c.adjacency)
    if w is not None:
        a, b, cc, d = w
        adj = c.adjacency
        assert all(y in adj[x] for x, y in ((a, b), (b, cc), (cc, d), (d, a)))
        assert cc not in adj[a] and d not in adj[b]


# -- subcomplexes ---------------------------------------------------------------


def test_full_subcomplex_examples():
    tri = simplex(2)
    assert full_subcomplex(tri, [0, 1]).maximal_faces == ((0, 1),)
    assert full_subcomplex(cycle_complex(5), [1, 3]).maximal_faces == ((1,), (3,))
    with pytest.raises(ComplexError):
        full_subcomplex(tri, [7])


def test_is_full_examples():
    c5 = cycle_complex(5)
    assert is_full(c5, SimplicialComplex.from_faces([(1, 2)]))
    path = SimplicialComplex.from_faces([(0, 1), (1, 2)])
    assert not is_full(simplex(2), path)


@given(complexes(), st.data())
def test_full_subcomplex_idempotent_and_monotone(c, data):
    vs = c.vertices
    small = data.draw(st.sets(st.sampled_from(vs)))
    big = small | data.draw(st.sets(st.sampled_from(vs)))
    a = full_subcomplex(c, small)
    b = full_subcomplex(c, big)
    assert full_subcomplex(b, small) == a
    assert full_subcomplex(a, a.vertices) == a
    assert is_full(b, a)


# -- links, joins -----------------------------------------------------------------


def test_link_examples():
    octa = cross_polytope(3)
    lk = link(octa, [octa.vertices[0]])
    assert lk.f_vector() == (4, 4) and has_empty_square(lk) is not None
    assert link(simplex(2), [0]).maximal_faces == ((1, 2),)
    assert link(cycle_complex(6), [0, 1]).is_empty


def test_join_with_empty_and_suspension():
    assert join(point(), SimplicialComplex.empty()).f_vector() == (1,)
    s = suspension(cycle_complex(4))
    assert s.f_vector() == cross_polytope(3).f_vector()
    assert validate_flag(s).is_flag and euler_characteristic(s) == 2


def test_join_cycle_with_edge_is_first_stage():
    c = join(cycle_complex(8), simplex(1))
    assert c.f_vector() == (10, 25, 24, 8)
    assert euler_characteristic(c) == 1


@given(complexes(max_vertices=5, max_faces=4), complexes(max_vertices=5, max_faces=4))
def test_join_reduced_euler_law(a, b):
    assert reduced_euler(join(a, b)) == -reduced_euler(a) * reduced_euler(b)


@given(complexes(max_vertices=4, max_faces=3), complexes(max_vertices=4, max_faces=3), complexes(max_vertices=3, max_faces=2))
def test_join_associative_up_to_relabelling(a, b, c):
    left = join(join(a, b), c)
    right = join(a, join(b, c))
    assert left.f_vector() == right.f_vector()
    assert sorted(len(f) for f in left.maximal_faces) == sorted(len(f) for f in right.maximal_faces)


@given(complexes())
def test_cone_is_contractible_in_euler_sense(c):
    k = cone(c)
    assert euler_characteristic(k) == 1
    assert validate_flag(k).is_flag == validate_flag(c).is_flag
    assert (has_empty_square(k) is None) == (has_empty_square(c) is None)


def test_euler_examples():
    assert all(euler_characteristic(simplex(k)) == 1 for k in range(5))
    assert all(euler_characteristic(cycle_complex(n)) == 0 for n in range(4, 10))
    assert euler_characteristic(cross_polytope(3)) == 2


@given(complexes(max_vertices=5, max_faces=4))
def test_barycentric_subdivision_keeps_euler(c):
    sd, origin = barycentric_subdivision(c)
    assert euler_characteristic(sd) == euler_characteristic(c)
    assert len(origin) == len(c.all_faces())
    assert validate_flag(sd).is_flag


def test_labels_follow_relabel():
    c = SimplicialComplex.from_faces([(0, 1)], {0: "a", 1: "b"})
    r = c.relabel({0: 5, 1: 3})
    assert r.maximal_faces == ((3, 5),)
    assert r.label(5) == "a" and r.label(3) == "b"
