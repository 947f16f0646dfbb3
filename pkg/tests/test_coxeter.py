import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nervecheck.complex import ComplexError, SimplicialComplex, cone, from_graph, full_subcomplex, simplex
from nervecheck.coxeter import (
    GroupElement,
    ResourceError,
    ball,
    ball_sizes,
    format_word,
    multiply,
    normal_form,
    parse_word,
    right_descents,
    sphere_sizes,
    vertex_link,
)
from nervecheck.generators import cycle_complex

from oracles import naive_sphere_sizes
from test_complex import complexes, graphs

EDGE = simplex(1)
TWO_POINTS = SimplicialComplex.from_faces([(0,), (1,)])


def flag_nerves(max_vertices=6):
    return graphs(max_vertices).map(from_graph)


# -- normal forms ---------------------------------------------------------------------


def test_normal_form_examples():
    assert normal_form([0, 0], EDGE) == GroupElement(())
    assert normal_form([1, 0], EDGE).normal_form == (0, 1)
    assert normal_form([0, 1, 0], TWO_POINTS).normal_form == (0, 1, 0)
    assert normal_form([0, 1, 0], EDGE).normal_form == (1,)


def test_unknown_generator():
    with pytest.raises(ComplexError):
        normal_form([7], EDGE)


@given(flag_nerves(), st.data())
def test_normal_form_is_confluent(nerve, data):
    gens = nerve.vertices
    word = data.draw(st.lists(st.sampled_from(gens), max_size=10))
    target = normal_form(word, nerve)
    # random rewriting walk: insert ss, delete ss, swap commuting neighbours
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    w = list(word)
    adj = nerve.adjacency
    for _ in range(15):
        move = rng.randrange(3)
        if move == 0:
            i = rng.randrange(len(w) + 1)
            s = rng.choice(gens)
            w[i:i] = [s, s]
        elif move == 1:
            pairs = [i for i in range(len(w) - 1) if w[i] == w[i + 1]]
            if pairs:
                i = rng.choice(pairs)
                del w[i : i + 2]
        else:
            swaps = [i for i in range(len(w) - 1) if w[i + 1] in adj[w[i]]]
            if swaps:
                i = rng.choice(swaps)
                w[i], w[i + 1] = w[i + 1], w[i]
    assert normal_form(w, nerve) == target


@given(flag_nerves(), st.data())
def test_word_times_reverse_is_identity(nerve, data):
    word = data.draw(st.lists(st.sampled_from(nerve.vertices), max_size=12))
    assert normal_form(word + word[::-1], nerve) == GroupElement(())


@given(flag_nerves(), st.data())
def test_descents_shorten(nerve, data):
    g = normal_form(data.draw(st.lists(st.sampled_from(nerve.vertices), max_size=8)), nerve)
    desc = right_descents(g, nerve)
    for s in nerve.vertices:
        assert (len(multiply(g, [s], nerve)) < len(g)) == (s in desc)


# -- growth -----------------------------------------------------------------------


def test_sphere_examples():
    assert sphere_sizes(EDGE, 3) == [1, 2, 1, 0]
    assert sphere_sizes(TWO_POINTS, 3) == [1, 2, 2, 2]
    assert sphere_sizes(cycle_complex(5), 2) == [1, 5, 15]
    assert ball_sizes([1, 5, 15]) == [1, 6, 21]


@pytest.mark.parametrize("k", range(4))
def test_simplex_gives_binomial_rows(k):
    assert sphere_sizes(simplex(k), k + 2) == [math.comb(k + 1, r) for r in range(k + 3)]


@given(flag_nerves(max_vertices=6), st.integers(0, 5))
def test_automaton_matches_word_enumeration(nerve, radius):
    expected = naive_sphere_sizes(nerve.vertices, nerve.one_skeleton().edges, radius)
    assert sphere_sizes(nerve, radius) == expected
    assert ball(nerve, radius).sphere_sizes() == expected


@given(flag_nerves(max_vertices=6), st.integers(0, 4))
def test_growth_ignores_labelling(nerve, radius):
    perm = list(nerve.vertices)
    random.Random(len(perm)).shuffle(perm)
    moved = nerve.relabel(dict(zip(nerve.vertices, perm)))
    assert sphere_sizes(moved, radius) == sphere_sizes(nerve, radius)


@given(flag_nerves(max_vertices=6), st.data())
def test_full_subcomplex_subgroup_embeds(nerve, data):
    part = data.draw(st.sets(st.sampled_from(nerve.vertices), min_size=1))
    sub = full_subcomplex(nerve, part)
    word = data.draw(st.lists(st.sampled_from(sorted(part)), max_size=8))
    assert normal_form(word, sub) == normal_form(word, nerve)


def test_cone_doubles_growth():
    # W(cone L) = W(L) x Z/2, so spheres satisfy s'(r) = s(r) + s(r - 1)
    base = sphere_sizes(cycle_complex(5), 4)
    coned = sphere_sizes(cone(cycle_complex(5)), 4)
    assert coned == [base[r] + (base[r - 1] if r else 0) for r in range(5)]


def test_resource_cap():
    with pytest.raises(ResourceError):
        ball(cycle_complex(5), 6, max_elements=100)
    with pytest.raises(ResourceError):
        sphere_sizes(TWO_POINTS, 3, max_states=1)
    with pytest.raises(ValueError):
        sphere_sizes(EDGE, -1)


# -- Cayley graph and cubes ----------------------------------------------------------


def test_cayley_edges_of_c5():
    b = ball(cycle_complex(5), 2)
    # five edges at the identity, four ascending edges at each generator
    assert len(b.edges) == 5 + 5 * 4
    for g, h, s in b.edges:
        assert len(h) == len(g) + 1 and multiply(g, [s], b.nerve) == h


def test_cube_counts_c5():
    b = ball(cycle_complex(5), 2)
    dims = [c.dim for c in b.cubes]
    assert dims.count(2) == 5 and dims.count(1) == 25


@pytest.mark.parametrize("nerve", [cycle_complex(5), cycle_complex(6), simplex(2), cone(cycle_complex(5))])
def test_vertex_links_are_the_nerve(nerve):
    r = nerve.dim + 3
    b = ball(nerve, r)
    for g in b.all_elements():
        if len(g) <= r - (nerve.dim + 1):
            assert vertex_link(b, g) == nerve


def test_vertex_link_near_boundary_is_refused():
    b = ball(cycle_complex(5), 2)
    with pytest.raises(ComplexError):
        vertex_link(b, normal_form([0, 2], b.nerve))
    with pytest.raises(ComplexError):
        vertex_link(b, GroupElement((0, 2, 0, 2, 0)))


@given(complexes(max_vertices=5, max_faces=4))
def test_cubes_have_free_descents(c):
    b = ball(c, 3)
    for cube in b.cubes:
        assert not right_descents(cube.base, c) & set(cube.simplex)
        assert len(cube.base) + cube.dim <= 3


# -- word syntax -------------------------------------------------------------------


def test_parse_and_format():
    c5 = cycle_complex(5)
    assert parse_word("0 2, 4", c5) == [0, 2, 4]
    assert parse_word("e", c5) == [] and parse_word("", c5) == []
    assert format_word(GroupElement(()), c5) == "e"
    assert format_word(normal_form([2, 0], c5), c5) == "2 0"
    with pytest.raises(ComplexError):
        parse_word("9", c5)
