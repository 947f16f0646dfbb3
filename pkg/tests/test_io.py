import json

import pytest
from hypothesis import given

from nervecheck.complex import SimplicialComplex
from nervecheck.generators import cross_polytope, disk_triangulation, dra_subdivision, moebius_k5_nerve
from nervecheck.io import (
    ParseError,
    format_text,
    from_json_dict,
    loads,
    parse_text,
    read_complex,
    to_json_dict,
    write_complex,
)

from test_complex import complexes


def same(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    key = lambda c: sorted(tuple(c.label(v) for v in f) for f in c.maximal_faces)
    return key(a) == key(b) and a.name == b.name


def test_parse_basic_file():
    c = parse_text(
        """# a comment
complex demo
vertex z
face a b c   # trailing comment
face c d
tag a b c s1
"""
    )
    assert c.name == "demo"
    assert [c.label(v) for v in c.vertices] == ["z", "a", "b", "c", "d"]
    assert c.f_vector() == (5, 4, 1)
    assert list(c.stage_tags.values()) == ["s1"]


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("face a b\n", "missing"),
        ("complex x\ncomplex y\n", "duplicate"),
        ("complex x\nface a a\n", "repeated"),
        ("complex x\nbogus 1\n", "unknown directive"),
        ("complex x\nface a b\ntag a c s1\n", "unknown vertex"),
        ("complex x\nface a b\nface c\ntag a c s1\n", "not in the complex"),
        ("complex x\nvertex a\nvertex a\n", "duplicate vertex"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_text(text)
    assert fragment in str(err.value)


def test_parse_error_reports_line():
    with pytest.raises(ParseError) as err:
        parse_text("complex x\nface a b\nwhat\n")
    assert err.value.line == 3


@given(complexes())
def test_text_round_trip(c):
    c = c.with_name("rt")
    assert same(parse_text(format_text(c)), c)


@given(complexes())
def test_json_round_trip(c):
    c = c.with_name("rt")
    back = loads(json.dumps(to_json_dict(c)))
    assert same(back, c)


def test_tags_survive_round_trip(tmp_path):
    c = disk_triangulation(2)
    for as_json in (False, True):
        p = tmp_path / f"disk.{as_json}"
        write_complex(c, p, as_json=as_json)
        back = read_complex(p)
        assert back.f_vector() == c.f_vector()
        assert sorted(back.stage_tags.values()) == sorted(c.stage_tags.values())


def test_generated_labels_are_writable():
    for c in (cross_polytope(3), dra_subdivision(dra_subdivision(moebius_k5_nerve()[0]))):
        assert same(parse_text(format_text(c.with_name("x"))), c.with_name("x"))


@pytest.mark.parametrize(
    "data",
    [
        {"vertices": ["a"], "maximal_faces": [[0, 1]]},
        {"vertices": ["a", "b"], "maximal_faces": [[1, 0]]},
        {"vertices": ["a", "b"], "maximal_faces": [[0, 1], [0]]},
        {"maximal_faces": [[0]]},
    ],
)
def test_bad_json_rejected(data):
    with pytest.raises(ParseError):
        from_json_dict(data)


def test_missing_file_is_parse_error(tmp_path):
    with pytest.raises(ParseError):
        read_complex(tmp_path / "absent.txt")
