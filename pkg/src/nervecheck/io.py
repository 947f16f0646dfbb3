"""Reading and writing complexes in the line-oriented text format and its
JSON mirror.

Text format::

    complex <name>
    vertex <label>          # optional, fixes vertex order
    face <label> <label> ...
    tag <label> ... <stage>

Vertices not declared with ``vertex`` are created in order of first use.
The JSON mirror is ``{"name", "vertices": [labels], "maximal_faces":
[[index, ...]], "tags": [{"face": [index, ...], "stage": str}]}``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .complex import ComplexError, SimplicialComplex


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_text(text: str) -> SimplicialComplex:
    name = ""
    ids: dict[str, int] = {}
    faces: list[tuple[int, ...]] = []
    tags: list[tuple[tuple[int, ...], str, int]] = []
    seen_header = False

    def vid(label: str) -> int:
        if label not in ids:
            ids[label] = len(ids)
        return ids[label]

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "complex":
            if seen_header:
                raise ParseError("duplicate 'complex' header", lineno)
            seen_header = True
            name = " ".join(rest)
        elif head == "vertex":
            if len(rest) != 1:
                raise ParseError("'vertex' takes exactly one label", lineno)
            if rest[0] in ids:
                raise ParseError(f"duplicate vertex {rest[0]!r}", lineno)
            vid(rest[0])
        elif head == "face":
            if not rest:
                raise ParseError("empty face", lineno)
            if len(set(rest)) != len(rest):
                raise ParseError("repeated vertex in face", lineno)
            faces.append(tuple(sorted(vid(x) for x in rest)))
        elif head == "tag":
            if len(rest) < 2:
                raise ParseError("'tag' needs a face and a stage", lineno)
            *verts, stage = rest
            unknown = [v for v in verts if v not in ids]
            if unknown:
                raise ParseError(f"tag refers to unknown vertex {unknown[0]!r}", lineno)
            tags.append((tuple(sorted(ids[v] for v in verts)), stage, lineno))
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if not seen_header:
        raise ParseError("missing 'complex <name>' header")
    isolated = set(ids.values()) - {v for f in faces for v in f}
    faces.extend((v,) for v in sorted(isolated))
    labels = {i: l for l, i in ids.items()}
    c = SimplicialComplex.from_faces(faces, labels, name)
    for face, _, lineno in tags:
        if face not in c.face_set:
            raise ParseError("tag attached to a face that is not in the complex", lineno)
    return SimplicialComplex(c.maximal_faces, c.labels, c.name, {f: s for f, s, _ in tags})


def format_text(c: SimplicialComplex) -> str:
    c = c.compact()
    _check_labels(c)
    lines = [f"complex {c.name or 'unnamed'}"]
    lines += [f"vertex {c.label(v)}" for v in c.vertices]
    lines += ["face " + " ".join(c.label(v) for v in f) for f in c.maximal_faces]
    for face in sorted(c.stage_tags):
        lines.append("tag " + " ".join(c.label(v) for v in face) + " " + c.stage_tags[face])
    return "\n".join(lines) + "\n"


def _check_labels(c: SimplicialComplex) -> None:
    labels = [c.label(v) for v in c.vertices]
    if len(set(labels)) != len(labels):
        raise ComplexError("vertex labels are not unique")
    for l in labels:
        if not l or any(ch.isspace() for ch in l) or "#" in l:
            raise ComplexError(f"label {l!r} cannot be written in text format")


def to_json_dict(c: SimplicialComplex) -> dict:
    c = c.compact()
    return {
        "name": c.name,
        "vertices": [c.label(v) for v in c.vertices],
        "maximal_faces": [list(f) for f in c.maximal_faces],
        "tags": [{"face": list(f), "stage": c.stage_tags[f]} for f in sorted(c.stage_tags)],
    }


def from_json_dict(d: dict) -> SimplicialComplex:
    try:
        labels = [str(x) for x in d["vertices"]]
        faces = [tuple(int(v) for v in f) for f in d["maximal_faces"]]
        tags = {tuple(sorted(int(v) for v in t["face"])): str(t["stage"]) for t in d.get("tags", [])}
        name = str(d.get("name", ""))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed JSON complex: {exc}") from exc
    n = len(labels)
    for f in faces:
        if not f or any(v < 0 or v >= n for v in f):
            raise ParseError(f"face {list(f)} refers to unknown vertex")
        if list(f) != sorted(set(f)):
            raise ParseError(f"face {list(f)} is not strictly sorted")
    covered = {v for f in faces for v in f}
    faces += [(v,) for v in range(n) if v not in covered]
    c = SimplicialComplex(tuple(sorted(faces)), dict(enumerate(labels)), name, tags)
    try:
        c.validate()
    except ComplexError as exc:
        raise ParseError(str(exc)) from exc
    return c


def loads(text: str) -> SimplicialComplex:
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return from_json_dict(data)
    return parse_text(text)


def read_complex(path: str | Path) -> SimplicialComplex:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def write_complex(c: SimplicialComplex, path: str | Path, as_json: bool = False) -> None:
    if as_json:
        text = json.dumps(to_json_dict(c), indent=1) + "\n"
    else:
        text = format_text(c)
    Path(path).write_text(text)
