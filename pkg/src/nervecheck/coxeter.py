"""Right-angled Coxeter groups of a nerve: normal forms, Cayley-graph balls,
Davis-complex cubes and growth.

Generators are the nerve's vertex ids; two generators commute iff they span
an edge.  Reduced words of one element differ only by commutations, so the
lexicographically least reduced word is a canonical form.  It has a local
description: appending s to a normal form w gives the normal form of ws iff
s is not in the forbidden set

    F(w) = { s : s cancels into w, or s could move left past a larger letter }

which obeys F(ws) = {s} ∪ { t adjacent to s : t < s or t ∈ F(w) }.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .complex import ComplexError, Face, SimplicialComplex

Word = tuple[int, ...]

DEFAULT_MAX_ELEMENTS = 1_000_000


class ResourceError(RuntimeError):
    """Raised when a ball would exceed its element cap."""


@dataclass(frozen=True, order=True)
class GroupElement:
    normal_form: Word

    def __len__(self) -> int:
        return len(self.normal_form)


def _check_letters(word: Iterable[int], nerve: SimplicialComplex) -> list[int]:
    letters = list(word)
    known = set(nerve.vertices)
    for x in letters:
        if x not in known:
            raise ComplexError(f"unknown generator {x!r}")
    return letters


def reduce_word(word: Iterable[int], nerve: SimplicialComplex) -> list[int]:
    """Cancel x ... x pairs whose intervening letters all commute with x."""
    adj = nerve.adjacency
    out: list[int] = []
    for s in _check_letters(word, nerve):
        for i in range(len(out) - 1, -1, -1):
            y = out[i]
            if y == s:
                del out[i]
                break
            if y not in adj[s]:
                out.append(s)
                break
        else:
            out.append(s)
    return out


def lex_least(word: Sequence[int], nerve: SimplicialComplex) -> Word:
    """Least word in the commutation class of a reduced word.

    Repeatedly emits the smallest letter that can be moved to the front.
    """
    adj = nerve.adjacency
    rest = list(word)
    out: list[int] = []
    while rest:
        movable = [i for i, x in enumerate(rest) if all(y in adj[x] for y in rest[:i])]
        out.append(rest.pop(min(movable, key=lambda i: rest[i])))
    return tuple(out)


def normal_form(word: Iterable[int], nerve: SimplicialComplex) -> GroupElement:
    return GroupElement(lex_least(reduce_word(word, nerve), nerve))


def multiply(g: GroupElement, word: Iterable[int], nerve: SimplicialComplex) -> GroupElement:
    return normal_form(list(g.normal_form) + list(word), nerve)


def forbidden_after(forbidden: frozenset[int], s: int, nerve: SimplicialComplex) -> frozenset[int]:
    adj = nerve.adjacency[s]
    return frozenset({s} | {t for t in adj if t < s or t in forbidden})


def forbidden_set(word: Sequence[int], nerve: SimplicialComplex) -> frozenset[int]:
    f: frozenset[int] = frozenset()
    for s in word:
        f = forbidden_after(f, s, nerve)
    return f


def right_descents(g: GroupElement, nerve: SimplicialComplex) -> frozenset[int]:
    """Generators s with |gs| < |g|: letters that can be moved to the end."""
    adj = nerve.adjacency
    w = g.normal_form
    out = set()
    for i, s in enumerate(w):
        if all(y in adj[s] for y in w[i + 1 :]):
            out.add(s)
    return frozenset(out)


@dataclass(frozen=True)
class CubeRecord:
    base: GroupElement
    simplex: Face

    @property
    def dim(self) -> int:
        return len(self.simplex)


@dataclass
class GroupBall:
    nerve: SimplicialComplex
    radius: int
    elements: list[list[GroupElement]]  # by word length
    edges: list[tuple[GroupElement, GroupElement, int]]  # (g, gs, s) with |g| < |gs|
    cubes: list[CubeRecord] = field(default_factory=list)

    def __post_init__(self) -> None:
        self._index = {g for layer in self.elements for g in layer}

    def __contains__(self, g: GroupElement) -> bool:
        return g in self._index

    def all_elements(self) -> list[GroupElement]:
        return [g for layer in self.elements for g in layer]

    def sphere_sizes(self) -> list[int]:
        return [len(layer) for layer in self.elements]


def ball(nerve: SimplicialComplex, radius: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> GroupBall:
    """All elements of length <= radius, labelled Cayley edges and the cubes
    g·W_Δ whose base g (the shortest element of the coset) satisfies
    |g| + |Δ| <= radius."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    gens = list(nerve.vertices)
    identity = GroupElement(())
    layers: list[list[GroupElement]] = [[identity]]
    states = {identity: frozenset()}
    total = 1
    for r in range(radius):
        nxt: list[GroupElement] = []
        for g in layers[r]:
            f = states[g]
            for s in gens:
                if s in f:
                    continue
                h = GroupElement(g.normal_form + (s,))
                states[h] = forbidden_after(f, s, nerve)
                nxt.append(h)
                total += 1
                if total > max_elements:
                    raise ResourceError(f"ball exceeds {max_elements} elements")
        nxt.sort()
        layers.append(nxt)
    edges = []
    for layer in layers[:-1] if radius else []:
        for g in layer:
            desc = right_descents(g, nerve)
            for s in gens:
                if s not in desc:
                    edges.append((g, multiply(g, [s], nerve), s))
    cubes = []
    for r, layer in enumerate(layers):
        for g in layer:
            desc = right_descents(g, nerve)
            room = radius - r
            if room <= 0:
                continue
            for face in nerve.all_faces():
                if len(face) > room:
                    break
                if not desc & set(face):
                    cubes.append(CubeRecord(g, face))
    return GroupBall(nerve, radius, layers, edges, cubes)


def cubes_at(b: GroupBall, g: GroupElement) -> list[Face]:
    """Simplices Δ whose cube g·W_Δ is recorded in the ball."""
    present = {(c.base, c.simplex) for c in b.cubes}
    out = []
    desc = right_descents(g, b.nerve)
    for face in b.nerve.all_faces():
        down = [s for s in face if s in desc]
        base = multiply(g, down, b.nerve) if down else g
        if (base, face) in present:
            out.append(face)
    return out


def vertex_link(b: GroupBall, g: GroupElement) -> SimplicialComplex:
    """Link of g in the Davis complex, read from the recorded cubes.

    Every cube at g is visible once |g| <= radius - (dim nerve + 1).
    """
    if g not in b:
        raise ComplexError("element not in the ball")
    need = b.nerve.dim + 1
    if len(g) > b.radius - need:
        raise ComplexError(f"element of length {len(g)} is within {need} of the ball boundary")
    faces = cubes_at(b, g)
    return SimplicialComplex.from_faces(faces, {v: b.nerve.label(v) for v in b.nerve.vertices})


def sphere_sizes(nerve: SimplicialComplex, radius: int, max_states: int = DEFAULT_MAX_ELEMENTS) -> list[int]:
    """|S_r| for r = 0..radius, counting normal forms through the forbidden-set
    automaton (states are aggregated, so no element is stored)."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    gens = list(nerve.vertices)
    counts: Counter[frozenset[int]] = Counter({frozenset(): 1})
    sizes = [1]
    for _ in range(radius):
        nxt: Counter[frozenset[int]] = Counter()
        for f, k in counts.items():
            for s in gens:
                if s not in f:
                    nxt[forbidden_after(f, s, nerve)] += k
        if len(nxt) > max_states:
            raise ResourceError(f"growth automaton exceeds {max_states} states")
        counts = nxt
        sizes.append(sum(counts.values()))
    return sizes


def ball_sizes(spheres: Sequence[int]) -> list[int]:
    out, acc = [], 0
    for s in spheres:
        acc += s
        out.append(acc)
    return out


def parse_word(text: str, nerve: SimplicialComplex) -> list[int]:
    """Letters separated by spaces or commas, given by vertex label; 'e' or
    the empty string is the identity."""
    ids = {nerve.label(v): v for v in nerve.vertices}
    tokens = [t for t in text.replace(",", " ").split() if t]
    if tokens == ["e"] and "e" not in ids:
        return []
    try:
        return [ids[t] for t in tokens]
    except KeyError as exc:
        raise ComplexError(f"unknown generator {exc.args[0]!r}") from None


def format_word(g: GroupElement, nerve: SimplicialComplex) -> str:
    return " ".join(nerve.label(v) for v in g.normal_form) or "e"
