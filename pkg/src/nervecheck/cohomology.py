"""Integral reduced simplicial cohomology through Smith normal form, complement
cohomology of faces and the vanishing/dimension tests built on it."""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .complex import ComplexError, Face, SimplicialComplex, full_subcomplex


@dataclass(frozen=True)
class SnfResult:
    invariant_factors: tuple[int, ...]
    rank: int
    original_shape: tuple[int, int]


@dataclass(frozen=True)
class CohomologyGroup:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def divisibility_chain(diagonal: Iterable[int]) -> tuple[int, ...]:
    """Invariant factors of a diagonal integer matrix (nonzero entries)."""
    ds = sorted(abs(d) for d in diagonal if d)
    units = [d for d in ds if d == 1]
    rest = [d for d in ds if d != 1]
    # Repeated gcd/lcm sweeps turn any diagonal into a divisibility chain.
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            a, b = rest[i], rest[j]
            g = math.gcd(a, b)
            rest[i], rest[j] = g, a // g * b
    return tuple(units + sorted(rest))


class _SparseMatrix:
    """Row-major sparse integer matrix with column incidence sets."""

    def __init__(self, rows: dict[int, dict[int, int]]):
        self.rows = {r: dict(e) for r, e in rows.items() if e}
        self.cols: dict[int, set[int]] = {}
        for r, entries in self.rows.items():
            for c in entries:
                self.cols.setdefault(c, set()).add(r)

    def _set(self, r: int, c: int, v: int) -> None:
        row = self.rows.setdefault(r, {})
        if v:
            row[c] = v
            self.cols.setdefault(c, set()).add(r)
        else:
            row.pop(c, None)
            col = self.cols.get(c)
            if col is not None:
                col.discard(r)
                if not col:
                    del self.cols[c]
            if not row:
                del self.rows[r]

    def add_row_multiple(self, target: int, source: int, q: int) -> None:
        """row[target] -= q * row[source]"""
        src = self.rows[source]
        tgt = self.rows.get(target, {})
        for c, v in list(src.items()):
            self._set(target, c, tgt.get(c, 0) - q * v)
            tgt = self.rows.get(target, {})

    def add_col_multiple(self, target: int, source: int, q: int) -> None:
        """col[target] -= q * col[source]"""
        for r in list(self.cols.get(source, ())):
            v = self.rows[r][source]
            self._set(r, target, self.rows[r].get(target, 0) - q * v)

    def drop(self, r: int, c: int) -> None:
        for cc in list(self.rows.get(r, {})):
            self._set(r, cc, 0)
        for rr in list(self.cols.get(c, ())):
            self._set(rr, c, 0)

    def choose_pivot(self) -> tuple[int, int]:
        best = None
        for r, entries in self.rows.items():
            rl = len(entries) - 1
            for c, v in entries.items():
                key = (abs(v), rl * (len(self.cols[c]) - 1), r, c)
                if best is None or key < best:
                    best = key
                    if key[0] == 1 and key[1] == 0:
                        return r, c
        assert best is not None
        return best[2], best[3]


def _sparse_diagonalize(rows: dict[int, dict[int, int]]) -> list[int]:
    m = _SparseMatrix(rows)
    diagonal: list[int] = []
    while m.rows:
        r, c = m.choose_pivot()
        while True:
            p = m.rows[r][c]
            moved = False
            for rr in sorted(m.cols[c] - {r}):
                q = m.rows[rr][c] // p
                m.add_row_multiple(rr, r, q)
                if c in m.rows.get(rr, {}):
                    r, moved = rr, True
                    break
            if moved:
                continue
            for cc in sorted(set(m.rows[r]) - {c}):
                q = m.rows[r][cc] // p
                m.add_col_multiple(cc, c, q)
                if cc in m.rows[r]:
                    c, moved = cc, True
                    break
            if not moved:
                break
        diagonal.append(abs(m.rows[r][c]))
        m.drop(r, c)
    return diagonal


def smith_normal_form(m: Sequence[Sequence[int]]) -> SnfResult:
    """Invariant factors of a dense integer matrix (exact, arbitrary precision)."""
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rows = {i: {j: int(v) for j, v in enumerate(row) if v} for i, row in enumerate(m)}
    factors = divisibility_chain(_sparse_diagonalize(rows))
    return SnfResult(factors, len(factors), (nrows, ncols))


def sparse_snf(rows: dict[int, dict[int, int]], shape: tuple[int, int]) -> SnfResult:
    factors = divisibility_chain(_sparse_diagonalize(rows))
    return SnfResult(factors, len(factors), shape)


# -- cochain complexes --------------------------------------------------------


def _faces_by_dim(faces: Iterable[Face]) -> list[list[Face]]:
    out: list[list[Face]] = []
    for f in faces:
        while len(out) < len(f):
            out.append([])
        out[len(f) - 1].append(f)
    return [sorted(b) for b in out]


def coboundary_rows(lower: Sequence[Face], upper: Sequence[Face]) -> dict[int, dict[int, int]]:
    """Matrix of the coboundary C^k -> C^{k+1}: rows indexed by (k+1)-faces.

    With ``lower`` empty this is the augmentation: every vertex gets 1.
    """
    if not lower:
        return {i: {0: 1} for i in range(len(upper))}
    index = {f: i for i, f in enumerate(lower)}
    rows = {}
    for i, f in enumerate(upper):
        rows[i] = {index[f[:j] + f[j + 1 :]]: (-1) ** j for j in range(len(f))}
    return rows


class _CochainData:
    """Augmented cochain complex of a face list with cached coboundary SNFs."""

    def __init__(self, faces: Iterable[Face]):
        self.by_dim = _faces_by_dim(faces)
        self._snf: dict[int, SnfResult] = {}

    def dim_c(self, k: int) -> int:
        if k == -1:
            return 1
        return len(self.by_dim[k]) if 0 <= k < len(self.by_dim) else 0

    def delta(self, k: int) -> SnfResult:
        """SNF of the coboundary out of degree k (k >= -1)."""
        if k not in self._snf:
            if self.dim_c(k) == 0 or self.dim_c(k + 1) == 0:
                self._snf[k] = SnfResult((), 0, (self.dim_c(k + 1), self.dim_c(k)))
            else:
                lower = [] if k == -1 else self.by_dim[k]
                rows = coboundary_rows(lower, self.by_dim[k + 1])
                self._snf[k] = sparse_snf(rows, (self.dim_c(k + 1), self.dim_c(k)))
        return self._snf[k]

    def group(self, n: int) -> CohomologyGroup:
        if n < -1:
            return CohomologyGroup()
        if n == -1:
            # reduced cohomology of the empty complex lives in degree -1
            return CohomologyGroup(0 if self.by_dim else 1)
        free = self.dim_c(n) - self.delta(n).rank - self.delta(n - 1).rank
        torsion = tuple(d for d in self.delta(n - 1).invariant_factors if d > 1)
        return CohomologyGroup(free, torsion)


def reduced_cohomology(c: SimplicialComplex, n: int, collapse: bool = False) -> CohomologyGroup:
    """H̃^n(c; Z).  The empty complex has Z in degree -1 only.

    ``collapse`` first removes free-face pairs (a homotopy equivalence),
    which shrinks the matrices without changing the answer.
    """
    faces = collapse_faces(c) if collapse else c.all_faces()
    return _CochainData(faces).group(n)


def reduced_cohomology_all(c: SimplicialComplex, collapse: bool = False) -> dict[int, CohomologyGroup]:
    """All nonzero-dimension-range groups H̃^n, n = -1..dim(c)."""
    faces = collapse_faces(c) if collapse else c.all_faces()
    data = _CochainData(faces)
    return {n: data.group(n) for n in range(-1, max(c.dim, 0) + 1)}


def collapse_faces(c: SimplicialComplex) -> list[Face]:
    """Faces remaining after exhausting elementary simplicial collapses."""
    faces = set(c.face_set)
    cofaces: dict[Face, set[Face]] = {f: set() for f in faces}
    for f in faces:
        if len(f) > 1:
            for j in range(len(f)):
                cofaces[f[:j] + f[j + 1 :]].add(f)
    stack = sorted((f for f, cf in cofaces.items() if len(cf) == 1), reverse=True)
    while stack:
        s = stack.pop()
        if s not in faces or len(cofaces[s]) != 1:
            continue
        (t,) = cofaces[s]
        faces.discard(s)
        faces.discard(t)
        for j in range(len(t)):
            r = t[:j] + t[j + 1 :]
            if r != s:
                cofaces[r].discard(t)
                if len(cofaces[r]) == 1:
                    stack.append(r)
        if len(s) > 1:
            for j in range(len(s)):
                r = s[:j] + s[j + 1 :]
                cofaces[r].discard(s)
                if len(cofaces[r]) == 1:
                    stack.append(r)
        del cofaces[s]
        del cofaces[t]
    return sorted(faces, key=lambda f: (len(f), f))


# -- complements --------------------------------------------------------------


def complement_complex(c: SimplicialComplex, d: Iterable[int]) -> SimplicialComplex:
    """Full subcomplex on the vertices outside the face ``d``.

    For a face of a flag complex this is a deformation retract of the
    complement of the closed face in |c|.
    """
    face = tuple(sorted(set(d)))
    if face and face not in c.face_set:
        raise ComplexError(f"{face} is not a face")
    rest = set(c.vertices) - set(face)
    return full_subcomplex(c, rest)


@dataclass(frozen=True)
class CohomologyEntry:
    n: int
    face: Face | None  # None stands for the complex itself
    group: CohomologyGroup


@dataclass(frozen=True)
class CohomologyVerdict:
    passed: bool
    failures: tuple[CohomologyEntry, ...]
    checked: int = 0
    table: tuple[CohomologyEntry, ...] = field(default=(), repr=False)


def _threads() -> int:
    raw = os.environ.get("NERVECHECK_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _complement_groups(args: tuple[SimplicialComplex, Face | None, int, int, bool]):
    c, face, lo, hi, collapse = args
    target = c if face is None else complement_complex(c, face)
    faces = collapse_faces(target) if collapse else target.all_faces()
    data = _CochainData(faces)
    if target.is_empty:
        groups = {-1: CohomologyGroup(1)}
        return [(n, g) for n, g in groups.items() if lo <= n <= hi]
    return [(n, data.group(n)) for n in range(lo, hi + 1)]


def _table(c: SimplicialComplex, lo: int, collapse: bool) -> list[CohomologyEntry]:
    hi = max(c.dim, lo)
    jobs: list[tuple[SimplicialComplex, Face | None, int, int, bool]] = [(c, None, lo, hi, collapse)]
    jobs += [(c, f, lo, hi, collapse) for f in c.all_faces()]
    threads = _threads()
    if threads > 1 and len(jobs) > 64:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_complement_groups, jobs, chunksize=16))
    else:
        results = [_complement_groups(j) for j in jobs]
    table = []
    for (_, face, *_rest), groups in zip(jobs, results):
        for n, g in groups:
            table.append(CohomologyEntry(n, face, g))
    return table


def cohomology_condition(c: SimplicialComplex, collapse: bool = True) -> CohomologyVerdict:
    """H̃^n(c) = 0 and H̃^n(c minus Δ) = 0 for all n >= 2 and all faces Δ."""
    table = _table(c, 2, collapse)
    failures = tuple(e for e in table if not e.group.is_trivial)
    return CohomologyVerdict(not failures, failures, len(table), tuple(table))


def boundary_dimension(c: SimplicialComplex, collapse: bool = True) -> int:
    """max{n : H̃^n(c) != 0 or H̃^n(c minus Δ) != 0 for some face Δ}, or -1."""
    table = _table(c, -1, collapse)
    nonzero = [e.n for e in table if not e.group.is_trivial]
    return max(nonzero, default=-1)


def rational_betti(faces_by_dim: Sequence[Sequence[Face]]) -> list[int]:
    """Reduced Betti numbers over Q (degrees -1, 0, 1, ...) by Gaussian
    elimination with Fractions.

    An independent path used to cross-check the integral engine.
    """
    from fractions import Fraction

    def rank(rows: dict[int, dict[int, int]], ncols: int) -> int:
        mat = [dict((c, Fraction(v)) for c, v in r.items()) for r in rows.values()]
        rk = 0
        pivots: dict[int, dict[int, Fraction]] = {}
        for row in mat:
            row = dict(row)
            while row:
                c = min(row)
                if c in pivots:
                    p = pivots[c]
                    f = row[c] / p[c]
                    for cc, v in p.items():
                        nv = row.get(cc, 0) - f * v
                        if nv:
                            row[cc] = nv
                        else:
                            row.pop(cc, None)
                else:
                    pivots[c] = row
                    rk += 1
                    break
        return rk

    dims = [1] + [len(b) for b in faces_by_dim]
    ranks = []
    for k in range(len(faces_by_dim)):
        lower = [] if k == 0 else faces_by_dim[k - 1]
        ranks.append(rank(coboundary_rows(lower, faces_by_dim[k]), dims[k]))
    # ranks[k] is the rank of the coboundary out of degree k-1
    ranks.append(0)
    return [dims[i] - ranks[i] - (ranks[i - 1] if i else 0) for i in range(len(dims))]
