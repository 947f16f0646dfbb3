"""The Menger-curve certification pipeline and its report.

Sufficient conditions (all must pass to certify): flag, no empty square,
not a simplex, inseparable, SG-non-planar, cohomology vanishing.  Only the
conditions that are also necessary can refute: cohomology, inseparability
together with not being a simplex, and non-planarity of the nerve (cited
only when the other necessary conditions hold).  A missing
square-freeness or an unfinished certificate search leaves the verdict
inconclusive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .cohomology import cohomology_condition
from .complex import SimplicialComplex, has_empty_square, validate_flag
from .nonplanarity import (
    CertificateFormatError,
    SgCertificate,
    load_certificate,
    nerve_is_planar,
    search_sg_certificate,
    verify_sg_certificate,
)
from .separation import is_inseparable

CHECKS = ("flag", "hyperbolic", "not_simplex", "inseparable", "sg_nonplanar", "cohomology")
# refutation order: cohomology, then inseparability and not being a simplex;
# planarity is cited only when neither of those already refutes
NECESSARY = ("cohomology", "inseparable", "not_simplex")

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"
EXIT_CERTIFIED, EXIT_REFUTED, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2, 3


@dataclass
class CheckResult:
    status: str
    detail: str
    witness: object = None


@dataclass
class MengerVerdict:
    name: str
    checks: dict[str, CheckResult]
    conclusion: str  # "menger-certified", "refuted" or "inconclusive"
    refuted_by: tuple[str, ...] = ()
    certificate: SgCertificate | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return {"menger-certified": EXIT_CERTIFIED, "refuted": EXIT_REFUTED}.get(self.conclusion, EXIT_INCONCLUSIVE)

    @property
    def label(self) -> str:
        if self.conclusion == "refuted":
            return f"refuted-by({', '.join(self.refuted_by)})"
        return self.conclusion


_CACHE: dict[int, SgCertificate] = {}


def _cached_certificate(c: SimplicialComplex, sidecar: Path | None) -> tuple[SgCertificate | None, str]:
    key = hash((c.maximal_faces, tuple(c.label(v) for v in c.vertices)))
    cert = _CACHE.get(key)
    if cert is not None and verify_sg_certificate(c, cert).valid:
        return cert, "cached in this process"
    if sidecar is not None and sidecar.exists():
        try:
            cert = load_certificate(c, sidecar.read_text())
        except (CertificateFormatError, OSError):
            return None, ""
        if verify_sg_certificate(c, cert).valid:
            _CACHE[key] = cert
            return cert, f"from {sidecar.name}"
    return None, ""


def remember_certificate(c: SimplicialComplex, cert: SgCertificate) -> None:
    _CACHE[hash((c.maximal_faces, tuple(c.label(v) for v in c.vertices)))] = cert


def run_check(
    c: SimplicialComplex,
    sg_budget: int = 2_000_000,
    sidecar: Path | None = None,
    use_cache: bool = True,
) -> MengerVerdict:
    checks: dict[str, CheckResult] = {}
    notes: list[str] = []

    flag = validate_flag(c)
    if flag.is_flag:
        checks["flag"] = CheckResult(PASS, "every clique of the 1-skeleton spans a simplex")
    else:
        kinds = ", ".join(f"{len(v)} {k}" for k, v in sorted(flag.by_kind().items()))
        checks["flag"] = CheckResult(FAIL, f"unspanned cliques: {kinds}", flag.violations)

    square = has_empty_square(c)
    if square is None:
        checks["hyperbolic"] = CheckResult(PASS, "no induced 4-cycle")
    else:
        checks["hyperbolic"] = CheckResult(FAIL, "induced 4-cycle " + c.face_label(square), square)

    if c.is_simplex():
        checks["not_simplex"] = CheckResult(FAIL, "the complex is a single simplex")
    elif c.is_empty:
        checks["not_simplex"] = CheckResult(FAIL, "the complex is empty")
    else:
        checks["not_simplex"] = CheckResult(PASS, f"{len(c.maximal_faces)} maximal faces")

    sep = is_inseparable(c)
    if sep.inseparable:
        checks["inseparable"] = CheckResult(PASS, "no separating set among the four kinds")
    else:
        w = sep.witness
        assert w is not None
        what = c.face_label(w.vertex_set) if w.vertex_set else ""
        checks["inseparable"] = CheckResult(FAIL, f"{w.kind} {what}".strip(), w)

    coh = cohomology_condition(c)
    if coh.passed:
        checks["cohomology"] = CheckResult(
            PASS, f"H^n = 0 for n >= 2 on the complex and every face complement ({len(c.all_faces())} faces)"
        )
    else:
        first = coh.failures[0]
        where = "the complex" if first.face is None else "complement of " + c.face_label(first.face)
        checks["cohomology"] = CheckResult(
            FAIL, f"H^{first.n} = {first.group} on {where} ({len(coh.failures)} nonvanishing {'entry' if len(coh.failures) == 1 else 'entries'})", coh.failures
        )

    cert, origin = _cached_certificate(c, sidecar) if use_cache else (None, "")
    if cert is None:
        res = search_sg_certificate(c, sg_budget)
        if res.status == "found":
            cert = res.certificate
            origin = f"found by search ({res.target}, {res.nodes} nodes)"
            if use_cache and cert is not None:
                remember_certificate(c, cert)
        search_status = res.status
    else:
        search_status = "found"
    if cert is not None:
        checks["sg_nonplanar"] = CheckResult(
            PASS, f"verified certificate on {_graph_name(cert)}, {origin}", cert
        )
    else:
        planar = nerve_is_planar(c)
        if planar is True:
            checks["sg_nonplanar"] = CheckResult(
                FAIL, f"no certificate found (search {search_status}); the nerve embeds in the sphere"
            )
        elif search_status == "none":
            checks["sg_nonplanar"] = CheckResult(
                INCONCLUSIVE, "no certificate found: the search over K3,3 and K5 subdivisions is exhausted"
            )
        else:
            checks["sg_nonplanar"] = CheckResult(
                INCONCLUSIVE, f"no certificate found within a budget of {sg_budget} search nodes"
            )

    refuted = tuple(k for k in NECESSARY if checks[k].status == FAIL)
    if checks["sg_nonplanar"].status == FAIL:
        if refuted:
            notes.append("the nerve is also planar, which refutes on its own")
        else:
            refuted = ("sg_nonplanar",)
    if not flag.is_flag:
        conclusion = "inconclusive"
        refuted = ()
        notes.append("the input is not flag, so it is not the nerve of a right-angled Coxeter group")
    elif refuted:
        conclusion = "refuted"
        if checks["hyperbolic"].status == FAIL:
            notes.append("the group is not hyperbolic; the refutation uses necessary conditions only")
    elif all(checks[k].status == PASS for k in CHECKS):
        conclusion = "menger-certified"
    else:
        conclusion = "inconclusive"
    return MengerVerdict(c.name, {k: checks[k] for k in CHECKS}, conclusion, refuted, cert, notes)


def _graph_name(cert: SgCertificate) -> str:
    n, m = len(cert.g.vertices), len(cert.g.edges)
    if (n, m) == (5, 10):
        return "K5"
    if (n, m) == (6, 9):
        return "K3,3"
    return f"a graph with {n} vertices and {m} edges"


def format_report(v: MengerVerdict, c: SimplicialComplex, witness: bool = False) -> str:
    lines = [f"complex: {v.name or 'unnamed'}"]
    lines.append(f"size: {len(c.vertices)} vertices, f-vector {list(c.f_vector())}, dimension {c.dim}")
    width = max(len(k) for k in CHECKS)
    for k in CHECKS:
        r = v.checks[k]
        lines.append(f"  {k:<{width}}  {r.status:<12}  {r.detail}")
    lines.append(f"conclusion: {v.label}")
    if v.conclusion == "menger-certified":
        lines.append("  all sufficient conditions hold: the boundary of W_N is the Menger curve")
    elif v.conclusion == "refuted":
        lines.append("  a necessary condition fails: the boundary of W_N is not the Menger curve")
    else:
        lines.append("  neither certified nor refuted")
    for note in v.notes:
        lines.append(f"  note: {note}")
    if witness:
        lines += _witness_lines(v, c)
    return "\n".join(lines) + "\n"


def _witness_lines(v: MengerVerdict, c: SimplicialComplex) -> list[str]:
    out = ["witnesses:"]
    f = v.checks["flag"]
    if f.status == FAIL:
        out.append("  unspanned cliques: " + " ".join(c.face_label(x) for x in f.witness))
    h = v.checks["hyperbolic"]
    if h.status == FAIL:
        out.append("  induced square: " + c.face_label(h.witness))
    s = v.checks["inseparable"]
    if s.status == FAIL:
        w = s.witness
        out.append(f"  separating set ({w.kind}): {c.face_label(w.vertex_set)}")
        for comp in w.components:
            out.append("    component: " + c.face_label(comp))
    coh = v.checks["cohomology"]
    if coh.status == FAIL:
        for e in coh.witness[:20]:
            where = "complex" if e.face is None else "minus " + c.face_label(e.face)
            out.append(f"  H^{e.n} = {e.group} ({where})")
    cert = v.certificate
    if cert is not None:
        out.append("  certificate cycle D: " + " ".join(c.label(x) for x in cert.d))
        for e in sorted(cert.gamma_map):
            out.append("    path: " + " ".join(c.label(x) for x in cert.gamma_map[e]))
    return out


def report_json(v: MengerVerdict, c: SimplicialComplex, witness: bool = False) -> str:
    data: dict = {
        "complex": v.name,
        "conclusion": v.conclusion,
        "label": v.label,
        "refuted_by": list(v.refuted_by),
        "checks": {k: {"status": r.status, "detail": r.detail} for k, r in v.checks.items()},
        "notes": v.notes,
    }
    if witness:
        s = v.checks["inseparable"].witness
        if s is not None:
            data["checks"]["inseparable"]["witness"] = {
                "kind": s.kind,
                "vertex_set": [c.label(x) for x in s.vertex_set],
            }
        sq = v.checks["hyperbolic"].witness
        if sq is not None:
            data["checks"]["hyperbolic"]["witness"] = [c.label(x) for x in sq]
        if v.certificate is not None:
            data["certificate"] = v.certificate.to_json_dict(c)
    return json.dumps(data, indent=1, sort_keys=True) + "\n"
