"""Command-line interface.

Exit codes: 0 certified / found / valid, 1 refuted / none / invalid,
2 input or resource error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import coxeter
from .cohomology import complement_complex, reduced_cohomology
from .complex import ComplexError, SimplicialComplex
from .generators import (
    FAMILIES,
    disk_k33_branches,
    disk_triangulation,
    dra_path,
    dra_subdivision_with_maps,
    family,
    moebius_k5_nerve,
)
from .io import ParseError, read_complex, write_complex
from .nonplanarity import (
    CertificateFormatError,
    SgCertificate,
    build_certificate,
    hamiltonian_cycles,
    load_certificate,
    search_sg_certificate,
    verify_sg_certificate,
)
from .report import (
    EXIT_CERTIFIED,
    EXIT_ERROR,
    EXIT_INCONCLUSIVE,
    EXIT_REFUTED,
    format_report,
    report_json,
    run_check,
)


class UsageError(Exception):
    pass


def sidecar_path(path: str | Path) -> Path:
    return Path(str(path) + ".cert.json")


def _load(path: str) -> SimplicialComplex:
    try:
        return read_complex(path)
    except FileNotFoundError:
        raise UsageError(f"{path}: no such file") from None
    except (ParseError, ComplexError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


# -- generate -------------------------------------------------------------------


def generate(name: str, n: int | None, dra: int) -> tuple[SimplicialComplex, SgCertificate | None]:
    """Build a family member, Dra-subdivided ``dra`` times, together with a
    verified certificate when one is known by construction."""
    if name not in FAMILIES:
        raise UsageError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    if name == "disk3":
        if dra:
            raise UsageError("disk3 has dimension 3; Dra subdivision needs dimension <= 2")
        size = n or 2
        c = disk_triangulation(size)
        g, gamma = disk_k33_branches(size)
        return c, _known_certificate(c, g, {e: tuple(p) for e, p in gamma.items()})
    c = family(name, n)
    if dra and c.dim > 2:
        raise UsageError(f"{name} has dimension {c.dim}; Dra subdivision needs dimension <= 2")
    if name == "moebius-k5":
        c, g = moebius_k5_nerve()
        gamma = {e: [e[0], e[1]] for e in g.sorted_edges()}
    else:
        g, gamma = None, {}
    for _ in range(dra):
        c, maps = dra_subdivision_with_maps(c)
        gamma = {e: dra_path(p, maps) for e, p in gamma.items()}
    if dra:
        c = c.with_name(f"{name}-dra{dra}")
    if g is None:
        return c, None
    return c, _known_certificate(c, g, {e: tuple(p) for e, p in gamma.items()})


def _known_certificate(c, g, gamma) -> SgCertificate | None:
    for cyc in hamiltonian_cycles(g):
        cert = build_certificate(c, g, gamma, cyc)
        if verify_sg_certificate(c, cert).valid:
            return cert
    return None


# -- subcommands ------------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    c = _load(args.file)
    sidecar = None if args.no_cache else sidecar_path(args.file)
    v = run_check(c, sg_budget=args.sg_budget, sidecar=sidecar, use_cache=not args.no_cache)
    out = report_json(v, c, args.witness) if args.json else format_report(v, c, args.witness)
    sys.stdout.write(out)
    return v.exit_code


def cmd_generate(args: argparse.Namespace) -> int:
    c, cert = generate(args.family, args.n, args.dra)
    write_complex(c, args.output, as_json=args.json)
    side = sidecar_path(args.output)
    if cert is not None:
        side.write_text(cert.dumps(c))
        print(f"wrote {args.output} and {side}")
    else:
        if side.exists():
            side.unlink()
        print(f"wrote {args.output}")
    return 0


def cmd_cohomology(args: argparse.Namespace) -> int:
    c = _load(args.file)
    dims = [args.dim] if args.dim is not None else list(range(-1, max(c.dim, 0) + 1))
    targets: list[tuple[str, SimplicialComplex]] = [("complex", c)]
    if args.complement:
        targets += [("minus " + c.face_label(f), complement_complex(c, f)) for f in c.all_faces()]
    rows = []
    for name, k in targets:
        for n in dims:
            rows.append({"space": name, "n": n, "group": str(reduced_cohomology(k, n, collapse=True))})
    if args.json:
        print(json.dumps(rows, indent=1))
    else:
        width = max(len(r["space"]) for r in rows)
        for r in rows:
            print(f"{r['space']:<{width}}  H^{r['n']:<3} {r['group']}")
    return 0


def cmd_sg_search(args: argparse.Namespace) -> int:
    c = _load(args.file)
    targets = tuple(args.target) if args.target else ("K3,3", "K5")
    res = search_sg_certificate(c, budget=args.budget, targets=targets)
    print(f"status: {res.status} ({res.nodes} search nodes)")
    if res.certificate is None:
        return EXIT_REFUTED if res.status == "none" else EXIT_INCONCLUSIVE
    print(f"target: {res.target}")
    text = res.certificate.dumps(c)
    if args.output:
        Path(args.output).write_text(text)
        print(f"certificate written to {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_CERTIFIED


def cmd_sg_verify(args: argparse.Namespace) -> int:
    c = _load(args.file)
    try:
        cert = load_certificate(c, Path(args.cert).read_text())
    except FileNotFoundError:
        raise UsageError(f"{args.cert}: no such file") from None
    except CertificateFormatError as exc:
        for p in exc.problems[:10]:
            print(f"malformed: {p}")
        if len(exc.problems) > 10:
            print(f"malformed: ... and {len(exc.problems) - 10} more problems")
        return EXIT_ERROR
    verdict = verify_sg_certificate(c, cert)
    if verdict.valid:
        print("valid")
        return EXIT_CERTIFIED
    for clause, msg in zip(verdict.failed, verdict.messages):
        print(f"failed {clause}: {msg}")
    return EXIT_REFUTED


def cmd_cayley(args: argparse.Namespace) -> int:
    c = _load(args.file)
    if args.link is not None:
        word = coxeter.parse_word(args.link, c)
        g = coxeter.normal_form(word, c)
        radius = max(args.radius, len(g) + c.dim + 1)
        b = coxeter.ball(c, radius, args.max_elements)
        lk = coxeter.vertex_link(b, g)
        print(f"element: {coxeter.format_word(g, c)} (length {len(g)})")
        print(f"link f-vector: {list(lk.f_vector())}")
        for f in lk.maximal_faces:
            print("  " + lk.face_label(f))
        return 0
    if args.cubes or args.edges_out:
        b = coxeter.ball(c, args.radius, args.max_elements)
        if args.edges_out:
            with open(args.edges_out, "w") as fh:
                for g, h, s in b.edges:
                    fh.write(f"{coxeter.format_word(g, c)}\t{coxeter.format_word(h, c)}\t{c.label(s)}\n")
            print(f"{len(b.edges)} edges written to {args.edges_out}")
        if args.cubes:
            counts: dict[int, int] = {}
            for cube in b.cubes:
                counts[cube.dim] = counts.get(cube.dim, 0) + 1
            for d in sorted(counts):
                print(f"cubes of dimension {d}: {counts[d]}")
        return 0
    spheres = coxeter.sphere_sizes(c, args.radius, args.max_elements)
    balls = coxeter.ball_sizes(spheres)
    print("r  sphere  ball")
    for r, (s, t) in enumerate(zip(spheres, balls)):
        print(f"{r}  {s}  {t}")
    return 0


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="nervecheck",
        description="Decide whether a flag complex is the nerve of a right-angled Coxeter "
        "group with Menger-curve boundary.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="run every check and print a verdict")
    s.add_argument("file")
    s.add_argument("--json", action="store_true", help="machine-readable report")
    s.add_argument("--witness", action="store_true", help="include witnesses of failures and the certificate")
    s.add_argument("--sg-budget", type=int, default=2_000_000, help="search nodes for the certificate search")
    s.add_argument("--no-cache", action="store_true", help="ignore FILE.cert.json and cached certificates")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("generate", help="write a complex from a built-in family")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("--n", type=int, default=None, help="size parameter of the family")
    s.add_argument("--dra", type=int, default=0, help="number of Dra subdivision steps")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--json", action="store_true", help="write JSON instead of the text format")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("cohomology", help="reduced integral cohomology")
    s.add_argument("file")
    s.add_argument("--dim", type=int, default=None)
    s.add_argument("--complement", action="store_true", help="also every face complement")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("sg-search", help="search for a non-planarity certificate")
    s.add_argument("file")
    s.add_argument("--budget", type=int, default=2_000_000)
    s.add_argument("--target", action="append", choices=("K3,3", "K5"))
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(func=cmd_sg_search)

    s = sub.add_parser("sg-verify", help="verify a certificate file")
    s.add_argument("file")
    s.add_argument("cert")
    s.set_defaults(func=cmd_sg_verify)

    s = sub.add_parser("cayley", help="Cayley graph balls, growth, cubes and links")
    s.add_argument("file")
    s.add_argument("--radius", type=int, required=True)
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--spheres", action="store_true", help="sphere and ball sizes (default)")
    mode.add_argument("--cubes", action="store_true", help="count cubes by dimension")
    mode.add_argument("--link", metavar="WORD", default=None, help="vertex link of a group element")
    s.add_argument("--edges-out", default=None, help="write the labelled edge list")
    s.add_argument("--max-elements", type=int, default=coxeter.DEFAULT_MAX_ELEMENTS)
    s.set_defaults(func=cmd_cayley)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "radius", 0) is not None and getattr(args, "radius", 0) < 0:
        print("error: radius must be >= 0", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ComplexError, coxeter.ResourceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
