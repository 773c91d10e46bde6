"""Command line: recognize, generate, reduce, certify, witness, stats.

Exit codes: 0 yes/member/valid, 1 no/non-member/invalid (or witnessed
non-membership), 2 unknown or inconclusive, 64 usage error, 65 malformed
input.  Payloads go to stdout as JSON with a fixed key order; diagnostics
go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import generators, graph as G, io, recognizer, reductions, spectral
from .exact import DEFAULT_BUDGET
from .splitting import SplitMode

EXIT_YES, EXIT_NO, EXIT_UNKNOWN, EXIT_USAGE, EXIT_FORMAT = 0, 1, 2, 64, 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii", errors="replace") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _emit(g: G.Graph, fmt: str) -> str:
    try:
        return io.emit_graph(g, fmt) + "\n"
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _dumps(obj) -> str:
    return json.dumps(obj) + "\n"


def _load_graph(args) -> G.Graph:
    return io.parse_graph(_read(args.input), args.format)


# -- subcommands --------------------------------------------------------------

def cmd_recognize(args) -> int:
    g = _load_graph(args)
    mode = SplitMode.parse(args.cls)
    verdict = recognizer.recognize(g, mode, args.budget, args.threads)
    if args.certificate and verdict.proof() is not None:
        _write(args.certificate, recognizer.certificate_to_json(verdict.proof()) + "\n")
    _write(None, _dumps(verdict.to_dict()))
    return {recognizer.MEMBER: EXIT_YES, recognizer.NON_MEMBER: EXIT_NO}.get(verdict.status, EXIT_UNKNOWN)


def _generated(args):
    what = args.what
    try:
        if what == "zykov":
            return generators.zykov(args.k).graph, None
        if what == "descartes":
            return generators.descartes(args.k).graph, None
        if what == "ug":
            gg = reductions.unequality_gadget(args.c)
            return gg.graph, gg
        gg = generators.gallery(args.name, *args.params)
        colored = any(c is not G.Color.UNCOLORED for c in gg.colors)
        return gg.graph, gg if colored else None
    except generators.SizeGuardError as exc:
        raise UsageError(str(exc)) from None
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc).strip("'\"")) from None


def cmd_generate(args) -> int:
    g, gadget = _generated(args)
    if args.roles and gadget is not None:
        _write(args.roles, _dumps(gadget.sidecar()))
    _write(args.output, _emit(g, args.format))
    return EXIT_YES


def cmd_reduce(args) -> int:
    summary: dict = {}
    gadget = None
    if args.kind in ("sat-zykov", "sat-bd"):
        if args.cnf is None:
            raise UsageError("--cnf is required for SAT reductions")
        inst = reductions.parse_dimacs_cnf(_read(args.cnf))
        if args.kind == "sat-zykov":
            gadget = reductions.sat_to_zykov(inst)
        else:
            gadget = reductions.sat_to_bd(inst, args.literal_wiring)
        g = gadget.graph
    else:
        if args.input is None:
            raise UsageError("--input is required")
        src = _load_graph(args)
        if args.kind == "mis":
            if args.k is None:
                raise UsageError("--k is required for the stable set reduction")
            g, bound = reductions.mis_reduction(src, args.k)
            summary["bound"] = bound
        else:
            if args.c not in (2, 3):
                raise UsageError("--c must be 2 or 3")
            g = reductions.coloring_reduction(src, args.c)
    summary = {"vertices": g.n, "edges": g.m, **summary}
    if args.roles and gadget is not None:
        _write(args.roles, _dumps(gadget.sidecar()))
    _write(args.output, _emit(g, args.output_format))
    # keep stdout a single document
    target = sys.stdout if args.output not in (None, "-") else sys.stderr
    target.write(_dumps(summary))
    return EXIT_YES


def cmd_certify(args) -> int:
    g = _load_graph(args)
    try:
        cert = recognizer.certificate_from_json(_read(args.certificate))
    except ValueError as exc:
        print(f"bad certificate: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    if isinstance(cert, recognizer.PeelCertificate):
        reason = recognizer.explain_peel(g, cert)
        ok = reason is None
    else:
        try:
            res = recognizer.verify_non_membership(g, cert, args.budget)
        except ValueError as exc:
            res, reason = False, str(exc)
        else:
            reason = None if res is True else "induced subgraph has a non-empty splitting set"
        if res is not True and res is not False:
            _write(None, _dumps({"valid": None, "kind": "non_membership", "reason": "budget exhausted"}))
            return EXIT_UNKNOWN
        ok = res is True
    payload = {"valid": ok, "kind": cert.to_dict()["kind"]}
    if not ok:
        payload["reason"] = reason
        print(f"certificate rejected: {reason}", file=sys.stderr)
    _write(None, _dumps(payload))
    return EXIT_YES if ok else EXIT_NO


def cmd_witness(args) -> int:
    g = _load_graph(args)
    report = spectral.expansion_non_zykov(g, args.tol)
    payload = report.to_dict()
    if args.mixing_samples:
        try:
            payload["mixing"] = spectral.mixing_check(g, args.mixing_samples, args.seed, args.tol).to_dict()
        except spectral.SpectralDomainError as exc:
            payload["mixing"] = {"error": str(exc)}
    _write(None, _dumps(payload))
    return EXIT_NO if report.witnessed else EXIT_UNKNOWN


def cmd_stats(args) -> int:
    g = _load_graph(args)
    flags = G.structure_flags(g)
    gi = G.girth(g)
    degs = g.degrees()
    payload = {
        "n": g.n,
        "m": g.m,
        "components": len(G.connected_components(g)),
        "min_degree": int(degs.min()) if g.n else 0,
        "max_degree": int(degs.max()) if g.n else 0,
        "girth": None if gi == float("inf") else int(gi),
        "is_forest": flags.is_forest,
        "is_bipartite": flags.is_bipartite,
        "is_triangle_free": flags.is_triangle_free,
    }
    _write(None, _dumps(payload))
    return EXIT_YES


# -- parser ------------------------------------------------------------------

def _add_input(p, required=True):
    p.add_argument("--input", required=required, help="graph file, or - for stdin")
    p.add_argument("--format", default="graph6", choices=io.FORMATS)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="zykov", description="Zykov and Blanche Descartes graph toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("recognize", help="decide class membership")
    r.add_argument("--class", dest="cls", required=True, choices=("zykov", "bd"))
    _add_input(r)
    r.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    r.add_argument("--certificate", help="write the certificate JSON here")
    r.add_argument("--threads", type=int, default=1)
    r.set_defaults(func=cmd_recognize)

    gen = sub.add_parser("generate", help="build a graph")
    gsub = gen.add_subparsers(dest="what", required=True, parser_class=_Parser)
    for name in ("zykov", "descartes"):
        q = gsub.add_parser(name)
        q.add_argument("k", type=int)
    q = gsub.add_parser("gallery")
    q.add_argument("name")
    q.add_argument("params", nargs="*", type=int)
    q = gsub.add_parser("ug")
    q.add_argument("c", type=int)
    for q in gsub.choices.values():
        q.add_argument("--format", default="graph6", choices=io.FORMATS)
        q.add_argument("--roles", help="write the color/role sidecar JSON here")
        q.add_argument("--output")
        q.set_defaults(func=cmd_generate)

    red = sub.add_parser("reduce", help="compile a reduction")
    red.add_argument("kind", choices=("sat-zykov", "sat-bd", "mis", "coloring"))
    red.add_argument("--cnf")
    red.add_argument("--literal-wiring", default="symmetric", choices=("symmetric", "text"))
    _add_input(red, required=False)
    red.add_argument("--k", type=int)
    red.add_argument("--c", type=int)
    red.add_argument("--output-format", default="graph6", choices=io.FORMATS)
    red.add_argument("--roles")
    red.add_argument("--output")
    red.set_defaults(func=cmd_reduce)

    c = sub.add_parser("certify", help="re-verify a certificate")
    _add_input(c)
    c.add_argument("--certificate", required=True)
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    c.set_defaults(func=cmd_certify)

    w = sub.add_parser("witness", help="spectral non-membership witness")
    _add_input(w)
    w.add_argument("--tol", type=float, default=spectral.DEFAULT_TOL)
    w.add_argument("--mixing-samples", type=int, default=0)
    w.add_argument("--seed", type=int, default=0)
    w.set_defaults(func=cmd_witness)

    s = sub.add_parser("stats", help="basic structure of a graph")
    _add_input(s)
    s.set_defaults(func=cmd_stats)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"zykov: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (io.FormatError, reductions.CnfFormatError) as exc:
        print(f"zykov: format error: {exc}", file=sys.stderr)
        return EXIT_FORMAT


if __name__ == "__main__":
    sys.exit(main())
