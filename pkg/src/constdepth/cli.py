"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 resource ceiling hit (a
partial report is still printed), 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from . import betti, explore, hilbert, lattice, rees, summand
from .certify import verify_report
from .errors import InvariantViolation, NotEquigenerated, ParseError, ResourceLimitExceeded
from .formats import IdealDocument, parse_ideal, serialize
from .monomial import Field
from .report import CACHE_ENV, ResultCache, cache_key, make_report, render_text

log = logging.getLogger("constdepth")

EXIT_OK, EXIT_USAGE, EXIT_LIMIT, EXIT_INVARIANT = 0, 1, 2, 3

IDEAL_COMMANDS = ["depth-function", "betti", "hilbert", "dim", "summand", "retract", "rees-hvector",
                  "rees-normal", "rees-cm", "spread", "analyze"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(p):
    p.add_argument("--field", default=None, help="rational (default) or fp:<p>")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--cache-dir", default=None, help=f"result cache directory (or ${CACHE_ENV})")
    p.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    p.add_argument("--limit-closure", type=int, default=betti.DEFAULT_CLOSURE_LIMIT,
                   help="ceiling on lcm-closure size per power")
    p.add_argument("--limit-basis", type=int, default=lattice.DEFAULT_BASIS_LIMIT,
                   help="ceiling on Hilbert basis working-set size")
    p.add_argument("--limit-facets", type=int, default=lattice.DEFAULT_FACET_LIMIT,
                   help="ceiling on candidate facet / simplicial subsets")
    p.add_argument("--limit-power", type=int, default=None, help="ceiling on --max-power")
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser():
    parser = _Parser(prog="constdepth", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in IDEAL_COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("ideal", help="ideal file (symbolic or JSON); '-' for stdin")
        p.add_argument("--max-power", type=int, default=5)
        p.add_argument("--degree-bound", type=int, default=None)
        p.add_argument("--window", type=int, default=4)
        _common(p)
    p = sub.add_parser("verify", help="re-check the certificates in a saved JSON report")
    p.add_argument("report", help="JSON report file; '-' for stdin")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("-v", "--verbose", action="store_true")
    p = sub.add_parser("degree-selection")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--blocks", required=True,
                   help="block count s (contiguous blocks), or a partition like '1,2;3'")
    p.add_argument("--subgroup", required=True, help="generators of H, e.g. '1,-1;0,2'")
    _common(p)
    p = sub.add_parser("explore")
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--rmax", type=int, default=3)
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--budget", type=float, default=None, help="seconds")
    p.add_argument("--max-power", type=int, default=5)
    p.add_argument("--degree-bound", type=int, default=None)
    p.add_argument("--window", type=int, default=4)
    p.add_argument("--control", action="append", default=[], help="extra ideal file to examine")
    _common(p)
    return parser


def _read_doc(path) -> IdealDocument:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    return parse_ideal(text)


def parse_blocks(spec: str, nvars: int):
    spec = spec.strip()
    if spec.isdigit():
        s = int(spec)
        if not 1 <= s <= nvars:
            raise UsageError(f"block count {s} must lie in 1..{nvars}")
        sizes = [nvars // s + (1 if i < nvars % s else 0) for i in range(s)]
        blocks, start = [], 0
        for size in sizes:
            blocks.append(list(range(start, start + size)))
            start += size
        return blocks
    try:
        return [[int(x) - 1 for x in part.split(",")] for part in spec.split(";")]
    except ValueError:
        raise UsageError(f"bad block spec {spec!r}") from None


def parse_vectors(spec: str):
    try:
        return [[int(x) for x in part.split(",")] for part in spec.split(";") if part.strip()]
    except ValueError:
        raise UsageError(f"bad vector list {spec!r}") from None


def _ideal_inputs(doc, I):
    return {"nvars": I.nvars, "gens": [list(g) for g in I.gens], "label": doc.label}


def _limits(args):
    return {"closure_limit": args.limit_closure, "basis_limit": args.limit_basis,
            "facet_limit": args.limit_facets}


def run_command(args, cache=None):
    """Returns (report, exit_code). Cached reports are served before any computation."""
    field = Field.parse(args.field) if args.field else None
    if args.command == "degree-selection":
        return _degree_selection(args, field or Field(), cache)
    if args.command == "explore":
        return _explore(args, cache)

    doc = _read_doc(args.ideal)
    I = doc.ideal()
    if field is not None:
        I = I.with_field(field)
    field = I.field
    cmd = args.command
    if I.is_unit or (I.is_zero and cmd not in ("hilbert", "dim")):
        raise UsageError(f"{cmd} needs a proper nonzero ideal")
    D = args.degree_bound if args.degree_bound is not None else rees.default_degree_bound(I.nvars)
    kmax = args.max_power
    inputs = {"ideal": _ideal_inputs(doc, I), "max_power": kmax, "degree_bound": D, "window": args.window}

    def compute():
        code = EXIT_OK
        certs = {}
        if cmd == "depth-function":
            rep = betti.depth_function(I, kmax, field, args.limit_closure, args.limit_power)
            out = rep.to_dict()
            if rep.truncated:
                code = EXIT_LIMIT
        elif cmd == "betti":
            bt = betti.betti_table(I, field, args.limit_closure)
            out = {"totals": bt.totals(), "projdim": bt.projdim, "depth": I.nvars - bt.projdim,
                   "entries": bt.as_rows()}
        elif cmd == "hilbert":
            out = {"numerator": hilbert.hilbert_numerator(I), "denominator_exponent": I.nvars,
                   "krull_dim": hilbert.krull_dim(I)}
        elif cmd == "dim":
            out = {"krull_dim": hilbert.krull_dim(I)}
        elif cmd == "summand":
            v = summand.is_summand(I, args.limit_basis)
            out = v.to_dict()
            certs = _summand_certs(v)
            if v.holds is None:
                code = EXIT_LIMIT
        elif cmd == "retract":
            c = summand.retract_check(I)
            out = {"retract": c is not None, "U": c.one_based() if c else None}
            if c:
                certs = {"retract": {"U": c.one_based()}}
        elif cmd == "rees-hvector":
            out = rees.rees_hvector(I, D, args.window).to_dict()
        elif cmd == "rees-normal":
            v = rees.rees_normality(I, args.limit_basis, args.limit_facets)
            out = v.to_dict()
            if v.witness is not None:
                certs = {"normality_witness": list(v.witness)}
            if v.holds is None:
                code = EXIT_LIMIT
        elif cmd == "rees-cm":
            st = rees.rees_cm_status(I, D, args.window, args.limit_basis, args.limit_facets)
            out = st.to_dict()
            certs = _cm_certs(st)
        elif cmd == "spread":
            out = {"analytic_spread": rees.analytic_spread(I)}
        elif cmd == "analyze":
            v = rees.analyze_constant_depth(I, kmax, D, args.window, field, **_limits(args))
            out = v.to_dict()
            certs = {**_summand_certs(v.summand), **_cm_certs(v.rees)}
            if v.empirical.truncated or v.summand.holds is None:
                code = EXIT_LIMIT
        else:
            raise UsageError(f"unknown command {cmd}")
        return out, certs, code

    return _with_cache(cache, cmd, inputs, str(field), compute)


def _with_cache(cache, cmd, inputs, field, compute):
    key = cache_key(cmd, {"inputs": inputs, "field": field})
    if cache is not None:
        hit = cache.lookup(key)
        if hit is not None:
            hit["cached"] = True
            return hit, EXIT_OK
    start = time.perf_counter()
    out, certs, code = compute()
    report = make_report(cmd, inputs, out, certs, field, round(time.perf_counter() - start, 6))
    # only complete results are cached; partial reports depend on the ceilings
    if cache is not None and code == EXIT_OK:
        cache.store(key, report)
    return report, code


def _summand_certs(v):
    certs = {}
    if v.certificate is not None:
        certs["retract"] = {"U": list(v.certificate)}
    if v.witness is not None:
        certs["summand_witness"] = list(v.witness)
    if v.hilbert_basis is not None and v.holds:
        certs["summand_hilbert_basis"] = [list(x) for x in v.hilbert_basis]
    return certs


def _cm_certs(st):
    certs = {}
    if st.normality is not None and st.normality.holds:
        certs["rees_hilbert_basis"] = [list(x) for x in st.normality.hilbert_basis]
    if st.normality is not None and st.normality.witness is not None:
        certs["normality_witness"] = list(st.normality.witness)
    if st.kind == rees.CERTIFIED_NOT_CM:
        certs["negative_h_index"] = st.negative_index
        certs["h_vector"] = list(st.hvector.coefficients)
    return certs


def _degree_selection(args, field, cache=None):
    blocks = parse_blocks(args.blocks, args.vars)
    H = parse_vectors(args.subgroup)
    if any(len(h) != len(blocks) for h in H):
        raise UsageError(f"subgroup generators must have {len(blocks)} coordinates")
    inputs = {"vars": args.vars, "blocks": [[j + 1 for j in b] for b in blocks], "subgroup": H}

    def compute():
        try:
            I = lattice.degree_selection(blocks, H, args.vars, field, args.limit_basis)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out = {"nvars": I.nvars, "gens": [list(g) for g in I.gens],
               "document": serialize(IdealDocument.from_ideal(I))}
        return out, {}, EXIT_OK

    return _with_cache(cache, "degree-selection", inputs, str(field), compute)


def _explore(args, cache=None):
    controls = [_read_doc(path).ideal() for path in args.control]
    inputs = {"nmax": args.nmax, "rmax": args.rmax, "degree": args.degree, "budget": args.budget,
              "max_power": args.max_power, "degree_bound": args.degree_bound, "window": args.window,
              "controls": [{"nvars": I.nvars, "gens": [list(g) for g in I.gens]} for I in controls]}

    def compute():
        rep = explore.explore_questions(args.nmax, args.rmax, args.degree, args.budget, kmax=args.max_power,
                                        D=args.degree_bound, w=args.window, controls=controls,
                                        **_limits(args))
        out = rep.to_dict()
        summary = out["summary"]
        code = EXIT_OK
        if summary["theorem_violations"]:
            code = EXIT_INVARIANT
        elif rep.exhausted or summary["errors"]:
            code = EXIT_LIMIT
        return out, {}, code

    return _with_cache(cache, "explore", inputs, "rational", compute)


def _verify(args) -> int:
    try:
        text = sys.stdin.read() if args.report == "-" else open(args.report).read()
        report = json.loads(text)
        results = verify_report(report)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"constdepth: error: cannot verify report: {exc}", file=sys.stderr)
        return EXIT_USAGE
    emit(make_report("verify", {"command": report.get("command")}, results), args.format)
    return EXIT_OK if all(results.values()) else EXIT_INVARIANT


def _cache_for(args):
    if args.no_cache:
        return None
    directory = args.cache_dir or os.environ.get(CACHE_ENV)
    return ResultCache(directory) if directory else None


def emit(report, fmt, stream=None):
    stream = stream or sys.stdout
    if fmt == "json":
        stream.write(json.dumps(report, indent=2) + "\n")
    else:
        stream.write(render_text(report))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "verify":
        return _verify(args)
    try:
        cache = _cache_for(args)
        report, code = run_command(args, cache)
    except (UsageError, ParseError, NotEquigenerated, ValueError) as exc:
        print(f"constdepth: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitExceeded as exc:
        print(f"constdepth: resource ceiling: {exc}", file=sys.stderr)
        emit(make_report(args.command, {}, {"error": str(exc), "partial": True}, {}, args.field or "rational"),
             args.format)
        return EXIT_LIMIT
    except InvariantViolation as exc:
        print(f"constdepth: invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    emit(report, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
