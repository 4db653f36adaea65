"""Command line entry point: ``boolcert <subcommand> FILE [flags]``.

Exit codes: 0 success, 2 parse/input error, 3 cap exceeded, 4 UNSOUND audit,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .algebra import Mode, eliminate_univariate
from .certificate import DEFAULT_BETA_BUDGET, certify
from .errors import CapExceededError, ParseError
from .oracle import AuditClass, audit, audit_random, brute_force
from .saturation import build_g
from .symmetry import stabilizer
from .sysfile import format_system, read_system

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_UNSOUND = 4
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise UsageError(message)


SCHEMAS = ("verdict", "elimination", "audit", "stab", "saturate", "brute", "parse")


def load_schema(name: str) -> dict:
    """The shipped JSON schema for one output kind (see SCHEMAS)."""
    text = resources.files("boolcert").joinpath(f"schemas/{name}.schema.json").read_text("utf-8")
    return json.loads(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.QUOTIENT.value)
    common.add_argument("--var", type=int, default=0, dest="elim_var", help="elimination variable index")
    common.add_argument("--raw-degree-cap", type=int, default=None, help="RAW mode degree cap (default N)")
    common.add_argument("--beta-budget", type=int, default=DEFAULT_BETA_BUDGET)
    common.add_argument("--beta-strategy", choices=["multiset", "cube"], default="multiset")
    common.add_argument("--group-cap", type=int, default=8)
    common.add_argument("--cube-cap", type=int, default=16)
    common.add_argument("--c0", type=int, default=None, dest="c0_threshold",
                        help="warn when the destabilizer is larger than this")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)

    parser = _Parser(prog="boolcert", description="Symmetry-based certificates for Boolean varieties.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True
    for name, helptext in [
        ("parse", "validate a system file and print it canonically"),
        ("stab", "stabilizer order and destabilizer size"),
        ("saturate", "products of moved copies (the system G)"),
        ("eliminate", "univariate polynomial in the ideal of G with cofactors"),
        ("certify", "full decision pipeline"),
        ("brute", "exhaustive cube enumeration of Z(F)"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file")
        if name == "saturate":
            p.add_argument("--sidecar", default=None, help="write the JSON summary to this path")
        if name == "stab":
            p.add_argument("--members", action="store_true", help="also list destabilizer members")
        if name == "brute":
            p.add_argument("--timing", action="store_true", help="include elapsed seconds")
    p = sub.add_parser("check", parents=[common], help="audit certify against the oracle (JSONL)")
    p.add_argument("files", nargs="*")
    p.add_argument("--random", type=int, default=0, metavar="COUNT",
                   help="also audit COUNT seeded random systems")
    p.add_argument("--max-vars", type=int, default=4)
    p.add_argument("--max-polys", type=int, default=3)
    p.add_argument("--max-terms", type=int, default=3)
    return parser


def _certify_kwargs(args) -> dict:
    return dict(
        elim_var=args.elim_var,
        raw_degree_cap=args.raw_degree_cap,
        beta_budget=args.beta_budget,
        group_cap=args.group_cap,
        cube_cap=args.cube_cap,
        c0_threshold=args.c0_threshold,
        workers=args.threads,
    )


def _cmd_parse(args, out):
    f_sys = read_system(args.file)
    if args.json:
        out.write(_dump({
            "vars": f_sys.ambient_n,
            "K": f_sys.K,
            "n": f_sys.n_terms,
            "polys": [{"name": name, "poly": str(f), "terms": f.term_count} for name, f in f_sys.polys],
        }) + "\n")
    else:
        out.write(format_system(f_sys))


def _stab_payload(f_sys, args):
    stab, destab = stabilizer(f_sys, cap=args.group_cap, workers=args.threads)
    payload = {
        "vars": f_sys.ambient_n,
        "stab_order": destab.stab_order,
        "c": destab.c,
        "stabilizer": [str(s) for s in stab],
    }
    if args.c0_threshold is not None:
        payload["c0"] = args.c0_threshold
        payload["within_c0"] = destab.c <= args.c0_threshold
    return payload, destab


def _cmd_stab(args, out):
    f_sys = read_system(args.file)
    payload, destab = _stab_payload(f_sys, args)
    if args.members:
        payload["destabilizer"] = [str(s) for s in destab.members]
    if args.json:
        out.write(_dump(payload) + "\n")
        return
    out.write(f"stab_order {payload['stab_order']}\nc {payload['c']}\n")
    out.write("stabilizer " + " ".join(payload["stabilizer"]) + "\n")
    if args.members:
        out.write("destabilizer " + " ".join(payload["destabilizer"]) + "\n")
    if args.c0_threshold is not None and not payload["within_c0"]:
        out.write(f"warning: c = {destab.c} exceeds c0 = {args.c0_threshold}\n")


def _cmd_saturate(args, out):
    f_sys = read_system(args.file)
    _, destab = stabilizer(f_sys, cap=args.group_cap, workers=args.threads)
    sat = build_g(f_sys, destab)
    summary = sat.summary()
    summary["vars"] = f_sys.ambient_n
    summary["names"] = f_sys.names
    if args.sidecar:
        with open(args.sidecar, "w", encoding="utf-8") as fh:
            fh.write(_dump(summary) + "\n")
    if args.json:
        summary = dict(summary, g=[str(g) for g in sat.g_polys])
        out.write(_dump(summary) + "\n")
    else:
        out.write(format_system(sat.as_system()))


def _cmd_eliminate(args, out):
    f_sys = read_system(args.file)
    _, destab = stabilizer(f_sys, cap=args.group_cap, workers=args.threads)
    sat = build_g(f_sys, destab)
    res = eliminate_univariate(sat, var=args.elim_var, mode=args.mode, raw_degree_cap=args.raw_degree_cap)
    payload = res.to_json()
    payload["c"] = destab.c
    if args.json:
        out.write(_dump(payload) + "\n")
        return
    out.write(f"mode {payload['mode']}\n")
    out.write(f"p {payload['p_text'] if payload['p_text'] is not None else 'NONE'}\n")
    out.write("beta " + " ".join(payload["beta"]) + "\n")
    for k, h in enumerate(payload["cofactors"]):
        out.write(f"h{k} {h}\n")
    out.write(f"verified {str(payload['verified']).lower()}\n")


def _cmd_certify(args, out):
    f_sys = read_system(args.file)
    verdict = certify(f_sys, args.mode, args.beta_strategy, **_certify_kwargs(args))
    payload = verdict.to_json()
    if args.json:
        out.write(_dump(payload) + "\n")
        return
    out.write(f"{payload['tag']}\n")
    if payload["witness"] is not None:
        out.write("witness " + " ".join(map(str, payload["witness"])) + "\n")
    out.write(f"mode {payload['mode']}  c {payload['c']}  stab_order {payload['stab_order']}\n")
    for line in payload["evidence"]:
        out.write(f"  {line}\n")


def _cmd_brute(args, out):
    f_sys = read_system(args.file)
    report = brute_force(f_sys, cap=args.cube_cap, workers=args.threads)
    payload = report.to_json(timing=args.timing)
    if args.json:
        out.write(_dump(payload) + "\n")
        return
    out.write(f"count {report.count}\n")
    for p in report.points:
        out.write("".join(map(str, p)) + "\n")
    if args.timing:
        out.write(f"elapsed {report.elapsed:.3f}s\n")


def _cmd_check(args, out):
    kwargs = _certify_kwargs(args)
    kwargs["beta_strategy"] = args.beta_strategy
    reports = []
    for path in args.files:
        rep = audit(read_system(path), args.mode, **kwargs)
        rec = rep.to_json()
        rec["file"] = path
        out.write(json.dumps(rec, sort_keys=True) + "\n")
        reports.append(rep)
    if args.random:
        gen = dict(max_vars=args.max_vars, max_polys=args.max_polys, max_terms=args.max_terms)
        for rep in audit_random(args.random, args.seed, args.mode, gen=gen, **kwargs):
            out.write(json.dumps(rep.to_json(), sort_keys=True) + "\n")
            reports.append(rep)
    if not reports:
        raise UsageError("check needs at least one file or --random COUNT")
    if any(r.classification is AuditClass.UNSOUND for r in reports):
        return EXIT_UNSOUND
    return EXIT_OK


COMMANDS = {
    "parse": _cmd_parse,
    "stab": _cmd_stab,
    "saturate": _cmd_saturate,
    "eliminate": _cmd_eliminate,
    "certify": _cmd_certify,
    "brute": _cmd_brute,
    "check": _cmd_check,
}


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    # certificates are printed exactly, however many digits they need
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    try:
        args = build_parser().parse_args(argv)
    except UsageError:
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        code = COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"boolcert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"boolcert: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"boolcert: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceededError as exc:
        print(f"boolcert: {exc}", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK if code is None else code


def main():
    sys.exit(run())
