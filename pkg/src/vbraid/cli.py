"""Command-line front end: ``vbraid <command> ...``.

Exit codes for ``equal``: 0 equivalent, 1 inequivalent, 2 unknown.  Every
other command exits 0 on success, 1 on a failed self-test and 3 on bad
input.  Diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .errors import VBraidError
from .gauss import canonical_form, gauss_to_json, load_gauss, to_text, vm_equivalent, word_to_gauss
from .pure import verify_pv_presentation
from .realize import realize
from .search import Budget, min_genus_bounded, r_equivalent_bounded
from .surface import build_ribbon_graph, surface_summary
from .word import parse_word, to_text as word_text, word_from_json, word_to_json

BAD_INPUT = 3


def _read(value: str | None) -> str:
    if value is None or value == "-":
        return sys.stdin.read().strip("\n")
    return value


def _budget(args) -> Budget:
    base = Budget.from_env()
    return Budget(
        args.budget if args.budget is not None else base.max_nodes,
        args.slack if args.slack is not None else base.insert_slack,
        args.time_limit_ms if args.time_limit_ms is not None else base.time_limit_ms,
    )


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=False))


def cmd_word(args) -> int:
    raw = _read(args.word)
    w = word_from_json(raw) if raw.lstrip().startswith("{") else parse_word(raw, args.n)
    if args.json:
        _emit(word_to_json(w))
    else:
        print(word_text(w))
    return 0


def cmd_gauss(args) -> int:
    g = word_to_gauss(parse_word(_read(args.word), args.n))
    if args.canonical:
        g = canonical_form(g)
    if args.json:
        _emit(gauss_to_json(g))
    else:
        print(to_text(g))
    return 0


def cmd_equal(args) -> int:
    w1, w2 = parse_word(args.word1, args.n), parse_word(args.word2, args.n)
    if args.reid:
        verdict = r_equivalent_bounded(w1, w2, _budget(args))
        if args.json:
            _emit(verdict.to_json())
        else:
            print(verdict.status)
            if verdict.trace is not None:
                print(verdict.trace.dumps())
            if verdict.certificate is not None:
                print(json.dumps(verdict.certificate))
        return verdict.exit_code
    same = vm_equivalent(w1, w2)
    if args.json:
        _emit({"verdict": "equivalent" if same else "inequivalent"})
    else:
        print("equivalent" if same else "inequivalent")
    return 0 if same else 1


def cmd_genus(args) -> int:
    w = parse_word(_read(args.word), args.n)
    if args.minimize:
        result = min_genus_bounded(w, _budget(args))
        if args.json:
            _emit({"genus": result.genus, "witness": word_text(result.witness),
                   "start_genus": result.start_genus, "nodes": result.nodes})
        else:
            print(result.genus)
            print(word_text(result.witness))
        return 0
    summary = surface_summary(build_ribbon_graph(w))
    if args.json:
        _emit({"genus": summary.genus, "V": summary.V, "E": summary.E,
               "boundary_count": summary.boundary_count})
    else:
        print(summary.genus)
    return 0


def cmd_realize(args) -> int:
    g = load_gauss(_read(args.gauss))
    w = realize(g)
    if args.json:
        _emit(word_to_json(w))
    else:
        print(word_text(w))
    return 0


def cmd_export(args) -> int:
    rg = build_ribbon_graph(parse_word(_read(args.word), args.n))
    sys.stdout.write(rg.to_text())
    return 0


def cmd_selftest(args) -> int:
    if args.suite == "pv":
        report = verify_pv_presentation(args.n)
        ok = report.ok
        out = {
            "suite": "pv",
            "n": args.n,
            "ok": ok,
            "triangle": report.count("triangle"),
            "commutation": report.count("commutation"),
            "passed": sum(c.status == "pass" for c in report.checks),
            "total": len(report.checks),
        }
        if args.verbose:
            out["instances"] = report.to_json()
        _emit(out)
        return 0 if ok else 1
    suite = checks.SUITES[args.suite]
    kwargs = {}
    if args.suite in ("roundtrip", "vm", "r3", "genus-vm", "omega-invariants"):
        kwargs["seed"] = args.seed
        if args.trials is not None:
            kwargs["trials" if args.suite != "vm" else "words"] = args.trials
    result = suite(**kwargs)
    _emit(result.to_json())
    return 0 if result.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vbraid", description="Virtual braid computations.")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized commands")
    sub = parser.add_subparsers(dest="command", required=True)

    def strands(p):
        p.add_argument("-n", type=int, required=True, help="number of strands")

    def budget(p):
        p.add_argument("--budget", type=int, default=None, help="max search nodes")
        p.add_argument("--slack", type=int, default=None, help="Omega2 insertion slack")
        p.add_argument("--time-limit-ms", type=int, default=None)

    p = sub.add_parser("word", help="normalize a word (text or JSON)")
    strands(p)
    p.add_argument("word", nargs="?")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("gauss", help="word -> braid-Gauss diagram")
    strands(p)
    p.add_argument("word", nargs="?")
    p.add_argument("--json", action="store_true")
    p.add_argument("--canonical", action="store_true")
    p.set_defaults(func=cmd_gauss)

    p = sub.add_parser("equal", help="compare two words")
    strands(p)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--vm", action="store_true", help="exact virtual equivalence")
    mode.add_argument("--reid", action="store_true", help="bounded Reidemeister search")
    budget(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("genus", help="canonical genus of a word")
    strands(p)
    p.add_argument("word", nargs="?")
    p.add_argument("--minimize", action="store_true")
    budget(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("realize", help="Gauss text/JSON -> word")
    p.add_argument("gauss", nargs="?")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("export", help="ribbon graph description of a word")
    strands(p)
    p.add_argument("word", nargs="?")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("selftest", help="run a verification suite")
    p.add_argument("suite", choices=["pv", *checks.SUITES])
    p.add_argument("-n", type=int, default=4)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (VBraidError, ValueError, KeyError) as exc:
        print(f"vbraid: error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
