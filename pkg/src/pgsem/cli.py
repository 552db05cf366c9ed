"""Command-line front end.

Exit codes: 0 success, 1 linguistic failure (ungrammatical sentence or
failed demo check), 2 input or environment error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

import numpy as np

from .demo import run_demo
from .engine import analyze, analyze_all, compute_meaning, similarity
from .errors import NoReduction, PgsemError
from .lexicon import load_lexicon
from .pregroup import parse_type, render_ascii, render_dot

EXIT_OK = 0
EXIT_LINGUISTIC = 1
EXIT_INPUT = 2

DEFAULT_ALL_LIMIT = 16


def _load(path):
    with open(path, encoding="utf-8") as handle:
        return load_lexicon(handle.read())


def _target(args, lexicon):
    return parse_type(args.target, lexicon.registry)


def cmd_check(args):
    lexicon = _load(args.lexicon)
    tokens = args.sentence.split()
    try:
        analysis = analyze(tokens, lexicon, _target(args, lexicon))
    except NoReduction:
        for token in tokens:
            typings = lexicon.lookup(token) or []
            print("%s\t%s" % (token, " | ".join(str(e.typing) for e in typings)))
        print("UNGRAMMATICAL")
        return EXIT_LINGUISTIC
    for token, entry in zip(tokens, analysis.chosen):
        print("%s\t%s" % (token, entry.typing))
    print("type: %s" % " ".join(str(t) for t in analysis.flat_types))
    print("GRAMMATICAL")
    return EXIT_OK


def cmd_diagram(args):
    lexicon = _load(args.lexicon)
    target = _target(args, lexicon)
    render = render_dot if args.format == "dot" else render_ascii
    if args.all:
        analyses = list(analyze_all(args.sentence.split(), lexicon, target,
                                    limit=args.limit))
        if not analyses:
            print("UNGRAMMATICAL", file=sys.stderr)
            return EXIT_LINGUISTIC
    else:
        analyses = [analyze(args.sentence.split(), lexicon, target)]
    out = [render(a.diagram, a.flat_types, lexicon.poset) for a in analyses]
    print("\n\n".join(out))
    return EXIT_OK


def _basis_label(flat_types, survivors, index):
    parts = ["%s[%d]" % (flat_types[p].base, i)
             for p, i in zip(survivors, index)]
    return " ".join(parts) if parts else "scalar"


def cmd_mean(args):
    lexicon = _load(args.lexicon)
    target = _target(args, lexicon)
    result = compute_meaning(
        analyze(args.sentence.split(), lexicon, target), lexicon)
    vector = result.vector
    if args.format == "json":
        print(json.dumps({
            "target": str(target),
            "shape": list(vector.shape),
            "vector": [float(x) for x in vector.data.ravel()],
        }))
        return EXIT_OK
    analysis = result.analysis
    for index in np.ndindex(*vector.shape) if vector.rank else [()]:
        label = _basis_label(analysis.flat_types,
                             analysis.diagram.survivors, index)
        value = vector.data[index] if index else vector.item()
        print("%s\t%s" % (label, value))
    return EXIT_OK


def cmd_sim(args):
    lexicon = _load(args.lexicon)
    target = _target(args, lexicon)
    value = similarity(args.sentence.split(), args.sentence2.split(),
                       lexicon, target, mode=args.mode)
    if isinstance(value, bool):
        value = int(value)
    print(value)
    return EXIT_OK


def cmd_demo(args):
    results = run_demo()
    if args.format == "json":
        print(json.dumps({"checks": results,
                          "passed": all(r["passed"] for r in results)}))
    else:
        for r in results:
            print("%-5s %-12s %-42s expected=%r computed=%r"
                  % ("PASS" if r["passed"] else "FAIL", r["name"],
                     r["description"], r["expected"], r["computed"]))
    return EXIT_OK if all(r["passed"] for r in results) else EXIT_LINGUISTIC


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pgsem",
        description="Pregroup-grammar compositional sentence semantics.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, lexicon_required=True, sentences=1):
        if lexicon_required:
            p.add_argument("--lexicon", required=True, help="lexicon JSON file")
        p.add_argument("--target", default="s", help="target type (default: s)")
        p.add_argument("--seed", type=int, default=None,
                       help="seed for any randomized behaviour")
        if sentences >= 1:
            p.add_argument("sentence", help="whitespace-tokenized sentence")
        if sentences >= 2:
            p.add_argument("sentence2", help="second sentence")

    p = sub.add_parser("check", help="type-check a sentence")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("diagram", help="render the reduction diagram")
    common(p)
    p.add_argument("--format", choices=["ascii", "dot"], default="ascii")
    p.add_argument("--all", action="store_true",
                   help="render every diagram, not just the first")
    p.add_argument("--limit", type=int, default=DEFAULT_ALL_LIMIT,
                   help="cap on enumerated diagrams with --all")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("mean", help="compute the meaning vector")
    common(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_mean)

    p = sub.add_parser("sim", help="similarity of two sentences")
    common(p, sentences=2)
    p.add_argument("--mode", choices=["raw", "cosine"], default="cosine")
    p.set_defaults(func=cmd_sim)

    p = sub.add_parser("demo", help="verify the bundled worked examples")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", None) is not None:
        random.seed(args.seed)
    try:
        return args.func(args)
    except NoReduction as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_LINGUISTIC
    except (PgsemError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
