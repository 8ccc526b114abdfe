"""Command line front end.

Four subcommands: check (evaluate a degree condition), solve (exact cycle
and path search), construct (emit the bundled and random families), verify
(run a verification suite).

Exit codes: 0 the condition holds / a witness was found / no
counterexamples; 1 the condition fails / nothing found / counterexamples
logged; 2 usage, parse, or validation errors; 3 an exact search was asked
for above the supported order.

All --json output is compact with sorted keys and carries no timing, so a
rerun with the same inputs and seed produces identical bytes.
"""

import argparse
import json
import sys
from pathlib import Path

from . import conditions, harness
from .conditions import REGISTRY
from .constructions import (NamedConstruction, build_complete, build_d8, build_d9,
                            build_d9_prime, h_reduction, random_digraph,
                            random_satisfying_main)
from .digraph import DgfError, Digraph, infer_bipartition, parse, serialize
from .solver import (CapacityError, hamiltonian_cycle, hamiltonian_path,
                     longest_cycle, longest_cycle_through)


def _dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _load(source: str) -> Digraph:
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    return parse(text)


def _cmd_check(args) -> int:
    d = _load(args.source)
    if args.infer_bipartition:
        d = Digraph(d.n, [d.out_mask(v) for v in range(d.n)], infer_bipartition(d))
    report = conditions.check(d, args.condition, k=args.k, u=args.u, v=args.v)
    if args.json:
        witness = None
        if report.witness is not None:
            witness = {"kind": report.witness.kind,
                       "vertices": list(report.witness.vertices),
                       "detail": report.witness.detail}
        print(_dumps({"condition": report.condition, "holds": report.holds,
                      "witness": witness, "parameters": report.parameters,
                      "clauses": report.clauses}))
    else:
        print("holds" if report.holds else f"fails: {report.witness.detail}")
        if report.clauses is not None:
            print("clauses: " + " ".join(
                f"{name}={'holds' if ok else 'fails'}"
                for name, ok in report.clauses.items()))
    return 0 if report.holds else 1


def _cmd_solve(args) -> int:
    d = _load(args.source)
    if args.mode == "cycle":
        result = hamiltonian_cycle(d)
        found_exit = True
    elif args.mode == "path":
        if args.u is None or args.v is None:
            raise ValueError("solve path needs --u and --v")
        result = hamiltonian_path(d, args.u, args.v)
        found_exit = True
    elif args.mode == "longest":
        result = longest_cycle(d)
        found_exit = False
    else:
        if args.z is None:
            raise ValueError("solve through needs --z")
        result = longest_cycle_through(d, args.z)
        found_exit = True
    if args.json:
        witness = list(result.witness.vertices) if result.found else None
        print(_dumps({"mode": args.mode, "found": result.found,
                      "length": result.length, "witness": witness,
                      "explored": result.explored}))
    else:
        if args.mode in ("longest", "through"):
            print(f"length={result.length}")
        if result.found:
            kind = "path" if args.mode == "path" else "cycle"
            print(f"{kind}: " + " ".join(str(v) for v in result.witness.vertices))
        else:
            print("none")
    if not found_exit:
        return 0
    return 0 if result.found else 1


def _need(args, name: str, flag: str) -> None:
    if getattr(args, name) is None:
        raise ValueError(f"construct {args.name} needs {flag}")


def _cmd_construct(args) -> int:
    if args.name == "d8":
        nc = build_d8()
    elif args.name == "d9":
        nc = build_d9()
    elif args.name == "d9prime":
        nc = build_d9_prime()
    elif args.name == "complete":
        _need(args, "n", "--n")
        nc = build_complete(args.n)
    elif args.name == "random":
        _need(args, "n", "--n")
        _need(args, "p", "--p")
        _need(args, "seed", "--seed")
        nc = NamedConstruction("random", random_digraph(args.n, args.p, args.seed), {})
    elif args.name == "main-instance":
        _need(args, "n", "--n")
        _need(args, "seed", "--seed")
        nc = NamedConstruction("main-instance",
                               random_satisfying_main(args.n, args.k, args.seed), {})
    else:
        _need(args, "u", "--u")
        _need(args, "v", "--v")
        nc = h_reduction(_load(args.source), args.u, args.v)
    dgf = serialize(nc.digraph)
    labels = sorted(nc.label_map.items(), key=lambda kv: (kv[1], kv[0]))
    if args.json:
        print(_dumps({"name": nc.name, "n": nc.digraph.n,
                      "labels": nc.label_map, "dgf": dgf}))
        if args.output:
            Path(args.output).write_text(dgf)
        return 0
    if args.output:
        Path(args.output).write_text(dgf)
        for name, vertex in labels:
            print(f"{name}={vertex}")
    else:
        sys.stdout.write(dgf)
        for name, vertex in labels:
            print(f"{name}={vertex}", file=sys.stderr)
    return 0


def _require_seeded(args, names=("samples", "seed")) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise ValueError(f"verify {args.suite} needs --{name}")


def _cmd_verify(args) -> int:
    if args.suite == "tightness":
        outcome = harness.verify_tightness()
    elif args.suite == "enumerate":
        _need_suite(args, "n", "--n")
        _need_suite(args, "condition", "--condition")
        if args.n == 5 and not args.slow:
            raise ValueError("order 5 enumerates 2^20 digraphs; pass --slow to confirm")
        outcome = harness.enumerate_and_check(args.n, args.condition, k=args.k,
                                              jobs=args.jobs)
    elif args.suite == "sample-main":
        _need_suite(args, "n", "--n")
        _require_seeded(args)
        outcome = harness.sample_and_check(args.n, args.k, args.samples,
                                           args.seed, jobs=args.jobs)
    elif args.suite == "lemmas":
        _need_suite(args, "trials", "--trials")
        _need_suite(args, "seed", "--seed")
        outcome = harness.verify_lemma_drivers(args.trials, args.seed, jobs=args.jobs)
    elif args.suite == "problem1":
        _need_suite(args, "a", "--a")
        if not args.exhaustive:
            _require_seeded(args)
        outcome = harness.search_problem1(args.a, args.k1, args.l, args.variant,
                                          samples=args.samples, seed=args.seed,
                                          exhaustive=args.exhaustive, jobs=args.jobs)
    else:
        _need_suite(args, "a", "--a")
        if not args.exhaustive:
            _require_seeded(args)
        outcome = harness.search_problem2(args.a, args.k1, args.l,
                                          samples=args.samples, seed=args.seed,
                                          exhaustive=args.exhaustive, jobs=args.jobs)
    if args.json:
        print(_dumps(harness.outcome_to_json(outcome)))
    else:
        sys.stdout.write(harness.format_report(outcome, args.out_dir))
    return 0 if not outcome.counterexamples else 1


def _need_suite(args, name: str, flag: str) -> None:
    if getattr(args, name) is None:
        raise ValueError(f"verify {args.suite} needs {flag}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamcheck",
        description="degree conditions for Hamiltonicity of digraphs: "
                    "check them, solve exactly, and verify them in bulk")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="evaluate a degree condition on one digraph")
    p.add_argument("condition", choices=sorted(REGISTRY))
    p.add_argument("source", nargs="?", default="-",
                   help="DGF file, or - for stdin (default)")
    p.add_argument("--k", type=int, default=0, help="slack parameter, default 0")
    p.add_argument("--u", type=int, help="start vertex (ham-connected)")
    p.add_argument("--v", type=int, help="end vertex (ham-connected)")
    p.add_argument("--infer-bipartition", action="store_true",
                   help="2-color the underlying graph before checking")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("solve", help="exact cycle and path search")
    p.add_argument("mode", choices=("cycle", "path", "longest", "through"))
    p.add_argument("source", nargs="?", default="-")
    p.add_argument("--u", type=int, help="path start vertex")
    p.add_argument("--v", type=int, help="path end vertex")
    p.add_argument("--z", type=int, help="vertex the cycle must pass through")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("construct", help="emit a bundled or generated digraph")
    p.add_argument("name", choices=("d8", "d9", "d9prime", "complete",
                                    "random", "main-instance", "h-reduction"))
    p.add_argument("source", nargs="?", default="-",
                   help="input DGF for h-reduction")
    p.add_argument("-o", "--output", help="write DGF here instead of stdout")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--seed", type=int)
    p.add_argument("--u", type=int)
    p.add_argument("--v", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=("tightness", "enumerate", "sample-main",
                                     "lemmas", "problem1", "problem2"))
    p.add_argument("--n", type=int)
    p.add_argument("--condition", choices=harness.ENUMERABLE_CONDITIONS)
    p.add_argument("--k", type=int, default=0,
                   help="slack parameter for enumerate and sample-main")
    p.add_argument("--a", type=int, help="half order for the bipartite probes")
    p.add_argument("--k1", type=int, default=1,
                   help="connectivity for the bipartite probes")
    p.add_argument("--l", type=int, default=0, help="designated-pair slack")
    p.add_argument("--variant", choices=("i", "ii"), default="i")
    p.add_argument("--samples", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--slow", action="store_true",
                   help="allow the order-5 exhaustive enumeration")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out-dir", help="write counterexample .dgf files here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (DgfError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(run())
