"""Command-line interface.

Exit codes: 0 ok, 1 invalid input, 2 budget or resource limit,
3 verification failed.
"""
from __future__ import annotations

import argparse
import logging
import sys

from . import generators as gen
from .analysis import analyze, search_ratio
from .errors import InputError, SepdepthError
from .oracle import treedepth_bruteforce
from .pace import graph_to_gr, parse_tree, read_graph, write_tree
from .separators import enumerate_minimal_separators
from .solver import SolveConfig, treedepth, verify_treedepth_decomposition

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_VERIFY = 3

# family -> (parameter names, builder)
FAMILIES = {
    "path": (("n",), gen.path),
    "cycle": (("n",), gen.cycle),
    "complete": (("n",), gen.complete),
    "biclique": (("a", "b"), gen.complete_bipartite),
    "grid": (("n", "m"), gen.grid),
    "broom": (("n", "m", "k"), gen.broom),
    "double-broom": (("n", "m", "k"), gen.double_broom),
    "corner": (("n", "m", "k", "l"), gen.corner_graph),
    "exp-sep": (("k",), gen.exp_sep_graph),
}
RANDOM_FAMILIES = {
    "ktree": (("n", "k"), lambda n, k, seed: gen.random_ktree(n, k, seed)),
    "cograph": (("n",), lambda n, seed: gen.random_cograph(n, seed)),
    "outerplanar": (("n",), lambda n, seed: gen.random_maximal_outerplanar(n, seed)),
}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {out}: {exc.strerror}") from None


def cmd_solve(args) -> int:
    g = read_graph(_read_text(args.graph))
    cfg = SolveConfig(
        pruning="two_tw" if args.prune == "two-tw" else "none",
        tw_mode="exact_within_budget" if args.tw_mode == "exact" else "heuristic_only",
        memo_limit=args.memo_limit,
    )
    result = treedepth(g, cfg)
    _emit(write_tree(result.decomposition), args.out)
    if args.stats:
        for k, v in result.stats.as_dict().items():
            print(f"{k}={v}", file=sys.stderr)
    return EXIT_OK


def cmd_seps(args) -> int:
    g = read_graph(_read_text(args.graph))
    seps = enumerate_minimal_separators(g, args.max_size)
    lines = [" ".join(str(v + 1) for v in s) for s in seps]
    sys.stdout.write("".join(line + "\n" for line in lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(_read_text(args.graph))
    doc = parse_tree(_read_text(args.tree), g.n)
    valid, height = verify_treedepth_decomposition(g, doc.to_decomposition())
    print(height)
    if not valid:
        print("invalid: some edge joins two vertices that are not ancestor and descendant", file=sys.stderr)
        return EXIT_VERIFY
    if height != doc.depth:
        print(f"invalid: declared depth {doc.depth} but the tree has height {height}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = read_graph(_read_text(args.graph))
    print(treedepth_bruteforce(g))
    return EXIT_OK


def _int_param(name: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"parameter {name} must be an integer, got {raw!r}") from None


def cmd_generate(args) -> int:
    fam = args.family
    if fam in FAMILIES:
        names, build = FAMILIES[fam]
        extra = {}
    elif fam in RANDOM_FAMILIES:
        names, build = RANDOM_FAMILIES[fam]
        extra = {"seed": args.seed}
    else:
        known = ", ".join(list(FAMILIES) + list(RANDOM_FAMILIES))
        raise InputError(f"unknown family {fam!r}; choose from {known}")
    if len(args.params) != len(names):
        raise InputError(f"{fam} takes {len(names)} parameter(s): {' '.join(names)}")
    values = [_int_param(n, raw) for n, raw in zip(names, args.params)]
    g = build(*values, **extra)
    _emit(graph_to_gr(g), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = read_graph(_read_text(args.graph))
    sys.stdout.write(analyze(g).render())
    return EXIT_OK


def cmd_search_ratio(args) -> int:
    if args.max_n < 2 or args.samples < 1:
        raise InputError("search-ratio needs --max-n >= 2 and --samples >= 1")
    res = search_ratio(args.max_n, args.samples, args.seed, min_n=min(args.min_n, args.max_n))
    print(f"sampled={res.sampled}")
    print(f"skipped_complete={res.skipped_complete}")
    print(f"violations={len(res.violations)}")
    if res.witness is None:
        print("max_ratio=n/a")
        return EXIT_OK
    print(f"max_ratio={res.max_ratio}")
    print(f"max_ratio_decimal={float(res.max_ratio):.6f}")
    print(f"witness_min_top_separator={res.witness_sep}")
    print(f"witness_tw={res.witness_tw}")
    comment = f"witness min|S*|={res.witness_sep} tw={res.witness_tw}"
    sys.stdout.write(graph_to_gr(res.witness, [comment]))
    if res.violations:
        print("violation: a sampled graph has every optimal top separator larger than 2 tw", file=sys.stderr)
        for g in res.violations:
            sys.stderr.write(graph_to_gr(g))
        return EXIT_VERIFY
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors are invalid input (exit 1), not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sepdepth", description="Exact treedepth via minimal separators.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute an optimal treedepth decomposition")
    s.add_argument("graph", nargs="?", default="-", help=".gr file, or - for stdin (default)")
    s.add_argument("--out", help="write the tree document here instead of stdout")
    s.add_argument("--prune", choices=("two-tw", "none"), default="two-tw")
    s.add_argument("--tw-mode", choices=("exact", "heuristic"), default="exact")
    s.add_argument("--memo-limit", type=int, default=None, help="fail with exit 2 past this many memo entries")
    s.add_argument("--stats", action="store_true", help="print search statistics to stderr")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("seps", help="list minimal separators (1-based, sorted)")
    s.add_argument("graph", nargs="?", default="-")
    s.add_argument("--max-size", type=int, default=None)
    s.set_defaults(func=cmd_seps)

    s = sub.add_parser("verify", help="check a tree document against a graph")
    s.add_argument("graph")
    s.add_argument("tree")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", help="brute-force treedepth for tiny graphs")
    s.add_argument("graph", nargs="?", default="-")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("generate", help="write a generated graph as .gr")
    s.add_argument("family")
    s.add_argument("params", nargs="*")
    s.add_argument("--out")
    s.add_argument("--seed", type=int, default=0, help="seed for ktree, cograph, outerplanar")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("analyze", help="bounds, td, separator statistics, classes")
    s.add_argument("graph", nargs="?", default="-")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("search-ratio", help="random search for large min|S*|/tw")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--min-n", type=int, default=4)
    s.set_defaults(func=cmd_search_ratio)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SepdepthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except RecursionError:
        print("error: recursion limit reached", file=sys.stderr)
        return EXIT_BUDGET
    except MemoryError:
        print("error: out of memory", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
