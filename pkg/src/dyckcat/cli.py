"""Command-line interface.

Exit codes: 0 ok, 1 I/O failure, 2 usage, 3 verification failure,
4 benchmark bound exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import kernel
from .cat_engine import GenState, run_all, step
from .dot import label_tree_to_dot, tree_to_dot
from .oracle import ORACLE_CAP, brute_enumerate, catalan, compare
from .path_core import FORMATS, render
from .succession import build_label_tree, label_of, verify_correspondence
from .theta_tree import TREE_CAP, TreeCapError, build_tree, iter_preorder, preorder

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_VERIFY, EXIT_BENCH = 0, 1, 2, 3, 4
DEFAULT_BENCH_BOUND = 12.0


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    format: str = "bits"
    output: Optional[str] = None
    tree_cap: int = TREE_CAP
    oracle_cap: int = ORACLE_CAP
    dot: bool = False
    ns: tuple[int, ...] = ()
    bound: float = DEFAULT_BENCH_BOUND
    engine: str = "kernel"
    limit: Optional[int] = None
    resume: Optional[str] = None
    save_state: Optional[str] = None

    def __post_init__(self):
        if self.n is not None and self.n < 1:
            raise UsageError("n must be >= 1")
        if any(m < 1 for m in self.ns):
            raise UsageError("n must be >= 1")


def _parse_range(text: str) -> tuple[int, ...]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return (int(text),)
        return tuple(range(int(lo), int(hi) + 1))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; expected A..B")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dyckcat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add_n(sp, required=True):
        sp.add_argument("-n", type=int, required=required, help="semilength")

    g = sub.add_parser("gen", help="stream every Dyck word of size n")
    add_n(g, required=False)
    g.add_argument("--format", choices=FORMATS, default="bits")
    g.add_argument("-o", "--output")
    g.add_argument("--limit", type=int, help="stop after this many words")
    g.add_argument("--resume", help="continue from a saved state file")
    g.add_argument("--save-state", help="write the generator state here on exit")

    c = sub.add_parser("count", help="count the words by running the generator")
    add_n(c)
    c.add_argument("--engine", choices=("kernel", "python"), default="kernel")

    for name, helptext in (("tree", "print the generating tree"),
                           ("labels", "print the (k,i) label tree")):
        t = sub.add_parser(name, help=helptext)
        add_n(t)
        t.add_argument("--dot", action="store_true", help="Graphviz output")
        t.add_argument("--tree-cap", type=int, default=TREE_CAP)
        t.add_argument("-o", "--output")

    v = sub.add_parser("verify", help="cross-check engine, tree, labels and oracle")
    add_n(v)
    v.add_argument("--oracle-cap", type=int, default=ORACLE_CAP)
    v.add_argument("--tree-cap", type=int, default=TREE_CAP)

    b = sub.add_parser("bench", help="count elementary actions per path")
    add_n(b, required=False)
    b.add_argument("--range", type=_parse_range, dest="ns")
    b.add_argument("--bound", type=float, default=DEFAULT_BENCH_BOUND)
    b.add_argument("--engine", choices=("kernel", "python"), default="kernel")
    b.add_argument("-o", "--output")
    return p


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(args).items() if v is not None}
    if args.command == "bench":
        if "n" in fields and "ns" in fields:
            raise UsageError("give either -n or --range, not both")
        if "n" in fields:
            fields["ns"] = (fields["n"],)
        if not fields.get("ns"):
            raise UsageError("bench needs -n or --range")
    if args.command == "gen" and "n" not in fields and "resume" not in fields:
        raise UsageError("gen needs -n or --resume")
    return RunConfig(**fields)


def _open_out(cfg: RunConfig):
    if cfg.output and cfg.output != "-":
        return open(cfg.output, "w", encoding="ascii", newline="\n")
    return sys.stdout


def cmd_gen(cfg: RunConfig, out) -> int:
    if cfg.resume:
        state = GenState.restore(Path(cfg.resume).read_text())
        if cfg.n is not None and cfg.n != state.n:
            raise UsageError(f"-n {cfg.n} does not match saved state n={state.n}")
    else:
        state = GenState(cfg.n)
    written = 0
    while (cfg.limit is None or written < cfg.limit) and step(state):
        out.write(render(state.word.logical(), cfg.format) + "\n")
        written += 1
    if cfg.save_state:
        Path(cfg.save_state).write_text(state.snapshot())
    return EXIT_OK


def cmd_count(cfg: RunConfig, out) -> int:
    if cfg.engine == "kernel":
        count = kernel.count_run(cfg.n)["emitted"]
    else:
        count = run_all(cfg.n).count
    out.write(f"{count}\n")
    return EXIT_OK


def cmd_tree(cfg: RunConfig, out) -> int:
    tree = build_tree(cfg.n, cfg.tree_cap)
    if cfg.dot:
        out.write(tree_to_dot(tree))
        return EXIT_OK
    for node in iter_preorder(tree.root):
        out.write("  " * node.level + f"{node.word.bits} {label_of(node.word, cfg.n)}\n")
    out.write(f"# nodes {tree.size}\n")
    for level, count in enumerate(tree.level_counts()):
        out.write(f"# level {level}: {count}\n")
    return EXIT_OK


def cmd_labels(cfg: RunConfig, out) -> int:
    tree = build_label_tree(cfg.n, cfg.tree_cap)
    out.write(label_tree_to_dot(tree) if cfg.dot else tree.dump())
    return EXIT_OK


def run_checks(n: int, oracle_cap: int = ORACLE_CAP, tree_cap: int = TREE_CAP):
    """Yield (name, passed, detail) for every cross-check at size n."""
    stream = []
    summary = run_all(n, lambda w: stream.append(w.bits))
    expected = catalan(n)
    yield "count", summary.count == expected, f"{summary.count} paths, Catalan {expected}"

    diff = compare(brute_enumerate(n, oracle_cap), stream)
    yield "oracle", diff.empty, diff.excerpt()

    ref = [w.bits for w in preorder(build_tree(n, tree_cap))]
    first_bad = next((j for j, (a, b) in enumerate(zip(stream, ref)) if a != b), None)
    same = first_bad is None and len(stream) == len(ref)
    detail = "engine order equals tree preorder" if same else \
        f"first difference at position {first_bad}, lengths {len(stream)}/{len(ref)}"
    yield "preorder", same, detail

    report = verify_correspondence(n, tree_cap)
    yield "labels", report.ok, str(report)

    runs = summary.max_op3_run
    ok = runs <= 2 and (n < 4 or runs == 2)
    yield "op3-runs", ok, f"longest op3 run {runs}"


def cmd_verify(cfg: RunConfig, out) -> int:
    if cfg.n > cfg.oracle_cap:
        raise UsageError(f"n={cfg.n} exceeds oracle cap {cfg.oracle_cap}")
    failed = 0
    for name, passed, detail in run_checks(cfg.n, cfg.oracle_cap, cfg.tree_cap):
        failed += not passed
        out.write(f"{'PASS' if passed else 'FAIL'} {name}: {detail}\n")
    return EXIT_VERIFY if failed else EXIT_OK


def bench_record(n: int, engine: str = "kernel") -> dict:
    if engine == "kernel":
        r = kernel.count_run(n)
        paths, wall = r["emitted"], r["wall_time"]
        swaps, moves = r["swaps"], r["cursor_moves"]
        stack_ops, updates, tests = r["pushes"] + r["pops"], r["label_updates"], r["tests"]
    else:
        s = run_all(n)
        c = s.counters
        paths, wall = s.count, s.wall_time
        swaps, moves = c.swaps, c.cursor_moves
        stack_ops, updates, tests = c.pushes + c.pops, c.label_updates, c.tests
    total = swaps + moves + stack_ops + updates + tests
    return {
        "n": n, "paths": paths, "swaps": swaps, "cursor_moves": moves,
        "stack_ops": stack_ops, "label_updates": updates, "tests": tests,
        "total_actions": total, "actions_per_path": total / paths,
        "wall_time": wall,
    }


def cmd_bench(cfg: RunConfig, out) -> int:
    if cfg.engine == "kernel":
        kernel.warmup()
    status = EXIT_OK
    for n in cfg.ns:
        rec = bench_record(n, cfg.engine)
        out.write(json.dumps(rec) + "\n")
        out.flush()
        if rec["actions_per_path"] > cfg.bound:
            sys.stderr.write(f"n={n}: {rec['actions_per_path']:.3f} actions/path "
                             f"exceeds bound {cfg.bound}\n")
            status = EXIT_BENCH
    return status


COMMANDS = {
    "gen": cmd_gen, "count": cmd_count, "tree": cmd_tree,
    "labels": cmd_labels, "verify": cmd_verify, "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        out = _open_out(cfg)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"dyckcat: error: {e}\n")
        return EXIT_USAGE
    except OSError as e:
        sys.stderr.write(f"dyckcat: {e}\n")
        return EXIT_IO
    try:
        with out if out is not sys.stdout else nullcontext(out):
            return COMMANDS[cfg.command](cfg, out)
    except (UsageError, TreeCapError) as e:
        sys.stderr.write(f"dyckcat: error: {e}\n")
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_IO
    except OSError as e:
        sys.stderr.write(f"dyckcat: {e}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
