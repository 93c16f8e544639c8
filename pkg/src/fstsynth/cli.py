"""Command-line surface.

Subcommands: synth (exact minimal synthesis), trie (baseline build +
minimize), bench (the five-task comparison table), run (apply a machine to
a word), gen (write a built-in task file).

Exit codes: 0 success, 1 unsatisfiable within limits or budget exhausted,
2 invalid input.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import tasks as tasks_mod
from .core import (
    FstError,
    TaskSpec,
    UndefinedOutput,
    UndefinedTransition,
    defined_map_count,
    prune,
    run,
    trajectory,
)
from .serialize import parse_transducer, serialize_transducer, to_dot
from .synth_table import (
    WORD_ORDERS,
    BudgetExhausted,
    NoSolutionWithin,
    SearchConfig,
    search_space_size,
    synthesize_at,
    synthesize_minimal,
    variable_count,
)
from .synth_traj import synthesize_at_traj
from .trie import build_trie, minimize

EXIT_OK = 0
EXIT_UNSAT = 1
EXIT_USAGE = 2

ENGINES = {"table": synthesize_at, "trajectory": synthesize_at_traj}

# the five comparison tasks with the published reference counts
BENCH_ROWS = (
    ("Signal Locator 9-3", lambda: tasks_mod.gen_signal_locator(9, 3), 5, 45, 24),
    ("Signal Locator 8-4", lambda: tasks_mod.gen_signal_locator(8, 4), 6, 36, 23),
    ("Zeroes and ones 4", lambda: tasks_mod.gen_zeroes_or_ones(4), 5, 31, 13),
    ("Palindrome 4", lambda: tasks_mod.gen_palindrome(4), 5, 31, 12),
    ("Word Classification", tasks_mod.word_classification, 3, 68, 57),
)


def _read_task(path: str) -> TaskSpec:
    with open(path, encoding="utf-8") as f:
        return tasks_mod.parse_task(f.read())


def _search_config(args) -> SearchConfig:
    return SearchConfig(
        max_states=args.max_states,
        word_order=args.word_order,
        node_budget=args.budget_nodes,
        time_budget=args.budget_seconds,
    )


def cmd_synth(args) -> int:
    task = _read_task(args.taskfile)
    cfg = _search_config(args)
    engine = ENGINES[args.engine]
    start = time.monotonic()
    try:
        n_min, witness, unsat_trail = synthesize_minimal(task, cfg, engine=engine)
    except NoSolutionWithin:
        print(f"UNSAT up to {cfg.max_states} states", file=sys.stderr)
        return EXIT_UNSAT
    except BudgetExhausted as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return EXIT_UNSAT
    elapsed = time.monotonic() - start
    if args.prune:
        witness = prune(witness, task)
    d, o = defined_map_count(witness)
    k = len(task.input_alphabet)
    print(f"minimal states: {n_min}")
    print(f"defined maps: delta={d} omega={o}")
    print(f"logic variables at n={n_min}: {variable_count(n_min, k)}")
    print(
        f"search space at n={n_min}: "
        f"{search_space_size(n_min, k, len(task.output_alphabet))}"
    )
    for outcome in unsat_trail:
        print(
            f"UNSAT at {outcome.n} states "
            f"({outcome.stats.nodes} nodes, {outcome.stats.seconds:.3f}s)"
        )
    print(f"total time: {elapsed:.3f}s")
    out_path = args.output or args.taskfile.rsplit(".", 1)[0] + ".fst"
    with open(out_path, "w", encoding="utf-8") as f:
        f.write(serialize_transducer(witness))
    print(f"wrote {out_path}")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as f:
            f.write(to_dot(witness, show_nil_sink=args.nil_sink))
        print(f"wrote {args.dot}")
    return EXIT_OK


def cmd_trie(args) -> int:
    task = _read_task(args.taskfile)
    t = build_trie(task)
    print(f"trie states: {t.n_states}")
    if args.minimize:
        t = minimize(t, task)
        print(f"minimized states: {t.n_states}")
    out_path = args.output or args.taskfile.rsplit(".", 1)[0] + ".fst"
    with open(out_path, "w", encoding="utf-8") as f:
        f.write(serialize_transducer(t))
    print(f"wrote {out_path}")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as f:
            f.write(to_dot(t, show_nil_sink=args.nil_sink))
        print(f"wrote {args.dot}")
    return EXIT_OK


def bench_table(max_states: int = 8) -> tuple[list[list[str]], list[str]]:
    """Compute the comparison rows. Returns (rows, timing column per row);
    timings are kept separate so the table proper is deterministic."""
    rows = []
    timings = []
    for name, make_task, paper_min, paper_trie, paper_minimized in BENCH_ROWS:
        try:
            task = make_task()
            t0 = time.monotonic()
            n_min, _, _ = synthesize_minimal(task, SearchConfig(max_states=max_states))
            t1 = time.monotonic()
            t = build_trie(task)
            mini = minimize(t, task)
            t2 = time.monotonic()
            assert n_min <= mini.n_states <= t.n_states
            rows.append(
                [
                    name,
                    str(n_min),
                    str(t.n_states),
                    str(mini.n_states),
                    str(paper_min),
                    str(paper_trie),
                    str(paper_minimized),
                ]
            )
            timings.append(f"synth {t1 - t0:.3f}s, trie {t2 - t1:.3f}s")
        except FstError as e:
            rows.append([name, "error", "-", "-", str(paper_min), str(paper_trie), str(paper_minimized)])
            timings.append(str(e))
    return rows, timings


BENCH_HEADER = [
    "Task",
    "Minimal",
    "Trie",
    "Minimized",
    "PaperMinimal",
    "PaperTrie",
    "PaperMinimized",
]


def format_bench(rows, timings, fmt: str, show_timings: bool = True) -> str:
    header = BENCH_HEADER + (["Timings"] if show_timings else [])
    full = [
        row + ([timing] if show_timings else [])
        for row, timing in zip(rows, timings)
    ]
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(f'"{c}"' if "," in c else c for c in row) for row in full]
        return "\n".join(lines) + "\n"
    widths = [
        max(len(header[i]), max(len(row[i]) for row in full))
        for i in range(len(header))
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for row in full:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def cmd_bench(args) -> int:
    rows, timings = bench_table(max_states=args.max_states)
    sys.stdout.write(
        format_bench(rows, timings, args.format, show_timings=not args.no_timings)
    )
    return EXIT_UNSAT if any(r[1] == "error" for r in rows) else EXIT_OK


def _parse_word(raw: str, alphabet) -> tuple[str, ...]:
    if "," in raw:
        return tuple(raw.split(","))
    if all(len(s) == 1 for s in alphabet):
        return tuple(raw)
    return (raw,)


def cmd_run(args) -> int:
    with open(args.transducerfile, encoding="utf-8") as f:
        t = parse_transducer(f.read())
    if not args.word:
        print("word must be non-empty", file=sys.stderr)
        return EXIT_USAGE
    word = _parse_word(args.word, t.input_alphabet)
    try:
        if args.trace:
            traj = trajectory(t, word)
            print("trajectory: " + " ".join(str(q) for q in traj.states))
        out = run(t, word)
    except UndefinedTransition as e:
        print(f"undefined transition at position {e.position}", file=sys.stderr)
        return EXIT_UNSAT
    except UndefinedOutput as e:
        print(f"undefined output at state {e.state}", file=sys.stderr)
        return EXIT_UNSAT
    print(out)
    return EXIT_OK


def cmd_gen(args) -> int:
    family = args.family
    if family == "words":
        task = tasks_mod.word_classification()
    elif family == "signal-locator":
        if len(args.params) != 2:
            raise FstError("signal-locator needs two parameters: n k")
        task = tasks_mod.gen_signal_locator(int(args.params[0]), int(args.params[1]))
    else:
        if len(args.params) != 1:
            raise FstError(f"{family} needs one parameter: length")
        task = tasks_mod.GENERATORS[family](int(args.params[0]))
    text = tasks_mod.write_task(task)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
        print(f"wrote {args.output} ({len(task.pairs)} pairs)")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fstsynth",
        description="Exact minimal single-output transducer synthesis "
        "and the trie+minimization baseline.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="synthesize a state-minimal transducer")
    p.add_argument("taskfile")
    p.add_argument("--max-states", type=int, default=16)
    p.add_argument("--engine", choices=sorted(ENGINES), default="table")
    p.add_argument("--prune", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--word-order", choices=WORD_ORDERS, default="as-given")
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--output", "-o", default=None, help="FST/1 output path")
    p.add_argument("--dot", default=None, help="also write a DOT graph here")
    p.add_argument("--nil-sink", action="store_true", help="route undefined cells to a nil node in DOT")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("trie", help="build (and optionally minimize) the prefix trie")
    p.add_argument("taskfile")
    p.add_argument("--minimize", action="store_true")
    p.add_argument("--output", "-o", default=None)
    p.add_argument("--dot", default=None)
    p.add_argument("--nil-sink", action="store_true")
    p.set_defaults(func=cmd_trie)

    p = sub.add_parser("bench", help="print the five-task comparison table")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--max-states", type=int, default=8)
    p.add_argument("--no-timings", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("run", help="apply a transducer to a word")
    p.add_argument("transducerfile")
    p.add_argument("word")
    p.add_argument("--trace", action="store_true", help="print the full trajectory")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("gen", help="write a built-in task file")
    p.add_argument("family", choices=sorted(tasks_mod.GENERATORS))
    p.add_argument("params", nargs="*")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as e:
        print(f"cannot read {e.filename}", file=sys.stderr)
        return EXIT_USAGE
    except (FstError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
