#!/usr/bin/env python3
"""Compare the two search encodings empirically: node counts and wall
time on the palindrome family as the word length grows. The trajectory
encoding's variable count grows with the summed word length, so it falls
behind quickly; this records where."""

import argparse
import time

from fstsynth.synth_table import SearchConfig, synthesize_minimal
from fstsynth.synth_traj import synthesize_at_traj, trajectory_variable_count
from fstsynth.tasks import gen_palindrome


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-length", type=int, default=5)
    parser.add_argument("--budget-seconds", type=float, default=30.0)
    args = parser.parse_args()

    print(f"{'len':>3} {'traj vars':>9} {'engine':>10} {'n_min':>5} "
          f"{'nodes':>12} {'seconds':>8}")
    for length in range(2, args.max_length + 1):
        task = gen_palindrome(length)
        cfg = SearchConfig(max_states=12, time_budget=args.budget_seconds)
        for engine_name, engine in (
            ("table", None),
            ("trajectory", synthesize_at_traj),
        ):
            start = time.monotonic()
            try:
                if engine is None:
                    n_min, _, trail = synthesize_minimal(task, cfg)
                else:
                    n_min, _, trail = synthesize_minimal(task, cfg, engine=engine)
                nodes = sum(o.stats.nodes for o in trail)
                result = str(n_min)
            except Exception as e:
                nodes, result = 0, type(e).__name__
            elapsed = time.monotonic() - start
            print(
                f"{length:>3} {trajectory_variable_count(task):>9} "
                f"{engine_name:>10} {result:>5} {nodes:>12} {elapsed:>8.3f}"
            )


if __name__ == "__main__":
    main()
