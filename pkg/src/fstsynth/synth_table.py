"""Exact minimal-transducer synthesis over transition-table variables.

One decision per transition-table cell; outputs are bound as constraints the
first time a word ends in a state. Search is chronological backtracking
driven by word simulation, with interchangeable-state symmetry breaking:
when branching on an unassigned cell, candidate successors are limited to
the states already in use plus one fresh state. Every solution has a
canonical representative under 0-fixing relabeling, so an exhausted search
is a valid unsatisfiability certificate.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .core import FstError, TaskSpec, Transducer, totalize, verify


class BudgetExhausted(FstError):
    def __init__(self, kind: str, n: int):
        self.kind = kind  # "nodes" or "time"
        self.n = n
        super().__init__(f"{kind} budget exhausted while searching at {n} states")


class NoSolutionWithin(FstError):
    def __init__(self, max_states: int):
        self.max_states = max_states
        super().__init__(f"no solution with at most {max_states} states")


WORD_ORDERS = ("as-given", "shortest-first", "longest-first")


@dataclass(frozen=True)
class SearchConfig:
    max_states: int = 16
    word_order: str = "as-given"
    node_budget: Optional[int] = None
    time_budget: Optional[float] = None

    def __post_init__(self):
        if self.max_states < 1:
            raise FstError("max_states must be >= 1")
        if self.word_order not in WORD_ORDERS:
            raise FstError(f"word_order must be one of {WORD_ORDERS}")


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    backtracks: int
    seconds: float


@dataclass(frozen=True)
class SearchOutcome:
    """Either a verified witness at n states or an exhaustiveness
    certificate that no n-state transducer realizes the task."""

    n: int
    witness: Optional[Transducer]
    stats: SearchStats
    total: bool = True

    @property
    def sat(self) -> bool:
        return self.witness is not None


def lower_bound(task: TaskSpec) -> int:
    """No transducer with fewer states than the number of distinct outputs
    demanded by the pairs can realize the task (omega is a function)."""
    return max(1, len(task.used_outputs()))


def variable_count(n: int, alphabet_size: int) -> int:
    """Decision-variable count of this encoding: n transition cells per
    input symbol plus one output per state."""
    if n < 1 or alphabet_size < 1:
        raise FstError("n and alphabet_size must be >= 1")
    return n * (alphabet_size + 1)


def search_space_size(n: int, alphabet_size: int, output_size: int) -> int:
    """Raw assignment count: n^(n*|I|) * |O|^n."""
    if min(n, alphabet_size, output_size) < 1:
        raise FstError("all arguments must be >= 1")
    return n ** (n * alphabet_size) * output_size**n


def ordered_pairs(task: TaskSpec, word_order: str):
    pairs = list(task.pairs)
    if word_order == "shortest-first":
        pairs.sort(key=lambda p: len(p[0]))
    elif word_order == "longest-first":
        pairs.sort(key=lambda p: -len(p[0]))
    return pairs


class _Budget:
    """Shared node/time accounting; raises when a limit is hit."""

    __slots__ = ("node_budget", "deadline", "nodes", "backtracks", "n")

    def __init__(self, cfg: SearchConfig, n: int):
        self.node_budget = cfg.node_budget
        self.deadline = (
            time.monotonic() + cfg.time_budget if cfg.time_budget else None
        )
        self.nodes = 0
        self.backtracks = 0
        self.n = n

    def tick(self):
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise BudgetExhausted("nodes", self.n)
        # time checks are batched; monotonic() per node would dominate
        if self.deadline is not None and self.nodes % 4096 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExhausted("time", self.n)


def synthesize_at(task: TaskSpec, n: int, cfg: SearchConfig = SearchConfig()) -> SearchOutcome:
    """Search for an n-state transducer realizing every task pair.

    Returns a SAT outcome with a total, verified witness, or an UNSAT
    outcome only after exhausting the symmetry-reduced space.
    """
    if n < 1:
        raise FstError("n must be >= 1")
    alphabet = task.input_alphabet
    k = len(alphabet)
    sym_index = {s: i for i, s in enumerate(alphabet)}
    pairs = ordered_pairs(task, cfg.word_order)
    words = [tuple(sym_index[s] for s in w) for w, _ in pairs]
    outs = [out for _, out in pairs]

    delta: list[list[Optional[int]]] = [[None] * k for _ in range(n)]
    omega: list[Optional[str]] = [None] * n
    budget = _Budget(cfg, n)
    start = time.monotonic()

    # frame on the explicit stack: (pair index, position, current state,
    # max state index in use, undo list of (kind, q, a))
    def solve(pi: int, pos: int, q: int, hi: int) -> bool:
        budget.tick()
        if pi == len(words):
            return True
        word = words[pi]
        while pos < len(word):
            a = word[pos]
            nxt = delta[q][a]
            if nxt is None:
                cap = min(hi + 1, n - 1)
                for cand in range(cap + 1):
                    delta[q][a] = cand
                    if solve(pi, pos + 1, cand, max(hi, cand)):
                        return True
                    budget.backtracks += 1
                delta[q][a] = None
                return False
            q = nxt
            hi = max(hi, q)
            pos += 1
        required = outs[pi]
        if omega[q] is None:
            omega[q] = required
            if solve(pi + 1, 0, 0, hi):
                return True
            omega[q] = None
            budget.backtracks += 1
            return False
        if omega[q] != required:
            return False
        return solve(pi + 1, 0, 0, hi)

    sat = solve(0, 0, 0, 0)
    seconds = time.monotonic() - start
    stats = SearchStats(budget.nodes, budget.backtracks, seconds)
    if not sat:
        return SearchOutcome(n=n, witness=None, stats=stats)
    partial = Transducer(
        n,
        alphabet,
        task.output_alphabet,
        tuple(tuple(row) for row in delta),
        tuple(omega),
    )
    witness = totalize(partial)
    assert verify(witness, task).ok, "search produced a non-verifying witness"
    return SearchOutcome(n=n, witness=witness, stats=stats)


def synthesize_minimal(
    task: TaskSpec,
    cfg: SearchConfig = SearchConfig(),
    engine=synthesize_at,
) -> tuple[int, Transducer, list[SearchOutcome]]:
    """Iterative deepening on the state count, starting from the output
    lower bound. Returns (n_min, witness, UNSAT trail below n_min)."""
    lo = lower_bound(task)
    if cfg.max_states < lo:
        raise NoSolutionWithin(cfg.max_states)
    unsat_trail: list[SearchOutcome] = []
    for n in range(lo, cfg.max_states + 1):
        outcome = engine(task, n, cfg)
        if outcome.sat:
            return n, outcome.witness, unsat_trail
        unsat_trail.append(outcome)
    raise NoSolutionWithin(cfg.max_states)
