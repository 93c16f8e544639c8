"""Core domain types: tasks, transducers, trajectories, and the operations
(simulate, verify, prune, totalize, relabel) every other module builds on.

States are dense integers 0..n-1 with the initial state hardwired to 0.
Symbols are plain non-empty strings. Undefined table entries are None; the
token "-" is reserved for the textual serialization of None and is not a
legal symbol.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

UNDEFINED_TOKEN = "-"

Word = tuple[str, ...]


class FstError(Exception):
    """Base class for all errors raised by this package."""


class TaskError(FstError):
    """Invalid task construction."""


class ContradictoryPair(TaskError):
    def __init__(self, word: Word, out_a: str, out_b: str):
        self.word = word
        super().__init__(
            f"word {''.join(word)!r} mapped to both {out_a!r} and {out_b!r}"
        )


class EmptyTask(TaskError):
    pass


class UnknownSymbol(FstError):
    def __init__(self, symbol: str, alphabet: Sequence[str]):
        self.symbol = symbol
        super().__init__(f"symbol {symbol!r} not in alphabet {list(alphabet)}")


class UndefinedTransition(FstError):
    def __init__(self, state: int, symbol: str, position: int):
        self.state = state
        self.symbol = symbol
        self.position = position  # 1-indexed position in the word
        super().__init__(
            f"undefined transition from state {state} on {symbol!r} "
            f"at position {position}"
        )


class UndefinedOutput(FstError):
    def __init__(self, state: int):
        self.state = state
        super().__init__(f"undefined output at state {state}")


class PreconditionViolated(FstError):
    pass


class InvalidPermutation(FstError):
    pass


def _check_alphabet(symbols: Sequence[str], kind: str) -> tuple[str, ...]:
    seen = set()
    for s in symbols:
        if not s or any(c.isspace() for c in s) or s == UNDEFINED_TOKEN:
            raise TaskError(f"invalid {kind} symbol {s!r}")
        if s in seen:
            raise TaskError(f"duplicate {kind} symbol {s!r}")
        seen.add(s)
    return tuple(symbols)


@dataclass(frozen=True)
class TaskSpec:
    """A finite training set: every word must map to exactly its output.

    Duplicate identical pairs are dropped; contradictory pairs are an error;
    an empty pair list is an error (there is nothing to verify).
    """

    input_alphabet: tuple[str, ...]
    output_alphabet: tuple[str, ...]
    pairs: tuple[tuple[Word, str], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "input_alphabet", _check_alphabet(self.input_alphabet, "input")
        )
        object.__setattr__(
            self, "output_alphabet", _check_alphabet(self.output_alphabet, "output")
        )
        inputs = set(self.input_alphabet)
        outputs = set(self.output_alphabet)
        seen: dict[Word, str] = {}
        deduped = []
        for word, out in self.pairs:
            word = tuple(word)
            if not word:
                raise TaskError("words must be non-empty")
            for sym in word:
                if sym not in inputs:
                    raise UnknownSymbol(sym, self.input_alphabet)
            if out not in outputs:
                raise UnknownSymbol(out, self.output_alphabet)
            if word in seen:
                if seen[word] != out:
                    raise ContradictoryPair(word, seen[word], out)
                continue
            seen[word] = out
            deduped.append((word, out))
        if not deduped:
            raise EmptyTask("a task needs at least one (word, output) pair")
        object.__setattr__(self, "pairs", tuple(deduped))

    @property
    def words(self) -> tuple[Word, ...]:
        return tuple(w for w, _ in self.pairs)

    def used_outputs(self) -> tuple[str, ...]:
        """Output symbols that actually occur in pairs, in alphabet order."""
        used = {out for _, out in self.pairs}
        return tuple(s for s in self.output_alphabet if s in used)


@dataclass(frozen=True)
class Transducer:
    """A (possibly partial) deterministic single-output transducer.

    delta[q][i] is the successor of state q on input_alphabet[i], or None.
    omega[q] is the output emitted when a word ends in state q, or None.
    The initial state is always 0.
    """

    n_states: int
    input_alphabet: tuple[str, ...]
    output_alphabet: tuple[str, ...]
    delta: tuple[tuple[Optional[int], ...], ...]
    omega: tuple[Optional[str], ...]

    initial_state: int = 0

    def __post_init__(self):
        if self.n_states < 1:
            raise FstError("a transducer needs at least one state")
        if self.initial_state != 0:
            raise FstError("initial state is fixed to 0")
        object.__setattr__(
            self, "input_alphabet", _check_alphabet(self.input_alphabet, "input")
        )
        object.__setattr__(
            self, "output_alphabet", _check_alphabet(self.output_alphabet, "output")
        )
        delta = tuple(tuple(row) for row in self.delta)
        if len(delta) != self.n_states:
            raise FstError("delta must have one row per state")
        for row in delta:
            if len(row) != len(self.input_alphabet):
                raise FstError("delta rows must have one cell per input symbol")
            for cell in row:
                if cell is not None and not (0 <= cell < self.n_states):
                    raise FstError(f"delta target {cell} out of range")
        object.__setattr__(self, "delta", delta)
        omega = tuple(self.omega)
        if len(omega) != self.n_states:
            raise FstError("omega must have one entry per state")
        outputs = set(self.output_alphabet)
        for out in omega:
            if out is not None and out not in outputs:
                raise UnknownSymbol(out, self.output_alphabet)
        object.__setattr__(self, "omega", omega)

    @property
    def symbol_index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.input_alphabet)}

    def is_total(self) -> bool:
        return all(c is not None for row in self.delta for c in row) and all(
            o is not None for o in self.omega
        )


@dataclass(frozen=True)
class Trajectory:
    """The state sequence a word induces from the initial state."""

    states: tuple[int, ...]

    @property
    def final(self) -> int:
        return self.states[-1]


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    failures: tuple[tuple[Word, str, str], ...] = ()
    # each failure is (word, required output, reason)


def trajectory(t: Transducer, word: Sequence[str]) -> Trajectory:
    """Run word through t and return all |word|+1 visited states."""
    idx = t.symbol_index
    states = [0]
    q = 0
    for pos, sym in enumerate(word, start=1):
        if sym not in idx:
            raise UnknownSymbol(sym, t.input_alphabet)
        nxt = t.delta[q][idx[sym]]
        if nxt is None:
            raise UndefinedTransition(q, sym, pos)
        q = nxt
        states.append(q)
    return Trajectory(tuple(states))


def run(t: Transducer, word: Sequence[str]) -> str:
    """Output symbol for word: omega applied to the trajectory's last state."""
    q = trajectory(t, word).final
    out = t.omega[q]
    if out is None:
        raise UndefinedOutput(q)
    return out


def verify(t: Transducer, task: TaskSpec) -> VerifyReport:
    """Check every task pair; failures are collected, never raised."""
    failures = []
    for word, required in task.pairs:
        try:
            got = run(t, word)
        except (UndefinedTransition, UndefinedOutput, UnknownSymbol) as e:
            failures.append((word, required, str(e)))
            continue
        if got != required:
            failures.append((word, required, f"produced {got!r}"))
    return VerifyReport(ok=not failures, failures=tuple(failures))


def prune(t: Transducer, task: TaskSpec) -> Transducer:
    """Drop every delta cell and omega entry no task word touches.

    Requires t to verify the task; the pruned machine still verifies it.
    """
    if not verify(t, task).ok:
        raise PreconditionViolated("prune requires a verifying transducer")
    idx = t.symbol_index
    used_cells: set[tuple[int, int]] = set()
    used_outputs: set[int] = set()
    for word, _ in task.pairs:
        traj = trajectory(t, word)
        for i, sym in enumerate(word):
            used_cells.add((traj.states[i], idx[sym]))
        used_outputs.add(traj.final)
    delta = tuple(
        tuple(t.delta[q][a] if (q, a) in used_cells else None
              for a in range(len(t.input_alphabet)))
        for q in range(t.n_states)
    )
    omega = tuple(
        t.omega[q] if q in used_outputs else None for q in range(t.n_states)
    )
    return Transducer(t.n_states, t.input_alphabet, t.output_alphabet, delta, omega)


def totalize(t: Transducer, fill_policy: str = "self-loop") -> Transducer:
    """Fill every undefined entry: delta per policy, omega with the first
    output symbol. Task words that avoided the holes are unaffected."""
    if fill_policy not in ("self-loop", "initial"):
        raise FstError(f"unknown fill policy {fill_policy!r}")
    delta = tuple(
        tuple(
            cell if cell is not None else (q if fill_policy == "self-loop" else 0)
            for cell in row
        )
        for q, row in enumerate(t.delta)
    )
    omega = tuple(o if o is not None else t.output_alphabet[0] for o in t.omega)
    return Transducer(t.n_states, t.input_alphabet, t.output_alphabet, delta, omega)


def defined_map_count(t: Transducer) -> tuple[int, int]:
    """(# defined delta cells, # defined omega entries)."""
    d = sum(1 for row in t.delta for c in row if c is not None)
    o = sum(1 for out in t.omega if out is not None)
    return d, o


def relabel(t: Transducer, perm: Sequence[int]) -> Transducer:
    """Rename states by a permutation fixing 0; the realized word function
    is unchanged."""
    if sorted(perm) != list(range(t.n_states)):
        raise InvalidPermutation(f"not a permutation of 0..{t.n_states - 1}")
    if perm[0] != 0:
        raise InvalidPermutation("permutation must fix the initial state 0")
    n = t.n_states
    delta: list[list[Optional[int]]] = [[None] * len(t.input_alphabet) for _ in range(n)]
    omega: list[Optional[str]] = [None] * n
    for q in range(n):
        omega[perm[q]] = t.omega[q]
        for a, cell in enumerate(t.delta[q]):
            delta[perm[q]][a] = None if cell is None else perm[cell]
    return Transducer(
        n,
        t.input_alphabet,
        t.output_alphabet,
        tuple(tuple(row) for row in delta),
        tuple(omega),
    )
