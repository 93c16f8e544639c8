"""FST/1 transducer file format and Graphviz DOT export.

FST/1 is a diff-friendly text format with a bit-exact round trip:
  @states N
  @initial 0
  @inputs a b ...
  @outputs x y ...
  then N body lines "state output succ_1 ... succ_|I|", with "-" for an
  undefined output or successor.
"""

from __future__ import annotations

from .core import UNDEFINED_TOKEN, FstError, Transducer


class TransducerSyntaxError(FstError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


def serialize_transducer(t: Transducer) -> str:
    lines = [
        f"@states {t.n_states}",
        "@initial 0",
        "@inputs " + " ".join(t.input_alphabet),
        "@outputs " + " ".join(t.output_alphabet),
    ]
    for q in range(t.n_states):
        out = t.omega[q] if t.omega[q] is not None else UNDEFINED_TOKEN
        succs = " ".join(
            UNDEFINED_TOKEN if c is None else str(c) for c in t.delta[q]
        )
        lines.append(f"{q} {out} {succs}".rstrip())
    return "\n".join(lines) + "\n"


def parse_transducer(text: str) -> Transducer:
    n = None
    inputs = None
    outputs = None
    body: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "@states":
            n = int(fields[1])
        elif fields[0] == "@initial":
            if fields[1] != "0":
                raise TransducerSyntaxError(lineno, "initial state must be 0")
        elif fields[0] == "@inputs":
            inputs = tuple(fields[1:])
        elif fields[0] == "@outputs":
            outputs = tuple(fields[1:])
        elif fields[0].startswith("@"):
            raise TransducerSyntaxError(lineno, f"unknown directive {fields[0]}")
        else:
            body.append((lineno, fields))
    if n is None or inputs is None or outputs is None:
        raise TransducerSyntaxError(0, "missing @states/@inputs/@outputs header")
    if len(body) != n:
        raise TransducerSyntaxError(0, f"expected {n} body lines, got {len(body)}")
    delta = [[None] * len(inputs) for _ in range(n)]
    omega: list[str | None] = [None] * n
    seen = set()
    for lineno, fields in body:
        if len(fields) != 2 + len(inputs):
            raise TransducerSyntaxError(
                lineno, f"expected state, output and {len(inputs)} successors"
            )
        q = int(fields[0])
        if not 0 <= q < n or q in seen:
            raise TransducerSyntaxError(lineno, f"bad or repeated state {fields[0]}")
        seen.add(q)
        omega[q] = None if fields[1] == UNDEFINED_TOKEN else fields[1]
        for a, cell in enumerate(fields[2:]):
            delta[q][a] = None if cell == UNDEFINED_TOKEN else int(cell)
    return Transducer(
        n, inputs, outputs, tuple(tuple(row) for row in delta), tuple(omega)
    )


def to_dot(t: Transducer, show_nil_sink: bool = False, name: str = "transducer") -> str:
    """Deterministic DOT digraph: nodes in state order, one edge per
    (source, target) with its symbols comma-joined in alphabet order.
    With show_nil_sink, undefined cells route to a shared "nil" node."""
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=none, label=""];']
    for q in range(t.n_states):
        label = str(q) if t.omega[q] is None else f"{q}:{t.omega[q]}"
        lines.append(f'  q{q} [shape=circle, label="{label}"];')
    nil_needed = show_nil_sink and any(
        c is None for row in t.delta for c in row
    )
    if nil_needed:
        lines.append('  nil [shape=circle, label="nil"];')
    lines.append("  __start -> q0;")
    for q in range(t.n_states):
        by_target: dict[object, list[str]] = {}
        for a, sym in enumerate(t.input_alphabet):
            cell = t.delta[q][a]
            if cell is None:
                if show_nil_sink:
                    by_target.setdefault("nil", []).append(sym)
                continue
            by_target.setdefault(cell, []).append(sym)
        for target in sorted(by_target, key=str):
            syms = ",".join(by_target[target])
            dst = "nil" if target == "nil" else f"q{target}"
            lines.append(f'  q{q} -> {dst} [label="{syms}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
