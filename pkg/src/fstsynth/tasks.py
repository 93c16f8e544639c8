"""Built-in task families and the IOPAIRS/1 task file format.

Format (UTF-8 text):
  - lines starting with "#" and blank lines are ignored
  - optional "@mode chars" (default) or "@mode tokens"
  - optional "@inputs a b c" / "@outputs x y z" alphabet overrides, which
    must be supersets of what the pairs use
  - pair lines "<word> <output>"; in chars mode every character of the word
    is an input symbol, in tokens mode the word is comma-separated tokens
"""

from __future__ import annotations

import itertools

from .core import FstError, TaskSpec, Word


class TaskSyntaxError(FstError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class NonDivisible(FstError):
    def __init__(self, n: int, k: int):
        super().__init__(f"k={k} does not divide n={n}")


def _binary_words(length: int) -> list[Word]:
    return [w for w in itertools.product("01", repeat=length)]


def gen_parity(length: int) -> TaskSpec:
    """All binary words of the given length; output is the parity of 1s."""
    if length < 1:
        raise FstError("length must be >= 1")
    pairs = [(w, "1" if w.count("1") % 2 else "0") for w in _binary_words(length)]
    return TaskSpec(("0", "1"), ("0", "1"), tuple(pairs))


def gen_signal_locator(n: int, k: int) -> TaskSpec:
    """n-bit words of zeroes with a single 1; output is the 1-indexed block
    (of k equal blocks) containing the 1."""
    if n < 1 or k < 1:
        raise FstError("n and k must be >= 1")
    if n % k != 0:
        raise NonDivisible(n, k)
    outputs = tuple(str(b) for b in range(1, k + 1))
    pairs = []
    for i in range(1, n + 1):
        word = tuple("1" if j == i else "0" for j in range(1, n + 1))
        block = 1 + (i - 1) * k // n
        pairs.append((word, str(block)))
    return TaskSpec(("0", "1"), outputs, tuple(pairs))


def gen_zeroes_or_ones(length: int) -> TaskSpec:
    """All binary words of the given length; output names the majority
    symbol, or "equal" on a tie."""
    if length < 1:
        raise FstError("length must be >= 1")
    pairs = []
    for w in _binary_words(length):
        ones = w.count("1")
        zeroes = length - ones
        if zeroes > ones:
            out = "zeros"
        elif zeroes < ones:
            out = "ones"
        else:
            out = "equal"
        pairs.append((w, out))
    return TaskSpec(("0", "1"), ("zeros", "equal", "ones"), tuple(pairs))


def gen_palindrome(length: int) -> TaskSpec:
    """All binary words of the given length; output 1 iff the word equals
    its reverse."""
    if length < 1:
        raise FstError("length must be >= 1")
    pairs = [
        (w, "1" if w == w[::-1] else "0") for w in _binary_words(length)
    ]
    return TaskSpec(("0", "1"), ("0", "1"), tuple(pairs))


_WORD_GROUPS = (
    (("eruption", "erudite", "oriental", "topology", "serendipity"), "en"),
    (("eki", "origami", "arigato"), "jp"),
    (("asztal", "mester"), "hu"),
)


def word_classification() -> TaskSpec:
    """The fixed ten-word language-classification corpus; the input
    alphabet is the 17 letters occurring in it."""
    pairs = []
    letters: list[str] = []
    seen = set()
    for words, lang in _WORD_GROUPS:
        for word in words:
            pairs.append((tuple(word), lang))
            for c in word:
                if c not in seen:
                    seen.add(c)
                    letters.append(c)
    return TaskSpec(tuple(sorted(letters)), ("en", "jp", "hu"), tuple(pairs))


GENERATORS = {
    "parity": gen_parity,
    "signal-locator": gen_signal_locator,
    "zeroes-or-ones": gen_zeroes_or_ones,
    "palindrome": gen_palindrome,
    "words": word_classification,
}


def parse_task(text: str) -> TaskSpec:
    """Parse an IOPAIRS/1 document into a TaskSpec."""
    mode = "chars"
    forced_inputs: tuple[str, ...] | None = None
    forced_outputs: tuple[str, ...] | None = None
    pairs: list[tuple[Word, str]] = []
    inputs_seen: list[str] = []
    outputs_seen: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("@"):
            fields = line.split()
            directive = fields[0]
            if directive == "@mode":
                if len(fields) != 2 or fields[1] not in ("chars", "tokens"):
                    raise TaskSyntaxError(lineno, "@mode must be chars or tokens")
                if pairs:
                    raise TaskSyntaxError(lineno, "@mode must precede pair lines")
                mode = fields[1]
            elif directive == "@inputs":
                forced_inputs = tuple(fields[1:])
            elif directive == "@outputs":
                forced_outputs = tuple(fields[1:])
            else:
                raise TaskSyntaxError(lineno, f"unknown directive {directive}")
            continue
        fields = line.split()
        if len(fields) != 2:
            raise TaskSyntaxError(lineno, "expected '<word> <output>'")
        raw_word, out = fields
        word = tuple(raw_word) if mode == "chars" else tuple(raw_word.split(","))
        if any(not s for s in word):
            raise TaskSyntaxError(lineno, f"empty token in word {raw_word!r}")
        for s in word:
            if s not in inputs_seen:
                inputs_seen.append(s)
        if out not in outputs_seen:
            outputs_seen.append(out)
        pairs.append((word, out))

    input_alphabet = forced_inputs if forced_inputs is not None else tuple(sorted(inputs_seen))
    output_alphabet = forced_outputs if forced_outputs is not None else tuple(sorted(outputs_seen))
    if forced_inputs is not None and not set(inputs_seen) <= set(forced_inputs):
        missing = sorted(set(inputs_seen) - set(forced_inputs))
        raise FstError(f"@inputs is missing used symbols: {missing}")
    if forced_outputs is not None and not set(outputs_seen) <= set(forced_outputs):
        missing = sorted(set(outputs_seen) - set(forced_outputs))
        raise FstError(f"@outputs is missing used symbols: {missing}")
    return TaskSpec(input_alphabet, output_alphabet, tuple(pairs))


def write_task(task: TaskSpec) -> str:
    """Serialize to IOPAIRS/1; parse(write(task)) == task."""
    chars_ok = all(len(s) == 1 for s in task.input_alphabet)
    lines = []
    if not chars_ok:
        lines.append("@mode tokens")
    lines.append("@inputs " + " ".join(task.input_alphabet))
    lines.append("@outputs " + " ".join(task.output_alphabet))
    for word, out in task.pairs:
        text = "".join(word) if chars_ok else ",".join(word)
        lines.append(f"{text} {out}")
    return "\n".join(lines) + "\n"
