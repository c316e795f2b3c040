"""Line-based text formats for DFAs and word lists.

DFA file::

    alphabet a b
    states 4
    initial 0
    finals 1 2
    trans 0 a 3
    ...

Word files hold one word per line; ``@eps`` is the empty word. ``#`` starts
a comment in both formats.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

from .automata import Dfa, Word

EPSILON_TOKEN = "@eps"


class FormatError(ValueError):
    """Malformed DFA or word file; ``line`` is 1-based (0 when unknown)."""

    def __init__(self, message: str, line: int = 0, source: str = ""):
        self.message = message
        self.line = line
        self.source = source
        where = f"{source}: " if source else ""
        where += f"line {line}: " if line else ""
        super().__init__(where + message)


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {token!r}", line) from None


def parse_dfa(text: str, source: str = "") -> Dfa:
    try:
        return _parse_dfa(text)
    except FormatError as exc:
        raise FormatError(exc.message, exc.line, source) from None


def _parse_dfa(text: str) -> Dfa:
    lines = list(_content_lines(text))
    headers = ["alphabet", "states", "initial", "finals"]
    if len(lines) < 4:
        raise FormatError("expected alphabet, states, initial and finals header lines", lines[-1][0] if lines else 0)
    for (number, tokens), expected in zip(lines, headers):
        if tokens[0] != expected:
            raise FormatError(f"expected '{expected}' line, got {tokens[0]!r}", number)

    number, tokens = lines[0]
    labels = tokens[1:]
    if not labels:
        raise FormatError("alphabet must not be empty", number)
    for label in labels:
        if len(label) != 1 or label == "#":
            raise FormatError(f"alphabet symbols must be single characters, got {label!r}", number)
    if len(set(labels)) != len(labels):
        raise FormatError("duplicate alphabet symbol", number)
    index = {c: i for i, c in enumerate(labels)}

    number, tokens = lines[1]
    if len(tokens) != 2:
        raise FormatError("expected 'states <n>'", number)
    n = _int(tokens[1], number, "state count")
    if n < 1:
        raise FormatError("state count must be positive", number)

    def state(token: str, line: int) -> int:
        q = _int(token, line, "state")
        if not 0 <= q < n:
            raise FormatError(f"state {q} out of range 0..{n - 1}", line)
        return q

    number, tokens = lines[2]
    if len(tokens) != 2:
        raise FormatError("expected 'initial <state>'", number)
    initial = state(tokens[1], number)

    number, tokens = lines[3]
    finals = {state(t, number) for t in tokens[1:]}

    table: list[list] = [[None] * len(labels) for _ in range(n)]
    for number, tokens in lines[4:]:
        if tokens[0] != "trans" or len(tokens) != 4:
            raise FormatError("expected 'trans <state> <symbol> <state>'", number)
        q = state(tokens[1], number)
        if tokens[2] not in index:
            raise FormatError(f"unknown symbol {tokens[2]!r}", number)
        b = index[tokens[2]]
        if table[q][b] is not None:
            raise FormatError(f"duplicate transition for state {q} on {tokens[2]!r}", number)
        table[q][b] = state(tokens[3], number)
    for q, row in enumerate(table):
        for b, t in enumerate(row):
            if t is None:
                raise FormatError(f"missing transition for state {q} on {labels[b]!r}", lines[-1][0])
    return Dfa(num_states=n, alphabet_size=len(labels), initial=initial,
               finals=frozenset(finals), transition=table, labels=tuple(labels))


def format_dfa(dfa: Dfa) -> str:
    out = [
        "alphabet " + " ".join(dfa.labels),
        f"states {dfa.num_states}",
        f"initial {dfa.initial}",
        " ".join(["finals"] + [str(q) for q in sorted(dfa.finals)]),
    ]
    for q, row in enumerate(dfa.transition):
        for b, t in enumerate(row):
            out.append(f"trans {q} {dfa.labels[b]} {t}")
    return "\n".join(out) + "\n"


def parse_words(text: str, labels: Sequence[str], source: str = "") -> list[Word]:
    index = {c: i for i, c in enumerate(labels)}
    words = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == EPSILON_TOKEN:
            words.append(())
            continue
        try:
            words.append(tuple(index[c] for c in line))
        except KeyError as exc:
            raise FormatError(f"symbol {exc.args[0]!r} not in alphabet", number, source) from None
    return words


def format_words(words: Iterable[Word], labels: Sequence[str]) -> str:
    lines = ["".join(labels[s] for s in w) if w else EPSILON_TOKEN for w in words]
    return "".join(line + "\n" for line in lines)


def read_dfa(path) -> Dfa:
    path = Path(path)
    return parse_dfa(path.read_text(), source=str(path))


def write_dfa(dfa: Dfa, path) -> None:
    Path(path).write_text(format_dfa(dfa))


def read_words(path, labels: Sequence[str]) -> list[Word]:
    path = Path(path)
    return parse_words(path.read_text(), labels, source=str(path))
