"""Text format for Krom programs, plus a digraph export.

Grammar of the on-disk format:

    program   : statement*
    statement : atom "."            (fact)
              | atom ":-" atom "."  (proper rule)
    atom      : [a-z][A-Za-z0-9_]*

Whitespace between tokens is insignificant; ``%`` starts a comment that
runs to the end of the line. Duplicate statements collapse (programs are
sets). Rendering is byte-stable: facts first in lexicographic order, then
proper rules ordered by head and body, one statement per line, one space on
each side of ``:-``.
"""

from __future__ import annotations

import re

from .algebra import Atom, Program, Rule, atoms, facts

__all__ = ["ParseError", "parse", "render", "to_dot"]

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
    | (?P<comment>%[^\n]*)
    | (?P<atom>[a-z][A-Za-z0-9_]*)
    | (?P<arrow>:-)
    | (?P<dot>\.)
    | (?P<comma>,)
    """,
    re.VERBOSE,
)

_KROM_BODY_MESSAGE = "Krom programs admit at most one body atom"


class ParseError(Exception):
    """Syntax error with the 1-based line and column of the offending byte."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    start = text.rfind("\n", 0, pos) + 1
    return line, pos - start + 1


def _error(text: str, pos: int, message: str) -> ParseError:
    line, column = _line_col(text, pos)
    return ParseError(line, column, message)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise _error(text, pos, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    return tokens


def parse(source: bytes | str) -> Program:
    """Parse program text into a :class:`Program`.

    Accepts bytes (must be valid UTF-8) or an already-decoded string.
    Raises :class:`ParseError` with the position of the first offending
    byte on any syntax error; a comma after a rule body gets the dedicated
    multi-atom-body message, since that is the most common Datalog habit
    this format rejects.
    """
    if isinstance(source, bytes):
        try:
            text = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            before = source[: exc.start]
            line = before.count(b"\n") + 1
            column = exc.start - (before.rfind(b"\n") + 1) + 1
            raise ParseError(line, column, "input is not valid UTF-8") from None
    else:
        text = source

    tokens = _tokenize(text)
    rules = set()
    i = 0
    end = len(text)

    def peek(j):
        return tokens[j] if j < len(tokens) else (None, "", end)

    while i < len(tokens):
        kind, value, pos = tokens[i]
        if kind != "atom":
            raise _error(text, pos, f"expected an atom, got {value!r}")
        head = value
        kind, value, pos = peek(i + 1)
        if kind == "dot":
            rules.add(Rule(Atom(head)))
            i += 2
            continue
        if kind != "arrow":
            raise _error(text, pos, "expected '.' or ':-' after the head atom")
        kind, value, pos = peek(i + 2)
        if kind != "atom":
            raise _error(text, pos, "expected a body atom after ':-'")
        body = value
        kind, value, pos = peek(i + 3)
        if kind == "comma":
            raise _error(text, pos, _KROM_BODY_MESSAGE)
        if kind != "dot":
            raise _error(text, pos, "expected '.' after the body atom")
        rules.add(Rule(Atom(head), Atom(body)))
        i += 4

    return Program(rules)


def render(program: Program) -> str:
    """Render a program in the canonical on-disk form.

    The output re-parses to an equal program, and equal programs render to
    identical bytes.
    """
    return "".join(f"{r}.\n" for r in program)


def to_dot(program: Program) -> str:
    """Export the program's rule digraph in DOT format.

    One node per atom; a proper rule ``a :- b`` becomes the edge ``b -> a``.
    Fact atoms get a doubled border (``peripheries=2``). Nodes and edges are
    emitted in sorted order, so the output is deterministic.
    """
    fact_atoms = facts(program).atoms
    lines = ["digraph program {"]
    for a in atoms(program):
        if a in fact_atoms:
            lines.append(f'  "{a}" [peripheries=2];')
        else:
            lines.append(f'  "{a}";')
    edges = sorted(
        (r.body, r.head) for r in program.rules if r.body is not None
    )
    for src, dst in edges:
        lines.append(f'  "{src}" -> "{dst}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
