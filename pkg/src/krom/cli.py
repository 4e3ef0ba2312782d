"""Command-line front end for the Krom program algebra.

Exit codes: 0 success (and "equivalent" for equiv), 1 "not equivalent"
(equiv only), 2 usage or parse error, 3 internal invariant violation.
Results go to stdout, diagnostics to stderr. ``-`` as a file argument
reads the program from stdin.
"""

from __future__ import annotations

import argparse
import enum
import sys

from .algebra import Alphabet, Atom, InternalError, Program, atoms, omega
from . import algebra
from .equivalence import (
    lm_equiv,
    minimize,
    ss_equiv,
    uniform_equiv,
    uniform_equiv_oracle,
)
from .gen import GenConfig, random_program
from .textio import ParseError, parse, render, to_dot

__all__ = ["ExitStatus", "main"]


class ExitStatus(enum.IntEnum):
    OK = 0
    NOT_EQUIVALENT = 1
    USAGE = 2
    INTERNAL = 3


class _CliError(Exception):
    def __init__(self, message: str, code: ExitStatus = ExitStatus.USAGE):
        super().__init__(message)
        self.code = code


def _read_source(path: str, stdin_cache: dict) -> tuple[str, bytes]:
    if path == "-":
        if "data" not in stdin_cache:
            stdin_cache["data"] = sys.stdin.buffer.read()
        return "<stdin>", stdin_cache["data"]
    try:
        with open(path, "rb") as f:
            return path, f.read()
    except OSError as exc:
        raise _CliError(f"error: cannot read {path}: {exc.strerror}") from None


def _load(path: str, stdin_cache: dict) -> Program:
    name, data = _read_source(path, stdin_cache)
    try:
        return parse(data)
    except ParseError as err:
        raise _CliError(f"{name}:{err.line}:{err.column}: {err.message}") from None


def _alphabet_for(program: Program, flag_value: str | None) -> Alphabet:
    if flag_value is None:
        return atoms(program)
    try:
        return Alphabet(Atom(name.strip()) for name in flag_value.split(","))
    except ValueError as exc:
        raise _CliError(f"error: bad --alphabet value: {exc}") from None


def _cmd_lm(args, stdin_cache):
    model = omega(_load(args.file, stdin_cache))
    sys.stdout.write("".join(f"{a}\n" for a in model))
    return ExitStatus.OK


def _cmd_compose(args, stdin_cache):
    k = _load(args.file1, stdin_cache)
    l = _load(args.file2, stdin_cache)
    sys.stdout.write(render(algebra.compose(k, l)))
    return ExitStatus.OK


def _cmd_power(args, stdin_cache):
    program = _load(args.file, stdin_cache)
    result = algebra.power(program, args.n, _alphabet_for(program, args.alphabet))
    sys.stdout.write(render(result))
    return ExitStatus.OK


def _cmd_star(args, stdin_cache):
    program = _load(args.file, stdin_cache)
    result = algebra.star(program, _alphabet_for(program, args.alphabet))
    sys.stdout.write(render(result))
    return ExitStatus.OK


def _cmd_plus(args, stdin_cache):
    program = _load(args.file, stdin_cache)
    result = algebra.plus(program, _alphabet_for(program, args.alphabet))
    sys.stdout.write(render(result))
    return ExitStatus.OK


def _cmd_equiv(args, stdin_cache):
    k = _load(args.file1, stdin_cache)
    l = _load(args.file2, stdin_cache)
    if args.oracle and args.mode != "uniform":
        raise _CliError("error: --oracle is only available with --mode uniform")
    if args.mode == "lm":
        verdict = lm_equiv(k, l)
    elif args.mode == "ss":
        verdict = ss_equiv(k, l)
    elif args.oracle:
        verdict = uniform_equiv_oracle(k, l)
    else:
        verdict = uniform_equiv(k, l)
    if verdict.equal:
        print("equivalent")
        return ExitStatus.OK
    print("not equivalent")
    if verdict.witness is not None:
        print(f"witness: {verdict.witness}")
    return ExitStatus.NOT_EQUIVALENT


def _cmd_minimize(args, stdin_cache):
    sys.stdout.write(render(minimize(_load(args.file, stdin_cache))))
    return ExitStatus.OK


def _cmd_gen(args, stdin_cache):
    config = GenConfig(
        atom_count=args.atoms,
        rule_count=args.rules,
        fact_ratio=args.fact_ratio,
        seed=args.seed,
    )
    sys.stdout.write(render(random_program(config)))
    return ExitStatus.OK


def _cmd_dot(args, stdin_cache):
    sys.stdout.write(to_dot(_load(args.file, stdin_cache)))
    return ExitStatus.OK


def _cmd_check(args, stdin_cache):
    _load(args.file, stdin_cache)
    return ExitStatus.OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="krom",
        description="Algebra and equivalence tools for propositional Krom logic programs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        return p

    p = add("lm", _cmd_lm, "print the least model, one atom per line")
    p.add_argument("file")

    p = add("compose", _cmd_compose, "print the sequential composition of two programs")
    p.add_argument("file1")
    p.add_argument("file2")

    p = add("power", _cmd_power, "print the n-fold composition of a program")
    p.add_argument("file")
    p.add_argument("n", type=int)
    p.add_argument("--alphabet", help="comma-separated atoms (default: atoms of the program)")

    p = add("star", _cmd_star, "print the union of all composition powers")
    p.add_argument("file")
    p.add_argument("--alphabet", help="comma-separated atoms (default: atoms of the program)")

    p = add("plus", _cmd_plus, "print the union of all positive composition powers")
    p.add_argument("file")
    p.add_argument("--alphabet", help="comma-separated atoms (default: atoms of the program)")

    p = add("equiv", _cmd_equiv, "decide program equivalence (exit 0 equal, 1 not)")
    p.add_argument("--mode", choices=["lm", "ss", "uniform"], required=True)
    p.add_argument("--oracle", action="store_true",
                   help="use the brute-force oracle (uniform mode only)")
    p.add_argument("file1")
    p.add_argument("file2")

    p = add("minimize", _cmd_minimize, "drop redundant rules, preserving uniform equivalence")
    p.add_argument("file")

    p = add("gen", _cmd_gen, "print a reproducible random program")
    p.add_argument("--atoms", type=int, required=True)
    p.add_argument("--rules", type=int, required=True)
    p.add_argument("--fact-ratio", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)

    p = add("dot", _cmd_dot, "print the rule digraph in DOT format")
    p.add_argument("file")

    p = add("check", _cmd_check, "validate program syntax only")
    p.add_argument("file")

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else int(ExitStatus.USAGE)
    stdin_cache: dict = {}
    try:
        return int(args.func(args, stdin_cache))
    except _CliError as err:
        print(err, file=sys.stderr)
        return int(err.code)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return int(ExitStatus.USAGE)
    except InternalError as err:
        print(f"internal error: {err}", file=sys.stderr)
        return int(ExitStatus.INTERNAL)


if __name__ == "__main__":
    sys.exit(main())
