"""Core algebra of propositional Krom logic programs.

A Krom program is a finite set of rules over propositional atoms, where
every rule is either a fact ``a`` or a proper rule ``a :- b`` with exactly
one body atom. Programs form an algebra under sequential composition:
``compose(K, L)`` keeps the facts of K, fires K's proper rules on the facts
of L, and chains K's proper rules through L's proper rules. Iterating
composition yields the closure operators ``power``, ``star``, and ``plus``;
``omega`` computes the least model.

A program is also the edge set of a digraph (a proper rule ``a :- b`` is an
edge from b to a), so the closure operators have reachability fast paths.
All values are immutable after construction and safe to share between
threads; every operation is a pure function of its inputs.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "Atom",
    "Rule",
    "Program",
    "Interpretation",
    "Alphabet",
    "InternalError",
    "fact",
    "rule",
    "atoms",
    "facts",
    "proper",
    "heads",
    "compose",
    "unit",
    "power",
    "star",
    "plus",
    "omega",
    "models",
    "reach",
    "extend_omega",
]

_ATOM_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")


class InternalError(RuntimeError):
    """A library invariant failed; indicates a bug, not bad input."""


class Atom(str):
    """A propositional symbol: a lowercase-initial identifier.

    Atoms compare and sort as their names, so all set output in this
    package is deterministically ordered.
    """

    __slots__ = ()

    def __new__(cls, name: str) -> "Atom":
        if isinstance(name, Atom):
            return name
        if not isinstance(name, str) or not _ATOM_RE.match(name):
            raise ValueError(f"invalid atom name: {name!r}")
        return super().__new__(cls, name)


class Rule(NamedTuple):
    """A fact (``body is None``) or a proper rule ``head :- body``.

    A self-loop ``a :- a`` is a legal proper rule; identity programs are
    made of them.
    """

    head: Atom
    body: Atom | None = None

    @property
    def is_fact(self) -> bool:
        return self.body is None

    def __str__(self) -> str:
        if self.body is None:
            return self.head
        return f"{self.head} :- {self.body}"


def fact(name: str) -> Rule:
    """Build a fact rule from an atom name."""
    return Rule(Atom(name))


def rule(head: str, body: str) -> Rule:
    """Build a proper rule ``head :- body`` from atom names."""
    return Rule(Atom(head), Atom(body))


def _rule_key(r: Rule) -> tuple:
    # Facts sort before proper rules; ties break on (head, body).
    return (r.body is not None, r.head, r.body or "")


class Program:
    """An immutable, duplicate-free set of rules.

    Iteration is sorted (facts first by head, then proper rules by head and
    body), so rendering and witnesses never depend on insertion order.
    ``|`` and ``-`` give rule-set union and difference.
    """

    __slots__ = ("_rules",)

    def __init__(self, rules: Iterable[Rule] = ()):
        rs = frozenset(rules)
        for r in rs:
            if not isinstance(r, Rule):
                raise TypeError(f"not a Rule: {r!r}")
            Atom(r.head)
            if r.body is not None:
                Atom(r.body)
        self._rules = rs

    @classmethod
    def _wrap(cls, rules: frozenset) -> "Program":
        # Internal fast path: rules already validated.
        p = object.__new__(cls)
        p._rules = rules
        return p

    @property
    def rules(self) -> frozenset[Rule]:
        return self._rules

    def __iter__(self) -> Iterator[Rule]:
        return iter(sorted(self._rules, key=_rule_key))

    def __len__(self) -> int:
        return len(self._rules)

    def __contains__(self, r: object) -> bool:
        return r in self._rules

    def __bool__(self) -> bool:
        return bool(self._rules)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Program):
            return NotImplemented
        return self._rules == other._rules

    def __hash__(self) -> int:
        return hash(self._rules)

    def __or__(self, other: "Program") -> "Program":
        if not isinstance(other, Program):
            return NotImplemented
        return Program._wrap(self._rules | other._rules)

    def __sub__(self, other: "Program") -> "Program":
        if not isinstance(other, Program):
            return NotImplemented
        return Program._wrap(self._rules - other._rules)

    def __repr__(self) -> str:
        return f"Program({{{', '.join(str(r) for r in self)}}})"


class AtomSet:
    """Shared behavior of atom-set values: immutable, sorted iteration."""

    __slots__ = ("_atoms",)

    def __init__(self, atoms: Iterable[str] = ()):
        self._atoms = frozenset(Atom(a) for a in atoms)

    @classmethod
    def _wrap(cls, atoms: frozenset):
        s = object.__new__(cls)
        s._atoms = atoms
        return s

    @property
    def atoms(self) -> frozenset[Atom]:
        return self._atoms

    def __iter__(self) -> Iterator[Atom]:
        return iter(sorted(self._atoms))

    def __len__(self) -> int:
        return len(self._atoms)

    def __contains__(self, a: object) -> bool:
        return a in self._atoms

    def __bool__(self) -> bool:
        return bool(self._atoms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AtomSet):
            return NotImplemented
        return self._atoms == other._atoms

    def __hash__(self) -> int:
        return hash(self._atoms)

    def __or__(self, other: "AtomSet"):
        if not isinstance(other, AtomSet):
            return NotImplemented
        return type(self)._wrap(self._atoms | other._atoms)

    def __and__(self, other: "AtomSet"):
        if not isinstance(other, AtomSet):
            return NotImplemented
        return type(self)._wrap(self._atoms & other._atoms)

    def __sub__(self, other: "AtomSet"):
        if not isinstance(other, AtomSet):
            return NotImplemented
        return type(self)._wrap(self._atoms - other._atoms)

    def __le__(self, other: "AtomSet") -> bool:
        if not isinstance(other, AtomSet):
            return NotImplemented
        return self._atoms <= other._atoms

    def __lt__(self, other: "AtomSet") -> bool:
        if not isinstance(other, AtomSet):
            return NotImplemented
        return self._atoms < other._atoms

    def __str__(self) -> str:
        return "{" + ", ".join(self) + "}"

    def __repr__(self) -> str:
        return f"{type(self).__name__}([{', '.join(map(repr, self))}])"


class Interpretation(AtomSet):
    """A set of atoms, identified with the facts-only program over it."""

    def as_program(self) -> Program:
        return Program._wrap(frozenset(Rule(a) for a in self._atoms))

    @classmethod
    def from_program(cls, program: Program) -> "Interpretation":
        """Inverse of :meth:`as_program`; rejects programs with proper rules."""
        bad = [r for r in program.rules if r.body is not None]
        if bad:
            raise ValueError(f"not a facts-only program: contains {bad[0]}")
        return cls._wrap(frozenset(r.head for r in program.rules))


class Alphabet(AtomSet):
    """The ambient universe of atoms; parameterizes the identity program."""


def atoms(program: Program) -> Alphabet:
    """Every atom occurring in the program, as head, body, or fact."""
    out = set()
    for r in program.rules:
        out.add(r.head)
        if r.body is not None:
            out.add(r.body)
    return Alphabet._wrap(frozenset(out))


def facts(program: Program) -> Interpretation:
    """The fact atoms of the program."""
    return Interpretation._wrap(
        frozenset(r.head for r in program.rules if r.body is None)
    )


def proper(program: Program) -> Program:
    """The subset of proper rules of the program."""
    return Program._wrap(frozenset(r for r in program.rules if r.body is not None))


def heads(program: Program) -> Interpretation:
    """All rule heads; a fact counts as its own head."""
    return Interpretation._wrap(frozenset(r.head for r in program.rules))


def compose(k: Program, l: Program) -> Program:
    """Sequential composition of two programs.

    The result is the union of three clause sets:

    * every fact of ``k``,
    * the fact ``a`` for every proper rule ``a :- b`` of ``k`` whose body
      ``b`` is a fact of ``l``,
    * the proper rule ``a :- c`` for every ``a :- b`` in ``k`` chained with
      ``b :- c`` in ``l``.
    """
    l_facts = set()
    l_bodies: dict[Atom, list[Atom]] = {}
    for r in l.rules:
        if r.body is None:
            l_facts.add(r.head)
        else:
            l_bodies.setdefault(r.head, []).append(r.body)
    out = set()
    for r in k.rules:
        if r.body is None:
            out.add(r)
            continue
        if r.body in l_facts:
            out.add(Rule(r.head))
        for c in l_bodies.get(r.body, ()):
            out.add(Rule(r.head, c))
    return Program._wrap(frozenset(out))


def unit(alphabet: Alphabet) -> Program:
    """The identity program over the alphabet: one self-loop per atom.

    It is the two-sided identity of :func:`compose` for every program whose
    atoms lie inside the alphabet.
    """
    return Program._wrap(frozenset(Rule(a, a) for a in alphabet.atoms))


def _require_covers(program: Program, alphabet: Alphabet) -> None:
    extra = atoms(program).atoms - alphabet.atoms
    if extra:
        missing = ", ".join(sorted(extra))
        raise ValueError(f"program atoms not in the alphabet: {missing}")


def power(program: Program, n: int, alphabet: Alphabet) -> Program:
    """The n-fold composition of the program with itself.

    ``power(P, 0, A)`` is the identity program over ``A``; higher powers are
    the left-associated iteration ``(..(P . P) .. P)``.
    """
    if n < 0:
        raise ValueError(f"exponent must be non-negative, got {n}")
    _require_covers(program, alphabet)
    if n == 0:
        return unit(alphabet)
    result = program
    for _ in range(n - 1):
        result = compose(result, program)
    return result


def star(program: Program, alphabet: Alphabet) -> Program:
    """The union of all composition powers of the program, 0-fold included.

    Accumulates ``U := U | compose(U, P)`` from the identity program until a
    full pass adds no rule. The accumulator grows monotonically inside the
    finite rule universe over the alphabet, so the loop stops within
    ``|A|**2 + |A| + 1`` passes; exceeding that bound is a bug.
    """
    _require_covers(program, alphabet)
    n = len(alphabet)
    acc = unit(alphabet)
    for _ in range(n * n + n + 1):
        grown = acc | compose(acc, program)
        if grown == acc:
            return acc
        acc = grown
    raise InternalError("closure accumulator escaped the rule-universe bound")


def plus(program: Program, alphabet: Alphabet) -> Program:
    """The union of all positive composition powers: ``star(P) . P``."""
    return compose(star(program, alphabet), program)


def omega(program: Program) -> Interpretation:
    """The least model: every atom derivable from the facts.

    Computed as graph reachability: seed with the fact atoms and follow the
    edge ``body -> head`` of every proper rule. Equals the union of the fact
    parts of all positive composition powers.
    """
    targets: dict[Atom, list[Atom]] = {}
    seeds = []
    for r in program.rules:
        if r.body is None:
            seeds.append(r.head)
        else:
            targets.setdefault(r.body, []).append(r.head)
    seen = set(seeds)
    stack = seeds
    while stack:
        b = stack.pop()
        for h in targets.get(b, ()):
            if h not in seen:
                seen.add(h)
                stack.append(h)
    return Interpretation._wrap(frozenset(seen))


def models(interp: Interpretation, program: Program) -> bool:
    """True iff the interpretation satisfies every rule of the program.

    A fact ``a`` requires ``a`` in the interpretation; a proper rule
    ``a :- b`` requires ``a`` whenever ``b`` is in it.
    """
    s = interp.atoms
    for r in program.rules:
        if r.body is None:
            if r.head not in s:
                return False
        elif r.body in s and r.head not in s:
            return False
    return True


def reach(program: Program, interp: Interpretation) -> Interpretation:
    """Atoms reachable from the interpretation along proper-rule edges.

    The input atoms themselves are always included. Atoms foreign to the
    program are isolated vertices and map to themselves. Rejects programs
    containing facts; reachability is an edge-set notion.
    """
    edges: dict[Atom, list[Atom]] = {}
    for r in program.rules:
        if r.body is None:
            raise ValueError(f"expected a proper-rules-only program, found fact {r.head}")
        edges.setdefault(r.body, []).append(r.head)
    seen = set(interp.atoms)
    stack = list(seen)
    while stack:
        b = stack.pop()
        for h in edges.get(b, ()):
            if h not in seen:
                seen.add(h)
                stack.append(h)
    return Interpretation._wrap(frozenset(seen))


def extend_omega(k: Program, interp: Interpretation) -> Interpretation:
    """Least model of the program extended with the interpretation as facts.

    Equals ``omega(k | interp.as_program())`` but never materializes the
    union: the extra facts only contribute what is reachable from them.
    """
    return omega(k) | reach(proper(k), interp)
