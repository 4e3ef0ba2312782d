"""Equivalence deciders for Krom programs, with brute-force oracles.

Three notions, from finest to coarsest:

* subsumption equivalence: the programs compose identically with every
  interpretation; for Krom programs this collapses to rule-set equality,
* uniform equivalence: the programs have the same least model under every
  extension by extra facts,
* least-model equivalence: the programs have the same least model.

Each decider has an independent enumeration-based oracle next to it; the
oracles refuse alphabets larger than a configurable bound instead of
sampling silently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .algebra import (
    InternalError,
    Interpretation,
    Program,
    atoms,
    compose,
    models,
    omega,
    proper,
    reach,
)

__all__ = [
    "EquivVerdict",
    "AlphabetTooLargeError",
    "DEFAULT_ORACLE_BOUND",
    "lm_equiv",
    "ss_equiv",
    "ss_equiv_semantic",
    "uniform_equiv",
    "uniform_equiv_oracle",
    "lm_oracle",
    "minimize",
]

DEFAULT_ORACLE_BOUND = 20


class AlphabetTooLargeError(ValueError):
    """The joint alphabet exceeds the exhaustive-enumeration bound."""


@dataclass(frozen=True)
class EquivVerdict:
    """Outcome of an equivalence query.

    ``witness`` is a distinguishing interpretation when ``equal`` is False
    and the decider is semantic; syntactic and least-model verdicts carry
    no witness.
    """

    equal: bool
    witness: Interpretation | None = None

    def __bool__(self) -> bool:
        return self.equal


def _joint_alphabet(k: Program, l: Program) -> list:
    return sorted((atoms(k) | atoms(l)).atoms)


def _check_bound(universe: list, max_atoms: int) -> None:
    if len(universe) > max_atoms:
        raise AlphabetTooLargeError(
            f"{len(universe)} atoms exceed the enumeration bound of {max_atoms}"
        )


def _interpretations(universe: list) -> Iterator[Interpretation]:
    # All subsets, smallest first, lexicographic within a size. Witnesses
    # returned by the oracles are therefore minimal and reproducible.
    for size in range(len(universe) + 1):
        for combo in itertools.combinations(universe, size):
            yield Interpretation(combo)


def lm_equiv(k: Program, l: Program) -> EquivVerdict:
    """Decide whether two programs have the same least model."""
    return EquivVerdict(omega(k) == omega(l))


def ss_equiv(k: Program, l: Program) -> EquivVerdict:
    """Decide subsumption equivalence as rule-set equality.

    Caveat: composing with an interpretation cannot observe a proper rule
    whose head the program already states as a fact (firing it only
    re-produces that fact, and interpretations carry no rules to chain
    into). ``{a}`` and ``{a, a :- a}`` therefore compose identically with
    every interpretation although their rule sets differ, so this decider
    is strictly finer than :func:`ss_equiv_semantic` on such programs; the
    two notions coincide exactly on programs with no fact-subsumed rules.
    """
    return EquivVerdict(k == l)


def ss_equiv_semantic(
    k: Program, l: Program, max_atoms: int = DEFAULT_ORACLE_BOUND
) -> EquivVerdict:
    """Subsumption equivalence by enumeration: compare ``K . I`` and ``L . I``
    for every interpretation I over the joint alphabet.

    The empty and singleton interpretations already decide the answer, but
    this checker does not rely on that and enumerates everything. It is
    blind to proper rules whose head is a fact of the same program; see the
    :func:`ss_equiv` caveat.
    """
    universe = _joint_alphabet(k, l)
    _check_bound(universe, max_atoms)
    for interp in _interpretations(universe):
        if compose(k, interp.as_program()) != compose(l, interp.as_program()):
            return EquivVerdict(False, interp)
    return EquivVerdict(True)


def uniform_equiv(k: Program, l: Program) -> EquivVerdict:
    """Decide whether the programs stay least-model equivalent under every
    extension by extra facts.

    It suffices to compare the least models themselves (the empty
    extension) and the extensions by one atom at a time: reachability from
    a set of seed atoms is the union of reachability from each seed, so
    agreement on singletons lifts to agreement on every interpretation.
    Atoms outside both programs extend both sides by exactly themselves.

    The witness on a negative verdict is the first failing interpretation,
    checked in sorted order with the empty one first.
    """
    base_k, base_l = omega(k), omega(l)
    if base_k != base_l:
        return EquivVerdict(False, Interpretation())
    pk, pl = proper(k), proper(l)
    for x in _joint_alphabet(k, l):
        single = Interpretation((x,))
        if base_k | reach(pk, single) != base_l | reach(pl, single):
            return EquivVerdict(False, single)
    return EquivVerdict(True)


def uniform_equiv_oracle(
    k: Program, l: Program, max_atoms: int = DEFAULT_ORACLE_BOUND
) -> EquivVerdict:
    """Uniform equivalence by brute force: compare the least models of
    ``K | I`` and ``L | I`` for every interpretation I over the joint
    alphabet."""
    universe = _joint_alphabet(k, l)
    _check_bound(universe, max_atoms)
    for interp in _interpretations(universe):
        ext = interp.as_program()
        if omega(k | ext) != omega(l | ext):
            return EquivVerdict(False, interp)
    return EquivVerdict(True)


def lm_oracle(program: Program, max_atoms: int = DEFAULT_ORACLE_BOUND) -> Interpretation:
    """Least model by exhaustive enumeration of interpretations.

    Enumerates every subset of the program's atoms, keeps the models, and
    returns their intersection after verifying that it is itself a model
    contained in every model. (A model contained in every model is the
    unique least one, and any least model equals the intersection, so the
    two verifications pin it down exactly.)
    """
    universe = sorted(atoms(program).atoms)
    _check_bound(universe, max_atoms)
    n = len(universe)
    index = {a: i for i, a in enumerate(universe)}
    fact_mask = 0
    implications = []
    for r in program.rules:
        if r.body is None:
            fact_mask |= 1 << index[r.head]
        else:
            implications.append((1 << index[r.body], 1 << index[r.head]))
    model_masks = []
    for bits in range(1 << n):
        if bits & fact_mask != fact_mask:
            continue
        if all(not bits & b or bits & h for b, h in implications):
            model_masks.append(bits)
    if not model_masks:
        raise InternalError("no model found; the full atom set always models a Krom program")
    least_bits = model_masks[0]
    for m in model_masks[1:]:
        least_bits &= m
    least = Interpretation(universe[i] for i in range(n) if least_bits >> i & 1)
    if not models(least, program):
        raise InternalError("model intersection is not itself a model")
    if any(least_bits & m != least_bits for m in model_masks):
        raise InternalError("least model candidate not contained in every model")
    return least


def minimize(k: Program) -> Program:
    """Drop redundant rules while preserving uniform equivalence.

    Greedy single pass in sorted rule order: a rule is deleted iff the
    program without it is still uniformly equivalent to the input. One pass
    is enough for 1-minimality because extensions' least models only shrink
    when rules are removed: a rule that later became removable would have
    been removable at its own turn already.
    """
    current = set(k.rules)
    for r in k:
        candidate = Program._wrap(frozenset(current - {r}))
        if uniform_equiv(candidate, k).equal:
            current.discard(r)
    return Program._wrap(frozenset(current))
