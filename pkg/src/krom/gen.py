"""Deterministic Krom program generators for sweeps and property tests.

Random generation is reproducible from the config alone; exhaustive
enumeration is guarded so nobody accidentally asks for billions of
programs.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from .algebra import Alphabet, Atom, Program, Rule

__all__ = ["GenConfig", "random_program", "enumerate_programs"]

_MAX_ENUM_ATOMS = 3
_MAX_ENUM_RULES = 4


@dataclass(frozen=True)
class GenConfig:
    """Parameters of one random program draw.

    The rule universe over ``atom_count`` atoms has ``atom_count`` facts and
    ``atom_count ** 2`` proper rules; ``rule_count`` may not exceed their
    sum. Equal configs always produce equal programs.
    """

    atom_count: int
    rule_count: int
    fact_ratio: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.atom_count < 1:
            raise ValueError(f"atom_count must be positive, got {self.atom_count}")
        if self.rule_count < 0:
            raise ValueError(f"rule_count must be non-negative, got {self.rule_count}")
        universe = self.atom_count + self.atom_count**2
        if self.rule_count > universe:
            raise ValueError(
                f"rule_count {self.rule_count} exceeds the rule universe "
                f"({universe}) over {self.atom_count} atoms"
            )
        if not 0 <= self.fact_ratio <= 1:
            raise ValueError(f"fact_ratio must lie in [0, 1], got {self.fact_ratio}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def random_program(config: GenConfig) -> Program:
    """Draw ``config.rule_count`` distinct rules over atoms x1..xN.

    Generator algorithm (fixed as part of the contract, so any failure is
    replayable from the config alone): a Mersenne Twister stream seeded
    with ``config.seed`` (``random.Random``) drives the draw. Each step
    flips a coin that picks the fact pool with probability ``fact_ratio``
    (falling back to the other pool when one is empty, so a saturating
    ``rule_count`` always fills the whole universe), then removes the rule
    at a uniformly drawn index of the chosen pool, swapping the last
    element into the hole.
    """
    names = [Atom(f"x{i}") for i in range(1, config.atom_count + 1)]
    fact_pool = [Rule(a) for a in names]
    proper_pool = [Rule(h, b) for h in names for b in names]
    rng = random.Random(config.seed)
    chosen = []
    while len(chosen) < config.rule_count:
        pick_fact = rng.random() < config.fact_ratio
        pool = fact_pool if pick_fact else proper_pool
        if not pool:
            pool = proper_pool if pick_fact else fact_pool
        i = rng.randrange(len(pool))
        pool[i], pool[-1] = pool[-1], pool[i]
        chosen.append(pool.pop())
    return Program(chosen)


def enumerate_programs(alphabet: Alphabet, max_rules: int) -> Iterator[Program]:
    """Yield every program over the alphabet with at most ``max_rules``
    rules, each exactly once, in a deterministic order.

    Guarded to ``len(alphabet) <= 3`` and ``max_rules <= 4``; the universe
    grows as C(n + n**2, k) summed over k, which explodes fast.
    """
    if len(alphabet) > _MAX_ENUM_ATOMS:
        raise ValueError(
            f"enumeration supports at most {_MAX_ENUM_ATOMS} atoms, got {len(alphabet)}"
        )
    if not 0 <= max_rules <= _MAX_ENUM_RULES:
        raise ValueError(
            f"enumeration supports 0..{_MAX_ENUM_RULES} rules per program, got {max_rules}"
        )
    names = sorted(alphabet.atoms)
    universe = [Rule(a) for a in names]
    universe.extend(Rule(h, b) for h in names for b in names)
    for size in range(min(max_rules, len(universe)) + 1):
        for combo in itertools.combinations(universe, size):
            yield Program(combo)
