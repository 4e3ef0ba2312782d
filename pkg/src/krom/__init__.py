"""Sequential-composition algebra and equivalence deciders for
propositional Krom logic programs.

See :mod:`krom.algebra` for the core operations, :mod:`krom.equivalence`
for the deciders and their brute-force oracles, :mod:`krom.textio` for the
text format, :mod:`krom.gen` for program generators, and :mod:`krom.cli`
for the command-line front end.
"""

from .algebra import (
    Alphabet,
    Atom,
    InternalError,
    Interpretation,
    Program,
    Rule,
    atoms,
    compose,
    extend_omega,
    fact,
    facts,
    heads,
    models,
    omega,
    plus,
    power,
    proper,
    reach,
    rule,
    star,
    unit,
)
from .equivalence import (
    AlphabetTooLargeError,
    EquivVerdict,
    lm_equiv,
    lm_oracle,
    minimize,
    ss_equiv,
    ss_equiv_semantic,
    uniform_equiv,
    uniform_equiv_oracle,
)
from .gen import GenConfig, enumerate_programs, random_program
from .textio import ParseError, parse, render, to_dot

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetTooLargeError",
    "Atom",
    "EquivVerdict",
    "GenConfig",
    "InternalError",
    "Interpretation",
    "ParseError",
    "Program",
    "Rule",
    "atoms",
    "compose",
    "enumerate_programs",
    "extend_omega",
    "fact",
    "facts",
    "heads",
    "lm_equiv",
    "lm_oracle",
    "minimize",
    "models",
    "omega",
    "parse",
    "plus",
    "power",
    "proper",
    "random_program",
    "reach",
    "render",
    "rule",
    "ss_equiv",
    "ss_equiv_semantic",
    "star",
    "to_dot",
    "uniform_equiv",
    "uniform_equiv_oracle",
    "unit",
]
