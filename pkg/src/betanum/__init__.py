"""betanum: beta-numeration over exact algebraic arithmetic.

Construct a base with :func:`context` (or :class:`BetaContext`), then build
zero-representation automata, compute greedy expansions, normalize digit
words, and probe spectra, all with certified exact arithmetic in Q(beta).
"""

from . import errors
from .automata import (AlphabetInfo, Automaton, State, equal_by_labels,
                       from_json, negate, prune_non_live, to_dot, to_json,
                       trim_coaccessible)
from .classify import (EmbeddingBound, RootClass, classify_poly,
                       classify_roots, conjugate_verdicts, embedding_bounds,
                       test_within_bounds)
from .converter import (accepts_pair, build_converter, normalization_automaton,
                        normalize)
from .expansion import (EventuallyPeriodicWord, ParryVerdict, expansion_of_one,
                        greedy_automaton, greedy_digits, is_admissible,
                        quasi_greedy, word_from_text, word_to_text)
from .field import BetaContext, FieldElement, context, parse_poly
from .spectrum import (FNumberOutcome, GapStats, SpectrumQuery,
                       enumerate_spectrum, f_number_probe, min_gap)
from .zero import (BuildOutcome, ExplorationBudget, build_finite_zero_automaton,
                   build_zero_automaton, growth_probe, is_rigid_prefix,
                   is_zero_word, value_of_word)

__version__ = "0.1.0"

__all__ = [
    "AlphabetInfo", "Automaton", "BetaContext", "BuildOutcome",
    "EmbeddingBound", "EventuallyPeriodicWord", "ExplorationBudget",
    "FNumberOutcome", "FieldElement", "GapStats", "ParryVerdict", "RootClass",
    "SpectrumQuery", "State", "accepts_pair", "build_converter",
    "build_finite_zero_automaton", "build_zero_automaton", "classify_poly",
    "classify_roots", "conjugate_verdicts", "context", "embedding_bounds",
    "enumerate_spectrum", "equal_by_labels", "errors", "expansion_of_one",
    "f_number_probe", "from_json", "greedy_automaton", "greedy_digits",
    "growth_probe", "is_admissible", "is_rigid_prefix", "is_zero_word",
    "min_gap", "negate", "normalization_automaton", "normalize", "parse_poly",
    "prune_non_live", "quasi_greedy", "test_within_bounds", "to_dot",
    "to_json", "trim_coaccessible", "value_of_word", "word_from_text",
    "word_to_text",
]
