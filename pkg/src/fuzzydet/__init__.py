"""Determinization and minimization of fuzzy automata over residuated lattices."""

from .cdfa import (
    Cdfa,
    StatePartition,
    accessible_part,
    equivalent_states,
    evaluate_cdfa,
    find_isomorphism,
    is_accessible,
    isomorphic,
    language_equal,
    language_witness,
    right_language_automaton,
    right_language_value_cdfa,
    run,
    to_fuzzy,
)
from .determinize import (
    ConstructionConfig,
    ConstructionStats,
    Determinized,
    brzozowski,
    minimize_cdfa,
    nerode,
    reverse_minimal,
    reverse_nerode,
    subsemiring_closure,
)
from .errors import *  # noqa: F401,F403
from .fuzzy import (
    FuzzyAutomaton,
    FuzzyMatrix,
    FuzzySet,
    backward_profile,
    compose_rel_rel,
    compose_rel_set,
    compose_set_rel,
    delta_word,
    evaluate,
    forward_profile,
    left_language_value,
    reverse,
    reverse_word,
    right_language_value,
    scalar_product,
)
from .lattice import Boolean, Chain, Godel, Goguen, Lattice, Lukasiewicz, make_lattice
from .textio import export_dot, format_word, parse_automaton, parse_word, serialize_automaton

__version__ = "0.1.0"
