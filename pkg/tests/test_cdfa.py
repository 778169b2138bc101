import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

import randgen
from fuzzydet import (
    Cdfa,
    FuzzySet,
    accessible_part,
    equivalent_states,
    evaluate,
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
from fuzzydet.errors import AlphabetMismatch, InvalidAutomaton, LatticeMismatch, NotAccessible
from fuzzydet.lattice import Chain, Godel, Goguen

G = Goguen()


def fig2_variant(**changes):
    fields = dict(
        states=["b0", "b1", "b2"],
        transitions={("b0", "x"): "b1", ("b1", "x"): "b2", ("b2", "x"): "b2"},
        terminal={"b1": "0.5", "b2": 1},
    )
    fields.update(changes)
    return Cdfa.build(G, fields["states"], ["x"], fields["transitions"], "b0", fields["terminal"])


def with_duplicate():
    return fig2_variant(
        states=["b0", "b1", "b2", "b3"],
        transitions={("b0", "x"): "b1", ("b1", "x"): "b2",
                     ("b2", "x"): "b3", ("b3", "x"): "b2"},
        terminal={"b1": "0.5", "b2": 1, "b3": 1},
    )


def test_fixtures_match_builder(fig2, fig2_dup):
    assert fig2 == fig2_variant()
    assert fig2_dup == with_duplicate()


def test_run(fig2):
    assert run(fig2, "") == "b0"
    assert run(fig2, "xx") == "b2"
    assert run(fig2, "xxxx") == "b2"


def test_evaluate_cdfa(fig2):
    assert evaluate_cdfa(fig2, "") == 0
    assert evaluate_cdfa(fig2, "x") == F(1, 2)
    for n in range(2, 10):
        assert evaluate_cdfa(fig2, "x" * n) == 1


def test_build_requires_totality():
    with pytest.raises(InvalidAutomaton):
        fig2_variant(transitions={("b0", "x"): "b1", ("b1", "x"): "b2"})


def test_accessible_part(fig2):
    assert accessible_part(fig2) is fig2
    c = fig2_variant(
        states=["b0", "b1", "junk", "b2"],
        transitions={("b0", "x"): "b1", ("b1", "x"): "b2", ("b2", "x"): "b2",
                     ("junk", "x"): "b0"},
    )
    assert not is_accessible(c)
    trimmed = accessible_part(c)
    assert trimmed.states == ("b0", "b1", "b2")
    assert trimmed == fig2


def test_equivalent_states(fig2):
    assert equivalent_states(fig2).blocks == (("b0",), ("b1",), ("b2",))
    p = equivalent_states(with_duplicate())
    assert p.blocks == (("b0",), ("b1",), ("b2", "b3"))
    assert not p.is_discrete and p.block_of("b3") == ("b2", "b3")


def test_right_language_automaton(fig2):
    assert isomorphic(right_language_automaton(fig2), fig2)
    r = right_language_automaton(with_duplicate())
    assert len(r) == 3 and r.states == ("c0", "c1", "c2")
    assert isomorphic(r, fig2)
    with pytest.raises(NotAccessible):
        right_language_automaton(fig2_variant(
            states=["b0", "b1", "b2", "z"],
            transitions={("b0", "x"): "b1", ("b1", "x"): "b2", ("b2", "x"): "b2",
                         ("z", "x"): "z"},
        ))


def test_language_equal(fig2):
    assert language_equal(fig2, fig2)
    other = fig2_variant(terminal={"b1": "0.25", "b2": 1})
    assert language_witness(fig2, other) == ("x",)
    assert not language_equal(fig2, other)
    assert language_equal(fig2, with_duplicate())
    with pytest.raises(AlphabetMismatch):
        language_equal(fig2, Cdfa.build(G, ["s"], ["y"], {("s", "y"): "s"}, "s", {}))
    with pytest.raises(LatticeMismatch):
        language_equal(fig2, Cdfa.build(Godel(), ["s"], ["x"], {("s", "x"): "s"}, "s", {}))


def test_isomorphic(fig2):
    renamed = fig2.renamed(["u", "v", "w"])
    assert find_isomorphism(fig2, renamed) == {"b0": "u", "b1": "v", "b2": "w"}
    two = Cdfa.build(G, ["s", "t"], ["x"], {("s", "x"): "t", ("t", "x"): "t"}, "s", {"t": 1})
    assert not isomorphic(fig2, two)
    assert not isomorphic(fig2, fig2_variant(terminal={"b1": "0.25", "b2": 1}))
    with pytest.raises(NotAccessible):
        isomorphic(fig2, Cdfa.build(G, ["s", "t"], ["x"],
                                    {("s", "x"): "s", ("t", "x"): "t"}, "s", {}))


def test_to_fuzzy(fig2):
    a = to_fuzzy(fig2)
    assert a.sigma == FuzzySet.of(G, [1, 0, 0])
    assert evaluate(a, "x") == F(1, 2)


# -- properties --------------------------------------------------------------

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def _random_cdfa(seed, accessible=True):
    rng = random.Random(seed)
    lat = rng.choice([Chain(rng.randint(2, 5)), Goguen()])
    alphabet = ["x", "y"][: rng.randint(1, 2)]
    c = randgen.cdfa(rng, lat, rng.randint(1, 5), alphabet)
    return rng, accessible_part(c) if accessible else c


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_accessible_part_preserves_language(seed):
    _, c = _random_cdfa(seed, accessible=False)
    acc = accessible_part(c)
    assert is_accessible(acc)
    assert language_equal(c, acc)
    for u in randgen.words(c.alphabet, 5):
        assert evaluate_cdfa(acc, u) == evaluate_cdfa(c, u)


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_to_fuzzy_preserves_language(seed):
    _, c = _random_cdfa(seed, accessible=False)
    a = to_fuzzy(c)
    for u in randgen.words(c.alphabet, 5):
        assert evaluate(a, u) == evaluate_cdfa(c, u)


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_right_languages_shift_by_prefix(seed):
    _, c = _random_cdfa(seed)
    short = list(randgen.words(c.alphabet, 3))
    for s in c.states:
        for u in short:
            target = s
            for x in u:
                target = c.step(target, x)
            for v in short:
                if len(u) + len(v) <= 6:
                    assert right_language_value_cdfa(c, target, v) == \
                        right_language_value_cdfa(c, s, u + v)


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_partition_matches_bounded_word_oracle(seed):
    _, c = _random_cdfa(seed, accessible=False)
    probe = list(randgen.words(c.alphabet, len(c)))
    sig = {s: tuple(right_language_value_cdfa(c, s, v) for v in probe) for s in c.states}
    expected = {}
    for s in c.states:
        expected.setdefault(sig[s], set()).add(s)
    assert equivalent_states(c).as_sets() == {frozenset(b) for b in expected.values()}


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_right_language_automaton_properties(seed):
    _, c = _random_cdfa(seed)
    r = right_language_automaton(c)
    assert equivalent_states(r).is_discrete
    assert isomorphic(right_language_automaton(r), r)
    for u in randgen.words(c.alphabet, 8):
        assert evaluate_cdfa(r, u) == evaluate_cdfa(c, u)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_states_correspond_to_left_derivatives(seed):
    _, c = _random_cdfa(seed)
    r = right_language_automaton(c)
    n = len(c)
    probe = list(randgen.words(c.alphabet, n))
    derivative_to_state = {}
    for u in randgen.words(c.alphabet, n):
        derivative = tuple(evaluate_cdfa(c, u + v) for v in probe)
        state = run(r, u)
        assert derivative_to_state.setdefault(derivative, state) == state
    assert sorted(derivative_to_state.values()) == sorted(r.states)


def _pad(rng, c):
    """An equivalent cdfa with split duplicates and unreachable junk."""
    n = len(c)
    extra = rng.randint(0, 3)
    copies = [rng.randrange(n) for _ in range(extra)]
    # state n + k duplicates state copies[k]
    original = list(range(n)) + copies
    pick = lambda s: rng.choice([i for i, o in enumerate(original) if o == s])
    table = [tuple(pick(t) for t in c.table[original[i]]) for i in range(n + extra)]
    terminal = [c.terminal[original[i]] for i in range(n + extra)]
    junk = rng.randint(0, 2)
    for _ in range(junk):
        table.append(tuple(rng.randrange(n + extra) for _ in c.alphabet))
        terminal.append(rng.choice(c.terminal.values))
    states = [f"d{i}" for i in range(len(table))]
    return Cdfa(c.lattice, states, c.alphabet, table, c.initial, FuzzySet(c.lattice, terminal))


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_discrete_accessible_machines_are_smallest(seed):
    rng, c = _random_cdfa(seed)
    m = right_language_automaton(c)
    for _ in range(5):
        d = _pad(rng, m)
        assert language_equal(m, d)
        assert len(m) <= len(d)
        assert len(right_language_automaton(accessible_part(d))) == len(m)


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_image_within_terminal_values(seed):
    _, c = _random_cdfa(seed, accessible=False)
    image = set(c.terminal.values)
    for u in randgen.words(c.alphabet, 5):
        assert evaluate_cdfa(c, u) in image
