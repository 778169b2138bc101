"""Crisp-deterministic fuzzy automata.

A cdfa has a total transition function, one crisp initial state and a fuzzy
terminal map; the value of a word is the terminal weight of the state the
word leads to. Right-language equality of states is a Moore-machine
equivalence, so it is decided here by partition refinement.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Tuple

from .errors import (
    AlphabetMismatch,
    DimensionMismatch,
    InvalidAutomaton,
    NotAccessible,
    UnknownLetter,
    UnknownState,
)
from .fuzzy import FuzzyAutomaton, FuzzyMatrix, FuzzySet, Word, as_word
from .lattice import Lattice, TruthValue, same_lattice


@dataclass(frozen=True)
class Cdfa:
    """(A, delta, a0, tau) with states and letters referenced by index.

    ``table[i][j]`` is the index of the successor of state ``i`` under
    ``alphabet[j]``.
    """

    lattice: Lattice
    states: Tuple[str, ...]
    alphabet: Tuple[str, ...]
    table: Tuple[Tuple[int, ...], ...]
    initial: int
    terminal: FuzzySet
    _index: dict = field(init=False, repr=False, compare=False)
    _letters: dict = field(init=False, repr=False, compare=False)

    __hash__ = None

    def __post_init__(self):
        states, alphabet = tuple(self.states), tuple(self.alphabet)
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "table", table)
        n = len(states)
        if not states:
            raise InvalidAutomaton("empty state set")
        if not alphabet:
            raise InvalidAutomaton("empty alphabet")
        if len(set(states)) != n or len(set(alphabet)) != len(alphabet):
            raise InvalidAutomaton("duplicate state names or letters")
        if len(table) != n or any(len(row) != len(alphabet) for row in table):
            raise InvalidAutomaton("transition table must be total (states x letters)")
        if any(not 0 <= t < n for row in table for t in row):
            raise InvalidAutomaton("transition target out of range")
        if not 0 <= self.initial < n:
            raise InvalidAutomaton("initial state out of range")
        same_lattice(self.lattice, self.terminal.lattice)
        if len(self.terminal) != n:
            raise DimensionMismatch("terminal map length differs from state count")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(states)})
        object.__setattr__(self, "_letters", {x: j for j, x in enumerate(alphabet)})

    @classmethod
    def build(
        cls,
        lattice: Lattice,
        states: Sequence[str],
        alphabet: Sequence[str],
        transitions: Mapping[tuple[str, str], str],
        initial: str,
        terminal: Mapping[str, object] | Sequence,
    ) -> Cdfa:
        """Build from state names. ``terminal`` is a name->value map (missing = 0)
        or a sequence in state order; values may be literals."""
        states, alphabet = tuple(states), tuple(alphabet)
        idx = {s: i for i, s in enumerate(states)}
        try:
            table = tuple(
                tuple(idx[transitions[s, x]] for x in alphabet) for s in states
            )
        except KeyError as e:
            raise InvalidAutomaton(f"missing or bad transition {e.args[0]!r}") from None
        if isinstance(terminal, Mapping):
            unknown = set(terminal) - set(states)
            if unknown:
                raise UnknownState(f"unknown states {sorted(unknown)}")
            weights = [terminal.get(s, lattice.bottom) for s in states]
        else:
            weights = list(terminal)
        if initial not in idx:
            raise UnknownState(f"unknown initial state {initial!r}")
        return cls(lattice, states, alphabet, table, idx[initial],
                   FuzzySet.of(lattice, weights))

    def __len__(self):
        return len(self.states)

    def state_index(self, state: str) -> int:
        try:
            return self._index[state]
        except KeyError:
            raise UnknownState(f"unknown state {state!r}") from None

    def letter_indices(self, u: Iterable[str]) -> tuple[int, ...]:
        try:
            return tuple(self._letters[x] for x in as_word(u))
        except KeyError as e:
            raise UnknownLetter(e.args[0], self.alphabet) from None

    def step(self, state: str, letter: str) -> str:
        i = self.state_index(state)
        (j,) = self.letter_indices((letter,))
        return self.states[self.table[i][j]]

    def transitions(self) -> dict[tuple[str, str], str]:
        return {
            (s, x): self.states[self.table[i][j]]
            for i, s in enumerate(self.states)
            for j, x in enumerate(self.alphabet)
        }

    def renamed(self, names: Sequence[str]) -> Cdfa:
        return Cdfa(self.lattice, tuple(names), self.alphabet, self.table,
                    self.initial, self.terminal)


def _walk(c: Cdfa, start: int, letters: Iterable[int]) -> int:
    s = start
    for j in letters:
        s = c.table[s][j]
    return s


def run(c: Cdfa, u: Iterable[str]) -> str:
    """delta*(a0, u)."""
    return c.states[_walk(c, c.initial, c.letter_indices(u))]


def evaluate_cdfa(c: Cdfa, u: Iterable[str]) -> TruthValue:
    return c.terminal[_walk(c, c.initial, c.letter_indices(u))]


def right_language_value_cdfa(c: Cdfa, state: str, u: Iterable[str]) -> TruthValue:
    """tau_a(u) = tau(delta*(a, u))."""
    return c.terminal[_walk(c, c.state_index(state), c.letter_indices(u))]


def _reachable(c: Cdfa) -> list[int]:
    seen = {c.initial}
    order = [c.initial]
    queue = deque(order)
    while queue:
        s = queue.popleft()
        for t in c.table[s]:
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def is_accessible(c: Cdfa) -> bool:
    return len(_reachable(c)) == len(c)


def _require_accessible(c: Cdfa) -> None:
    reach = set(_reachable(c))
    if len(reach) != len(c):
        raise NotAccessible(s for i, s in enumerate(c.states) if i not in reach)


def _restrict(c: Cdfa, keep: Sequence[int]) -> Cdfa:
    new = {old: k for k, old in enumerate(keep)}
    return Cdfa(
        c.lattice,
        tuple(c.states[i] for i in keep),
        c.alphabet,
        tuple(tuple(new[t] for t in c.table[i]) for i in keep),
        new[c.initial],
        FuzzySet(c.lattice, tuple(c.terminal[i] for i in keep)),
    )


def accessible_part(c: Cdfa) -> Cdfa:
    """Drop unreachable states, keeping the declaration order of the rest."""
    reach = set(_reachable(c))
    if len(reach) == len(c):
        return c
    return _restrict(c, [i for i in range(len(c)) if i in reach])


@dataclass(frozen=True)
class StatePartition:
    """Disjoint blocks of state names, each in declaration order; blocks are
    ordered by their first member."""

    blocks: Tuple[Tuple[str, ...], ...]

    def __len__(self):
        return len(self.blocks)

    @property
    def is_discrete(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def block_of(self, state: str) -> Tuple[str, ...]:
        for b in self.blocks:
            if state in b:
                return b
        raise UnknownState(f"unknown state {state!r}")

    def as_sets(self) -> set[frozenset[str]]:
        return {frozenset(b) for b in self.blocks}


def _refine(c: Cdfa) -> list[int]:
    """Block id per state index; states share an id iff their right languages agree."""
    ids: dict = {}
    block = [ids.setdefault(v, len(ids)) for v in c.terminal.values]
    count = len(ids)
    while True:
        ids = {}
        new = [
            ids.setdefault((block[s], tuple(block[t] for t in c.table[s])), len(ids))
            for s in range(len(c))
        ]
        if len(ids) == count:
            return new
        block, count = new, len(ids)


def equivalent_states(c: Cdfa) -> StatePartition:
    block = _refine(c)
    groups: dict[int, list[str]] = {}
    for s, b in zip(c.states, block):
        groups.setdefault(b, []).append(s)
    return StatePartition(tuple(tuple(g) for g in groups.values()))


def right_language_automaton(c: Cdfa) -> Cdfa:
    """Quotient of an accessible cdfa by right-language equality.

    Its states are the distinct right languages, which correspond one to one
    with the left derivatives of the recognized language, so the result is
    the minimal cdfa for it. Classes are named ``c<i>`` in BFS order.
    """
    _require_accessible(c)
    block = _refine(c)
    rep: dict[int, int] = {}
    order: list[int] = []
    queue = deque([c.initial])
    rep[block[c.initial]] = 0
    order.append(c.initial)
    while queue:
        s = queue.popleft()
        for t in c.table[s]:
            if block[t] not in rep:
                rep[block[t]] = len(order)
                order.append(t)
                queue.append(t)
    return Cdfa(
        c.lattice,
        tuple(f"c{i}" for i in range(len(order))),
        c.alphabet,
        tuple(tuple(rep[block[t]] for t in c.table[s]) for s in order),
        0,
        FuzzySet(c.lattice, tuple(c.terminal[s] for s in order)),
    )


def _check_comparable(c1: Cdfa, c2: Cdfa) -> None:
    same_lattice(c1.lattice, c2.lattice)
    if c1.alphabet != c2.alphabet:
        raise AlphabetMismatch(
            f"alphabets differ: {' '.join(c1.alphabet)} vs {' '.join(c2.alphabet)}"
        )


def language_witness(c1: Cdfa, c2: Cdfa) -> Word | None:
    """A shortest word on which the two cdfas disagree, or None if they are
    equivalent. BFS over reachable pairs of the product, letters in order."""
    _check_comparable(c1, c2)
    start = (c1.initial, c2.initial)
    parent: dict = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, q = pair
        if c1.terminal[p] != c2.terminal[q]:
            word = []
            while parent[pair] is not None:
                pair, j = parent[pair]
                word.append(c1.alphabet[j])
            return tuple(reversed(word))
        for j in range(len(c1.alphabet)):
            nxt = (c1.table[p][j], c2.table[q][j])
            if nxt not in parent:
                parent[nxt] = (pair, j)
                queue.append(nxt)
    return None


def language_equal(c1: Cdfa, c2: Cdfa) -> bool:
    return language_witness(c1, c2) is None


def find_isomorphism(c1: Cdfa, c2: Cdfa) -> dict[str, str] | None:
    """The state bijection c1 -> c2 if the accessible cdfas are isomorphic.

    Accessibility makes the candidate map unique: it is forced by
    phi(a0) = a0' and phi(delta(a, x)) = delta'(phi(a), x).
    """
    _require_accessible(c1)
    _require_accessible(c2)
    if (c1.lattice != c2.lattice or c1.alphabet != c2.alphabet
            or len(c1) != len(c2)):
        return None
    phi = {c1.initial: c2.initial}
    used = {c2.initial}
    queue = deque([c1.initial])
    while queue:
        s = queue.popleft()
        if c1.terminal[s] != c2.terminal[phi[s]]:
            return None
        for t, t2 in zip(c1.table[s], c2.table[phi[s]]):
            if t in phi:
                if phi[t] != t2:
                    return None
            else:
                if t2 in used:
                    return None
                phi[t] = t2
                used.add(t2)
                queue.append(t)
    return {c1.states[s]: c2.states[t] for s, t in phi.items()}


def isomorphic(c1: Cdfa, c2: Cdfa) -> bool:
    return find_isomorphism(c1, c2) is not None


def to_fuzzy(c: Cdfa) -> FuzzyAutomaton:
    """View a cdfa as a fuzzy automaton with crisp sigma and 0/1 transitions."""
    lat = c.lattice
    one, zero = lat.top, lat.bottom
    n = len(c)
    delta = {}
    for j, x in enumerate(c.alphabet):
        delta[x] = FuzzyMatrix(lat, tuple(
            tuple(one if c.table[i][j] == k else zero for k in range(n))
            for i in range(n)
        ))
    sigma = FuzzySet(lat, tuple(one if i == c.initial else zero for i in range(n)))
    return FuzzyAutomaton(lat, c.states, c.alphabet, delta, sigma, c.terminal)
