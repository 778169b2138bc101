"""Fuzzy sets, fuzzy relations and nondeterministic fuzzy automata."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Tuple

from .errors import (
    DimensionMismatch,
    InvalidAutomaton,
    UnknownLetter,
    UnknownState,
)
from .lattice import Lattice, TruthValue, same_lattice

Word = Tuple[str, ...]


def as_word(u: Iterable[str]) -> Word:
    """Normalize a word. A plain string is read as a sequence of 1-char letters."""
    return tuple(u)


def reverse_word(u: Iterable[str]) -> Word:
    return tuple(u)[::-1]


@dataclass(frozen=True)
class FuzzySet:
    lattice: Lattice
    values: Tuple[TruthValue, ...]

    def __post_init__(self):
        values = tuple(self.values)
        for v in values:
            self.lattice.check(v)
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, lattice: Lattice, values: Iterable) -> FuzzySet:
        return cls(lattice, tuple(lattice.value(v) for v in values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.values) if v != self.lattice.bottom)


@dataclass(frozen=True)
class FuzzyMatrix:
    lattice: Lattice
    rows: Tuple[Tuple[TruthValue, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch("ragged fuzzy matrix")
        for r in rows:
            for v in r:
                self.lattice.check(v)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, lattice: Lattice, rows: Iterable[Iterable]) -> FuzzyMatrix:
        return cls(lattice, tuple(tuple(lattice.value(v) for v in r) for r in rows))

    @classmethod
    def identity(cls, lattice: Lattice, n: int) -> FuzzyMatrix:
        one, zero = lattice.top, lattice.bottom
        return cls(lattice, tuple(
            tuple(one if i == j else zero for j in range(n)) for i in range(n)
        ))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> FuzzyMatrix:
        return FuzzyMatrix(self.lattice, tuple(zip(*self.rows)))


# Unchecked kernels on raw tuples; the public functions below validate.

def _vec_mat(lat: Lattice, f: Sequence, rows: Sequence[Sequence]) -> tuple:
    t = lat._tensor
    bottom = lat.bottom
    out = [bottom] * (len(rows[0]) if rows else 0)
    for fa, row in zip(f, rows):
        if fa == bottom:
            continue
        for j, v in enumerate(row):
            p = t(fa, v)
            if p > out[j]:
                out[j] = p
    return tuple(out)


def _mat_vec(lat: Lattice, rows: Sequence[Sequence], g: Sequence) -> tuple:
    return tuple(_dot(lat, row, g) for row in rows)


def _dot(lat: Lattice, f: Sequence, g: Sequence) -> TruthValue:
    t = lat._tensor
    best = lat.bottom
    for a, b in zip(f, g):
        p = t(a, b)
        if p > best:
            best = p
    return best


def _mat_mat(lat: Lattice, phi: Sequence[Sequence], psi: Sequence[Sequence]) -> tuple:
    return tuple(_vec_mat(lat, row, psi) for row in phi)


def compose_rel_rel(phi: FuzzyMatrix, psi: FuzzyMatrix) -> FuzzyMatrix:
    """(phi o psi)(a, c) = sup_b phi(a, b) (x) psi(b, c)."""
    lat = same_lattice(phi.lattice, psi.lattice)
    if phi.shape[1] != psi.shape[0]:
        raise DimensionMismatch(f"cannot compose {phi.shape} with {psi.shape}")
    if not psi.rows:
        return FuzzyMatrix(lat, tuple(() for _ in phi.rows))
    return FuzzyMatrix(lat, _mat_mat(lat, phi.rows, psi.rows))


def compose_set_rel(f: FuzzySet, phi: FuzzyMatrix) -> FuzzySet:
    lat = same_lattice(f.lattice, phi.lattice)
    if len(f) != phi.shape[0]:
        raise DimensionMismatch(f"set of size {len(f)} vs relation {phi.shape}")
    return FuzzySet(lat, _vec_mat(lat, f.values, phi.rows))


def compose_rel_set(phi: FuzzyMatrix, g: FuzzySet) -> FuzzySet:
    lat = same_lattice(phi.lattice, g.lattice)
    if phi.shape[1] != len(g):
        raise DimensionMismatch(f"relation {phi.shape} vs set of size {len(g)}")
    return FuzzySet(lat, _mat_vec(lat, phi.rows, g.values))


def scalar_product(f: FuzzySet, g: FuzzySet) -> TruthValue:
    lat = same_lattice(f.lattice, g.lattice)
    if len(f) != len(g):
        raise DimensionMismatch(f"sets of sizes {len(f)} and {len(g)}")
    return _dot(lat, f.values, g.values)


@dataclass(frozen=True, eq=True)
class FuzzyAutomaton:
    """A = (A, delta, sigma, tau) over a finite alphabet.

    States and letters keep their declaration order, which fixes every
    iteration order downstream.
    """

    lattice: Lattice
    states: Tuple[str, ...]
    alphabet: Tuple[str, ...]
    delta: Mapping[str, FuzzyMatrix]
    sigma: FuzzySet
    tau: FuzzySet
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    __hash__ = None

    def __post_init__(self):
        states, alphabet = tuple(self.states), tuple(self.alphabet)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "alphabet", alphabet)
        if not states:
            raise InvalidAutomaton("empty state set")
        if not alphabet:
            raise InvalidAutomaton("empty alphabet")
        if len(set(states)) != len(states):
            raise InvalidAutomaton("duplicate state names")
        if len(set(alphabet)) != len(alphabet):
            raise InvalidAutomaton("duplicate letters")
        if set(self.delta) != set(alphabet):
            raise InvalidAutomaton("delta must have exactly one matrix per letter")
        n = len(states)
        delta = {x: self.delta[x] for x in alphabet}
        for x, m in delta.items():
            same_lattice(self.lattice, m.lattice)
            if m.shape != (n, n):
                raise DimensionMismatch(f"delta[{x}] has shape {m.shape}, expected {(n, n)}")
        for name, fs in (("sigma", self.sigma), ("tau", self.tau)):
            same_lattice(self.lattice, fs.lattice)
            if len(fs) != n:
                raise DimensionMismatch(f"{name} has length {len(fs)}, expected {n}")
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(states)})

    @classmethod
    def build(cls, lattice: Lattice, states, alphabet, delta, sigma, tau) -> FuzzyAutomaton:
        """Convenience constructor from plain nested lists / literals."""
        return cls(
            lattice, tuple(states), tuple(alphabet),
            {x: FuzzyMatrix.of(lattice, m) for x, m in delta.items()},
            FuzzySet.of(lattice, sigma),
            FuzzySet.of(lattice, tau),
        )

    def __len__(self):
        return len(self.states)

    def state_index(self, state: str) -> int:
        try:
            return self._index[state]
        except KeyError:
            raise UnknownState(f"unknown state {state!r}") from None

    def check_word(self, u: Iterable[str]) -> Word:
        u = as_word(u)
        for x in u:
            if x not in self.delta:
                raise UnknownLetter(x, self.alphabet)
        return u


def delta_word(a: FuzzyAutomaton, u: Iterable[str]) -> FuzzyMatrix:
    """delta_eps is the identity, delta_ux = delta_u o delta_x."""
    u = a.check_word(u)
    rows = FuzzyMatrix.identity(a.lattice, len(a)).rows
    for x in u:
        rows = _mat_mat(a.lattice, rows, a.delta[x].rows)
    return FuzzyMatrix(a.lattice, rows)


def _forward(a: FuzzyAutomaton, u: Word) -> tuple:
    vec = a.sigma.values
    for x in u:
        vec = _vec_mat(a.lattice, vec, a.delta[x].rows)
    return vec


def _backward(a: FuzzyAutomaton, u: Word) -> tuple:
    vec = a.tau.values
    for x in reversed(u):
        vec = _mat_vec(a.lattice, a.delta[x].rows, vec)
    return vec


def forward_profile(a: FuzzyAutomaton, u: Iterable[str]) -> FuzzySet:
    """sigma_u = sigma o delta_u."""
    return FuzzySet(a.lattice, _forward(a, a.check_word(u)))


def backward_profile(a: FuzzyAutomaton, u: Iterable[str]) -> FuzzySet:
    """tau_u = delta_u o tau."""
    return FuzzySet(a.lattice, _backward(a, a.check_word(u)))


def evaluate(a: FuzzyAutomaton, u: Iterable[str]) -> TruthValue:
    """Degree to which ``a`` accepts ``u``: sigma o delta_u o tau."""
    u = a.check_word(u)
    return _dot(a.lattice, _forward(a, u), a.tau.values)


def reverse(a: FuzzyAutomaton) -> FuzzyAutomaton:
    """Swap sigma and tau and transpose every transition matrix."""
    return FuzzyAutomaton(
        a.lattice, a.states, a.alphabet,
        {x: m.transpose() for x, m in a.delta.items()},
        a.tau, a.sigma,
    )


def right_language_value(a: FuzzyAutomaton, state: str, u: Iterable[str]) -> TruthValue:
    """Value on ``u`` of the language recognized from the crisp initial ``state``."""
    i = a.state_index(state)
    return _backward(a, a.check_word(u))[i]


def left_language_value(a: FuzzyAutomaton, state: str, u: Iterable[str]) -> TruthValue:
    """Value on ``u`` of the language recognized with ``state`` as sole crisp final state."""
    i = a.state_index(state)
    return _forward(a, a.check_word(u))[i]
