"""Nerode, reverse Nerode and double-reversal (Brzozowski) constructions.

The Nerode automaton of A has the forward profiles sigma_u = sigma o delta_u
as states; it is built by expanding a transition tree breadth first, letters
in declaration order, and discarding every profile computed before. The
reverse Nerode automaton is the Nerode automaton of the reversed machine.
Applying the reverse construction twice yields a minimal cdfa, even in cases
where the Nerode automaton itself is infinite.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Tuple

from .cdfa import Cdfa, accessible_part, to_fuzzy
from .errors import CapExceeded, StateCapExceeded
from .fuzzy import FuzzyAutomaton, FuzzySet, _dot, _vec_mat, reverse
from .lattice import TruthValue

DEFAULT_STATE_CAP = 10_000
DEFAULT_CLOSURE_CAP = 512


@dataclass(frozen=True)
class ConstructionConfig:
    state_cap: int = DEFAULT_STATE_CAP
    collect_stats: bool = False
    # saturation is quadratic in the closure size, so it gets its own bound
    closure_cap: int = DEFAULT_CLOSURE_CAP

    def __post_init__(self):
        for name in ("state_cap", "closure_cap"):
            v = getattr(self, name)
            if type(v) is not int or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")


@dataclass(frozen=True)
class ConstructionStats:
    states_discovered: int
    dedup_hits: int
    elapsed: float
    closure_size: int | None = None
    round_states: Tuple[int, ...] = ()

    def format_line(self) -> str:
        """Single ``key=value`` line; ``closure_size=over_cap`` if saturation hit the cap."""
        parts = [
            f"states_discovered={self.states_discovered}",
            f"dedup_hits={self.dedup_hits}",
        ]
        if self.round_states:
            parts.append("round_states=" + ",".join(map(str, self.round_states)))
        if self.closure_size is not None:
            parts.append(
                f"closure_size={self.closure_size if self.closure_size >= 0 else 'over_cap'}"
            )
        parts.append(f"elapsed_ms={self.elapsed * 1000:.3f}")
        return " ".join(parts)


class Determinized(NamedTuple):
    cdfa: Cdfa
    stats: ConstructionStats
    profiles: Tuple[FuzzySet, ...]
    """The fuzzy set each state stands for, in state order."""


def _closure_size(a: FuzzyAutomaton, cap: int) -> int:
    try:
        return len(subsemiring_closure(a, cap))
    except CapExceeded:
        return -1


def nerode(a: FuzzyAutomaton, config: ConstructionConfig | None = None) -> Determinized:
    """Nerode automaton of ``a``: states sigma_u, successors sigma_u o delta_x,
    terminal weights sigma_u o tau. States are named ``q<i>`` by discovery.

    Raises StateCapExceeded rather than returning a truncated machine.
    """
    config = config or ConstructionConfig()
    start = time.perf_counter()
    lat = a.lattice
    matrices = [a.delta[x].rows for x in a.alphabet]
    tau = a.tau.values

    index = {a.sigma.values: 0}
    profiles = [a.sigma.values]
    table: list[tuple[int, ...]] = []
    hits = 0
    for vec in profiles:  # grows while iterating: BFS over the transition tree
        row = []
        for rows in matrices:
            succ = _vec_mat(lat, vec, rows)
            k = index.get(succ)
            if k is None:
                if len(profiles) >= config.state_cap:
                    frontier = [FuzzySet(lat, p) for p in profiles[len(table):]]
                    frontier.append(FuzzySet(lat, succ))
                    raise StateCapExceeded(config.state_cap, len(profiles), frontier)
                k = len(profiles)
                index[succ] = k
                profiles.append(succ)
            else:
                hits += 1
            row.append(k)
        table.append(tuple(row))

    cdfa = Cdfa(
        lat,
        tuple(f"q{i}" for i in range(len(profiles))),
        a.alphabet,
        tuple(table),
        0,
        FuzzySet(lat, tuple(_dot(lat, p, tau) for p in profiles)),
    )
    stats = ConstructionStats(
        states_discovered=len(profiles),
        dedup_hits=hits,
        elapsed=time.perf_counter() - start,
        closure_size=_closure_size(a, config.closure_cap) if config.collect_stats else None,
    )
    return Determinized(cdfa, stats, tuple(FuzzySet(lat, p) for p in profiles))


def reverse_nerode(a: FuzzyAutomaton, config: ConstructionConfig | None = None) -> Determinized:
    """Reverse Nerode automaton: states tau_u = delta_u o tau, successor of
    tau_u under x is delta_x o tau_u, terminal weight tau_u o sigma. It
    recognizes the reverse of the language of ``a``."""
    return nerode(reverse(a), config)


def brzozowski(a: FuzzyAutomaton, config: ConstructionConfig | None = None) -> Determinized:
    """Reverse Nerode construction applied twice: a minimal equivalent cdfa."""
    config = config or ConstructionConfig()
    start = time.perf_counter()
    rounds = []
    current = a
    for rnd in (1, 2):
        try:
            result = reverse_nerode(current, config)
        except StateCapExceeded as e:
            raise StateCapExceeded(e.cap, e.states_discovered, e.frontier, round=rnd) from None
        rounds.append(result)
        current = to_fuzzy(result.cdfa)
    first, second = rounds
    stats = ConstructionStats(
        states_discovered=len(second.cdfa),
        dedup_hits=first.stats.dedup_hits + second.stats.dedup_hits,
        elapsed=time.perf_counter() - start,
        closure_size=first.stats.closure_size,
        round_states=(len(first.cdfa), len(second.cdfa)),
    )
    return Determinized(second.cdfa, stats, second.profiles)


def reverse_minimal(c: Cdfa, config: ConstructionConfig | None = None) -> Cdfa:
    """Minimal cdfa for the reverse of the language of ``c`` (one reverse
    Nerode pass over its accessible part)."""
    return reverse_nerode(to_fuzzy(accessible_part(c)), config).cdfa


def minimize_cdfa(c: Cdfa, config: ConstructionConfig | None = None) -> Cdfa:
    """Minimal cdfa equivalent to ``c`` by double reversal of its accessible part."""
    acc = accessible_part(c)
    result = brzozowski(to_fuzzy(acc), config).cdfa
    assert len(result) <= len(acc)
    return result


def subsemiring_closure(a: FuzzyAutomaton, cap: int) -> frozenset[TruthValue]:
    """Least set holding 0, 1 and every value of delta, sigma, tau, closed
    under join and tensor. Raises CapExceeded once it grows past ``cap``.

    When it is finite with k elements, the Nerode automaton has at most
    k ** n states (n = number of states of ``a``).
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    lat = a.lattice
    seeds = {lat.bottom, lat.top, *a.sigma.values, *a.tau.values}
    for m in a.delta.values():
        for row in m.rows:
            seeds.update(row)
    if len(seeds) > cap:
        raise CapExceeded(cap, f"closure exceeds {cap} elements")
    closed = set(seeds)
    queue = deque(sorted(seeds))
    # Joins of chain elements are already members; only tensor can add values.
    while queue:
        v = queue.popleft()
        for w in list(closed):
            p = lat._tensor(v, w)
            if p not in closed:
                closed.add(p)
                if len(closed) > cap:
                    raise CapExceeded(cap, f"closure exceeds {cap} elements")
                queue.append(p)
    return frozenset(closed)
