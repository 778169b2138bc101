"""Line-oriented text format for automata, and Graphviz export.

Example::

    # Example automaton over the product structure
    lattice goguen
    kind fuzzy
    states a0 a1 a2
    alphabet x
    initial a0:1
    final a1:1
    trans a0 x a1 0.5
    trans a0 x a2 1

For ``kind cdfa`` the initial line names a single state (``initial b0``) and
transitions carry no weight (``trans b0 x b1``); every state/letter pair must
have exactly one transition. Omitted weights are 0. Directives may appear in
any order, ``#`` starts a comment.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Union

from .cdfa import Cdfa
from .errors import (
    DuplicateDeclaration,
    DuplicateTransition,
    EmptyAlphabet,
    EmptyStateSet,
    LatticeError,
    NonTotalCdfa,
    OutOfRange,
    ParseError,
    UndeclaredLetter,
    UndeclaredState,
    UnknownLattice,
    UnknownLetter,
    ValueOutOfRange,
)
from .fuzzy import FuzzyAutomaton, FuzzyMatrix, FuzzySet, Word
from .lattice import KINDS, Lattice, make_lattice

Automaton = Union[FuzzyAutomaton, Cdfa]

_TOKEN = re.compile(r"\S+")
_DIRECTIVES = ("lattice", "kind", "states", "alphabet", "initial", "final", "trans")


class _Tok(str):
    """A token remembering its 1-based line and column."""

    line: int
    col: int

    def __new__(cls, text, line, col):
        tok = super().__new__(cls, text)
        tok.line, tok.col = line, col
        return tok


class _Parser:
    def __init__(self, text: str, source: str | None):
        self.source = source
        self.lines: dict[str, list[list[_Tok]]] = {d: [] for d in _DIRECTIVES}
        for lineno, raw in enumerate(text.splitlines(), 1):
            body = raw.split("#", 1)[0]
            toks = [_Tok(m.group(), lineno, m.start() + 1) for m in _TOKEN.finditer(body)]
            if not toks:
                continue
            head = toks[0]
            if head not in self.lines:
                self.fail(ParseError, f"unknown directive {head!r}", head)
            self.lines[head].append(toks)

    def fail(self, cls, message, tok=None):
        line = tok.line if tok is not None else None
        col = tok.col if tok is not None else None
        raise cls(message, line, col, self.source)

    def single(self, directive, required=True):
        found = self.lines[directive]
        if len(found) > 1:
            self.fail(DuplicateDeclaration, f"more than one {directive!r} line", found[1][0])
        if not found:
            if required:
                raise ParseError(f"missing {directive!r} line", source=self.source)
            return None
        return found[0]

    def parse(self) -> Automaton:
        self.lattice = self.parse_lattice()
        kind_line = self.single("kind", required=False)
        kind = "fuzzy"
        if kind_line is not None:
            if len(kind_line) != 2 or kind_line[1] not in ("fuzzy", "cdfa"):
                self.fail(ParseError, "expected 'kind fuzzy' or 'kind cdfa'", kind_line[0])
            kind = str(kind_line[1])
        self.states = self.parse_names("states", EmptyStateSet)
        self.alphabet = self.parse_names("alphabet", EmptyAlphabet)
        self.state_idx = {s: i for i, s in enumerate(self.states)}
        self.letter_idx = {x: j for j, x in enumerate(self.alphabet)}
        return self.parse_cdfa() if kind == "cdfa" else self.parse_fuzzy()

    def parse_lattice(self) -> Lattice:
        toks = self.single("lattice")
        args = toks[1:]
        if not args:
            self.fail(UnknownLattice, "lattice kind missing", toks[0])
        kind = args[0].lower()
        if kind not in KINDS:
            self.fail(UnknownLattice, f"unknown lattice {args[0]!r}", args[0])
        if kind == "chain":
            if len(args) != 2 or not args[1].isdigit() or int(args[1]) < 2:
                self.fail(UnknownLattice, "chain lattice needs an element count >= 2",
                          args[-1])
            return make_lattice("chain", int(args[1]))
        if len(args) != 1:
            self.fail(UnknownLattice, f"{kind} lattice takes no arguments", args[1])
        return make_lattice(kind)

    def parse_names(self, directive, empty_error) -> tuple[str, ...]:
        toks = self.lines[directive]
        if not toks or len(toks[0]) == 1:
            where = toks[0][0] if toks else None
            self.fail(empty_error, f"no {directive} declared", where)
        toks = self.single(directive)
        names = toks[1:]
        seen = set()
        for t in names:
            if t in seen:
                self.fail(DuplicateDeclaration, f"{t!r} declared twice", t)
            if ":" in t:
                self.fail(ParseError, f"name {t!r} may not contain ':'", t)
            seen.add(t)
        return tuple(str(t) for t in names)

    def state(self, tok) -> int:
        if tok not in self.state_idx:
            self.fail(UndeclaredState, f"undeclared state {tok!r}", tok)
        return self.state_idx[tok]

    def letter(self, tok) -> int:
        if tok not in self.letter_idx:
            self.fail(UndeclaredLetter, f"undeclared letter {tok!r}", tok)
        return self.letter_idx[tok]

    def value(self, tok):
        try:
            return self.lattice.parse_value(tok)
        except OutOfRange as e:
            self.fail(ValueOutOfRange, str(e), tok)
        except LatticeError as e:
            self.fail(ParseError, str(e), tok)

    def weights(self, directive) -> tuple:
        """``state[:value]`` items, value defaulting to 1; each state at most once."""
        out = [self.lattice.bottom] * len(self.states)
        seen = set()
        for toks in self.lines[directive]:
            if len(toks) == 1:
                self.fail(ParseError, f"{directive!r} needs at least one state", toks[0])
            for t in toks[1:]:
                name, sep, val = t.partition(":")
                st = _Tok(name, t.line, t.col)
                i = self.state(st)
                if i in seen:
                    self.fail(DuplicateDeclaration, f"{directive} weight of {name!r} given twice", t)
                seen.add(i)
                if sep:
                    out[i] = self.value(_Tok(val, t.line, t.col + len(name) + 1))
                else:
                    out[i] = self.lattice.top
        return tuple(out)

    def parse_fuzzy(self) -> FuzzyAutomaton:
        lat = self.lattice
        n = len(self.states)
        sigma = self.weights("initial")
        tau = self.weights("final")
        mats = [[[lat.bottom] * n for _ in range(n)] for _ in self.alphabet]
        seen = set()
        for toks in self.lines["trans"]:
            if len(toks) != 5:
                self.fail(ParseError, "expected 'trans <from> <letter> <to> <weight>'", toks[0])
            _, src, x, dst, w = toks
            key = (self.state(src), self.letter(x), self.state(dst))
            if key in seen:
                self.fail(DuplicateTransition, f"duplicate transition {src} {x} {dst}", toks[0])
            seen.add(key)
            mats[key[1]][key[0]][key[2]] = self.value(w)
        delta = {x: FuzzyMatrix(lat, tuple(map(tuple, m))) for x, m in zip(self.alphabet, mats)}
        return FuzzyAutomaton(lat, self.states, self.alphabet, delta,
                              FuzzySet(lat, sigma), FuzzySet(lat, tau))

    def parse_cdfa(self) -> Cdfa:
        lat = self.lattice
        init = self.single("initial")
        if len(init) != 2 or ":" in init[1]:
            self.fail(ParseError, "cdfa needs exactly one crisp initial state: 'initial <state>'",
                      init[0])
        initial = self.state(init[1])
        tau = self.weights("final")
        table: dict[tuple[int, int], int] = {}
        for toks in self.lines["trans"]:
            if len(toks) != 4:
                self.fail(ParseError, "expected 'trans <from> <letter> <to>' in a cdfa", toks[0])
            _, src, x, dst = toks
            key = (self.state(src), self.letter(x))
            target = self.state(dst)
            if key in table:
                self.fail(DuplicateTransition, f"second transition from {src} on {x}", toks[0])
            table[key] = target
        missing = [
            f"{s} {x}"
            for i, s in enumerate(self.states)
            for j, x in enumerate(self.alphabet)
            if (i, j) not in table
        ]
        if missing:
            raise NonTotalCdfa(
                "transition function is not total; missing: " + ", ".join(missing),
                source=self.source,
            )
        rows = tuple(
            tuple(table[i, j] for j in range(len(self.alphabet)))
            for i in range(len(self.states))
        )
        return Cdfa(lat, self.states, self.alphabet, rows, initial, FuzzySet(lat, tau))


def parse_automaton(text: str, source: str | None = None) -> Automaton:
    """Parse automaton text; ``source`` only labels diagnostics."""
    return _Parser(text, source).parse()


def serialize_automaton(a: Automaton) -> str:
    """Canonical text: declaration order kept, zero weights omitted."""
    lat = a.lattice
    fmt = lat.format_value
    lines = [f"lattice {lat.header()}"]
    if isinstance(a, Cdfa):
        lines.append("kind cdfa")
    else:
        lines.append("kind fuzzy")
    lines.append("states " + " ".join(a.states))
    lines.append("alphabet " + " ".join(a.alphabet))
    if isinstance(a, Cdfa):
        lines.append(f"initial {a.states[a.initial]}")
    else:
        for s, v in zip(a.states, a.sigma):
            if v != lat.bottom:
                lines.append(f"initial {s}:{fmt(v)}")
    terminal = a.terminal if isinstance(a, Cdfa) else a.tau
    for s, v in zip(a.states, terminal):
        if v != lat.bottom:
            lines.append(f"final {s}:{fmt(v)}")
    if isinstance(a, Cdfa):
        for i, s in enumerate(a.states):
            for j, x in enumerate(a.alphabet):
                lines.append(f"trans {s} {x} {a.states[a.table[i][j]]}")
    else:
        for i, s in enumerate(a.states):
            for x in a.alphabet:
                for k, v in enumerate(a.delta[x].rows[i]):
                    if v != lat.bottom:
                        lines.append(f"trans {s} {x} {a.states[k]} {fmt(v)}")
    return "\n".join(lines) + "\n"


def _q(name: str) -> str:
    return json.dumps(name, ensure_ascii=False)


def export_dot(a: Automaton, name: str = "automaton") -> str:
    """Graphviz digraph in the style of hand-drawn transition graphs: edges
    ``x/w`` (plain ``x`` for a cdfa), weights on entry and exit arrows."""
    lat = a.lattice
    fmt = lat.format_value
    crisp = isinstance(a, Cdfa)
    out = [f"digraph {_q(name)} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for s in a.states:
        out.append(f"  {_q(s)};")
    if crisp:
        entries = [(a.states[a.initial], None)]
        exits = list(zip(a.states, a.terminal))
    else:
        entries = [(s, v) for s, v in zip(a.states, a.sigma) if v != lat.bottom]
        exits = [(s, v) for s, v in zip(a.states, a.tau) if v != lat.bottom]
    for s, v in entries:
        node = _q(f"__in_{s}")
        label = "" if v is None else f" [label={_q(fmt(v))}]"
        out.append(f"  {node} [shape=point];")
        out.append(f"  {node} -> {_q(s)}{label};")
    for s, v in exits:
        node = _q(f"__out_{s}")
        out.append(f"  {node} [shape=point];")
        out.append(f"  {_q(s)} -> {node} [label={_q(fmt(v))}];")
    if crisp:
        for i, s in enumerate(a.states):
            for j, x in enumerate(a.alphabet):
                out.append(f"  {_q(s)} -> {_q(a.states[a.table[i][j]])} [label={_q(x)}];")
    else:
        for i, s in enumerate(a.states):
            for x in a.alphabet:
                for k, v in enumerate(a.delta[x].rows[i]):
                    if v != lat.bottom:
                        label = f"{x}/{fmt(v)}"
                        out.append(f"  {_q(s)} -> {_q(a.states[k])} [label={_q(label)}];")
    out.append("}")
    return "\n".join(out) + "\n"


def parse_word(text: str, alphabet: Iterable[str]) -> Word:
    """Read a word typed on the command line.

    Whitespace- or comma-separated text is split into letters; otherwise the
    text is split greedily into the longest declared letters. ``""`` is the
    empty word.
    """
    alphabet = tuple(alphabet)
    text = text.strip()
    if not text:
        return ()
    if re.search(r"[\s,]", text):
        letters = tuple(t for t in re.split(r"[\s,]+", text) if t)
    else:
        by_len = sorted(alphabet, key=len, reverse=True)
        letters = []
        pos = 0
        while pos < len(text):
            for x in by_len:
                if text.startswith(x, pos):
                    letters.append(x)
                    pos += len(x)
                    break
            else:
                rest = text[pos:]
                raise UnknownLetter(rest[0] if rest else rest, alphabet)
        letters = tuple(letters)
    for x in letters:
        if x not in alphabet:
            raise UnknownLetter(x, alphabet)
    return letters


def format_word(u: Iterable[str]) -> str:
    u = tuple(u)
    if not u:
        return '""'
    if all(len(x) == 1 for x in u):
        return "".join(u)
    return " ".join(u)
