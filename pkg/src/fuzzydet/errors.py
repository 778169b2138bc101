"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class FuzzyDetError(Exception):
    """Base class for every error raised by this package."""


class LatticeError(FuzzyDetError, ValueError):
    pass


class OutOfRange(LatticeError):
    pass


class MalformedValue(LatticeError):
    pass


class LatticeMismatch(LatticeError):
    """Operands or containers belong to different lattices."""


class DimensionMismatch(FuzzyDetError, ValueError):
    pass


class AlphabetMismatch(FuzzyDetError, ValueError):
    pass


class UnknownLetter(FuzzyDetError, ValueError):
    def __init__(self, letter, alphabet=()):
        self.letter = letter
        self.alphabet = tuple(alphabet)
        msg = f"unknown letter {letter!r}"
        if self.alphabet:
            msg += f" (alphabet: {' '.join(self.alphabet)})"
        super().__init__(msg)


class UnknownState(FuzzyDetError, ValueError):
    pass


class InvalidAutomaton(FuzzyDetError, ValueError):
    pass


class NotAccessible(FuzzyDetError, ValueError):
    def __init__(self, unreachable):
        self.unreachable = tuple(unreachable)
        super().__init__(
            "automaton has unreachable states: " + " ".join(self.unreachable)
        )


class CapExceeded(FuzzyDetError):
    """A saturation or construction outgrew its configured cap."""

    def __init__(self, cap, message=None):
        self.cap = cap
        super().__init__(message or f"cap of {cap} exceeded")


class StateCapExceeded(CapExceeded):
    """Raised instead of truncating a determinization.

    ``frontier`` holds the profiles discovered but not yet expanded when the
    cap was hit; ``round`` is set by the double-reversal construction.
    """

    def __init__(self, cap, states_discovered, frontier=(), round=None):
        self.states_discovered = states_discovered
        self.frontier = tuple(frontier)
        self.round = round
        where = f" in round {round}" if round is not None else ""
        super().__init__(
            cap,
            f"state cap {cap} exceeded{where} after discovering "
            f"{states_discovered} states (the automaton may be infinite)",
        )


class ParseError(FuzzyDetError, ValueError):
    """Diagnostic for malformed automaton text, with a 1-based position."""

    def __init__(self, message, line=None, column=None, source=None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(self.format())

    def format(self):
        where = self.source or "<input>"
        if self.line is not None:
            where += f":{self.line}"
            if self.column is not None:
                where += f":{self.column}"
        return f"{where}: {type(self).__name__}: {self.message}"


class UnknownLattice(ParseError):
    pass


class UndeclaredState(ParseError):
    pass


class UndeclaredLetter(ParseError):
    pass


class DuplicateTransition(ParseError):
    pass


class DuplicateDeclaration(ParseError):
    pass


class ValueOutOfRange(ParseError):
    pass


class NonTotalCdfa(ParseError):
    pass


class EmptyAlphabet(ParseError):
    pass


class EmptyStateSet(ParseError):
    pass
