"""Complete residuated lattices with exact carriers.

Five structures are provided, all of them chains:

* ``boolean``      carrier {0, 1} as ints
* ``godel``        rationals in [0, 1], tensor = min
* ``goguen``       rationals in [0, 1], tensor = product
* ``lukasiewicz``  rationals in [0, 1], tensor = max(x + y - 1, 0)
* ``chain``        indices 0..n standing for a_0 < ... < a_n,
                   a_k (x) a_l = a_max(k + l - n, 0)

Rationals are :class:`fractions.Fraction`, so equality of truth values is
exact and hashable. Lattices are immutable values passed explicitly to every
operation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Iterable, Union

from .errors import LatticeMismatch, MalformedValue, OutOfRange

TruthValue = Union[int, Fraction]

KINDS = ("boolean", "godel", "goguen", "lukasiewicz", "chain")

_DECIMAL = re.compile(r"(\d+(\.\d*)?|\.\d+)\Z")
_FRACTION = re.compile(r"(\d+)/(\d+)\Z")
_CHAIN = re.compile(r"a(\d+)\Z")


class Lattice:
    """Base class; subclasses fix the carrier and the adjoint pair."""

    kind: ClassVar[str]
    bottom: TruthValue
    top: TruthValue

    # -- carrier ---------------------------------------------------------

    def contains(self, v) -> bool:
        raise NotImplementedError

    def check(self, v) -> TruthValue:
        if not self.contains(v):
            raise LatticeMismatch(f"{v!r} is not an element of {self}")
        return v

    def elements(self):
        """All carrier elements in increasing order (finite carriers only)."""
        raise TypeError(f"{self} has an infinite carrier")

    @property
    def is_finite(self) -> bool:
        return False

    # -- order and lattice operations -----------------------------------

    def leq(self, a, b) -> bool:
        return self.check(a) <= self.check(b)

    def meet(self, a, b) -> TruthValue:
        return min(self.check(a), self.check(b))

    def join(self, a, b) -> TruthValue:
        return max(self.check(a), self.check(b))

    def big_join(self, values: Iterable) -> TruthValue:
        return max((self.check(v) for v in values), default=self.bottom)

    def big_meet(self, values: Iterable) -> TruthValue:
        return min((self.check(v) for v in values), default=self.top)

    def tensor(self, a, b) -> TruthValue:
        return self._tensor(self.check(a), self.check(b))

    def residuum(self, a, b) -> TruthValue:
        return self._residuum(self.check(a), self.check(b))

    # Unchecked versions used by the matrix code.
    def _tensor(self, a, b):
        raise NotImplementedError

    def _residuum(self, a, b):
        raise NotImplementedError

    # -- text ------------------------------------------------------------

    def parse_value(self, text: str) -> TruthValue:
        raise NotImplementedError

    def format_value(self, v) -> str:
        raise NotImplementedError

    def value(self, v) -> TruthValue:
        """Coerce a literal (str, int, float-free Fraction) into the carrier."""
        if isinstance(v, str):
            return self.parse_value(v)
        return self.check(self._coerce(v))

    def _coerce(self, v):
        return v

    def header(self) -> str:
        """The ``lattice`` line used by the text format."""
        return self.kind


class _UnitInterval(Lattice):
    bottom = Fraction(0)
    top = Fraction(1)

    def contains(self, v):
        return type(v) is Fraction and 0 <= v <= 1

    def _coerce(self, v):
        if isinstance(v, int) and not isinstance(v, bool) and v in (0, 1):
            return Fraction(v)
        return v

    def parse_value(self, text):
        text = text.strip()
        m = _FRACTION.match(text)
        if m:
            if int(m.group(2)) == 0:
                raise MalformedValue(f"zero denominator in {text!r}")
            v = Fraction(int(m.group(1)), int(m.group(2)))
        elif _DECIMAL.match(text):
            v = Fraction(text)
        else:
            raise MalformedValue(f"malformed truth value {text!r}")
        if v > 1:
            raise OutOfRange(f"{text} is outside [0, 1]")
        return v

    def format_value(self, v):
        v = self.check(v)
        if v.denominator == 1:
            return str(v.numerator)
        frac = f"{v.numerator}/{v.denominator}"
        dec = _decimal(v)
        if dec is not None and len(dec) <= len(frac):
            return dec
        return frac


def _decimal(v: Fraction) -> str | None:
    """Exact decimal expansion of v in (0, 1), or None if it does not terminate."""
    q = v.denominator
    twos = fives = 0
    while q % 2 == 0:
        q //= 2
        twos += 1
    while q % 5 == 0:
        q //= 5
        fives += 1
    if q != 1:
        return None
    k = max(twos, fives)
    digits = v.numerator * 10**k // v.denominator
    return "0." + str(digits).rjust(k, "0")


@dataclass(frozen=True)
class Godel(_UnitInterval):
    kind: ClassVar[str] = "godel"

    def _tensor(self, a, b):
        return a if a <= b else b

    def _residuum(self, a, b):
        return self.top if a <= b else b


@dataclass(frozen=True)
class Goguen(_UnitInterval):
    kind: ClassVar[str] = "goguen"

    def _tensor(self, a, b):
        return a * b

    def _residuum(self, a, b):
        return self.top if a <= b else b / a


@dataclass(frozen=True)
class Lukasiewicz(_UnitInterval):
    kind: ClassVar[str] = "lukasiewicz"

    def _tensor(self, a, b):
        s = a + b - 1
        return s if s > 0 else self.bottom

    def _residuum(self, a, b):
        return self.top if a <= b else 1 - a + b


class _Finite(Lattice):
    bottom = 0

    @property
    def is_finite(self):
        return True

    def contains(self, v):
        return type(v) is int and 0 <= v <= self.top

    def elements(self):
        return tuple(range(self.top + 1))


@dataclass(frozen=True)
class Boolean(_Finite):
    kind: ClassVar[str] = "boolean"
    top: ClassVar[int] = 1

    def _coerce(self, v):
        return int(v) if isinstance(v, bool) else v

    def _tensor(self, a, b):
        return a & b

    def _residuum(self, a, b):
        return 1 if a <= b else 0

    def parse_value(self, text):
        text = text.strip()
        if text in ("0", "1"):
            return int(text)
        if _DECIMAL.match(text) or _FRACTION.match(text):
            raise OutOfRange(f"{text} is not a boolean value (expected 0 or 1)")
        raise MalformedValue(f"malformed boolean value {text!r}")

    def format_value(self, v):
        return str(self.check(v))


@dataclass(frozen=True)
class Chain(_Finite):
    """The chain a_0 < ... < a_n with ``size = n + 1`` elements."""

    kind: ClassVar[str] = "chain"
    size: int = 2

    def __post_init__(self):
        if type(self.size) is not int or self.size < 2:
            raise ValueError(f"chain size must be an integer >= 2, got {self.size!r}")

    @property
    def top(self):
        return self.size - 1

    def _tensor(self, a, b):
        s = a + b - self.size + 1
        return s if s > 0 else 0

    def _residuum(self, a, b):
        r = self.size - 1 - a + b
        return r if r < self.size - 1 else self.size - 1

    def parse_value(self, text):
        text = text.strip()
        m = _CHAIN.match(text)
        if not m:
            raise MalformedValue(f"malformed chain element {text!r} (expected a<k>)")
        k = int(m.group(1))
        if k > self.top:
            raise OutOfRange(f"{text} exceeds a{self.top}")
        return k

    def format_value(self, v):
        return f"a{self.check(v)}"

    def header(self):
        return f"chain {self.size}"


def make_lattice(kind: str, chain_size: int | None = None) -> Lattice:
    """Build a lattice from its kind name; ``chain_size`` counts elements."""
    kind = kind.lower()
    if kind == "chain":
        if chain_size is None:
            raise ValueError("chain lattice needs a size")
        return Chain(chain_size)
    if chain_size is not None:
        raise ValueError(f"{kind} lattice takes no size")
    try:
        cls = {"boolean": Boolean, "godel": Godel, "goguen": Goguen,
               "lukasiewicz": Lukasiewicz}[kind]
    except KeyError:
        raise ValueError(f"unknown lattice kind {kind!r}") from None
    return cls()


def same_lattice(*lattices: Lattice) -> Lattice:
    first = lattices[0]
    for other in lattices[1:]:
        if other != first:
            raise LatticeMismatch(f"mixed lattices: {first} and {other}")
    return first
