import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from fuzzydet.errors import LatticeMismatch, MalformedValue, OutOfRange
from fuzzydet.lattice import Boolean, Chain, Godel, Goguen, Lukasiewicz, make_lattice

UNIT = [Godel(), Goguen(), Lukasiewicz()]

unit_values = st.fractions(min_value=0, max_value=1, max_denominator=50)


def test_meet_join_examples():
    g = Goguen()
    assert g.join(F(3, 10), F(7, 10)) == F(7, 10)
    assert Chain(5).meet(2, 3) == 2
    assert Boolean().join(0, 0) == 0


def test_tensor_examples():
    assert Goguen().tensor(F(1, 2), F(1, 2)) == F(1, 4)
    assert Lukasiewicz().tensor(F(7, 10), F(6, 10)) == F(3, 10)
    # n = 4: a2 (x) a3 = a_max(2+3-4, 0)
    assert Chain(5).tensor(2, 3) == 1


def test_residuum_examples():
    assert Godel().residuum(F(3, 10), F(7, 10)) == 1
    assert Goguen().residuum(F(1, 2), F(1, 4)) == F(1, 2)
    assert Lukasiewicz().residuum(F(3, 10), F(1, 10)) == F(4, 5)


def test_big_join():
    g = Goguen()
    assert g.big_join([F(1, 2), F(1, 4), F(1)]) == 1
    assert g.big_join([]) == 0
    assert Chain(5).big_join([]) == 0
    assert Chain(5).big_join([1, 3]) == 3


@pytest.mark.parametrize("lat", UNIT + [Boolean(), Chain(4)], ids=str)
def test_lattice_bounds(lat):
    assert lat.contains(lat.bottom) and lat.contains(lat.top)
    assert lat.bottom < lat.top


def test_parse_value():
    g = Goguen()
    assert g.parse_value("0.5") == F(1, 2)
    assert g.parse_value("1/3") == F(1, 3)
    assert g.parse_value("1") == 1 and type(g.parse_value("1")) is F
    with pytest.raises(OutOfRange):
        Chain(5).parse_value("a5")
    assert Chain(5).parse_value("a4") == 4
    with pytest.raises(OutOfRange):
        g.parse_value("1.5")
    with pytest.raises(OutOfRange):
        g.parse_value("3/2")
    for bad in ["", "-0.5", "abc", "1/0", "1e-2", "0.5.5", "a1"]:
        with pytest.raises(MalformedValue):
            g.parse_value(bad)
    with pytest.raises(MalformedValue):
        Chain(3).parse_value("0.5")
    with pytest.raises(OutOfRange):
        Boolean().parse_value("0.5")


@pytest.mark.parametrize("text,canonical", [
    ("0.5", "0.5"), ("1/2", "0.5"), ("0.25", "1/4"), ("1/4", "1/4"),
    ("0.125", "1/8"), ("1/3", "1/3"), ("0.2", "0.2"), ("0.10", "0.1"),
    ("0", "0"), ("1.0", "1"), ("0.35", "0.35"), ("7/20", "0.35"),
])
def test_format_value_shortest(text, canonical):
    g = Goguen()
    assert g.format_value(g.parse_value(text)) == canonical


@given(unit_values)
def test_format_parse_roundtrip_unit(v):
    for lat in UNIT:
        assert lat.parse_value(lat.format_value(v)) == v


def test_format_parse_roundtrip_finite():
    for lat in [Boolean(), Chain(2), Chain(7)]:
        for v in lat.elements():
            assert lat.parse_value(lat.format_value(v)) == v
    assert Chain(5).format_value(3) == "a3"


def test_mixed_operands_rejected():
    with pytest.raises(LatticeMismatch):
        Chain(5).tensor(F(1, 2), 1)
    with pytest.raises(LatticeMismatch):
        Goguen().meet(2, F(1, 2))
    with pytest.raises(LatticeMismatch):
        Chain(3).join(0, 3)
    with pytest.raises(LatticeMismatch):
        Godel().residuum(F(3, 2), F(0))


def test_make_lattice():
    assert make_lattice("chain", 4) == Chain(4)
    assert make_lattice("goguen") == Goguen()
    assert Goguen() != Godel()
    with pytest.raises(ValueError):
        make_lattice("chain", 1)
    with pytest.raises(ValueError):
        make_lattice("heyting")


def test_boolean_is_classical_logic():
    b = Boolean()
    for x, y in itertools.product((0, 1), repeat=2):
        assert b.tensor(x, y) == int(x and y)
        assert b.residuum(x, y) == int((not x) or y)


@given(unit_values, unit_values)
def test_unit_closure_exact(x, y):
    for lat in UNIT:
        for v in (lat.tensor(x, y), lat.residuum(x, y)):
            assert type(v) is F and 0 <= v <= 1


@given(unit_values, unit_values, unit_values)
def test_unit_adjunction(x, y, z):
    for lat in UNIT:
        assert (lat.tensor(x, y) <= z) == (x <= lat.residuum(y, z))


@pytest.mark.parametrize("size", range(2, 8))
def test_chain_adjunction_exhaustive(size):
    lat = Chain(size)
    for x, y, z in itertools.product(lat.elements(), repeat=3):
        assert (lat.tensor(x, y) <= z) == (x <= lat.residuum(y, z))
