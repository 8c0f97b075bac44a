from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from _support import random_element, ring
from jclean import (
    NotAUnit,
    ParseError,
    RingMismatch,
    elem_parse,
    in_jacobson,
    is_unit,
    jacobson_nil_index,
    ring_parse,
    try_inv,
)
from jclean.rings import (
    Integers,
    IntegersMod,
    LocalizedIntegers,
    PrimeField,
    TruncatedSeries,
    combine,
    local_components,
    project,
)

FINITE = ["Zn:4", "Zn:6", "Fp:5", "Zn:8", "Zn:9", "Zn:12", "series(Zn:4,2)", "series(Fp:2,3)"]
ALL_SPECS = FINITE + ["Z", "Zloc:2", "Zloc:3", "series(Zloc:2,2)"]


# -- parsing ---------------------------------------------------------------


def test_ring_parse_examples() -> None:
    z4 = ring_parse("Zn:4")
    assert z4 == IntegersMod(4)
    assert z4.factorization == ((2, 2),)
    assert ring_parse("series(Zn:4,2)") == TruncatedSeries(IntegersMod(4), 2)
    assert ring_parse("Z") == Integers()
    assert ring_parse("Fp:7") == PrimeField(7)
    assert ring_parse("Zloc:2") == LocalizedIntegers(2)
    assert ring_parse("series(series(Fp:2,2),3)").base == TruncatedSeries(PrimeField(2), 2)


@pytest.mark.parametrize(
    "spec, token",
    [("Fp:4", "4"), ("Zn:1", "1"), ("Zloc:6", "6"), ("series(Z,0)", "0"), ("Q", "Q"), ("Zn:", "Zn:"), ("series(Z,2", "")],
)
def test_ring_parse_errors_name_the_token(spec: str, token: str) -> None:
    with pytest.raises(ParseError) as info:
        ring_parse(spec)
    assert token in str(info.value)


def test_factorization_is_cached_and_multiplies_back() -> None:
    for n in (2, 12, 360, 2**61 - 1, 10**12 + 39):
        R = IntegersMod(n)
        prod = 1
        for p, k in R.factorization:
            prod *= p**k
        assert prod == n


def test_spec_round_trip() -> None:
    for spec in ALL_SPECS:
        assert ring_parse(spec).spec() == spec


def test_elem_parse_examples() -> None:
    assert elem_parse(ring("Zloc:2"), "2/9").value == Fraction(2, 9)
    assert elem_parse(ring("Zn:4"), "7").value == 3
    assert elem_parse(ring("Zn:4"), "-1").value == 3
    assert elem_parse(ring("series(Zn:4,2)"), "2+2x").value == (2, 2)
    assert elem_parse(ring("series(Zn:4,3)"), "1 + 3*x^2").value == (1, 0, 3)


@pytest.mark.parametrize(
    "spec, text",
    [("Zloc:2", "1/2"), ("Zloc:3", "5/6"), ("series(Zn:4,2)", "1+x^2"), ("Zn:4", "abc"), ("Z", "1/2"), ("Zn:4", "")],
)
def test_elem_parse_errors(spec: str, text: str) -> None:
    with pytest.raises(ParseError):
        elem_parse(ring(spec), text)


def test_canonical_text_round_trips() -> None:
    rng = random.Random(11)
    for spec in ALL_SPECS:
        R = ring(spec)
        for _ in range(50):
            a = random_element(R, rng)
            assert elem_parse(R, str(a)) == a


# -- arithmetic --------------------------------------------------------------


def test_inverse_examples() -> None:
    assert try_inv(ring("Zn:4")(3)) == 3
    assert try_inv(ring("Zloc:2")(Fraction(1, 3))) == 3
    with pytest.raises(NotAUnit):
        try_inv(elem_parse(ring("series(Zn:4,2)"), "2+x"))
    with pytest.raises(NotAUnit):
        try_inv(ring("Z")(2))


def test_series_inverse_multiplies_to_one() -> None:
    R = ring("series(Zn:8,4)")
    a = elem_parse(R, "3 + 2*x + 5*x^2 + x^3")
    assert a * try_inv(a) == 1


def test_unit_and_radical_examples() -> None:
    assert is_unit(ring("Zn:4")(3))
    assert not is_unit(ring("Z")(2))
    assert is_unit(ring("Zloc:2")(Fraction(1, 3)))
    assert in_jacobson(ring("Zn:4")(2))
    assert in_jacobson(ring("Zloc:2")(Fraction(2, 3)))
    assert not in_jacobson(ring("Z")(5))
    assert in_jacobson(ring("Zn:12")(6))
    assert not in_jacobson(ring("Zn:12")(4))
    assert in_jacobson(elem_parse(ring("series(Zn:4,2)"), "2 + 3*x"))


def test_nil_index_examples() -> None:
    assert jacobson_nil_index(ring("Zn:4")) == 2
    assert jacobson_nil_index(ring("Z")) == 1
    assert jacobson_nil_index(ring("Fp:3")) == 1
    assert jacobson_nil_index(ring("Zn:72")) == 3
    assert jacobson_nil_index(ring("Zloc:2")) is None
    assert jacobson_nil_index(ring("series(Zn:4,3)")) == 6


def test_mixing_rings_is_rejected() -> None:
    with pytest.raises(RingMismatch):
        ring("Zn:4")(1) + ring("Zn:8")(1)


@pytest.mark.parametrize("spec", ["Zn:4", "Zn:6", "Fp:5"])
def test_ring_axioms_exhaustive(spec: str) -> None:
    R = ring(spec)
    els = R.elements()
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a and a * b == b * a
        assert a + 0 == a and a * 1 == a
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("spec", ["Z", "Zloc:2", "Zloc:5", "series(Zn:4,3)", "series(Zloc:3,2)", "Zn:360"])
def test_ring_axioms_randomized(spec: str) -> None:
    R = ring(spec)
    rng = random.Random(spec)
    for _ in range(1000):
        a, b, c = (random_element(R, rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == 0


@pytest.mark.parametrize("spec", FINITE)
def test_radical_shifts_are_units(spec: str) -> None:
    R = ring(spec)
    for a in R.elements():
        if in_jacobson(a):
            assert is_unit(1 + a)


@pytest.mark.parametrize("spec", FINITE)
def test_try_inv_succeeds_exactly_on_units(spec: str) -> None:
    R = ring(spec)
    for a in R.elements():
        if is_unit(a):
            assert a * try_inv(a) == 1
        else:
            with pytest.raises(NotAUnit):
                try_inv(a)


@pytest.mark.parametrize("spec", ["Zn:4", "Zn:8", "Zn:12"])
def test_nilpotent_elements_are_exactly_the_radical(spec: str) -> None:
    R = ring(spec)
    bound = max(jacobson_nil_index(R), 64)
    for a in R.elements():
        hits = any(in_jacobson(a**k) for k in range(1, bound + 1))
        assert hits == in_jacobson(a)


@given(st.integers(-10**6, 10**6), st.integers(1, 10**4))
def test_localized_canonical_form(num: int, den: int) -> None:
    R = LocalizedIntegers(3)
    if Fraction(num, den).denominator % 3 == 0:
        with pytest.raises(ParseError):
            R(f"{num}/{den}")
        return
    a = R(f"{num}/{den}")
    assert a.value.denominator > 0
    assert a.value == Fraction(num, den)
    assert in_jacobson(a) == (a.value.numerator % 3 == 0)
    assert is_unit(a) != in_jacobson(a)


@given(st.lists(st.integers(-50, 50), min_size=3, max_size=3), st.lists(st.integers(-50, 50), min_size=3, max_size=3))
def test_series_multiplication_truncates(xs: list[int], ys: list[int]) -> None:
    R = TruncatedSeries(IntegersMod(9), 3)
    a, b = R(tuple(xs)), R(tuple(ys))
    expected = tuple(sum(xs[i] * ys[k - i] for i in range(k + 1)) % 9 for k in range(3))
    assert (a * b).value == expected


# -- CRT components ----------------------------------------------------------


def test_local_components_and_crt_round_trip() -> None:
    R = ring("Zn:12")
    comps = local_components(R)
    assert [c.spec() for c in comps] == ["Zn:4", "Zn:3"]
    for a in R.elements():
        assert combine(R, [project(a, c) for c in comps]) == a
    S = ring("series(Zn:6,2)")
    comps = local_components(S)
    assert [c.spec() for c in comps] == ["series(Zn:2,2)", "series(Zn:3,2)"]
    a = elem_parse(S, "5 + 4*x")
    assert combine(S, [project(a, c) for c in comps]) == a
    assert local_components(ring("Zn:8")) == [ring("Zn:8")]
