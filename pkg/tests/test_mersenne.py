import math

import pytest

from gf2sigma.factorize import is_irreducible
from gf2sigma.gf2poly import ZERO, parse
from gf2sigma.mersenne import (
    NotIrreducibleError,
    build,
    conjugate,
    enumerate_primes,
    is_mersenne_prime,
    mersenne_form,
    recognize,
)


def test_mersenne_form():
    assert mersenne_form(1, 1) == parse("x^2+x+1")
    assert mersenne_form(1, 2) == parse("x^3+x+1")
    assert mersenne_form(2, 2) == parse("x^4+x^2+1")
    with pytest.raises(ValueError):
        mersenne_form(0, 1)


def test_build_examples():
    assert build(1, 1).poly == parse("x^2+x+1")
    assert build(1, 2).poly == parse("x^3+x+1")
    with pytest.raises(NotIrreducibleError) as exc:
        build(2, 2)
    assert exc.value.poly == parse("x^4+x^2+1")
    assert "gcd" in str(exc.value)
    # the exponent filter is necessary but not sufficient
    with pytest.raises(NotIrreducibleError):
        build(1, 4)  # x^5+x+1 = (x^2+x+1)(x^3+x^2+1)
    with pytest.raises(NotIrreducibleError):
        build(4, 1)
    with pytest.raises(ValueError):
        build(0, 3)


def test_recognize_examples():
    assert recognize(parse("x^2+x+1")) == (1, 1)
    assert recognize(parse("x^4+x^2+1")) == (2, 2)  # matches the form, reducible
    assert not is_mersenne_prime(parse("x^4+x^2+1"))
    assert recognize(parse("x^4+x+1")) is None
    assert recognize(parse("x^4+1")) is None  # x^4, no (x+1) part
    assert recognize(parse("1")) is None
    with pytest.raises(ValueError):
        recognize(ZERO)


def test_recognize_inverts_form(rng):
    for _ in range(100):
        a = rng.randrange(1, 25)
        b = rng.randrange(1, 25)
        assert recognize(mersenne_form(a, b)) == (a, b)


def test_enumerate_small():
    got = [(m.a, m.b) for m in enumerate_primes(2, 4)]
    assert got == [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1)]
    with pytest.raises(ValueError):
        enumerate_primes(1, 4)
    with pytest.raises(ValueError):
        enumerate_primes(5, 4)


def test_enumerate_entries_are_verified():
    for m in enumerate_primes(2, 12):
        assert is_irreducible(m.poly)
        assert recognize(m.poly) == (m.a, m.b)
        assert m.degree == m.a + m.b


def test_enumerate_sorted_by_degree_then_a():
    primes = enumerate_primes(2, 14)
    keys = [(m.degree, m.a) for m in primes]
    assert keys == sorted(keys)


def test_conjugate():
    m = build(1, 2)
    c = conjugate(m)
    assert (c.a, c.b) == (2, 1)
    assert c.poly == parse("x^3+x^2+1")
    assert c.poly == m.poly.subst_x_plus_1()
    assert conjugate(c) == m
    assert conjugate(build(1, 1)) == build(1, 1)


def test_conjugation_closure_and_parity():
    primes = enumerate_primes(2, 14)
    exponents = {(m.a, m.b) for m in primes}
    for m in primes:
        assert (m.b, m.a) in exponents
    assert [(m.a, m.b) for m in primes if (m.a, m.b) == (m.b, m.a)] == [(1, 1)]
    by_degree = {}
    for m in primes:
        by_degree.setdefault(m.degree, []).append(m)
    for d, group in by_degree.items():
        if d >= 3:
            assert len(group) % 2 == 0


def test_exponent_filter_soundness():
    # whenever gcd(a,b) > 1 (in particular both even), the form is reducible
    for total in range(2, 21):
        for a in range(1, total):
            b = total - a
            if math.gcd(a, b) > 1:
                assert not is_irreducible(mersenne_form(a, b)), (a, b)
