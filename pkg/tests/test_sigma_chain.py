import json

import pytest

import _oracle as O
from gf2sigma.factorize import factor
from gf2sigma.gf2poly import ONE, parse
from gf2sigma.mersenne import build
from gf2sigma.sigma_chain import (
    FactorCache,
    analyze,
    is_odd_prime,
    order_of_two,
    sigma_prime_power,
)


def test_is_odd_prime():
    assert [p for p in range(2, 30) if is_odd_prime(p)] == [3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_order_of_two():
    assert order_of_two(3) == 2
    assert order_of_two(5) == 4
    assert order_of_two(7) == 3
    assert order_of_two(53) == 52
    assert order_of_two(71) == 35


def test_sigma_prime_power_examples():
    M = build(1, 2)
    assert sigma_prime_power(M, 0) == ONE
    assert sigma_prime_power(M, 2) == parse("x^6+x^3+x^2+x+1")
    with pytest.raises(ValueError):
        sigma_prime_power(M, -1)


def test_sigma_prime_power_matches_oracle_sum():
    M = build(2, 3)
    for n in range(0, 8):
        got = sigma_prime_power(M, n).bits
        want = O.to_bits(O.geometric_sum(O.from_bits(M.poly.bits), n))
        assert got == want


def test_geometric_identity(rng):
    for m in (build(1, 2), build(2, 3), build(1, 6)):
        for _ in range(10):
            n = rng.randrange(0, 41)
            lhs = (m.poly + ONE) * sigma_prime_power(m, n)
            assert lhs == m.poly ** (n + 1) + ONE


def test_analyze_rejects_bad_p():
    M = build(1, 2)
    for p in (2, 4, 9, 15, 1):
        with pytest.raises(ValueError):
            analyze(M, p)


def test_analyze_worked_example_p3():
    # (a,b) = (1,2), p = 3: the chain is small enough to read off
    an = analyze(build(1, 2), 3)
    assert an.sigma_even == parse("x^6+x^3+x^2+x+1")
    assert [(q.bits, m) for q, m in an.factorization] == [(0b111, 1), (0b11001, 1)]
    assert an.all_mersenne
    assert (an.sum_a, an.sum_b) == (4, 2)
    # sigma of the squarefree product is x^4 (x+1)^2
    assert an.double_sigma == parse("x^6+x^4")
    assert an.double_sigma.is_square()
    assert an.deviation == parse("x^4+x^3+x^2+x")
    assert (an.degree_gap, an.least_odd_top, an.least_even_top) == (2, 1, 2)
    assert not an.in_theorem_scope  # p = 3 is computed but out of scope


def test_analyze_degree_bookkeeping():
    for (a, b, p) in ((1, 2, 5), (2, 3, 5), (1, 6, 7), (2, 3, 11)):
        an = analyze(build(a, b), p)
        assert an.sigma_even.degree == (p - 1) * (a + b)
        assert an.sigma_odd.degree == (p - 2) * (a + b)
        assert an.double_sigma.degree == an.sigma_even.degree
        assert an.residual == an.sigma_odd + an.deviation
        if an.deviation:
            assert an.degree_gap >= 1


def test_analyze_full_record_vs_oracle():
    # independent route for (2,3), p=5: list arithmetic + trial division
    M = build(2, 3)
    an = analyze(M, 5)

    mc = O.from_bits(M.poly.bits)
    se = O.geometric_sum(mc, 4)
    so = O.geometric_sum(mc, 3)
    assert O.to_bits(se) == an.sigma_even.bits
    assert O.to_bits(so) == an.sigma_odd.bits

    pairs = O.factor_by_trial(O.to_bits(se))
    assert pairs == [(q.bits, m) for q, m in an.factorization]

    u = [1]
    for bits, mult in pairs:
        u = O.mul(u, O.geometric_sum(O.from_bits(bits), mult))
    assert O.to_bits(u) == an.double_sigma.bits

    w = O.add(O.add(u, se), [1])
    assert O.to_bits(w) == an.deviation.bits
    dw = O.degree(w)
    assert an.degree_gap == 4 * 5 - dw
    odd = next((l for l in range(1, dw + 1, 2) if w[dw - l]), None)
    even = next((l for l in range(2, dw + 1, 2) if w[dw - l]), None)
    assert (an.least_odd_top, an.least_even_top) == (odd, even)


def test_json_record_schema():
    an = analyze(build(1, 2), 3)
    data = an.to_json_dict()
    assert set(data) == {"a", "b", "p", "c", "m", "e", "all_mersenne", "w_zero", "factors"}
    assert data["a"] == 1 and data["b"] == 2 and data["p"] == 3
    assert data["c"] == 2 and data["m"] == 1 and data["e"] == 2
    assert data["all_mersenne"] is True and data["w_zero"] is False
    assert data["factors"] == [
        {"poly": "0x7", "mult": 1},
        {"poly": "0x19", "mult": 1},
    ]
    json.dumps(data)  # serializable


def test_factor_hint_must_reconstruct():
    M = build(1, 2)
    good = analyze(M, 5)
    wrong_hint = [(0b111, 1)]
    an = analyze(M, 5, factor_hint=wrong_hint)  # stale hint is discarded
    assert an.factorization == good.factorization


class TestFactorCache:
    def test_round_trip(self, tmp_path):
        path = tmp_path / "cache.jsonl"
        cache = FactorCache(path)
        M = build(1, 2)
        an = analyze(M, 5, cache=cache)
        cache.save()
        assert path.exists()
        fresh = FactorCache(path)
        assert fresh.get(1, 2, 5) == [(q.bits, m) for q, m in an.factorization]
        an2 = analyze(M, 5, cache=fresh)
        assert an2.factorization == an.factorization

    def test_corrupt_lines_are_dropped(self, tmp_path):
        path = tmp_path / "cache.jsonl"
        path.write_text('not json\n{"a": 1}\n')
        cache = FactorCache(path)
        assert cache.get(1, 2, 5) is None

    def test_stale_entry_revalidated(self, tmp_path):
        path = tmp_path / "cache.jsonl"
        rec = {"a": 1, "b": 2, "p": 5, "factors": [{"poly": "0x7", "mult": 1}]}
        path.write_text(json.dumps(rec) + "\n")
        cache = FactorCache(path)
        an = analyze(build(1, 2), 5, cache=cache)
        # the bogus entry fails product reconstruction and is recomputed
        assert an.factorization == factor(an.sigma_even)
        cache.save()
        assert FactorCache(path).get(1, 2, 5) == [
            (q.bits, m) for q, m in an.factorization
        ]
