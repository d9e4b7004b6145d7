"""Acceptance suite: one test per acceptance criterion, at pinned tolerances.

Run it verbosely (each test prints its own pass line):

    pytest tests/test_acceptance.py -v -rA

The heavy computations (the full count table and the theorem campaign) run
once in session fixtures and are shared by the criteria that consume them.

Known honest failures: two reference cells of the count table (lambda1 at
p=53 and p=61, d=60) disagree with the computed values.  The computed
values are certified four independent ways (see
``test_table_companion_certified_values`` and the degree-parity
certification below); the criterion is asserted as stated and left red.
"""

import json
import random

import pytest

import _oracle as O
from gf2sigma.classify import render_table, table
from gf2sigma.factorize import factor, is_irreducible, sigma
from gf2sigma.gf2poly import ONE, Gf2Poly
from gf2sigma.mersenne import enumerate_primes, recognize
from gf2sigma.verify import EXCLUDED, HOLDS, VIOLATED, run_campaign

# reference counts for the exception-set table: (p, d) -> (lambda1..4, m_count)
REFERENCE_TABLE = {
    (5, 100): ((4, 0, 0, 0), 226),
    (7, 100): ((0, 0, 2, 2), 226),
    (11, 100): ((2, 0, 2, 0), 226),
    (13, 100): ((0, 2, 0, 0), 226),
    (17, 100): ((2, 0, 0, 0), 226),
    (19, 100): ((0, 0, 0, 0), 226),
    (23, 100): ((0, 0, 0, 0), 226),
    (29, 100): ((4, 0, 2, 0), 226),
    (53, 60): ((2, 0, 4, 0), 138),
    (59, 60): ((0, 0, 0, 0), 138),
    (61, 60): ((2, 2, 0, 0), 138),
    (67, 60): ((0, 0, 0, 0), 138),
    (71, 60): ((0, 2, 0, 0), 138),
}
PRIMES_D100 = [5, 7, 11, 13, 17, 19, 23, 29]
PRIMES_D60 = [53, 59, 61, 67, 71]

CAMPAIGN_PRIMES = [5, 7, 11, 13]
CAMPAIGN_DEGREE = 40


@pytest.fixture(scope="session")
def table_run():
    """Both table batches at the primary seed/parallelism, with rendered bytes."""
    rows100 = table(PRIMES_D100, 100, parallelism=2)
    rows60 = table(PRIMES_D60, 60, parallelism=2)
    rows = {(r.p, r.d): r for r in rows100 + rows60}
    rendered = render_table(rows100, "csv") + "\n" + render_table(rows60, "csv")
    return rows, rendered.encode()


@pytest.fixture(scope="session")
def campaign_run():
    verdicts, report = run_campaign(
        CAMPAIGN_PRIMES, CAMPAIGN_DEGREE, parallelism=2,
        want_verdict=True, want_lemmas=True,
    )
    return verdicts, report


def _campaign_bytes(verdicts, report) -> bytes:
    lines = [json.dumps(v.to_json_dict()) for v in verdicts]
    lines.append(json.dumps(report.to_json_dict(), sort_keys=True))
    return "\n".join(lines).encode()


# ------------------------------------------------------------ criterion 1


def test_criterion_1_mersenne_census():
    assert len(enumerate_primes(5, 100)) == 226
    assert len(enumerate_primes(5, 60)) == 138
    print("ACCEPTANCE 1 mersenne census: PASS (226 at d=100, 138 at d=60)")


# ------------------------------------------------------------ criterion 2


@pytest.mark.parametrize("p,d", sorted(REFERENCE_TABLE), ids=lambda v: str(v))
def test_criterion_2_table_reproduction(table_run, p, d):
    rows, _ = table_run
    expected, m_expected = REFERENCE_TABLE[(p, d)]
    row = rows[(p, d)]
    assert row.m_count == m_expected
    assert row.lambdas == expected, (
        f"reference row p={p}, d={d} reads {expected} but the computed counts are "
        f"{row.lambdas}; the computed values are certified independently "
        f"(test_table_companion_certified_values), so the reference cell itself "
        f"appears to undercount"
    )
    print(f"ACCEPTANCE 2 table row p={p} d={d}: PASS {row.lambdas}")


def test_table_companion_certified_values(table_run):
    """Not a numbered criterion: pins the certified values for the two rows
    where the reference table disagrees, and re-derives the membership by an
    implementation-independent parity argument.

    For deg(M) = k = ord_p(2), no factor of sigma(M^(p-1)) has degree < k,
    so the degree gap c is >= k, and c = k (set-1 membership) holds exactly
    when the number of degree-k factors is odd: in prod (P_i + 1), the
    omit-one terms of degree-k factors are the only contributions at top
    index k besides sigma(M^(p-1)) itself.
    """
    rows, _ = table_run
    assert rows[(53, 60)].lambdas == (4, 0, 4, 0)
    assert rows[(61, 60)].lambdas == (4, 2, 0, 0)

    def deg(x):
        return x.bit_length() - 1

    def pmod(a, m):
        dm, da = deg(m), deg(a)
        while da >= dm:
            a ^= m << (da - dm)
            da = deg(a)
        return a

    def pmul(a, b):
        acc = 0
        while b:
            if b & 1:
                acc ^= a
            a <<= 1
            b >>= 1
        return acc

    def pgcd(a, b):
        while b:
            a, b = b, pmod(a, b)
        return a

    def psq(a):
        r, i = 0, 0
        while a:
            if a & 1:
                r |= 1 << (2 * i)
            a >>= 1
            i += 1
        return r

    def degree_k_count(a, b, p, k):
        m = 1
        for _ in range(b):
            m = pmul(m, 3)
        m = 1 ^ (m << a)
        acc, pw = 1, 1
        for _ in range(p - 1):
            pw = pmul(pw, m)
            acc ^= pw
        h = pmod(2, acc)
        for i in range(1, k + 1):
            h = pmod(psq(h), acc)
            if i < k:
                assert pgcd(h ^ 2, acc) == 1  # no factor of degree < k
        g = pgcd(h ^ 2, acc)
        assert deg(g) % k == 0
        return deg(g) // k

    # odd degree-k factor counts certify the four extra members
    assert degree_k_count(3, 49, 53, 52) % 2 == 1
    assert degree_k_count(7, 45, 53, 52) % 2 == 1
    assert degree_k_count(1, 59, 61, 60) % 2 == 1
    assert degree_k_count(11, 49, 61, 60) % 2 == 1
    print("COMPANION table certified values: PASS (p=53 -> (4,0,4,0), p=61 -> (4,2,0,0))")


# ------------------------------------------------------------ criterion 3


def test_criterion_3_theorem_campaign(campaign_run):
    verdicts, _ = campaign_run
    assert len(verdicts) == len(CAMPAIGN_PRIMES) * len(
        enumerate_primes(5, CAMPAIGN_DEGREE)
    )
    violated = [v for v in verdicts if v.status == VIOLATED]
    assert violated == []
    n_holds = 0
    for v in verdicts:
        if v.status == EXCLUDED:
            continue
        assert v.status == HOLDS
        w = v.witness
        assert w is not None
        sigma_even = sigma_prime_power_of(v.mersenne, v.p)
        assert (sigma_even % w).bits == 0
        assert is_irreducible(w)
        assert recognize(w) is None
        n_holds += 1
    print(
        f"ACCEPTANCE 3 theorem campaign: PASS "
        f"({n_holds} holds with verified witnesses, 0 VIOLATED)"
    )


def sigma_prime_power_of(M, p):
    from gf2sigma.sigma_chain import sigma_prime_power

    return sigma_prime_power(M, p - 1)


# ------------------------------------------------------------ criterion 4


def test_criterion_4_factorization_oracle(irreducibles10):
    rng = random.Random(424242)
    for _ in range(2000):
        d = rng.randrange(1, 21)
        bits = rng.getrandbits(d) | (1 << d)
        fact = factor(Gf2Poly(bits))
        got = [(q.bits, mult) for q, mult in fact]
        assert got == O.factor_by_trial(bits, irreducibles10), bin(bits)
    print("ACCEPTANCE 4 factorization oracle: PASS (2000/2000 match trial division)")


# ------------------------------------------------------------ criterion 5


def _top0(poly, l):
    if l < 0 or l > poly.degree:
        return 0
    return poly.top_coeff(l)


def test_criterion_5_structural_suite(campaign_run, irreducibles10):
    _, report = campaign_run
    assert report.complete
    failures = report.failures()
    assert failures == [], [e.name for e in failures]

    rng = random.Random(515151)

    # degree drop of equal-degree sums
    for _ in range(1000):
        d = rng.randrange(1, 150)
        s = Gf2Poly(rng.getrandbits(d) | (1 << d))
        t = Gf2Poly(rng.getrandbits(d) | (1 << d))
        if s == t:
            continue
        least = next(l for l in range(d + 1) if s.top_coeff(l) != t.top_coeff(l))
        assert (s + t).degree == s.degree - least

    # top coefficients of skew-degree sums
    for _ in range(1000):
        ds = rng.randrange(2, 150)
        dt = rng.randrange(1, ds)
        s = Gf2Poly(rng.getrandbits(ds) | (1 << ds))
        t = Gf2Poly(rng.getrandbits(dt) | (1 << dt))
        l = rng.randrange(0, ds + 1)
        gap = ds - dt
        want = s.top_coeff(l) if l < gap else s.top_coeff(l) ^ _top0(t, l - gap)
        assert (s + t).top_coeff(l) == want

    # square criterion for equal-degree sums
    for _ in range(1000):
        d = rng.randrange(1, 120)
        s = Gf2Poly(rng.getrandbits(d) | (1 << d))
        t = Gf2Poly(rng.getrandbits(d) | (1 << d))
        parity = 1 if d % 2 == 0 else 0
        agree = all(
            s.top_coeff(eps) == t.top_coeff(eps) for eps in range(parity, d + 1, 2)
        )
        assert (s + t).is_square() == agree

    # top view of exponent-sum multiples (zero-padded form)
    for _ in range(1000):
        s = Gf2Poly(rng.getrandbits(60) | (1 << 60))
        k = rng.randrange(1, 5)
        rs = sorted(rng.sample(range(0, 50), k), reverse=True)
        prod = Gf2Poly(sum(1 << r for r in rs)) * s
        l = rng.randrange(0, prod.degree + 1)
        want = 0
        for r in rs:
            want ^= _top0(s, l - (rs[0] - r))
        assert prod.top_coeff(l) == want

    # sigma window when no small factor divides
    big = [b for b in irreducibles10 if b.bit_length() - 1 >= 6]
    for _ in range(1000):
        parts = rng.sample(big, rng.randrange(2, 4))
        s = ONE
        for b in parts:
            s = s * Gf2Poly(b)
        sig = sigma(s)
        for l in range(0, 6):
            assert sig.top_coeff(l) == s.top_coeff(l)

    # add involution
    for _ in range(1000):
        s = Gf2Poly(rng.getrandbits(rng.randrange(0, 513)))
        t = Gf2Poly(rng.getrandbits(rng.randrange(0, 513)))
        assert (s + t) + t == s

    vacuous = {
        name: e.vacuous for name, e in report.entries.items() if e.scope == "conditional"
    }
    all_mersenne_hits = max(
        (e.checked for name, e in report.entries.items() if e.scope == "conditional"),
        default=0,
    )
    print(
        "ACCEPTANCE 5 structural suite: PASS "
        f"(campaign entries all pass; conditional vacuity counts {vacuous}; "
        f"{all_mersenne_hits} antecedent-satisfied instances; "
        "5 algebraic lemmas x 1000 random tuples)"
    )


# ------------------------------------------------------------ criterion 6


def test_criterion_6_geometric_identity():
    from gf2sigma.sigma_chain import sigma_prime_power

    checked = 0
    for M in enumerate_primes(2, 40):
        for n in range(0, 31):
            assert (M.poly + ONE) * sigma_prime_power(M, n) == M.poly ** (n + 1) + ONE
            checked += 1
    print(f"ACCEPTANCE 6 geometric identity: PASS ({checked} bit-exact instances)")


# ------------------------------------------------------------ criterion 7


def test_criterion_7_determinism(table_run, campaign_run):
    _, primary_bytes = table_run
    rows100 = table(PRIMES_D100, 100, seed=0xBEEF, parallelism=3)
    rows60 = table(PRIMES_D60, 60, seed=0xBEEF, parallelism=3)
    rerun = (render_table(rows100, "csv") + "\n" + render_table(rows60, "csv")).encode()
    assert rerun == primary_bytes

    verdicts, report = campaign_run
    v2, r2 = run_campaign(
        CAMPAIGN_PRIMES, CAMPAIGN_DEGREE, seed=99991, parallelism=1,
        want_verdict=True, want_lemmas=True,
    )
    assert _campaign_bytes(v2, r2) == _campaign_bytes(verdicts, report)
    print(
        "ACCEPTANCE 7 determinism: PASS "
        "(table and campaign byte-identical across seeds and parallelism)"
    )
