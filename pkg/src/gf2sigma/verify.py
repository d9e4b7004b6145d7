"""Machine checks of the divisor-sum chain's structural facts and the main theorem.

Verdicts: a pair is ``excluded`` when the Mersenne prime lies in an
exception set, ``holds`` when some irreducible factor of sigma(M^(p-1))
fails the Mersenne-form test (the witness is re-verified from scratch:
divides, irreducible, non-Mersenne), and ``VIOLATED`` otherwise.  VIOLATED
contradicts a proved statement, so campaigns treat it as a hard failure.

Lemma checks come in three groups:

* unconditional coefficient bookkeeping, asserted on every analyzed pair
  (the squarefree and non-Mersenne facts only for deg(M) >= 5, their
  stated range);
* conditional facts whose antecedent is ``all factors Mersenne``; the
  split-exponent group needs nothing else, while the deviation/residual
  group also needs p >= 5 and deg(M) >= 5 (its proof uses 2h - 2 >= 2 --
  at p = 3 the claim "M^(2h-1) + deviation is not a square" genuinely
  fails, e.g. for exponents (1, 2));
* the case lemmas, gated on their case hypotheses plus an even degree gap.
  The even-gap clause is part of the hypotheses: the odd mark m is only
  defined through the deviation lemma when deg(deviation) is even, and
  live data does contain odd-gap instances below the case-II threshold.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import CASE_IV_RESIDUAL, ClassRecord
from .factorize import DEFAULT_SEED, is_irreducible, is_squarefree
from .gf2poly import Gf2Poly
from .mersenne import MersennePrime, enumerate_primes, recognize
from .sigma_chain import SigmaAnalysis, is_odd_prime

__all__ = [
    "EXCLUDED",
    "HOLDS",
    "VIOLATED",
    "TheoremVerdict",
    "VerificationError",
    "LemmaEntry",
    "LemmaReport",
    "check_theorem",
    "check_structural_lemmas",
    "check_case_lemmas",
    "run_campaign",
]

EXCLUDED = "excluded"
HOLDS = "holds"
VIOLATED = "VIOLATED"

_MAX_COUNTEREXAMPLES = 20


class VerificationError(RuntimeError):
    """An internal claim failed re-verification (indicates an implementation bug)."""


@dataclass(frozen=True)
class TheoremVerdict:
    mersenne: MersennePrime
    p: int
    status: str
    witness: Gf2Poly | None

    def to_json_dict(self) -> dict:
        return {
            "a": self.mersenne.a,
            "b": self.mersenne.b,
            "p": self.p,
            "status": self.status,
            "witness": self.witness.to_hex() if self.witness is not None else None,
        }


@dataclass
class LemmaEntry:
    name: str
    scope: str  # "unconditional" | "conditional"
    checked: int = 0
    failed: int = 0
    vacuous: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def outcome(self) -> str:
        if self.failed:
            return "fail"
        if self.checked:
            return "pass"
        return "vacuous"


class LemmaReport:
    """Aggregated per-lemma outcomes; failures carry full counterexample records."""

    def __init__(self):
        self.entries: dict[str, LemmaEntry] = {}
        self.errors: list[tuple[int, int, int, str]] = []  # (a, b, p, message)

    def record(self, name: str, scope: str, ok: bool | None, context: dict | None = None):
        entry = self.entries.setdefault(name, LemmaEntry(name, scope))
        if ok is None:
            entry.vacuous += 1
        else:
            entry.checked += 1
            if not ok:
                entry.failed += 1
                if len(entry.counterexamples) < _MAX_COUNTEREXAMPLES:
                    entry.counterexamples.append(context or {})

    def merge(self, other: "LemmaReport") -> None:
        for name, entry in other.entries.items():
            mine = self.entries.setdefault(name, LemmaEntry(name, entry.scope))
            mine.checked += entry.checked
            mine.failed += entry.failed
            mine.vacuous += entry.vacuous
            room = _MAX_COUNTEREXAMPLES - len(mine.counterexamples)
            if room > 0:
                mine.counterexamples.extend(entry.counterexamples[:room])
        self.errors.extend(other.errors)

    @property
    def all_pass(self) -> bool:
        return not self.errors and all(e.outcome != "fail" for e in self.entries.values())

    @property
    def complete(self) -> bool:
        return not self.errors

    def failures(self) -> list[LemmaEntry]:
        return [e for e in self.entries.values() if e.outcome == "fail"]

    def lines(self) -> list[str]:
        out = []
        for name in sorted(self.entries):
            e = self.entries[name]
            line = (
                f"{e.outcome.upper():7s} {name} [{e.scope}] "
                f"checked={e.checked} vacuous={e.vacuous}"
            )
            if e.failed:
                line += f" failed={e.failed}"
            out.append(line)
        for a, b, p, msg in self.errors:
            out.append(f"ERROR   (a={a}, b={b}, p={p}): {msg}")
        return out

    def to_json_dict(self) -> dict:
        return {
            "entries": {
                name: {
                    "scope": e.scope,
                    "outcome": e.outcome,
                    "checked": e.checked,
                    "vacuous": e.vacuous,
                    "failed": e.failed,
                    "counterexamples": e.counterexamples,
                }
                for name, e in sorted(self.entries.items())
            },
            "errors": [
                {"a": a, "b": b, "p": p, "message": msg} for a, b, p, msg in self.errors
            ],
            "all_pass": self.all_pass,
        }


def check_theorem(analysis: SigmaAnalysis, record: ClassRecord) -> TheoremVerdict:
    """Verdict for one pair; the witness is the least non-Mersenne factor."""
    if record.in_sigma:
        return TheoremVerdict(analysis.mersenne, analysis.p, EXCLUDED, None)
    for poly, _ in analysis.factorization:
        if recognize(poly) is None:
            if (analysis.sigma_even % poly):
                raise VerificationError("witness does not divide sigma(M^(p-1))")
            if not is_irreducible(poly):
                raise VerificationError("witness is not irreducible")
            return TheoremVerdict(analysis.mersenne, analysis.p, HOLDS, poly)
    return TheoremVerdict(analysis.mersenne, analysis.p, VIOLATED, None)


def _context(analysis: SigmaAnalysis, **extra) -> dict:
    data = {
        "a": analysis.mersenne.a,
        "b": analysis.mersenne.b,
        "p": analysis.p,
        "c": analysis.degree_gap,
        "m": analysis.least_odd_top,
        "e": analysis.least_even_top,
        "all_mersenne": analysis.all_mersenne,
        "w_zero": analysis.deviation_zero,
    }
    data.update(extra)
    return data


def check_structural_lemmas(analysis: SigmaAnalysis) -> LemmaReport:
    """Run the full structural suite on one analyzed pair."""
    rep = LemmaReport()
    M = analysis.mersenne
    b, h = M.b, analysis.h
    d = M.degree
    se = analysis.sigma_even
    so = analysis.sigma_odd
    u = analysis.double_sigma
    w = analysis.deviation
    r = analysis.residual
    c = analysis.degree_gap
    m = analysis.least_odd_top
    ctx = lambda **kw: _context(analysis, **kw)

    power_odd = M.poly ** (2 * h - 1)  # M^(2h-1)
    power_even = power_odd * M.poly  # M^(2h)
    power_sum = power_even + power_odd

    big_enough = d >= 5  # the squarefree / non-Mersenne facts are stated for deg >= 5

    sqfree = is_squarefree(se) and analysis.factorization.is_squarefree
    rep.record(
        "sigma_even_squarefree",
        "unconditional",
        sqfree if big_enough else None,
        ctx(),
    )
    is_mersenne_shape = (
        analysis.factorization.omega == 1
        and analysis.factorization.factors[0][1] == 1
        and recognize(analysis.factorization.factors[0][0]) is not None
    )
    rep.record(
        "sigma_even_not_mersenne_prime",
        "unconditional",
        (not is_mersenne_shape) if big_enough else None,
        ctx(),
    )

    low = all(se.top_coeff(l) == power_even.top_coeff(l) for l in range(1, d))
    high = all(
        se.top_coeff(l) == power_sum.top_coeff(l) for l in range(d, 2 * d)
    )
    rep.record("sigma_even_low_window", "unconditional", low, ctx())
    rep.record("sigma_even_high_window", "unconditional", high, ctx())

    rep.record("even_power_is_square", "unconditional", power_even.is_square(), ctx())
    rep.record(
        "odd_power_first_top_when_b_odd",
        "unconditional",
        power_odd.top_coeff(1) == 1 if b % 2 == 1 else None,
        ctx(),
    )

    if d % 2 == 1:
        rep.record(
            "power_sum_top_at_degree",
            "unconditional",
            power_sum.top_coeff(d) == 1,
            ctx(),
        )
        rep.record("sigma_odd_first_top", "unconditional", None)
    else:
        rep.record(
            "power_sum_top_at_degree",
            "unconditional",
            power_sum.top_coeff(d + 1) == 1,
            ctx(),
        )
        rep.record(
            "sigma_odd_first_top", "unconditional", so.top_coeff(1) == 1, ctx()
        )

    # the degree gap is the least top-index where double_sigma and
    # sigma_even + 1 disagree (the +1 only matters at index deg)
    if c is not None:
        deg = se.degree
        scan = None
        for l in range(0, deg + 1):
            lhs = u.top_coeff(l)
            rhs = se.top_coeff(l) ^ (1 if l == deg else 0)
            if lhs != rhs:
                scan = l
                break
        rep.record("gap_is_least_top_mismatch", "unconditional", scan == c, ctx(scan=scan))
        rep.record("gap_positive", "unconditional", c >= 1, ctx())
    else:
        rep.record("gap_is_least_top_mismatch", "unconditional", None)
        rep.record("gap_positive", "unconditional", None)

    rep.record(
        "residual_decomposition",
        "unconditional",
        r.bits == u.bits ^ 1 ^ power_even.bits,
        ctx(),
    )
    rep.record(
        "degree_chain",
        "unconditional",
        se.degree == 2 * h * d and u.degree == se.degree,
        ctx(),
    )

    # conditional group: antecedent is "every factor is a Mersenne prime"
    am = analysis.all_mersenne
    rep.record(
        "split_exponent_sums_even",
        "conditional",
        (analysis.sum_a % 2 == 0 and analysis.sum_b % 2 == 0) if am else None,
        ctx(),
    )
    if am:
        # double_sigma should be exactly x^sum_a (x+1)^sum_b
        split_form = (Gf2Poly(3) ** analysis.sum_b).bits << analysis.sum_a
        rep.record("double_sigma_splits", "conditional", u.bits == split_form, ctx())
        rep.record("double_sigma_square", "conditional", u.is_square(), ctx())
    else:
        rep.record("double_sigma_splits", "conditional", None)
        rep.record("double_sigma_square", "conditional", None)

    deep = am and analysis.in_theorem_scope  # proofs here need p >= 5 and deg >= 5
    rep.record(
        "deviation_nonzero_nonsquare",
        "conditional",
        (bool(w) and not w.is_square()) if deep else None,
        ctx(),
    )
    rep.record(
        "residual_square", "conditional", r.is_square() if deep else None, ctx()
    )
    rep.record(
        "odd_power_plus_deviation_nonsquare",
        "conditional",
        (not (power_odd + w).is_square()) if deep else None,
        ctx(),
    )
    if deep and c is not None:
        low_gap = (c % 2 == 0) if c < d else True
        high_gap = (d % 2 == 0) if c > d else True
        rep.record("gap_parity_vs_degree", "conditional", low_gap and high_gap, ctx())
        ok = True
        if c == d + 1:
            ok = ok and c % 2 == 1
        if m is not None and c + m == d:
            ok = ok and c % 2 == 0
        if m is not None and c + m == d + 1 and m >= 3:
            ok = ok and c % 2 == 0
        rep.record("gap_parity_special_cases", "conditional", ok, ctx())
    else:
        rep.record("gap_parity_vs_degree", "conditional", None)
        rep.record("gap_parity_special_cases", "conditional", None)
    return rep


def check_case_lemmas(analysis: SigmaAnalysis, record: ClassRecord) -> LemmaReport:
    """Coefficient facts for the non-member case split, under their hypotheses.

    Cases II and III additionally require an even degree gap: that is where
    the odd mark m is defined (deg(deviation) even), exactly as each case
    derivation sets up.
    """
    rep = LemmaReport()
    d = analysis.mersenne.degree
    c = analysis.degree_gap
    m = analysis.least_odd_top
    u = analysis.double_sigma
    r = analysis.residual
    ctx = lambda **kw: _context(analysis, **kw)

    if c is not None and c >= d + 2:
        if d % 2 == 1:
            ok = u.top_coeff(d) == 1
        else:
            ok = u.top_coeff(d + 1) == 1
        rep.record("case1_double_sigma_top", "unconditional", ok, ctx())
    else:
        rep.record("case1_double_sigma_top", "unconditional", None)

    gap_even = c is not None and m is not None and c % 2 == 0

    if gap_even and c + m < d:
        ok = (c + m) % 2 == 1 and u.top_coeff(c + m) == 1
        rep.record("case2_double_sigma_top", "unconditional", ok, ctx())
    else:
        rep.record("case2_double_sigma_top", "unconditional", None)

    if gap_even and c < d < c + m and d % 2 == 1:
        rep.record(
            "case3_residual_top_odd_degree",
            "unconditional",
            r.top_coeff(d - c) == 1,
            ctx(),
        )
    else:
        rep.record("case3_residual_top_odd_degree", "unconditional", None)

    if gap_even and c < d and c + m > d + 1 and d % 2 == 0:
        rep.record(
            "case3_residual_top_even_degree",
            "unconditional",
            r.top_coeff(d - c + 1) == 1,
            ctx(),
        )
    else:
        rep.record("case3_residual_top_even_degree", "unconditional", None)

    # the case split leaves a residual bucket open; those instances are
    # legitimate data, counted here rather than treated as failures
    rep.record(
        "case4_residual_observed",
        "unconditional",
        True if record.case_tag == CASE_IV_RESIDUAL else None,
    )
    return rep


def run_campaign(
    p_values: list[int],
    max_degree: int,
    seed: int = DEFAULT_SEED,
    *,
    parallelism: int = 1,
    cache_path=None,
    want_verdict: bool = True,
    want_lemmas: bool = True,
    progress=None,
) -> tuple[list[TheoremVerdict], LemmaReport]:
    """Exhaustive run over enumerate(5, max_degree) x p_values.

    Per-instance computational errors are collected on the report (the
    campaign keeps going) and render the result incomplete.
    """
    from ._engine import run_pairs

    for p in p_values:
        if not (is_odd_prime(p) and p >= 5):
            raise ValueError(f"campaigns require primes >= 5, got {p}")
    if not p_values:
        return [], LemmaReport()
    primes = enumerate_primes(5, max_degree)
    pairs = [(M, p) for p in p_values for M in primes]
    outcomes = run_pairs(
        pairs,
        seed=seed,
        parallelism=parallelism,
        cache_path=cache_path,
        want_verdict=want_verdict,
        want_lemmas=want_lemmas,
        progress=progress,
    )
    verdicts = []
    report = LemmaReport()
    for out in outcomes:
        if out.error:
            report.errors.append((out.a, out.b, out.p, out.error))
            continue
        if out.verdict is not None:
            verdicts.append(out.verdict)
        if out.structural is not None:
            report.merge(out.structural)
        if out.cases is not None:
            report.merge(out.cases)
    return verdicts, report
