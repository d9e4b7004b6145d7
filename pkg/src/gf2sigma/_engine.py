"""Shared per-pair computation engine for tables and campaigns.

Each (Mersenne prime, p) pair is independent, so batches fan out over a
process pool; results are merged in canonical (p, degree, a) order, which
keeps every rendering byte-identical across parallelism levels and seeds.
"""

from __future__ import annotations

from dataclasses import dataclass
from multiprocessing import get_context

from .classify import ClassRecord, classify
from .factorize import DEFAULT_SEED
from .mersenne import MersennePrime
from .sigma_chain import FactorCache, analyze

__all__ = ["PairOutcome", "run_pairs"]


@dataclass(frozen=True)
class PairOutcome:
    a: int
    b: int
    p: int
    analysis: object | None = None
    record: ClassRecord | None = None
    verdict: object | None = None
    structural: object | None = None
    cases: object | None = None
    error: str | None = None


def _compute_pair(task) -> PairOutcome:
    M, p, seed, want_verdict, want_lemmas, hint = task
    try:
        an = analyze(M, p, seed, factor_hint=hint)
        rec = classify(an)
        verdict = structural = cases = None
        if want_verdict or want_lemmas:
            from . import verify as _verify

            if want_verdict:
                verdict = _verify.check_theorem(an, rec)
            if want_lemmas:
                structural = _verify.check_structural_lemmas(an)
                cases = _verify.check_case_lemmas(an, rec)
        return PairOutcome(M.a, M.b, p, an, rec, verdict, structural, cases)
    except Exception as exc:  # campaign continues; the error is surfaced per-instance
        return PairOutcome(M.a, M.b, p, error=f"{type(exc).__name__}: {exc}")


def run_pairs(
    pairs: list[tuple[MersennePrime, int]],
    *,
    seed: int = DEFAULT_SEED,
    parallelism: int = 1,
    cache_path=None,
    want_verdict: bool = False,
    want_lemmas: bool = False,
    progress=None,
) -> list[PairOutcome]:
    cache = FactorCache(cache_path) if cache_path else None
    tasks = []
    for M, p in pairs:
        hint = cache.get(M.a, M.b, p) if cache else None
        tasks.append((M, p, seed, want_verdict, want_lemmas, hint))

    outcomes = []
    if parallelism <= 1 or len(tasks) <= 1:
        for i, task in enumerate(tasks):
            outcomes.append(_compute_pair(task))
            if progress:
                progress(i + 1, len(tasks))
    else:
        # tasks vary wildly in cost; scatter them so workers stay busy
        order = sorted(range(len(tasks)), key=lambda i: (tasks[i][1] * (tasks[i][0].degree)), reverse=True)
        scattered = [tasks[i] for i in order]
        with get_context("fork").Pool(parallelism) as pool:
            done = 0
            for outcome in pool.imap_unordered(_compute_pair, scattered, chunksize=1):
                outcomes.append(outcome)
                done += 1
                if progress:
                    progress(done, len(tasks))

    outcomes.sort(key=lambda o: (o.p, o.a + o.b, o.a))
    if cache:
        for out in outcomes:
            if out.analysis is not None:
                cache.put(out.a, out.b, out.p, out.analysis.factorization)
        cache.save()
    return outcomes
