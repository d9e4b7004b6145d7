"""Exception-set membership and the per-prime count table.

The four exception sets are pinned by relations between the degree gap c,
the least odd top-coefficient mark m, and deg(M):

* set 1: c = deg(M)
* set 2: c = deg(M) + 1 with c odd
* set 3: c + m = deg(M) with c even
* set 4: c + m = deg(M) + 1 with c even and m >= 3

Membership flags are all false when the required quantity is absent
(deviation zero, or no odd mark exists).  Non-members are bucketed into
case tags I / II / III / IV-residual for the verification layer.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .factorize import DEFAULT_SEED
from .mersenne import enumerate_primes
from .sigma_chain import SigmaAnalysis, is_odd_prime

__all__ = [
    "CASE_I",
    "CASE_II",
    "CASE_III",
    "CASE_IV_RESIDUAL",
    "CASE_NOT_APPLICABLE",
    "ClassRecord",
    "TableRow",
    "classify",
    "classify_records",
    "table",
    "render_table",
]

log = logging.getLogger(__name__)

CASE_I = "I"
CASE_II = "II"
CASE_III = "III"
CASE_IV_RESIDUAL = "IV-residual"
CASE_NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class ClassRecord:
    analysis: SigmaAnalysis
    in_sigma1: bool
    in_sigma2: bool
    in_sigma3: bool
    in_sigma4: bool
    in_sigma: bool
    case_tag: str

    @property
    def flags(self) -> tuple[bool, bool, bool, bool]:
        return (self.in_sigma1, self.in_sigma2, self.in_sigma3, self.in_sigma4)

    def to_json_dict(self) -> dict:
        data = self.analysis.to_json_dict()
        data.update(
            in_sigma1=self.in_sigma1,
            in_sigma2=self.in_sigma2,
            in_sigma3=self.in_sigma3,
            in_sigma4=self.in_sigma4,
            in_sigma=self.in_sigma,
            case_tag=self.case_tag,
        )
        return data


def classify(analysis: SigmaAnalysis) -> ClassRecord:
    c = analysis.degree_gap
    m = analysis.least_odd_top
    d = analysis.mersenne.degree
    s1 = c is not None and c == d
    s2 = c is not None and c == d + 1 and c % 2 == 1
    s3 = c is not None and m is not None and c % 2 == 0 and c + m == d
    s4 = c is not None and m is not None and c % 2 == 0 and c + m == d + 1 and m >= 3
    in_sigma = s1 or s2 or s3 or s4
    if in_sigma or c is None:
        tag = CASE_NOT_APPLICABLE
    elif c >= d + 2:
        tag = CASE_I
    elif m is not None and c + m < d:
        tag = CASE_II
    elif m is not None and c < d < c + m:
        tag = CASE_III
    else:
        tag = CASE_IV_RESIDUAL
    return ClassRecord(analysis, s1, s2, s3, s4, in_sigma, tag)


@dataclass(frozen=True)
class TableRow:
    p: int
    d: int
    lambda1: int
    lambda2: int
    lambda3: int
    lambda4: int
    m_count: int

    @property
    def lambdas(self) -> tuple[int, int, int, int]:
        return (self.lambda1, self.lambda2, self.lambda3, self.lambda4)

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "d": self.d,
            "lambda1": self.lambda1,
            "lambda2": self.lambda2,
            "lambda3": self.lambda3,
            "lambda4": self.lambda4,
            "m_count": self.m_count,
        }


def classify_records(
    p: int,
    max_degree: int,
    *,
    seed: int = DEFAULT_SEED,
    parallelism: int = 1,
    cache_path=None,
    progress=None,
) -> list[ClassRecord]:
    """Class records for all Mersenne primes with 5 <= deg <= max_degree."""
    from ._engine import run_pairs

    if not (is_odd_prime(p) and p >= 5):
        raise ValueError("p must be a prime >= 5")
    if max_degree < 5:
        raise ValueError("max_degree must be >= 5")
    primes = enumerate_primes(5, max_degree)
    outcomes = run_pairs(
        [(M, p) for M in primes],
        seed=seed,
        parallelism=parallelism,
        cache_path=cache_path,
        want_verdict=False,
        want_lemmas=False,
        progress=progress,
    )
    errors = [o for o in outcomes if o.error]
    if errors:
        first = errors[0]
        raise RuntimeError(
            f"{len(errors)} instance(s) failed, first: "
            f"(a={first.a}, b={first.b}, p={first.p}): {first.error}"
        )
    return [o.record for o in outcomes]


def _check_conjugation_symmetry(p: int, records: list[ClassRecord]) -> None:
    by_pair = {
        (r.analysis.mersenne.a, r.analysis.mersenne.b): r.flags for r in records
    }
    for (a, b), flags in by_pair.items():
        if by_pair.get((b, a)) != flags:
            log.warning(
                "conjugation asymmetry finding: p=%d (a=%d,b=%d) flags %s "
                "but (a=%d,b=%d) flags %s",
                p, a, b, flags, b, a, by_pair.get((b, a)),
            )


def table(
    p_values: list[int],
    max_degree: int,
    *,
    seed: int = DEFAULT_SEED,
    parallelism: int = 1,
    cache_path=None,
    progress=None,
) -> list[TableRow]:
    """One row of exception-set counts per prime, over degrees 5..max_degree."""
    from ._engine import run_pairs

    for p in p_values:
        if not (is_odd_prime(p) and p >= 5):
            raise ValueError(f"table requires primes >= 5, got {p}")
    if max_degree < 5:
        raise ValueError("max_degree must be >= 5")
    primes = enumerate_primes(5, max_degree)
    m_count = len(primes)
    pairs = [(M, p) for p in p_values for M in primes]
    outcomes = run_pairs(
        pairs,
        seed=seed,
        parallelism=parallelism,
        cache_path=cache_path,
        want_verdict=False,
        want_lemmas=False,
        progress=progress,
    )
    errors = [o for o in outcomes if o.error]
    if errors:
        first = errors[0]
        raise RuntimeError(
            f"{len(errors)} instance(s) failed, first: "
            f"(a={first.a}, b={first.b}, p={first.p}): {first.error}"
        )
    rows = []
    for p in p_values:
        records = [o.record for o in outcomes if o.p == p]
        _check_conjugation_symmetry(p, records)
        counts = [0, 0, 0, 0]
        for rec in records:
            for j, flag in enumerate(rec.flags):
                counts[j] += flag
        rows.append(TableRow(p, max_degree, *counts, m_count))
    return rows


def render_table(rows: list[TableRow], fmt: str = "text") -> str:
    """Render rows with the fixed column order p, d, lambda1..lambda4, m_count."""
    header = ["p", "d", "lambda1", "lambda2", "lambda3", "lambda4", "m_count"]
    cells = [
        [str(v) for v in (r.p, r.d, *r.lambdas, r.m_count)] for r in rows
    ]
    if fmt == "csv":
        return "\n".join([",".join(header)] + [",".join(row) for row in cells])
    if fmt == "json":
        import json

        return json.dumps([r.to_json_dict() for r in rows], indent=2)
    if fmt == "markdown":
        lines = [
            "| " + " | ".join(header) + " |",
            "|" + "|".join("---" for _ in header) + "|",
        ]
        lines += ["| " + " | ".join(row) + " |" for row in cells]
        return "\n".join(lines)
    if fmt == "text":
        widths = [
            max(len(header[i]), *(len(row[i]) for row in cells)) if cells else len(header[i])
            for i in range(len(header))
        ]
        lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
        lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
        return "\n".join(lines)
    raise ValueError(f"unknown format {fmt!r}")
