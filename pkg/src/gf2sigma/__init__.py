"""gf2sigma: polynomials over GF(2), Mersenne prime polynomials, and their
divisor-sum chains.

The package is organized bottom-up:

* :mod:`gf2sigma.gf2poly`: dense bit-vector arithmetic (Gf2Poly);
* :mod:`gf2sigma.factorize`: irreducibility, factorization, sigma;
* :mod:`gf2sigma.mersenne`: the 1 + x^a (x+1)^b irreducibles;
* :mod:`gf2sigma.sigma_chain`: per (M, p) derived quantities;
* :mod:`gf2sigma.classify`: exception sets and the count table;
* :mod:`gf2sigma.verify`: theorem and lemma verification campaigns;
* :mod:`gf2sigma.cli`: the ``gf2sigma`` command.
"""

from .gf2poly import (
    ONE,
    X,
    ZERO,
    Gf2ParseError,
    Gf2Poly,
    divrem,
    gcd,
    parse,
    powmod_frobenius,
)
from .factorize import (
    DEFAULT_SEED,
    Factorization,
    FactorizationError,
    factor,
    is_irreducible,
    is_squarefree,
    omega,
    sigma,
)
from .mersenne import (
    MersennePrime,
    NotIrreducibleError,
    build,
    conjugate,
    enumerate_primes,
    is_mersenne_prime,
    mersenne_form,
    recognize,
)
from .sigma_chain import FactorCache, SigmaAnalysis, analyze, sigma_prime_power
from .classify import (
    ClassRecord,
    TableRow,
    classify,
    classify_records,
    render_table,
    table,
)
from .verify import (
    EXCLUDED,
    HOLDS,
    VIOLATED,
    LemmaReport,
    TheoremVerdict,
    check_case_lemmas,
    check_structural_lemmas,
    check_theorem,
    run_campaign,
)

__version__ = "0.1.0"

__all__ = [
    "ZERO", "ONE", "X",
    "Gf2Poly", "Gf2ParseError", "parse", "divrem", "gcd", "powmod_frobenius",
    "DEFAULT_SEED", "Factorization", "FactorizationError",
    "factor", "is_irreducible", "is_squarefree", "omega", "sigma",
    "MersennePrime", "NotIrreducibleError", "mersenne_form", "build",
    "recognize", "is_mersenne_prime", "conjugate", "enumerate_primes",
    "SigmaAnalysis", "FactorCache", "analyze", "sigma_prime_power",
    "ClassRecord", "TableRow", "classify", "classify_records", "table",
    "render_table",
    "EXCLUDED", "HOLDS", "VIOLATED", "TheoremVerdict", "LemmaReport",
    "check_theorem", "check_structural_lemmas", "check_case_lemmas",
    "run_campaign",
    "__version__",
]
