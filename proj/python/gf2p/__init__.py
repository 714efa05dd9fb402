"""Perfect and unitary perfect polynomials over GF(2)."""

from ._gf2p import (
    DEFAULT_SEED,
    BudgetError,
    ParseError,
    Poly,
    canonical_class_rep,
    catalog,
    factorize,
    is_irreducible,
    is_perfect,
    is_unitary_perfect,
    mersenne_primes,
    parse,
    run_all,
    search,
    sigma,
    sigma_star,
)

__all__ = [
    "DEFAULT_SEED",
    "BudgetError",
    "ParseError",
    "Poly",
    "canonical_class_rep",
    "catalog",
    "factorize",
    "is_irreducible",
    "is_perfect",
    "is_unitary_perfect",
    "mersenne_primes",
    "parse",
    "run_all",
    "search",
    "sigma",
    "sigma_star",
]
