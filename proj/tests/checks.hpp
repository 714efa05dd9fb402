#pragma once

// Randomized and exhaustive checks shared by the property suite and the
// acceptance runner. Each returns nullopt on success, else a description of
// the first counterexample.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gf2p/poly.hpp"

namespace gf2p::checks {

using Outcome = std::optional<std::string>;

Outcome ring_axioms(std::mt19937_64& rng, unsigned trials, std::size_t max_deg);
Outcome clmul_matches_schoolbook(std::mt19937_64& rng, unsigned trials, std::size_t max_deg);
Outcome division_reconstruction(std::mt19937_64& rng, unsigned trials, std::size_t max_deg);
Outcome frobenius(std::mt19937_64& rng, std::size_t max_deg);
Outcome bar_homomorphism(std::mt19937_64& rng, unsigned trials, std::size_t max_deg);

/// sigma and sigma* against divisor enumeration on every nonzero polynomial of degree <= max_deg.
Outcome oracle_agreement_exhaustive(std::size_t max_deg);
Outcome oracle_agreement_random(std::mt19937_64& rng, unsigned trials, std::size_t max_deg);
Outcome multiplicativity(std::mt19937_64& rng, unsigned trials, std::size_t max_deg);

/// Product of factors equals the input and every factor is irreducible.
Outcome factorization_reconstruction(std::mt19937_64& rng, unsigned trials, std::size_t max_deg,
                                     bool check_irreducible);

/// The six sigma / sigma* tables for x^a, (x+1)^b and M2, M2bar with exponents built from n <= max_n.
Outcome divisor_sum_tables(unsigned max_n);
/// sigma*(S^(2^n u)) = (1+S)^(2^n) sigma(S^(u-1))^(2^n) for random irreducible S, n <= 4, odd u <= 9.
Outcome unitary_prime_power_identity(std::mt19937_64& rng, unsigned trials);

/// Every unitary perfect C in `hits`: bar(C) and C^(2^r), r <= 3, are unitary perfect and C is even.
Outcome unitary_closure(const std::vector<Poly>& hits);

Poly random_irreducible(std::mt19937_64& rng, std::size_t deg);

}  // namespace gf2p::checks
