#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf2p/poly.hpp"

namespace gf2p {

/// Seed for the randomized equal-degree splitting step. Factorizations are
/// canonical regardless of the seed; the seed only changes the work done.
inline constexpr std::uint64_t kDefaultSeed = 0x6a09e667f3bcc909ULL;

struct PrimePower {
    Poly prime;
    unsigned mult = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Complete factorization into distinct irreducibles, sorted by
/// (degree, coefficient mask).
struct Factorization {
    Poly original;
    std::vector<PrimePower> factors;

    std::size_t omega() const noexcept { return factors.size(); }
    /// Multiplicity of `prime` (0 when absent).
    unsigned multiplicity(const Poly& prime) const noexcept;
    Poly product() const;
};

/// Rabin's test: x^(2^n) = x mod p and gcd(x^(2^(n/q)) - x, p) = 1 for every
/// prime q | n. Throws std::domain_error for constant input.
bool is_irreducible(const Poly& p);

/// Square-free decomposition, distinct-degree splitting, then Cantor-Zassenhaus
/// equal-degree splitting with the trace map. Throws std::domain_error on zero.
Factorization factorize(const Poly& p, std::uint64_t seed = kDefaultSeed);

/// Pieces of the pipeline, exposed for testing.
/// Square-free parts: (square-free poly, multiplicity) with pairwise coprime parts.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& p);
/// Distinct-degree factorization of a square-free poly: (product of all its
/// degree-d irreducible factors, d).
std::vector<std::pair<Poly, std::size_t>> distinct_degree_factorization(const Poly& p);
/// Splits a square-free product of irreducibles of degree d.
std::vector<Poly> equal_degree_factorization(const Poly& p, std::size_t d, std::uint64_t seed);

std::size_t omega(const Poly& p);
bool is_squarefree(const Poly& p);

/// Number of irreducible polynomials of degree m (necklace formula), 1 <= m <= 64.
std::uint64_t count_irreducibles(std::uint64_t m);
std::uint64_t euler_phi(std::uint64_t m);

struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Multiplicative order of x modulo an irreducible p equals 2^deg - 1.
/// Throws std::domain_error for reducible input and UnsupportedError when
/// 2^deg - 1 exceeds 64 bits.
bool is_primitive(const Poly& p);

/// "x^4*(x+1)^2*(x^2+x+1)"; "1" for an empty factorization.
std::string format_factorization(const Factorization& f);

}  // namespace gf2p
