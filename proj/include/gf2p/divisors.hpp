#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>

#include "gf2p/factor.hpp"
#include "gf2p/poly.hpp"

namespace gf2p {

/// Which divisor sum a perfection test compares against: sigma (all
/// divisors) or sigma* (unitary divisors).
enum class Mode { perfect, unitary };

std::string_view to_string(Mode m) noexcept;
/// Accepts "perfect"/"sigma" and "unitary"/"sigma_star". Throws std::invalid_argument.
Mode mode_from_string(std::string_view s);

/// Raised when a request exceeds a fixed cost guard (degree or split count).
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 1 + P + ... + P^n as (P^(n+1) + 1) / (P + 1).
Poly sigma_prime_power(const Poly& prime, unsigned n);
/// Same value by summing the n + 1 powers; used to cross-check the closed form.
Poly sigma_prime_power_by_sum(const Poly& prime, unsigned n);

Poly sigma(const Factorization& f);
Poly sigma_star(const Factorization& f);
/// Sum of all divisors. Throws std::domain_error on zero.
Poly sigma(const Poly& a, std::uint64_t seed = kDefaultSeed);
/// Sum of unitary divisors, i.e. the product of 1 + P^n over P^n || a.
Poly sigma_star(const Poly& a, std::uint64_t seed = kDefaultSeed);
Poly divisor_sum(const Poly& a, Mode mode, std::uint64_t seed = kDefaultSeed);

inline constexpr std::size_t kOracleMaxDegree = 24;

/// Literal sum over every divisor, enumerated as products of prime powers.
/// Throws BudgetError above kOracleMaxDegree.
Poly sigma_oracle(const Poly& a);
/// Literal sum over divisors d with gcd(d, a/d) = 1.
Poly unitary_sigma_oracle(const Poly& a);

/// m with prime^m || s. Throws std::domain_error if prime is reducible or s is zero.
unsigned exact_power(const Poly& prime, const Poly& s);

struct PowerMismatch {
    Poly prime;
    unsigned m1 = 0;  ///< exponent in the subject
    unsigned m2 = 0;  ///< exponent in its divisor sum

    friend bool operator==(const PowerMismatch&, const PowerMismatch&) = default;
};

struct PerfectionReport {
    Poly subject;
    Mode mode = Mode::perfect;
    bool verdict = false;
    /// Present exactly when verdict is false: a prime whose exact powers in
    /// the subject and in its divisor sum differ.
    std::optional<PowerMismatch> witness;
};

PerfectionReport check_perfection(const Poly& a, Mode mode, std::uint64_t seed = kDefaultSeed);
PerfectionReport is_perfect(const Poly& a, std::uint64_t seed = kDefaultSeed);
PerfectionReport is_unitary_perfect(const Poly& a, std::uint64_t seed = kDefaultSeed);

/// a divides sigma(a).
bool is_multiperfect(const Poly& a);

/// Divisible by x or x + 1. Throws std::domain_error on zero.
bool is_even_poly(const Poly& a);

inline constexpr std::size_t kMaxIndecomposableOmega = 20;

/// False iff a = u v with gcd(u, v) = 1, u and v nonconstant and both perfect
/// in `mode`. Throws std::domain_error if a itself is not perfect in `mode` and
/// BudgetError when omega(a) > kMaxIndecomposableOmega.
bool is_indecomposable(const Poly& a, Mode mode);

/// Non-square representative of the class of s under S ~ S^(2^l), moved by
/// bar when needed so that val_x <= val_{x+1} (ties keep the smaller of the
/// pair). Throws std::domain_error for constants.
Poly canonical_class_rep(const Poly& s);
/// One of s, t is a 2-power of the other.
bool same_class(const Poly& s, const Poly& t);

}  // namespace gf2p
