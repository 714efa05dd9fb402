#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gf2p/divisors.hpp"
#include "gf2p/factor.hpp"

namespace gf2p {

enum class Family { mersenne_restricted, all };
std::string_view to_string(Family f) noexcept;
Family family_from_string(std::string_view s);

inline constexpr unsigned kBruteForceGuard = 18;

struct SearchConfig {
    unsigned max_degree = 2;
    Mode mode = Mode::perfect;
    Family family = Family::mersenne_restricted;
    std::uint64_t seed = kDefaultSeed;
    /// Unitary mode only: keep every 2-power instead of one class representative.
    bool all_powers = false;
    unsigned jobs = 1;
    unsigned guard = kBruteForceGuard;
};

struct SearchResult {
    Poly poly;
    PerfectionReport report;
};

/// Every (unitary) perfect x^a (x+1)^b prod P_i^h_i of degree <= max_degree
/// whose odd primes are Mersenne primes. A divisor sum part sigma(P^h) that
/// has a prime factor outside {x, x+1, Mersenne} is never used, and a prime no
/// usable part can produce is never used either. Results are sorted; unitary
/// hits collapse to canonical class representatives unless all_powers is set.
/// Throws std::invalid_argument for family = all or max_degree < 2.
std::vector<SearchResult> search_structured(const SearchConfig& cfg);

/// Tests every polynomial of degree 1..max_degree. Throws std::invalid_argument
/// for family = mersenne_restricted and BudgetError past cfg.guard.
std::vector<Poly> search_bruteforce(const SearchConfig& cfg);

struct HitClass {
    Poly rep;
    std::vector<Poly> members;
    Factorization factors;
    /// "T3", "B7", ... when the representative is (the class of) a catalog entry.
    std::optional<std::string> catalog_name;
    /// (x^2+x)^(2^n-1) in perfect mode, the class of x^2+x in unitary mode.
    bool trivial = false;
    bool indecomposable = true;
    /// Every odd prime factor is a Mersenne prime.
    bool mersenne_only = true;
};

struct HitReport {
    Mode mode = Mode::perfect;
    std::vector<HitClass> classes;
    /// Mersenne-only, nontrivial classes missing from the catalog. Nonempty
    /// means the classification is contradicted.
    std::vector<Poly> outside_catalog;
    /// Classes with a non-Mersenne odd prime.
    std::vector<Poly> outside_scope;
};

/// Groups hits into classes (2-power classes up to bar in unitary mode,
/// singletons in perfect mode) and flags them against the catalog.
HitReport classify_hits(const std::vector<Poly>& hits, Mode mode, std::uint64_t seed = kDefaultSeed);

}  // namespace gf2p
