#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gf2p/factor.hpp"
#include "gf2p/mersenne.hpp"

namespace gf2p {

enum class Verdict { pass, fail, out_of_scope };
std::string_view to_string(Verdict v) noexcept;

/// Outcome of one mechanical check of a claim about sigma(M^(2h)) and friends.
/// params and witness are JSON objects with sorted keys, so a report
/// serializes identically on every run with the same inputs.
struct TheoremReport {
    std::string claim_id;
    nlohmann::json params = nlohmann::json::object();
    Verdict verdict = Verdict::out_of_scope;
    nlohmann::json witness = nlohmann::json::object();
};

/// Claim identifiers, in the order run_all emits them.
namespace claim {
inline constexpr std::string_view kNonMersenneDivisor = "sigma-even-power-non-mersenne";
inline constexpr std::string_view kSplitSquare = "double-sigma-split-square";
inline constexpr std::string_view kDivisorReduction = "divisor-reduction";
inline constexpr std::string_view kLeadingCoefficients = "leading-coefficients";
inline constexpr std::string_view kAlpha3M2 = "alpha3-m2";
inline constexpr std::string_view kAlpha3U2 = "alpha3-u2";
inline constexpr std::string_view kDegreeMDivisors = "degree-m-divisors";
inline constexpr std::string_view kOrderDividesDegree = "order-divides-degree";
inline constexpr std::string_view kIrreducibleCount = "irreducible-count-bounds";
inline constexpr std::string_view kNoMersenneDegree8k = "no-mersenne-degree-8k";
inline constexpr std::string_view kDeltaFermat = "delta-fermat";
}  // namespace claim

/// Every claim id run_all knows about.
const std::vector<std::string_view>& known_claims();

struct VerifyOptions {
    /// Largest deg(M^(2h)) a checker will expand.
    std::size_t max_degree = 2048;
    std::uint64_t seed = kDefaultSeed;
    unsigned jobs = 1;
    /// Restrict run_all to one claim id.
    std::optional<std::string> claim;
};

/// Does the non-Mersenne-divisor claim cover (M, h)? Either M is one of the
/// five small Mersenne primes (M2 and its bar need h >= 2), or M is outside
/// that set and 2h + 1 has a prime factor in Delta other than 7.
bool non_mersenne_hypotheses_hold(const MersennePrime& m, unsigned h);

/// Factors sigma(M^(2h)), checks it is square-free and classifies every prime
/// factor; pass iff a non-Mersenne factor exists, out_of_scope outside the
/// hypotheses. Throws BudgetError past opts.max_degree.
TheoremReport check_sigma_even_power(const MersennePrime& m, unsigned h, const VerifyOptions& opts = {});

/// U = sigma(sigma(M^(2h))). When every factor of sigma(M^(2h)) is a Mersenne
/// prime, U must be x^u (x+1)^v with u, v even; when sigma(M^(2h)) is
/// irreducible, U must not be a square. Otherwise out_of_scope with the
/// concrete shape of U attached.
TheoremReport check_U_split_square(const MersennePrime& m, unsigned h, const VerifyOptions& opts = {});

/// sigma(M^(k-1)) divides sigma(M^(2h)). Throws std::invalid_argument unless k | 2h + 1.
TheoremReport check_p_reduction(const MersennePrime& m, unsigned h, unsigned k, const VerifyOptions& opts = {});

/// Leading coefficients of sigma(M^(2h)) against M^(2h) and M^(2h) + M^(2h-1),
/// plus, where they apply, alpha_3(U_2h) = 1 for M2 with prime 2h + 1 > 7 and
/// alpha_3(U_2) = 1 for M outside the small five with omega(sigma(M^2)) >= 3.
std::vector<TheoremReport> check_alpha_lemmas(const MersennePrime& m, unsigned h, const VerifyOptions& opts = {});

/// p = 2^m - 1 with m in {2, 3, 5}: every irreducible P != M of degree m
/// divides sigma(M^(p-1)), no irreducible of degree r divides it when
/// 2^r - 1 is a different prime, and the M1 / M2 / M2bar divisibility pattern
/// holds. Throws std::invalid_argument for other p.
TheoremReport check_degree_m_divisors(const MersennePrime& m, std::uint64_t p, const VerifyOptions& opts = {});

/// For prime p = 2h + 1, ord_p(2) divides the degree of every prime factor of
/// sigma(M^(p-1)).
TheoremReport check_order_divides_degree(const MersennePrime& m, unsigned h, const VerifyOptions& opts = {});

/// phi(m) < N_2(m), the lower bound m N_2(m) >= 2^m - 2(2^(m/2) - 1), and
/// #(Mersenne primes of degree m) <= phi(m) < N_2(m).
TheoremReport check_irreducible_count(unsigned m);
/// Exhaustively: no 1 + x^a (x+1)^b with a + b = m is irreducible (m % 8 == 0).
TheoremReport check_no_mersenne_degree(unsigned m);
/// Fermat prime p > 5 lies in Delta.
TheoremReport check_delta_fermat(std::uint64_t p);

/// Sweeps every checker over the Mersenne primes of degree <= max_mersenne_degree
/// and 1 <= h <= max_h, plus the global counting checks. Output order is fixed:
/// by claim id (as in known_claims), then by parameters.
std::vector<TheoremReport> run_all(unsigned max_mersenne_degree, unsigned max_h, const VerifyOptions& opts = {});

struct AlphaProfile {
    Poly u6;
    /// alpha_l(U_6) for l = 0 .. deg U_6.
    std::vector<bool> alpha;
};
/// alpha_l(sigma(sigma(M^6))) over all l; exploration only, no claim attached.
AlphaProfile explore_p7(const MersennePrime& m);

}  // namespace gf2p
