#include "gf2p/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

#include "gf2p/divisors.hpp"
#include "gf2p/intmath.hpp"
#include "gf2p/serialize.hpp"

namespace gf2p {

using nlohmann::json;

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::out_of_scope: return "out_of_scope";
    }
    return "unknown";
}

const std::vector<std::string_view>& known_claims() {
    static const std::vector<std::string_view> ids{
        claim::kNonMersenneDivisor, claim::kSplitSquare,      claim::kDivisorReduction,
        claim::kLeadingCoefficients, claim::kAlpha3M2,        claim::kAlpha3U2,
        claim::kDegreeMDivisors,    claim::kOrderDividesDegree, claim::kIrreducibleCount,
        claim::kNoMersenneDegree8k, claim::kDeltaFermat};
    return ids;
}

namespace {

json mersenne_params(const MersennePrime& m) { return {{"M", format(m.poly)}, {"a", m.a}, {"b", m.b}}; }

json mersenne_params(const MersennePrime& m, unsigned h) {
    json p = mersenne_params(m);
    p["h"] = h;
    return p;
}

void require_budget(const MersennePrime& m, std::uint64_t exponent, const VerifyOptions& opts) {
    if (m.degree() * exponent > opts.max_degree) {
        throw BudgetError("deg(M^" + std::to_string(exponent) + ") exceeds the degree budget of " +
                          std::to_string(opts.max_degree));
    }
}

Verdict verdict_of(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

bool all_simple(const Factorization& f) {
    return std::all_of(f.factors.begin(), f.factors.end(), [](const PrimePower& pp) { return pp.mult == 1; });
}

std::vector<Poly> irreducibles_of_degree(unsigned m) {
    std::vector<Poly> out;
    const Poly::Word top = Poly::Word{1} << m;
    for (Poly::Word low = 0; low < top; ++low) {
        Poly p = Poly::from_mask(top | low);
        if (is_irreducible(p)) out.push_back(std::move(p));
    }
    return out;
}

unsigned count_mersenne_of_degree(unsigned m) {
    unsigned n = 0;
    for (unsigned a = 1; a < m; ++a) {
        if (std::gcd(a, m - a) == 1 && is_irreducible(mersenne_poly(a, m - a))) ++n;
    }
    return n;
}

}  // namespace

bool non_mersenne_hypotheses_hold(const MersennePrime& m, unsigned h) {
    const Catalog& cat = catalog();
    if (cat.is_small_mersenne(m.poly)) {
        if (m.poly == cat.at("M2") || m.poly == cat.at("M2bar")) return h >= 2;
        return true;
    }
    for (auto [p, e] : intmath::factorize(2ULL * h + 1)) {
        if (p != 7 && in_delta(p)) return true;
    }
    return false;
}

TheoremReport check_sigma_even_power(const MersennePrime& m, unsigned h, const VerifyOptions& opts) {
    require_budget(m, 2ULL * h, opts);
    const Poly s = sigma_prime_power(m.poly, 2 * h);
    const Factorization f = factorize(s, opts.seed);
    const bool squarefree = all_simple(f);

    json non_mersenne = json::array();
    for (const auto& pp : f.factors) {
        if (!is_mersenne_prime(pp.prime)) non_mersenne.push_back(format(pp.prime));
    }
    const bool in_scope = non_mersenne_hypotheses_hold(m, h);

    TheoremReport r{std::string(claim::kNonMersenneDivisor), mersenne_params(m, h), Verdict::out_of_scope, {}};
    r.witness = {{"sigma_degree", s.deg()},
                 {"factors", classified_factors(f)},
                 {"squarefree", squarefree},
                 {"non_mersenne", non_mersenne},
                 {"in_hypotheses", in_scope}};
    if (!squarefree) {
        r.verdict = Verdict::fail;
    } else if (in_scope) {
        r.verdict = verdict_of(!non_mersenne.empty());
    }
    return r;
}

TheoremReport check_U_split_square(const MersennePrime& m, unsigned h, const VerifyOptions& opts) {
    require_budget(m, 2ULL * h, opts);
    const Poly s = sigma_prime_power(m.poly, 2 * h);
    const Factorization f = factorize(s, opts.seed);
    const Poly u = sigma(f);

    bool assumption = all_simple(f);
    for (const auto& pp : f.factors) assumption = assumption && is_mersenne_prime(pp.prime).has_value();
    const bool irreducible = f.omega() == 1 && f.factors[0].mult == 1;

    const std::size_t vx = valuation(u, LinearRoot::x);
    const std::size_t vx1 = valuation(u, LinearRoot::x_plus_one);
    const bool splits = vx + vx1 == u.deg();
    const bool square = is_square(u);

    TheoremReport r{std::string(claim::kSplitSquare), mersenne_params(m, h), Verdict::out_of_scope, {}};
    r.witness = {{"U", format_factorization(factorize(u, opts.seed))},
                 {"val_x", vx},
                 {"val_x1", vx1},
                 {"splits", splits},
                 {"square", square},
                 {"all_factors_mersenne", assumption},
                 {"sigma_irreducible", irreducible}};
    if (irreducible) {
        // 1 + Q for irreducible Q is never a square; an irreducible Mersenne
        // sigma(M^(2h)) would contradict the split-square conclusion outright.
        r.witness["case"] = "irreducible";
        r.verdict = verdict_of(!square && !assumption);
    } else if (assumption) {
        r.witness["case"] = "all-mersenne";
        r.verdict = verdict_of(splits && square && vx % 2 == 0 && vx1 % 2 == 0);
    } else {
        r.witness["case"] = "assumption-fails";
        json failed = json::array();
        if (!splits) failed.push_back("splits");
        if (!square) failed.push_back("square");
        r.witness["failed_conclusions"] = failed;
    }
    return r;
}

TheoremReport check_p_reduction(const MersennePrime& m, unsigned h, unsigned k, const VerifyOptions& opts) {
    const std::uint64_t n = 2ULL * h + 1;
    if (k == 0 || n % k != 0) throw std::invalid_argument("check_p_reduction requires k | 2h + 1");
    require_budget(m, 2ULL * h, opts);
    const Poly d = sigma_prime_power(m.poly, k - 1);
    const Poly s = sigma_prime_power(m.poly, 2 * h);
    auto [q, rem] = div_rem(s, d);
    json params = mersenne_params(m, h);
    params["k"] = k;
    TheoremReport r{std::string(claim::kDivisorReduction), params, verdict_of(rem.is_zero()), {}};
    r.witness = {{"divisor", format(d)}, {"remainder_zero", rem.is_zero()}};
    return r;
}

std::vector<TheoremReport> check_alpha_lemmas(const MersennePrime& m, unsigned h, const VerifyOptions& opts) {
    if (h == 0) throw std::invalid_argument("check_alpha_lemmas requires h >= 1");
    require_budget(m, 2ULL * h, opts);
    const std::size_t n = m.degree();
    const Poly top = pow(m.poly, 2ULL * h);
    const Poly below = pow(m.poly, 2ULL * h - 1);
    const Poly top_two = top + below;
    const Poly s = sigma_prime_power(m.poly, 2 * h);

    std::vector<TheoremReport> out;
    {
        TheoremReport r{std::string(claim::kLeadingCoefficients), mersenne_params(m, h), Verdict::pass, {}};
        json mismatch = nullptr;
        for (std::size_t l = 0; l < 2 * n && mismatch.is_null(); ++l) {
            const Poly& ref = l < n ? top : top_two;
            if (alpha(s, l) != alpha(ref, l)) mismatch = l;
        }
        r.witness = {{"low_range", {0, n - 1}}, {"high_range", {n, 2 * n - 1}}, {"first_mismatch", mismatch}};
        bool ok = mismatch.is_null();
        if (m.poly == catalog().at("M2")) {
            const bool a3 = alpha(below, 3);
            const bool a1 = alpha(below, 1);
            r.witness["alpha3_M_pow_2h_minus_1"] = a3;
            r.witness["alpha1_M_pow_2h_minus_1"] = a1;
            ok = ok && a3 && !a1;
        }
        r.verdict = verdict_of(ok);
        out.push_back(std::move(r));
    }

    const std::uint64_t p = 2ULL * h + 1;
    const bool is_m2 = m.poly == catalog().at("M2");
    const bool small = catalog().is_small_mersenne(m.poly);
    if (is_m2 && p > 7 && intmath::is_prime(p)) {
        const Factorization f = factorize(s, opts.seed);
        const Poly u = sigma(f);
        std::size_t min_degree = s.deg();
        for (const auto& pp : f.factors) min_degree = std::min(min_degree, pp.prime.deg());
        TheoremReport r{std::string(claim::kAlpha3M2), mersenne_params(m, h), verdict_of(alpha(u, 3)), {}};
        r.witness = {{"alpha3_U", alpha(u, 3)}, {"min_factor_degree", min_degree}, {"U_degree", u.deg()}};
        out.push_back(std::move(r));
    }
    if (h == 1 && !small) {
        const Factorization f = factorize(s, opts.seed);
        if (f.omega() >= 3) {
            const Poly u = sigma(f);
            TheoremReport r{std::string(claim::kAlpha3U2), mersenne_params(m, h), verdict_of(alpha(u, 3)), {}};
            r.witness = {{"alpha1_U", alpha(u, 1)},
                         {"alpha3_U", alpha(u, 3)},
                         {"omega", f.omega()},
                         {"M1_divides", f.multiplicity(catalog().at("M1")) == 1},
                         {"factors", classified_factors(f)}};
            out.push_back(std::move(r));
        }
    }
    return out;
}

TheoremReport check_degree_m_divisors(const MersennePrime& m, std::uint64_t p, const VerifyOptions& opts) {
    unsigned deg_m = 0;
    if (p == 3) deg_m = 2;
    else if (p == 7) deg_m = 3;
    else if (p == 31) deg_m = 5;
    else throw std::invalid_argument("check_degree_m_divisors supports p in {3, 7, 31}");
    require_budget(m, p - 1, opts);

    const Catalog& cat = catalog();
    const Poly s = sigma_prime_power(m.poly, static_cast<unsigned>(p - 1));
    const Factorization f = factorize(s, opts.seed);

    bool every_other_divides = true;
    json missing = json::array();
    for (const Poly& q : irreducibles_of_degree(deg_m)) {
        if (q == m.poly) continue;
        if (!divides(q, s)) {
            every_other_divides = false;
            missing.push_back(format(q));
        }
    }

    bool no_foreign_degree = true;
    json foreign = json::array();
    for (unsigned r : {2u, 3u, 5u, 7u}) {
        const std::uint64_t q = (std::uint64_t{1} << r) - 1;
        if (q == p) continue;
        for (const auto& pp : f.factors) {
            if (pp.prime.deg() == r) {
                no_foreign_degree = false;
                foreign.push_back(format(pp.prime));
            }
        }
    }

    const auto divisibility_pattern = [&](const char* name, std::uint64_t want_p) {
        const Poly& q = cat.at(name);
        return divides(q, s) == (m.poly != q && p == want_p);
    };
    const bool pattern = divisibility_pattern("M1", 3) && divisibility_pattern("M2", 7) &&
                         divisibility_pattern("M2bar", 7);

    json non_mersenne_m = json::array();
    for (const auto& pp : f.factors) {
        if (pp.prime.deg() == deg_m && !is_mersenne_prime(pp.prime)) non_mersenne_m.push_back(format(pp.prime));
    }
    const bool needs_non_mersenne = deg_m >= 4 && m.degree() >= deg_m;
    const bool non_mersenne_ok = !needs_non_mersenne || !non_mersenne_m.empty();

    json params = mersenne_params(m);
    params["p"] = p;
    TheoremReport r{std::string(claim::kDegreeMDivisors), params,
                    verdict_of(every_other_divides && no_foreign_degree && pattern && non_mersenne_ok), {}};
    r.witness = {{"m", deg_m},
                 {"every_other_degree_m_irreducible_divides", every_other_divides},
                 {"missing", missing},
                 {"no_other_mersenne_number_degree", no_foreign_degree},
                 {"foreign", foreign},
                 {"M1_M2_pattern", pattern},
                 {"non_mersenne_degree_m_divisors", non_mersenne_m},
                 {"irreducible_count", count_irreducibles(deg_m)},
                 {"mersenne_count", count_mersenne_of_degree(deg_m)},
                 {"phi", euler_phi(deg_m)}};
    return r;
}

TheoremReport check_order_divides_degree(const MersennePrime& m, unsigned h, const VerifyOptions& opts) {
    const std::uint64_t p = 2ULL * h + 1;
    if (!intmath::is_prime(p)) throw std::invalid_argument("check_order_divides_degree requires 2h + 1 prime");
    require_budget(m, 2ULL * h, opts);
    const std::uint64_t order = ord2(p);
    const Factorization f = factorize(sigma_prime_power(m.poly, 2 * h), opts.seed);
    bool ok = true;
    json degrees = json::array();
    for (const auto& pp : f.factors) {
        degrees.push_back(pp.prime.deg());
        ok = ok && pp.prime.deg() % order == 0;
    }
    TheoremReport r{std::string(claim::kOrderDividesDegree), mersenne_params(m, h), verdict_of(ok), {}};
    r.witness = {{"p", p}, {"ord_p_2", order}, {"factor_degrees", degrees}};
    return r;
}

TheoremReport check_irreducible_count(unsigned m) {
    if (m < 4 || m > 60) throw std::invalid_argument("check_irreducible_count supports 4 <= m <= 60");
    const std::uint64_t n2 = count_irreducibles(m);
    const std::uint64_t phi = euler_phi(m);
    const unsigned mersenne = count_mersenne_of_degree(m);

    // m N >= 2^m - 2(2^(m/2) - 1)  <=>  R := 2^m + 2 - m N <= 2^(m/2 + 1).
    const __int128 rest = (static_cast<__int128>(1) << m) + 2 - static_cast<__int128>(m) * n2;
    const bool bound = rest <= 0 || rest * rest <= (static_cast<__int128>(1) << (m + 2));

    const bool ok = phi < n2 && bound && mersenne <= phi && n2 - mersenne >= 1;
    TheoremReport r{std::string(claim::kIrreducibleCount), {{"m", m}}, verdict_of(ok), {}};
    r.witness = {{"N2", n2}, {"phi", phi}, {"mersenne_count", mersenne}, {"lower_bound_holds", bound}};
    return r;
}

TheoremReport check_no_mersenne_degree(unsigned m) {
    if (m == 0 || m % 8 != 0) throw std::invalid_argument("check_no_mersenne_degree requires a multiple of 8");
    json irreducible = json::array();
    for (unsigned a = 1; a < m; ++a) {
        if (is_irreducible(mersenne_poly(a, m - a))) irreducible.push_back({a, m - a});
    }
    TheoremReport r{std::string(claim::kNoMersenneDegree8k), {{"m", m}}, verdict_of(irreducible.empty()), {}};
    r.witness = {{"pairs_tested", m - 1}, {"irreducible_pairs", irreducible}};
    return r;
}

TheoremReport check_delta_fermat(std::uint64_t p) {
    const std::uint64_t order = ord2(p);
    TheoremReport r{std::string(claim::kDeltaFermat), {{"p", p}}, verdict_of(in_delta(p)), {}};
    r.witness = {{"ord_p_2", order}};
    return r;
}

std::vector<TheoremReport> run_all(unsigned max_mersenne_degree, unsigned max_h, const VerifyOptions& opts) {
    if (max_mersenne_degree < 2 || max_h < 1) return {};
    const std::vector<MersennePrime> primes = enumerate_mersenne_primes(max_mersenne_degree);
    const auto fits = [&](const MersennePrime& m, std::uint64_t e) { return m.degree() * e <= opts.max_degree; };
    const auto wanted = [&](std::string_view id) { return !opts.claim || *opts.claim == id; };

    using Task = std::function<std::vector<TheoremReport>()>;
    std::vector<Task> tasks;
    const auto single = [&](std::string_view id, std::function<TheoremReport()> fn) {
        if (wanted(id)) tasks.emplace_back([fn = std::move(fn)] { return std::vector<TheoremReport>{fn()}; });
    };

    for (const auto& m : primes) {
        for (unsigned h = 1; h <= max_h && fits(m, 2ULL * h); ++h) {
            single(claim::kNonMersenneDivisor, [=] { return check_sigma_even_power(m, h, opts); });
            single(claim::kSplitSquare, [=] { return check_U_split_square(m, h, opts); });
            for (std::uint64_t k : intmath::divisors(2ULL * h + 1)) {
                single(claim::kDivisorReduction,
                       [=] { return check_p_reduction(m, h, static_cast<unsigned>(k), opts); });
            }
            if (wanted(claim::kLeadingCoefficients) || wanted(claim::kAlpha3M2) || wanted(claim::kAlpha3U2)) {
                tasks.emplace_back([=] { return check_alpha_lemmas(m, h, opts); });
            }
            if (intmath::is_prime(2ULL * h + 1)) {
                single(claim::kOrderDividesDegree, [=] { return check_order_divides_degree(m, h, opts); });
            }
        }
        for (std::uint64_t p : {3ULL, 7ULL, 31ULL}) {
            if ((p - 1) / 2 <= max_h && fits(m, p - 1)) {
                single(claim::kDegreeMDivisors, [=] { return check_degree_m_divisors(m, p, opts); });
            }
        }
    }
    for (unsigned m = 4; m <= 24; ++m) single(claim::kIrreducibleCount, [=] { return check_irreducible_count(m); });
    for (unsigned m : {8u, 16u, 24u}) single(claim::kNoMersenneDegree8k, [=] { return check_no_mersenne_degree(m); });
    for (std::uint64_t p : {17ULL, 257ULL, 65537ULL}) single(claim::kDeltaFermat, [=] { return check_delta_fermat(p); });

    std::vector<std::vector<TheoremReport>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
    };
    const unsigned jobs = std::max(1u, opts.jobs);
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    pool.clear();

    std::vector<TheoremReport> out;
    for (auto& batch : results) {
        for (auto& r : batch) {
            if (wanted(r.claim_id)) out.push_back(std::move(r));
        }
    }
    const auto& ids = known_claims();
    const auto rank = [&](const TheoremReport& r) {
        return std::find(ids.begin(), ids.end(), r.claim_id) - ids.begin();
    };
    std::stable_sort(out.begin(), out.end(),
                     [&](const TheoremReport& a, const TheoremReport& b) { return rank(a) < rank(b); });
    return out;
}

AlphaProfile explore_p7(const MersennePrime& m) {
    const Poly s = sigma_prime_power(m.poly, 6);
    AlphaProfile profile{sigma(s), {}};
    const std::size_t d = profile.u6.deg();
    for (std::size_t l = 0; l <= d; ++l) profile.alpha.push_back(alpha(profile.u6, l));
    return profile;
}

}  // namespace gf2p
