#include "gf2p/divisors.hpp"

#include <algorithm>

namespace gf2p {

std::string_view to_string(Mode m) noexcept { return m == Mode::perfect ? "perfect" : "unitary"; }

Mode mode_from_string(std::string_view s) {
    if (s == "perfect" || s == "sigma") return Mode::perfect;
    if (s == "unitary" || s == "sigma_star") return Mode::unitary;
    throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

Poly sigma_prime_power(const Poly& prime, unsigned n) {
    return exact_div(pow(prime, n + 1) + Poly::one(), prime + Poly::one());
}

Poly sigma_prime_power_by_sum(const Poly& prime, unsigned n) {
    Poly sum = Poly::one();
    Poly term = Poly::one();
    for (unsigned i = 0; i < n; ++i) {
        term = mul(term, prime);
        sum += term;
    }
    return sum;
}

Poly sigma(const Factorization& f) {
    Poly r = Poly::one();
    for (const auto& [prime, mult] : f.factors) r = mul(r, sigma_prime_power(prime, mult));
    return r;
}

Poly sigma_star(const Factorization& f) {
    Poly r = Poly::one();
    for (const auto& [prime, mult] : f.factors) r = mul(r, pow(prime, mult) + Poly::one());
    return r;
}

Poly sigma(const Poly& a, std::uint64_t seed) {
    if (a.is_zero()) throw std::domain_error("sigma of the zero polynomial");
    return sigma(factorize(a, seed));
}

Poly sigma_star(const Poly& a, std::uint64_t seed) {
    if (a.is_zero()) throw std::domain_error("sigma* of the zero polynomial");
    return sigma_star(factorize(a, seed));
}

Poly divisor_sum(const Poly& a, Mode mode, std::uint64_t seed) {
    return mode == Mode::perfect ? sigma(a, seed) : sigma_star(a, seed);
}

namespace {

std::vector<Poly> all_divisors(const Poly& a) {
    if (a.is_zero()) throw std::domain_error("divisors of the zero polynomial");
    if (a.deg() > kOracleMaxDegree) throw BudgetError("divisor oracle limited to degree " + std::to_string(kOracleMaxDegree));
    std::vector<Poly> divs{Poly::one()};
    for (const auto& [prime, mult] : factorize(a).factors) {
        const std::size_t n = divs.size();
        Poly pk = Poly::one();
        for (unsigned k = 1; k <= mult; ++k) {
            pk = mul(pk, prime);
            for (std::size_t i = 0; i < n; ++i) divs.push_back(mul(divs[i], pk));
        }
    }
    return divs;
}

}  // namespace

Poly sigma_oracle(const Poly& a) {
    Poly sum;
    for (const Poly& d : all_divisors(a)) sum += d;
    return sum;
}

Poly unitary_sigma_oracle(const Poly& a) {
    Poly sum;
    for (const Poly& d : all_divisors(a)) {
        if (gcd(d, exact_div(a, d)).is_one()) sum += d;
    }
    return sum;
}

unsigned exact_power(const Poly& prime, const Poly& s) {
    if (s.is_zero()) throw std::domain_error("exact_power of the zero polynomial");
    if (prime.is_constant() || !is_irreducible(prime)) throw std::domain_error("exact_power requires an irreducible polynomial");
    unsigned m = 0;
    Poly rest = s;
    for (;;) {
        auto [q, r] = div_rem(rest, prime);
        if (!r.is_zero()) return m;
        rest = std::move(q);
        ++m;
    }
}

PerfectionReport check_perfection(const Poly& a, Mode mode, std::uint64_t seed) {
    if (a.is_zero()) throw std::domain_error("perfection test of the zero polynomial");
    const Factorization fa = factorize(a, seed);
    const Poly sum = mode == Mode::perfect ? sigma(fa) : sigma_star(fa);
    PerfectionReport report{a, mode, sum == a, std::nullopt};
    if (report.verdict) return report;

    const Factorization fs = factorize(sum, seed);
    for (const auto& [prime, m1] : fa.factors) {
        const unsigned m2 = fs.multiplicity(prime);
        if (m1 != m2) {
            report.witness = PowerMismatch{prime, m1, m2};
            return report;
        }
    }
    for (const auto& [prime, m2] : fs.factors) {
        if (fa.multiplicity(prime) == 0) {
            report.witness = PowerMismatch{prime, 0, m2};
            return report;
        }
    }
    throw std::logic_error("divisor sum differs from the subject but no exponent mismatch was found");
}

PerfectionReport is_perfect(const Poly& a, std::uint64_t seed) { return check_perfection(a, Mode::perfect, seed); }

PerfectionReport is_unitary_perfect(const Poly& a, std::uint64_t seed) {
    return check_perfection(a, Mode::unitary, seed);
}

bool is_multiperfect(const Poly& a) { return divides(a, sigma(a)); }

bool is_even_poly(const Poly& a) {
    if (a.is_zero()) throw std::domain_error("parity of the zero polynomial");
    return !a.coeff(0) || a.popcount() % 2 == 0;
}

bool is_indecomposable(const Poly& a, Mode mode) {
    if (a.is_zero()) throw std::domain_error("indecomposability of the zero polynomial");
    const Factorization f = factorize(a);
    const Poly sum = mode == Mode::perfect ? sigma(f) : sigma_star(f);
    if (sum != a) throw std::domain_error("is_indecomposable requires a (unitary) perfect input");
    const std::size_t w = f.omega();
    if (w > kMaxIndecomposableOmega) throw BudgetError("is_indecomposable limited to omega <= 20");
    if (w < 2) return true;

    std::vector<Poly> parts, part_sums;
    for (const auto& [prime, mult] : f.factors) {
        parts.push_back(pow(prime, mult));
        part_sums.push_back(mode == Mode::perfect ? sigma_prime_power(prime, mult) : parts.back() + Poly::one());
    }
    // The first prime power always sits in u, so each split is visited once.
    const std::uint64_t full = (std::uint64_t{1} << w) - 1;
    for (std::uint64_t sel = 1; sel < full; sel += 2) {
        Poly u = Poly::one(), su = Poly::one();
        for (std::size_t i = 0; i < w; ++i) {
            if ((sel >> i) & 1) {
                u = mul(u, parts[i]);
                su = mul(su, part_sums[i]);
            }
        }
        if (su == u) return false;  // then v = a/u satisfies the same identity
    }
    return true;
}

Poly canonical_class_rep(const Poly& s) {
    if (s.is_constant()) throw std::domain_error("class representative of a constant");
    Poly b = s;
    while (is_square(b)) b = sqrt(b);
    const std::size_t vx = valuation(b, LinearRoot::x);
    const std::size_t vx1 = valuation(b, LinearRoot::x_plus_one);
    if (vx > vx1) return bar(b);
    if (vx == vx1) return std::min(b, bar(b));
    return b;
}

bool same_class(const Poly& s, const Poly& t) {
    if (s.is_constant() || t.is_constant()) throw std::domain_error("same_class of a constant");
    const Poly* lo = &s;
    Poly hi = t;
    if (s.deg() > t.deg()) {
        lo = &t;
        hi = s;
    }
    while (hi.deg() > lo->deg()) {
        if (!is_square(hi)) return false;
        hi = sqrt(hi);
    }
    return hi == *lo;
}

}  // namespace gf2p
