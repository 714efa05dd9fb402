#include "checks.hpp"

#include "gf2p/divisors.hpp"
#include "gf2p/factor.hpp"
#include "gf2p/mersenne.hpp"
#include "helpers.hpp"

namespace gf2p::checks {

using gf2p::testing::random_up_to;

namespace {

std::string show(const Poly& p) { return format(p); }

}  // namespace

Outcome ring_axioms(std::mt19937_64& rng, unsigned trials, std::size_t max_deg) {
    for (unsigned i = 0; i < trials; ++i) {
        const Poly a = random_up_to(rng, max_deg), b = random_up_to(rng, max_deg), c = random_up_to(rng, max_deg);
        if (a * b != b * a) return "commutativity fails for " + show(a) + ", " + show(b);
        if ((a * b) * c != a * (b * c)) return "associativity fails for " + show(a) + ", " + show(b) + ", " + show(c);
        if (a * (b + c) != a * b + a * c) return "distributivity fails";
        if (a + b != b + a || (a + b) + c != a + (b + c)) return "addition axioms fail";
        if (a * Poly::one() != a || !(a + a).is_zero()) return "identity / characteristic fails for " + show(a);
    }
    return std::nullopt;
}

Outcome clmul_matches_schoolbook(std::mt19937_64& rng, unsigned trials, std::size_t max_deg) {
    for (unsigned i = 0; i < trials; ++i) {
        const Poly a = random_up_to(rng, max_deg), b = random_up_to(rng, max_deg);
        if (mul_clmul(a, b) != mul_schoolbook(a, b)) return "kernels disagree on " + show(a) + " * " + show(b);
        if (mul(a, b) != mul_schoolbook(a, b)) return "dispatching mul disagrees on " + show(a) + " * " + show(b);
    }
    return std::nullopt;
}

Outcome division_reconstruction(std::mt19937_64& rng, unsigned trials, std::size_t max_deg) {
    for (unsigned i = 0; i < trials; ++i) {
        const Poly p = random_up_to(rng, max_deg);
        const Poly d = random_up_to(rng, max_deg / 2);
        auto [q, r] = div_rem(p, d);
        if (q * d + r != p) return "q d + r != p for " + show(p) + " / " + show(d);
        if (!r.is_zero() && r.deg() >= d.deg()) return "remainder too large for " + show(p) + " / " + show(d);
        const Poly g = gcd(p, d);
        if (!divides(g, p) || !divides(g, d)) return "gcd does not divide both inputs";
    }
    return std::nullopt;
}

Outcome frobenius(std::mt19937_64& rng, std::size_t max_deg) {
    for (std::size_t deg = 0; deg <= max_deg; ++deg) {
        const Poly p = gf2p::testing::random_poly(rng, deg);
        const Poly sq = pow(p, 2);
        if (sq != mul_schoolbook(p, p)) return "pow(p, 2) != p * p for " + show(p);
        for (std::size_t i = 0; i <= 2 * deg + 1; ++i) {
            const bool expect = i % 2 == 0 && p.coeff(i / 2);
            if (sq.coeff(i) != expect) return "squaring is not a bit spread for " + show(p);
        }
        if (!is_square(sq) || sqrt(sq) != p) return "sqrt does not invert squaring for " + show(p);
    }
    return std::nullopt;
}

Outcome bar_homomorphism(std::mt19937_64& rng, unsigned trials, std::size_t max_deg) {
    for (unsigned i = 0; i < trials; ++i) {
        const Poly a = random_up_to(rng, max_deg), b = random_up_to(rng, max_deg);
        if (bar(a * b) != bar(a) * bar(b)) return "bar(ab) != bar(a) bar(b) for " + show(a) + ", " + show(b);
        if (bar(a + b) != bar(a) + bar(b)) return "bar is not additive";
        if (bar(bar(a)) != a) return "bar is not an involution on " + show(a);
        std::size_t v = 0;
        for (Poly r = a; !r.is_zero() && divides(Poly::x(), r); r = exact_div(r, Poly::x())) ++v;
        if (!a.is_zero() && valuation(a, LinearRoot::x) != v) return "valuation at x disagrees for " + show(a);
    }
    return std::nullopt;
}

Outcome oracle_agreement_exhaustive(std::size_t max_deg) {
    const Poly::Word end = Poly::Word{1} << (max_deg + 1);
    for (Poly::Word mask = 1; mask < end; ++mask) {
        const Poly a = Poly::from_mask(mask);
        if (sigma(a) != sigma_oracle(a)) return "sigma disagrees with the oracle on " + show(a);
        if (sigma_star(a) != unitary_sigma_oracle(a)) return "sigma* disagrees with the oracle on " + show(a);
    }
    return std::nullopt;
}

Outcome oracle_agreement_random(std::mt19937_64& rng, unsigned trials, std::size_t max_deg) {
    for (unsigned i = 0; i < trials; ++i) {
        const Poly a = random_up_to(rng, max_deg);
        if (sigma(a) != sigma_oracle(a)) return "sigma disagrees with the oracle on " + show(a);
        if (sigma_star(a) != unitary_sigma_oracle(a)) return "sigma* disagrees with the oracle on " + show(a);
    }
    return std::nullopt;
}

Outcome multiplicativity(std::mt19937_64& rng, unsigned trials, std::size_t max_deg) {
    for (unsigned i = 0; i < trials;) {
        const Poly a = random_up_to(rng, max_deg), b = random_up_to(rng, max_deg);
        if (!gcd(a, b).is_one()) continue;
        ++i;
        if (sigma(a * b) != sigma(a) * sigma(b)) return "sigma not multiplicative on " + show(a) + ", " + show(b);
        if (sigma_star(a * b) != sigma_star(a) * sigma_star(b)) return "sigma* not multiplicative";
    }
    return std::nullopt;
}

Outcome factorization_reconstruction(std::mt19937_64& rng, unsigned trials, std::size_t max_deg,
                                     bool check_irreducible) {
    for (unsigned i = 0; i < trials; ++i) {
        const Poly p = random_up_to(rng, max_deg);
        const Factorization f = factorize(p);
        if (f.product() != p) return "product of factors differs from " + show(p);
        bool squarefree = true;
        for (std::size_t k = 0; k < f.factors.size(); ++k) {
            const auto& pp = f.factors[k];
            if (pp.mult == 0) return "zero multiplicity in the factorization of " + show(p);
            if (k > 0 && !(f.factors[k - 1].prime < pp.prime)) return "factors out of order for " + show(p);
            if (check_irreducible && !is_irreducible(pp.prime)) return "reducible factor " + show(pp.prime);
            squarefree = squarefree && pp.mult == 1;
        }
        if (!p.is_constant() && squarefree != is_squarefree(p)) return "is_squarefree disagrees on " + show(p);
    }
    return std::nullopt;
}

Outcome divisor_sum_tables(unsigned max_n) {
    const Catalog& cat = catalog();
    const Poly x = Poly::x(), x1 = Poly::x_plus_one();
    const Poly m1 = cat.at("M1"), m2 = cat.at("M2"), m2b = cat.at("M2bar"), m3 = cat.at("M3"), m3b = cat.at("M3bar");
    for (unsigned n = 0; n <= max_n; ++n) {
        const std::uint64_t t = std::uint64_t{1} << n;
        const auto row = [&](const Poly& got, const Poly& want, const std::string& what) -> Outcome {
            if (got != want) return what + " fails at n = " + std::to_string(n);
            return std::nullopt;
        };
        const struct {
            unsigned k;
            Poly for_x, for_x1;
        } families[] = {{3, m1, m1}, {5, m3, m3b}, {7, m2 * m2b, m2 * m2b}};
        for (const auto& f : families) {
            const std::string k = std::to_string(f.k);
            if (auto o = row(sigma(pow(x, f.k * t - 1)), pow(x1, t - 1) * pow(f.for_x, t), "sigma(x^(" + k + "*2^n-1))")) return o;
            if (auto o = row(sigma(pow(x1, f.k * t - 1)), pow(x, t - 1) * pow(f.for_x1, t), "sigma((x+1)^(" + k + "*2^n-1))")) return o;
            if (auto o = row(sigma_star(pow(x, f.k * t)), pow(x1, t) * pow(f.for_x, t), "sigma*(x^(" + k + "*2^n))")) return o;
            if (auto o = row(sigma_star(pow(x1, f.k * t)), pow(x, t) * pow(f.for_x1, t), "sigma*((x+1)^(" + k + "*2^n))")) return o;
        }
        if (auto o = row(sigma_prime_power(m2, 3 * t - 1), pow(m2 + Poly::one(), t - 1) * pow(m1 * m3b, t), "sigma(M2^(3*2^n-1))")) return o;
        if (auto o = row(sigma_prime_power(m2b, 3 * t - 1), pow(m2b + Poly::one(), t - 1) * pow(m1 * m3, t), "sigma(M2bar^(3*2^n-1))")) return o;
        if (auto o = row(pow(m2, 3 * t) + Poly::one(), pow(m2 + Poly::one(), t) * pow(m1 * m3b, t), "sigma*(M2^(3*2^n))")) return o;
        if (auto o = row(pow(m2b, 3 * t) + Poly::one(), pow(m2b + Poly::one(), t) * pow(m1 * m3, t), "sigma*(M2bar^(3*2^n))")) return o;
        if (auto o = row(sigma_star(pow(m2, 3 * t)), pow(m2 + Poly::one(), t) * pow(m1 * m3b, t), "sigma*(M2^(3*2^n)) via factorization")) return o;
    }
    return std::nullopt;
}

Poly random_irreducible(std::mt19937_64& rng, std::size_t deg) {
    for (;;) {
        Poly p = gf2p::testing::random_poly(rng, deg);
        if (is_irreducible(p)) return p;
    }
}

Outcome unitary_prime_power_identity(std::mt19937_64& rng, unsigned trials) {
    std::uniform_int_distribution<std::size_t> deg(1, 8);
    std::uniform_int_distribution<unsigned> n_dist(0, 4), u_dist(0, 4);
    for (unsigned i = 0; i < trials; ++i) {
        const Poly s = random_irreducible(rng, deg(rng));
        const unsigned n = n_dist(rng), u = 2 * u_dist(rng) + 1;
        const std::uint64_t t = std::uint64_t{1} << n;
        const Poly lhs = sigma_star(pow(s, t * u));
        const Poly rhs = pow(s + Poly::one(), t) * pow(sigma_prime_power(s, u - 1), t);
        if (lhs != rhs) {
            return "identity fails for S = " + show(s) + ", n = " + std::to_string(n) + ", u = " + std::to_string(u);
        }
    }
    return std::nullopt;
}

Outcome unitary_closure(const std::vector<Poly>& hits) {
    for (const Poly& c : hits) {
        if (!is_unitary_perfect(c).verdict) return show(c) + " is not unitary perfect";
        if (!is_even_poly(c)) return show(c) + " is not even";
        if (!is_unitary_perfect(bar(c)).verdict) return "bar of " + show(c) + " is not unitary perfect";
        Poly power = c;
        for (unsigned r = 1; r <= 3; ++r) {
            power = square(power);
            if (!is_unitary_perfect(power).verdict) return show(c) + " squared " + std::to_string(r) + " times fails";
        }
    }
    return std::nullopt;
}

}  // namespace gf2p::checks
