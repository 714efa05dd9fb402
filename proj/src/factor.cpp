#include "gf2p/factor.hpp"

#include <algorithm>
#include <random>

#include "gf2p/intmath.hpp"

namespace gf2p {

unsigned Factorization::multiplicity(const Poly& prime) const noexcept {
    for (const auto& f : factors) {
        if (f.prime == prime) return f.mult;
    }
    return 0;
}

Poly Factorization::product() const {
    Poly r = Poly::one();
    for (const auto& f : factors) r = mul(r, pow(f.prime, f.mult));
    return r;
}

bool is_irreducible(const Poly& p) {
    if (p.is_constant()) throw std::domain_error("irreducibility of a constant polynomial");
    const std::size_t n = p.deg();
    if (n == 1) return true;
    if (!p.coeff(0)) return false;
    const Poly x = Poly::x();
    if (frobenius_mod(x, n, p) != mod(x, p)) return false;
    for (auto [q, e] : intmath::factorize(n)) {
        const Poly h = frobenius_mod(x, n / q, p) + x;
        if (!gcd(h, p).is_one()) return false;
    }
    return true;
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("square-free decomposition of zero");
    std::vector<std::pair<Poly, unsigned>> out;
    if (p.is_one()) return out;
    const Poly d = derivative(p);
    if (d.is_zero()) {
        for (auto& [g, m] : squarefree_decomposition(sqrt(p))) out.emplace_back(std::move(g), 2 * m);
        return out;
    }
    Poly c = gcd(p, d);
    Poly w = exact_div(p, c);
    for (unsigned i = 1; !w.is_one(); ++i) {
        Poly y = gcd(w, c);
        Poly z = exact_div(w, y);
        if (!z.is_one()) out.emplace_back(std::move(z), i);
        c = exact_div(c, y);
        w = std::move(y);
    }
    if (!c.is_one()) {
        for (auto& [g, m] : squarefree_decomposition(sqrt(c))) out.emplace_back(std::move(g), 2 * m);
    }
    return out;
}

std::vector<std::pair<Poly, std::size_t>> distinct_degree_factorization(const Poly& p) {
    std::vector<std::pair<Poly, std::size_t>> out;
    Poly f = p;
    const Poly x = Poly::x();
    Poly h = mod(x, f);
    for (std::size_t d = 1; !f.is_constant() && f.deg() >= 2 * d; ++d) {
        h = mod(square(h), f);
        Poly g = gcd(h + x, f);
        if (!g.is_one()) {
            f = exact_div(f, g);
            out.emplace_back(std::move(g), d);
            h = mod(h, f);
        }
    }
    if (!f.is_constant()) {
        const std::size_t d = f.deg();
        out.emplace_back(std::move(f), d);
    }
    return out;
}

namespace {

Poly random_below(std::size_t deg, std::mt19937_64& rng) {
    std::vector<Poly::Word> w((deg + 63) / 64, 0);
    for (auto& v : w) v = rng();
    if (deg % 64 != 0) w.back() &= (Poly::Word{1} << (deg % 64)) - 1;
    return Poly::from_words(std::move(w));
}

void split_equal_degree(const Poly& g, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const std::size_t n = g.deg();
    if (n == d) {
        out.push_back(g);
        return;
    }
    for (;;) {
        const Poly a = random_below(n, rng);
        if (a.is_constant()) continue;
        // Trace map a + a^2 + ... + a^(2^(d-1)) lands in GF(2) modulo each
        // irreducible factor, so the gcd separates the factors by that bit.
        Poly t = a;
        Poly s = a;
        for (std::size_t i = 1; i < d; ++i) {
            t = mod(square(t), g);
            s += t;
        }
        const Poly u = gcd(s, g);
        if (u.is_constant() || u.deg() == n) continue;
        split_equal_degree(u, d, rng, out);
        split_equal_degree(exact_div(g, u), d, rng, out);
        return;
    }
}

}  // namespace

std::vector<Poly> equal_degree_factorization(const Poly& p, std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Poly> out;
    split_equal_degree(p, d, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

Factorization factorize(const Poly& p, std::uint64_t seed) {
    if (p.is_zero()) throw std::domain_error("factorization of the zero polynomial");
    Factorization result{p, {}};
    std::mt19937_64 rng(seed);
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        for (const auto& [block, d] : distinct_degree_factorization(part)) {
            std::vector<Poly> primes;
            split_equal_degree(block, d, rng, primes);
            for (auto& q : primes) result.factors.push_back({std::move(q), mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return result;
}

std::size_t omega(const Poly& p) { return factorize(p).omega(); }

bool is_squarefree(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("square-freeness of the zero polynomial");
    return gcd(p, derivative(p)).is_one();
}

std::uint64_t count_irreducibles(std::uint64_t m) {
    if (m < 1) throw std::domain_error("count_irreducibles requires m >= 1");
    if (m > 64) throw std::out_of_range("count_irreducibles supports m <= 64");
    __int128 total = 0;
    for (std::uint64_t d : intmath::divisors(m)) {
        total += static_cast<__int128>(intmath::mobius(d)) * (static_cast<__int128>(1) << (m / d));
    }
    return static_cast<std::uint64_t>(total / static_cast<__int128>(m));
}

std::uint64_t euler_phi(std::uint64_t m) { return intmath::euler_phi(m); }

bool is_primitive(const Poly& p) {
    if (p.is_constant() || !is_irreducible(p)) throw std::domain_error("is_primitive requires an irreducible polynomial");
    const std::size_t r = p.deg();
    if (r > 64) throw UnsupportedError("is_primitive: 2^deg - 1 exceeds 64 bits");
    if (p == Poly::x()) return false;
    const std::uint64_t order = r == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
    const Poly x = Poly::x();
    if (!pow_mod(x, order, p).is_one()) return false;
    for (auto [q, e] : intmath::factorize(order)) {
        if (pow_mod(x, order / q, p).is_one()) return false;
    }
    return true;
}

std::string format_factorization(const Factorization& f) {
    if (f.factors.empty()) return "1";
    std::string out;
    for (const auto& [prime, mult] : f.factors) {
        if (!out.empty()) out += '*';
        const std::string s = format(prime);
        out += prime.popcount() == 1 ? s : "(" + s + ")";
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
}

}  // namespace gf2p
