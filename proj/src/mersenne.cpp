#include "gf2p/mersenne.hpp"

#include <numeric>
#include <stdexcept>

#include "gf2p/factor.hpp"
#include "gf2p/intmath.hpp"

namespace gf2p {

Poly mersenne_poly(unsigned a, unsigned b) {
    if (a == 0 || b == 0) throw std::domain_error("mersenne_poly requires a, b >= 1");
    return mul(Poly::monomial(a), pow(Poly::x_plus_one(), b)) + Poly::one();
}

std::optional<std::pair<unsigned, unsigned>> is_mersenne_prime(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("is_mersenne_prime of the zero polynomial");
    const Poly q = p + Poly::one();
    if (q.is_zero()) return std::nullopt;
    const std::size_t v = valuation(q, LinearRoot::x);
    const std::size_t w = valuation(q, LinearRoot::x_plus_one);
    if (v == 0 || w == 0 || v + w != q.deg()) return std::nullopt;
    if (!is_irreducible(p)) return std::nullopt;
    return std::pair{static_cast<unsigned>(v), static_cast<unsigned>(w)};
}

std::optional<MersennePrime> as_mersenne_prime(const Poly& p) {
    if (auto ab = is_mersenne_prime(p)) return MersennePrime{ab->first, ab->second, p};
    return std::nullopt;
}

std::vector<MersennePrime> enumerate_mersenne_primes(unsigned max_degree) {
    std::vector<MersennePrime> out;
    for (unsigned m = 2; m <= max_degree; ++m) {
        for (unsigned a = 1; a < m; ++a) {
            const unsigned b = m - a;
            if (std::gcd(a, b) != 1) continue;
            Poly p = mersenne_poly(a, b);
            if (is_irreducible(p)) out.push_back({a, b, std::move(p)});
        }
    }
    return out;
}

std::uint64_t ord2(std::uint64_t p) {
    if (p < 3 || !intmath::is_prime(p)) throw std::domain_error("ord2 requires an odd prime");
    std::uint64_t order = p - 1;
    for (auto [q, e] : intmath::factorize(p - 1)) {
        while (order % q == 0 && intmath::pow_mod(2, order / q, p) == 1) order /= q;
    }
    return order;
}

bool in_delta(std::uint64_t p) {
    const std::uint64_t order = ord2(p);
    const bool mersenne_number = (p & (p + 1)) == 0;
    return mersenne_number || order % 8 == 0;
}

namespace {

std::string normalize_name(std::string_view name) {
    std::string out;
    for (char c : name) {
        if (c != '_') out += c;
    }
    return out;
}

}  // namespace

Catalog::Catalog() {
    add("M1", "1+x(x+1)");
    add("M2", "1+x(x+1)^2");
    add("M3", "1+x(x+1)^3");
    add("M2bar", "bar(M2)");
    add("M3bar", "bar(M3)");

    add("T1", "x^2(x+1)M1");
    add("T2", "bar(T1)");
    add("T3", "x^4(x+1)^3M3");
    add("T4", "bar(T3)");
    add("T5", "x^4(x+1)^4M3*M3bar");
    add("T6", "x^6(x+1)^3M2*M2bar");
    add("T7", "bar(T6)");
    add("T8", "x^4(x+1)^6M2*M2bar*M3");
    add("T9", "bar(T8)");

    add("B1", "x^3(x+1)^3M1^2");
    add("B2", "x^3(x+1)^2M1");
    add("B3", "x^5(x+1)^4M3");
    add("B4", "x^7(x+1)^4M2*M2bar");
    add("B5", "x^5(x+1)^6M1^2M3");
    add("B6", "x^5(x+1)^5M3*M3bar");
    add("B7", "x^7(x+1)^7M2^2M2bar^2");
    add("B8", "x^7(x+1)^6M1^2M2*M2bar");
    add("B9", "x^7(x+1)^5M2*M2bar*M3bar");

    add("S1", "x^13(x+1)^2M1^3M2^2M2bar^2M3*M3bar");
    add("S2", "x^14(x+1)^7M1^2M2^3M2bar^3M3*M3bar");

    const auto check = [](bool ok, const char* what) {
        if (!ok) throw std::logic_error(std::string("catalog self-check failed: ") + what);
    };
    const std::pair<const char*, std::pair<unsigned, unsigned>> small[] = {
        {"M1", {1, 1}}, {"M2", {1, 2}}, {"M2bar", {2, 1}}, {"M3", {1, 3}}, {"M3bar", {3, 1}}};
    for (const auto& [name, ab] : small) check(is_mersenne_prime(at(name)) == ab, name);
    check(at("M1") == bar(at("M1")), "M1 is bar-fixed");
    check(at("T5") == bar(at("T5")), "T5 is bar-fixed");
    check(at("M2") != at("M2bar") && at("M3") != at("M3bar"), "bar pairs are distinct");
}

void Catalog::add(std::string name, std::string formula) {
    const AliasResolver resolve = [this](std::string_view n) { return lookup(n); };
    Poly p = parse(formula, resolve);
    entries_.push_back({std::move(name), std::move(formula), std::move(p)});
}

std::optional<Poly> Catalog::lookup(std::string_view name) const {
    const std::string key = normalize_name(name);
    for (const auto& e : entries_) {
        if (e.name == key) return e.poly;
    }
    return std::nullopt;
}

const Poly& Catalog::at(std::string_view name) const {
    const std::string key = normalize_name(name);
    for (const auto& e : entries_) {
        if (e.name == key) return e.poly;
    }
    throw std::out_of_range("no catalog entry named " + key);
}

std::optional<std::string> Catalog::name_of(const Poly& p) const {
    for (const auto& e : entries_) {
        if (e.poly == p) return e.name;
    }
    return std::nullopt;
}

std::vector<MersennePrime> Catalog::small_mersenne() const {
    std::vector<MersennePrime> out;
    for (const char* name : {"M1", "M2", "M2bar", "M3", "M3bar"}) out.push_back(*as_mersenne_prime(at(name)));
    return out;
}

std::vector<Poly> Catalog::perfect() const {
    std::vector<Poly> out;
    for (int i = 1; i <= 9; ++i) out.push_back(at("T" + std::to_string(i)));
    return out;
}

std::vector<Poly> Catalog::unitary_perfect() const {
    std::vector<Poly> out;
    for (int i = 1; i <= 9; ++i) out.push_back(at("B" + std::to_string(i)));
    return out;
}

bool Catalog::is_small_mersenne(const Poly& p) const {
    for (const char* name : {"M1", "M2", "M2bar", "M3", "M3bar"}) {
        if (at(name) == p) return true;
    }
    return false;
}

const Catalog& catalog() {
    static const Catalog instance;
    return instance;
}

Poly parse_poly(std::string_view text) {
    static const AliasResolver resolve = [](std::string_view n) { return catalog().lookup(n); };
    return parse(text, resolve);
}

}  // namespace gf2p
