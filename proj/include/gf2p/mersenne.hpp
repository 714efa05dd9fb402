#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gf2p/poly.hpp"

namespace gf2p {

/// Irreducible 1 + x^a (x+1)^b, a, b >= 1.
struct MersennePrime {
    unsigned a = 0;
    unsigned b = 0;
    Poly poly;

    std::size_t degree() const noexcept { return a + b; }
    friend bool operator==(const MersennePrime&, const MersennePrime&) = default;
};

/// 1 + x^a (x+1)^b, irreducible or not. Throws std::domain_error if a or b is 0.
Poly mersenne_poly(unsigned a, unsigned b);

/// The witness (a, b) when p is an irreducible of Mersenne form.
std::optional<std::pair<unsigned, unsigned>> is_mersenne_prime(const Poly& p);
std::optional<MersennePrime> as_mersenne_prime(const Poly& p);

/// All Mersenne primes of degree <= max_degree sorted by (degree, a).
std::vector<MersennePrime> enumerate_mersenne_primes(unsigned max_degree);

/// Multiplicative order of 2 modulo an odd prime p.
std::uint64_t ord2(std::uint64_t p);
/// p is a Mersenne number 2^k - 1 or 8 | ord_p(2).
bool in_delta(std::uint64_t p);

struct CatalogEntry {
    std::string name;
    std::string formula;
    Poly poly;
};

/// Named polynomials: M1, M2, M2bar, M3, M3bar, T1..T9, B1..B9, S1, S2.
/// Built once from their factored formulas; construction checks the bar
/// relations between the entries and that the five small Mersenne primes are
/// what their names say.
class Catalog {
public:
    Catalog();

    std::optional<Poly> lookup(std::string_view name) const;
    const Poly& at(std::string_view name) const;
    /// Name of an entry equal to p, if any.
    std::optional<std::string> name_of(const Poly& p) const;
    const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }

    /// M1, M2, M2bar, M3, M3bar.
    std::vector<MersennePrime> small_mersenne() const;
    /// T1..T9.
    std::vector<Poly> perfect() const;
    /// B1..B9.
    std::vector<Poly> unitary_perfect() const;
    bool is_small_mersenne(const Poly& p) const;

private:
    void add(std::string name, std::string formula);

    std::vector<CatalogEntry> entries_;
};

const Catalog& catalog();

/// parse() with catalog names ("T5", "M_2", "B9", "M2bar") resolved.
Poly parse_poly(std::string_view text);

}  // namespace gf2p
