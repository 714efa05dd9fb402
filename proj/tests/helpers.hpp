#pragma once

#include <random>

#include "gf2p/mersenne.hpp"
#include "gf2p/poly.hpp"

namespace gf2p::testing {

inline Poly P(std::string_view text) { return parse_poly(text); }

/// Uniform polynomial with degree exactly `deg` (deg + 1 random bits, top bit set).
inline Poly random_poly(std::mt19937_64& rng, std::size_t deg) {
    std::vector<Poly::Word> words(deg / 64 + 1);
    for (auto& w : words) w = rng();
    const std::size_t top = deg % 64;
    words.back() &= top == 63 ? ~Poly::Word{0} : (Poly::Word{1} << (top + 1)) - 1;
    words.back() |= Poly::Word{1} << top;
    return Poly::from_words(std::move(words));
}

inline Poly random_up_to(std::mt19937_64& rng, std::size_t max_deg) {
    return random_poly(rng, std::uniform_int_distribution<std::size_t>(0, max_deg)(rng));
}

}  // namespace gf2p::testing
