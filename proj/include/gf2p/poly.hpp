#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gf2p {

/// Dense polynomial over GF(2), 64 coefficients per word, little-endian by
/// exponent: bit i of the packed sequence is the coefficient of x^i.
///
/// The word vector is always trimmed so its last word is nonzero; the zero
/// polynomial owns no words. Ordering is canonical: by degree, then by the
/// coefficient mask read as an integer.
class Poly {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    Poly() = default;

    static Poly zero() { return {}; }
    static Poly one() { return from_mask(1); }
    static Poly x() { return from_mask(2); }
    static Poly x_plus_one() { return from_mask(3); }
    static Poly monomial(std::size_t k);
    static Poly from_mask(Word mask);
    static Poly from_words(std::vector<Word> words);
    static Poly from_exponents(std::initializer_list<std::size_t> exps);

    bool is_zero() const noexcept { return words_.empty(); }
    bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }
    bool is_constant() const noexcept { return words_.empty() || is_one(); }

    /// Degree, or std::nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    /// Degree of a nonzero polynomial; throws std::domain_error on zero.
    std::size_t deg() const;

    bool coeff(std::size_t i) const noexcept;
    std::size_t popcount() const noexcept;
    std::span<const Word> words() const noexcept { return words_; }

    /// Coefficient mask as an integer when it fits in one word.
    std::optional<Word> mask() const noexcept;
    /// Lowercase hex of the full coefficient mask ("0x0" for zero).
    std::string to_hex() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator/(const Poly& lhs, const Poly& rhs);
    friend Poly operator%(const Poly& lhs, const Poly& rhs);

    friend bool operator==(const Poly&, const Poly&) = default;
    friend std::strong_ordering operator<=>(const Poly& lhs, const Poly& rhs) noexcept;

    /// Multiply by x^k.
    Poly shifted(std::size_t k) const;
    std::size_t hash() const noexcept;

private:
    explicit Poly(std::vector<Word> words) : words_(std::move(words)) { trim(); }
    void trim() noexcept;

    std::vector<Word> words_;
};

enum class LinearRoot { x, x_plus_one };

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
/// Reference bit-serial shift-XOR product; bit-exact with mul.
Poly mul_schoolbook(const Poly& p, const Poly& q);
/// Word-kernel product without the sparse shortcut.
Poly mul_clmul(const Poly& p, const Poly& q);
/// True when the hardware carry-less multiply instruction is in use.
bool hardware_clmul_available() noexcept;

struct DivRem {
    Poly quotient;
    Poly remainder;
};
/// p = q*d + r with deg r < deg d. Throws std::domain_error if d is zero.
DivRem div_rem(const Poly& p, const Poly& d);
Poly mod(const Poly& p, const Poly& d);
bool divides(const Poly& d, const Poly& p);
/// Quotient of p by d; throws std::domain_error unless the division is exact.
Poly exact_div(const Poly& p, const Poly& d);

/// Monic gcd; gcd(0, 0) throws std::domain_error.
Poly gcd(Poly p, Poly q);
Poly pow(const Poly& p, std::uint64_t n);
Poly square(const Poly& p);
/// (a * b) mod m and base^e mod m.
Poly mul_mod(const Poly& a, const Poly& b, const Poly& m);
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m);
/// base^(2^k) mod m by k modular squarings.
Poly frobenius_mod(const Poly& base, std::size_t k, const Poly& m);

/// p(x+1).
Poly bar(const Poly& p);
Poly derivative(const Poly& p);
/// Largest e with root^e dividing p. Throws std::domain_error on zero.
std::size_t valuation(const Poly& p, LinearRoot at);

/// Coefficient of x^(deg p - l). Throws std::domain_error on zero p and
/// std::out_of_range when l > deg p.
bool alpha(const Poly& p, std::size_t l);

bool is_square(const Poly& p);
/// Square root of a square; throws std::domain_error otherwise.
Poly sqrt(const Poly& p);

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Resolves named aliases (catalog names) during parsing.
using AliasResolver = std::function<std::optional<Poly>(std::string_view)>;

/// Parses a sparse expression ("x^4+x^3+1", "x^2(x+1)^3*M1", "bar(M2)") or a
/// hex coefficient mask ("0x13"). Throws ParseError on malformed input.
Poly parse(std::string_view text, const AliasResolver& aliases = {});
/// Canonical descending-power form, e.g. "x^4+x^3+1"; "0" for zero.
std::string format(const Poly& p);

}  // namespace gf2p

template <>
struct std::hash<gf2p::Poly> {
    std::size_t operator()(const gf2p::Poly& p) const noexcept { return p.hash(); }
};
