#include "gf2p/poly.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <stdexcept>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define GF2P_HAVE_X86_CLMUL 1
#endif

namespace gf2p {

using Word = Poly::Word;
constexpr std::size_t kBits = Poly::kWordBits;

namespace {

// Operands with at most this many set coefficients are multiplied by
// shift-XOR instead of the word kernel.
constexpr std::size_t kSparseCrossover = 4;

std::size_t words_for_bits(std::size_t bits) { return (bits + kBits - 1) / kBits; }

// out ^= in << shift, with out large enough.
void xor_shifted(std::vector<Word>& out, std::span<const Word> in, std::size_t shift) {
    const std::size_t ws = shift / kBits;
    const std::size_t bs = shift % kBits;
    if (bs == 0) {
        for (std::size_t i = 0; i < in.size(); ++i) out[i + ws] ^= in[i];
        return;
    }
    for (std::size_t i = 0; i < in.size(); ++i) {
        out[i + ws] ^= in[i] << bs;
        out[i + ws + 1] ^= in[i] >> (kBits - bs);
    }
}

void clmul_soft(Word a, Word b, Word& lo, Word& hi) {
    // 4-bit window over a; b's top nibble is handled separately so table
    // entries never overflow a word.
    const Word b_low = b & 0x0FFFFFFFFFFFFFFFULL;
    Word tab[16];
    tab[0] = 0;
    tab[1] = b_low;
    for (int k = 2; k < 16; ++k) tab[k] = (k & 1) ? tab[k ^ 1] ^ b_low : tab[k >> 1] << 1;
    Word l = tab[a & 15];
    Word h = 0;
    for (int i = 4; i < 64; i += 4) {
        const Word t = tab[(a >> i) & 15];
        l ^= t << i;
        h ^= t >> (64 - i);
    }
    for (int t = 60; t < 64; ++t) {
        if ((b >> t) & 1) {
            l ^= a << t;
            h ^= a >> (64 - t);
        }
    }
    lo = l;
    hi = h;
}

void mul_words_soft(std::span<const Word> p, std::span<const Word> q, std::vector<Word>& r) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            Word lo, hi;
            clmul_soft(p[i], q[j], lo, hi);
            r[i + j] ^= lo;
            r[i + j + 1] ^= hi;
        }
    }
}

#ifdef GF2P_HAVE_X86_CLMUL
__attribute__((target("pclmul,sse2"))) void mul_words_hw(std::span<const Word> p,
                                                         std::span<const Word> q,
                                                         std::vector<Word>& r) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        const __m128i a = _mm_set_epi64x(0, static_cast<long long>(p[i]));
        for (std::size_t j = 0; j < q.size(); ++j) {
            const __m128i b = _mm_set_epi64x(0, static_cast<long long>(q[j]));
            const __m128i c = _mm_clmulepi64_si128(a, b, 0x00);
            r[i + j] ^= static_cast<Word>(_mm_cvtsi128_si64(c));
            r[i + j + 1] ^= static_cast<Word>(_mm_cvtsi128_si64(_mm_srli_si128(c, 8)));
        }
    }
}

bool detect_clmul() noexcept {
    __builtin_cpu_init();
    return __builtin_cpu_supports("pclmul");
}
#else
bool detect_clmul() noexcept { return false; }
#endif

// Spread the 32 bits of v into the even positions of a 64-bit word.
Word spread32(Word v) {
    v &= 0xFFFFFFFFULL;
    v = (v | (v << 16)) & 0x0000FFFF0000FFFFULL;
    v = (v | (v << 8)) & 0x00FF00FF00FF00FFULL;
    v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0FULL;
    v = (v | (v << 2)) & 0x3333333333333333ULL;
    v = (v | (v << 1)) & 0x5555555555555555ULL;
    return v;
}

// Inverse of spread32: gather even-position bits into the low half.
Word compress32(Word v) {
    v &= 0x5555555555555555ULL;
    v = (v | (v >> 1)) & 0x3333333333333333ULL;
    v = (v | (v >> 2)) & 0x0F0F0F0F0F0F0F0FULL;
    v = (v | (v >> 4)) & 0x00FF00FF00FF00FFULL;
    v = (v | (v >> 8)) & 0x0000FFFF0000FFFFULL;
    v = (v | (v >> 16)) & 0x00000000FFFFFFFFULL;
    return v;
}

std::size_t top_bit(const std::vector<Word>& w) {
    return (w.size() - 1) * kBits + (kBits - 1 - static_cast<std::size_t>(std::countl_zero(w.back())));
}

void trim_vec(std::vector<Word>& w) {
    while (!w.empty() && w.back() == 0) w.pop_back();
}

}  // namespace

bool hardware_clmul_available() noexcept {
    static const bool available = detect_clmul();
    return available;
}

Poly Poly::monomial(std::size_t k) {
    std::vector<Word> w(k / kBits + 1, 0);
    w.back() = Word{1} << (k % kBits);
    return Poly(std::move(w));
}

Poly Poly::from_mask(Word mask) { return Poly(std::vector<Word>{mask}); }

Poly Poly::from_words(std::vector<Word> words) { return Poly(std::move(words)); }

Poly Poly::from_exponents(std::initializer_list<std::size_t> exps) {
    Poly r;
    for (std::size_t e : exps) r += monomial(e);
    return r;
}

void Poly::trim() noexcept { trim_vec(words_); }

std::optional<std::size_t> Poly::degree() const noexcept {
    if (words_.empty()) return std::nullopt;
    return top_bit(words_);
}

std::size_t Poly::deg() const {
    if (words_.empty()) throw std::domain_error("degree of the zero polynomial");
    return top_bit(words_);
}

bool Poly::coeff(std::size_t i) const noexcept {
    const std::size_t w = i / kBits;
    return w < words_.size() && ((words_[w] >> (i % kBits)) & 1);
}

std::size_t Poly::popcount() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::optional<Word> Poly::mask() const noexcept {
    if (words_.empty()) return Word{0};
    if (words_.size() > 1) return std::nullopt;
    return words_[0];
}

std::string Poly::to_hex() const {
    if (words_.empty()) return "0x0";
    std::string out = "0x";
    char buf[17];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(words_.back()));
    out += buf;
    for (std::size_t i = words_.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(words_[i]));
        out += buf;
    }
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = mul(*this, rhs); }

Poly operator*(const Poly& lhs, const Poly& rhs) { return mul(lhs, rhs); }
Poly operator/(const Poly& lhs, const Poly& rhs) { return div_rem(lhs, rhs).quotient; }
Poly operator%(const Poly& lhs, const Poly& rhs) { return mod(lhs, rhs); }

std::strong_ordering operator<=>(const Poly& lhs, const Poly& rhs) noexcept {
    if (auto c = lhs.words_.size() <=> rhs.words_.size(); c != 0) return c;
    for (std::size_t i = lhs.words_.size(); i-- > 0;) {
        if (auto c = lhs.words_[i] <=> rhs.words_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Poly Poly::shifted(std::size_t k) const {
    if (words_.empty()) return {};
    std::vector<Word> out(words_.size() + k / kBits + 1, 0);
    xor_shifted(out, words_, k);
    return Poly(std::move(out));
}

std::size_t Poly::hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Word w : words_) {
        h ^= static_cast<std::size_t>(w);
        h *= 0x100000001b3ULL;
        h ^= h >> 29;
    }
    return h;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }

Poly mul_schoolbook(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    const Poly& dense = p.popcount() >= q.popcount() ? p : q;
    const Poly& sparse = &dense == &p ? q : p;
    std::vector<Word> out(dense.words().size() + sparse.words().size() + 1, 0);
    const auto sw = sparse.words();
    for (std::size_t wi = 0; wi < sw.size(); ++wi) {
        for (Word w = sw[wi]; w != 0; w &= w - 1) {
            xor_shifted(out, dense.words(), wi * kBits + static_cast<std::size_t>(std::countr_zero(w)));
        }
    }
    return Poly::from_words(std::move(out));
}

Poly mul_clmul(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Word> out(p.words().size() + q.words().size(), 0);
#ifdef GF2P_HAVE_X86_CLMUL
    if (hardware_clmul_available()) {
        mul_words_hw(p.words(), q.words(), out);
        return Poly::from_words(std::move(out));
    }
#endif
    mul_words_soft(p.words(), q.words(), out);
    return Poly::from_words(std::move(out));
}

Poly mul(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    if (std::min(p.popcount(), q.popcount()) <= kSparseCrossover) return mul_schoolbook(p, q);
    return mul_clmul(p, q);
}

Poly square(const Poly& p) {
    const auto w = p.words();
    std::vector<Word> out(2 * w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        out[2 * i] = spread32(w[i]);
        out[2 * i + 1] = spread32(w[i] >> 32);
    }
    return Poly::from_words(std::move(out));
}

DivRem div_rem(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (p.is_zero()) return {};
    const std::size_t dd = d.deg();
    const std::size_t pd = p.deg();
    if (pd < dd) return {Poly{}, p};
    std::vector<Word> r(p.words().begin(), p.words().end());
    r.push_back(0);
    std::vector<Word> q(words_for_bits(pd - dd + 1), 0);
    for (std::size_t i = pd + 1; i-- > dd;) {
        if ((r[i / kBits] >> (i % kBits)) & 1) {
            const std::size_t s = i - dd;
            q[s / kBits] |= Word{1} << (s % kBits);
            xor_shifted(r, d.words(), s);
        }
    }
    return {Poly::from_words(std::move(q)), Poly::from_words(std::move(r))};
}

Poly mod(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (p.is_zero()) return {};
    const std::size_t dd = d.deg();
    const std::size_t pd = p.deg();
    if (pd < dd) return p;
    std::vector<Word> r(p.words().begin(), p.words().end());
    r.push_back(0);
    for (std::size_t i = pd + 1; i-- > dd;) {
        if ((r[i / kBits] >> (i % kBits)) & 1) xor_shifted(r, d.words(), i - dd);
    }
    return Poly::from_words(std::move(r));
}

bool divides(const Poly& d, const Poly& p) { return mod(p, d).is_zero(); }

Poly exact_div(const Poly& p, const Poly& d) {
    auto [q, r] = div_rem(p, d);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Poly gcd(Poly p, Poly q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    while (!q.is_zero()) {
        Poly r = mod(p, q);
        p = std::move(q);
        q = std::move(r);
    }
    return p;
}

Poly pow(const Poly& p, std::uint64_t n) {
    Poly result = Poly::one();
    Poly base = p;
    while (n != 0) {
        if (n & 1) result = mul(result, base);
        n >>= 1;
        if (n != 0) base = square(base);
    }
    return result;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m) { return mod(mul(a, b), m); }

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m) {
    Poly result = mod(Poly::one(), m);
    Poly b = mod(base, m);
    while (e != 0) {
        if (e & 1) result = mul_mod(result, b, m);
        e >>= 1;
        if (e != 0) b = mod(square(b), m);
    }
    return result;
}

Poly frobenius_mod(const Poly& base, std::size_t k, const Poly& m) {
    Poly r = mod(base, m);
    for (std::size_t i = 0; i < k; ++i) r = mod(square(r), m);
    return r;
}

Poly bar(const Poly& p) {
    // Taylor shift by 1, bottom-up over block sizes s = 1, 2, 4, ...:
    // a block lo + x^s hi becomes (lo + hi) + x^s hi.
    std::vector<Word> w(p.words().begin(), p.words().end());
    if (w.empty()) return {};
    static constexpr Word kLowHalves[6] = {
        0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
        0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
    for (Word& v : w) {
        for (int k = 0; k < 6; ++k) v ^= (v >> (1u << k)) & kLowHalves[k];
    }
    for (std::size_t s = 1; s < w.size(); s <<= 1) {
        for (std::size_t b = 0; b + s < w.size(); b += 2 * s) {
            for (std::size_t t = 0; t < s && b + s + t < w.size(); ++t) w[b + t] ^= w[b + s + t];
        }
    }
    return Poly::from_words(std::move(w));
}

Poly derivative(const Poly& p) {
    std::vector<Word> w(p.words().begin(), p.words().end());
    for (Word& v : w) v = (v & 0xAAAAAAAAAAAAAAAAULL) >> 1;
    return Poly::from_words(std::move(w));
}

std::size_t valuation(const Poly& p, LinearRoot at) {
    if (p.is_zero()) throw std::domain_error("valuation of the zero polynomial");
    const Poly q = at == LinearRoot::x ? p : bar(p);
    const auto w = q.words();
    std::size_t i = 0;
    while (w[i] == 0) ++i;
    return i * kBits + static_cast<std::size_t>(std::countr_zero(w[i]));
}

bool alpha(const Poly& p, std::size_t l) {
    const std::size_t s = p.deg();
    if (l > s) throw std::out_of_range("alpha index exceeds the degree");
    return p.coeff(s - l);
}

bool is_square(const Poly& p) {
    for (Word v : p.words()) {
        if (v & 0xAAAAAAAAAAAAAAAAULL) return false;
    }
    return true;
}

Poly sqrt(const Poly& p) {
    if (!is_square(p)) throw std::domain_error("square root of a non-square polynomial");
    const auto w = p.words();
    std::vector<Word> out(words_for_bits(w.size() * kBits / 2) + 1, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Word half = compress32(w[i]);
        const std::size_t bit = i * (kBits / 2);
        out[bit / kBits] |= half << (bit % kBits);
    }
    return Poly::from_words(std::move(out));
}

}  // namespace gf2p
