#include <cctype>
#include <charconv>
#include <string>

#include "gf2p/poly.hpp"

namespace gf2p {

namespace {

// Guards against inputs like "x^99999999999" allocating unbounded memory.
constexpr std::size_t kMaxParsedDegree = std::size_t{1} << 24;

class Parser {
public:
    Parser(std::string_view text, const AliasResolver& aliases) : text_(text), aliases_(aliases) {}

    Poly run() {
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial expression");
        Poly p = expr();
        skip_ws();
        if (!at_end()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Poly expr() {
        Poly acc = term();
        while (accept('+') || accept('-')) acc += term();
        return acc;
    }

    bool starts_atom() {
        skip_ws();
        const char c = peek();
        return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    Poly term() {
        Poly acc = power();
        for (;;) {
            if (accept('*')) {
                acc = mul(acc, power());
            } else if (starts_atom()) {
                acc = mul(acc, power());
            } else {
                return acc;
            }
        }
    }

    std::uint64_t unsigned_int() {
        skip_ws();
        const bool braced = accept('{');
        skip_ws();
        std::uint64_t v = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr == first) fail("expected a nonnegative integer");
        pos_ += static_cast<std::size_t>(ptr - first);
        if (braced) expect('}');
        return v;
    }

    Poly power() {
        Poly base = atom();
        while (accept('^')) {
            const std::uint64_t e = unsigned_int();
            if (!base.is_constant()) {
                const std::size_t d = base.deg();
                if (e > kMaxParsedDegree || d * e > kMaxParsedDegree) fail("exponent too large");
            }
            base = pow(base, e);
        }
        return base;
    }

    Poly hex_literal() {
        pos_ += 2;  // "0x"
        const std::size_t start = pos_;
        while (!at_end() && std::isxdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("empty hex literal");
        const std::string_view digits = text_.substr(start, pos_ - start);
        std::vector<Poly::Word> words((digits.size() + 15) / 16, 0);
        for (std::size_t i = 0; i < digits.size(); ++i) {
            const char c = digits[digits.size() - 1 - i];
            const unsigned v = std::isdigit(static_cast<unsigned char>(c))
                                   ? static_cast<unsigned>(c - '0')
                                   : static_cast<unsigned>(std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
            words[i / 16] |= Poly::Word{v} << (4 * (i % 16));
        }
        return Poly::from_words(std::move(words));
    }

    Poly atom() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            expect(')');
            return inner;
        }
        if (c == '0' && pos_ + 1 < text_.size() && (text_[pos_ + 1] == 'x' || text_[pos_ + 1] == 'X')) {
            return hex_literal();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            const std::uint64_t v = unsigned_int();
            if (v > 1) {
                pos_ = start;
                fail("coefficient must be 0 or 1");
            }
            return v == 1 ? Poly::one() : Poly{};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "x") return Poly::x();
            if (name == "bar") {
                expect('(');
                Poly inner = expr();
                expect(')');
                return gf2p::bar(inner);
            }
            if (aliases_) {
                if (auto p = aliases_(name)) return *p;
            }
            pos_ = start;
            fail("unknown name '" + std::string(name) + "'");
        }
        fail(at_end() ? "unexpected end of input" : "unexpected character");
    }

    std::string_view text_;
    const AliasResolver& aliases_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse(std::string_view text, const AliasResolver& aliases) { return Parser(text, aliases).run(); }

std::string format(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.deg() + 1; i-- > 0;) {
        if (!p.coeff(i)) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += '1';
        } else if (i == 1) {
            out += 'x';
        } else {
            out += "x^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace gf2p
