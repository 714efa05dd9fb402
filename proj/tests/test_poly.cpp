#include <doctest.h>

#include "gf2p/divisors.hpp"
#include "gf2p/factor.hpp"
#include "helpers.hpp"

using namespace gf2p;
using gf2p::testing::P;

TEST_CASE("add") {
    CHECK((P("x^2+x+1") + P("x^2+x+1")).is_zero());
    CHECK(P("x^3+x+1") + P("x^3+x^2+1") == P("x^2+x"));
    const Poly p = P("x^5+x^2+1");
    CHECK(p + Poly::zero() == p);
    CHECK(p - p == Poly::zero());
}

TEST_CASE("mul") {
    CHECK(P("x^3+x+1") * P("x^3+x^2+1") == P("x^6+x^5+x^4+x^3+x^2+x+1"));
    CHECK(Poly::x() * Poly::x_plus_one() == P("x^2+x"));
    CHECK(pow(P("x+1"), 3) == P("x^3+x^2+x+1"));
    CHECK((P("x^7+1") * Poly::zero()).is_zero());
    CHECK(P("x^100") * P("x^100") == Poly::monomial(200));
}

TEST_CASE("div_rem") {
    auto [q, r] = div_rem(P("x^2+x"), Poly::x());
    CHECK(q == P("x+1"));
    CHECK(r.is_zero());

    const Poly p = P("x^4+x^3+x^2+x+1"), d = P("x^2+x+1");
    auto [q2, r2] = div_rem(p, d);
    CHECK(q2 * d + r2 == p);
    CHECK(r2.deg() < d.deg());

    auto [q3, r3] = div_rem(p, Poly::one());
    CHECK(q3 == p);
    CHECK(r3.is_zero());

    CHECK_THROWS_AS(div_rem(p, Poly::zero()), std::domain_error);
    CHECK_THROWS(exact_div(p, d));
}

TEST_CASE("gcd") {
    CHECK(gcd(P("x^2+x"), Poly::x()) == Poly::x());
    CHECK(gcd(P("M2"), P("M2bar")).is_one());
    const Poly p = P("x^9+x^4+1");
    CHECK(gcd(p, Poly::zero()) == p);
    CHECK(gcd(P("(x+1)^3 x^2"), P("(x+1)^2 x^5 M1")) == P("x^2(x+1)^2"));
}

TEST_CASE("pow") {
    CHECK(pow(P("x+1"), 2) == P("x^2+1"));
    CHECK(pow(P("M1"), 2) == P("x^4+x^2+1"));
    const Poly p = P("x^3+x^2+1");
    CHECK(pow(p, 1) == p);
    CHECK(pow(p, 0).is_one());
    CHECK(pow(p, 13) == p * pow(p, 12));
}

TEST_CASE("bar") {
    CHECK(bar(P("x^3+x+1")) == P("x^3+x^2+1"));
    CHECK(bar(P("x^2+x+1")) == P("x^2+x+1"));
    CHECK(bar(P("x^4+x^3+x^2+x+1")) == P("x^4+x^3+1"));
    CHECK(bar(Poly::x()) == Poly::x_plus_one());
    // Crosses a word boundary.
    CHECK(bar(Poly::monomial(70)) == pow(P("x+1"), 70));
}

TEST_CASE("valuation") {
    CHECK(valuation(P("x^2+x"), LinearRoot::x) == 1);
    CHECK(valuation(P("T1"), LinearRoot::x) == 2);
    CHECK(valuation(P("M3"), LinearRoot::x_plus_one) == 0);
    CHECK(valuation(P("x^5(x+1)^9"), LinearRoot::x_plus_one) == 9);
}

TEST_CASE("alpha") {
    const Poly p = P("x^3+x+1");
    CHECK(alpha(p, 0));
    CHECK_FALSE(alpha(p, 1));
    CHECK(alpha(p, 2));
    CHECK(alpha(p, 3));
    CHECK_THROWS_AS(alpha(p, 4), std::out_of_range);
    CHECK_THROWS(alpha(Poly::zero(), 0));
}

TEST_CASE("alpha_3 of U_2 for the degree-7 Mersenne primes") {
    for (const auto& m : enumerate_mersenne_primes(7)) {
        if (m.degree() != 7) continue;
        const Poly s = sigma_prime_power(m.poly, 2);
        if (omega(s) < 3) continue;
        CHECK(alpha(sigma(s), 3));
    }
}

TEST_CASE("squares") {
    CHECK(is_square(P("x^2+1")));
    CHECK(sqrt(P("x^2+1")) == P("x+1"));
    CHECK(is_square(P("x^8(x+1)^4(x^3+x+1)^2")));
    CHECK_FALSE(is_square(P("x^3+x+1")));
    CHECK_THROWS_AS(sqrt(P("x^3+x+1")), std::domain_error);
}

TEST_CASE("degree of zero is a sentinel") {
    CHECK_FALSE(Poly::zero().degree().has_value());
    CHECK_THROWS_AS(Poly::zero().deg(), std::domain_error);
    CHECK(Poly::one().degree() == 0u);
}

TEST_CASE("canonical ordering is by degree then mask") {
    CHECK(P("x^2") < P("x^2+1"));
    CHECK(P("x^2+x+1") < P("x^3"));
    CHECK(Poly::zero() < Poly::one());
}

TEST_CASE("derivative") {
    CHECK(derivative(P("x^4+x^3+x+1")) == P("x^2+1"));
    CHECK(derivative(P("x^2")).is_zero());
}

TEST_CASE("hardware and software carry-less kernels agree") {
    const Poly a = Poly::from_words({0x123456789abcdef0ULL, 0xfedcba9876543210ULL, 0x5});
    const Poly b = Poly::from_words({0xdeadbeefcafebabeULL, 0x1});
    CHECK(mul_clmul(a, b) == mul_schoolbook(a, b));
    INFO("hardware clmul: " << hardware_clmul_available());
}
