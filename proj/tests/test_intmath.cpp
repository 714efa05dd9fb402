#include <doctest.h>

#include "gf2p/intmath.hpp"

using namespace gf2p::intmath;

TEST_CASE("is_prime") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(65537));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(is_prime(18446744073709551557ULL));
    CHECK_FALSE(is_prime(18446744073709551615ULL));
}

TEST_CASE("factorize") {
    using F = std::vector<std::pair<std::uint64_t, unsigned>>;
    CHECK(factorize(1).empty());
    CHECK(factorize(360) == F{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize((1ULL << 32) + 1) == F{{641, 1}, {6700417, 1}});
    CHECK(factorize(18446744073709551615ULL) == F{{3, 1}, {5, 1}, {17, 1}, {257, 1}, {641, 1}, {65537, 1}, {6700417, 1}});
    CHECK(factorize(4294967291ULL * 4294967279ULL) == F{{4294967279ULL, 1}, {4294967291ULL, 1}});
}

TEST_CASE("arithmetic functions") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(12) == 4);
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
}
