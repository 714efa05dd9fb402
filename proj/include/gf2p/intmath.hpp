#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gf2p::intmath {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 e, u64 m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
/// Trial division for small factors, Pollard rho (Brent) for the rest.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

u64 euler_phi(u64 m);
int mobius(u64 m);
std::vector<u64> divisors(u64 m);

}  // namespace gf2p::intmath
