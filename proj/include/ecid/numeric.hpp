#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ecid {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Largest field order / integer the toolkit accepts (2^63).
inline constexpr u64 kMaxOrder = u64{1} << 63;

u64 gcd(u64 a, u64 b);
/// Throws DomainError on overflow past kMaxOrder.
u64 lcm(u64 a, u64 b);
u64 checked_mul(u64 a, u64 b);
u64 checked_pow(u64 base, unsigned exp);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);
std::vector<u64> prime_divisors(u64 n);

u64 euler_phi(u64 n);

/// Least a > 0 with base^a = 1 (mod modulus); 1 when modulus == 1.
/// Throws DomainError when gcd(base, modulus) != 1.
u64 multiplicative_order(u64 base, u64 modulus);

u64 isqrt(u64 n);
/// Least n with n*n*den >= num, i.e. ceil(sqrt(num/den)) computed without floating point.
u64 ceil_sqrt_ratio(u64 num, u64 den);

/// q = p^alpha with p prime.
struct PrimePower {
    u64 p = 0;
    unsigned alpha = 0;
    u64 q = 0;

    static PrimePower from_parts(u64 p, unsigned alpha);
    /// Throws DomainError when q is not a prime power.
    static PrimePower from_q(u64 q);

    bool operator==(const PrimePower&) const = default;
};

}  // namespace ecid
