#include "ecid/numeric.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ecid/errors.hpp"

namespace ecid {

using u128 = unsigned __int128;

u64 gcd(u64 a, u64 b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

u64 checked_mul(u64 a, u64 b) {
    const u128 r = static_cast<u128>(a) * b;
    if (r > kMaxOrder) throw DomainError("integer overflow: product exceeds 2^63");
    return static_cast<u64>(r);
}

u64 lcm(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd(a, b), b);
}

u64 checked_pow(u64 base, unsigned exp) {
    u64 r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// Brent's variant of Pollard rho; n must be composite and odd.
u64 pollard_rho(u64 n) {
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        constexpr u64 m = 128;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd(q, n);
                k += m;
            }
            r <<= 1;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(u64 n, std::map<u64, unsigned>& out) {
    if (n == 1) return;
    for (u64 small = 2; small < 64 && small * small <= n; ++small) {
        while (n % small == 0) {
            ++out[small];
            n /= small;
        }
    }
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    const u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    if (n == 0) throw DomainError("factorize: zero has no factorization");
    std::map<u64, unsigned> acc;
    factor_into(n, acc);
    return {acc.begin(), acc.end()};
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (const auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

u64 euler_phi(u64 n) {
    if (n == 0) throw DomainError("euler_phi: argument must be positive");
    u64 result = n;
    for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

u64 multiplicative_order(u64 base, u64 modulus) {
    if (modulus == 0) throw DomainError("multiplicative_order: modulus must be positive");
    if (modulus == 1) return 1;
    if (gcd(base % modulus, modulus) != 1) {
        throw DomainError("multiplicative_order: base " + std::to_string(base) + " is not a unit mod " +
                          std::to_string(modulus));
    }
    // The order divides phi(modulus); strip prime factors while the power stays 1.
    u64 order = euler_phi(modulus);
    for (const auto& [r, e] : factorize(order)) {
        for (unsigned i = 0; i < e; ++i) {
            if (powmod(base, order / r, modulus) != 1) break;
            order /= r;
        }
    }
    return order;
}

u64 isqrt(u64 n) {
    // Monotone bisection on x*x <= n.
    u64 lo = 0, hi = u64{1} << 32;
    while (hi - lo > 1) {
        const u64 mid = lo + (hi - lo) / 2;
        if (static_cast<u128>(mid) * mid <= n) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

u64 ceil_sqrt_ratio(u64 num, u64 den) {
    if (den == 0) throw DomainError("ceil_sqrt_ratio: zero denominator");
    u64 lo = 0, hi = isqrt(num) + 1;  // hi satisfies hi^2*den >= num
    while (hi - lo > 1) {
        const u64 mid = lo + (hi - lo) / 2;
        if (static_cast<u128>(mid) * mid * den >= num) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if (num == 0) return 0;
    return hi;
}

PrimePower PrimePower::from_parts(u64 p, unsigned alpha) {
    if (!is_prime(p)) throw DomainError("prime power: " + std::to_string(p) + " is not prime");
    if (alpha == 0) throw DomainError("prime power: exponent must be at least 1");
    return {p, alpha, checked_pow(p, alpha)};
}

PrimePower PrimePower::from_q(u64 q) {
    if (q < 2 || q > kMaxOrder) throw DomainError("prime power: q out of range");
    if (is_prime(q)) return {q, 1, q};
    const auto f = factorize(q);
    if (f.size() != 1) throw DomainError("prime power: " + std::to_string(q) + " is not a prime power");
    return {f[0].first, f[0].second, q};
}

}  // namespace ecid
