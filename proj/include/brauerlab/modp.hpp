#ifndef BRAUERLAB_MODP_HPP
#define BRAUERLAB_MODP_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

#include "brauerlab/rational.hpp"

namespace brauerlab {

// Arithmetic mod a prime p with 2^30 < p < 2^31; products fit in uint64.

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a * b % p;
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t x = 1;
    a %= p;
    while (e > 0) {
        if (e & 1) x = mul_mod(x, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return x;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("division by zero mod p");
    return pow_mod(a % p, p - 2, p);
}

// Deterministic Miller-Rabin, valid for n < 3.2 * 10^18 with this base set.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// A random prime in (2^30, 2^31).
inline std::uint64_t random_prime_31(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist((1ull << 30) + 1, (1ull << 31) - 1);
    for (;;) {
        std::uint64_t c = dist(rng) | 1;
        if (is_prime(c)) return c;
    }
}

// Image of an exact rational in F_p. Throws if p divides the denominator.
inline std::uint64_t rational_mod_p(const Rational& r, std::uint64_t p) {
    Integer num = numerator(r), den = denominator(r);
    Integer pn = num % Integer(p), pd = den % Integer(p);
    if (pd == 0) throw std::domain_error("denominator divisible by p");
    std::uint64_t un = static_cast<std::uint64_t>(pn < 0 ? pn + Integer(p) : pn);
    std::uint64_t ud = static_cast<std::uint64_t>(pd);
    return mul_mod(un, inv_mod(ud, p), p);
}

} // namespace brauerlab

#endif
