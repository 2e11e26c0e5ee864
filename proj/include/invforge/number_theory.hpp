#pragma once

#include <cstdint>
#include <vector>

namespace invforge {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    bool operator==(const PrimePower&) const = default;
};

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

/// All positive divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Inverse of a modulo m (m >= 1, gcd(a, m) = 1). Returns 0 when m == 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

/// If n = p^k for a prime p and k >= 1, returns {p, k}; otherwise {0, 0}.
PrimePower as_prime_power(std::uint64_t n);

}  // namespace invforge
