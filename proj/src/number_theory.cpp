#include "invforge/number_theory.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace invforge {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    constexpr std::array<std::uint64_t, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t b : bases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : bases) {
        std::uint64_t x = powmod(a, d, n);
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

std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize(0)");
    std::vector<PrimePower> factors;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        factors.push_back({p, k});
    }
    if (n > 1) factors.push_back({n, 1});
    return factors;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> result{1};
    for (const auto& [p, k] : factorize(n)) {
        const std::size_t existing = result.size();
        std::uint64_t power = 1;
        for (unsigned j = 1; j <= k; ++j) {
            power *= p;
            for (std::size_t idx = 0; idx < existing; ++idx) result.push_back(result[idx] * power);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 0;
    // extended Euclid on signed 128-bit to avoid overflow near 2^64
    __int128 old_r = static_cast<__int128>(a % m), r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 quotient = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - quotient * r};
        std::tie(old_s, s) = std::pair{s, old_s - quotient * s};
    }
    if (old_r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    __int128 result = old_s % static_cast<__int128>(m);
    if (result < 0) result += m;
    return static_cast<std::uint64_t>(result);
}

PrimePower as_prime_power(std::uint64_t n) {
    if (n < 2) return {0, 0};
    const auto factors = factorize(n);
    if (factors.size() != 1) return {0, 0};
    return factors.front();
}

}  // namespace invforge
