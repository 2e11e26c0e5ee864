#include "doctest.h"

#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

#include "invforge/fp_poly.hpp"
#include "invforge/number_theory.hpp"

using namespace invforge;

namespace {

std::vector<bool> sieve(std::size_t n) {
    std::vector<bool> prime(n + 1, true);
    prime[0] = false;
    if (n >= 1) prime[1] = false;
    for (std::size_t i = 2; i * i <= n; ++i) {
        if (!prime[i]) continue;
        for (std::size_t j = i * i; j <= n; j += i) prime[j] = false;
    }
    return prime;
}

// Reducible iff some monic polynomial of degree 1..deg/2 divides it.
bool brute_force_irreducible(const fp_poly::Poly& f, std::uint32_t p) {
    const int n = fp_poly::degree(f);
    for (int d = 1; d <= n / 2; ++d) {
        std::uint64_t count = 1;
        for (int k = 0; k < d; ++k) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            fp_poly::Poly g(d + 1, 0);
            std::uint64_t c = code;
            for (int k = 0; k < d; ++k) {
                g[k] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (fp_poly::rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("is_prime agrees with a sieve below 100000") {
    const auto prime = sieve(100000);
    for (std::uint64_t n = 0; n <= 100000; ++n) CHECK_MESSAGE(is_prime(n) == prime[n], n);
}

TEST_CASE("is_prime on large values") {
    CHECK(is_prime(4294967291ULL));
    CHECK(is_prime(18446744073709551557ULL));
    CHECK_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("factorize multiplies back and lists primes ascending") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint64_t n = 1 + rng() % 10'000'000;
        const auto factors = factorize(n);
        std::uint64_t product = 1;
        std::uint64_t last = 0;
        for (const auto& [p, e] : factors) {
            CHECK(is_prime(p));
            CHECK(p > last);
            last = p;
            for (unsigned k = 0; k < e; ++k) product *= p;
        }
        CHECK(product == n);
    }
    CHECK(factorize(1).empty());
    CHECK(factorize(40) == std::vector<PrimePower>{{2, 3}, {5, 1}});
}

TEST_CASE("divisors") {
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    for (std::uint64_t n = 1; n < 500; ++n) {
        std::vector<std::uint64_t> expected;
        for (std::uint64_t d = 1; d <= n; ++d) {
            if (n % d == 0) expected.push_back(d);
        }
        CHECK(divisors(n) == expected);
    }
}

TEST_CASE("mod_inverse") {
    for (std::uint64_t m = 2; m < 200; ++m) {
        for (std::uint64_t a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) {
                CHECK_THROWS_AS(mod_inverse(a, m), std::invalid_argument);
                continue;
            }
            const auto inv = mod_inverse(a, m);
            CHECK(inv < m);
            CHECK(a * inv % m == 1);
        }
    }
    CHECK(mod_inverse(5, 1) == 0);
}

TEST_CASE("as_prime_power") {
    CHECK(as_prime_power(41) == PrimePower{41, 1});
    CHECK(as_prime_power(1024) == PrimePower{2, 10});
    CHECK(as_prime_power(729) == PrimePower{3, 6});
    CHECK(as_prime_power(40) == PrimePower{0, 0});
    CHECK(as_prime_power(1) == PrimePower{0, 0});
    CHECK(as_prime_power(0) == PrimePower{0, 0});
}

TEST_CASE("Rabin irreducibility matches trial division") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int deg = 1; deg <= (p == 2 ? 8 : 4); ++deg) {
            std::uint64_t count = 1;
            for (int k = 0; k < deg; ++k) count *= p;
            for (std::uint64_t code = 0; code < count; ++code) {
                fp_poly::Poly f(deg + 1, 0);
                std::uint64_t c = code;
                for (int k = 0; k < deg; ++k) {
                    f[k] = static_cast<std::uint32_t>(c % p);
                    c /= p;
                }
                f[deg] = 1;
                CHECK_MESSAGE(fp_poly::is_irreducible(f, p) == brute_force_irreducible(f, p),
                              "p=" << p << " code=" << code);
            }
        }
    }
}

TEST_CASE("number of monic irreducibles of degree n over F_2") {
    // Gauss: 1/n sum_{d|n} mu(d) 2^(n/d); for n = 1..8: 2,1,2,3,6,9,18,30
    const std::array<int, 8> expected = {2, 1, 2, 3, 6, 9, 18, 30};
    for (int n = 1; n <= 8; ++n) {
        int found = 0;
        for (std::uint64_t code = 0; code < (1ULL << n); ++code) {
            auto f = fp_poly::decode(code | (1ULL << n), 2);
            if (fp_poly::is_irreducible(f, 2)) ++found;
        }
        CHECK(found == expected[n - 1]);
    }
}

TEST_CASE("encode/decode round trip") {
    for (std::uint64_t code = 0; code < 3000; ++code) CHECK(fp_poly::encode(fp_poly::decode(code, 7), 7) == code);
    CHECK(fp_poly::decode(19, 2) == fp_poly::Poly{1, 1, 0, 0, 1});
}
