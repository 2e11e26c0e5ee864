#pragma once

#include <cstdint>
#include <vector>

// Dense polynomials over the prime field F_p, coefficients ascending.
// Only what the extension-field machinery needs: reduction, products,
// gcd and the irreducibility test.
namespace invforge::fp_poly {

using Poly = std::vector<std::uint32_t>;

/// Drops trailing zero coefficients. The zero polynomial is empty.
void trim(Poly& f);

/// Degree of a trimmed polynomial; -1 for zero.
int degree(const Poly& f);

Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);

/// Remainder of a modulo a nonzero divisor.
Poly rem(Poly a, const Poly& divisor, std::uint32_t p);

/// Monic gcd.
Poly gcd(Poly a, Poly b, std::uint32_t p);

/// base^e mod modulus.
Poly pow_mod(Poly base, std::uint64_t e, const Poly& modulus, std::uint32_t p);

/// Rabin's test. f must have degree >= 1; it need not be monic.
bool is_irreducible(const Poly& f, std::uint32_t p);

/// Base-p integer encoding, constant term least significant.
std::uint64_t encode(const Poly& f, std::uint32_t p);
Poly decode(std::uint64_t code, std::uint32_t p);

}  // namespace invforge::fp_poly
