#include "invforge/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "invforge/number_theory.hpp"

namespace invforge::fp_poly {

namespace {

std::uint32_t inverse_mod_p(std::uint32_t a, std::uint32_t p) {
    return static_cast<std::uint32_t>(mod_inverse(a, p));
}

}  // namespace

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) {
    return static_cast<int>(f.size()) - 1;
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::uint64_t x = i < a.size() ? a[i] : 0;
        const std::uint64_t y = i < b.size() ? b[i] : 0;
        out[i] = static_cast<std::uint32_t>((x + p - y) % p);
    }
    trim(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
        }
    }
    Poly out(acc.begin(), acc.end());
    trim(out);
    return out;
}

Poly rem(Poly a, const Poly& divisor, std::uint32_t p) {
    trim(a);
    if (divisor.empty()) throw std::invalid_argument("fp_poly::rem: zero divisor");
    const int dd = degree(divisor);
    const std::uint64_t lead_inv = inverse_mod_p(divisor.back(), p);
    while (degree(a) >= dd) {
        const std::size_t shift = a.size() - divisor.size();
        const std::uint64_t factor = a.back() * lead_inv % p;
        for (std::size_t i = 0; i < divisor.size(); ++i) {
            const std::uint64_t sub_term = factor * divisor[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub_term) % p);
        }
        trim(a);
    }
    return a;
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint64_t lead_inv = inverse_mod_p(a.back(), p);
        for (auto& c : a) c = static_cast<std::uint32_t>(c * lead_inv % p);
    }
    return a;
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& modulus, std::uint32_t p) {
    Poly result = rem(Poly{1}, modulus, p);
    base = rem(std::move(base), modulus, p);
    while (e > 0) {
        if (e & 1) result = rem(mul(result, base, p), modulus, p);
        e >>= 1;
        if (e > 0) base = rem(mul(base, base, p), modulus, p);
    }
    return result;
}

bool is_irreducible(const Poly& f_in, std::uint32_t p) {
    Poly f = f_in;
    trim(f);
    const int n = degree(f);
    if (n < 1) return false;
    if (n == 1) return true;

    // x^(p^j) mod f for j = 0..n by repeated p-th powering
    std::vector<Poly> frob(static_cast<std::size_t>(n) + 1);
    frob[0] = rem(Poly{0, 1}, f, p);
    for (int j = 1; j <= n; ++j) frob[j] = pow_mod(frob[j - 1], p, f, p);

    const Poly x = rem(Poly{0, 1}, f, p);
    if (!sub(frob[n], x, p).empty()) return false;
    for (const auto& [r, k] : factorize(static_cast<std::uint64_t>(n))) {
        (void)k;
        const Poly g = gcd(f, sub(frob[n / r], x, p), p);
        if (degree(g) != 0) return false;
    }
    return true;
}

std::uint64_t encode(const Poly& f, std::uint32_t p) {
    std::uint64_t code = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) code = code * p + *it;
    return code;
}

Poly decode(std::uint64_t code, std::uint32_t p) {
    Poly f;
    while (code > 0) {
        f.push_back(static_cast<std::uint32_t>(code % p));
        code /= p;
    }
    return f;
}

}  // namespace invforge::fp_poly
