#include "invforge/field.hpp"

#include <array>
#include <sstream>

#include "invforge/fp_poly.hpp"

namespace invforge {

namespace {

constexpr unsigned kMaxExtDeg = 32;

using Digits = std::array<std::uint32_t, kMaxExtDeg>;

void to_digits(std::uint32_t index, std::uint32_t p, unsigned n, Digits& out) {
    for (unsigned k = 0; k < n; ++k) {
        out[k] = index % p;
        index /= p;
    }
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!same_field(a, b)) {
        throw Error(ErrorKind::FieldMismatch,
                    "operands belong to " + a.field().describe() + " and " + b.field().describe());
    }
}

}  // namespace

FieldSpec::FieldSpec(std::uint64_t p, unsigned ext_deg, std::vector<std::uint32_t> modulus)
    : p_(p), ext_deg_(ext_deg), q_(1), modulus_(std::move(modulus)) {
    for (unsigned k = 0; k < ext_deg; ++k) q_ *= p;
    factors_ = factorize(q_ - 1);
}

bool FieldSpec::operator==(const FieldSpec& other) const noexcept {
    return p_ == other.p_ && ext_deg_ == other.ext_deg_ && modulus_ == other.modulus_;
}

std::string FieldSpec::describe() const {
    std::ostringstream os;
    if (is_prime_field()) {
        os << "F_" << p_;
        return os.str();
    }
    os << "GF(" << p_ << "^" << ext_deg_ << ") mod [";
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    os << "]";
    return os.str();
}

FieldElement FieldSpec::element(std::uint64_t index) const {
    if (index >= q_) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "element index " + std::to_string(index) + " >= q = " + std::to_string(q_));
    }
    return FieldElement(this, static_cast<std::uint32_t>(index));
}

FieldElement FieldSpec::zero() const { return FieldElement(this, 0); }

FieldElement FieldSpec::one() const { return FieldElement(this, 1); }

FieldElement FieldSpec::from_integer(std::int64_t n) const {
    const auto p = static_cast<std::int64_t>(p_);
    return FieldElement(this, static_cast<std::uint32_t>(((n % p) + p) % p));
}

std::uint32_t FieldSpec::add_raw(std::uint32_t a, std::uint32_t b) const noexcept {
    if (ext_deg_ == 1) {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    if (p_ == 2) return a ^ b;
    const auto p = static_cast<std::uint32_t>(p_);
    std::uint32_t result = 0;
    std::uint32_t place = 1;
    for (unsigned k = 0; k < ext_deg_; ++k) {
        const std::uint32_t s = a % p + b % p;
        result += (s >= p ? s - p : s) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    return result;
}

std::uint32_t FieldSpec::neg_raw(std::uint32_t a) const noexcept {
    if (ext_deg_ == 1) return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
    if (p_ == 2) return a;
    const auto p = static_cast<std::uint32_t>(p_);
    std::uint32_t result = 0;
    std::uint32_t place = 1;
    for (unsigned k = 0; k < ext_deg_; ++k) {
        const std::uint32_t d = a % p;
        result += (d == 0 ? 0 : p - d) * place;
        a /= p;
        place *= p;
    }
    return result;
}

std::uint32_t FieldSpec::mul_raw(std::uint32_t a, std::uint32_t b) const noexcept {
    if (ext_deg_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    return mul_ext(a, b);
}

std::uint32_t FieldSpec::mul_ext(std::uint32_t a, std::uint32_t b) const noexcept {
    const auto p = static_cast<std::uint32_t>(p_);
    const unsigned n = ext_deg_;
    Digits da{}, db{};
    to_digits(a, p, n, da);
    to_digits(b, p, n, db);

    std::array<std::uint64_t, 2 * kMaxExtDeg> acc{};
    for (unsigned i = 0; i < n; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j) acc[i + j] = (acc[i + j] + std::uint64_t{da[i]} * db[j]) % p;
    }
    // x^n = -(m_0 + m_1 x + ... + m_{n-1} x^{n-1})
    for (unsigned top = 2 * n - 2; top >= n; --top) {
        const std::uint64_t c = acc[top] % p;
        acc[top] = 0;
        if (c == 0) continue;
        for (unsigned j = 0; j < n; ++j) {
            const std::uint64_t m = modulus_[j];
            acc[top - n + j] = (acc[top - n + j] + c * ((p - m) % p)) % p;
        }
    }
    std::uint32_t result = 0;
    for (unsigned k = n; k-- > 0;) result = result * p + static_cast<std::uint32_t>(acc[k] % p);
    return result;
}

std::uint32_t FieldSpec::pow_raw(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint32_t result = 1;
    std::uint32_t base = a;
    while (e > 0) {
        if (e & 1) result = mul_raw(result, base);
        e >>= 1;
        if (e > 0) base = mul_raw(base, base);
    }
    return result;
}

FieldRef make_prime_field(std::uint64_t p) {
    if (p >= kMaxFieldOrder) {
        throw Error(ErrorKind::LimitExceeded, "p = " + std::to_string(p) + " exceeds 2^32");
    }
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    return FieldRef(new FieldSpec(p, 1, {}));
}

FieldRef make_extension_field(std::uint64_t p, unsigned ext_deg,
                              std::optional<std::vector<std::uint32_t>> modulus) {
    if (p >= kMaxFieldOrder || !is_prime(p)) {
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    }
    if (ext_deg == 0) throw Error(ErrorKind::DegreeMismatch, "extension degree must be >= 1");

    std::uint64_t q = 1;
    for (unsigned k = 0; k < ext_deg; ++k) {
        q *= p;
        if (q >= kMaxFieldOrder) {
            throw Error(ErrorKind::LimitExceeded,
                        std::to_string(p) + "^" + std::to_string(ext_deg) + " exceeds 2^32");
        }
    }
    const auto p32 = static_cast<std::uint32_t>(p);

    if (modulus) {
        auto& f = *modulus;
        if (f.size() != ext_deg + 1 || f.back() != 1) {
            throw Error(ErrorKind::DegreeMismatch,
                        "modulus must be monic of degree " + std::to_string(ext_deg));
        }
        for (auto c : f) {
            if (c >= p) {
                throw Error(ErrorKind::CoefficientOutOfRange,
                            "modulus coefficient " + std::to_string(c) + " >= p");
            }
        }
        if (!fp_poly::is_irreducible(f, p32)) {
            throw Error(ErrorKind::NotIrreducible, "modulus is reducible over F_" + std::to_string(p));
        }
        if (ext_deg == 1) return make_prime_field(p);
        return FieldRef(new FieldSpec(p, ext_deg, std::move(f)));
    }

    if (ext_deg == 1) return make_prime_field(p);
    for (std::uint64_t code = q; code < 2 * q; ++code) {
        auto f = fp_poly::decode(code, p32);
        if (fp_poly::is_irreducible(f, p32)) return FieldRef(new FieldSpec(p, ext_deg, std::move(f)));
    }
    // an irreducible of every degree exists over every prime field
    throw Error(ErrorKind::NotIrreducible, "no irreducible modulus found");
}

FieldRef make_field(std::uint64_t q) {
    if (is_prime(q)) return make_prime_field(q);
    const auto [p, k] = as_prime_power(q);
    if (p == 0) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    return make_extension_field(p, k);
}

bool same_field(const FieldElement& a, const FieldElement& b) noexcept {
    return &a.field() == &b.field() || a.field() == b.field();
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a.field().element(a.field().add_raw(a.index(), b.index()));
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a.field().element(a.field().sub_raw(a.index(), b.index()));
}

FieldElement neg(const FieldElement& a) {
    return a.field().element(a.field().neg_raw(a.index()));
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a.field().element(a.field().mul_raw(a.index(), b.index()));
}

FieldElement inv(const FieldElement& a) {
    if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return pow(a, a.field().order() - 2);
}

FieldElement div(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return mul(a, inv(b));
}

FieldElement pow(const FieldElement& a, std::uint64_t e) {
    return a.field().element(a.field().pow_raw(a.index(), e));
}

std::uint64_t multiplicative_order(const FieldElement& a) {
    if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "order of zero");
    const FieldSpec& f = a.field();
    std::uint64_t order = f.order() - 1;
    for (const auto& [r, k] : f.q_minus_1_factors()) {
        for (unsigned j = 0; j < k; ++j) {
            if (f.pow_raw(a.index(), order / r) != 1) break;
            order /= r;
        }
    }
    return order;
}

bool is_generator(const FieldElement& a) {
    return !a.is_zero() && multiplicative_order(a) == a.field().order() - 1;
}

FieldElement find_smallest_generator(const FieldSpec& field) {
    for (std::uint64_t x = 1; x < field.order(); ++x) {
        auto candidate = field.element(x);
        if (is_generator(candidate)) return candidate;
    }
    throw Error(ErrorKind::NotAGenerator, "no generator in " + field.describe());
}

DlogTable dlog_table(const FieldElement& g, std::uint64_t q_limit) {
    const FieldSpec& f = g.field();
    if (f.order() > q_limit) {
        throw Error(ErrorKind::LimitExceeded,
                    "q = " + std::to_string(f.order()) + " exceeds limit " + std::to_string(q_limit));
    }
    if (g.is_zero()) throw Error(ErrorKind::NotAGenerator, "zero is not a generator");

    const std::uint64_t group = f.order() - 1;
    DlogTable table(g);
    table.log_.assign(f.order(), 0);
    table.exp_.resize(group);
    std::uint32_t x = 1;
    for (std::uint64_t j = 0; j < group; ++j) {
        if (j > 0 && x == 1) {
            throw Error(ErrorKind::NotAGenerator, "element " + std::to_string(g.index()) +
                                                      " has order " + std::to_string(j));
        }
        table.log_[x] = static_cast<std::uint32_t>(j);
        table.exp_[j] = x;
        x = f.mul_raw(x, g.index());
    }
    return table;
}

}  // namespace invforge
