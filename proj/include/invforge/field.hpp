#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invforge/error.hpp"
#include "invforge/number_theory.hpp"

namespace invforge {

/// Exhaustive sweeps (dlog tables, permutation maps) refuse fields larger than this.
inline constexpr std::uint64_t kDefaultQLimit = std::uint64_t{1} << 20;

/// Element indices are 32-bit, so no field may reach 2^32 elements.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 32;

class FieldSpec;
class FieldElement;
using FieldRef = std::shared_ptr<const FieldSpec>;

/// The finite field F_q, q = p^ext_deg.
///
/// Elements are identified by a canonical index in [0, q): the residue itself
/// for prime fields, and sum c_i p^i over the polynomial-basis coefficients
/// c_0..c_{ext_deg-1} for extension fields. Index 0 is zero and index 1 is one.
///
/// Instances are immutable and are always handed out as FieldRef. The *_raw
/// members operate on bare indices without ownership checks; they exist for
/// the evaluation kernels.
class FieldSpec {
public:
    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned ext_deg() const noexcept { return ext_deg_; }
    std::uint64_t order() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return ext_deg_ == 1; }

    /// Ascending coefficients of the monic modulus; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    const std::vector<PrimePower>& q_minus_1_factors() const noexcept { return factors_; }

    /// Same characteristic, degree and modulus.
    bool operator==(const FieldSpec& other) const noexcept;

    /// e.g. "F_41" or "GF(2^4) mod [1,1,0,0,1]".
    std::string describe() const;

    FieldElement element(std::uint64_t index) const;
    FieldElement zero() const;
    FieldElement one() const;
    /// The image of an integer under Z -> F_q (n mod p, as a prime-field element).
    FieldElement from_integer(std::int64_t n) const;

    std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t neg_raw(std::uint32_t a) const noexcept;
    std::uint32_t sub_raw(std::uint32_t a, std::uint32_t b) const noexcept {
        return add_raw(a, neg_raw(b));
    }
    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const noexcept;
    /// Square-and-multiply; 0^0 = 1.
    std::uint32_t pow_raw(std::uint32_t a, std::uint64_t e) const noexcept;

private:
    friend FieldRef make_prime_field(std::uint64_t p);
    friend FieldRef make_extension_field(std::uint64_t p, unsigned ext_deg,
                                         std::optional<std::vector<std::uint32_t>> modulus);

    FieldSpec(std::uint64_t p, unsigned ext_deg, std::vector<std::uint32_t> modulus);

    std::uint32_t mul_ext(std::uint32_t a, std::uint32_t b) const noexcept;

    std::uint64_t p_;
    unsigned ext_deg_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<PrimePower> factors_;
};

FieldRef make_prime_field(std::uint64_t p);

/// Without an explicit modulus, picks the monic irreducible of degree ext_deg
/// with the smallest base-p encoding.
FieldRef make_extension_field(std::uint64_t p, unsigned ext_deg,
                              std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

/// Prime field when q is prime, default-modulus extension when q is a prime power.
FieldRef make_field(std::uint64_t q);

/// One value of a field. Holds a non-owning pointer: the FieldSpec must
/// outlive every element taken from it.
class FieldElement {
public:
    const FieldSpec& field() const noexcept { return *field_; }
    std::uint32_t index() const noexcept { return index_; }
    bool is_zero() const noexcept { return index_ == 0; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.index_ == b.index_ && (a.field_ == b.field_ || *a.field_ == *b.field_);
    }

private:
    friend class FieldSpec;
    FieldElement(const FieldSpec* field, std::uint32_t index) : field_(field), index_(index) {}

    const FieldSpec* field_;
    std::uint32_t index_;
};

bool same_field(const FieldElement& a, const FieldElement& b) noexcept;

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement mul(const FieldElement& a, const FieldElement& b);
/// Computed as a^(q-2).
FieldElement inv(const FieldElement& a);
FieldElement div(const FieldElement& a, const FieldElement& b);
FieldElement pow(const FieldElement& a, std::uint64_t e);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
inline FieldElement operator-(const FieldElement& a) { return neg(a); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return div(a, b); }

/// Least e >= 1 with a^e = 1, found by stripping prime factors of q-1.
std::uint64_t multiplicative_order(const FieldElement& a);

bool is_generator(const FieldElement& a);

/// Generator of F_q^* with the smallest index.
FieldElement find_smallest_generator(const FieldSpec& field);

/// Discrete logarithms to a fixed generator, built in one multiplicative sweep.
class DlogTable {
public:
    const FieldElement& generator() const noexcept { return generator_; }
    const FieldSpec& field() const noexcept { return generator_.field(); }

    /// Exponent j in [0, q-1) with g^j = x. x must be nonzero.
    std::uint32_t log(std::uint32_t x) const noexcept { return log_[x]; }
    /// g^e for e in [0, q-1).
    std::uint32_t exp(std::uint64_t e) const noexcept { return exp_[e]; }
    std::uint64_t group_order() const noexcept { return exp_.size(); }

    std::span<const std::uint32_t> logs() const noexcept { return log_; }

private:
    friend DlogTable dlog_table(const FieldElement& g, std::uint64_t q_limit);
    explicit DlogTable(FieldElement g) : generator_(g) {}

    FieldElement generator_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
};

DlogTable dlog_table(const FieldElement& g, std::uint64_t q_limit = kDefaultQLimit);

}  // namespace invforge
