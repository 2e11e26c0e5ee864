#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "invforge/field.hpp"

namespace invforge {

/// One stored monomial; coeff is a nonzero element index.
struct Term {
    std::uint64_t exponent;
    std::uint32_t coeff;

    bool operator==(const Term&) const = default;
};

/// Input to canonicalize: coefficients may be zero and exponents may repeat.
struct RawTerm {
    std::uint64_t exponent;
    FieldElement coeff;
};

/// A polynomial over F_q kept in canonical sparse form: nonzero coefficients,
/// distinct exponents, strictly descending. Exponents are stored exactly as
/// given (no folding modulo q-1), so x^(q-1) and 1 stay distinct.
class SparsePoly {
public:
    /// The zero polynomial.
    explicit SparsePoly(FieldRef field);

    /// Merges equal exponents, drops zero coefficients, sorts descending.
    static SparsePoly canonicalize(FieldRef field, std::span<const RawTerm> raw);
    static SparsePoly canonicalize(FieldRef field, std::initializer_list<RawTerm> raw) {
        return canonicalize(std::move(field), std::span<const RawTerm>(raw.begin(), raw.size()));
    }
    /// Same, from bare (exponent, coefficient index) pairs. Indices must be < q.
    static SparsePoly from_terms(FieldRef field, std::span<const Term> raw);

    const FieldSpec& field() const noexcept { return *field_; }
    const FieldRef& field_ref() const noexcept { return field_; }

    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Largest exponent; throws ZeroPolynomial for the zero polynomial.
    std::uint64_t degree() const;
    std::uint64_t min_exponent() const;

    /// Coefficient of x^e (zero if absent).
    FieldElement coefficient(std::uint64_t e) const;

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) noexcept {
        return *a.field_ == *b.field_ && a.terms_ == b.terms_;
    }

private:
    SparsePoly(FieldRef field, std::vector<Term> terms)
        : field_(std::move(field)), terms_(std::move(terms)) {}

    FieldRef field_;
    std::vector<Term> terms_;
};

/// Sum of coeff * x^exponent by square-and-multiply per term.
FieldElement evaluate(const SparsePoly& f, const FieldElement& x);

/// Same value, computed with exponent arithmetic modulo q-1 through the table.
FieldElement evaluate(const SparsePoly& f, const FieldElement& x, const DlogTable& table);

// Unchecked index-level variants used by the sweep kernels.
std::uint32_t evaluate_raw(const SparsePoly& f, std::uint32_t x) noexcept;
std::uint32_t evaluate_raw(const SparsePoly& f, std::uint32_t x, const DlogTable& table) noexcept;

/// Reversal about the polynomial's own degree D: c x^e -> c x^(D-e).
SparsePoly reverse_coefficients(const SparsePoly& f);

/// Reversal about an explicit anchor A >= degree: c x^e -> c x^(A-e).
/// With A = q-1 this is x^(q-1) f(1/x), which carries h1 onto h2.
SparsePoly reverse_coefficients(const SparsePoly& f, std::uint64_t anchor);

/// Grammar (whitespace between tokens ignored):
///   poly  := sterm (('+'|'-') sterm)*     with an optional leading '-'
///   sterm := [coeff]['*']'x'['^'exp] | coeff
/// coeff is a decimal element index; '-' negates the following coefficient.
SparsePoly parse(std::string_view text, FieldRef owner);

/// "26x^31 + 29x^11 + 22x"; unit coefficients elided except on the constant
/// term, zero polynomial prints "0". parse(format(f)) == f.
std::string format(const SparsePoly& f);

/// {"q": q, "terms": [[exp, coeffIndex], ...]} in descending exponent order.
nlohmann::json to_json(const SparsePoly& f);
SparsePoly poly_from_json(const nlohmann::json& j, FieldRef owner);

}  // namespace invforge
