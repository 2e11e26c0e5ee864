#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "json.hpp"

#include "invforge/field.hpp"
#include "invforge/sparse_poly.hpp"

namespace invforge {

/// The involution families. String names ("t1", ..., "t8") are the stable
/// external identifiers:
///   t1   trinomial, only fixed point 0
///   t2   quadrinomial, only fixed point 0
///   t3a  quadrinomial with (q+1)/2 fixed points, a3 = a1
///   t3b  quadrinomial with (q+1)/2 fixed points, a3 = -a1, a2 = 1 - a0
///   h1   2d-term polynomial inverting mu_m, identity elsewhere
///   h2   2d-term polynomial fixing mu_m, inverting elsewhere
///   t7   restricted-coefficient quadrinomial, t = 2/m mod k
///   t8   restricted-coefficient quadrinomial, case chosen by m mod k
enum class Family { T1, T2, T3A, T3B, H1, H2, T7, T8 };

inline constexpr std::array<Family, 8> kAllFamilies = {
    Family::T1, Family::T2, Family::T3A, Family::T3B,
    Family::H1, Family::H2, Family::T7,  Family::T8,
};

std::string_view family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

bool uses_index(Family f) noexcept;     // t1, t2, t3a, t3b
bool uses_divisor(Family f) noexcept;   // h1, h2
bool uses_split(Family f) noexcept;     // t7, t8

/// Which congruence of m modulo k selected the t8 polynomial.
enum class T8Case { MinusOne, One, Two, MinusTwo };

/// "-1", "1", "2", "-2".
std::string_view t8_case_name(T8Case c) noexcept;

/// A validated parameter set for one family over one field.
struct ConstructionRecipe {
    Family family;
    FieldRef field;
    /// Recorded for every family; only t1..t3b use it in their formulas.
    FieldElement generator;
    std::uint64_t i = 0;
    /// (q-1)/4 for t1..t3b, the divisor of q-1 for h1/h2.
    std::uint64_t d = 0;
    /// (q-1)/d for h1/h2; the odd factor of q-1 = n m for t7/t8.
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t t = 0;
    std::optional<T8Case> t8_case;

    /// g^(4i+2), the multiplier that drives t1..t3b.
    FieldElement alpha() const;
};

/// Parameters as they arrive from a caller; which ones matter depends on the family.
struct RecipeParams {
    std::optional<std::uint64_t> generator;  // element index; smallest generator if absent
    std::uint64_t i = 0;
    std::uint64_t d = 0;
    std::uint64_t m = 0;
    std::uint64_t n = 0;
};

struct T7Params {
    std::uint64_t k;
    std::uint64_t t;
};

/// k = n/2 and the least t in [1, k] with t m = 2 (mod k); t = 1 when k = 1.
T7Params compute_t7_params(const FieldSpec& field, std::uint64_t m, std::uint64_t n);

/// Validates every precondition of the family and fills the derived fields.
ConstructionRecipe make_recipe(Family family, FieldRef field, const RecipeParams& params,
                               std::uint64_t q_limit = kDefaultQLimit);

/// Expands the family's coefficient formulas. Degenerate (zero) coefficients
/// shorten the result.
SparsePoly construct(const ConstructionRecipe& recipe);

nlohmann::ordered_json params_to_json(const ConstructionRecipe& recipe);
nlohmann::ordered_json recipe_to_json(const ConstructionRecipe& recipe);

// Direct forms of the individual constructions.
enum class T3Variant { A, B };

SparsePoly construct_t1(FieldRef field, const FieldElement& g, std::uint64_t i);
SparsePoly construct_t2(FieldRef field, const FieldElement& g, std::uint64_t i);
SparsePoly construct_t3(FieldRef field, const FieldElement& g, std::uint64_t i, T3Variant variant);
SparsePoly construct_h1(FieldRef field, std::uint64_t d);
SparsePoly construct_h2(FieldRef field, std::uint64_t d);
SparsePoly construct_t7(FieldRef field, std::uint64_t m, std::uint64_t n);
SparsePoly construct_t8(FieldRef field, std::uint64_t m, std::uint64_t n);

}  // namespace invforge
