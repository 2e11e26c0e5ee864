#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "invforge/constructors.hpp"
#include "invforge/field.hpp"
#include "invforge/kernels.hpp"
#include "invforge/sparse_poly.hpp"

namespace invforge {

struct SweepOptions {
    std::uint64_t q_limit = kDefaultQLimit;
    kernels::Execution execution = kernels::Execution::Parallel;
};

/// image[x] = f(x) over all q element indices.
struct PermutationMap {
    FieldRef field;
    std::vector<std::uint32_t> image;

    bool operator==(const PermutationMap& other) const {
        return *field == *other.field && image == other.image;
    }
};

/// cycle length -> number of cycles of that length.
using CycleType = std::map<std::uint64_t, std::uint64_t>;

struct FixedPoints {
    std::uint64_t count = 0;
    std::vector<std::uint32_t> indices;
};

PermutationMap permutation_map(const SparsePoly& f, const SweepOptions& options = {});
PermutationMap permutation_map(const SparsePoly& f, const DlogTable& table,
                               const SweepOptions& options = {});

bool is_permutation(const PermutationMap& map);
/// image[image[x]] == x for all x; implies bijectivity.
bool is_involution(const PermutationMap& map);
FixedPoints fixed_points(const PermutationMap& map);
/// Throws NotAPermutation unless the map is a bijection.
CycleType cycle_type(const PermutationMap& map);

/// "2^20 1^1": lengths descending.
std::string format_cycle_type(const CycleType& ct);

/// Sorted indices of {a : a^m = 1}; m must divide q-1.
std::vector<std::uint32_t> mu_subgroup(const FieldSpec& field, std::uint64_t m);

/// x is a nonzero square iff x^((q-1)/2) = 1 (odd q).
bool is_square_euler(const FieldSpec& field, std::uint32_t x);

/// True when the family's behavior is described case-by-case and can be
/// rebuilt without the polynomial. Only t8 cases other than m = -1 (mod k)
/// lack such a description.
bool has_constructive_oracle(const ConstructionRecipe& recipe);

/// The permutation the recipe's polynomial is claimed to induce, built from
/// the case descriptions (generator powers, mu_m membership, square classes).
/// Never evaluates a polynomial. Throws UnsupportedFamily when
/// has_constructive_oracle is false.
PermutationMap behavior_oracle(const ConstructionRecipe& recipe, const SweepOptions& options = {});
PermutationMap behavior_oracle(const ConstructionRecipe& recipe, const DlogTable& table,
                               const SweepOptions& options = {});

/// Cycle type the family's claim predicts.
CycleType expected_cycle_type(const ConstructionRecipe& recipe);

enum class OracleStatus { Match, Descriptive, Mismatch };

std::string_view oracle_status_name(OracleStatus s) noexcept;

struct ClaimReport {
    std::string family;  // family name, or "poly" for a bare polynomial
    FieldRef field;
    std::uint32_t generator = 0;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::string poly;

    bool is_permutation = false;
    bool is_involution = false;
    std::uint64_t fixed_point_count = 0;
    std::vector<std::uint32_t> fixed_points;
    CycleType cycle_type;

    std::optional<std::uint64_t> expected_fixed_points;
    std::optional<CycleType> expected_cycle_type;
    OracleStatus oracle = OracleStatus::Descriptive;
    std::optional<std::uint32_t> first_mismatch;

    bool fixed_points_ok() const {
        return !expected_fixed_points || *expected_fixed_points == fixed_point_count;
    }
    bool cycle_type_ok() const { return !expected_cycle_type || *expected_cycle_type == cycle_type; }
    /// Involution, every predicted count, and no oracle disagreement.
    bool passed() const {
        return is_involution && fixed_points_ok() && cycle_type_ok() && oracle != OracleStatus::Mismatch;
    }
};

/// Runs every check a recipe's claim implies against the polynomial.
ClaimReport verify_claim(const ConstructionRecipe& recipe, const SparsePoly& poly,
                         const SweepOptions& options = {});
ClaimReport verify_claim(const ConstructionRecipe& recipe, const SparsePoly& poly,
                         const DlogTable& table, const SweepOptions& options = {});

/// Permutation/involution/fixed-point/cycle analysis of a polynomial with no claim attached.
ClaimReport analyze_polynomial(const SparsePoly& poly, const SweepOptions& options = {});

/// {"family","q","g","params","poly","involution","fixed_points","cycle_type","oracle"}
nlohmann::ordered_json report_to_json(const ClaimReport& report);

struct OracleDiff {
    OracleStatus status = OracleStatus::Descriptive;
    std::uint32_t x = 0;             // first disagreeing element (Mismatch only)
    std::uint32_t poly_value = 0;
    std::uint32_t oracle_value = 0;
    bool claims_hold = true;         // involution + predicted cycle type (Descriptive only)
};

/// Compares poly pointwise to the behavior oracle of oracle_recipe.
OracleDiff oracle_diff(const SparsePoly& poly, const ConstructionRecipe& oracle_recipe,
                       const SweepOptions& options = {});

}  // namespace invforge
