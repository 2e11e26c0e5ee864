#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "invforge/analyzer.hpp"
#include "invforge/constructors.hpp"
#include "invforge/field.hpp"

namespace invforge {

inline constexpr std::string_view kToolName = "invforge";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Every recipe of one family over a field, in catalog order. Families that do
/// not apply to the field, and parameter sets the constructor rejects, are
/// left out with a line appended to `skipped`.
std::vector<ConstructionRecipe> enumerate_recipes(Family family, const FieldRef& field,
                                                  std::optional<std::uint64_t> generator,
                                                  std::uint64_t q_limit,
                                                  std::vector<std::string>& skipped);

struct CatalogOptions {
    std::vector<Family> families{kAllFamilies.begin(), kAllFamilies.end()};
    std::optional<std::uint64_t> generator;
    SweepOptions sweep;
};

struct Catalog {
    FieldRef field;
    std::uint32_t generator = 0;
    std::vector<Family> families;
    std::vector<ClaimReport> entries;  // sorted
    std::vector<std::string> skipped;

    std::size_t failures() const;
};

/// Constructs and verifies every recipe; verification runs in parallel across
/// entries, and the entry order depends only on the inputs.
Catalog build_catalog(const FieldRef& field, const CatalogOptions& options = {});

/// One catalog line in the form shared by the JSON and CSV emitters.
struct CatalogRow {
    std::string family;
    std::uint64_t q = 0;
    std::uint32_t g = 0;
    std::string params;  // "i=0;d=10;alpha=36"
    std::string poly;
    bool involution = false;
    std::uint64_t fixed_points = 0;
    std::string cycle_type;  // "2:20;1:1"
    std::string oracle;

    bool operator==(const CatalogRow&) const = default;
};

CatalogRow to_row(const ClaimReport& report);
std::vector<CatalogRow> to_rows(const Catalog& catalog);

/// FNV-1a 64-bit, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

/// The canonical section is byte-stable; "generated_at" (when given) sits
/// outside it and is excluded from "canonical_hash".
nlohmann::ordered_json catalog_to_json(const Catalog& catalog,
                                       const std::optional<std::string>& generated_at = std::nullopt);
std::string catalog_to_csv(const Catalog& catalog);

std::vector<CatalogRow> rows_from_json(const nlohmann::ordered_json& doc);
std::vector<CatalogRow> rows_from_csv(std::string_view text);

/// UTC, "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

}  // namespace invforge
