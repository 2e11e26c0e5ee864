#include "invforge/analyzer.hpp"

#include <numeric>
#include <sstream>

namespace invforge {

namespace {

void require_within_limit(const FieldSpec& f, std::uint64_t q_limit) {
    if (f.order() > q_limit) {
        throw Error(ErrorKind::LimitExceeded, "exhaustive sweep over q = " + std::to_string(f.order()) +
                                                  " exceeds limit " + std::to_string(q_limit));
    }
}

void require_same_owner(const SparsePoly& poly, const ConstructionRecipe& recipe) {
    if (!(poly.field() == *recipe.field)) {
        throw Error(ErrorKind::FieldMismatch, "polynomial over " + poly.field().describe() +
                                                  ", recipe over " + recipe.field->describe());
    }
}

template <class Rule>
PermutationMap tabulate(const FieldRef& field, const Rule& rule, kernels::Execution exec) {
    PermutationMap map{field, std::vector<std::uint32_t>(field->order())};
    const auto q = static_cast<std::int64_t>(field->order());
    std::uint32_t* dst = map.image.data();
    if (exec == kernels::Execution::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t x = 0; x < q; ++x) dst[x] = rule(static_cast<std::uint32_t>(x));
    } else {
        for (std::int64_t x = 0; x < q; ++x) dst[x] = rule(static_cast<std::uint32_t>(x));
    }
    return map;
}

// g^e -> g^(e + shift(e)) for e read modulo q-1.
template <class Shift>
PermutationMap exponent_shift_oracle(const ConstructionRecipe& r, const DlogTable& table,
                                     const Shift& shift, kernels::Execution exec) {
    const std::int64_t group = static_cast<std::int64_t>(table.group_order());
    return tabulate(r.field, [&](std::uint32_t x) -> std::uint32_t {
        if (x == 0) return 0;
        const std::int64_t e = table.log(x);
        std::int64_t target = (e + shift(e)) % group;
        if (target < 0) target += group;
        return table.exp(static_cast<std::uint64_t>(target));
    }, exec);
}

// Nonzero elements written as g^(n i + m j), 0 <= i < m, 0 <= j < n.
struct SplitCoordinates {
    std::int64_t n_inv_mod_m;
    std::int64_t m_inv_mod_n;
};

SplitCoordinates split_coordinates(std::uint64_t m, std::uint64_t n) {
    return {static_cast<std::int64_t>(mod_inverse(n % m, m)), static_cast<std::int64_t>(mod_inverse(m % n, n))};
}

std::uint64_t count_square_roots_of_one(std::uint64_t group_order) { return std::gcd<std::uint64_t>(2, group_order); }

}  // namespace

PermutationMap permutation_map(const SparsePoly& f, const SweepOptions& options) {
    require_within_limit(f.field(), options.q_limit);
    const auto table = dlog_table(find_smallest_generator(f.field()), options.q_limit);
    return permutation_map(f, table, options);
}

PermutationMap permutation_map(const SparsePoly& f, const DlogTable& table, const SweepOptions& options) {
    require_within_limit(f.field(), options.q_limit);
    if (!(table.field() == f.field())) {
        throw Error(ErrorKind::FieldMismatch, "dlog table is not over " + f.field().describe());
    }
    PermutationMap map{f.field_ref(), std::vector<std::uint32_t>(f.field().order())};
    kernels::evaluate_all(f, table, map.image, options.execution);
    return map;
}

bool is_permutation(const PermutationMap& map) {
    std::vector<bool> seen(map.image.size(), false);
    for (std::uint32_t y : map.image) {
        if (y >= seen.size() || seen[y]) return false;
        seen[y] = true;
    }
    return true;
}

bool is_involution(const PermutationMap& map) {
    const auto& img = map.image;
    for (std::size_t x = 0; x < img.size(); ++x) {
        if (img[x] >= img.size() || img[img[x]] != x) return false;
    }
    return true;
}

FixedPoints fixed_points(const PermutationMap& map) {
    FixedPoints fp;
    for (std::size_t x = 0; x < map.image.size(); ++x) {
        if (map.image[x] == x) fp.indices.push_back(static_cast<std::uint32_t>(x));
    }
    fp.count = fp.indices.size();
    return fp;
}

CycleType cycle_type(const PermutationMap& map) {
    if (!is_permutation(map)) throw Error(ErrorKind::NotAPermutation, "map is not a bijection");
    CycleType ct;
    std::vector<bool> visited(map.image.size(), false);
    for (std::size_t start = 0; start < map.image.size(); ++start) {
        if (visited[start]) continue;
        std::uint64_t length = 0;
        for (std::size_t x = start; !visited[x]; x = map.image[x]) {
            visited[x] = true;
            ++length;
        }
        ++ct[length];
    }
    return ct;
}

std::string format_cycle_type(const CycleType& ct) {
    std::ostringstream os;
    bool first = true;
    for (auto it = ct.rbegin(); it != ct.rend(); ++it) {
        os << (first ? "" : " ") << it->first << "^" << it->second;
        first = false;
    }
    return os.str();
}

std::vector<std::uint32_t> mu_subgroup(const FieldSpec& field, std::uint64_t m) {
    if (m == 0 || (field.order() - 1) % m != 0) {
        throw Error(ErrorKind::NotADivisor,
                    "m = " + std::to_string(m) + " does not divide q-1 = " + std::to_string(field.order() - 1));
    }
    std::vector<std::uint32_t> members;
    members.reserve(m);
    for (std::uint64_t x = 1; x < field.order(); ++x) {
        if (field.pow_raw(static_cast<std::uint32_t>(x), m) == 1) members.push_back(static_cast<std::uint32_t>(x));
    }
    return members;
}

bool is_square_euler(const FieldSpec& field, std::uint32_t x) {
    return x != 0 && field.pow_raw(x, (field.order() - 1) / 2) == 1;
}

bool has_constructive_oracle(const ConstructionRecipe& recipe) {
    return recipe.family != Family::T8 || recipe.t8_case == T8Case::MinusOne;
}

PermutationMap behavior_oracle(const ConstructionRecipe& recipe, const SweepOptions& options) {
    require_within_limit(*recipe.field, options.q_limit);
    return behavior_oracle(recipe, dlog_table(recipe.generator, options.q_limit), options);
}

PermutationMap behavior_oracle(const ConstructionRecipe& r, const DlogTable& table,
                               const SweepOptions& options) {
    require_within_limit(*r.field, options.q_limit);
    if (!has_constructive_oracle(r)) {
        throw Error(ErrorKind::UnsupportedFamily, "t8 case m = " + std::string(t8_case_name(*r.t8_case)) +
                                                      " (mod k) has no case-by-case description");
    }
    if (!(table.generator() == r.generator)) {
        throw Error(ErrorKind::InvalidArgument, "dlog table generator differs from the recipe's");
    }
    const FieldSpec& f = *r.field;
    const auto exec = options.execution;
    const std::uint64_t q = f.order();

    switch (r.family) {
        case Family::T1: {
            // g^{4k} <-> g^{4k+4i+2}, g^{4k+1} <-> g^{4k+4i+3}
            const auto s = static_cast<std::int64_t>(4 * r.i + 2);
            return exponent_shift_oracle(r, table, [s](std::int64_t e) { return e % 4 <= 1 ? s : -s; }, exec);
        }
        case Family::T2: {
            // g^{4k} <-> g^{4(k+i)+3}, g^{4k+1} <-> g^{4(k+i)+2}
            const auto s3 = static_cast<std::int64_t>(4 * r.i + 3);
            const auto s1 = static_cast<std::int64_t>(4 * r.i + 1);
            return exponent_shift_oracle(r, table, [s1, s3](std::int64_t e) {
                switch (e % 4) {
                    case 0: return s3;
                    case 1: return s1;
                    case 2: return -s1;
                    default: return -s3;
                }
            }, exec);
        }
        case Family::T3A:
        case Family::T3B: {
            // one square class is fixed; the other moves by alpha or 1/alpha
            // according to b^d
            const std::uint32_t alpha = r.alpha().index();
            const std::uint32_t alpha_inv = inv(r.alpha()).index();
            const std::uint32_t gd = f.pow_raw(r.generator.index(), r.d);
            const bool moves_squares = r.family == Family::T3A;
            const std::uint32_t forward_key = moves_squares ? 1 : gd;
            return tabulate(r.field, [&, forward_key](std::uint32_t x) -> std::uint32_t {
                if (x == 0) return 0;
                if (is_square_euler(f, x) != moves_squares) return x;
                const std::uint32_t bd = f.pow_raw(x, r.d);
                return f.mul_raw(x, bd == forward_key ? alpha : alpha_inv);
            }, exec);
        }
        case Family::H1:
        case Family::H2: {
            const bool invert_inside = r.family == Family::H1;
            return tabulate(r.field, [&](std::uint32_t x) -> std::uint32_t {
                if (x == 0) return 0;
                const bool inside = f.pow_raw(x, r.m) == 1;
                return inside == invert_inside ? f.pow_raw(x, q - 2) : x;
            }, exec);
        }
        case Family::T7:
        case Family::T8: {
            const auto m = static_cast<std::int64_t>(r.m);
            const auto n = static_cast<std::int64_t>(r.n);
            const auto group = static_cast<std::int64_t>(q - 1);
            const auto coords = split_coordinates(r.m, r.n);
            // t7: i = 0 -> g^{mj}; i > 0, j odd -> fixed; i > 0, j even -> g^{-ni+mj}
            // t8 (m = -1 mod k): i = 0 -> g^{mj}; j odd -> g^{-ni+mj}; j even -> fixed
            const bool reflect_odd = r.family == Family::T8;
            return tabulate(r.field, [&, reflect_odd](std::uint32_t x) -> std::uint32_t {
                if (x == 0) return 0;
                const std::int64_t e = table.log(x);
                const std::int64_t i = m == 1 ? 0 : e * coords.n_inv_mod_m % m;
                const std::int64_t j = e * coords.m_inv_mod_n % n;
                if (i == 0) return table.exp(static_cast<std::uint64_t>(m * j % group));
                const bool odd = j % 2 == 1;
                if (odd != reflect_odd) return x;
                std::int64_t target = (-n * i + m * j) % group;
                if (target < 0) target += group;
                return table.exp(static_cast<std::uint64_t>(target));
            }, exec);
        }
    }
    throw Error(ErrorKind::UnsupportedFamily, "unknown family");
}

CycleType expected_cycle_type(const ConstructionRecipe& r) {
    const std::uint64_t q = r.field->order();
    std::uint64_t twos = 0;
    switch (r.family) {
        case Family::T1:
        case Family::T2: twos = (q - 1) / 2; break;
        case Family::T3A:
        case Family::T3B: twos = (q - 1) / 4; break;
        case Family::H1: twos = (r.m - count_square_roots_of_one(r.m)) / 2; break;
        case Family::H2:
            twos = (q - 1 - r.m - (count_square_roots_of_one(q - 1) - count_square_roots_of_one(r.m))) / 2;
            break;
        case Family::T7:
        case Family::T8: twos = r.n * (r.m - 1) / 4; break;
    }
    CycleType ct;
    if (q > 2 * twos) ct[1] = q - 2 * twos;
    if (twos > 0) ct[2] = twos;
    return ct;
}

std::string_view oracle_status_name(OracleStatus s) noexcept {
    switch (s) {
        case OracleStatus::Match: return "match";
        case OracleStatus::Descriptive: return "descriptive";
        case OracleStatus::Mismatch: return "mismatch";
    }
    return "?";
}

namespace {

void fill_map_analysis(ClaimReport& report, const PermutationMap& map) {
    report.is_permutation = is_permutation(map);
    report.is_involution = is_involution(map);
    auto fp = fixed_points(map);
    report.fixed_point_count = fp.count;
    report.fixed_points = std::move(fp.indices);
    if (report.is_permutation) report.cycle_type = cycle_type(map);
}

}  // namespace

ClaimReport verify_claim(const ConstructionRecipe& recipe, const SparsePoly& poly,
                         const SweepOptions& options) {
    require_within_limit(*recipe.field, options.q_limit);
    return verify_claim(recipe, poly, dlog_table(recipe.generator, options.q_limit), options);
}

ClaimReport verify_claim(const ConstructionRecipe& recipe, const SparsePoly& poly, const DlogTable& table,
                         const SweepOptions& options) {
    require_same_owner(poly, recipe);
    ClaimReport report;
    report.family = std::string(family_name(recipe.family));
    report.field = recipe.field;
    report.generator = recipe.generator.index();
    report.params = params_to_json(recipe);
    report.poly = format(poly);

    const auto map = permutation_map(poly, table, options);
    fill_map_analysis(report, map);

    const auto expected = expected_cycle_type(recipe);
    report.expected_cycle_type = expected;
    report.expected_fixed_points = expected.contains(1) ? expected.at(1) : 0;

    if (has_constructive_oracle(recipe)) {
        const auto oracle = behavior_oracle(recipe, table, options);
        report.oracle = OracleStatus::Match;
        for (std::size_t x = 0; x < oracle.image.size(); ++x) {
            if (oracle.image[x] != map.image[x]) {
                report.oracle = OracleStatus::Mismatch;
                report.first_mismatch = static_cast<std::uint32_t>(x);
                break;
            }
        }
    }
    return report;
}

ClaimReport analyze_polynomial(const SparsePoly& poly, const SweepOptions& options) {
    require_within_limit(poly.field(), options.q_limit);
    ClaimReport report;
    report.family = "poly";
    report.field = poly.field_ref();
    const auto g = find_smallest_generator(poly.field());
    report.generator = g.index();
    report.poly = format(poly);
    fill_map_analysis(report, permutation_map(poly, dlog_table(g, options.q_limit), options));
    return report;
}

nlohmann::ordered_json report_to_json(const ClaimReport& report) {
    nlohmann::ordered_json j;
    j["family"] = report.family;
    j["q"] = report.field->order();
    j["g"] = report.generator;
    j["params"] = report.params;
    j["poly"] = report.poly;
    j["involution"] = report.is_involution;
    j["fixed_points"] = report.fixed_point_count;
    nlohmann::ordered_json ct = nlohmann::ordered_json::object();
    for (const auto& [length, count] : report.cycle_type) ct[std::to_string(length)] = count;
    j["cycle_type"] = ct;
    j["oracle"] = oracle_status_name(report.oracle);
    return j;
}

OracleDiff oracle_diff(const SparsePoly& poly, const ConstructionRecipe& oracle_recipe,
                       const SweepOptions& options) {
    require_same_owner(poly, oracle_recipe);
    require_within_limit(*oracle_recipe.field, options.q_limit);
    const auto table = dlog_table(oracle_recipe.generator, options.q_limit);
    const auto map = permutation_map(poly, table, options);

    OracleDiff diff;
    if (!has_constructive_oracle(oracle_recipe)) {
        diff.status = OracleStatus::Descriptive;
        diff.claims_hold = is_involution(map) && cycle_type(map) == expected_cycle_type(oracle_recipe);
        return diff;
    }
    const auto oracle = behavior_oracle(oracle_recipe, table, options);
    diff.status = OracleStatus::Match;
    for (std::size_t x = 0; x < map.image.size(); ++x) {
        if (map.image[x] != oracle.image[x]) {
            diff.status = OracleStatus::Mismatch;
            diff.x = static_cast<std::uint32_t>(x);
            diff.poly_value = map.image[x];
            diff.oracle_value = oracle.image[x];
            break;
        }
    }
    return diff;
}

}  // namespace invforge
