#include "invforge/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <exception>
#include <numeric>
#include <sstream>
#include <tuple>

#include "invforge/number_theory.hpp"

namespace invforge {

namespace {

std::string skip_line(Family family, const std::string& what, const Error& e) {
    std::string line(family_name(family));
    if (!what.empty()) line += " " + what;
    return line + " skipped: " + e.what();
}

std::tuple<int, std::uint64_t, std::uint64_t> order_key(const ConstructionRecipe& r) {
    const int family = static_cast<int>(r.family);
    if (uses_index(r.family)) return {family, r.i, 0};
    if (uses_divisor(r.family)) return {family, r.d, 0};
    return {family, r.m, r.n};
}

std::string params_text(const nlohmann::ordered_json& params) {
    std::string out;
    for (const auto& [key, value] : params.items()) {
        if (!out.empty()) out += ';';
        out += key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    }
    return out;
}

std::string cycle_type_text(const CycleType& ct) {
    std::string out;
    for (auto it = ct.rbegin(); it != ct.rend(); ++it) {
        if (!out.empty()) out += ';';
        out += std::to_string(it->first) + ":" + std::to_string(it->second);
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted) throw Error(ErrorKind::SyntaxError, "unterminated quote on CSV line " + std::to_string(line_no));
    return fields;
}

std::uint64_t parse_count(const std::string& s, std::size_t line_no) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw Error(ErrorKind::SyntaxError, "bad number '" + s + "' on CSV line " + std::to_string(line_no));
    }
    return value;
}

constexpr std::string_view kCsvHeader = "family,q,g,params,poly,involution,fixed_points,cycle_type,oracle";

}  // namespace

std::vector<ConstructionRecipe> enumerate_recipes(Family family, const FieldRef& field,
                                                  std::optional<std::uint64_t> generator,
                                                  std::uint64_t q_limit,
                                                  std::vector<std::string>& skipped) {
    const std::uint64_t q = field->order();
    std::vector<ConstructionRecipe> recipes;
    RecipeParams params;
    params.generator = generator;

    if (uses_index(family)) {
        try {
            recipes.push_back(make_recipe(family, field, params, q_limit));
        } catch (const Error& e) {
            skipped.push_back(skip_line(family, "", e));
            return recipes;
        }
        const std::uint64_t d = recipes.front().d;
        for (std::uint64_t i = 1; i < d; ++i) {
            params.i = i;
            recipes.push_back(make_recipe(family, field, params, q_limit));
        }
        return recipes;
    }

    if (uses_divisor(family)) {
        for (std::uint64_t d : divisors(q - 1)) {
            params.d = d;
            try {
                recipes.push_back(make_recipe(family, field, params, q_limit));
            } catch (const Error& e) {
                skipped.push_back(skip_line(family, "d=" + std::to_string(d), e));
            }
        }
        return recipes;
    }

    if (field->characteristic() == 2) {
        skipped.push_back(std::string(family_name(family)) + " skipped: CharacteristicTwo: q = " +
                          std::to_string(q) + " is even");
        return recipes;
    }
    for (std::uint64_t m : divisors(q - 1)) {
        const std::uint64_t n = (q - 1) / m;
        if (m % 2 == 0 || std::gcd(m, n) != 1) continue;
        params.m = m;
        params.n = n;
        try {
            recipes.push_back(make_recipe(family, field, params, q_limit));
        } catch (const Error& e) {
            skipped.push_back(skip_line(family, "m=" + std::to_string(m) + ",n=" + std::to_string(n), e));
        }
    }
    return recipes;
}

std::size_t Catalog::failures() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const ClaimReport& r) { return !r.passed(); }));
}

Catalog build_catalog(const FieldRef& field, const CatalogOptions& options) {
    Catalog catalog;
    catalog.field = field;
    catalog.families = options.families;

    if (field->order() > options.sweep.q_limit) {
        throw Error(ErrorKind::LimitExceeded, "catalog over q = " + std::to_string(field->order()) +
                                                  " exceeds limit " + std::to_string(options.sweep.q_limit));
    }
    FieldElement g = field->zero();
    if (options.generator) {
        g = field->element(*options.generator);
        if (!is_generator(g)) {
            throw Error(ErrorKind::NotAGenerator,
                        "element " + std::to_string(*options.generator) + " does not generate F_q^*");
        }
    } else {
        g = find_smallest_generator(*field);
    }
    catalog.generator = g.index();

    std::vector<ConstructionRecipe> recipes;
    for (Family family : options.families) {
        auto part = enumerate_recipes(family, field, g.index(), options.sweep.q_limit, catalog.skipped);
        recipes.insert(recipes.end(), part.begin(), part.end());
    }

    const auto table = dlog_table(g, options.sweep.q_limit);
    SweepOptions per_entry = options.sweep;
    per_entry.execution = kernels::Execution::Serial;

    std::vector<ClaimReport> reports(recipes.size());
    std::vector<std::exception_ptr> errors(recipes.size());
    const auto count = static_cast<std::int64_t>(recipes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t idx = 0; idx < count; ++idx) {
        try {
            reports[idx] = verify_claim(recipes[idx], construct(recipes[idx]), table, per_entry);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    std::vector<std::size_t> order(recipes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto ka = order_key(recipes[a]);
        const auto kb = order_key(recipes[b]);
        if (ka != kb) return ka < kb;
        return reports[a].poly < reports[b].poly;
    });
    catalog.entries.reserve(order.size());
    for (std::size_t idx : order) catalog.entries.push_back(std::move(reports[idx]));
    return catalog;
}

CatalogRow to_row(const ClaimReport& report) {
    return {report.family,
            report.field->order(),
            report.generator,
            params_text(report.params),
            report.poly,
            report.is_involution,
            report.fixed_point_count,
            cycle_type_text(report.cycle_type),
            std::string(oracle_status_name(report.oracle))};
}

std::vector<CatalogRow> to_rows(const Catalog& catalog) {
    std::vector<CatalogRow> rows;
    rows.reserve(catalog.entries.size());
    for (const auto& r : catalog.entries) rows.push_back(to_row(r));
    return rows;
}

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::ordered_json catalog_to_json(const Catalog& catalog, const std::optional<std::string>& generated_at) {
    const FieldSpec& f = *catalog.field;
    nlohmann::ordered_json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    nlohmann::ordered_json field;
    field["q"] = f.order();
    field["p"] = f.characteristic();
    field["ext_deg"] = f.ext_deg();
    if (!f.is_prime_field()) field["modulus"] = f.modulus();
    doc["field"] = field;
    doc["generator"] = catalog.generator;
    nlohmann::ordered_json families = nlohmann::ordered_json::array();
    for (Family fam : catalog.families) families.push_back(family_name(fam));
    doc["families"] = families;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& r : catalog.entries) {
        auto j = report_to_json(r);
        j["passed"] = r.passed();
        entries.push_back(std::move(j));
    }
    doc["entries"] = std::move(entries);
    doc["skipped"] = catalog.skipped;
    doc["failures"] = catalog.failures();

    doc["canonical_hash"] = fnv1a64_hex(doc.dump());
    if (generated_at) doc["generated_at"] = *generated_at;
    return doc;
}

std::string catalog_to_csv(const Catalog& catalog) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& r : to_rows(catalog)) {
        out += csv_field(r.family) + ',' + std::to_string(r.q) + ',' + std::to_string(r.g) + ',' +
               csv_field(r.params) + ',' + csv_field(r.poly) + ',' + (r.involution ? "true" : "false") + ',' +
               std::to_string(r.fixed_points) + ',' + csv_field(r.cycle_type) + ',' + r.oracle + '\n';
    }
    return out;
}

std::vector<CatalogRow> rows_from_json(const nlohmann::ordered_json& doc) {
    std::vector<CatalogRow> rows;
    for (const auto& e : doc.at("entries")) {
        CycleType ct;
        for (const auto& [length, count] : e.at("cycle_type").items()) {
            ct[std::stoull(length)] = count.get<std::uint64_t>();
        }
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [key, value] : e.at("params").items()) params[key] = value;
        rows.push_back({e.at("family").get<std::string>(), e.at("q").get<std::uint64_t>(),
                        e.at("g").get<std::uint32_t>(), params_text(params), e.at("poly").get<std::string>(),
                        e.at("involution").get<bool>(), e.at("fixed_points").get<std::uint64_t>(),
                        cycle_type_text(ct), e.at("oracle").get<std::string>()});
    }
    return rows;
}

std::vector<CatalogRow> rows_from_csv(std::string_view text) {
    std::vector<CatalogRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1) {
            if (line != kCsvHeader) throw Error(ErrorKind::SyntaxError, "unexpected CSV header: " + line);
            continue;
        }
        if (line.empty()) continue;
        const auto f = split_csv_line(line, line_no);
        if (f.size() != 9) {
            throw Error(ErrorKind::SyntaxError,
                        "CSV line " + std::to_string(line_no) + " has " + std::to_string(f.size()) + " fields");
        }
        if (f[5] != "true" && f[5] != "false") {
            throw Error(ErrorKind::SyntaxError, "bad involution flag on CSV line " + std::to_string(line_no));
        }
        rows.push_back({f[0], parse_count(f[1], line_no), static_cast<std::uint32_t>(parse_count(f[2], line_no)),
                        f[3], f[4], f[5] == "true", parse_count(f[6], line_no), f[7], f[8]});
    }
    return rows;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace invforge
