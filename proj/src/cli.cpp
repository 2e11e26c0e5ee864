#include "invforge/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "CLI11.hpp"

#include "invforge/analyzer.hpp"
#include "invforge/catalog.hpp"
#include "invforge/constructors.hpp"
#include "invforge/number_theory.hpp"

namespace invforge::cli {

namespace {

struct FieldArgs {
    std::uint64_t q = 0;
    std::optional<std::uint64_t> p;
    std::optional<unsigned> ext_deg;
    std::string modulus;
};

struct FamilyArgs {
    std::string family;
    std::string variant;
    std::optional<std::uint64_t> i, d, m, n;
    std::optional<std::uint64_t> generator;
};

void add_field_options(CLI::App& cmd, FieldArgs& a) {
    cmd.add_option("--q", a.q, "Field order (prime or prime power)")->required();
    cmd.add_option("--p", a.p, "Characteristic");
    cmd.add_option("--ext-deg", a.ext_deg, "Extension degree");
    cmd.add_option("--modulus", a.modulus, "Monic modulus coefficients, constant term first (e.g. 1,1,0,0,1)");
}

void add_param_options(CLI::App& cmd, FamilyArgs& a) {
    cmd.add_option("--i", a.i, "Index for t1/t2/t3a/t3b");
    cmd.add_option("--d", a.d, "Divisor of q-1 for h1/h2");
    cmd.add_option("--m", a.m, "Odd factor of q-1 for t7/t8");
    cmd.add_option("--n", a.n, "Even cofactor, n m = q-1");
    cmd.add_option("--generator", a.generator, "Generator index (default: smallest)");
}

void add_family_options(CLI::App& cmd, FamilyArgs& a, bool required) {
    auto* opt = cmd.add_option("--family", a.family, "t1, t2, t3a, t3b, h1, h2, t7 or t8 (t3 with --variant)");
    if (required) opt->required();
    cmd.add_option("--variant", a.variant, "a or b, with --family t3");
    add_param_options(cmd, a);
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " '" + std::string(s) + "' is not a number");
    }
    return v;
}

FieldRef resolve_field(const FieldArgs& a) {
    const PrimePower pp = as_prime_power(a.q);
    if (pp.prime == 0) throw Error(ErrorKind::NotPrime, "q = " + std::to_string(a.q) + " is not a prime power");
    if (a.p && *a.p != pp.prime) {
        throw Error(ErrorKind::InvalidArgument,
                    "q = " + std::to_string(a.q) + " is not a power of p = " + std::to_string(*a.p));
    }
    if (a.ext_deg && *a.ext_deg != pp.exponent) {
        throw Error(ErrorKind::DegreeMismatch, "q = " + std::to_string(a.q) + " is not " +
                                                   std::to_string(pp.prime) + "^" + std::to_string(*a.ext_deg));
    }
    if (a.modulus.empty()) return make_field(a.q);

    std::vector<std::uint32_t> coeffs;
    std::string_view rest = a.modulus;
    while (true) {
        const auto comma = rest.find(',');
        const auto v = parse_uint(rest.substr(0, comma), "modulus coefficient");
        if (v >= pp.prime) {
            throw Error(ErrorKind::CoefficientOutOfRange,
                        "modulus coefficient " + std::to_string(v) + " is not < p = " + std::to_string(pp.prime));
        }
        coeffs.push_back(static_cast<std::uint32_t>(v));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return make_extension_field(pp.prime, static_cast<unsigned>(pp.exponent), coeffs);
}

Family resolve_family(const FamilyArgs& a) {
    std::string name = a.family;
    if (name == "t3") {
        if (a.variant != "a" && a.variant != "b") {
            throw Error(ErrorKind::InvalidArgument, "--family t3 needs --variant a or --variant b");
        }
        name += a.variant;
    } else if (!a.variant.empty() && name != "t3" + a.variant) {
        throw Error(ErrorKind::InvalidArgument, "--variant only applies to --family t3");
    }
    const auto family = parse_family(name);
    if (!family) throw Error(ErrorKind::UnsupportedFamily, "unknown family '" + a.family + "'");
    return *family;
}

std::uint64_t require_param(const std::optional<std::uint64_t>& v, Family family, std::string_view flag) {
    if (!v) {
        throw Error(ErrorKind::InvalidArgument,
                    std::string(family_name(family)) + " needs " + std::string(flag));
    }
    return *v;
}

ConstructionRecipe resolve_recipe(Family family, const FieldRef& field, const FamilyArgs& a,
                                  std::uint64_t q_limit) {
    RecipeParams params;
    params.generator = a.generator;
    if (uses_index(family)) {
        params.i = require_param(a.i, family, "--i");
    } else if (uses_divisor(family)) {
        params.d = require_param(a.d, family, "--d");
    } else {
        params.m = require_param(a.m, family, "--m");
        params.n = require_param(a.n, family, "--n");
    }
    return make_recipe(family, field, params, q_limit);
}

std::vector<Family> resolve_family_list(const std::string& list) {
    if (list == "all") return {kAllFamilies.begin(), kAllFamilies.end()};
    std::vector<Family> families;
    std::string_view rest = list;
    while (true) {
        const auto comma = rest.find(',');
        const std::string name(rest.substr(0, comma));
        const auto f = parse_family(name);
        if (!f) throw Error(ErrorKind::UnsupportedFamily, "unknown family '" + name + "'");
        if (std::find(families.begin(), families.end(), *f) == families.end()) families.push_back(*f);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return families;
}

std::uint64_t resolve_q_limit(const std::optional<std::string>& env) {
    if (!env) return kDefaultQLimit;
    return parse_uint(*env, "INVFORGE_QLIMIT");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& qlimit_env) {
    CLI::App app{"Involution polynomial constructor and verifier over finite fields", "invforge"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    FieldArgs field_args;
    FamilyArgs family_args;

    auto* construct_cmd = app.add_subcommand("construct", "Build one family polynomial and print it with its recipe");
    add_field_options(*construct_cmd, field_args);
    add_family_options(*construct_cmd, family_args, true);

    std::string poly_text;
    bool expect_involution = false;
    std::optional<std::uint64_t> expect_fixed;
    auto* verify_cmd = app.add_subcommand("verify", "Analyze a polynomial's permutation map");
    add_field_options(*verify_cmd, field_args);
    verify_cmd->add_option("--poly", poly_text, "Polynomial text, e.g. \"26x^31 + 29x^11 + 22x\"")->required();
    verify_cmd->add_flag("--expect-involution", expect_involution, "Fail unless f(f(x)) = x everywhere");
    verify_cmd->add_option("--expect-fixed", expect_fixed, "Fail unless exactly this many fixed points");
    add_family_options(*verify_cmd, family_args, false);

    std::string families = "all";
    std::string output_format = "json";
    std::string out_path;
    bool timestamp = false;
    auto* catalog_cmd = app.add_subcommand("catalog", "Construct and verify every recipe over a field");
    add_field_options(*catalog_cmd, field_args);
    catalog_cmd->add_option("--families", families, "Comma-separated family names, or all");
    catalog_cmd->add_option("--format", output_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    catalog_cmd->add_option("--out", out_path, "Output file (default: standard output)");
    catalog_cmd->add_flag("--timestamp", timestamp, "Record generated_at (outside the canonical hash)");
    catalog_cmd->add_option("--generator", family_args.generator, "Generator index (default: smallest)");

    std::string against;
    auto* diff_cmd = app.add_subcommand("oracle-diff", "Compare a family polynomial with a behavior oracle");
    add_field_options(*diff_cmd, field_args);
    add_family_options(*diff_cmd, family_args, true);
    diff_cmd->add_option("--against", against, "Oracle family (default: the polynomial's own)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        SweepOptions sweep;
        sweep.q_limit = resolve_q_limit(qlimit_env);
        const FieldRef field = resolve_field(field_args);

        if (construct_cmd->parsed()) {
            const auto recipe = resolve_recipe(resolve_family(family_args), field, family_args, sweep.q_limit);
            out << format(construct(recipe)) << '\n' << recipe_to_json(recipe).dump(2) << '\n';
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            const SparsePoly poly = parse(poly_text, field);
            ClaimReport report;
            if (!family_args.family.empty()) {
                const auto recipe = resolve_recipe(resolve_family(family_args), field, family_args, sweep.q_limit);
                report = verify_claim(recipe, poly, sweep);
            } else {
                report = analyze_polynomial(poly, sweep);
            }
            out << report_to_json(report).dump(2) << '\n';
            bool ok = report.is_permutation;
            if (expect_involution && !report.is_involution) ok = false;
            if (expect_fixed && *expect_fixed != report.fixed_point_count) ok = false;
            if (!family_args.family.empty() && !report.passed()) ok = false;
            return ok ? kExitOk : kExitVerificationFailed;
        }

        if (catalog_cmd->parsed()) {
            CatalogOptions options;
            options.families = resolve_family_list(families);
            options.generator = family_args.generator;
            options.sweep = sweep;
            const Catalog catalog = build_catalog(field, options);
            for (const auto& line : catalog.skipped) err << "warning: " << line << '\n';

            const std::string text =
                output_format == "csv" ? catalog_to_csv(catalog)
                                : catalog_to_json(catalog, timestamp ? std::optional(utc_timestamp()) : std::nullopt)
                                          .dump(2) +
                                      "\n";
            if (out_path.empty()) {
                out << text;
            } else {
                std::ofstream file(out_path, std::ios::binary);
                file << text;
                if (!file) {
                    err << "error: cannot write " << out_path << '\n';
                    return kExitUsage;
                }
                out << "wrote " << catalog.entries.size() << " entries to " << out_path << '\n';
            }
            if (catalog.failures() > 0) {
                err << catalog.failures() << " of " << catalog.entries.size() << " entries failed verification\n";
                return kExitVerificationFailed;
            }
            return kExitOk;
        }

        // oracle-diff
        const Family family = resolve_family(family_args);
        const auto recipe = resolve_recipe(family, field, family_args, sweep.q_limit);
        const auto oracle_recipe =
            against.empty() ? recipe : resolve_recipe(resolve_family({.family = against}),
                                                      field, family_args, sweep.q_limit);
        const auto diff = oracle_diff(construct(recipe), oracle_recipe, sweep);
        switch (diff.status) {
            case OracleStatus::Match:
                out << "match\n";
                return kExitOk;
            case OracleStatus::Mismatch:
                out << "mismatch at x=" << diff.x << ": poly " << diff.poly_value << ", oracle "
                    << diff.oracle_value << '\n';
                return kExitVerificationFailed;
            case OracleStatus::Descriptive:
                out << "descriptive: involution and cycle-type claims "
                    << (diff.claims_hold ? "hold" : "fail") << '\n';
                return diff.claims_hold ? kExitOk : kExitVerificationFailed;
        }
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace invforge::cli
