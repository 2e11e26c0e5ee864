#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "invforge/catalog.hpp"
#include "invforge/cli.hpp"

using namespace invforge;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, std::optional<std::string> qlimit = std::nullopt) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err, qlimit);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("construct") {
    auto r = run({"construct", "--q", "41", "--family", "t1", "--i", "0", "--generator", "6"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "26x^31 + 29x^11 + 22x");
    const auto recipe = nlohmann::json::parse(r.out.substr(r.out.find('\n') + 1));
    CHECK(recipe["family"] == "t1");
    CHECK(recipe["g"] == 6);

    r = run({"construct", "--q", "16", "--p", "2", "--ext-deg", "4", "--family", "h1", "--d", "3"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "x^14 + x^11 + x^9 + x^6 + x^4");

    r = run({"construct", "--q", "16", "--modulus", "1,1,0,0,1", "--family", "h2", "--d", "3"});
    CHECK(first_line(r.out) == "x^11 + x^9 + x^6 + x^4 + x");

    r = run({"construct", "--q", "13", "--family", "t3", "--variant", "b", "--i", "0"});
    CHECK(first_line(r.out) == "x^10 + 10x^7 + 12x^4 + 4x");

    r = run({"construct", "--q", "13", "--family", "t7", "--m", "3", "--n", "4"});
    CHECK(first_line(r.out) == "7x^11 + 6x^7 + 7x^5 + 7x");
}

TEST_CASE("construct parameter errors exit 2 with one diagnostic line") {
    auto r = run({"construct", "--q", "40", "--family", "t1", "--i", "0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("NotPrime") != std::string::npos);
    CHECK(r.err.find('\n') == r.err.size() - 1);

    CHECK(run({"construct", "--q", "7", "--family", "t1", "--i", "0"}).code == 2);
    CHECK(run({"construct", "--q", "41", "--family", "t1"}).code == 2);
    CHECK(run({"construct", "--q", "41", "--family", "t9", "--i", "0"}).code == 2);
    CHECK(run({"construct", "--q", "41", "--family", "t3", "--i", "0"}).code == 2);
    CHECK(run({"construct", "--q", "41", "--family", "h1", "--d", "3"}).code == 2);
    CHECK(run({"construct", "--q", "16", "--p", "3", "--family", "h1", "--d", "3"}).code == 2);
    CHECK(run({"construct", "--q", "16", "--ext-deg", "2", "--family", "h1", "--d", "3"}).code == 2);
    CHECK(run({"construct", "--q", "16", "--modulus", "1,0,1,0,1", "--family", "h1", "--d", "3"}).code == 2);
    CHECK(run({"construct", "--q", "16", "--modulus", "1,x", "--family", "h1", "--d", "3"}).code == 2);
    CHECK(run({"construct", "--q", "41", "--family", "t1", "--i", "0", "--generator", "2"}).code == 2);
    CHECK(run({"construct", "--q", "abc", "--family", "t1"}).code == 2);
    CHECK(run({"construct", "--family", "t1"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("help and version exit 0") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"catalog", "--help"}).code == 0);
    const auto v = run({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out.find(std::string(kToolVersion)) != std::string::npos);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--q", "41", "--poly", "26x^31 + 29x^11 + 22x", "--expect-involution", "--expect-fixed", "1"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["involution"] == true);
    CHECK(j["fixed_points"] == 1);
    CHECK(j["cycle_type"]["2"] == 20);

    r = run({"verify", "--q", "41", "--poly", "x^2"});
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["involution"] == false);

    // printed F_23 string with exponent 22 fails; exponent 12 passes
    CHECK(run({"verify", "--q", "23", "--poly", "12x^21 + 11x^22 + 12x^10 + 12x", "--expect-involution"}).code == 1);
    CHECK(run({"verify", "--q", "23", "--poly", "12x^21 + 11x^12 + 12x^10 + 12x", "--expect-involution"}).code == 0);

    CHECK(run({"verify", "--q", "41", "--poly", "26x^31 + 29x^11 + 22x", "--expect-fixed", "21"}).code == 1);
    // a permutation that is not an involution passes without --expect-involution
    CHECK(run({"verify", "--q", "41", "--poly", "x^3"}).code == 0);
    CHECK(run({"verify", "--q", "41", "--poly", "x^3", "--expect-involution"}).code == 1);

    // against a family claim
    CHECK(run({"verify", "--q", "41", "--poly", "26x^31 + 29x^11 + 22x", "--family", "t1", "--i", "0",
               "--generator", "6"}).code == 0);
    CHECK(run({"verify", "--q", "7", "--poly", "4x^5 + 3x^4 + 4x^2 + 4x", "--family", "h2", "--d", "2"}).code == 1);

    r = run({"verify", "--q", "41", "--poly", "3y"});
    CHECK(r.code == 2);
    CHECK(r.err.find("SyntaxError") != std::string::npos);
    CHECK(run({"verify", "--q", "41", "--poly", "50x"}).code == 2);
}

TEST_CASE("catalog output") {
    auto r = run({"catalog", "--q", "5", "--families", "t1", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "family,q,g,params,poly,involution,fixed_points,cycle_type,oracle\n"
                   "t1,5,2,i=0;d=1;alpha=4,4x,true,1,2:2;1:1,match\n");

    r = run({"catalog", "--q", "41", "--families", "t1,t2,t3a,t3b"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["entries"].size() == 40);

    const auto again = run({"catalog", "--q", "41", "--families", "t1,t2,t3a,t3b"});
    CHECK(again.out == r.out);

    r = run({"catalog", "--q", "7", "--families", "t1,h1"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning: t1 skipped: BadCongruence") != std::string::npos);

    CHECK(run({"catalog", "--q", "41", "--families", "t1,zz"}).code == 2);
    CHECK(run({"catalog", "--q", "41", "--format", "xml"}).code == 2);
    CHECK(run({"catalog", "--q", "40"}).code == 2);
}

TEST_CASE("catalog files and timestamps") {
    const auto dir = std::filesystem::temp_directory_path() / "invforge_cli_test";
    std::filesystem::create_directories(dir);
    const auto json_a = dir / "a.json";
    const auto json_b = dir / "b.json";
    const auto csv = dir / "c.csv";

    auto r = run({"catalog", "--q", "13", "--out", json_a.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("entries to") != std::string::npos);
    r = run({"catalog", "--q", "13", "--out", json_b.string(), "--timestamp"});
    CHECK(r.code == 0);
    CHECK(run({"catalog", "--q", "13", "--format", "csv", "--out", csv.string()}).code == 0);

    const auto a = nlohmann::ordered_json::parse(read_file(json_a));
    const auto b = nlohmann::json::parse(read_file(json_b));
    CHECK_FALSE(a.contains("generated_at"));
    CHECK(b.contains("generated_at"));
    CHECK(a["canonical_hash"] == b["canonical_hash"]);
    CHECK(rows_from_json(a) == rows_from_csv(read_file(csv)));

    CHECK(run({"catalog", "--q", "13", "--out", (dir / "missing" / "x.json").string()}).code == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("oracle-diff") {
    auto r = run({"oracle-diff", "--q", "13", "--family", "t1", "--i", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "match\n");

    r = run({"oracle-diff", "--q", "7", "--family", "h1", "--d", "2", "--against", "h2"});
    CHECK(r.code == 1);
    CHECK(r.out == "mismatch at x=2: poly 4, oracle 2\n");

    r = run({"oracle-diff", "--q", "13", "--family", "t8", "--m", "3", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("descriptive", 0) == 0);

    CHECK(run({"oracle-diff", "--q", "41", "--family", "t1", "--i", "0", "--against", "t2"}).code == 1);
    CHECK(run({"oracle-diff", "--q", "41", "--family", "t1", "--i", "0", "--against", "h1"}).code == 2);
    CHECK(run({"oracle-diff", "--q", "13", "--family", "t1", "--i", "7"}).code == 2);
}

TEST_CASE("INVFORGE_QLIMIT") {
    CHECK(run({"verify", "--q", "41", "--poly", "x"}, "40").code == 2);
    CHECK(run({"verify", "--q", "41", "--poly", "x"}, "41").code == 0);
    CHECK(run({"verify", "--q", "41", "--poly", "x"}, "lots").code == 2);
    const auto r = run({"catalog", "--q", "41"}, "10");
    CHECK(r.code == 2);
    CHECK(r.err.find("LimitExceeded") != std::string::npos);
}
