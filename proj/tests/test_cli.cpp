#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixcode/cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = fixcode::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp(const std::string& name) { return fs::temp_directory_path() / ("fixcode_cli_" + name); }

json read_json(const fs::path& p) {
    std::ifstream in(p);
    return json::parse(in);
}

json run_json(std::vector<std::string> args, const std::string& name) {
    const auto path = temp(name);
    args.insert(args.begin(), {"--json", path.string()});
    const auto r = run(args);
    REQUIRE_MESSAGE(r.code == 0, r.err);
    auto j = read_json(path);
    fs::remove(path);
    return j;
}

}  // namespace

TEST_CASE("lemma report") {
    const auto j = run_json({"lemma", "--r", "1", "--s", "1"}, "lemma.json");
    CHECK(j["claim"] == "lemma");
    CHECK(j["conclusion"] == "verified");
    CHECK(j["params"]["n"] == 4);
    CHECK(j["witness"]["inner_product"] == 1);
    CHECK(j["group"]["involutions_H"] == 3);
    CHECK(j.contains("elapsed_ms"));
    for (const auto& c : j["checks"]) CHECK(c["passed"] == true);
}

TEST_CASE("exit codes") {
    CHECK(run({"qr", "--p", "200"}).code == 2);
    CHECK(run({"qr", "--p", "23"}).code == 0);
    CHECK(run({"lemma", "--r", "1"}).code == 2);
    CHECK(run({"lemma", "--r", "1", "--s", "1", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"remark", "--r", "3", "--s", "1", "--family", "odd"}).code == 2);
    CHECK(run({"--scan-cap", "20", "cgo", "--r", "1", "--m", "5"}).code == 2);
    CHECK(run({"rm", "--order", "2", "--vars", "5", "--check", "nonsense"}).code == 2);
    CHECK(run({"check", "--code", "/nonexistent/x.code"}).code == 2);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("lemma") != std::string::npos);
}

TEST_CASE("rm checks") {
    const auto j = run_json({"rm", "--order", "2", "--vars", "5", "--check", "self-dual,doubly-even,min-weight,extremal"},
                            "rm.json");
    CHECK(j["code"]["n"] == 32);
    CHECK(j["code"]["k"] == 16);
    CHECK(j["code"]["min_weight"] == 8);
    CHECK(j["conclusion"] == "verified");
    // RM(1,4) is not self-dual, so the requested check fails.
    CHECK(run({"rm", "--order", "1", "--vars", "4", "--check", "self-dual"}).code == 1);
}

TEST_CASE("save then check round trip") {
    const auto path = temp("rm13.code");
    CHECK(run({"rm", "--order", "1", "--vars", "3", "--save", path.string()}).code == 0);
    const auto j = run_json({"check", "--code", path.string(), "--self-dual", "--doubly-even", "--min-weight", "--extremal"},
                            "check.json");
    CHECK(j["params"]["n"] == 8);
    CHECK(j["code"]["min_weight"] == 4);
    CHECK(j["conclusion"] == "verified");

    const auto cpath = temp("cgo13.code");
    CHECK(run({"cgo", "--r", "1", "--m", "3", "--save", cpath.string()}).code == 0);
    std::ifstream a(path), b(cpath);
    const std::string sa((std::istreambuf_iterator<char>(a)), {}), sb((std::istreambuf_iterator<char>(b)), {});
    CHECK(sa == sb);
    fs::remove(path);
    fs::remove(cpath);

    const auto bad = temp("bad.code");
    std::ofstream(bad) << "fixcode-v1 n=4 k=2\n1100\n1010\n";
    CHECK(run({"check", "--code", bad.string(), "--self-dual"}).code == 1);
    std::ofstream(bad) << "garbage\n";
    CHECK(run({"check", "--code", bad.string()}).code == 2);
    fs::remove(bad);
}

TEST_CASE("cgo report") {
    const auto j = run_json({"cgo", "--r", "2", "--m", "3", "--dual", "--min-weight", "auto"}, "cgo.json");
    CHECK(j["code"]["role"] == "c_code_dual");
    CHECK(j["code"]["n"] == 64);
    CHECK(j["code"]["min_weight"] == 16);
    CHECK(j["conclusion"] == "verified");
}

TEST_CASE("JSON is identical across worker counts apart from elapsed time") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"lemma", "--r", "2", "--s", "1"},
                                                                  {"remark", "--r", "1", "--s", "2", "--family", "odd"},
                                                                  {"cgo", "--r", "1", "--m", "4", "--min-weight", "bz"},
                                                                  {"qr", "--p", "31", "--check-min-weight"}}) {
        auto one = args, eight = args;
        one.insert(one.begin(), {"--workers", "1"});
        eight.insert(eight.begin(), {"--workers", "8"});
        auto a = run_json(one, "w1.json"), b = run_json(eight, "w8.json");
        a.erase("elapsed_ms");
        b.erase("elapsed_ms");
        CHECK(a.dump() == b.dump());
    }
}
