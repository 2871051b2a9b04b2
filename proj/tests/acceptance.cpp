// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "fixcode/classical.hpp"
#include "fixcode/cli.hpp"
#include "fixcode/fixengine.hpp"
#include "fixcode/report.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace fixcode;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            detail << " [failed: " << what << "]";
        }
    }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

long peak_rss_mb() {
    rusage u{};
    getrusage(RUSAGE_SELF, &u);
    return u.ru_maxrss / 1024;
}

int failures = 0;

void criterion(const std::string& id, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.passed = false;
        o.detail << " [exception: " << e.what() << "]";
    }
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", seconds_since(start));
    std::cout << (o.passed ? "PASS " : "FAIL ") << id << " " << title << " (" << time << "):" << o.detail.str()
              << std::endl;
    if (!o.passed) ++failures;
}

bool check_named(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c.passed;
    return false;
}

nlohmann::json cli_json(std::vector<std::string> args, int& exit_code) {
    const auto path = std::filesystem::temp_directory_path() / "fixcode_acceptance.json";
    args.insert(args.begin(), {"--json", path.string()});
    std::ostringstream out, err;
    exit_code = cli::run(args, out, err);
    std::ifstream in(path);
    auto j = in ? nlohmann::json::parse(in) : nlohmann::json();
    std::filesystem::remove(path);
    return j;
}

}  // namespace

int main() {
    // Runs first so the peak RSS reading covers this criterion alone.
    criterion("AC1", "lemma (r,s)=(5,1) at length 1024", [](Outcome& o) {
        const auto start = Clock::now();
        int code = -1;
        const auto j = cli_json({"lemma", "--r", "5", "--s", "1"}, code);
        const double secs = seconds_since(start);
        const long mb = peak_rss_mb();
        o.expect(code == 0, "exit code 0");
        o.expect(j["conclusion"] == "verified", "conclusion verified");
        o.expect(j["params"]["n"] == 1024, "n = 1024");
        o.expect(j["group"]["involutions_H"] == 1023, "|I(H)| = 1023");
        o.expect(j["group"]["min_fixed_dim"] == 5, "minimum fixed cardinality 32");
        o.expect(j["witness"]["inner_product"] == 1, "witness inner product 1");
        bool not_so = false;
        for (const auto& c : j["checks"])
            if (c["name"] == "dual_not_self_orthogonal") not_so = c["passed"] == true;
        o.expect(not_so, "C(G,T)^perp not self-orthogonal");
        o.expect(secs < 120, "under 2 minutes");
        o.expect(mb < 1024, "under 1 GB");
        o.detail << " |I(H)|=" << j["group"]["involutions_H"] << " |I(G)|=" << j["group"]["involutions_G"]
                 << " C=[" << j["code"]["n"] << "," << j["code"]["k"] << "] sigma=" << j["witness"]["sigma"].get<std::string>()
                 << " tau=" << j["witness"]["tau"].get<std::string>() << " peak " << mb << " MB";
    });

    criterion("AC2", "lemma small family with brute-force cross-check", [](Outcome& o) {
        for (const auto& [r, s] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {1, 2}, {2, 1}, {3, 1}}) {
            const auto report = verify_lemma(r, s);
            o.expect(report.conclusion == Conclusion::verified,
                     "lemma(" + std::to_string(r) + "," + std::to_string(s) + ") verified");
            o.detail << " (" << r << "," << s << "):" << to_string(report.conclusion);
        }
        for (const auto& [r, s] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 1}}) {
            const AffineGroupSpec spec(r, 2 * s);
            const auto brute = oracle::brute_force_span(spec);
            const auto fs = fix_span(spec);
            const auto report = verify_lemma(r, s);
            const std::string tag = "(" + std::to_string(r) + "," + std::to_string(s) + ") ";
            o.expect(fs.involutions_g == brute.involutions, tag + "|I(G)| matches brute force");
            o.expect(fs.span == brute.span, tag + "fixed-set span matches brute force");
            o.expect(!is_self_orthogonal(brute.span), tag + "brute-force span not self-orthogonal");
            o.expect(report.witness && brute.span.contains(report.witness->fix_sigma) &&
                         brute.span.contains(report.witness->fix_tau),
                     tag + "witness fixed sets in brute-force span");
            o.detail << " brute" << tag << "|I(G)|=" << brute.involutions;
        }
    });

    criterion("AC3", "C(G,Omega) for r=1, m=3", [](Outcome& o) {
        const auto start = Clock::now();
        const auto c = build_c_code(AffineGroupSpec(1, 3));
        const auto d = min_weight(c);
        o.expect(c.n() == 8 && c.k() == 4 && d == 4, "[8,4,4]");
        o.expect(is_self_dual(c), "self-dual");
        o.expect(is_doubly_even(c), "doubly even");
        o.expect(seconds_since(start) < 1, "under 1 s");
        o.detail << " [" << c.n() << "," << c.k() << "," << d << "] equals RM(1,3): "
                 << (c == reed_muller(1, 3) ? "yes" : "no");
    });

    std::vector<FqMatrix> sl52;  // reused by AC8
    criterion("AC4", "C(G,Omega) for r=1, m=5", [&](Outcome& o) {
        const auto start = Clock::now();
        const AffineGroupSpec spec(1, 5);
        sl52 = scan_involutions_H(spec);
        const auto c = dual(fix_span(spec, sl52).span);
        const auto d = min_weight(c);
        o.expect(c.n() == 32 && c.k() == 16 && d == 8, "[32,16,8]");
        o.expect(is_self_dual(c), "self-dual");
        o.expect(is_doubly_even(c), "doubly even");
        o.expect(is_extremal(c) && extremal_bound(32) == 8, "extremal");
        o.expect(seconds_since(start) < 120, "under 2 minutes");
        o.detail << " |I(SL(5,2))|=" << sl52.size() << " [" << c.n() << "," << c.k() << "," << d
                 << "] equals RM(2,5): " << (c == reed_muller(2, 5) ? "yes" : "no");
    });

    criterion("AC5", "(r,s)=(2,2): C(G,T)^perp on 64 points", [](Outcome& o) {
        const auto start = Clock::now();
        const AffineGroupSpec spec(2, 3);
        const auto inv = scan_involutions_H(spec);
        const auto fs = fix_span(spec, inv);
        const auto d = min_weight(fs.span);
        const std::uint64_t card = std::uint64_t{1} << min_fixed_dim(inv);
        o.expect(is_self_orthogonal(fs.span), "self-orthogonal");
        o.expect(d == 16, "minimum weight 16");
        o.expect(card == 16 && extremal_bound(64) == 12 && card > 12, "16 > 12");
        o.expect(seconds_since(start) < 60, "under 1 minute");
        o.detail << " C^perp=[" << fs.span.n() << "," << fs.span.k() << "," << d << "] min fixed cardinality " << card
                 << " vs bound " << extremal_bound(64);
    });

    criterion("AC6", "extended QR codes are extremal", [](Outcome& o) {
        const auto start = Clock::now();
        struct Case {
            std::uint64_t p;
            std::size_t d;
            MinWeightMethod method;
        };
        for (const auto& [p, expected, method] :
             {Case{7, 4, MinWeightMethod::exhaustive}, Case{23, 8, MinWeightMethod::exhaustive},
              Case{31, 8, MinWeightMethod::exhaustive}, Case{47, 12, MinWeightMethod::bz},
              Case{79, 16, MinWeightMethod::bz}}) {
            const auto c = extended_qr(p);
            const auto d = min_weight(c, method);
            const std::string tag = "qr(" + std::to_string(p) + ") ";
            o.expect(c.n() == p + 1 && 2 * c.k() == c.n(), tag + "dimension");
            o.expect(d == expected && d == extremal_bound(c.n()), tag + "d = bound");
            o.expect(is_self_dual(c) && is_doubly_even(c), tag + "self-dual doubly even");
            o.detail << " [" << c.n() << "," << c.k() << "," << d << "]";
        }
        const auto c103 = extended_qr(103);
        o.expect(is_self_dual(c103) && is_doubly_even(c103), "qr(103) self-dual doubly even");
        o.detail << " [104,52] self-dual doubly even";
        o.expect(seconds_since(start) <= 600, "under 10 minutes");
    });

    criterion("AC7", "Reed-Muller codes lie in C(G,Omega)", [](Outcome& o) {
        o.expect(check_containment_theorem(reed_muller(1, 3), AffineGroupSpec(1, 3)), "RM(1,3) in (1,3)");
        o.expect(check_containment_theorem(reed_muller(2, 5), AffineGroupSpec(1, 5)), "RM(2,5) in (1,5)");
        o.detail << " RM(1,3) and RM(2,5) contained";
    });

    criterion("AC8", "fixed dimensions meet r*ceil(m/2) with equality attained", [&](Outcome& o) {
        for (const auto& [r, m] : std::vector<std::pair<unsigned, std::size_t>>{
                 {1, 2}, {2, 2}, {3, 2}, {5, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}}) {
            const AffineGroupSpec spec(r, m);
            const auto inv = (r == 1 && m == 5 && !sl52.empty()) ? sl52 : scan_involutions_H(spec);
            const std::size_t bound = r * ((m + 1) / 2);
            std::size_t lo = spec.bits();
            bool all = !inv.empty();
            for (const auto& h : inv) {
                const auto dim = fixed_space_dim(h);
                lo = std::min(lo, dim);
                all = all && dim >= bound;
            }
            const std::string tag = "SL(" + std::to_string(m) + "," + std::to_string(spec.q()) + ")";
            o.expect(all, tag + " all >= " + std::to_string(bound));
            o.expect(lo == bound, tag + " minimum attained");
            o.detail << " " << tag << ":" << inv.size() << " inv, min " << lo;
        }
    });

    criterion("AC9", "kernel property suites and determinism", [](Outcome& o) {
        std::mt19937_64 rng(9);
        int rn = 0, dd = 0, bz = 0, fl = 0;
        std::uniform_int_distribution<std::size_t> dim(1, 80);
        for (int i = 0; i < 500; ++i) {
            const auto m = oracle::random_matrix(rng, dim(rng) - 1, dim(rng));
            rn += rank(m) + nullspace_basis(m).n_rows() == m.n_cols();
        }
        for (int i = 0; i < 200; ++i) {
            const std::size_t n = 1 + rng() % 120;
            const auto c = oracle::random_code(rng, n, rng() % (n + 1));
            dd += dual(dual(c)) == c;
        }
        for (int i = 0; i < 50;) {
            const std::size_t n = 10 + rng() % 31;
            const auto c = oracle::random_code(rng, n, 1 + rng() % 14);
            if (c.k() == 0) continue;
            ++i;
            bz += min_weight(c, MinWeightMethod::bz) == min_weight(c, MinWeightMethod::exhaustive);
        }
        const auto f8 = Field::get(3);
        std::uniform_int_distribution<std::uint32_t> e(0, 7);
        for (int i = 0; i < 100; ++i) {
            const std::size_t m = 1 + i % 4;
            FqMatrix a(f8, m), b(f8, m);
            for (std::size_t x = 0; x < m; ++x)
                for (std::size_t y = 0; y < m; ++y) {
                    a.set(x, y, e(rng));
                    b.set(x, y, e(rng));
                }
            fl += flatten(a * b) == flatten(a) * flatten(b);
        }
        o.expect(rn == 500, "rank-nullity");
        o.expect(dd == 200, "dual involution");
        o.expect(bz == 50, "bz = exhaustive");
        o.expect(fl == 100, "flatten multiplicative");

        Options one, eight;
        eight.workers = 8;
        int same = 0, total = 0;
        auto compare = [&](const std::function<VerificationReport(const Options&)>& f) {
            ++total;
            same += report_json(f(one), false) == report_json(f(eight), false);
        };
        for (const auto& [r, s] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 1}, {1, 2}, {5, 1}})
            compare([r = r, s = s](const Options& opts) { return verify_lemma(r, s, opts); });
        compare([](const Options& opts) { return verify_remark_case(1, 2, RemarkFamily::odd, opts); });
        compare([](const Options& opts) { return verify_remark_case(2, 2, RemarkFamily::odd, opts); });
        compare([](const Options& opts) { return verify_remark_case(5, 1, RemarkFamily::even, opts); });
        for (const auto& args : std::vector<std::vector<std::string>>{{"qr", "--p", "47", "--check-min-weight"},
                                                                      {"cgo", "--r", "2", "--m", "3", "--dual", "--min-weight", "bz"}}) {
            ++total;
            int c1 = 0, c8 = 0;
            auto a = args, b = args;
            a.insert(a.begin(), {"--workers", "1"});
            b.insert(b.begin(), {"--workers", "8"});
            auto ja = cli_json(a, c1), jb = cli_json(b, c8);
            ja.erase("elapsed_ms");
            jb.erase("elapsed_ms");
            same += c1 == c8 && ja.dump() == jb.dump();
        }
        o.expect(same == total, "reports identical for 1 and 8 workers");
        o.detail << " rank-nullity " << rn << "/500, dual " << dd << "/200, bz " << bz << "/50, flatten " << fl
                 << "/100, deterministic reports " << same << "/" << total;
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
