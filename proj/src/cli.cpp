#include "fixcode/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fixcode/classical.hpp"
#include "fixcode/fixengine.hpp"
#include "fixcode/report.hpp"

namespace fixcode::cli {

namespace {

struct Global {
    std::string json_path;
    unsigned workers = 1;
    unsigned scan_cap_bits = 30;
    std::uint64_t seed = 1;

    [[nodiscard]] Options options() const {
        Options o;
        o.workers = workers;
        o.scan_cap_bits = scan_cap_bits;
        o.seed = seed;
        return o;
    }
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

MinWeightMethod parse_method(const std::string& s) {
    if (s == "exhaustive") return MinWeightMethod::exhaustive;
    if (s == "bz") return MinWeightMethod::bz;
    return MinWeightMethod::automatic;
}

// Invariance of a code under pseudo-random elements of G.
void spot_check_invariance(VerificationReport& report, const LinearCode& c, const AffineGroupSpec& spec,
                           std::uint64_t seed, int samples) {
    bool ok = true;
    for (int i = 0; i < samples && ok; ++i)
        ok = is_invariant_under(c, random_element(spec, seed + static_cast<std::uint64_t>(i)).permutation());
    report.add_check("invariant_under_G", ok, std::to_string(samples) + " random elements");
}

VerificationReport run_cgo(unsigned r, unsigned m, bool want_dual, const std::string& method, bool with_min_weight,
                           const std::string& save, const Global& g) {
    const auto start = std::chrono::steady_clock::now();
    const Options opts = g.options();
    const AffineGroupSpec spec(r, m);
    VerificationReport report;
    report.claim = want_dual ? "cgo-dual" : "cgo";
    report.params = {{"r", r},
                     {"m", m},
                     {"n", static_cast<std::int64_t>(spec.n())},
                     {"seed", static_cast<std::int64_t>(g.seed)}};
    const auto involutions_h = scan_involutions_H(spec, opts);
    const FixSpan fs = fix_span(spec, involutions_h, opts);
    const LinearCode c = dual(fs.span);
    std::optional<std::size_t> min_dim;
    if (!involutions_h.empty()) min_dim = min_fixed_dim(involutions_h);
    report.group = GroupStats{fs.involutions_h, fs.involutions_g, fs.distinct_fix_sets, min_dim};

    const LinearCode& target = want_dual ? fs.span : c;
    report.code = describe(target, want_dual ? "c_code_dual" : "c_code", with_min_weight && target.k() > 0, opts,
                           parse_method(method));
    report.add_check("dual_round_trip", dual(c) == fs.span, "dual(C(G,T)) equals the fixed-set span");
    spot_check_invariance(report, target, spec, g.seed, 20);
    if (!save.empty()) save_code(save, target);
    report.conclude();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

VerificationReport run_qr(std::uint64_t p, bool with_min_weight, const Global& g) {
    const auto start = std::chrono::steady_clock::now();
    const Options opts = g.options();
    const LinearCode c = extended_qr(p);
    VerificationReport report;
    report.claim = "qr";
    report.params = {{"p", static_cast<std::int64_t>(p)}, {"n", static_cast<std::int64_t>(c.n())}};
    report.code = describe(c, "extended_qr", with_min_weight, opts);
    report.add_check("dimension", 2 * c.k() == c.n(), "[" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "]");
    report.add_check("self_dual", *report.code->self_dual);
    report.add_check("doubly_even", *report.code->doubly_even);
    if (with_min_weight)
        report.add_check("extremal", report.code->extremal.value_or(false),
                         "d = " + std::to_string(*report.code->min_weight) +
                             ", bound = " + std::to_string(extremal_bound(c.n())));
    report.conclude();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// Checks shared by `rm` and `check`; `expected_d` is set when the minimum
// weight is known in closed form.
void apply_code_checks(VerificationReport& report, const LinearCode& c, const std::vector<std::string>& wanted,
                       std::optional<std::size_t> expected_d, const Options& opts) {
    bool with_min = false;
    for (const auto& w : wanted) with_min = with_min || w == "min-weight" || w == "extremal";
    report.code = describe(c, report.claim, with_min && c.k() > 0, opts);
    const CodeStats& s = *report.code;
    for (const auto& w : wanted) {
        if (w == "self-dual") {
            report.add_check("self_dual", *s.self_dual);
        } else if (w == "doubly-even") {
            report.add_check("doubly_even", *s.doubly_even);
        } else if (w == "self-orthogonal") {
            report.add_check("self_orthogonal", *s.self_orthogonal);
        } else if (w == "min-weight") {
            if (!s.min_weight) {
                report.add_check("min_weight", false, "zero code has no minimum weight");
            } else {
                const bool ok = !expected_d || *s.min_weight == *expected_d;
                report.add_check("min_weight", ok,
                                 "d = " + std::to_string(*s.min_weight) +
                                     (expected_d ? ", expected " + std::to_string(*expected_d) : ""));
            }
        } else if (w == "extremal") {
            report.add_check("extremal", s.extremal.value_or(false),
                             s.extremal ? "d = " + std::to_string(*s.min_weight) + ", bound = " +
                                              std::to_string(extremal_bound(c.n()))
                                        : "not a doubly even self-dual code");
        } else {
            throw CLI::ValidationError("--check", "unknown check '" + w + "'");
        }
    }
    if (wanted.empty()) report.add_check("constructed", true);
}

int finish(const VerificationReport& report, const Global& g, std::ostream& out) {
    print_summary(out, report);
    if (!g.json_path.empty()) {
        std::ofstream f(g.json_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + g.json_path);
        f << report_json(report);
    }
    return report.conclusion == Conclusion::verified ? kVerified : kRefuted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fixed-point codes of affine groups and self-dual code checks", "fixcode"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--json", g.json_path, "Write the JSON report to PATH");
    app.add_option("--workers", g.workers, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--scan-cap", g.scan_cap_bits, "log2 of the largest matrix space to scan")
        ->check(CLI::Range(1u, 40u));
    app.add_option("--seed", g.seed, "Seed for random group elements");

    unsigned r = 0, s = 0, m = 0, order = 0, vars = 0;
    std::uint64_t p = 0;
    std::string family, method = "auto", save, code_path, checks;
    bool want_dual = false, qr_min = false, cgo_min = false;
    bool chk_sd = false, chk_de = false, chk_mw = false, chk_ex = false;

    auto* lemma = app.add_subcommand("lemma", "No self-dual code of length 2^(2rs) is invariant under T ⋊ SL(2s,2^r)");
    lemma->add_option("--r", r)->required()->check(CLI::Range(1u, 8u));
    lemma->add_option("--s", s)->required()->check(CLI::Range(1u, 10u));

    auto* remark = app.add_subcommand("remark", "Fixed-set cardinality versus the extremal bound");
    remark->add_option("--r", r)->required()->check(CLI::Range(1u, 8u));
    remark->add_option("--s", s)->required()->check(CLI::Range(1u, 10u));
    remark->add_option("--family", family)->required()->check(CLI::IsMember({"even", "odd"}));

    auto* cgo = app.add_subcommand("cgo", "Build C(G,Omega) for G = T ⋊ SL(m,2^r)");
    cgo->add_option("--r", r)->required()->check(CLI::Range(1u, 8u));
    cgo->add_option("--m", m)->required()->check(CLI::Range(1u, 20u));
    cgo->add_flag("--dual", want_dual, "Report the fixed-set span instead");
    cgo->add_option("--min-weight", method, "Compute the minimum weight")
        ->check(CLI::IsMember({"auto", "exhaustive", "bz"}))
        ->expected(0, 1)
        ->default_str("auto");
    cgo->add_option("--save", save, "Write the code in fixcode-v1 format");

    auto* qr = app.add_subcommand("qr", "Extended quadratic residue code of length p+1");
    qr->add_option("--p", p)->required();
    qr->add_flag("--check-min-weight", qr_min);

    auto* rm = app.add_subcommand("rm", "Reed-Muller code RM(order, vars)");
    rm->add_option("--order", order)->required();
    rm->add_option("--vars", vars)->required()->check(CLI::Range(0u, 20u));
    rm->add_option("--save", save);
    rm->add_option("--check", checks, "Comma list: self-dual,doubly-even,self-orthogonal,min-weight,extremal");

    auto* check = app.add_subcommand("check", "Check a code file");
    check->add_option("--code", code_path)->required();
    check->add_flag("--self-dual", chk_sd);
    check->add_flag("--doubly-even", chk_de);
    check->add_flag("--min-weight", chk_mw);
    check->add_flag("--extremal", chk_ex);

    std::vector<const char*> argv{"fixcode"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kVerified;
    } catch (const CLI::ParseError& e) {
        err << "fixcode: " << e.what() << '\n';
        return kUsageOrResource;
    }
    cgo_min = cgo->count("--min-weight") > 0;

    try {
        const Options opts = g.options();
        if (*lemma) return finish(verify_lemma(r, s, opts), g, out);
        if (*remark)
            return finish(
                verify_remark_case(r, s, family == "even" ? RemarkFamily::even : RemarkFamily::odd, opts), g, out);
        if (*cgo) return finish(run_cgo(r, m, want_dual, method, cgo_min, save, g), g, out);
        if (*qr) return finish(run_qr(p, qr_min, g), g, out);
        if (*rm) {
            const auto start = std::chrono::steady_clock::now();
            const LinearCode c = reed_muller(order, vars);
            VerificationReport report;
            report.claim = "rm";
            report.params = {{"order", order}, {"vars", vars}, {"n", static_cast<std::int64_t>(c.n())}};
            apply_code_checks(report, c, split_list(checks), std::size_t{1} << (vars - order), opts);
            if (!save.empty()) save_code(save, c);
            report.conclude();
            report.elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            return finish(report, g, out);
        }
        if (*check) {
            const auto start = std::chrono::steady_clock::now();
            const LinearCode c = load_code(code_path);
            VerificationReport report;
            report.claim = "check";
            report.params = {{"n", static_cast<std::int64_t>(c.n())}, {"k", static_cast<std::int64_t>(c.k())}};
            std::vector<std::string> wanted;
            if (chk_sd) wanted.push_back("self-dual");
            if (chk_de) wanted.push_back("doubly-even");
            if (chk_mw) wanted.push_back("min-weight");
            if (chk_ex) wanted.push_back("extremal");
            apply_code_checks(report, c, wanted, std::nullopt, opts);
            report.conclude();
            report.elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            return finish(report, g, out);
        }
    } catch (const ResourceError& e) {
        err << "fixcode: resource limit: " << e.what() << '\n';
        return kUsageOrResource;
    } catch (const CLI::ValidationError& e) {
        err << "fixcode: " << e.what() << '\n';
        return kUsageOrResource;
    } catch (const std::invalid_argument& e) {  // includes PreconditionError
        err << "fixcode: " << e.what() << '\n';
        return kUsageOrResource;
    } catch (const ClaimRefuted& e) {
        err << "fixcode: refuted: " << e.what() << '\n';
        return kRefuted;
    } catch (const std::runtime_error& e) {
        err << "fixcode: " << e.what() << '\n';
        return kUsageOrResource;
    }
    return kUsageOrResource;
}

}  // namespace fixcode::cli
