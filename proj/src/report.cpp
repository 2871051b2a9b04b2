#include "fixcode/report.hpp"

#include <ostream>

#include "json.hpp"

namespace fixcode {

namespace {

using nlohmann::json;

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

json code_json(const CodeStats& s) {
    return json{{"role", s.role},
                {"n", s.n},
                {"k", s.k},
                {"min_weight", optional_json(s.min_weight)},
                {"self_orthogonal", optional_json(s.self_orthogonal)},
                {"self_dual", optional_json(s.self_dual)},
                {"doubly_even", optional_json(s.doubly_even)},
                {"extremal", optional_json(s.extremal)}};
}

}  // namespace

std::string report_json(const VerificationReport& report, bool with_elapsed) {
    json j;
    j["claim"] = report.claim;

    json params = json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    if (report.family) params["family"] = *report.family;
    j["params"] = params;

    if (report.group) {
        const auto& g = *report.group;
        j["group"] = json{{"involutions_H", g.involutions_h},
                          {"involutions_G", g.involutions_g},
                          {"distinct_fix_sets", g.distinct_fix_sets},
                          {"min_fixed_dim", optional_json(g.min_fixed_dim)}};
    } else {
        j["group"] = nullptr;
    }
    j["code"] = report.code ? code_json(*report.code) : json(nullptr);
    j["fix_span"] = report.fix_span ? code_json(*report.fix_span) : json(nullptr);
    if (report.witness) {
        const auto& w = *report.witness;
        j["witness"] = json{{"sigma", w.sigma.to_hex()},
                            {"tau", w.tau.to_hex()},
                            {"intersection_size", w.intersection_size},
                            {"inner_product", w.inner_product}};
    } else {
        j["witness"] = nullptr;
    }

    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"required", c.required}});
    j["checks"] = checks;
    j["conclusion"] = to_string(report.conclusion);
    if (with_elapsed) j["elapsed_ms"] = report.elapsed_ms;
    return j.dump(2) + "\n";
}

void print_summary(std::ostream& out, const VerificationReport& report) {
    out << report.claim;
    for (const auto& [key, value] : report.params) out << ' ' << key << '=' << value;
    if (report.family) out << " family=" << *report.family;
    out << '\n';
    if (report.group)
        out << "  |I(H)| = " << report.group->involutions_h << ", |I(G)| = " << report.group->involutions_g
            << ", distinct fixed sets = " << report.group->distinct_fix_sets << '\n';
    for (const auto* stats : {&report.code, &report.fix_span}) {
        if (!*stats) continue;
        const auto& s = **stats;
        out << "  " << s.role << ": [" << s.n << ", " << s.k;
        if (s.min_weight) out << ", " << *s.min_weight;
        out << "]";
        if (s.self_dual) out << (*s.self_dual ? " self-dual" : " not self-dual");
        if (s.doubly_even) out << (*s.doubly_even ? ", doubly even" : ", not doubly even");
        if (s.extremal) out << (*s.extremal ? ", extremal" : ", not extremal");
        out << '\n';
    }
    if (report.witness)
        out << "  witness: sigma=" << report.witness->sigma.to_hex() << " tau=" << report.witness->tau.to_hex()
            << " inner product " << report.witness->inner_product << '\n';
    for (const auto& c : report.checks)
        out << "  [" << (c.required ? (c.passed ? "PASS" : "FAIL") : (c.passed ? "yes " : "no  ")) << "] " << c.name
            << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    out << "conclusion: " << to_string(report.conclusion) << " (" << static_cast<long long>(report.elapsed_ms)
        << " ms)\n";
}

}  // namespace fixcode
