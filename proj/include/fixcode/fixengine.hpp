#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fixcode/code.hpp"
#include "fixcode/group.hpp"
#include "fixcode/options.hpp"

namespace fixcode {

/// An exhaustive search failed to produce an object whose existence was
/// claimed.
class ClaimRefuted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The span ⟨Fix(σ) | σ ∈ I(G)⟩ together with the group statistics gathered
/// while building it. Its dual is C(G, Ω).
struct FixSpan {
    std::size_t involutions_h = 0;
    std::size_t involutions_g = 0;
    std::size_t distinct_fix_sets = 0;  // nonempty ones only
    LinearCode span;
};

[[nodiscard]] FixSpan fix_span(const AffineGroupSpec& spec, const std::vector<FqMatrix>& involutions_h,
                               const Options& opts = {});
[[nodiscard]] FixSpan fix_span(const AffineGroupSpec& spec, const Options& opts = {});

/// C(G, Ω) = ⟨Fix(σ) | σ ∈ I(G)⟩^⊥.
[[nodiscard]] LinearCode build_c_code(const AffineGroupSpec& spec, const Options& opts = {});

/// Every generator of B lies in C(G, Ω). B must be self-orthogonal and
/// invariant under the generators of G; otherwise PreconditionError.
[[nodiscard]] bool check_containment_theorem(const LinearCode& b, const AffineGroupSpec& spec,
                                             const Options& opts = {});

/// Minimum over I(H) of dim_GF(2) ker(I + h). Throws ClaimRefuted if H has
/// no involutions.
[[nodiscard]] std::size_t min_fixed_dim(const std::vector<FqMatrix>& involutions_h);
[[nodiscard]] std::size_t min_fixed_dim(const AffineGroupSpec& spec, const Options& opts = {});

struct WitnessPair {
    FqMatrix sigma;
    FqMatrix tau;
    BitVector fix_sigma;
    BitVector fix_tau;
    std::size_t intersection_size = 0;
    int inner_product = 0;
};

/// First pair (in key order) of involutions of H = SL(2s, q) whose fixed
/// spaces both have GF(2^r)-dimension s and meet only in 0.
[[nodiscard]] WitnessPair find_witness_pair(const AffineGroupSpec& spec, const std::vector<FqMatrix>& involutions_h);
[[nodiscard]] WitnessPair find_witness_pair(const AffineGroupSpec& spec, const Options& opts = {});

enum class Conclusion { verified, refuted, resource_limited };
[[nodiscard]] const char* to_string(Conclusion c);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
    bool required = true;  // informational checks do not affect the conclusion
};

struct GroupStats {
    std::size_t involutions_h = 0;
    std::size_t involutions_g = 0;
    std::size_t distinct_fix_sets = 0;
    std::optional<std::size_t> min_fixed_dim;  // GF(2) dimension
};

struct CodeStats {
    std::string role;  // which code these numbers describe
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> min_weight;
    std::optional<bool> self_orthogonal;
    std::optional<bool> self_dual;
    std::optional<bool> doubly_even;
    std::optional<bool> extremal;
};

/// Outcome of one claim check; serializes to the JSON report.
struct VerificationReport {
    std::string claim;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::optional<std::string> family;
    std::optional<GroupStats> group;
    std::optional<CodeStats> code;
    std::optional<CodeStats> fix_span;
    std::optional<WitnessPair> witness;
    std::vector<Check> checks;
    Conclusion conclusion = Conclusion::refuted;
    double elapsed_ms = 0;

    void add_check(std::string name, bool passed, std::string detail = {});
    void add_note(std::string name, bool value, std::string detail = {});
    /// verified iff there is at least one required check and all of them passed.
    void conclude();
};

/// Runs the non-existence argument for self-dual codes of length 2^(2rs)
/// invariant under T ⋊ SL(2s, 2^r).
[[nodiscard]] VerificationReport verify_lemma(unsigned r, unsigned s, const Options& opts = {});

enum class RemarkFamily { even, odd };

/// Fixed-set cardinality 2^(rs) against the extremal bound for the even
/// (m = 2s) or odd (m = 2s - 1) family, plus the exceptional-case
/// computations where they apply.
[[nodiscard]] VerificationReport verify_remark_case(unsigned r, unsigned s, RemarkFamily family,
                                                    const Options& opts = {});

/// 4 * floor(n / 24) + 4 for n = 2^bits without the multiple-of-8 guard.
[[nodiscard]] std::uint64_t bound_for_power_of_two(unsigned bits);

/// Statistics for a code; min weight / extremality only when requested.
[[nodiscard]] CodeStats describe(const LinearCode& c, std::string role, bool with_min_weight, const Options& opts = {},
                                 MinWeightMethod method = MinWeightMethod::automatic);

}  // namespace fixcode
