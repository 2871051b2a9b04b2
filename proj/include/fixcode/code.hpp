#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fixcode/gf2.hpp"
#include "fixcode/options.hpp"

namespace fixcode {

/// Binary linear [n, k] code held by its RREF generator matrix. Two codes
/// are equal iff their generator matrices are identical.
class LinearCode {
public:
    /// Zero code of length n.
    explicit LinearCode(std::size_t n = 0) : generators_(n) {}

    [[nodiscard]] std::size_t n() const { return generators_.n_cols(); }
    [[nodiscard]] std::size_t k() const { return generators_.n_rows(); }
    [[nodiscard]] const BitMatrix& generators() const { return generators_; }
    [[nodiscard]] bool contains(const BitVector& v) const { return member(generators_, v); }

    friend bool operator==(const LinearCode&, const LinearCode&) = default;

private:
    friend LinearCode make_code(std::span<const BitVector> rows, std::size_t n);
    explicit LinearCode(BitMatrix rref_basis) : generators_(std::move(rref_basis)) {}
    BitMatrix generators_;
};

[[nodiscard]] LinearCode make_code(std::span<const BitVector> rows, std::size_t n);
[[nodiscard]] inline LinearCode make_code(const BitMatrix& m) { return make_code(m.rows(), m.n_cols()); }

[[nodiscard]] LinearCode dual(const LinearCode& c);
[[nodiscard]] bool is_self_orthogonal(const LinearCode& c);
[[nodiscard]] bool is_self_dual(const LinearCode& c);
/// Generator weights ≡ 0 (mod 4) plus pairwise orthogonality, which is
/// equivalent to every codeword weight being ≡ 0 (mod 4).
[[nodiscard]] bool is_doubly_even(const LinearCode& c);

/// counts[w] = number of codewords of weight w, w = 0..n.
struct WeightEnumerator {
    std::vector<std::uint64_t> counts;

    [[nodiscard]] std::uint64_t total() const;
    /// Smallest nonzero weight with a codeword, or 0 for the zero code.
    [[nodiscard]] std::size_t min_weight() const;
    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

/// Exact enumeration (Gray-code traversal). Throws ResourceError when
/// k > opts.exhaustive_limit.
[[nodiscard]] WeightEnumerator weight_enumerator(const LinearCode& c, const Options& opts = {});

enum class MinWeightMethod { exhaustive, bz, automatic };

/// Minimum nonzero weight. Throws PreconditionError for the zero code and
/// ResourceError when a cap is exceeded.
[[nodiscard]] std::size_t min_weight(const LinearCode& c, MinWeightMethod method = MinWeightMethod::automatic,
                                     const Options& opts = {});

/// 4 * floor(n / 24) + 4; n must be a multiple of 8.
[[nodiscard]] std::size_t extremal_bound(std::size_t n);

/// Requires a doubly even self-dual code (PreconditionError otherwise).
[[nodiscard]] bool is_extremal(const LinearCode& c, const Options& opts = {});

/// True iff permuting coordinates by `perm` (coordinate i moves to perm[i])
/// maps the code onto itself.
[[nodiscard]] bool is_invariant_under(const LinearCode& c, std::span<const std::size_t> perm);
[[nodiscard]] BitVector permute(const BitVector& v, std::span<const std::size_t> perm);

/// Direct sum C1 ⊕ C2 on n1 + n2 coordinates.
[[nodiscard]] LinearCode direct_sum(const LinearCode& a, const LinearCode& b);

// fixcode-v1 text format:
//   fixcode-v1 n=<n> k=<k>
//   <k lines of n '0'/'1' characters, the RREF generator rows>
void write_code(std::ostream& out, const LinearCode& c);
[[nodiscard]] std::string to_code_file(const LinearCode& c);
/// Throws std::runtime_error on malformed input.
[[nodiscard]] LinearCode read_code(std::istream& in);
void save_code(const std::string& path, const LinearCode& c);
[[nodiscard]] LinearCode load_code(const std::string& path);

}  // namespace fixcode
