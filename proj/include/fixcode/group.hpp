#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fixcode/field.hpp"
#include "fixcode/gf2.hpp"
#include "fixcode/options.hpp"

namespace fixcode {

/// G = T ⋊ SL(m, 2^r) acting on Ω = T = GF(2^r)^m.
class AffineGroupSpec {
public:
    AffineGroupSpec(unsigned r, std::size_t m);

    [[nodiscard]] unsigned r() const { return r_; }
    [[nodiscard]] std::size_t m() const { return m_; }
    [[nodiscard]] std::uint32_t q() const { return field_->order(); }
    /// GF(2)-dimension of T, so |Ω| = 2^bits().
    [[nodiscard]] std::size_t bits() const { return r_ * m_; }
    [[nodiscard]] std::size_t n() const { return std::size_t{1} << bits(); }
    [[nodiscard]] const FieldPtr& field() const { return field_; }
    /// log2 of q^(m*m), the size of the matrix space.
    [[nodiscard]] std::size_t matrix_space_bits() const { return r_ * m_ * m_; }

private:
    unsigned r_;
    std::size_t m_;
    FieldPtr field_;
};

/// Affine map x -> h x + t. Products compose right-to-left:
/// (t1,h1)(t2,h2) = (t1 + h1 t2, h1 h2).
class GroupElement {
public:
    GroupElement(PointIndex t, FqMatrix h);
    static GroupElement identity(const AffineGroupSpec& spec);

    [[nodiscard]] PointIndex translation() const { return t_; }
    [[nodiscard]] const FqMatrix& linear() const { return h_; }
    [[nodiscard]] bool is_identity() const { return t_ == 0 && h_.is_identity(); }
    [[nodiscard]] PointIndex act(PointIndex x) const { return apply_rows(rows_, x) ^ t_; }
    [[nodiscard]] GroupElement inverse() const;
    /// The induced permutation of Ω: perm[x] = g(x).
    [[nodiscard]] std::vector<std::size_t> permutation() const;

    friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.t_ == b.t_ && a.h_ == b.h_; }

private:
    PointIndex t_;
    FqMatrix h_;
    std::vector<std::uint64_t> rows_;  // flatten(h) as bitmask rows
};

[[nodiscard]] inline PointIndex act(const GroupElement& g, PointIndex x) { return g.act(x); }

/// |SL(m, q)| = q^(m(m-1)/2) * prod_{i=2..m} (q^i - 1).
[[nodiscard]] std::uint64_t sl_order(std::size_t m, std::uint64_t q);

/// All h in SL(m, q) with h^2 = I, h != I, by a full scan of the q^(m*m)
/// matrix space. Sorted by key(). Throws ResourceError above the scan cap.
[[nodiscard]] std::vector<FqMatrix> scan_involutions_H(const AffineGroupSpec& spec, const Options& opts = {});

struct InvolutionSet {
    enum class Provenance { structural, scan };
    std::vector<GroupElement> elements;
    Provenance provenance = Provenance::structural;
};

/// I(G) = {(t, I) : t != 0} ∪ {(t, h) : h ∈ I(H), (I + h) t = 0}.
[[nodiscard]] InvolutionSet involutions_G(const AffineGroupSpec& spec, const std::vector<FqMatrix>& involutions_h);
[[nodiscard]] InvolutionSet involutions_G(const AffineGroupSpec& spec, const Options& opts = {});

/// Basis (as packed points) of ker(I + h) over GF(2).
[[nodiscard]] std::vector<PointIndex> fixed_space_basis(const FqMatrix& h);
/// dim over GF(2) of ker(I + h).
[[nodiscard]] std::size_t fixed_space_dim(const FqMatrix& h);

/// Indicator of {x : h x + t = x} over Ω, found by solving (I + h) x = t.
[[nodiscard]] BitVector fix_set(const GroupElement& g, const AffineGroupSpec& spec);

/// Deterministic product of elementary transvections with a random
/// translation; always lies in G.
[[nodiscard]] GroupElement random_element(const AffineGroupSpec& spec, std::uint64_t seed);

/// Translations by the GF(2) basis of T together with the transvections
/// I + x^b E_ij; together they generate G.
[[nodiscard]] std::vector<GroupElement> generators(const AffineGroupSpec& spec);

}  // namespace fixcode
