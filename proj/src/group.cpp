#include "fixcode/group.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "fixcode/parallel.hpp"

namespace fixcode {

namespace {

constexpr std::size_t kMaxPointBits = 20;

// Solution set of A x = rhs over GF(2), A given as bitmask rows over `d`
// columns.
struct AffineSolution {
    bool consistent = false;
    std::uint64_t particular = 0;
    std::vector<std::uint64_t> kernel;
};

AffineSolution solve(std::vector<std::uint64_t> rows, std::uint64_t rhs, std::size_t d) {
    const std::size_t n_rows = rows.size();
    std::vector<int> rhs_bits(n_rows);
    for (std::size_t i = 0; i < n_rows; ++i) rhs_bits[i] = static_cast<int>((rhs >> i) & 1u);

    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < n_rows; ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t p = rank;
        while (p < n_rows && !(rows[p] & bit)) ++p;
        if (p == n_rows) continue;
        std::swap(rows[p], rows[rank]);
        std::swap(rhs_bits[p], rhs_bits[rank]);
        for (std::size_t i = 0; i < n_rows; ++i)
            if (i != rank && (rows[i] & bit)) {
                rows[i] ^= rows[rank];
                rhs_bits[i] ^= rhs_bits[rank];
            }
        pivots.push_back(col);
        ++rank;
    }

    AffineSolution out;
    for (std::size_t i = rank; i < n_rows; ++i)
        if (rhs_bits[i]) return out;
    out.consistent = true;
    for (std::size_t i = 0; i < rank; ++i)
        if (rhs_bits[i]) out.particular |= std::uint64_t{1} << pivots[i];

    std::vector<bool> is_pivot(d, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < d; ++f) {
        if (is_pivot[f]) continue;
        std::uint64_t v = std::uint64_t{1} << f;
        for (std::size_t i = 0; i < rank; ++i)
            if (rows[i] & (std::uint64_t{1} << f)) v |= std::uint64_t{1} << pivots[i];
        out.kernel.push_back(v);
    }
    return out;
}

// Every element of x0 + span(basis), in Gray-code order.
template <class Visit>
void for_each_in_coset(std::uint64_t x0, const std::vector<std::uint64_t>& basis, Visit&& visit) {
    std::uint64_t x = x0;
    visit(x);
    const std::uint64_t count = std::uint64_t{1} << basis.size();
    for (std::uint64_t i = 1; i < count; ++i) {
        x ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        visit(x);
    }
}

bool is_involution_key(const std::vector<Field::Element>& a, std::size_t m, const Field& f) {
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Field::Element s = 0;
            for (std::size_t k = 0; k < m; ++k) s ^= f.mul(a[i * m + k], a[k * m + j]);
            if (s != (i == j ? 1u : 0u)) return false;
        }
    return true;
}

}  // namespace

AffineGroupSpec::AffineGroupSpec(unsigned r, std::size_t m) : r_(r), m_(m), field_(Field::get(r)) {
    if (m < 1) throw PreconditionError("AffineGroupSpec: m must be at least 1");
    if (bits() > kMaxPointBits)
        throw ResourceError("AffineGroupSpec: |Omega| = 2^" + std::to_string(bits()) + " exceeds the 2^20 limit");
}

// ---------------------------------------------------------------------------

GroupElement::GroupElement(PointIndex t, FqMatrix h) : t_(t), h_(std::move(h)), rows_(flatten_rows(h_)) {
    if (rows_.size() < 64 && (t_ >> rows_.size()) != 0)
        throw std::out_of_range("GroupElement: translation outside T");
}

GroupElement GroupElement::identity(const AffineGroupSpec& spec) {
    return GroupElement(0, FqMatrix::identity(spec.field(), spec.m()));
}

GroupElement GroupElement::inverse() const {
    FqMatrix hinv = h_.inverse();
    const PointIndex t = apply_rows(flatten_rows(hinv), t_);
    return GroupElement(t, std::move(hinv));
}

std::vector<std::size_t> GroupElement::permutation() const {
    const std::size_t n = std::size_t{1} << rows_.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t x = 0; x < n; ++x) perm[x] = static_cast<std::size_t>(act(x));
    return perm;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement(a.t_ ^ apply_rows(a.rows_, b.t_), a.h_ * b.h_);
}

// ---------------------------------------------------------------------------

std::uint64_t sl_order(std::size_t m, std::uint64_t q) {
    if (m < 1) throw std::invalid_argument("sl_order: m must be at least 1");
    unsigned __int128 order = 1;
    for (std::size_t i = 0; i < m * (m - 1) / 2; ++i) order *= q;
    for (std::size_t i = 2; i <= m; ++i) {
        unsigned __int128 qi = 1;
        for (std::size_t k = 0; k < i; ++k) qi *= q;
        order *= qi - 1;
    }
    if (order >> 64) throw std::overflow_error("sl_order: order exceeds 64 bits");
    return static_cast<std::uint64_t>(order);
}

std::vector<FqMatrix> scan_involutions_H(const AffineGroupSpec& spec, const Options& opts) {
    const std::size_t space_bits = spec.matrix_space_bits();
    if (space_bits > opts.scan_cap_bits || space_bits > 40)
        throw ResourceError("scan_involutions_H: matrix space has 2^" + std::to_string(space_bits) +
                            " elements, scan cap is 2^" + std::to_string(opts.scan_cap_bits) +
                            " (raise --scan-cap to at least " + std::to_string(space_bits) + ")");
    const std::size_t m = spec.m();
    const unsigned r = spec.r();
    const Field& f = *spec.field();
    const std::uint64_t total = std::uint64_t{1} << space_bits;
    const std::uint64_t mask = f.order() - 1;
    const unsigned workers = std::max(1u, opts.workers);

    std::vector<std::vector<std::uint64_t>> found(workers);
    parallel_chunks(total, workers, std::size_t{1} << 16, [&](unsigned w, std::size_t begin, std::size_t end) {
        std::vector<Field::Element> a(m * m);
        for (std::uint64_t key = begin; key < end; ++key) {
            for (std::size_t e = 0; e < m * m; ++e) a[e] = static_cast<Field::Element>((key >> (r * e)) & mask);
            if (!is_involution_key(a, m, f)) continue;
            FqMatrix h(spec.field(), m, a);
            if (h.is_identity() || h.det() != 1) continue;
            found[w].push_back(key);
        }
    });

    std::vector<std::uint64_t> keys;
    for (auto& part : found) keys.insert(keys.end(), part.begin(), part.end());
    std::sort(keys.begin(), keys.end());
    std::vector<FqMatrix> out;
    out.reserve(keys.size());
    for (auto k : keys) out.push_back(FqMatrix::from_key(spec.field(), m, k));
    return out;
}

// ---------------------------------------------------------------------------

std::vector<PointIndex> fixed_space_basis(const FqMatrix& h) {
    const auto rows = flatten_rows(h.add_identity());
    return solve(rows, 0, rows.size()).kernel;
}

std::size_t fixed_space_dim(const FqMatrix& h) { return fixed_space_basis(h).size(); }

InvolutionSet involutions_G(const AffineGroupSpec& spec, const std::vector<FqMatrix>& involutions_h) {
    InvolutionSet out;
    out.provenance = InvolutionSet::Provenance::structural;
    const FqMatrix id = FqMatrix::identity(spec.field(), spec.m());
    for (PointIndex t = 1; t < spec.n(); ++t) out.elements.emplace_back(t, id);
    // (t,h)^2 = (t + h t, h^2): an involution iff h^2 = I and (I+h) t = 0.
    for (const auto& h : involutions_h) {
        const auto kernel = fixed_space_basis(h);
        for_each_in_coset(0, kernel, [&](std::uint64_t t) { out.elements.emplace_back(t, h); });
    }
    return out;
}

InvolutionSet involutions_G(const AffineGroupSpec& spec, const Options& opts) {
    return involutions_G(spec, scan_involutions_H(spec, opts));
}

BitVector fix_set(const GroupElement& g, const AffineGroupSpec& spec) {
    const std::size_t d = spec.bits();
    const FqMatrix& h = g.linear();
    const auto a = flatten_rows(h.add_identity());
    if (h.square().is_identity()) {
        // (I+h)^2 = I + h^2 = 0, so Im(I+h) ⊆ ker(I+h).
        for (std::size_t b = 0; b < d; ++b)
            if (apply_rows(a, apply_rows(a, std::uint64_t{1} << b)) != 0)
                throw std::logic_error("fix_set: Im(I+h) not contained in ker(I+h) for an involution");
    }
    BitVector indicator(spec.n());
    const auto sol = solve(a, g.translation(), d);
    if (!sol.consistent) return indicator;
    for_each_in_coset(sol.particular, sol.kernel, [&](std::uint64_t x) { indicator.set(static_cast<std::size_t>(x)); });
    return indicator;
}

GroupElement random_element(const AffineGroupSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t m = spec.m();
    const auto q = spec.q();
    FqMatrix h = FqMatrix::identity(spec.field(), m);
    if (m >= 2) {
        std::uniform_int_distribution<std::size_t> idx(0, m - 1);
        std::uniform_int_distribution<std::uint32_t> scalar(1, q - 1);
        const std::size_t factors = 4 * m * m;
        for (std::size_t k = 0; k < factors; ++k) {
            const std::size_t i = idx(rng);
            std::size_t j = idx(rng);
            while (j == i) j = idx(rng);
            FqMatrix e = FqMatrix::identity(spec.field(), m);
            e.set(i, j, scalar(rng));
            h = e * h;
        }
    }
    std::uniform_int_distribution<std::uint64_t> point(0, spec.n() - 1);
    return GroupElement(point(rng), std::move(h));
}

std::vector<GroupElement> generators(const AffineGroupSpec& spec) {
    std::vector<GroupElement> gens;
    const FqMatrix id = FqMatrix::identity(spec.field(), spec.m());
    for (std::size_t b = 0; b < spec.bits(); ++b) gens.emplace_back(PointIndex{1} << b, id);
    for (std::size_t i = 0; i < spec.m(); ++i)
        for (std::size_t j = 0; j < spec.m(); ++j) {
            if (i == j) continue;
            for (unsigned b = 0; b < spec.r(); ++b) {
                FqMatrix e = id;
                e.set(i, j, Field::Element{1} << b);
                gens.emplace_back(0, std::move(e));
            }
        }
    return gens;
}

}  // namespace fixcode
