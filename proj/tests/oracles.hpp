#pragma once

// Brute-force reference computations used only by the tests. None of these
// go through rref, IncrementalBasis, or the Gray-code enumerator.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixcode/code.hpp"
#include "fixcode/gf2.hpp"
#include "fixcode/group.hpp"

namespace oracle {

using fixcode::BitVector;

/// Every GF(2) combination of `gens` (2^|gens| of them, with repeats).
inline std::set<std::string> span_by_enumeration(const std::vector<BitVector>& gens, std::size_t n) {
    std::set<std::string> out;
    const std::uint64_t count = std::uint64_t{1} << gens.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::string v(n, '0');
        for (std::size_t i = 0; i < gens.size(); ++i)
            if ((mask >> i) & 1u)
                for (std::size_t j = 0; j < n; ++j)
                    if (gens[i].test(j)) v[j] = v[j] == '0' ? '1' : '0';
        out.insert(v);
    }
    return out;
}

/// Rank as log2 of the span size.
inline std::size_t rank_by_enumeration(const std::vector<BitVector>& gens, std::size_t n) {
    const auto span = span_by_enumeration(gens, n);
    std::size_t r = 0;
    while ((std::size_t{1} << r) < span.size()) ++r;
    return r;
}

/// counts[w] by iterating over all messages directly (no Gray code).
inline std::vector<std::uint64_t> weight_counts(const fixcode::LinearCode& c) {
    const auto& rows = c.generators().rows();
    std::vector<std::uint64_t> counts(c.n() + 1, 0);
    const std::uint64_t total = std::uint64_t{1} << rows.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        BitVector v(c.n());
        for (std::size_t i = 0; i < rows.size(); ++i)
            if ((mask >> i) & 1u) v ^= rows[i];
        ++counts[v.weight()];
    }
    return counts;
}

inline BitVector random_vector(std::mt19937_64& rng, std::size_t n, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (bit(rng)) v.set(i);
    return v;
}

inline fixcode::BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    fixcode::BitMatrix m(cols);
    for (std::size_t i = 0; i < rows; ++i) m.push_back(random_vector(rng, cols));
    return m;
}

inline fixcode::LinearCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(random_vector(rng, n));
    return fixcode::make_code(rows, n);
}

/// Fixed-set span built without involutions_G or fix_set: every pair
/// (t, h) with det h = 1 is squared, and fixed points are found by acting.
struct BruteForceSpan {
    std::size_t involutions = 0;
    fixcode::LinearCode span;
};

inline BruteForceSpan brute_force_span(const fixcode::AffineGroupSpec& spec) {
    using namespace fixcode;
    BruteForceSpan out;
    std::vector<BitVector> sets;
    const std::uint64_t space = std::uint64_t{1} << spec.matrix_space_bits();
    for (std::uint64_t key = 0; key < space; ++key) {
        const auto h = FqMatrix::from_key(spec.field(), spec.m(), key);
        if (h.det() != 1) continue;
        for (PointIndex t = 0; t < spec.n(); ++t) {
            const GroupElement g(t, h);
            if (g.is_identity() || !(g * g).is_identity()) continue;
            ++out.involutions;
            BitVector v(spec.n());
            for (PointIndex x = 0; x < spec.n(); ++x)
                if (g.act(x) == x) v.set(x);
            sets.push_back(v);
        }
    }
    out.span = make_code(sets, spec.n());
    return out;
}

}  // namespace oracle
