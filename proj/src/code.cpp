#include "fixcode/code.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "fixcode/parallel.hpp"

namespace fixcode {

namespace {

using Word = BitVector::Word;

// Rows of a generator matrix copied into one contiguous block.
struct PackedRows {
    std::size_t k = 0;
    std::size_t nw = 0;
    std::vector<Word> data;

    [[nodiscard]] const Word* row(std::size_t i) const { return data.data() + i * nw; }
};

PackedRows pack(const std::vector<BitVector>& rows, std::size_t n) {
    PackedRows p;
    p.k = rows.size();
    p.nw = BitVector::word_count(n);
    p.data.reserve(p.k * p.nw);
    for (const auto& r : rows) p.data.insert(p.data.end(), r.words().begin(), r.words().end());
    return p;
}

inline void xor_into(Word* acc, const Word* row, std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i) acc[i] ^= row[i];
}

inline std::size_t popcount(const Word* v, std::size_t nw) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < nw; ++i) w += static_cast<std::size_t>(std::popcount(v[i]));
    return w;
}

// ---------------------------------------------------------------------------
// Brouwer-Zimmermann

struct InformationMatrix {
    PackedRows rows;
    std::size_t deficit = 0;  // k minus the rank on this information set
};

// Gaussian elimination that picks pivots in the given column order. Returns
// the reduced rows and the pivot columns.
std::pair<std::vector<BitVector>, std::vector<std::size_t>> systematic(const BitMatrix& g,
                                                                       const std::vector<std::size_t>& order) {
    std::vector<BitVector> rows = g.rows();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (auto col : order) {
        if (rank == rows.size()) break;
        std::size_t p = rank;
        while (p < rows.size() && !rows[p].test(col)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && rows[i].test(col)) rows[i] ^= rows[rank];
        pivots.push_back(col);
        ++rank;
    }
    return {std::move(rows), std::move(pivots)};
}

// Greedy disjoint information sets; later ones may be rank-deficient.
std::vector<InformationMatrix> information_matrices(const LinearCode& c) {
    const std::size_t n = c.n();
    const std::size_t k = c.k();
    std::vector<bool> used(n, false);
    std::vector<InformationMatrix> out;
    for (;;) {
        std::vector<std::size_t> order;
        for (std::size_t j = 0; j < n; ++j)
            if (!used[j]) order.push_back(j);
        if (order.empty()) break;
        for (std::size_t j = 0; j < n; ++j)
            if (used[j]) order.push_back(j);
        auto [rows, pivots] = systematic(c.generators(), order);
        std::size_t rank_here = 0;
        for (auto p : pivots)
            if (!used[p]) ++rank_here;
        if (rank_here == 0) break;
        for (auto p : pivots) used[p] = true;
        out.push_back({pack(rows, n), k - rank_here});
    }
    return out;
}

// Minimum weight over all combinations of exactly `w` rows.
std::size_t min_over_combinations(const PackedRows& g, std::size_t w, unsigned workers) {
    const std::size_t k = g.k;
    const std::size_t nw = g.nw;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::mutex best_mutex;
    if (w == 0 || w > k) return best;

    // Chunk on the first chosen row.
    parallel_chunks(k - w + 1, workers, 1, [&](unsigned, std::size_t begin, std::size_t end) {
        std::vector<Word> stack((w + 1) * nw, 0);
        std::vector<std::size_t> idx(w);
        std::size_t local = std::numeric_limits<std::size_t>::max();
        for (std::size_t first = begin; first < end; ++first) {
            // Iterative combination walk with idx[0] = first fixed.
            std::fill(stack.begin(), stack.begin() + nw, 0);
            Word* level1 = stack.data() + nw;
            std::copy(g.row(first), g.row(first) + nw, level1);
            if (w == 1) {
                local = std::min(local, popcount(level1, nw));
                continue;
            }
            idx[0] = first;
            std::size_t depth = 1;
            idx[1] = first;
            for (;;) {
                ++idx[depth];
                if (idx[depth] > k - (w - depth)) {
                    if (--depth == 0) break;
                    continue;
                }
                Word* prev = stack.data() + depth * nw;
                Word* cur = stack.data() + (depth + 1) * nw;
                for (std::size_t i = 0; i < nw; ++i) cur[i] = prev[i] ^ g.row(idx[depth])[i];
                if (depth + 1 == w) {
                    local = std::min(local, popcount(cur, nw));
                } else {
                    ++depth;
                    idx[depth] = idx[depth - 1];
                }
            }
        }
        std::lock_guard lock(best_mutex);
        best = std::min(best, local);
    });
    return best;
}

std::size_t min_weight_bz(const LinearCode& c, const Options& opts) {
    const std::size_t k = c.k();
    const auto mats = information_matrices(c);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    auto contribution = [](std::size_t w, std::size_t deficit) -> std::size_t { return w > deficit ? w - deficit : 0; };
    for (std::size_t w = 1; w <= k; ++w) {
        if (w > opts.bz_weight_ceiling)
            throw ResourceError("min_weight(bz): information weight " + std::to_string(w) + " exceeds the ceiling " +
                                std::to_string(opts.bz_weight_ceiling));
        for (std::size_t j = 0; j < mats.size(); ++j) {
            best = std::min(best, min_over_combinations(mats[j].rows, w, opts.workers));
            // Matrices 0..j are done through weight w, the rest through w-1;
            // any codeword not yet seen weighs at least this much.
            std::size_t lower = 0;
            for (std::size_t i = 0; i < mats.size(); ++i)
                lower += contribution(i <= j ? w + 1 : w, mats[i].deficit);
            if (best <= lower) return best;
        }
    }
    return best;  // every message of weight <= k was enumerated
}

}  // namespace

// ---------------------------------------------------------------------------

LinearCode make_code(std::span<const BitVector> rows, std::size_t n) { return LinearCode(span_basis(rows, n)); }

LinearCode dual(const LinearCode& c) {
    return make_code(nullspace_basis(c.generators()));
}

bool is_self_orthogonal(const LinearCode& c) {
    const auto& rows = c.generators().rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (dot(rows[i], rows[j])) return false;
    return true;
}

bool is_self_dual(const LinearCode& c) { return 2 * c.k() == c.n() && is_self_orthogonal(c); }

bool is_doubly_even(const LinearCode& c) {
    for (const auto& r : c.generators().rows())
        if (r.weight() % 4 != 0) return false;
    // wt(u+v) = wt(u) + wt(v) - 2|u ∩ v|, so with generator weights ≡ 0 (mod 4)
    // closure needs every |u ∩ v| even.
    return is_self_orthogonal(c);
}

std::uint64_t WeightEnumerator::total() const {
    std::uint64_t s = 0;
    for (auto x : counts) s += x;
    return s;
}

std::size_t WeightEnumerator::min_weight() const {
    for (std::size_t w = 1; w < counts.size(); ++w)
        if (counts[w]) return w;
    return 0;
}

WeightEnumerator weight_enumerator(const LinearCode& c, const Options& opts) {
    const std::size_t k = c.k();
    if (k > opts.exhaustive_limit)
        throw ResourceError("weight_enumerator: dimension " + std::to_string(k) + " exceeds the exhaustive limit " +
                            std::to_string(opts.exhaustive_limit));
    const PackedRows g = pack(c.generators().rows(), c.n());
    const std::size_t nw = g.nw;
    const std::size_t high = std::min<std::size_t>(k, 8);
    const std::size_t low = k - high;
    const unsigned workers = std::max(1u, opts.workers);

    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(c.n() + 1, 0));
    parallel_chunks(std::size_t{1} << high, workers, 1, [&](unsigned w, std::size_t begin, std::size_t end) {
        auto& counts = partial[w];
        std::vector<Word> acc(nw);
        for (std::size_t prefix = begin; prefix < end; ++prefix) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t b = 0; b < high; ++b)
                if ((prefix >> b) & 1u) xor_into(acc.data(), g.row(low + b), nw);
            ++counts[popcount(acc.data(), nw)];
            const std::uint64_t steps = std::uint64_t{1} << low;
            for (std::uint64_t i = 1; i < steps; ++i) {
                xor_into(acc.data(), g.row(static_cast<std::size_t>(std::countr_zero(i))), nw);
                ++counts[popcount(acc.data(), nw)];
            }
        }
    });

    WeightEnumerator we{std::vector<std::uint64_t>(c.n() + 1, 0)};
    for (const auto& p : partial)
        for (std::size_t i = 0; i < p.size(); ++i) we.counts[i] += p[i];
    return we;
}

std::size_t min_weight(const LinearCode& c, MinWeightMethod method, const Options& opts) {
    if (c.k() == 0) throw PreconditionError("min_weight: the zero code has no minimum weight");
    if (method == MinWeightMethod::automatic)
        method = c.k() <= opts.exhaustive_limit ? MinWeightMethod::exhaustive : MinWeightMethod::bz;
    if (method == MinWeightMethod::exhaustive) return weight_enumerator(c, opts).min_weight();
    return min_weight_bz(c, opts);
}

std::size_t extremal_bound(std::size_t n) {
    if (n % 8 != 0) throw PreconditionError("extremal_bound: n = " + std::to_string(n) + " is not a multiple of 8");
    return 4 * (n / 24) + 4;
}

bool is_extremal(const LinearCode& c, const Options& opts) {
    if (!is_self_dual(c) || !is_doubly_even(c))
        throw PreconditionError("is_extremal: code is not doubly even self-dual");
    return min_weight(c, MinWeightMethod::automatic, opts) == extremal_bound(c.n());
}

BitVector permute(const BitVector& v, std::span<const std::size_t> perm) {
    if (perm.size() != v.size()) throw std::invalid_argument("permute: permutation length mismatch");
    BitVector out(v.size());
    for (auto i : v.support()) out.set(perm[i]);
    return out;
}

bool is_invariant_under(const LinearCode& c, std::span<const std::size_t> perm) {
    const std::size_t n = c.n();
    if (perm.size() != n) throw std::invalid_argument("is_invariant_under: permutation length mismatch");
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) throw std::invalid_argument("is_invariant_under: not a permutation");
        seen[p] = true;
    }
    std::vector<BitVector> moved;
    moved.reserve(c.k());
    for (const auto& r : c.generators().rows()) moved.push_back(permute(r, perm));
    return make_code(moved, n) == c;
}

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
    const std::size_t n = a.n() + b.n();
    std::vector<BitVector> rows;
    for (const auto& r : a.generators().rows()) {
        BitVector v(n);
        for (auto i : r.support()) v.set(i);
        rows.push_back(std::move(v));
    }
    for (const auto& r : b.generators().rows()) {
        BitVector v(n);
        for (auto i : r.support()) v.set(a.n() + i);
        rows.push_back(std::move(v));
    }
    return make_code(rows, n);
}

// ---------------------------------------------------------------------------

void write_code(std::ostream& out, const LinearCode& c) {
    out << "fixcode-v1 n=" << c.n() << " k=" << c.k() << '\n';
    for (const auto& r : c.generators().rows()) out << r.to_string() << '\n';
}

std::string to_code_file(const LinearCode& c) {
    std::ostringstream s;
    write_code(s, c);
    return s.str();
}

LinearCode read_code(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("read_code: empty input");
    std::size_t n = 0;
    std::size_t k = 0;
    {
        std::istringstream h(header);
        std::string magic, nf, kf;
        if (!(h >> magic >> nf >> kf) || magic != "fixcode-v1" || nf.rfind("n=", 0) != 0 || kf.rfind("k=", 0) != 0)
            throw std::runtime_error("read_code: bad header '" + header + "'");
        std::string extra;
        if (h >> extra) throw std::runtime_error("read_code: trailing header fields");
        try {
            n = std::stoul(nf.substr(2));
            k = std::stoul(kf.substr(2));
        } catch (const std::exception&) {
            throw std::runtime_error("read_code: bad header '" + header + "'");
        }
    }
    if (k > n) throw std::runtime_error("read_code: k exceeds n");
    std::vector<BitVector> rows;
    std::string line;
    for (std::size_t i = 0; i < k; ++i) {
        if (!std::getline(in, line)) throw std::runtime_error("read_code: expected " + std::to_string(k) + " rows");
        if (line.size() != n) throw std::runtime_error("read_code: row " + std::to_string(i) + " has wrong length");
        try {
            rows.push_back(BitVector::from_string(line));
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("read_code: row " + std::to_string(i) + " is not binary");
        }
    }
    if (std::getline(in, line)) throw std::runtime_error("read_code: trailing content after generator rows");
    LinearCode c = make_code(rows, n);
    if (c.k() != k) throw std::runtime_error("read_code: generator rows are linearly dependent");
    return c;
}

void save_code(const std::string& path, const LinearCode& c) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("save_code: cannot open " + path);
    write_code(f, c);
}

LinearCode load_code(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("load_code: cannot open " + path);
    return read_code(f);
}

}  // namespace fixcode
