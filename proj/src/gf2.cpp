#include "fixcode/gf2.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace fixcode {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": length mismatch (" + std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
}

// Lowest set coordinate of v at or after `from`, or v.size().
std::size_t next_set(const BitVector& v, std::size_t from) {
    const auto w = v.words();
    std::size_t wi = from / BitVector::kWordBits;
    if (wi >= w.size()) return v.size();
    BitVector::Word cur = w[wi] & (~BitVector::Word{0} << (from % BitVector::kWordBits));
    for (;;) {
        if (cur != 0) return wi * BitVector::kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
        if (++wi == w.size()) return v.size();
        cur = w[wi];
    }
}

}  // namespace

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw std::invalid_argument("BitVector::from_string: expected '0' or '1'");
    }
    return v;
}

BitVector BitVector::from_indices(std::size_t length, std::span<const std::size_t> ones) {
    BitVector v(length);
    for (auto i : ones) {
        if (i >= length) throw std::out_of_range("BitVector::from_indices: index out of range");
        v.set(i);
    }
    return v;
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](Word x) { return x == 0; });
}

std::size_t BitVector::lowest_set() const { return next_set(*this, 0); }

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = next_set(*this, 0); i < length_; i = next_set(*this, i + 1)) out.push_back(i);
    return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    require_same_length(length_, other.length_, "BitVector xor");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    require_same_length(length_, other.length_, "BitVector and");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (test(i)) s[i] = '1';
    return s;
}

std::size_t intersection_size(const BitVector& a, const BitVector& b) {
    require_same_length(a.size(), b.size(), "intersection_size");
    const auto wa = a.words();
    const auto wb = b.words();
    std::size_t n = 0;
    for (std::size_t i = 0; i < wa.size(); ++i) n += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
    return n;
}

int dot(const BitVector& a, const BitVector& b) { return static_cast<int>(intersection_size(a, b) & 1u); }

// ---------------------------------------------------------------------------

BitMatrix::BitMatrix(std::size_t n_cols, std::vector<BitVector> rows) : n_cols_(n_cols), rows_(std::move(rows)) {
    for (const auto& r : rows_) require_same_length(r.size(), n_cols_, "BitMatrix");
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i);
    return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string_view> rows) {
    if (rows.empty()) return BitMatrix();
    BitMatrix m(rows.front().size());
    for (auto r : rows) m.push_back(BitVector::from_string(r));
    return m;
}

void BitMatrix::push_back(BitVector row) {
    require_same_length(row.size(), n_cols_, "BitMatrix::push_back");
    rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(n_cols_, rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (auto j : rows_[i].support()) t.rows_[j].set(i);
    return t;
}

BitVector BitMatrix::apply(const BitVector& v) const {
    require_same_length(v.size(), n_cols_, "BitMatrix::apply");
    BitVector out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (dot(rows_[i], v)) out.set(i);
    return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    require_same_length(a.n_cols_, b.n_rows(), "BitMatrix product");
    BitMatrix c(a.n_rows(), b.n_cols_);
    for (std::size_t i = 0; i < a.n_rows(); ++i)
        for (auto k : a.rows_[i].support()) c.rows_[i] ^= b.rows_[k];
    return c;
}

// ---------------------------------------------------------------------------

RrefResult rref(const BitMatrix& m) {
    RrefResult out;
    std::vector<BitVector> rows = m.rows();
    const std::size_t n_rows = rows.size();
    for (std::size_t col = 0; col < m.n_cols() && out.rank < n_rows; ++col) {
        std::size_t p = out.rank;
        while (p < n_rows && !rows[p].test(col)) ++p;
        if (p == n_rows) continue;
        std::swap(rows[p], rows[out.rank]);
        const BitVector& pivot_row = rows[out.rank];
        for (std::size_t i = 0; i < n_rows; ++i)
            if (i != out.rank && rows[i].test(col)) rows[i] ^= pivot_row;
        out.pivots.push_back(col);
        ++out.rank;
    }
    out.reduced = BitMatrix(m.n_cols(), std::move(rows));
    return out;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

BitMatrix nullspace_basis(const BitMatrix& m) {
    const auto r = rref(m);
    const std::size_t n = m.n_cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    BitMatrix basis(n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(n);
        v.set(f);
        for (std::size_t i = 0; i < r.rank; ++i)
            if (r.reduced.get(i, f)) v.set(r.pivots[i]);
        basis.push_back(std::move(v));
    }
    return span_basis(basis);
}

BitMatrix span_basis(std::span<const BitVector> vectors, std::size_t length) {
    IncrementalBasis acc(length);
    for (const auto& v : vectors) {
        require_same_length(v.size(), length, "span_basis");
        acc.insert(v);
    }
    return acc.basis();
}

BitMatrix span_basis(const BitMatrix& m) { return span_basis(m.rows(), m.n_cols()); }

bool member(const BitMatrix& basis, const BitVector& v) {
    require_same_length(v.size(), basis.n_cols(), "member");
    BitVector rem = v;
    for (const auto& row : basis.rows()) {
        const std::size_t p = row.lowest_set();
        if (p < rem.size() && rem.test(p)) rem ^= row;
    }
    return rem.is_zero();
}

bool code_equal(const BitMatrix& a, const BitMatrix& b) {
    require_same_length(a.n_cols(), b.n_cols(), "code_equal");
    return span_basis(a) == span_basis(b);
}

// ---------------------------------------------------------------------------

BitVector IncrementalBasis::reduce(BitVector v) const {
    require_same_length(v.size(), length_, "IncrementalBasis");
    // Stored rows have their pivot as lowest bit, so xoring only touches
    // coordinates above the current one.
    for (std::size_t p = next_set(v, 0); p < length_; p = next_set(v, p + 1))
        if (slot_[p] != kNone) v ^= rows_[slot_[p]];
    return v;
}

bool IncrementalBasis::insert(BitVector v) {
    v = reduce(std::move(v));
    const std::size_t p = v.lowest_set();
    if (p >= length_) return false;
    slot_[p] = rows_.size();
    rows_.push_back(std::move(v));
    return true;
}

void IncrementalBasis::merge(const IncrementalBasis& other) {
    require_same_length(other.length_, length_, "IncrementalBasis::merge");
    for (const auto& r : other.rows_) insert(r);
}

BitMatrix IncrementalBasis::basis() const {
    std::vector<BitVector> ordered;
    ordered.reserve(rows_.size());
    for (std::size_t p = 0; p < length_; ++p)
        if (slot_[p] != kNone) ordered.push_back(rows_[slot_[p]]);
    // Back-substitution: clear each pivot column from every other row.
    for (std::size_t i = ordered.size(); i-- > 0;) {
        const std::size_t p = ordered[i].lowest_set();
        for (std::size_t j = 0; j < i; ++j)
            if (ordered[j].test(p)) ordered[j] ^= ordered[i];
    }
    return BitMatrix(length_, std::move(ordered));
}

}  // namespace fixcode
