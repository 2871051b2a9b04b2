#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fixcode {

/// Packed vector over GF(2). Coordinate i lives in bit (i % 64) of word
/// (i / 64); bits past `size()` are always zero.
class BitVector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

    static BitVector from_string(std::string_view bits);
    static BitVector from_indices(std::size_t length, std::span<const std::size_t> ones);

    static constexpr std::size_t word_count(std::size_t length) { return (length + kWordBits - 1) / kWordBits; }

    [[nodiscard]] std::size_t size() const { return length_; }
    [[nodiscard]] std::span<const Word> words() const { return words_; }
    [[nodiscard]] std::span<Word> words() { return words_; }

    [[nodiscard]] bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    [[nodiscard]] std::size_t weight() const;
    [[nodiscard]] bool is_zero() const;
    /// Index of the lowest set coordinate, or size() for the zero vector.
    [[nodiscard]] std::size_t lowest_set() const;
    [[nodiscard]] std::vector<std::size_t> support() const;

    BitVector& operator^=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

    friend bool operator==(const BitVector&, const BitVector&) = default;
    /// Orders by length, then by word contents (used for deterministic sets).
    friend bool operator<(const BitVector& a, const BitVector& b) {
        if (a.length_ != b.length_) return a.length_ < b.length_;
        return a.words_ < b.words_;
    }

    /// '0'/'1' characters, coordinate 0 first.
    [[nodiscard]] std::string to_string() const;

private:
    std::size_t length_ = 0;
    std::vector<Word> words_;
};

/// Inner product (X, Y) = |X ∩ Y| mod 2.
[[nodiscard]] int dot(const BitVector& a, const BitVector& b);
/// |X ∩ Y| as an integer.
[[nodiscard]] std::size_t intersection_size(const BitVector& a, const BitVector& b);

class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n_cols) : n_cols_(n_cols) {}
    BitMatrix(std::size_t n_rows, std::size_t n_cols) : n_cols_(n_cols), rows_(n_rows, BitVector(n_cols)) {}
    BitMatrix(std::size_t n_cols, std::vector<BitVector> rows);

    static BitMatrix identity(std::size_t n);
    /// Rows given as '0'/'1' strings of equal length.
    static BitMatrix from_strings(std::span<const std::string_view> rows);

    [[nodiscard]] std::size_t n_rows() const { return rows_.size(); }
    [[nodiscard]] std::size_t n_cols() const { return n_cols_; }
    [[nodiscard]] bool empty() const { return rows_.empty(); }

    [[nodiscard]] const BitVector& row(std::size_t i) const { return rows_[i]; }
    [[nodiscard]] BitVector& row(std::size_t i) { return rows_[i]; }
    [[nodiscard]] const std::vector<BitVector>& rows() const { return rows_; }
    [[nodiscard]] bool get(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
    void set(std::size_t i, std::size_t j, bool value) {
        if (value)
            rows_[i].set(j);
        else
            rows_[i].reset(j);
    }

    void push_back(BitVector row);

    [[nodiscard]] BitMatrix transpose() const;
    /// M·v for a column vector v of length n_cols.
    [[nodiscard]] BitVector apply(const BitVector& v) const;

    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t n_cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RrefResult {
    BitMatrix reduced;  ///< same shape as the input; zero rows at the bottom
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form (unique for the row space).
[[nodiscard]] RrefResult rref(const BitMatrix& m);
[[nodiscard]] std::size_t rank(const BitMatrix& m);

/// RREF basis of {v : M v = 0}.
[[nodiscard]] BitMatrix nullspace_basis(const BitMatrix& m);

/// RREF basis of the span of `vectors`; zero and repeated inputs vanish.
/// Throws std::invalid_argument on mixed lengths.
[[nodiscard]] BitMatrix span_basis(std::span<const BitVector> vectors, std::size_t length);
[[nodiscard]] BitMatrix span_basis(const BitMatrix& m);

/// True iff v lies in the row space of an RREF basis.
[[nodiscard]] bool member(const BitMatrix& basis, const BitVector& v);

/// True iff the row spaces coincide.
[[nodiscard]] bool code_equal(const BitMatrix& a, const BitMatrix& b);

/// Streaming span accumulator. Stored rows have pairwise distinct pivots
/// (lowest set coordinate), which is enough to reduce new vectors in one
/// ascending pass; `basis()` returns the canonical RREF.
class IncrementalBasis {
public:
    explicit IncrementalBasis(std::size_t length) : length_(length), slot_(length, kNone) {}

    /// Returns true if v enlarged the span.
    bool insert(BitVector v);
    /// Reduces v against the stored rows; zero result means v is in the span.
    [[nodiscard]] BitVector reduce(BitVector v) const;
    void merge(const IncrementalBasis& other);

    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    [[nodiscard]] std::size_t length() const { return length_; }
    [[nodiscard]] BitMatrix basis() const;

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::size_t length_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> slot_;  // pivot column -> index into rows_
};

}  // namespace fixcode
