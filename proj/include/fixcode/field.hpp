#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fixcode/gf2.hpp"

namespace fixcode {

/// GF(2^r) in polynomial basis: an element is an r-bit mask whose bit i is
/// the coefficient of x^i. Fixed primitive moduli per degree.
class Field {
public:
    using Element = std::uint32_t;

    /// 1 <= r <= 8.
    explicit Field(unsigned r);

    /// Shared instance per degree.
    static std::shared_ptr<const Field> get(unsigned r);
    /// Fixed modulus for degree r, including the x^r term.
    static std::uint32_t default_modulus(unsigned r);

    [[nodiscard]] unsigned degree() const { return r_; }
    [[nodiscard]] std::uint32_t order() const { return q_; }
    [[nodiscard]] std::uint32_t modulus() const { return modulus_; }

    [[nodiscard]] static Element add(Element a, Element b) { return a ^ b; }
    [[nodiscard]] Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
    [[nodiscard]] Element inv(Element a) const;
    [[nodiscard]] Element pow(Element a, std::uint64_t e) const;
    /// Shift-and-reduce product, independent of the tables.
    [[nodiscard]] Element mul_slow(Element a, Element b) const;

private:
    unsigned r_;
    std::uint32_t q_;
    std::uint32_t modulus_;
    std::vector<Element> exp_;  // exp_[i] = x^i, doubled to skip a mod
    std::vector<int> log_;
    std::vector<Element> mul_;  // q*q product table
};

using FieldPtr = std::shared_ptr<const Field>;

/// Square matrix over GF(2^r), row-major.
class FqMatrix {
public:
    using Element = Field::Element;

    FqMatrix(FieldPtr field, std::size_t m);
    FqMatrix(FieldPtr field, std::size_t m, std::vector<Element> entries);

    static FqMatrix identity(FieldPtr field, std::size_t m);
    /// Decodes the row-major packing produced by key().
    static FqMatrix from_key(FieldPtr field, std::size_t m, std::uint64_t key);

    [[nodiscard]] std::size_t size() const { return m_; }
    [[nodiscard]] const Field& field() const { return *field_; }
    [[nodiscard]] const FieldPtr& field_ptr() const { return field_; }
    [[nodiscard]] Element operator()(std::size_t i, std::size_t j) const { return a_[i * m_ + j]; }
    void set(std::size_t i, std::size_t j, Element v);
    [[nodiscard]] std::span<const Element> entries() const { return a_; }

    [[nodiscard]] FqMatrix square() const { return *this * *this; }
    [[nodiscard]] Element det() const;
    /// Throws std::domain_error if singular.
    [[nodiscard]] FqMatrix inverse() const;
    /// I + A (which is also I - A in characteristic 2).
    [[nodiscard]] FqMatrix add_identity() const;
    [[nodiscard]] bool is_identity() const;
    /// Entries packed row-major, r bits each, entry (0,0) least significant.
    /// Requires r*m*m <= 64.
    [[nodiscard]] std::uint64_t key() const;
    /// Row-major entries, ceil(r/4) hex digits each, rows separated by '/'.
    [[nodiscard]] std::string to_hex() const;
    /// y = A x for x in GF(2^r)^m.
    [[nodiscard]] std::vector<Element> apply(std::span<const Element> x) const;

    friend FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
    friend FqMatrix operator+(const FqMatrix& a, const FqMatrix& b);
    friend bool operator==(const FqMatrix& a, const FqMatrix& b);
    friend bool operator<(const FqMatrix& a, const FqMatrix& b);

private:
    FieldPtr field_;
    std::size_t m_;
    std::vector<Element> a_;
};

/// The GF(2)-matrix (rm x rm) of x -> h x, with GF(2)-coordinate r*j + b
/// holding the coefficient of x^b in component j.
[[nodiscard]] BitMatrix flatten(const FqMatrix& h);

/// Same map as bitmask rows (requires r*m <= 64): bit c of rows[i] is
/// flatten(h)(i, c). Fast path for acting on point indices.
[[nodiscard]] std::vector<std::uint64_t> flatten_rows(const FqMatrix& h);

/// Applies a flattened map given by bitmask rows to a packed point.
[[nodiscard]] inline std::uint64_t apply_rows(std::span<const std::uint64_t> rows, std::uint64_t x) {
    std::uint64_t y = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) y |= std::uint64_t(std::popcount(rows[i] & x) & 1) << i;
    return y;
}

using PointIndex = std::uint64_t;

/// index = sum_j value(v_j) * 2^(r*j).
[[nodiscard]] PointIndex point_index(const Field& field, std::span<const Field::Element> v);
/// Inverse of point_index for a vector of length m; throws std::out_of_range.
[[nodiscard]] std::vector<Field::Element> point_unindex(const Field& field, std::size_t m, PointIndex index);

}  // namespace fixcode
