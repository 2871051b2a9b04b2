#include <algorithm>

#include "doctest.h"
#include "fixcode/classical.hpp"
#include "fixcode/field.hpp"

using namespace fixcode;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t b = 1;
    for (std::size_t i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

}  // namespace

TEST_CASE("quadratic residues") {
    CHECK(quadratic_residues(7) == std::vector<std::uint64_t>{1, 2, 4});
    CHECK(quadratic_residues(23) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18});
    for (std::uint64_t p : {7, 23, 31, 47, 71, 79, 103}) {
        const auto qr = quadratic_residues(p);
        CHECK(qr.size() == (p - 1) / 2);
        CHECK_FALSE(std::binary_search(qr.begin(), qr.end(), p - 1));  // -1 is a non-residue
        CHECK(std::binary_search(qr.begin(), qr.end(), 2));            // 2 is a residue for p = -1 mod 8
    }
    CHECK_THROWS_AS((void)quadratic_residues(9), PreconditionError);
    CHECK(is_prime(103));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("extended QR codes") {
    struct Case {
        std::uint64_t p;
        std::size_t d;
    };
    for (const auto& [p, d] : {Case{7, 4}, Case{23, 8}, Case{31, 8}}) {
        const auto c = extended_qr(p);
        CHECK(c.n() == p + 1);
        CHECK(c.k() == (p + 1) / 2);
        CHECK(is_self_dual(c));
        CHECK(is_doubly_even(c));
        CHECK(min_weight(c, MinWeightMethod::exhaustive) == d);
        // Parity coordinate: every generator has even weight.
        for (const auto& row : c.generators().rows()) CHECK(row.weight() % 2 == 0);
    }
    for (std::uint64_t p : {47, 71, 79, 103}) {
        const auto c = extended_qr(p);
        CHECK(c.k() == (p + 1) / 2);
        CHECK(is_self_dual(c));
        CHECK(is_doubly_even(c));
    }
    CHECK_THROWS_AS((void)extended_qr(200), PreconditionError);
    CHECK_THROWS_AS((void)extended_qr(17), PreconditionError);
    CHECK_THROWS_AS((void)extended_qr(13), PreconditionError);
}

TEST_CASE("extended QR codes are invariant under translation of the cyclic part") {
    const std::uint64_t p = 23;
    const auto c = extended_qr(p);
    std::vector<std::size_t> shift(p + 1);
    for (std::size_t i = 0; i < p; ++i) shift[i] = (i + 1) % p;
    shift[p] = p;
    CHECK(is_invariant_under(c, shift));
}

TEST_CASE("Reed-Muller monomial order") {
    const auto mons = rm_monomials(2, 3);
    const std::vector<std::vector<std::size_t>> expected{{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
    CHECK(mons == expected);
}

TEST_CASE("Reed-Muller examples") {
    const auto rep = reed_muller(0, 3);
    CHECK(rep.k() == 1);
    CHECK(rep.generators().row(0).weight() == 8);
    const auto rm13 = reed_muller(1, 3);
    CHECK(rm13.k() == 4);
    CHECK(min_weight(rm13) == 4);
    const auto rm25 = reed_muller(2, 5);
    CHECK(rm25.n() == 32);
    CHECK(rm25.k() == 16);
    CHECK(min_weight(rm25) == 8);
    CHECK(is_self_dual(rm25));
    CHECK(is_doubly_even(rm25));
}

TEST_CASE("Reed-Muller coordinates follow point_index") {
    const auto f2 = Field::get(1);
    const std::size_t m = 4;
    const auto mons = rm_monomials(1, m);
    // Build RM(1,4) directly from evaluations and compare.
    std::vector<BitVector> rows;
    for (const auto& mon : mons) {
        BitVector v(16);
        for (PointIndex x = 0; x < 16; ++x) {
            const auto pt = point_unindex(*f2, m, x);
            bool value = true;
            for (const auto j : mon) value = value && pt[j] == 1;
            if (value) v.set(x);
        }
        rows.push_back(v);
    }
    CHECK(make_code(rows, 16) == reed_muller(1, m));
}

TEST_CASE("Reed-Muller duality and dimension for m <= 5") {
    for (std::size_t m = 1; m <= 5; ++m) {
        for (std::size_t r = 0; r <= m; ++r) {
            std::size_t dim = 0;
            for (std::size_t i = 0; i <= r; ++i) dim += binomial(m, i);
            const auto c = reed_muller(r, m);
            CHECK(c.k() == dim);
            if (r < m) {
                CHECK(dual(c) == reed_muller(m - r - 1, m));
                CHECK(min_weight(c) == (std::size_t{1} << (m - r)));
            }
        }
    }
    CHECK_THROWS_AS((void)reed_muller(4, 3), PreconditionError);
}
