#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fixcode/code.hpp"

namespace fixcode {

[[nodiscard]] bool is_prime(std::uint64_t p);

/// Sorted nonzero squares mod p. Throws PreconditionError unless p is an odd prime.
[[nodiscard]] std::vector<std::uint64_t> quadratic_residues(std::uint64_t p);

/// Extended binary quadratic residue code of length p + 1 (p ≡ -1 mod 8),
/// parity coordinate last. Built from the cyclic shifts of the residue
/// indicator, falling back to the non-residue indicator; the result is
/// checked to be a doubly even self-dual [p+1, (p+1)/2] code.
[[nodiscard]] LinearCode extended_qr(std::uint64_t p);

/// RM(order, m): evaluation vectors of all monomials of degree <= order,
/// points ordered by point_index over GF(2)^m (bit j of the index is x_j).
[[nodiscard]] LinearCode reed_muller(std::size_t order, std::size_t m);

/// Monomials of degree <= order as variable-index sets, graded then lex.
[[nodiscard]] std::vector<std::vector<std::size_t>> rm_monomials(std::size_t order, std::size_t m);

}  // namespace fixcode
