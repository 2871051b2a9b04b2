#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fixcode {

/// Resource caps and worker count shared by every computation.
struct Options {
    unsigned workers = 1;
    /// log2 of the largest matrix space we are willing to scan.
    unsigned scan_cap_bits = 30;
    /// Largest dimension enumerated exhaustively (2^k codewords).
    unsigned exhaustive_limit = 26;
    /// Largest information weight the Brouwer-Zimmermann search may reach.
    unsigned bz_weight_ceiling = 16;
    std::uint64_t seed = 1;
};

/// A computation would exceed a configured cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-side precondition does not hold (distinct from a failed claim).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace fixcode
