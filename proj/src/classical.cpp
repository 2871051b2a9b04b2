#include "fixcode/classical.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace fixcode {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> quadratic_residues(std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw PreconditionError("quadratic_residues: " + std::to_string(p) + " is not an odd prime");
    std::vector<std::uint64_t> res;
    for (std::uint64_t a = 1; a <= (p - 1) / 2; ++a) res.push_back(a * a % p);
    std::sort(res.begin(), res.end());
    return res;
}

namespace {

LinearCode cyclic_span(const std::vector<bool>& indicator) {
    const std::size_t p = indicator.size();
    std::vector<BitVector> shifts;
    shifts.reserve(p);
    for (std::size_t s = 0; s < p; ++s) {
        BitVector v(p);
        for (std::size_t i = 0; i < p; ++i)
            if (indicator[i]) v.set((i + s) % p);
        shifts.push_back(std::move(v));
    }
    return make_code(shifts, p);
}

}  // namespace

LinearCode extended_qr(std::uint64_t p) {
    if (p % 8 != 7 || !is_prime(p))
        throw PreconditionError("extended_qr: p = " + std::to_string(p) + " is not a prime congruent to -1 mod 8");
    const auto residues = quadratic_residues(p);
    const std::size_t target = (p + 1) / 2;

    std::vector<bool> is_residue(p, false);
    for (auto a : residues) is_residue[a] = true;
    std::vector<bool> non_residue(p, false);
    for (std::size_t i = 1; i < p; ++i) non_residue[i] = !is_residue[i];

    BitVector ones(p);
    for (std::size_t i = 0; i < p; ++i) ones.set(i);

    std::vector<std::size_t> ranks;
    for (const auto* indicator : {&is_residue, &non_residue}) {
        LinearCode c0 = cyclic_span(*indicator);
        ranks.push_back(c0.k());
        if (c0.k() == target - 1 && !c0.contains(ones)) {
            std::vector<BitVector> rows = c0.generators().rows();
            rows.push_back(ones);
            c0 = make_code(rows, p);
        }
        if (c0.k() != target) continue;

        std::vector<BitVector> extended;
        for (const auto& r : c0.generators().rows()) {
            BitVector v(p + 1);
            for (auto i : r.support()) v.set(i);
            if (r.weight() % 2) v.set(p);
            extended.push_back(std::move(v));
        }
        LinearCode c = make_code(extended, p + 1);
        if (c.k() != target || !is_self_dual(c) || !is_doubly_even(c))
            throw std::logic_error("extended_qr: extension of p = " + std::to_string(p) +
                                   " is not doubly even self-dual");
        return c;
    }
    throw std::logic_error("extended_qr: neither indicator spans a dimension-" + std::to_string(target) +
                           " code (ranks " + std::to_string(ranks[0]) + ", " + std::to_string(ranks[1]) + ")");
}

std::vector<std::vector<std::size_t>> rm_monomials(std::size_t order, std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t left) {
        if (left == 0) {
            out.push_back(current);
            return;
        }
        for (std::size_t v = start; v + left <= m; ++v) {
            current.push_back(v);
            choose(v + 1, left - 1);
            current.pop_back();
        }
    };
    for (std::size_t d = 0; d <= order; ++d) choose(0, d);
    return out;
}

LinearCode reed_muller(std::size_t order, std::size_t m) {
    if (order > m) throw PreconditionError("reed_muller: order must not exceed the number of variables");
    if (m > 20) throw ResourceError("reed_muller: more than 20 variables");
    const std::size_t n = std::size_t{1} << m;
    std::vector<BitVector> rows;
    for (const auto& mono : rm_monomials(order, m)) {
        std::size_t mask = 0;
        for (auto v : mono) mask |= std::size_t{1} << v;
        BitVector row(n);
        for (std::size_t x = 0; x < n; ++x)
            if ((x & mask) == mask) row.set(x);
        rows.push_back(std::move(row));
    }
    return make_code(rows, n);
}

}  // namespace fixcode
