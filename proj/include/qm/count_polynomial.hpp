#pragma once

#include <cstdint>
#include <vector>

#include "qm/exact_arith.hpp"

namespace qm {

/// Exact distribution of an integer cost statistic over the n! permutations
/// of n keys: counts[i] permutations have cost min_cost + i. The
/// representation is tight (first and last counts nonzero) except for n = 0,
/// which is the single empty permutation at cost 0.
struct CountPolynomial {
    unsigned n = 0;
    std::uint64_t min_cost = 0;
    std::vector<BigInt> counts{BigInt(1)};

    std::uint64_t max_cost() const { return min_cost + counts.size() - 1; }

    BigInt total() const {
        BigInt t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }

    bool operator==(const CountPolynomial& o) const {
        return n == o.n && min_cost == o.min_cost && counts == o.counts;
    }
};

} // namespace qm
