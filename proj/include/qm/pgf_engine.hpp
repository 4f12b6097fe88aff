#pragma once

#include <vector>

#include "qm/count_polynomial.hpp"
#include "qm/exact_arith.hpp"

namespace qm::pgf {

/// Default cap on distribution size. Big-integer convolution work grows
/// steeply with n; 64 keeps a full verification sweep in minutes. Callers
/// may raise it explicitly (the CLI wires QM_MAX_N through here).
inline constexpr unsigned kDefaultMaxN = 64;

enum class MomentSource { ExactDistribution, ClosedForm };

/// Factorial moments of one distribution: betas[s-1] is the s-th factorial
/// moment, mean == betas[0], variance == betas[1] - betas[0]^2 + betas[0].
struct MomentReport {
    unsigned n = 0;
    std::vector<Rat> betas;
    Rat mean;
    Rat variance;
    MomentSource source = MomentSource::ExactDistribution;
};

/// Exact distribution of quicksort comparison counts over all permutations
/// of n keys (last-element pivot, size-m call costs m+1 comparisons).
/// Computed bottom-up; lower orders are served from a shared memo table.
CountPolynomial comparison_counts(unsigned n, unsigned max_n = kDefaultMaxN);

/// Exact distribution of total internal path length (sum of node depths,
/// root at depth 0) of the binary search tree built from a uniform random
/// permutation of n keys.
CountPolynomial bst_path_counts(unsigned n, unsigned max_n = kDefaultMaxN);

/// s-th factorial moment of the distribution: E[C(C-1)...(C-s+1)].
/// s = 0 gives 1.
Rat factorial_moment(const CountPolynomial& dist, unsigned s);

/// Factorial moments 1..max_order of the comparison-count distribution,
/// with mean and variance assembled from the first two. max_order >= 2.
MomentReport moments_report(unsigned n, unsigned max_order, unsigned max_n = kDefaultMaxN);

/// True iff the comparison-count distribution equals the path-length
/// distribution with every cost shifted up by exactly 2n.
bool shift_identity_check(unsigned n, unsigned max_n = kDefaultMaxN);

} // namespace qm::pgf
