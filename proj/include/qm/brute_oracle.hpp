#pragma once

#include <cstdint>
#include <vector>

#include "qm/count_polynomial.hpp"

namespace qm::brute {

/// Full enumeration cap: 10! = 3,628,800 permutations stays under a minute.
inline constexpr unsigned kDefaultCap = 10;

/// A rearrangement of 1..n.
using Permutation = std::vector<std::uint32_t>;

/// Throws std::invalid_argument unless each of 1..n appears exactly once.
void validate_permutation(const Permutation& perm);

/// Comparison cost of sorting perm: each call on a size-m subarray picks the
/// last element as pivot, splits the rest into smaller/larger with relative
/// order preserved, charges m+1, and recurses. Size-0 calls are free.
std::uint64_t quicksort_count(const Permutation& perm);

/// Total internal path length of the binary search tree grown by inserting
/// perm left to right (leaf insertion, root depth 0).
std::uint64_t bst_path_length(const Permutation& perm);

/// Tally of quicksort_count over all n! permutations, enumerated in
/// lexicographic order. The sorted output of every run is checked.
CountPolynomial histogram_quicksort(unsigned n, unsigned cap = kDefaultCap);

/// Same enumeration, tallying bst_path_length.
CountPolynomial histogram_bst(unsigned n, unsigned cap = kDefaultCap);

} // namespace qm::brute
