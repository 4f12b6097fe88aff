#include "qm/brute_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qm/errors.hpp"

namespace qm::brute {

namespace {

// Sorts a[lo, hi) in place and returns its comparison cost. The partition
// copies each side into scratch in scan order, so the relative order within
// the smaller and larger groups survives, matching the model in which both
// subproblems are again uniform random permutations.
std::uint64_t quicksort_cost_recursive(std::vector<std::uint32_t>& a, size_t lo, size_t hi,
                                       std::vector<std::uint32_t>& scratch) {
    const size_t m = hi - lo;
    if (m == 0) return 0;
    const std::uint32_t pivot = a[hi - 1];
    size_t smaller = 0;
    for (size_t i = lo; i + 1 < hi; ++i)
        if (a[i] < pivot) ++smaller;
    size_t write_small = lo, write_large = lo + smaller + 1;
    scratch[lo + smaller] = pivot;
    for (size_t i = lo; i + 1 < hi; ++i) {
        if (a[i] < pivot)
            scratch[write_small++] = a[i];
        else
            scratch[write_large++] = a[i];
    }
    std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
              scratch.begin() + static_cast<std::ptrdiff_t>(hi),
              a.begin() + static_cast<std::ptrdiff_t>(lo));
    std::uint64_t cost = m + 1;
    cost += quicksort_cost_recursive(a, lo, lo + smaller, scratch);
    cost += quicksort_cost_recursive(a, lo + smaller + 1, hi, scratch);
    return cost;
}

std::uint64_t bst_path_length_unchecked(const Permutation& perm) {
    if (perm.empty()) return 0;
    const size_t n = perm.size();
    std::vector<std::uint32_t> key(n);
    std::vector<int> left(n, -1), right(n, -1);
    key[0] = perm[0];
    size_t used = 1;
    std::uint64_t total = 0;
    for (size_t i = 1; i < n; ++i) {
        const std::uint32_t v = perm[i];
        int node = 0;
        std::uint64_t depth = 0;
        for (;;) {
            ++depth;
            int& next = v < key[static_cast<size_t>(node)] ? left[static_cast<size_t>(node)]
                                                           : right[static_cast<size_t>(node)];
            if (next == -1) {
                next = static_cast<int>(used);
                key[used++] = v;
                break;
            }
            node = next;
        }
        total += depth;
    }
    return total;
}

enum class Statistic { QuicksortComparisons, BstPathLength };

CountPolynomial histogram(unsigned n, unsigned cap, Statistic stat) {
    if (n > cap)
        throw resource_limit_error("brute-force enumeration of " + std::to_string(n) +
                                   "! permutations exceeds cap " + std::to_string(cap));
    const std::uint64_t cost_bound = static_cast<std::uint64_t>(n) * (n + 3) / 2;
    std::vector<std::uint64_t> tally(cost_bound + 1, 0);

    Permutation perm(n);
    std::iota(perm.begin(), perm.end(), 1u);
    std::vector<std::uint32_t> work(n), scratch(n);
    do {
        std::uint64_t cost;
        if (stat == Statistic::QuicksortComparisons) {
            work = perm;
            cost = quicksort_cost_recursive(work, 0, n, scratch);
            for (size_t i = 0; i < n; ++i)
                if (work[i] != i + 1)
                    throw std::logic_error("quicksort output not sorted");
        } else {
            cost = bst_path_length_unchecked(perm);
        }
        ++tally[cost];
    } while (std::next_permutation(perm.begin(), perm.end()));

    size_t first = 0, last = tally.size();
    while (first < last && tally[first] == 0) ++first;
    while (last > first && tally[last - 1] == 0) --last;

    CountPolynomial out;
    out.n = n;
    out.min_cost = first;
    out.counts.clear();
    for (size_t i = first; i < last; ++i)
        out.counts.emplace_back(static_cast<unsigned long>(tally[i]));
    return out;
}

} // namespace

void validate_permutation(const Permutation& perm) {
    std::vector<bool> seen(perm.size(), false);
    for (const auto v : perm) {
        if (v < 1 || v > perm.size() || seen[v - 1])
            throw std::invalid_argument("malformed permutation: not a rearrangement of 1..n");
        seen[v - 1] = true;
    }
}

std::uint64_t quicksort_count(const Permutation& perm) {
    validate_permutation(perm);
    std::vector<std::uint32_t> work = perm;
    std::vector<std::uint32_t> scratch(perm.size());
    return quicksort_cost_recursive(work, 0, work.size(), scratch);
}

std::uint64_t bst_path_length(const Permutation& perm) {
    validate_permutation(perm);
    return bst_path_length_unchecked(perm);
}

CountPolynomial histogram_quicksort(unsigned n, unsigned cap) {
    return histogram(n, cap, Statistic::QuicksortComparisons);
}

CountPolynomial histogram_bst(unsigned n, unsigned cap) {
    return histogram(n, cap, Statistic::BstPathLength);
}

} // namespace qm::brute
