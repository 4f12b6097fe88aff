#include "qm/pgf_engine.hpp"

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <string>

#include "qm/errors.hpp"

namespace qm::pgf {

namespace {

// counts(a) * counts(b) as a plain integer convolution.
std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return out;
}

void trim(CountPolynomial& p) {
    size_t first = 0, last = p.counts.size();
    while (first < last && p.counts[first] == 0) ++first;
    while (last > first && p.counts[last - 1] == 0) --last;
    if (first == last) {
        p.min_cost = 0;
        p.counts = {BigInt(0)};
        return;
    }
    p.min_cost += first;
    p.counts.assign(p.counts.begin() + static_cast<std::ptrdiff_t>(first),
                    p.counts.begin() + static_cast<std::ptrdiff_t>(last));
}

// Level m of the split recurrence
//   counts_m = u^shift * sum_{k=1..m} C(m-1, k-1) * counts_{m-k} * counts_{k-1}
// where shift is m+1 for comparison counts and m-1 for path length. The k
// and m+1-k terms are identical (C(m-1,k-1) == C(m-1,m-k)), so each pair is
// computed once and doubled; the middle term of odd m is a square.
CountPolynomial build_level(const std::vector<CountPolynomial>& lower, unsigned m,
                            std::uint64_t shift) {
    std::uint64_t lo = UINT64_MAX, hi = 0;
    for (unsigned k = 1; k <= m; ++k) {
        const auto& a = lower[m - k];
        const auto& b = lower[k - 1];
        lo = std::min(lo, a.min_cost + b.min_cost);
        hi = std::max(hi, a.max_cost() + b.max_cost());
    }

    std::vector<BigInt> acc(hi - lo + 1);
    auto add_term = [&](unsigned k, const BigInt& weight) {
        const auto& a = lower[m - k];
        const auto& b = lower[k - 1];
        auto prod = convolve(a.counts, b.counts);
        const size_t off = a.min_cost + b.min_cost - lo;
        for (size_t i = 0; i < prod.size(); ++i) {
            if (prod[i] == 0) continue;
            mpz_addmul(acc[off + i].get_mpz_t(), weight.get_mpz_t(), prod[i].get_mpz_t());
        }
    };

    for (unsigned k = 1; 2 * k < m + 1; ++k)
        add_term(k, 2 * binomial(m - 1, k - 1));
    if (m % 2 == 1)
        add_term((m + 1) / 2, binomial(m - 1, (m - 1) / 2));

    CountPolynomial out;
    out.n = m;
    out.min_cost = lo + shift;
    out.counts = std::move(acc);
    trim(out);
    return out;
}

struct DistributionTable {
    std::mutex mu;
    std::vector<CountPolynomial> levels;
};

DistributionTable comparison_table;
DistributionTable bst_table;

CountPolynomial lookup(DistributionTable& table, unsigned n, unsigned max_n, bool comparisons) {
    if (n > max_n)
        throw resource_limit_error("distribution size " + std::to_string(n) +
                                   " exceeds configured maximum " + std::to_string(max_n));
    std::lock_guard<std::mutex> lock(table.mu);
    if (table.levels.empty())
        table.levels.push_back(CountPolynomial{0, 0, {BigInt(1)}});
    while (table.levels.size() <= n) {
        const auto m = static_cast<unsigned>(table.levels.size());
        table.levels.push_back(build_level(table.levels, m, comparisons ? m + 1 : m - 1));
    }
    return table.levels[n];
}

} // namespace

CountPolynomial comparison_counts(unsigned n, unsigned max_n) {
    return lookup(comparison_table, n, max_n, true);
}

CountPolynomial bst_path_counts(unsigned n, unsigned max_n) {
    return lookup(bst_table, n, max_n, false);
}

Rat factorial_moment(const CountPolynomial& dist, unsigned s) {
    BigInt num = 0;
    for (size_t i = 0; i < dist.counts.size(); ++i) {
        if (dist.counts[i] == 0) continue;
        const std::uint64_t cost = dist.min_cost + i;
        if (cost < s) continue; // falling factorial hits zero
        BigInt ff = 1;
        for (unsigned j = 0; j < s; ++j) ff *= BigInt(static_cast<unsigned long>(cost - j));
        num += dist.counts[i] * ff;
    }
    return make_rat(num, factorial(dist.n));
}

MomentReport moments_report(unsigned n, unsigned max_order, unsigned max_n) {
    if (max_order < 2)
        throw std::invalid_argument("moments_report: max_order must be at least 2");
    const auto dist = comparison_counts(n, max_n);
    MomentReport report;
    report.n = n;
    report.source = MomentSource::ExactDistribution;
    for (unsigned s = 1; s <= max_order; ++s)
        report.betas.push_back(factorial_moment(dist, s));
    report.mean = report.betas[0];
    report.variance = report.betas[1] - report.betas[0] * report.betas[0] + report.betas[0];
    return report;
}

bool shift_identity_check(unsigned n, unsigned max_n) {
    const auto comparisons = comparison_counts(n, max_n);
    const auto paths = bst_path_counts(n, max_n);
    return comparisons.min_cost == paths.min_cost + 2ull * n &&
           comparisons.counts == paths.counts;
}

} // namespace qm::pgf
