#include <doctest.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qm/brute_oracle.hpp"
#include "qm/closed_form.hpp"
#include "qm/errors.hpp"
#include "qm/pgf_engine.hpp"

using namespace qm;

namespace {

// Oracle: the split recurrence written as the plain double sum over k and
// cost pairs, without pairing or shared memo tables.
std::vector<std::map<std::uint64_t, BigInt>> naive_levels(unsigned n, std::uint64_t shift_base,
                                                          bool comparisons) {
    std::vector<std::map<std::uint64_t, BigInt>> levels;
    levels.push_back({{0, BigInt(1)}});
    for (unsigned m = 1; m <= n; ++m) {
        const std::uint64_t shift = comparisons ? m + shift_base : m - shift_base;
        std::map<std::uint64_t, BigInt> level;
        for (unsigned k = 1; k <= m; ++k) {
            const BigInt w = binomial(m - 1, k - 1);
            for (const auto& [ca, va] : levels[m - k])
                for (const auto& [cb, vb] : levels[k - 1])
                    level[ca + cb + shift] += w * va * vb;
        }
        levels.push_back(std::move(level));
    }
    return levels;
}

bool matches(const CountPolynomial& dist, const std::map<std::uint64_t, BigInt>& expected) {
    std::map<std::uint64_t, BigInt> got;
    for (size_t i = 0; i < dist.counts.size(); ++i)
        if (dist.counts[i] != 0) got[dist.min_cost + i] = dist.counts[i];
    return got == expected;
}

CountPolynomial make(unsigned n, std::uint64_t min_cost, std::vector<long> counts) {
    CountPolynomial p;
    p.n = n;
    p.min_cost = min_cost;
    p.counts.clear();
    for (const long c : counts) p.counts.emplace_back(c);
    return p;
}

} // namespace

TEST_CASE("comparison count distribution for small n") {
    CHECK(pgf::comparison_counts(0) == make(0, 0, {1}));
    CHECK(pgf::comparison_counts(1) == make(1, 2, {1}));
    CHECK(pgf::comparison_counts(2) == make(2, 5, {2}));
    CHECK(pgf::comparison_counts(3) == make(3, 8, {2, 4}));
}

TEST_CASE("path length distribution for small n") {
    CHECK(pgf::bst_path_counts(0) == make(0, 0, {1}));
    CHECK(pgf::bst_path_counts(1) == make(1, 0, {1}));
    CHECK(pgf::bst_path_counts(2) == make(2, 1, {2}));
    CHECK(pgf::bst_path_counts(3) == make(3, 2, {2, 4}));
}

TEST_CASE("paired convolution agrees with the plain recurrence") {
    const auto naive_cc = naive_levels(15, 1, true);
    const auto naive_bst = naive_levels(15, 1, false);
    for (unsigned n = 0; n <= 15; ++n) {
        CHECK(matches(pgf::comparison_counts(n), naive_cc[n]));
        CHECK(matches(pgf::bst_path_counts(n), naive_bst[n]));
    }
}

TEST_CASE("distribution totals are n!") {
    for (unsigned n = 0; n <= 40; ++n) {
        CHECK(pgf::comparison_counts(n).total() == factorial(n));
        CHECK(pgf::bst_path_counts(n).total() == factorial(n));
    }
}

TEST_CASE("cost range is tight") {
    for (unsigned n = 1; n <= 40; ++n) {
        const auto dist = pgf::comparison_counts(n);
        CHECK(dist.max_cost() == static_cast<std::uint64_t>(n) * (n + 3) / 2);
        CHECK(dist.min_cost >= n);
        CHECK(dist.counts.front() != 0);
        CHECK(dist.counts.back() != 0);
    }
}

TEST_CASE("recurrence matches enumeration") {
    for (unsigned n = 0; n <= 9; ++n) {
        CHECK(pgf::comparison_counts(n) == brute::histogram_quicksort(n));
        CHECK(pgf::bst_path_counts(n) == brute::histogram_bst(n));
    }
}

TEST_CASE("factorial moments of small distributions") {
    CHECK(pgf::factorial_moment(pgf::comparison_counts(2), 1) == Rat(5));
    CHECK(pgf::factorial_moment(pgf::comparison_counts(3), 1) == Rat(26, 3));
    CHECK(pgf::factorial_moment(pgf::comparison_counts(3), 2) == Rat(200, 3));
    CHECK(pgf::factorial_moment(pgf::comparison_counts(3), 0) == Rat(1));
    // falling factorial vanishes once the order exceeds every cost
    CHECK(pgf::factorial_moment(pgf::bst_path_counts(1), 1) == Rat(0));
}

TEST_CASE("moment report assembly") {
    const auto r3 = pgf::moments_report(3, 2);
    CHECK(r3.mean == Rat(26, 3));
    CHECK(r3.variance == Rat(2, 9));
    CHECK(r3.betas.size() == 2);
    CHECK(r3.mean == r3.betas[0]);
    CHECK(r3.source == pgf::MomentSource::ExactDistribution);

    CHECK(pgf::moments_report(2, 2).mean == Rat(5));
    CHECK(pgf::moments_report(2, 2).variance == Rat(0));
    CHECK(pgf::moments_report(1, 2).mean == Rat(2));
    CHECK(pgf::moments_report(1, 2).variance == Rat(0));

    CHECK_THROWS_AS(pgf::moments_report(3, 1), std::invalid_argument);
}

TEST_CASE("moments agree with closed forms") {
    for (unsigned n = 0; n <= 40; ++n) {
        const auto dist = pgf::comparison_counts(n);
        CHECK(pgf::factorial_moment(dist, 1) == closed_form::factorial_moment1_closed(n));
        CHECK(pgf::factorial_moment(dist, 2) == closed_form::factorial_moment2_closed(n));
        CHECK(pgf::moments_report(n, 2).variance == closed_form::variance_closed(n));
    }
}

TEST_CASE("shift identity between the two statistics") {
    for (unsigned n = 0; n <= 40; ++n) CHECK(pgf::shift_identity_check(n));
}

TEST_CASE("size cap") {
    CHECK_THROWS_AS(pgf::comparison_counts(12, 10), resource_limit_error);
    CHECK_THROWS_AS(pgf::bst_path_counts(12, 10), resource_limit_error);
    CHECK_THROWS_AS(pgf::moments_report(12, 2, 10), resource_limit_error);
    CHECK(pgf::comparison_counts(12, 12).n == 12);
}

TEST_CASE("distribution table is safe to hit concurrently") {
    std::vector<std::thread> threads;
    std::vector<BigInt> totals(4);
    for (int t = 0; t < 4; ++t)
        threads.emplace_back(
            [&, t] { totals[static_cast<size_t>(t)] = pgf::comparison_counts(35).total(); });
    for (auto& th : threads) th.join();
    for (const auto& total : totals) CHECK(total == factorial(35));
}
