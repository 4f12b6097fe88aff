#include "qm/montecarlo.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qm/brute_oracle.hpp"
#include "qm/closed_form.hpp"

namespace qm::mc {

std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed + (index + 1) * 0x9e3779b97f4a7c15ull;
    return splitmix64_next(state);
}

Xoshiro256ss::Xoshiro256ss(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64_next(sm);
}

std::uint64_t Xoshiro256ss::next() {
    auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

std::uint32_t Xoshiro256ss::next_below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
}

void shuffle(std::vector<std::uint32_t>& a, Xoshiro256ss& rng) {
    for (size_t i = a.size(); i > 1; --i) {
        const size_t j = rng.next_below(static_cast<std::uint32_t>(i));
        std::swap(a[i - 1], a[j]);
    }
}

SampleStats sample_costs(unsigned n, std::uint64_t trials, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_costs: n must be at least 1");
    if (trials < 2) throw std::invalid_argument("sample_costs: trials must be at least 2");

    std::vector<std::uint32_t> perm(n);
    double mean = 0.0, m2 = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Xoshiro256ss rng(mix_seed(seed, t));
        std::iota(perm.begin(), perm.end(), 1u);
        shuffle(perm, rng);
        const auto cost = static_cast<double>(brute::quicksort_count(perm));
        // Welford update; naive summation of 10^6 costs sheds digits.
        const double delta = cost - mean;
        mean += delta / static_cast<double>(t + 1);
        m2 += delta * (cost - mean);
    }

    SampleStats stats;
    stats.n = n;
    stats.trials = trials;
    stats.seed = seed;
    stats.sample_mean = mean;
    stats.sample_variance = m2 / static_cast<double>(trials - 1);

    const double closed_mean = closed_form::mean_closed(n).get_d();
    const double closed_var = closed_form::variance_closed(n).get_d();
    const double scale = std::sqrt(closed_var / static_cast<double>(trials));
    stats.mean_z_score = scale > 0.0 ? (mean - closed_mean) / scale : 0.0;
    return stats;
}

std::vector<SampleStats> convergence_table(const std::vector<unsigned>& n_values,
                                           std::uint64_t trials, std::uint64_t seed) {
    std::vector<SampleStats> rows;
    rows.reserve(n_values.size());
    for (const unsigned n : n_values)
        rows.push_back(sample_costs(n, trials, mix_seed(seed, n)));
    return rows;
}

} // namespace qm::mc
