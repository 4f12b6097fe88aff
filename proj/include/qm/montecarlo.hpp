#pragma once

#include <cstdint>
#include <vector>

namespace qm::mc {

/// Identifier of the pinned generator stack, reported in CLI metadata.
/// The generator is xoshiro256** seeded through splitmix64; sub-streams
/// (per trial, per table row) are derived with mix_seed. System generators
/// differ across platforms, so the whole stack is fixed here. Together
/// with the run seed these two strings determine every generator state of
/// a run, so reported results are reconstructible from their metadata.
inline constexpr const char* kPrngAlgorithm = "xoshiro256** (splitmix64-seeded)";
inline constexpr const char* kPrngStreamDerivation =
    "splitmix64(seed + (index+1)*0x9e3779b97f4a7c15)";

/// One splitmix64 step: advances state and returns the next value.
std::uint64_t splitmix64_next(std::uint64_t& state);

/// Sub-stream derivation: splitmix64 output of seed + (index+1) * 2^64/phi.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// xoshiro256** with the reference seeding procedure: the four state words
/// are consecutive splitmix64 outputs of the seed.
class Xoshiro256ss {
public:
    explicit Xoshiro256ss(std::uint64_t seed);
    std::uint64_t next();

    /// Uniform draw from [0, bound) via 128-bit widening multiply;
    /// bound >= 1.
    std::uint32_t next_below(std::uint32_t bound);

private:
    std::uint64_t state_[4];
};

/// Decreasing-index shuffle: for i = n-1 .. 1, swap a[i] with
/// a[next_below(i+1)]. Every permutation of a is equally likely.
void shuffle(std::vector<std::uint32_t>& a, Xoshiro256ss& rng);

struct SampleStats {
    unsigned n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double sample_mean = 0.0;
    double sample_variance = 0.0; // unbiased, divisor trials-1
    double mean_z_score = 0.0;    // against the closed-form mean and variance
};

/// Samples quicksort comparison costs of uniform random permutations of n
/// keys. Trial t uses its own generator seeded with mix_seed(seed, t), so
/// results are reproducible bit for bit and trials are order-independent.
/// Requires n >= 1 and trials >= 2.
SampleStats sample_costs(unsigned n, std::uint64_t trials, std::uint64_t seed);

/// One SampleStats row per n, row n seeded with mix_seed(seed, n) so each
/// row can be reproduced on its own.
std::vector<SampleStats> convergence_table(const std::vector<unsigned>& n_values,
                                           std::uint64_t trials, std::uint64_t seed);

} // namespace qm::mc
