#pragma once

#include <cstdint>

#include "runlab/numeric.hpp"
#include "runlab/run_prob.hpp"

namespace runlab {

struct MCEstimate {
    Rat estimate;  // hits / samples
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
    double std_error = 0.0;  // sqrt(estimate * (1 - estimate) / samples)
    std::uint64_t seed = 0;
};

// Seeded Monte Carlo estimate of the run-event probability.  Bit-reproducible
// for a fixed seed regardless of thread count: samples are split into fixed
// chunks of 2^16 and chunk c always draws from jump-stream c of the seed.
MCEstimate mc_estimate(const ProcessSpec& spec, RunEvent event, int l, std::uint64_t samples,
                       std::uint64_t seed, int threads = 1);

}  // namespace runlab
