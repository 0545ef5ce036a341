#include "runlab/monte_carlo.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "runlab/errors.hpp"
#include "runlab/rng.hpp"

namespace runlab {

MCEstimate mc_estimate(const ProcessSpec& spec, RunEvent event, int l, std::uint64_t samples,
                       std::uint64_t seed, int threads) {
    if (l < 1) throw RangeError("run length must be at least 1");
    if (samples < 1) throw RangeError("need at least one sample");
    const GridFunction& f = spec.f;
    const int k = f.k();
    const int M = f.M();
    const int L = l + k - 1;

    const std::uint64_t chunk_size = 1 << 16;
    const std::uint64_t num_chunks = (samples + chunk_size - 1) / chunk_size;
    std::vector<std::uint64_t> chunk_hits(num_chunks, 0);

    auto run_chunk = [&](std::uint64_t ci) {
        Xoshiro256pp rng = Xoshiro256pp::stream(seed, ci);
        const std::uint64_t begin = ci * chunk_size;
        const std::uint64_t end = std::min(samples, begin + chunk_size);
        std::vector<int> z(L);
        std::vector<Rat> w(l);
        std::uint64_t hits = 0;
        for (std::uint64_t s = begin; s < end; ++s) {
            if (spec.noise == NoiseKind::discrete_uniform) {
                for (int i = 0; i < L; ++i) z[i] = 1 + int(rng.bounded(std::uint32_t(M)));
            } else {
                for (int i = 0; i < L; ++i)
                    z[i] = int(std::ceil(M * rng.unit_positive()));
            }
            for (int i = 0; i < l; ++i) w[i] = f.value(std::span<const int>(z).subspan(i, k));
            bool ok = true;
            for (int i = 0; i + 1 < l && ok; ++i) {
                switch (event) {
                    case RunEvent::constant: ok = w[i] == w[i + 1]; break;
                    case RunEvent::increasing: ok = w[i] < w[i + 1]; break;
                    case RunEvent::decreasing: ok = w[i] > w[i + 1]; break;
                }
            }
            if (ok) ++hits;
        }
        chunk_hits[ci] = hits;
    };

    threads = std::max(1, threads);
    if (threads == 1 || num_chunks <= 1) {
        for (std::uint64_t ci = 0; ci < num_chunks; ++ci) run_chunk(ci);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::uint64_t ci; (ci = next.fetch_add(1)) < num_chunks;) run_chunk(ci);
            });
        for (auto& th : pool) th.join();
    }

    MCEstimate est;
    est.samples = samples;
    est.seed = seed;
    for (std::uint64_t h : chunk_hits) est.hits += h;
    est.estimate = Rat(BigInt(est.hits), BigInt(samples));
    const double p = double(est.hits) / double(samples);
    est.std_error = std::sqrt(p * (1.0 - p) / double(samples));
    return est;
}

}  // namespace runlab
