#pragma once

#include <array>
#include <cstdint>

namespace runlab {

// SplitMix64, used only to expand seeds into generator state.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256++ (Blackman & Vigna).  Portable and bit-reproducible for a fixed
// seed on every platform.  Parallel work splits the stream with jump(): worker
// or chunk c uses a generator jumped c times, which advances by 2^128 draws.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Advance 2^128 steps.
    void jump() {
        static constexpr std::uint64_t kJump[] = {0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL,
                                                  0xa9582618e03fc9aaULL, 0x39abdc4529b1661cULL};
        std::array<std::uint64_t, 4> acc{0, 0, 0, 0};
        for (std::uint64_t word : kJump)
            for (int b = 0; b < 64; ++b) {
                if (word & (1ULL << b))
                    for (int i = 0; i < 4; ++i) acc[i] ^= s_[i];
                next();
            }
        s_ = acc;
    }

    // Fresh generator for stream index `stream` on top of `seed`.
    static Xoshiro256pp stream(std::uint64_t seed, std::uint64_t stream) {
        Xoshiro256pp g(seed);
        for (std::uint64_t i = 0; i < stream; ++i) g.jump();
        return g;
    }

    // Unbiased uniform draw from {0, ..., bound-1} (Lemire rejection).
    std::uint32_t bounded(std::uint32_t bound) {
        std::uint64_t x = next() >> 32;
        std::uint64_t m = x * bound;
        auto lo = static_cast<std::uint32_t>(m);
        if (lo < bound) {
            std::uint32_t threshold = (0u - bound) % bound;
            while (lo < threshold) {
                x = next() >> 32;
                m = x * bound;
                lo = static_cast<std::uint32_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 32);
    }

    // Uniform double on the half-open interval (0, 1]; never returns 0.
    double unit_positive() { return double((next() >> 11) + 1) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<std::uint64_t, 4> s_;
};

}  // namespace runlab
