#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace eulerw {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// xoshiro256** seeded through a splitmix64 chain so any 64-bit seed works.
class Xoshiro256 {
  public:
    explicit Xoshiro256(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64_next(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1); rejects the exact-zero draw.
    double uniform01_open() {
        double u;
        do { u = uniform01(); } while (u == 0.0);
        return u;
    }

    /// Standard exponential via inversion.
    double exponential() { return -std::log1p(-uniform01()); }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<std::uint64_t, 4> s_;
};

/// Independent generator for sample index `stream` under a master seed.
/// Each Monte Carlo sample owns one stream, so tallies do not depend on how
/// samples are split across worker threads.
inline Xoshiro256 stream_rng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t mix = seed ^ 0x6A09E667F3BCC909ull;
    mix += stream * 0x9E3779B97F4A7C15ull;
    return Xoshiro256(splitmix64_next(mix));
}

/// Standard normal pairs via the Marsaglia polar method, buffering the spare.
class NormalStream {
  public:
    explicit NormalStream(Xoshiro256& rng) : rng_(rng) {}

    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * rng_.uniform01() - 1.0;
            v = 2.0 * rng_.uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

  private:
    Xoshiro256& rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace eulerw
