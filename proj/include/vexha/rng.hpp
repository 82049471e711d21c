#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

namespace vexha {

// Philox4x32-10 counter-based generator.  Streams are pure functions of
// (seed, stream, counter), so trial-parallel suites reproduce bit-identically
// at any thread count.  Reports name this generator by the identifier below.
inline constexpr const char* kRngAlgorithm = "philox4x32-10";

namespace detail {

inline void philox_mulhilo(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) {
    uint64_t p = static_cast<uint64_t>(a) * b;
    hi = static_cast<uint32_t>(p >> 32);
    lo = static_cast<uint32_t>(p);
}

} // namespace detail

inline std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> ctr,
                                          std::array<uint32_t, 2> key) {
    constexpr uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
    constexpr uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        uint32_t hi0, lo0, hi1, lo1;
        detail::philox_mulhilo(M0, ctr[0], hi0, lo0);
        detail::philox_mulhilo(M1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += W0;
        key[1] += W1;
    }
    return ctr;
}

// One deterministic stream: block index advances through the counter space.
class CounterRng {
  public:
    CounterRng(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {}

    uint32_t next_u32() {
        if (have_ == 0) refill();
        return block_[--have_];
    }

    uint64_t next_u64() {
        uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1], safe as a log argument.
    double uniform_pos() { return 1.0 - uniform(); }

    // Standard normal via Box-Muller (pairs cached).
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform_pos();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    // Uniform integer in [0, n).
    uint64_t below(uint64_t n) { return next_u64() % n; }

  private:
    void refill() {
        std::array<uint32_t, 4> ctr = {static_cast<uint32_t>(block_index_),
                                       static_cast<uint32_t>(block_index_ >> 32),
                                       static_cast<uint32_t>(stream_),
                                       static_cast<uint32_t>(stream_ >> 32)};
        std::array<uint32_t, 2> key = {static_cast<uint32_t>(seed_),
                                       static_cast<uint32_t>(seed_ >> 32)};
        auto out = philox4x32(ctr, key);
        for (int i = 0; i < 4; ++i) block_[i] = out[i];
        have_ = 4;
        ++block_index_;
    }

    uint64_t seed_;
    uint64_t stream_;
    uint64_t block_index_ = 0;
    uint32_t block_[4] = {};
    int have_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace vexha
