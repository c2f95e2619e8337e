#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

namespace oecsim {

// Reproducible random streams.
//
// A stream is a deterministic function of (master_seed, label). The label is
// a path such as "run3/dev0_2/net"; distinct labels give independent streams,
// so event interleaving across entities never perturbs anyone's draws.
//
// Derivation rule (documented here and in the README because replaying a
// trace requires it):
//   key    = master_seed XOR fnv1a64(label)
//   state  = four successive outputs of splitmix64 seeded with key
//   stream = xoshiro256++ over that state
// Floating-point draws use the top 53 bits of each 64-bit output; the normal
// and exponential transforms below are fixed (no libc distribution objects),
// so sequences are identical on every conforming platform.

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::uint64_t splitmix64_next(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class RngStream {
public:
    RngStream() : RngStream(0, "default") {}

    RngStream(std::uint64_t master_seed, std::string_view label)
        : master_seed_(master_seed), label_(label) {
        derivation_key_ = master_seed ^ fnv1a64(label);
        std::uint64_t x = derivation_key_;
        for (auto& word : state_) word = splitmix64_next(x);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
            state_[0] = 0x9e3779b97f4a7c15ULL;  // xoshiro forbids all-zero state
        }
    }

    std::uint64_t master_seed() const { return master_seed_; }
    const std::string& label() const { return label_; }
    // The mixed 64-bit key; printed in outputs so a single run can be replayed.
    std::uint64_t derivation_key() const { return derivation_key_; }

    // xoshiro256++ step.
    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Unbiased integer in [0, n); n > 0. Lemire's multiply-shift rejection.
    std::uint64_t uniform_int(std::uint64_t n) {
        while (true) {
            std::uint64_t x = next_u64();
            __uint128_t m = static_cast<__uint128_t>(x) * n;
            std::uint64_t low = static_cast<std::uint64_t>(m);
            if (low < n) {
                std::uint64_t threshold = (0 - n) % n;
                if (low < threshold) continue;
            }
            return static_cast<std::uint64_t>(m >> 64);
        }
    }

    // Box-Muller, cosine branch only: exactly two uniforms per draw, so the
    // consumed-sample count per call is fixed.
    double normal(double mean, double stddev) {
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(2.0 * M_PI * u2);
    }

    // Exponential with the given mean; strictly positive.
    double exponential(double mean) {
        while (true) {
            double t = -mean * std::log(1.0 - uniform());
            if (t > 0.0) return t;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::uint64_t master_seed_;
    std::string label_;
    std::uint64_t derivation_key_;
    std::uint64_t state_[4];
};

inline RngStream derive_stream(std::uint64_t master_seed, std::string_view label) {
    return RngStream(master_seed, label);
}

}  // namespace oecsim
