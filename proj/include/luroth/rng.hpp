/// Seeded deterministic random number generation.
///
/// xoshiro256** seeded through splitmix64, both fixed published algorithms,
/// so batches regenerate byte-identically across platforms and runs. Samplers
/// derive an independent child stream per sample index, which makes batch
/// generation order-independent and safe to parallelize.
#ifndef LUROTH_RNG_HPP
#define LUROTH_RNG_HPP

#include <array>
#include <cstdint>

namespace luroth {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    /// Independent stream for (seed, tag); used for per-sample derivation.
    static Rng derive(std::uint64_t seed, std::uint64_t tag) {
        std::uint64_t sm = seed;
        std::uint64_t a = splitmix64(sm);
        std::uint64_t t = tag * 0x9E3779B97F4A7C15ULL;
        return Rng(a ^ splitmix64(t));
    }

    std::uint64_t next() {
        auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
        std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, n) by threshold rejection (unbiased, deterministic).
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = -n % n;   // 2^64 mod n
        std::uint64_t x;
        do { x = next(); } while (x < limit);
        return x % n;
    }

    /// Uniform in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::array<std::uint64_t, 4> s_{};
};

}  // namespace luroth

#endif
