#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace vdm {

// Seed discipline: one 64-bit master seed per experiment. Replicate k gets
// replicate_seed(master, k); each engine then derives one stream per concern
// (initial configuration, dynamics) with mix_seed. All derivations go through
// splitmix64 so nearby seeds give unrelated streams, and everything downstream
// of std::mt19937_64 is fully specified by the standard, so runs are
// reproducible across platforms.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t tag) {
    std::uint64_t s = master ^ (0x9e3779b97f4a7c15ull * (tag + 1));
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return a ^ (b >> 1);
}

inline constexpr std::uint64_t kInitStreamTag = 0x696e6974;      // "init"
inline constexpr std::uint64_t kDynamicsStreamTag = 0x64796e61;  // "dyna"
inline constexpr std::uint64_t kReplicateTag = 0x7265706c;       // "repl"

inline std::uint64_t replicate_seed(std::uint64_t master, int replicate) {
    return mix_seed(mix_seed(master, kReplicateTag), static_cast<std::uint64_t>(replicate));
}

inline std::mt19937_64 make_stream(std::uint64_t master, std::uint64_t tag) {
    std::uint64_t s = mix_seed(master, tag);
    std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32),
                      static_cast<std::uint32_t>(tag), 0x56444du};
    return std::mt19937_64(seq);
}

// Uniform in [0, 1) with 53 random bits; implementation independent, unlike
// std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Unit-rate exponential waiting time.
inline double exp_unit(std::mt19937_64& g) {
    return -std::log1p(-uniform01(g));
}

// Unbiased integer in [0, n) (multiply-shift with rejection).
inline std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t n) {
    unsigned __int128 m = static_cast<unsigned __int128>(g()) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
        std::uint64_t t = (0 - n) % n;
        while (lo < t) {
            m = static_cast<unsigned __int128>(g()) * n;
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace vdm
