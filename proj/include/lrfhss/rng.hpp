#ifndef LRFHSS_RNG_HPP
#define LRFHSS_RNG_HPP

#include <cstdint>
#include <string_view>

namespace lrfhss {

// Deterministic 64-bit generator (splitmix64). The standard <random>
// distributions are not bit-identical across library implementations, so all
// randomness in the simulator goes through this generator.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, n). Lemire multiply-shift, unbiased enough for
    // simulation purposes and identical on every platform.
    std::uint32_t below(std::uint32_t n) {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(next() >> 32) * n) >> 32);
    }

private:
    std::uint64_t state_;
};

// Stable seed derivation for independent streams: mixes the master seed with
// a label and a list of integers (FNV-1a over the byte representations).
std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t a = 0, std::uint64_t b = 0,
                          std::uint64_t c = 0);

} // namespace lrfhss

#endif
