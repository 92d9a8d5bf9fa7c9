#include "lrfhss/rng.hpp"

namespace lrfhss {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

std::uint64_t fnv_bytes(std::uint64_t h, const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= kFnvPrime;
    }
    return h;
}

} // namespace

std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t h = kFnvOffset;
    h = fnv_bytes(h, &master, sizeof master);
    h = fnv_bytes(h, label.data(), label.size());
    h = fnv_bytes(h, &a, sizeof a);
    h = fnv_bytes(h, &b, sizeof b);
    h = fnv_bytes(h, &c, sizeof c);
    // run the mix once so nearby labels diverge fully
    return Rng(h).next();
}

} // namespace lrfhss
