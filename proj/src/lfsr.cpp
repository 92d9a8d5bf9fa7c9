#include "lrfhss/lfsr.hpp"

#include <stdexcept>
#include <string>

namespace lrfhss {

namespace {

void check_state(std::uint32_t state, const LfsrConfig& config) {
    if (state == 0)
        throw std::invalid_argument("lfsr: zero state is absorbing");
    if (state >= (1u << config.size))
        throw std::invalid_argument("lfsr: state " + std::to_string(state) +
                                    " out of range for " +
                                    std::to_string(config.size) + " registers");
}

} // namespace

void LfsrConfig::validate() const {
    if (size < 1 || size > 24)
        throw std::invalid_argument("lfsr: register count out of range");
    if (polynomial >= (1u << size) || !(polynomial >> (size - 1) & 1u))
        throw std::invalid_argument("lfsr: polynomial word must be an m-bit "
                                    "value with q_m set");
    check_state(initial_state, *this);
}

std::uint32_t advance_lfsr(std::uint32_t state, const LfsrConfig& config) {
    config.validate();
    check_state(state, config);
    // h_i' = h_{i+1} + q_{i+1} h_0, h_{m-1}' = h_0: right shift, then XOR the
    // polynomial word when the output bit is set (q_m = 1 supplies h_{m-1}').
    return (state >> 1) ^ ((state & 1u) ? config.polynomial : 0u);
}

std::vector<std::uint32_t> generate_state_sequence(const LfsrConfig& config,
                                                   std::size_t count) {
    config.validate();
    std::vector<std::uint32_t> out;
    out.reserve(count);
    std::uint32_t s = config.initial_state;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(s);
        s = advance_lfsr(s, config);
    }
    return out;
}

int measure_period(const LfsrConfig& config) {
    config.validate();
    std::uint32_t s = advance_lfsr(config.initial_state, config);
    int t = 1;
    while (s != config.initial_state) {
        s = advance_lfsr(s, config);
        ++t;
    }
    return t;
}

} // namespace lrfhss
