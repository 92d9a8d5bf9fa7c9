#ifndef LRFHSS_LFSR_HPP
#define LRFHSS_LFSR_HPP

#include <cstdint>
#include <vector>

namespace lrfhss {

// Galois LFSR over GF(2).
//
// Bit convention: the state word stores register h_0 in the least significant
// bit; the polynomial word stores coefficient q_1 in the least significant bit
// and q_m in bit m-1, which must be set. One step is then a right shift with a
// conditional XOR of the polynomial word.
struct LfsrConfig {
    int size = 0;                    // register count m
    std::uint32_t polynomial = 0;    // coefficient word {q_m..q_1}
    std::uint32_t initial_state = 0; // nonzero m-bit word, h_0 in the LSB

    void validate() const; // throws std::invalid_argument on a bad config
};

// One state transition. Rejects the absorbing zero state and out-of-range
// words rather than looping silently.
std::uint32_t advance_lfsr(std::uint32_t state, const LfsrConfig& config);

// First `count` states starting from (and including) the initial state.
// Continues past the period if count exceeds it.
std::vector<std::uint32_t> generate_state_sequence(const LfsrConfig& config,
                                                   std::size_t count);

// Smallest t >= 1 with state(t) == state(0). Equals 2^m - 1 exactly when the
// polynomial is primitive, which is how callers check primitivity here.
int measure_period(const LfsrConfig& config);

} // namespace lrfhss

#endif
