#include <doctest.h>

#include <algorithm>
#include <set>

#include "lrfhss/lfsr.hpp"

using namespace lrfhss;

namespace {
const std::uint32_t kCase1Polys[] = {33, 45, 48, 51, 54, 57};
}

TEST_CASE("advance: zero output bit reduces to a pure shift") {
    for (std::uint32_t poly : kCase1Polys)
        CHECK(advance_lfsr(6, {6, poly, 6}) == 3);
}

TEST_CASE("advance: hand-evaluated step for state 3, polynomial 33") {
    CHECK(advance_lfsr(3, {6, 33, 6}) == 32);
}

TEST_CASE("advance: polynomial with only q_m set moves h_0 to the top") {
    CHECK(advance_lfsr(1, {6, 32, 1}) == 32);
}

TEST_CASE("advance rejects invalid states and configs") {
    const LfsrConfig cfg{6, 33, 6};
    CHECK_THROWS(advance_lfsr(0, cfg));
    CHECK_THROWS(advance_lfsr(64, cfg));
    CHECK_THROWS(advance_lfsr(1, LfsrConfig{6, 1, 1}));  // q_m clear
    CHECK_THROWS(advance_lfsr(1, LfsrConfig{6, 33, 0})); // zero seed
}

TEST_CASE("state sequences start at the seed and cycle") {
    const LfsrConfig cfg{6, 33, 6};
    CHECK(generate_state_sequence(cfg, 1) == std::vector<std::uint32_t>{6});
    CHECK(generate_state_sequence(cfg, 0).empty());

    const auto states = generate_state_sequence(cfg, 64);
    CHECK(states[63] == states[0]);

    const auto small = generate_state_sequence({5, 0x12, 1}, 31);
    std::set<std::uint32_t> distinct(small.begin(), small.end());
    CHECK(distinct.size() == 31);
    CHECK(distinct.count(0) == 0);
}

TEST_CASE("all six case-1 polynomials are maximal and visit every state") {
    for (std::uint32_t poly : kCase1Polys) {
        const LfsrConfig cfg{6, poly, 6};
        CHECK(measure_period(cfg) == 63);
        const auto states = generate_state_sequence(cfg, 63);
        std::set<std::uint32_t> seen(states.begin(), states.end());
        CHECK(seen.size() == 63);
        CHECK(*seen.begin() == 1);
        CHECK(*seen.rbegin() == 63);
    }
}

TEST_CASE("non-maximal polynomial yields a proper divisor of 63") {
    const int period = measure_period({6, 36, 1});
    CHECK(period == 9);
    CHECK(63 % period == 0);
}

TEST_CASE("order-5 polynomials used by the window construction are maximal") {
    CHECK(measure_period({5, 0x12, 1}) == 31);
    CHECK(measure_period({5, 0x14, 1}) == 31);
}

TEST_CASE("advance is a bijection on the nonzero states") {
    for (int m : {5, 6}) {
        const std::uint32_t poly = m == 5 ? 0x12 : 33;
        const LfsrConfig cfg{m, poly, 1};
        std::set<std::uint32_t> images;
        for (std::uint32_t s = 1; s < (1u << m); ++s)
            images.insert(advance_lfsr(s, cfg));
        CHECK(images.size() == (1u << m) - 1);
        CHECK(images.count(0) == 0);
    }
}

TEST_CASE("output bit stream is balanced over one period") {
    for (std::uint32_t poly : kCase1Polys) {
        const auto states = generate_state_sequence({6, poly, 6}, 63);
        const auto ones = std::count_if(states.begin(), states.end(),
                                        [](std::uint32_t s) { return s & 1u; });
        CHECK(ones == 32); // 2^{m-1} ones, 2^{m-1}-1 zeros
    }
}
