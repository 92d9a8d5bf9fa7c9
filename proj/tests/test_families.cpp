#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "lrfhss/correlation.hpp"
#include "lrfhss/families.hpp"
#include "lrfhss/lfsr.hpp"

using namespace lrfhss;

TEST_CASE("driver family: case-1 shape") {
    const FhsFamily fam = build_driver_family(1, 35, 31);
    CHECK(fam.size() == 384);
    CHECK(fam.period() == 31);
    CHECK(fam.grid_based);
    for (const FhSequence& s : fam.sequences)
        CHECK(*std::max_element(s.values.begin(), s.values.end()) < 35);
}

TEST_CASE("driver family: seed 0 is the raw filtered state stream") {
    const FhsFamily fam = build_driver_family(1, 35, 31);
    // sequence 0 is polynomial 33, seed 0
    const auto states = generate_state_sequence({6, 33, 6}, 63);
    std::vector<Channel> expect;
    for (std::uint32_t s : states)
        if (s < 35 && expect.size() < 31)
            expect.push_back(static_cast<Channel>(s));
    CHECK(fam.sequences[0].values == expect);
}

TEST_CASE("driver family: deterministic and extendable past one period") {
    const FhsFamily a = build_driver_family(1, 35, 86);
    const FhsFamily b = build_driver_family(1, 35, 86);
    CHECK(a.sequences[100].values == b.sequences[100].values);
    CHECK(a.period() == 86);
    // the first 31 hops of the length-86 build equal the length-31 build
    const FhsFamily short_fam = build_driver_family(1, 35, 31);
    for (std::size_t i = 0; i < a.size(); i += 37)
        CHECK(std::equal(short_fam.sequences[i].values.begin(),
                         short_fam.sequences[i].values.end(),
                         a.sequences[i].values.begin()));
}

TEST_CASE("driver family: unreachable hop range fails loudly") {
    CHECK_THROWS(build_driver_family(1, 1, 31));
    CHECK_THROWS(build_driver_family(0, 35, 31));
    CHECK_THROWS(build_driver_family(6, 35, 31));
}

TEST_CASE("driver generator cases are parameterized up to 9 registers") {
    CHECK(driver_case_params(2).initial_state == 56);
    const DriverCaseParams c3 = driver_case_params(3);
    CHECK(c3.lfsr_size == 7);
    CHECK(c3.polynomials == std::vector<std::uint32_t>{65, 68, 71, 72});
    CHECK(c3.seed_count == 128);
    CHECK(driver_case_params(5).lfsr_size == 9);
    // case 3 polynomials are maximal under the same bit convention
    for (std::uint32_t poly : c3.polynomials)
        CHECK(measure_period({7, poly, 6}) == 127);
}

TEST_CASE("lempel-greenberger family: 32 sequences of length 31") {
    const FhsFamily fam = build_lempel_greenberger_family(2, 5, 5, 0x12);
    CHECK(fam.size() == 32);
    CHECK(fam.period() == 31);
    CHECK(fam.channel_count() == 32);

    // member 0 is the plain window sequence
    const auto states = generate_state_sequence({5, 0x12, 1}, 31);
    for (int j = 0; j < 31; ++j) {
        int w = 0;
        for (int i = 0; i < 5; ++i)
            w |= static_cast<int>(states[(j + i) % 31] & 1u) << i;
        CHECK(fam.sequences[0].values[j] == w);
    }
    // member v is member 0 XOR v
    CHECK(fam.sequences[5].values[7] == (fam.sequences[0].values[7] ^ 5));
}

TEST_CASE("lempel-greenberger family: pair bound holds by brute force") {
    const FhsFamily fam = build_lempel_greenberger_family(2, 5, 5, 0x12);
    for (std::size_t a = 0; a < fam.size(); ++a) {
        const int ac_a = autocorrelation_stats(fam.sequences[a]).max;
        for (std::size_t b = a + 1; b < fam.size(); ++b) {
            const int ac_b = autocorrelation_stats(fam.sequences[b]).max;
            const int cc =
                crosscorrelation_stats(fam.sequences[a], fam.sequences[b]).max;
            CHECK(std::max({ac_a, ac_b, cc}) >= 1); // p^{n-k} = 1
        }
    }
}

TEST_CASE("lempel-greenberger family rejects bad parameters") {
    CHECK_THROWS(build_lempel_greenberger_family(3, 5, 5, 0x12)); // p != 2
    CHECK_THROWS(build_lempel_greenberger_family(2, 6, 5, 0x12)); // k > n
    CHECK_THROWS(build_lempel_greenberger_family(2, 5, 5, 0x10)); // reducible
}

TEST_CASE("li-fan base: toy instance evaluates the two progressions") {
    const FhSequence toy = build_li_fan_base(7, 2, LiFanMode::two_ell);
    const std::vector<Channel> expect = {0, 2, 4, 6, 1, 3, 5,
                                         1, 4, 0, 3, 6, 2, 5};
    CHECK(toy.values == expect);
}

TEST_CASE("li-fan base: every value appears once per subsequence") {
    const FhSequence base = build_li_fan_base(281, 8, LiFanMode::two_ell);
    CHECK(base.period() == 562);
    std::map<Channel, int> counts;
    for (Channel v : base.values)
        ++counts[v];
    CHECK(counts.size() == 281);
    for (const auto& [v, c] : counts)
        CHECK(c == 2);

    const FhSequence base3 = build_li_fan_base(281, 8, LiFanMode::three_ell);
    CHECK(base3.period() == 843);
}

TEST_CASE("li-fan base rejects parameter violations") {
    CHECK_THROWS(build_li_fan_base(8, 2, LiFanMode::two_ell));  // gcd(8,2)=2
    CHECK_THROWS(build_li_fan_base(7, 1, LiFanMode::two_ell));  // d <= 1
    CHECK_THROWS(build_li_fan_base(7, 4, LiFanMode::two_ell));  // d >= l/2
    CHECK_THROWS(build_li_fan_base(25, 8, LiFanMode::three_ell)); // gcd(25,10)
}

TEST_CASE("adapt: filtering, chunking and the published family sizes") {
    const FhSequence base = build_li_fan_base(281, 8, LiFanMode::two_ell);
    const FhsFamily fam = adapt_to_lr_fhss(base, 280, 31);
    CHECK(fam.size() == 18);
    CHECK(fam.period() == 31);
    for (const FhSequence& s : fam.sequences)
        for (Channel v : s.values)
            CHECK(v < 280);

    FhsFamily exact = adapt_to_lr_fhss(
        FhSequence{std::vector<Channel>(62, 5), 280}, 280, 31);
    CHECK(exact.size() == 2);

    CHECK_THROWS(adapt_to_lr_fhss(FhSequence{{5, 6, 7}, 280}, 5, 2));
}

TEST_CASE("merged li-fan families hit the published sizes") {
    for (FamilyVariant variant :
         {FamilyVariant::simulation, FamilyVariant::analysis}) {
        CHECK(build_named_family("li-fan-2l", variant).size() == 18);
        CHECK(build_named_family("li-fan-2l-4x", variant).size() == 71);
        CHECK(build_named_family("li-fan-3l", variant).size() == 27);
        CHECK(build_named_family("li-fan-3l-4x", variant).size() == 107);
    }
}

TEST_CASE("merge: size additivity, identity, and mismatch rejection") {
    const FhsFamily a = build_lempel_greenberger_family(2, 5, 5, 0x12);
    const FhsFamily b = build_lempel_greenberger_family(2, 5, 5, 0x14);
    CHECK(merge_families({a, b}).size() == 64);
    CHECK(merge_families({a}).sequences == a.sequences);

    const FhsFamily c = build_named_family("li-fan-2l", FamilyVariant::simulation);
    CHECK_THROWS(merge_families({a, c}));
}

TEST_CASE("hash family: shape, determinism and frozen digest values") {
    const FhsFamily fam = build_hash_family(384, 31, 35);
    CHECK(fam.size() == 384);
    CHECK(fam.period() == 31);
    CHECK(fam.sequences[0].values[0] == 0);
    CHECK(fam.sequences[0].values[1] == 17);
    CHECK(fam.sequences[5].values[7] == 8);
    CHECK(fam.sequences[383].values[30] == 6);
    CHECK(build_hash_family(384, 31, 35).sequences == fam.sequences);
}

TEST_CASE("grid-to-OBW map reproduces the interleaved grid layout") {
    CHECK(map_grid_hop_to_obw(0, 2, 8, 35) == 16);
    CHECK(map_grid_hop_to_obw(0, 0, 8, 35) == 0);
    CHECK(map_grid_hop_to_obw(7, 34, 8, 35) == 279);
    CHECK_THROWS(map_grid_hop_to_obw(8, 0, 8, 35));
    CHECK_THROWS(map_grid_hop_to_obw(0, 35, 8, 35));
}

TEST_CASE("spread_over_grids assigns member i to grid i mod 8") {
    const FhsFamily fam = build_driver_family(1, 35, 31);
    const FhsFamily spread = spread_over_grids(fam, 8);
    CHECK_FALSE(spread.grid_based);
    CHECK(spread.channel_count() == 280);
    CHECK(spread.sequences[9].values[0] ==
          1 + 8 * fam.sequences[9].values[0]);
    CHECK_THROWS(spread_over_grids(spread, 8)); // not grid based any more
}

TEST_CASE("analysis variant keeps the boundary value the simulator drops") {
    const FhsFamily sim = build_named_family("driver", FamilyVariant::simulation);
    const FhsFamily ana = build_named_family("driver", FamilyVariant::analysis);
    Channel sim_max = 0, ana_max = 0;
    for (const FhSequence& s : sim.sequences)
        sim_max = std::max(sim_max, *std::max_element(s.values.begin(),
                                                      s.values.end()));
    for (const FhSequence& s : ana.sequences)
        ana_max = std::max(ana_max, *std::max_element(s.values.begin(),
                                                      s.values.end()));
    CHECK(sim_max == 34);
    CHECK(ana_max == 35);

    const FhsFamily lifan_ana =
        build_named_family("li-fan-2l", FamilyVariant::analysis);
    bool has_280 = false;
    for (const FhSequence& s : lifan_ana.sequences)
        has_280 |= std::count(s.values.begin(), s.values.end(), 280) > 0;
    CHECK(has_280);
}

TEST_CASE("family text export carries the header line") {
    const FhsFamily fam = build_named_family("li-fan-2l", FamilyVariant::simulation);
    std::ostringstream out;
    export_family(fam, out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "# name=li-fan-2l channels=280 period=31 grid_based=0");
    int rows = 0;
    while (std::getline(in, line))
        ++rows;
    CHECK(rows == 18);
}

TEST_CASE("unknown family names are rejected") {
    CHECK_THROWS(build_named_family("li-fan-5l", FamilyVariant::simulation));
    CHECK_FALSE(is_standard_family("nope"));
    CHECK(is_standard_family("lem-green-2x"));
}
