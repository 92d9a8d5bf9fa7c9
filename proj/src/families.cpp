#include "lrfhss/families.hpp"

#include <openssl/sha.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lrfhss/lfsr.hpp"

namespace lrfhss {

DriverCaseParams driver_case_params(int driver_case) {
    switch (driver_case) {
    case 1:
        return {6, 6, {33, 45, 48, 51, 54, 57}, 64};
    case 2:
        return {6, 56, {33, 45, 48, 51, 54, 57}, 64};
    case 3:
        return {7, 6, {65, 68, 71, 72}, 128};
    case 4:
        return {8, 6, {142, 149}, 256};
    case 5:
        return {9, 6, {264}, 512};
    default:
        throw std::invalid_argument("driver: case must be 1..5");
    }
}

FhsFamily build_driver_family(int driver_case, int hop_range, int target_length) {
    if (hop_range < 1 || target_length < 1)
        throw std::invalid_argument("driver: hop_range and target_length must "
                                    "be positive");
    const DriverCaseParams params = driver_case_params(driver_case);
    const int period = (1 << params.lfsr_size) - 1;

    FhsFamily fam;
    fam.name = "driver";
    fam.grid_based = true;
    fam.sequences.reserve(params.polynomials.size() * params.seed_count);
    for (std::uint32_t poly : params.polynomials) {
        const LfsrConfig cfg{params.lfsr_size, poly, params.initial_state};
        for (int seed = 0; seed < params.seed_count; ++seed) {
            FhSequence seq;
            seq.channel_count = static_cast<Channel>(hop_range);
            seq.values.reserve(target_length);
            std::uint32_t state = cfg.initial_state;
            int taken_this_cycle = 0, steps = 0;
            while (static_cast<int>(seq.values.size()) < target_length) {
                const std::uint32_t v = state ^ static_cast<std::uint32_t>(seed);
                if (v < static_cast<std::uint32_t>(hop_range)) {
                    seq.values.push_back(static_cast<Channel>(v));
                    ++taken_this_cycle;
                }
                state = advance_lfsr(state, cfg);
                if (++steps % period == 0) {
                    if (taken_this_cycle == 0)
                        throw std::runtime_error("driver: no hop value below "
                                                 "the range survives a full "
                                                 "LFSR cycle");
                    taken_this_cycle = 0;
                }
            }
            fam.sequences.push_back(std::move(seq));
        }
    }
    fam.validate();
    return fam;
}

FhsFamily build_lempel_greenberger_family(int p, int k, int n,
                                          std::uint32_t polynomial) {
    if (p != 2)
        throw std::invalid_argument("lempel-greenberger: only p = 2 is "
                                    "supported");
    if (k < 1 || k > n)
        throw std::invalid_argument("lempel-greenberger: need 1 <= k <= n");
    const LfsrConfig cfg{n, polynomial, 1};
    const int period = (1 << n) - 1;
    if (measure_period(cfg) != period)
        throw std::invalid_argument("lempel-greenberger: polynomial is not "
                                    "primitive (period check failed)");

    const std::vector<std::uint32_t> states =
        generate_state_sequence(cfg, static_cast<std::size_t>(period));
    std::vector<int> bits(period);
    for (int j = 0; j < period; ++j)
        bits[j] = static_cast<int>(states[j] & 1u);

    // sigma maps each sliding k-bit window to an integer, LSB-first weights
    std::vector<Channel> window(period);
    for (int j = 0; j < period; ++j) {
        int w = 0;
        for (int i = 0; i < k; ++i)
            w |= bits[(j + i) % period] << i;
        window[j] = static_cast<Channel>(w);
    }

    FhsFamily fam;
    fam.name = "lem-green";
    fam.grid_based = true;
    const int members = 1 << k;
    fam.sequences.reserve(members);
    for (int v = 0; v < members; ++v) {
        FhSequence seq;
        seq.channel_count = static_cast<Channel>(members);
        seq.values.reserve(period);
        for (int j = 0; j < period; ++j)
            seq.values.push_back(static_cast<Channel>(window[j] ^ v));
        fam.sequences.push_back(std::move(seq));
    }
    fam.validate();
    return fam;
}

FhSequence build_li_fan_base(int ell, int d, LiFanMode mode) {
    if (!(1 < d && 2 * d < ell))
        throw std::invalid_argument("li-fan: need 1 < d < l/2");
    const int multipliers = mode == LiFanMode::two_ell ? 2 : 3;
    for (int i = 0; i < multipliers; ++i)
        if (std::gcd(ell, d + i) != 1)
            throw std::invalid_argument(
                "li-fan: l must be coprime to " + std::to_string(d + i));
    FhSequence seq;
    seq.channel_count = static_cast<Channel>(ell);
    seq.values.reserve(static_cast<std::size_t>(multipliers) * ell);
    for (int sub = 0; sub < multipliers; ++sub) {
        // subsequence `sub` is the progression (i*(d+sub) + sub) mod l
        const long long mult = d + sub;
        for (int i = 0; i < ell; ++i)
            seq.values.push_back(
                static_cast<Channel>((i * mult + sub) % ell));
    }
    return seq;
}

FhsFamily adapt_to_lr_fhss(const FhSequence& base, int max_channel,
                           int chunk_length) {
    return adapt_to_lr_fhss(std::vector<FhSequence>{base}, max_channel,
                            chunk_length);
}

FhsFamily adapt_to_lr_fhss(const std::vector<FhSequence>& bases,
                           int max_channel, int chunk_length) {
    if (max_channel < 1 || chunk_length < 1)
        throw std::invalid_argument("adapt: max_channel and chunk_length must "
                                    "be positive");
    FhsFamily fam;
    fam.name = "li-fan";
    fam.grid_based = false;
    for (const FhSequence& base : bases) {
        std::vector<Channel> kept;
        kept.reserve(base.values.size());
        for (Channel v : base.values)
            if (v < static_cast<Channel>(max_channel))
                kept.push_back(v);
        for (std::size_t at = 0; at + chunk_length <= kept.size();
             at += chunk_length) {
            FhSequence seq;
            seq.channel_count = static_cast<Channel>(max_channel);
            seq.values.assign(kept.begin() + at,
                              kept.begin() + at + chunk_length);
            fam.sequences.push_back(std::move(seq));
        }
    }
    if (fam.sequences.empty())
        throw std::runtime_error("adapt: no full chunk survives the filter");
    fam.validate();
    return fam;
}

FhsFamily merge_families(const std::vector<FhsFamily>& parts) {
    if (parts.empty())
        throw std::invalid_argument("merge: no parts");
    FhsFamily fam;
    fam.name = parts.front().name;
    fam.grid_based = parts.front().grid_based;
    for (const FhsFamily& part : parts) {
        part.validate();
        if (part.channel_count() != parts.front().channel_count() ||
            part.period() != parts.front().period())
            throw std::invalid_argument("merge: parts disagree on alphabet or "
                                        "period");
        fam.sequences.insert(fam.sequences.end(), part.sequences.begin(),
                             part.sequences.end());
    }
    fam.validate();
    return fam;
}

FhsFamily build_hash_family(int family_size, int length, int channel_count) {
    if (family_size < 1 || length < 1 || channel_count < 1)
        throw std::invalid_argument("hash family: parameters must be positive");
    FhsFamily fam;
    fam.name = "hash";
    fam.grid_based = true;
    fam.sequences.reserve(family_size);
    for (int i = 0; i < family_size; ++i) {
        FhSequence seq;
        seq.channel_count = static_cast<Channel>(channel_count);
        seq.values.reserve(length);
        for (int j = 0; j < length; ++j) {
            const std::uint32_t msg =
                (static_cast<std::uint32_t>(i) << 16) +
                static_cast<std::uint32_t>(j);
            unsigned char input[4] = {
                static_cast<unsigned char>(msg >> 24),
                static_cast<unsigned char>(msg >> 16),
                static_cast<unsigned char>(msg >> 8),
                static_cast<unsigned char>(msg),
            };
            unsigned char digest[SHA256_DIGEST_LENGTH];
            SHA256(input, sizeof input, digest);
            const std::uint32_t word =
                (static_cast<std::uint32_t>(digest[0]) << 24) |
                (static_cast<std::uint32_t>(digest[1]) << 16) |
                (static_cast<std::uint32_t>(digest[2]) << 8) |
                static_cast<std::uint32_t>(digest[3]);
            seq.values.push_back(static_cast<Channel>(word % channel_count));
        }
        fam.sequences.push_back(std::move(seq));
    }
    fam.validate();
    return fam;
}

// ---------------------------------------------------------------------------
// Named recipes (280-OBW / 8-grid plan, 35 hop positions per grid)
// ---------------------------------------------------------------------------

const std::vector<std::string> kStandardFamilyNames = {
    "driver",       "lem-green",    "lem-green-2x", "li-fan-2l",
    "li-fan-2l-4x", "li-fan-3l",    "li-fan-3l-4x", "hash",
};

bool is_standard_family(const std::string& name) {
    return std::find(kStandardFamilyNames.begin(), kStandardFamilyNames.end(),
                     name) != kStandardFamilyNames.end();
}

namespace {

constexpr int kObwCount = 280;
constexpr int kHopRange = 35;
constexpr std::uint32_t kLemGreenPolyA = 0x12;
constexpr std::uint32_t kLemGreenPolyB = 0x14;
const int kLiFanEll[] = {277, 281, 283, 287};
constexpr int kLiFanD = 8;

FhsFamily build_li_fan(LiFanMode mode, bool merged_4x, int max_channel,
                       int chunk_length, const std::string& name) {
    std::vector<FhSequence> bases;
    if (merged_4x) {
        for (int ell : kLiFanEll)
            bases.push_back(build_li_fan_base(ell, kLiFanD, mode));
    } else {
        bases.push_back(build_li_fan_base(281, kLiFanD, mode));
    }
    FhsFamily fam = adapt_to_lr_fhss(bases, max_channel, chunk_length);
    fam.name = name;
    return fam;
}

} // namespace

FhsFamily build_named_family(const std::string& name, FamilyVariant variant,
                             int sequence_length) {
    // The analysis variant keeps the boundary value the simulation variant
    // filters out (driver hop 35, li-fan OBW 280).
    const int extra = variant == FamilyVariant::analysis ? 1 : 0;
    if (name == "driver")
        return build_driver_family(1, kHopRange + extra, sequence_length);
    if (name == "hash")
        return build_hash_family(384, sequence_length, kHopRange);
    if (name == "lem-green" || name == "lem-green-2x") {
        FhsFamily a = build_lempel_greenberger_family(2, 5, 5, kLemGreenPolyA);
        if (name == "lem-green")
            return a;
        FhsFamily b = build_lempel_greenberger_family(2, 5, 5, kLemGreenPolyB);
        FhsFamily merged = merge_families({a, b});
        merged.name = "lem-green-2x";
        return merged;
    }
    if (name == "li-fan-2l" || name == "li-fan-2l-4x" || name == "li-fan-3l" ||
        name == "li-fan-3l-4x") {
        const LiFanMode mode = name.find("2l") != std::string::npos
                                   ? LiFanMode::two_ell
                                   : LiFanMode::three_ell;
        const bool merged = name.find("4x") != std::string::npos;
        return build_li_fan(mode, merged, kObwCount + extra, sequence_length,
                            name);
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

} // namespace lrfhss
