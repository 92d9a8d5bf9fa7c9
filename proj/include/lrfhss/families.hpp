#ifndef LRFHSS_FAMILIES_HPP
#define LRFHSS_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lrfhss/fhs.hpp"

namespace lrfhss {

// Per-case generator parameters of the vendor driver scheme: LFSR size,
// initial state, the primitive polynomial set, and the number of XOR seeds.
struct DriverCaseParams {
    int lfsr_size;
    std::uint32_t initial_state;
    std::vector<std::uint32_t> polynomials;
    int seed_count;
};

DriverCaseParams driver_case_params(int driver_case); // cases 1..5

// Driver family: for each (polynomial, seed) pair the LFSR state stream is
// XORed with the seed, values >= hop_range are omitted, and the first
// target_length survivors are kept, cycling the LFSR as needed. hop_range is
// the number of valid hop positions inside one grid (35 for the 280-channel
// EU plan).
FhsFamily build_driver_family(int driver_case, int hop_range, int target_length);

// Lempel-Greenberger family over GF(p), p = 2 only: sliding k-bit windows of
// a maximal-length LFSR bit stream, member v XORing v into each window.
// Yields p^k sequences of period p^n - 1 over p^k channels.
FhsFamily build_lempel_greenberger_family(int p, int k, int n,
                                          std::uint32_t polynomial);

enum class LiFanMode { two_ell, three_ell };

// Wide-gap base sequence: concatenation of the affine progressions
//   s_i = (i*d) mod l,  t_i = (i*(d+1)+1) mod l        (period 2l)
// plus u_i = (i*(d+2)+2) mod l for the 3l variant. Requires 1 < d < l/2 and
// l coprime to each multiplier.
FhSequence build_li_fan_base(int ell, int d, LiFanMode mode);

// Removes values >= max_channel, then splits into consecutive chunks of
// chunk_length, dropping the partial tail. The result is flat-OBW valued.
FhsFamily adapt_to_lr_fhss(const FhSequence& base, int max_channel,
                           int chunk_length);
FhsFamily adapt_to_lr_fhss(const std::vector<FhSequence>& bases,
                           int max_channel, int chunk_length);

FhsFamily merge_families(const std::vector<FhsFamily>& parts);

// sha256-derived family: sequence i, hop j takes the first four digest bytes
// of sha256(be32(i*2^16 + j)) as a big-endian word, reduced mod channel_count.
FhsFamily build_hash_family(int family_size, int length, int channel_count);

// ---------------------------------------------------------------------------
// Named family recipes for the 280-OBW / 8-grid EU plan.
//
// The two variants differ only in the discard threshold of the value filters:
//   simulation  — values stay strictly inside the simulator's channel space
//                 (driver hops < 35, li-fan OBWs < 280);
//   analysis    — the filters keep the boundary value as well (driver <= 35,
//                 li-fan <= 280), the form used for correlation analysis.
// Sizes and periods are identical between variants.
// ---------------------------------------------------------------------------
enum class FamilyVariant { simulation, analysis };

extern const std::vector<std::string> kStandardFamilyNames;

bool is_standard_family(const std::string& name);

// Builds one of: driver, lem-green, lem-green-2x, li-fan-2l, li-fan-2l-4x,
// li-fan-3l, li-fan-3l-4x, hash. sequence_length is the per-member hop count
// (31 reproduces the reference configuration).
FhsFamily build_named_family(const std::string& name, FamilyVariant variant,
                             int sequence_length = 31);

} // namespace lrfhss

#endif
