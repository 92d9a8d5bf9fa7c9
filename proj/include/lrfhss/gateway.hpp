#ifndef LRFHSS_GATEWAY_HPP
#define LRFHSS_GATEWAY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrfhss/channel.hpp"

namespace lrfhss {

struct StrategyConfig {
    bool early_decode = false;
    bool early_drop = false;
    bool early_header_drop = false;
    int header_tolerance_slots = 0;           // a replica fails when its
                                              // collided slots exceed this
    std::optional<int> demodulator_count = {}; // empty = unlimited

    std::string fingerprint() const; // stable key for seeds and CSV fields
};

enum class OutcomeKind { discarded, header_dropped, collided, payload_decoded };

struct FrameOutcome {
    OutcomeKind kind = OutcomeKind::discarded;
    bool packet_decoded = false;   // payload decoded with >= 1 clean replica
    long release_slot = -1;        // slot at which the demodulator frees
};

// Resolves one assigned frame against the occupancy grid.
//
// A header replica fails when its collided-slot count exceeds the tolerance;
// a fragment fails on any collided slot. Early Header Drop is evaluated at
// the end of the last replica, Early Decode / Early Drop at each fragment
// boundary (decode checked first: a decodable payload is never dropped).
// Without early triggers the demodulator frees at frame end.
FrameOutcome evaluate_frame(const FramePlan& plan, const OccupancyGrid& occupancy,
                            const SimulationConfig& config,
                            const StrategyConfig& strategy);

struct SimMetrics {
    int sent = 0;
    int decoded_payloads = 0;
    int decoded_packets = 0;
    int collided = 0;
    int header_dropped = 0;
    int discarded = 0;
    std::int64_t data_sent_bytes = 0;
    std::int64_t data_decoded_bytes = 0;

    // Decimal kilobytes, truncated (1 kB = 1000 B).
    std::int64_t data_sent_kb() const { return data_sent_bytes / 1000; }
    std::int64_t data_decoded_kb() const { return data_decoded_bytes / 1000; }
};

// Full run: schedule, occupancy, chronological demodulator allocation.
// Releases at slot t free their demodulator before assignments at slot t;
// simultaneous starts are assigned in ascending node id; a frame that finds
// no free demodulator is discarded (it still radiates).
SimMetrics run_simulation(const SimulationConfig& config, const FhsFamily& family,
                          const StrategyConfig& strategy);

struct CampaignCell {
    std::string family;
    CodingRate cr = CodingRate::cr1;
    StrategyConfig strategy;
    int nodes = 0;
    int rep = 0;
    SimMetrics metrics;
};

struct CampaignRequest {
    SimulationConfig base;
    std::vector<std::string> family_names;      // standard recipe names
    std::vector<CodingRate> coding_rates;
    std::vector<StrategyConfig> strategies;
    std::vector<int> node_sweep;
    int repetitions = 10;
    std::uint64_t master_seed = 0;
    int threads = 0; // 0 = hardware concurrency
};

// Runs every (family, cr, strategy, nodes, rep) cell with an independently
// derived seed. Cells execute in parallel; the returned order and every
// metric are independent of the interleaving.
std::vector<CampaignCell> run_campaign(const CampaignRequest& request);

std::string campaign_csv_header();
std::string campaign_csv_row(const CampaignCell& cell);

} // namespace lrfhss

#endif
