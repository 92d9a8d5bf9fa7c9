#ifndef LRFHSS_CHANNEL_HPP
#define LRFHSS_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "lrfhss/fhs.hpp"
#include "lrfhss/rng.hpp"

namespace lrfhss {

enum class CodingRate { cr1, cr2 }; // payload code rates 1/3 and 2/3

int header_replicas(CodingRate cr);      // 3 for CR1, 2 for CR2
int payload_bytes(CodingRate cr);        // 58 for CR1, 123 for CR2
int decode_threshold(int fragment_count, CodingRate cr); // ceil(F/3), ceil(2F/3)

struct SimulationConfig {
    int sim_slots = 912;
    int ocw_count = 7;
    int obw_count = 280;
    int grid_count = 8;
    int payload_fragments = 31;
    int fragment_slots = 6;
    int header_slots = 14; // must equal ceil(233 * fragment_slots / 102.4)
    CodingRate coding_rate = CodingRate::cr1;
    int node_count = 0;
    std::uint64_t rng_seed = 0;

    int frame_duration() const;
    void validate() const;
};

// One node's scheduled transmission with the hop OBWs already resolved.
struct FramePlan {
    int node_id = 0;
    int start_slot = 0;
    int ocw = 0;
    int grid = -1; // -1 for flat-OBW families
    int fhs_index = 0;
    CodingRate coding_rate = CodingRate::cr1;
    std::vector<Channel> hop_values; // one OBW per hop, headers first
};

// One header replica or payload fragment occupying a slot range on one cell.
struct FrameElement {
    int slot_begin = 0;
    int slot_len = 0;
    int ocw = 0;
    int obw = 0;
    bool is_header = false;
};

std::vector<FrameElement> frame_hop_layout(const FramePlan& plan,
                                           const SimulationConfig& config);

// Per-cell transmission counters indexed by (slot, ocw, obw).
class OccupancyGrid {
public:
    OccupancyGrid(int slots, int ocws, int obws);

    void add(int slot, int ocw, int obw) { ++cells_[index(slot, ocw, obw)]; }
    int at(int slot, int ocw, int obw) const { return cells_[index(slot, ocw, obw)]; }
    std::uint64_t total_mass() const;

private:
    std::size_t index(int slot, int ocw, int obw) const;
    int slots_, ocws_, obws_;
    std::vector<std::uint32_t> cells_;
};

// N frame plans: start slot uniform over the positions where the frame fits,
// OCW / FHS index / grid all uniform. Hop h reuses the sequence cyclically.
std::vector<FramePlan> schedule_transmissions(const SimulationConfig& config,
                                              const FhsFamily& family,
                                              Rng& rng);

// Marks every element of every frame. Frames the gateway later discards are
// included: they occupy spectrum regardless of gateway state.
OccupancyGrid build_occupancy(const std::vector<FramePlan>& plans,
                              const SimulationConfig& config);

// Number of the element's slots whose cell holds two or more transmissions.
int count_collided_slots(const FrameElement& element, const OccupancyGrid& grid);

// Reduced collision model: 31 single-slot fragments per frame, no headers, a
// 124-slot horizon, one 280-channel space, no decoding limit. Returns the
// fraction of (slot, channel) cells carrying two or more fragments.
double preliminary_collision_rate(int node_count, const FhsFamily& family,
                                  std::uint64_t seed);

// Schedule dump for debugging and replay.
std::string schedule_csv_header();
std::string schedule_csv_row(const FramePlan& plan);

} // namespace lrfhss

#endif
