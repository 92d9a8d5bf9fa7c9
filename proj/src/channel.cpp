#include "lrfhss/channel.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lrfhss {

int header_replicas(CodingRate cr) { return cr == CodingRate::cr1 ? 3 : 2; }

int payload_bytes(CodingRate cr) { return cr == CodingRate::cr1 ? 58 : 123; }

int decode_threshold(int fragment_count, CodingRate cr) {
    if (fragment_count < 1)
        throw std::invalid_argument("decode threshold: need >= 1 fragment");
    if (cr == CodingRate::cr1)
        return (fragment_count + 2) / 3;       // ceil(F/3)
    return (2 * fragment_count + 2) / 3;       // ceil(2F/3)
}

int SimulationConfig::frame_duration() const {
    return header_replicas(coding_rate) * header_slots +
           payload_fragments * fragment_slots;
}

void SimulationConfig::validate() const {
    if (sim_slots < 1 || ocw_count < 1 || obw_count < 1 || grid_count < 1)
        throw std::invalid_argument("config: channel dimensions must be "
                                    "positive");
    if (payload_fragments < 0 || fragment_slots < 1)
        throw std::invalid_argument("config: bad fragment geometry");
    // headers span ceil(233 g / 102.4) slots at fragment granularity g
    const int expected_hdr =
        static_cast<int>((2330LL * fragment_slots + 1023) / 1024);
    if (header_slots != expected_hdr)
        throw std::invalid_argument("config: header_slots must be " +
                                    std::to_string(expected_hdr) +
                                    " at this granularity");
    if (frame_duration() > sim_slots)
        throw std::invalid_argument("config: frame does not fit in the "
                                    "horizon");
    if (node_count < 0)
        throw std::invalid_argument("config: negative node count");
}

std::vector<FrameElement> frame_hop_layout(const FramePlan& plan,
                                           const SimulationConfig& config) {
    const int replicas = header_replicas(plan.coding_rate);
    std::vector<FrameElement> elements;
    elements.reserve(plan.hop_values.size());
    int at = plan.start_slot;
    for (std::size_t h = 0; h < plan.hop_values.size(); ++h) {
        const bool is_header = static_cast<int>(h) < replicas;
        const int len = is_header ? config.header_slots : config.fragment_slots;
        elements.push_back({at, len, plan.ocw, plan.hop_values[h], is_header});
        at += len;
    }
    return elements;
}

OccupancyGrid::OccupancyGrid(int slots, int ocws, int obws)
    : slots_(slots), ocws_(ocws), obws_(obws),
      cells_(static_cast<std::size_t>(slots) * ocws * obws, 0) {}

std::size_t OccupancyGrid::index(int slot, int ocw, int obw) const {
    if (slot < 0 || slot >= slots_ || ocw < 0 || ocw >= ocws_ || obw < 0 ||
        obw >= obws_)
        throw std::out_of_range("occupancy: cell out of range");
    return (static_cast<std::size_t>(slot) * ocws_ + ocw) * obws_ + obw;
}

std::uint64_t OccupancyGrid::total_mass() const {
    return std::accumulate(cells_.begin(), cells_.end(), std::uint64_t{0});
}

std::vector<FramePlan> schedule_transmissions(const SimulationConfig& config,
                                              const FhsFamily& family,
                                              Rng& rng) {
    config.validate();
    family.validate();
    const int max_obw = family.grid_based
                            ? (config.grid_count - 1) +
                                  config.grid_count * (family.channel_count() - 1)
                            : family.channel_count() - 1;
    if (max_obw >= config.obw_count)
        throw std::invalid_argument("schedule: family '" + family.name +
                                    "' does not fit the OBW space");

    const int duration = config.frame_duration();
    const int replicas = header_replicas(config.coding_rate);
    const int hops = replicas + config.payload_fragments;
    const int period = static_cast<int>(family.period());

    std::vector<FramePlan> plans;
    plans.reserve(config.node_count);
    for (int node = 0; node < config.node_count; ++node) {
        FramePlan plan;
        plan.node_id = node;
        plan.coding_rate = config.coding_rate;
        plan.start_slot =
            static_cast<int>(rng.below(config.sim_slots - duration + 1));
        plan.ocw = static_cast<int>(rng.below(config.ocw_count));
        plan.fhs_index = static_cast<int>(rng.below(
            static_cast<std::uint32_t>(family.size())));
        if (family.grid_based)
            plan.grid = static_cast<int>(rng.below(config.grid_count));
        const FhSequence& seq = family.sequences[plan.fhs_index];
        plan.hop_values.reserve(hops);
        for (int h = 0; h < hops; ++h) {
            const Channel v = seq.values[h % period];
            const int obw = family.grid_based
                                ? map_grid_hop_to_obw(plan.grid, v,
                                                      config.grid_count,
                                                      family.channel_count())
                                : v;
            plan.hop_values.push_back(static_cast<Channel>(obw));
        }
        plans.push_back(std::move(plan));
    }
    return plans;
}

OccupancyGrid build_occupancy(const std::vector<FramePlan>& plans,
                              const SimulationConfig& config) {
    OccupancyGrid grid(config.sim_slots, config.ocw_count, config.obw_count);
    for (const FramePlan& plan : plans)
        for (const FrameElement& el : frame_hop_layout(plan, config))
            for (int s = el.slot_begin; s < el.slot_begin + el.slot_len; ++s)
                grid.add(s, el.ocw, el.obw);
    return grid;
}

int count_collided_slots(const FrameElement& element,
                         const OccupancyGrid& grid) {
    int collided = 0;
    for (int s = element.slot_begin; s < element.slot_begin + element.slot_len;
         ++s)
        collided += grid.at(s, element.ocw, element.obw) >= 2;
    return collided;
}

double preliminary_collision_rate(int node_count, const FhsFamily& family,
                                  std::uint64_t seed) {
    family.validate();
    constexpr int kHorizon = 124;
    constexpr int kFrame = 31;
    constexpr int kGrids = 8;
    constexpr int channels = 280;
    const int family_span = family.grid_based
                                ? kGrids * family.channel_count()
                                : family.channel_count();
    if (family_span > channels)
        throw std::invalid_argument("preliminary model: family '" +
                                    family.name + "' exceeds 280 channels");

    Rng rng(seed);
    std::vector<std::uint32_t> occ(
        static_cast<std::size_t>(kHorizon) * channels, 0);
    const int period = static_cast<int>(family.period());
    for (int node = 0; node < node_count; ++node) {
        const int start = static_cast<int>(rng.below(kHorizon - kFrame + 1));
        const int idx =
            static_cast<int>(rng.below(static_cast<std::uint32_t>(family.size())));
        const int grid =
            family.grid_based ? static_cast<int>(rng.below(kGrids)) : 0;
        const FhSequence& seq = family.sequences[idx];
        for (int h = 0; h < kFrame; ++h) {
            const int ch = family.grid_based
                               ? grid + kGrids * seq.values[h % period]
                               : seq.values[h % period];
            ++occ[static_cast<std::size_t>(start + h) * channels + ch];
        }
    }
    std::uint64_t collided_cells = 0;
    for (std::uint32_t c : occ)
        collided_cells += c >= 2;
    return static_cast<double>(collided_cells) /
           (static_cast<double>(kHorizon) * channels);
}

std::string schedule_csv_header() {
    return "node,start_slot,ocw,grid,fhs_index";
}

std::string schedule_csv_row(const FramePlan& plan) {
    std::ostringstream out;
    out << plan.node_id << ',' << plan.start_slot << ',' << plan.ocw << ','
        << plan.grid << ',' << plan.fhs_index;
    return out.str();
}

} // namespace lrfhss
