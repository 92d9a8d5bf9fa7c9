#include "lrfhss/gateway.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lrfhss/families.hpp"

namespace lrfhss {

std::string StrategyConfig::fingerprint() const {
    std::ostringstream out;
    out << "ed" << early_decode << "-dr" << early_drop << "-hd"
        << early_header_drop << "-tol" << header_tolerance_slots << "-p";
    if (demodulator_count)
        out << *demodulator_count;
    else
        out << "inf";
    return out.str();
}

FrameOutcome evaluate_frame(const FramePlan& plan,
                            const OccupancyGrid& occupancy,
                            const SimulationConfig& config,
                            const StrategyConfig& strategy) {
    if (strategy.header_tolerance_slots < 0 ||
        strategy.header_tolerance_slots >= config.header_slots)
        throw std::invalid_argument("strategy: header tolerance must be in "
                                    "[0, header_slots)");

    const std::vector<FrameElement> elements = frame_hop_layout(plan, config);
    const int replicas = header_replicas(plan.coding_rate);
    const int fragments = config.payload_fragments;
    const int threshold = decode_threshold(std::max(fragments, 1),
                                           plan.coding_rate);

    int headers_ok = 0;
    for (int r = 0; r < replicas; ++r)
        headers_ok += count_collided_slots(elements[r], occupancy) <=
                      strategy.header_tolerance_slots;
    const bool any_header = headers_ok > 0;
    const long header_end =
        plan.start_slot + static_cast<long>(replicas) * config.header_slots;

    if (strategy.early_header_drop && !any_header)
        return {OutcomeKind::header_dropped, false, header_end};

    // fragment outcomes become known one element end at a time
    int ok = 0, failed = 0;
    for (int f = 0; f < fragments; ++f) {
        const bool clean =
            count_collided_slots(elements[replicas + f], occupancy) == 0;
        ok += clean;
        failed += !clean;
        const long frag_end = plan.start_slot +
                              static_cast<long>(replicas) * config.header_slots +
                              static_cast<long>(f + 1) * config.fragment_slots;
        if (strategy.early_decode && ok >= threshold)
            return {OutcomeKind::payload_decoded, any_header, frag_end};
        if (strategy.early_drop && failed > fragments - threshold)
            return {OutcomeKind::collided, false, frag_end};
    }

    const long frame_end = plan.start_slot + config.frame_duration();
    if (fragments > 0 && ok >= threshold)
        return {OutcomeKind::payload_decoded, any_header, frame_end};
    return {OutcomeKind::collided, false, frame_end};
}

SimMetrics run_simulation(const SimulationConfig& config,
                          const FhsFamily& family,
                          const StrategyConfig& strategy) {
    config.validate();
    Rng rng(config.rng_seed);
    const std::vector<FramePlan> plans =
        schedule_transmissions(config, family, rng);
    const OccupancyGrid occupancy = build_occupancy(plans, config);

    // arrival order: start slot, then node id
    std::vector<int> order(plans.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return plans[a].start_slot < plans[b].start_slot;
    });

    SimMetrics metrics;
    metrics.sent = config.node_count;
    metrics.data_sent_bytes = static_cast<std::int64_t>(config.node_count) *
                              payload_bytes(config.coding_rate);

    long free_demods = strategy.demodulator_count
                           ? static_cast<long>(*strategy.demodulator_count)
                           : -1; // -1 = unlimited
    std::priority_queue<long, std::vector<long>, std::greater<>> releases;

    for (int idx : order) {
        const FramePlan& plan = plans[idx];
        if (free_demods >= 0) {
            while (!releases.empty() && releases.top() <= plan.start_slot) {
                releases.pop();
                ++free_demods;
            }
            if (free_demods == 0) {
                ++metrics.discarded;
                continue;
            }
            --free_demods;
        }
        const FrameOutcome outcome =
            evaluate_frame(plan, occupancy, config, strategy);
        if (free_demods >= 0)
            releases.push(outcome.release_slot);
        switch (outcome.kind) {
        case OutcomeKind::payload_decoded:
            ++metrics.decoded_payloads;
            if (outcome.packet_decoded) {
                ++metrics.decoded_packets;
                metrics.data_decoded_bytes +=
                    payload_bytes(config.coding_rate);
            }
            break;
        case OutcomeKind::collided:
            ++metrics.collided;
            break;
        case OutcomeKind::header_dropped:
            ++metrics.header_dropped;
            break;
        case OutcomeKind::discarded:
            break;
        }
    }
    return metrics;
}

std::vector<CampaignCell> run_campaign(const CampaignRequest& request) {
    request.base.validate();
    if (request.repetitions < 1)
        throw std::invalid_argument("campaign: repetitions must be >= 1");

    struct Task {
        std::size_t family;
        CodingRate cr;
        std::size_t strategy;
        int nodes;
        int rep;
    };
    std::vector<Task> tasks;
    for (std::size_t f = 0; f < request.family_names.size(); ++f)
        for (CodingRate cr : request.coding_rates)
            for (std::size_t s = 0; s < request.strategies.size(); ++s)
                for (int nodes : request.node_sweep)
                    for (int rep = 0; rep < request.repetitions; ++rep)
                        tasks.push_back({f, cr, s, nodes, rep});

    // families are shared read-only across workers
    std::vector<FhsFamily> families;
    families.reserve(request.family_names.size());
    for (const std::string& name : request.family_names)
        families.push_back(
            build_named_family(name, FamilyVariant::simulation,
                               static_cast<int>(request.base.payload_fragments)));

    std::vector<CampaignCell> cells(tasks.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= tasks.size())
                return;
            const Task& t = tasks[i];
            const StrategyConfig& strategy = request.strategies[t.strategy];
            SimulationConfig config = request.base;
            config.coding_rate = t.cr;
            config.node_count = t.nodes;
            config.rng_seed = derive_seed(
                request.master_seed,
                request.family_names[t.family] + "/" + strategy.fingerprint(),
                t.cr == CodingRate::cr1 ? 1 : 2,
                static_cast<std::uint64_t>(t.nodes),
                static_cast<std::uint64_t>(t.rep));
            CampaignCell cell;
            cell.family = request.family_names[t.family];
            cell.cr = t.cr;
            cell.strategy = strategy;
            cell.nodes = t.nodes;
            cell.rep = t.rep;
            cell.metrics = run_simulation(config, families[t.family], strategy);
            cells[i] = std::move(cell);
        }
    };

    int threads = request.threads > 0
                      ? request.threads
                      : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i)
        pool.emplace_back(worker);
    for (std::thread& th : pool)
        th.join();
    return cells;
}

std::string campaign_csv_header() {
    return "family,cr,demodulators,early_decode,early_drop,early_header_drop,"
           "header_tolerance,nodes,rep,sent,decoded_payloads,decoded_packets,"
           "collided,header_dropped,discarded,data_sent_kb,data_decoded_kb";
}

std::string campaign_csv_row(const CampaignCell& cell) {
    std::ostringstream out;
    out << cell.family << ',' << (cell.cr == CodingRate::cr1 ? 1 : 2) << ',';
    if (cell.strategy.demodulator_count)
        out << *cell.strategy.demodulator_count;
    else
        out << "inf";
    out << ',' << cell.strategy.early_decode << ',' << cell.strategy.early_drop
        << ',' << cell.strategy.early_header_drop << ','
        << cell.strategy.header_tolerance_slots << ',' << cell.nodes << ','
        << cell.rep << ',' << cell.metrics.sent << ','
        << cell.metrics.decoded_payloads << ',' << cell.metrics.decoded_packets
        << ',' << cell.metrics.collided << ',' << cell.metrics.header_dropped
        << ',' << cell.metrics.discarded << ',' << cell.metrics.data_sent_kb()
        << ',' << cell.metrics.data_decoded_kb();
    return out.str();
}

} // namespace lrfhss
