#ifndef LRFHSS_FHS_HPP
#define LRFHSS_FHS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lrfhss {

using Channel = std::uint16_t;

// One periodic hopping sequence over a channel alphabet [0, channel_count).
struct FhSequence {
    std::vector<Channel> values;
    Channel channel_count = 0;

    std::size_t period() const { return values.size(); }
    void validate() const; // every value < channel_count, period >= 1

    bool operator==(const FhSequence&) const = default;
};

// A named set of sequences sharing one alphabet and one period.
//
// grid_based distinguishes the two value spaces used by the constructions:
// true means values are hop positions inside a grid (driver, lem-green, hash)
// and a grid index is chosen separately at transmission time; false means
// values are absolute OBW indices (li-fan).
struct FhsFamily {
    std::string name;
    std::vector<FhSequence> sequences;
    bool grid_based = false;

    std::size_t size() const { return sequences.size(); }
    Channel channel_count() const;
    std::size_t period() const;
    void validate() const; // uniform alphabet and period, size >= 1
};

// OBW index for a hop inside a grid. Grids interleave the band with stride
// grid_count: grid g holds OBWs g, g + grid_count, g + 2*grid_count, ...
int map_grid_hop_to_obw(int grid, int hop_value, int grid_count,
                        int per_grid_channels);

// Embeds every member of a grid-based family into the flat OBW space, member
// i using grid (i mod grid_count). This is the layout the cross-family
// correlation tables are computed in for families that hop within grids.
FhsFamily spread_over_grids(const FhsFamily& family, int grid_count);

// Text export: header line `# name=<family> channels=<l> period=<L>
// grid_based=<0|1>`, then one comma-separated sequence per line.
void export_family(const FhsFamily& family, std::ostream& out);

} // namespace lrfhss

#endif
