#include "lrfhss/fhs.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace lrfhss {

void FhSequence::validate() const {
    if (values.empty())
        throw std::invalid_argument("sequence: period must be >= 1");
    for (Channel v : values)
        if (v >= channel_count)
            throw std::invalid_argument("sequence: value " + std::to_string(v) +
                                        " outside alphabet of size " +
                                        std::to_string(channel_count));
}

Channel FhsFamily::channel_count() const {
    return sequences.empty() ? 0 : sequences.front().channel_count;
}

std::size_t FhsFamily::period() const {
    return sequences.empty() ? 0 : sequences.front().period();
}

void FhsFamily::validate() const {
    if (sequences.empty())
        throw std::invalid_argument("family '" + name + "': no sequences");
    for (const FhSequence& s : sequences) {
        s.validate();
        if (s.channel_count != channel_count() || s.period() != period())
            throw std::invalid_argument("family '" + name +
                                        "': mixed alphabets or periods");
    }
}

int map_grid_hop_to_obw(int grid, int hop_value, int grid_count,
                        int per_grid_channels) {
    if (grid < 0 || grid >= grid_count)
        throw std::invalid_argument("grid index out of range");
    if (hop_value < 0 || hop_value >= per_grid_channels)
        throw std::invalid_argument("hop value out of range");
    return grid + grid_count * hop_value;
}

FhsFamily spread_over_grids(const FhsFamily& family, int grid_count) {
    if (!family.grid_based)
        throw std::invalid_argument("family '" + family.name +
                                    "' is not grid based");
    family.validate();
    FhsFamily out;
    out.name = family.name;
    out.grid_based = false;
    out.sequences.reserve(family.size());
    const int per_grid = family.channel_count();
    for (std::size_t i = 0; i < family.size(); ++i) {
        FhSequence seq;
        seq.channel_count = static_cast<Channel>(grid_count * per_grid);
        seq.values.reserve(family.period());
        const int grid = static_cast<int>(i % grid_count);
        for (Channel v : family.sequences[i].values)
            seq.values.push_back(static_cast<Channel>(
                map_grid_hop_to_obw(grid, v, grid_count, per_grid)));
        out.sequences.push_back(std::move(seq));
    }
    return out;
}

void export_family(const FhsFamily& family, std::ostream& out) {
    family.validate();
    out << "# name=" << family.name << " channels=" << family.channel_count()
        << " period=" << family.period()
        << " grid_based=" << (family.grid_based ? 1 : 0) << "\n";
    for (const FhSequence& seq : family.sequences) {
        for (std::size_t i = 0; i < seq.values.size(); ++i) {
            if (i)
                out << ',';
            out << seq.values[i];
        }
        out << "\n";
    }
}

} // namespace lrfhss
