#ifndef LRFHSS_CORRELATION_HPP
#define LRFHSS_CORRELATION_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "lrfhss/fhs.hpp"

namespace lrfhss {

// Number of positions where X and the cyclic shift of Y by tau agree.
int hamming_correlation(const FhSequence& x, const FhSequence& y, int tau);

struct CorrelationStats {
    int max = 0;
    double avg = 0.0;
};

// Auto-correlation over the nonzero shifts 1..L-1 (avg divisor L-1).
CorrelationStats autocorrelation_stats(const FhSequence& x);

// Cross-correlation over all shifts 0..L-1 (avg divisor L).
CorrelationStats crosscorrelation_stats(const FhSequence& x,
                                        const FhSequence& y);

// Smallest |x_{i+1} - x_i| including the wrap-around term |x_{L-1} - x_0|.
int minimum_gap(const FhSequence& x);

// Lower bound on the maximum auto-correlation of a period-L sequence over an
// alphabet of size l: ceil((L-e)(L+e-l) / (l*(L-1))) with e = L mod l. The
// wide-gap variant replaces the divisor by l*(L-3).
int correlation_bound(int period, int alphabet, bool wide_gap);

enum class WgOptimality { not_wide_gap, suboptimal, optimal };

// A sequence is an optimal wide-gap FHS when its minimum gap is positive and
// its maximum auto-correlation meets the wide-gap bound with equality.
WgOptimality classify_wgfhs(const FhSequence& x);
bool is_optimal_wgfhs(const FhSequence& x);

struct CorrelationReport {
    std::string family_name;
    std::size_t size = 0;
    std::size_t length = 0;
    // Cross metrics are sums over unordered distinct pairs normalized by
    // M*(M+1)/2. Absent when the family has a single member.
    std::optional<double> avg_max_cc;
    std::optional<double> avg_avg_cc;
    double avg_max_ac = 0.0; // mean over members, nonzero shifts
    double avg_avg_ac = 0.0;
};

// Family-level averages. When prefix_length is given every sequence is
// truncated to its first prefix_length hops before measuring.
CorrelationReport family_report(const FhsFamily& family,
                                std::optional<int> prefix_length = {});

std::string report_csv_header();
std::string report_csv_row(const CorrelationReport& report);

} // namespace lrfhss

#endif
