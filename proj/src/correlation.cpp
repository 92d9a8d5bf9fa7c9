#include "lrfhss/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace lrfhss {

namespace {

void check_pair(const FhSequence& x, const FhSequence& y) {
    if (x.period() != y.period())
        throw std::invalid_argument("correlation: periods differ");
    if (x.channel_count != y.channel_count)
        throw std::invalid_argument("correlation: alphabets differ");
}

FhSequence prefix_of(const FhSequence& s, int len) {
    FhSequence out;
    out.channel_count = s.channel_count;
    out.values.assign(s.values.begin(), s.values.begin() + len);
    return out;
}

} // namespace

int hamming_correlation(const FhSequence& x, const FhSequence& y, int tau) {
    check_pair(x, y);
    const int period = static_cast<int>(x.period());
    if (tau < 0 || tau >= period)
        throw std::invalid_argument("correlation: shift out of [0, L)");
    int hits = 0;
    for (int i = 0; i < period; ++i) {
        int j = i + tau;
        if (j >= period)
            j -= period;
        hits += x.values[i] == y.values[j];
    }
    return hits;
}

CorrelationStats autocorrelation_stats(const FhSequence& x) {
    const int period = static_cast<int>(x.period());
    if (period < 2)
        throw std::invalid_argument("autocorrelation: period must be >= 2");
    CorrelationStats stats;
    long long sum = 0;
    for (int tau = 1; tau < period; ++tau) {
        const int h = hamming_correlation(x, x, tau);
        stats.max = std::max(stats.max, h);
        sum += h;
    }
    stats.avg = static_cast<double>(sum) / (period - 1);
    return stats;
}

CorrelationStats crosscorrelation_stats(const FhSequence& x,
                                        const FhSequence& y) {
    check_pair(x, y);
    const int period = static_cast<int>(x.period());
    CorrelationStats stats;
    long long sum = 0;
    for (int tau = 0; tau < period; ++tau) {
        const int h = hamming_correlation(x, y, tau);
        stats.max = std::max(stats.max, h);
        sum += h;
    }
    stats.avg = static_cast<double>(sum) / period;
    return stats;
}

int minimum_gap(const FhSequence& x) {
    const int period = static_cast<int>(x.period());
    if (period < 2)
        throw std::invalid_argument("minimum_gap: period must be >= 2");
    int gap = std::abs(static_cast<int>(x.values[period - 1]) -
                       static_cast<int>(x.values[0]));
    for (int i = 0; i + 1 < period; ++i)
        gap = std::min(gap, std::abs(static_cast<int>(x.values[i + 1]) -
                                     static_cast<int>(x.values[i])));
    return gap;
}

int correlation_bound(int period, int alphabet, bool wide_gap) {
    if (alphabet < 1)
        throw std::invalid_argument("bound: alphabet must be >= 1");
    if (period <= (wide_gap ? 3 : 1))
        throw std::invalid_argument("bound: period too small");
    const long long eps = period % alphabet;
    const long long num =
        (period - eps) * (period + eps - alphabet); // never negative: eps =
                                                    // period when period < alphabet
    const long long den =
        static_cast<long long>(alphabet) * (period - (wide_gap ? 3 : 1));
    return static_cast<int>((num + den - 1) / den);
}

WgOptimality classify_wgfhs(const FhSequence& x) {
    if (minimum_gap(x) == 0)
        return WgOptimality::not_wide_gap;
    const int bound =
        correlation_bound(static_cast<int>(x.period()), x.channel_count, true);
    return autocorrelation_stats(x).max == bound ? WgOptimality::optimal
                                                 : WgOptimality::suboptimal;
}

bool is_optimal_wgfhs(const FhSequence& x) {
    return classify_wgfhs(x) == WgOptimality::optimal;
}

CorrelationReport family_report(const FhsFamily& family,
                                std::optional<int> prefix_length) {
    family.validate();
    std::vector<FhSequence> seqs;
    seqs.reserve(family.size());
    if (prefix_length) {
        if (*prefix_length < 2 ||
            *prefix_length > static_cast<int>(family.period()))
            throw std::invalid_argument("report: prefix length out of range");
        for (const FhSequence& s : family.sequences)
            seqs.push_back(prefix_of(s, *prefix_length));
    } else {
        seqs = family.sequences;
    }

    CorrelationReport report;
    report.family_name = family.name;
    report.size = seqs.size();
    report.length = seqs.front().period();

    double ac_max_sum = 0, ac_avg_sum = 0;
    for (const FhSequence& s : seqs) {
        const CorrelationStats st = autocorrelation_stats(s);
        ac_max_sum += st.max;
        ac_avg_sum += st.avg;
    }
    const double m = static_cast<double>(seqs.size());
    report.avg_max_ac = ac_max_sum / m;
    report.avg_avg_ac = ac_avg_sum / m;

    if (seqs.size() >= 2) {
        double cc_max_sum = 0, cc_avg_sum = 0;
        for (std::size_t a = 0; a < seqs.size(); ++a)
            for (std::size_t b = a + 1; b < seqs.size(); ++b) {
                const CorrelationStats st =
                    crosscorrelation_stats(seqs[a], seqs[b]);
                cc_max_sum += st.max;
                cc_avg_sum += st.avg;
            }
        const double pairs = m * (m + 1) / 2.0;
        report.avg_max_cc = cc_max_sum / pairs;
        report.avg_avg_cc = cc_avg_sum / pairs;
    }
    return report;
}

std::string report_csv_header() {
    return "family,size,avg_max_cc,avg_avg_cc,avg_max_ac,avg_avg_ac";
}

std::string report_csv_row(const CorrelationReport& report) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << report.family_name << ',' << report.size << ',';
    if (report.avg_max_cc)
        out << *report.avg_max_cc;
    out << ',';
    if (report.avg_avg_cc)
        out << *report.avg_avg_cc;
    out << ',' << report.avg_max_ac << ',' << report.avg_avg_ac;
    return out.str();
}

} // namespace lrfhss
