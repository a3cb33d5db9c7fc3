#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leadrig/errors.hpp"

namespace leadrig {

// ECDF step points: sorted unique x with F(x); F is right-continuous, ends at 1.
std::vector<std::pair<double, double>> ecdf(std::vector<double> values);

struct BootstrapSummary {
    std::string statistic;
    double point = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    int resamples = 0;
    std::uint64_t seed = 0;
};

using Statistic = std::function<double(const std::vector<double>&)>;

// Namespace bootstrap: each resample draws |groups| namespaces with
// replacement and pools all their member values. 95% percentile interval.
// Reproducible: mt19937_64 seeded with `seed`, indices via modulo reduction.
BootstrapSummary bootstrap_ci(const std::map<std::string, std::vector<double>>& groups,
                              const Statistic& statistic, int resamples,
                              std::uint64_t seed, const std::string& name = "");

struct WilcoxonResult {
    double p = 1.0;
    bool degenerate = false; // all differences zero
    double w_plus = 0.0;
    int n_used = 0;          // pairs after zero-difference removal
};

// Paired two-sided test, zeros dropped, average ranks for ties, normal
// approximation with tie-corrected variance and 0.5 continuity correction.
WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& x,
                                    const std::vector<double>& y);

// Holm step-down adjustment, result in input order.
std::vector<double> holm_adjust(const std::vector<double>& pvals);

// Spearman correlation via average ranks; nullopt when either input is constant.
std::optional<double> spearman_rho(const std::vector<double>& x,
                                   const std::vector<double>& y);

// Midpoint median used by summary statistics (distinct from the upper-median
// aggregation rule).
double midpoint_median(std::vector<double> values);

struct PairedTestResult {
    std::string rule_a;
    std::string rule_b;
    double median_diff_tasks = 0.0; // median of (k_a - k_b)
    double median_diff_pp = 0.0;    // same in percentage points of m
    double p_raw = 1.0;
    double p_adjusted = 1.0;
    bool degenerate = false;
    int used = 0;     // targets finite under both rules
    int excluded = 0; // targets dropped from this pair
};

// All rule pairs in the given order, Holm correction across the pairs.
std::vector<PairedTestResult> paired_rule_comparison(
    const std::vector<std::pair<std::string, std::vector<std::optional<int>>>>& per_rule_k,
    std::size_t task_count);

} // namespace leadrig
