#include "leadrig/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace leadrig {

std::vector<std::pair<double, double>> ecdf(std::vector<double> values) {
    if (values.empty()) throw InputError("ecdf requires a nonempty sample");
    for (double v : values)
        if (!std::isfinite(v)) throw InputError("ecdf requires finite values");
    std::sort(values.begin(), values.end());
    std::vector<std::pair<double, double>> steps;
    std::size_t n = values.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (i + 1 < n && values[i + 1] == values[i]) continue; // merge duplicates
        steps.emplace_back(values[i], static_cast<double>(i + 1) / static_cast<double>(n));
    }
    return steps;
}

namespace {

// Empirical quantile with linear interpolation (R type 7).
double quantile(const std::vector<double>& sorted, double p) {
    if (sorted.size() == 1) return sorted[0];
    double h = (static_cast<double>(sorted.size()) - 1.0) * p;
    std::size_t lo = static_cast<std::size_t>(std::floor(h));
    std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double normal_sf(double z) { // P(Z > z)
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

// Average ranks (1-based) of |values|, ties averaged.
std::vector<double> average_ranks(const std::vector<double>& values) {
    std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t l = i; l <= j; ++l) ranks[order[l]] = avg;
        i = j + 1;
    }
    return ranks;
}

} // namespace

BootstrapSummary bootstrap_ci(const std::map<std::string, std::vector<double>>& groups,
                              const Statistic& statistic, int resamples,
                              std::uint64_t seed, const std::string& name) {
    if (groups.empty()) throw InputError("bootstrap requires at least one namespace");
    if (resamples < 1) throw InputError("bootstrap requires at least one resample");

    std::vector<const std::vector<double>*> members;
    members.reserve(groups.size());
    std::vector<double> pooled;
    for (const auto& [ns, values] : groups) {
        members.push_back(&values);
        pooled.insert(pooled.end(), values.begin(), values.end());
    }

    BootstrapSummary out;
    out.statistic = name;
    out.resamples = resamples;
    out.seed = seed;
    out.point = statistic(pooled);

    std::mt19937_64 rng(seed);
    std::size_t g = members.size();
    std::vector<double> stats(resamples);
    std::vector<double> sample;
    for (int b = 0; b < resamples; ++b) {
        sample.clear();
        for (std::size_t i = 0; i < g; ++i) {
            const auto& vals = *members[rng() % g];
            sample.insert(sample.end(), vals.begin(), vals.end());
        }
        stats[b] = statistic(sample);
    }
    std::sort(stats.begin(), stats.end());
    out.lower = quantile(stats, 0.025);
    out.upper = quantile(stats, 0.975);
    return out;
}

WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& x,
                                    const std::vector<double>& y) {
    if (x.size() != y.size()) throw InputError("wilcoxon requires paired sequences");
    if (x.empty()) throw InputError("wilcoxon requires at least one pair");

    std::vector<double> diffs;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double d = x[i] - y[i];
        if (d != 0.0) diffs.push_back(d);
    }
    WilcoxonResult res;
    res.n_used = static_cast<int>(diffs.size());
    if (diffs.empty()) {
        res.degenerate = true;
        res.p = 1.0;
        return res;
    }

    std::vector<double> abs_d(diffs.size());
    for (std::size_t i = 0; i < diffs.size(); ++i) abs_d[i] = std::fabs(diffs[i]);
    auto ranks = average_ranks(abs_d);

    double w_plus = 0.0;
    for (std::size_t i = 0; i < diffs.size(); ++i)
        if (diffs[i] > 0.0) w_plus += ranks[i];
    res.w_plus = w_plus;

    double n = static_cast<double>(diffs.size());
    double mean = n * (n + 1.0) / 4.0;
    double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
    // tie correction: sum over groups of (t^3 - t)/48
    std::vector<double> sorted_abs = abs_d;
    std::sort(sorted_abs.begin(), sorted_abs.end());
    std::size_t i = 0;
    while (i < sorted_abs.size()) {
        std::size_t j = i;
        while (j + 1 < sorted_abs.size() && sorted_abs[j + 1] == sorted_abs[i]) ++j;
        double t = static_cast<double>(j - i + 1);
        var -= (t * t * t - t) / 48.0;
        i = j + 1;
    }
    if (var <= 0.0) {
        res.degenerate = true;
        res.p = 1.0;
        return res;
    }
    double num = w_plus - mean;
    double cc = num > 0.0 ? 0.5 : (num < 0.0 ? -0.5 : 0.0);
    double z = (num - cc) / std::sqrt(var);
    res.p = std::min(1.0, 2.0 * normal_sf(std::fabs(z)));
    return res;
}

std::vector<double> holm_adjust(const std::vector<double>& pvals) {
    for (double p : pvals)
        if (!(p >= 0.0 && p <= 1.0)) throw InputError("p-values must lie in [0,1]");
    std::size_t n = pvals.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return pvals[a] < pvals[b]; });
    std::vector<double> adjusted(n);
    double running = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double scaled = std::min(1.0, static_cast<double>(n - i) * pvals[order[i]]);
        running = std::max(running, scaled);
        adjusted[order[i]] = running;
    }
    return adjusted;
}

std::optional<double> spearman_rho(const std::vector<double>& x,
                                   const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw InputError("spearman requires paired sequences of length >= 2");
    auto rx = average_ranks(x);
    auto ry = average_ranks(y);
    double n = static_cast<double>(x.size());
    double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = rx[i] - mx, dy = ry[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

double midpoint_median(std::vector<double> values) {
    if (values.empty()) throw InputError("median of empty sample");
    std::sort(values.begin(), values.end());
    std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<PairedTestResult> paired_rule_comparison(
    const std::vector<std::pair<std::string, std::vector<std::optional<int>>>>& per_rule_k,
    std::size_t task_count) {
    std::vector<PairedTestResult> results;
    std::vector<double> raw_ps;
    for (std::size_t a = 0; a < per_rule_k.size(); ++a) {
        for (std::size_t b = a + 1; b < per_rule_k.size(); ++b) {
            const auto& [name_a, ks_a] = per_rule_k[a];
            const auto& [name_b, ks_b] = per_rule_k[b];
            if (ks_a.size() != ks_b.size())
                throw InputError("rule result vectors must align over targets");
            PairedTestResult r;
            r.rule_a = name_a;
            r.rule_b = name_b;
            std::vector<double> xa, xb, diffs;
            for (std::size_t i = 0; i < ks_a.size(); ++i) {
                if (!ks_a[i] || !ks_b[i]) {
                    ++r.excluded;
                    continue;
                }
                xa.push_back(static_cast<double>(*ks_a[i]));
                xb.push_back(static_cast<double>(*ks_b[i]));
                diffs.push_back(xa.back() - xb.back());
            }
            r.used = static_cast<int>(xa.size());
            if (r.used < 2) {
                r.degenerate = true;
            } else {
                r.median_diff_tasks = midpoint_median(diffs);
                r.median_diff_pp =
                    100.0 * r.median_diff_tasks / static_cast<double>(task_count);
                auto w = wilcoxon_signed_rank(xa, xb);
                r.p_raw = w.p;
                r.degenerate = w.degenerate;
            }
            raw_ps.push_back(r.p_raw);
            results.push_back(std::move(r));
        }
    }
    auto adjusted = holm_adjust(raw_ps);
    for (std::size_t i = 0; i < results.size(); ++i) results[i].p_adjusted = adjusted[i];
    return results;
}

} // namespace leadrig
