#include "leadrig/aggregation.hpp"

#include <algorithm>
#include <numeric>

namespace leadrig {

const char* rule_name(Rule rule) {
    switch (rule) {
        case Rule::Mean: return "mean";
        case Rule::Median: return "median";
        case Rule::WinRate: return "winrate";
        case Rule::Majority: return "majority";
        case Rule::Borda: return "borda";
    }
    return "?";
}

Rule rule_from_name(const std::string& name) {
    if (name == "mean") return Rule::Mean;
    if (name == "median") return Rule::Median;
    if (name == "winrate") return Rule::WinRate;
    if (name == "majority") return Rule::Majority;
    if (name == "borda") return Rule::Borda;
    throw InputError("unknown rule: " + name);
}

std::vector<double> mean_values(const ScoreMatrix& matrix) {
    std::vector<double> out(matrix.n());
    for (std::size_t i = 0; i < matrix.n(); ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < matrix.m(); ++j) sum += matrix.score(i, j);
        out[i] = sum / static_cast<double>(matrix.m());
    }
    return out;
}

double upper_median(std::vector<double> values) {
    std::size_t h = values.size() / 2; // 0-based index of the (floor(m/2)+1)-th smallest
    std::nth_element(values.begin(), values.begin() + h, values.end());
    return values[h];
}

std::vector<double> median_values(const ScoreMatrix& matrix) {
    std::vector<double> out(matrix.n());
    std::vector<double> row(matrix.m());
    for (std::size_t i = 0; i < matrix.n(); ++i) {
        for (std::size_t j = 0; j < matrix.m(); ++j) row[j] = matrix.score(i, j);
        out[i] = upper_median(row);
    }
    return out;
}

std::vector<std::vector<int>> win_counts(const ScoreMatrix& matrix) {
    std::size_t n = matrix.n(), m = matrix.m();
    std::vector<std::vector<int>> counts(n, std::vector<int>(m));
    std::vector<double> col(n);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) col[i] = matrix.score(i, j);
        std::sort(col.begin(), col.end());
        for (std::size_t i = 0; i < n; ++i) {
            // #{A' : score(A,D) >= score(A',D)}, self included
            auto it = std::upper_bound(col.begin(), col.end(), matrix.score(i, j));
            counts[i][j] = static_cast<int>(it - col.begin());
        }
    }
    return counts;
}

WinRates win_rates(const ScoreMatrix& matrix) {
    auto counts = win_counts(matrix);
    std::size_t n = matrix.n(), m = matrix.m();
    WinRates wr;
    wr.per_task.assign(n, std::vector<double>(m));
    wr.mean.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        long long total = 0;
        for (std::size_t j = 0; j < m; ++j) {
            wr.per_task[i][j] = counts[i][j] / static_cast<double>(n);
            total += counts[i][j];
        }
        wr.mean[i] = static_cast<double>(total) / (static_cast<double>(n) * static_cast<double>(m));
    }
    return wr;
}

MajorityMatrix majority_matrix(const ScoreMatrix& matrix) {
    std::size_t n = matrix.n(), m = matrix.m();
    MajorityMatrix mm;
    mm.threshold = static_cast<int>((m + 1) / 2);
    mm.counts.assign(n, std::vector<int>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            int c = 0;
            for (std::size_t j = 0; j < m; ++j)
                c += matrix.score(a, j) >= matrix.score(b, j) ? 1 : 0;
            mm.counts[a][b] = c;
        }
    }
    return mm;
}

std::vector<long long> borda_scores(const ScoreMatrix& matrix, const TieBreakPolicy& policy) {
    std::size_t n = matrix.n(), m = matrix.m();
    std::vector<long long> scores(n, 0);
    for (std::size_t j = 0; j < m; ++j) {
        auto order = induced_strict_ranking_idx(matrix, j, policy);
        for (std::size_t pos = 0; pos < n; ++pos)
            scores[order[pos]] += static_cast<long long>(n - 1 - pos);
    }
    return scores;
}

namespace {

// #{D : a strictly beats b on the tie-broken strict ranking of D}
int strict_beat_count(const ScoreMatrix& matrix, std::size_t a, std::size_t b,
                      const TieBreakPolicy& policy) {
    int c = 0;
    for (std::size_t j = 0; j < matrix.m(); ++j) {
        double sa = matrix.score(a, j), sb = matrix.score(b, j);
        if (sa > sb ||
            (sa == sb && policy.prefers(matrix.model_ids()[a], matrix.model_ids()[b])))
            ++c;
    }
    return c;
}

int weak_beat_count(const ScoreMatrix& matrix, std::size_t a, std::size_t b) {
    int c = 0;
    for (std::size_t j = 0; j < matrix.m(); ++j)
        c += matrix.score(a, j) >= matrix.score(b, j) ? 1 : 0;
    return c;
}

} // namespace

std::optional<std::string> condorcet_winner(const ScoreMatrix& matrix,
                                            const TieBreakPolicy& policy) {
    std::size_t n = matrix.n();
    // Sweep for the only possible winner, then verify. O(n*m).
    std::size_t cand = 0;
    for (std::size_t i = 1; i < n; ++i) {
        int c = strict_beat_count(matrix, cand, i, policy);
        if (!(c > static_cast<int>(matrix.m()) - c)) cand = i;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i == cand) continue;
        int c = strict_beat_count(matrix, cand, i, policy);
        if (!(c > static_cast<int>(matrix.m()) - c)) return std::nullopt;
    }
    return matrix.model_ids()[cand];
}

bool is_weak_condorcet_winner(const ScoreMatrix& matrix, std::size_t model) {
    int mu = static_cast<int>((matrix.m() + 1) / 2);
    for (std::size_t i = 0; i < matrix.n(); ++i) {
        if (i == model) continue;
        if (weak_beat_count(matrix, model, i) < mu) return false;
    }
    return true;
}

std::optional<std::string> weak_condorcet_winner(const ScoreMatrix& matrix) {
    int mu = static_cast<int>((matrix.m() + 1) / 2);
    std::size_t cand = 0;
    for (std::size_t i = 1; i < matrix.n(); ++i) {
        if (weak_beat_count(matrix, cand, i) < mu) cand = i;
    }
    if (is_weak_condorcet_winner(matrix, cand)) return matrix.model_ids()[cand];
    // The sweep can miss a winner when the weak relation holds both ways;
    // any remaining winner must at least weakly beat cand.
    for (std::size_t i = 0; i < matrix.n(); ++i) {
        if (i == cand || weak_beat_count(matrix, i, cand) < mu) continue;
        if (is_weak_condorcet_winner(matrix, i)) return matrix.model_ids()[i];
    }
    return std::nullopt;
}

namespace {

Leaderboard order_by_values(const ScoreMatrix& matrix, Rule rule,
                            const std::vector<double>& values,
                            const TieBreakPolicy& policy, bool keep_values) {
    std::vector<std::size_t> order(matrix.n());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (values[a] != values[b]) return values[a] > values[b];
        return policy.prefers(matrix.model_ids()[a], matrix.model_ids()[b]);
    });
    Leaderboard lb;
    lb.rule = rule;
    for (std::size_t i : order) {
        lb.order.push_back(matrix.model_ids()[i]);
        if (keep_values) lb.values.push_back(values[i]);
    }
    return lb;
}

} // namespace

Leaderboard leaderboard(const ScoreMatrix& matrix, Rule rule, const TieBreakPolicy& policy) {
    switch (rule) {
        case Rule::Mean:
            return order_by_values(matrix, rule, mean_values(matrix), policy, true);
        case Rule::Median:
            return order_by_values(matrix, rule, median_values(matrix), policy, true);
        case Rule::WinRate:
            return order_by_values(matrix, rule, win_rates(matrix).mean, policy, true);
        case Rule::Borda: {
            auto scores = borda_scores(matrix, policy);
            std::vector<double> values(scores.begin(), scores.end());
            return order_by_values(matrix, rule, values, policy, true);
        }
        case Rule::Majority: {
            // Display order only: count of competitors weakly beaten (Copeland-style).
            auto mm = majority_matrix(matrix);
            std::vector<double> copeland(matrix.n(), 0.0);
            for (std::size_t a = 0; a < matrix.n(); ++a)
                for (std::size_t b = 0; b < matrix.n(); ++b)
                    if (a != b && mm.weakly_beats(a, b)) copeland[a] += 1.0;
            return order_by_values(matrix, rule, copeland, policy, false);
        }
    }
    throw InputError("unknown rule");
}

} // namespace leadrig
