#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leadrig/score_model.hpp"

namespace leadrig {

enum class Rule { Mean, Median, WinRate, Majority, Borda };

const char* rule_name(Rule rule);
Rule rule_from_name(const std::string& name); // throws InputError

struct Leaderboard {
    Rule rule;
    std::vector<std::string> order;  // best first
    std::vector<double> values;      // aligned with order; empty for Majority
};

// Weak pairwise comparison counts: counts[a][b] = #{D : score(a,D) >= score(b,D)}.
struct MajorityMatrix {
    std::vector<std::vector<int>> counts;
    int threshold; // mu = ceil(m/2)

    bool weakly_beats(std::size_t a, std::size_t b) const {
        return counts[a][b] >= threshold;
    }
};

// Per-model mean score mu(A), aligned with model_ids.
std::vector<double> mean_values(const ScoreMatrix& matrix);

// Per-model upper median: the h-th smallest score with h = floor(m/2)+1.
std::vector<double> median_values(const ScoreMatrix& matrix);

double upper_median(std::vector<double> values);

struct WinRates {
    std::vector<std::vector<double>> per_task; // [model][task] w_D(A)
    std::vector<double> mean;                  // [model] w(A)
};

// Win rates with the self-comparison term included: w_D(A) >= 1/n.
WinRates win_rates(const ScoreMatrix& matrix);

// Integer win counts n * w_D(A), exact; used internally for tie-safe comparisons.
std::vector<std::vector<int>> win_counts(const ScoreMatrix& matrix);

MajorityMatrix majority_matrix(const ScoreMatrix& matrix);

// Per-model Borda scores over strict per-task rankings.
std::vector<long long> borda_scores(const ScoreMatrix& matrix,
                                    const TieBreakPolicy& policy = {});

// Strict Condorcet winner computed on tie-broken strict rankings, or nullopt.
std::optional<std::string> condorcet_winner(const ScoreMatrix& matrix,
                                            const TieBreakPolicy& policy = {});

// Weak Condorcet winner on the raw weak majority relation (no tie-break).
bool is_weak_condorcet_winner(const ScoreMatrix& matrix, std::size_t model);
std::optional<std::string> weak_condorcet_winner(const ScoreMatrix& matrix);

Leaderboard leaderboard(const ScoreMatrix& matrix, Rule rule,
                        const TieBreakPolicy& policy = {});

} // namespace leadrig
