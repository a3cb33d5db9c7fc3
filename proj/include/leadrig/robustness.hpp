#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "leadrig/aggregation.hpp"
#include "leadrig/covering.hpp"
#include "leadrig/score_model.hpp"

namespace leadrig {

struct RobustnessResult {
    Rule rule = Rule::Mean;
    std::string target;
    bool feasible = true;
    int k = 0;                        // valid when feasible
    std::vector<std::string> witness; // minimizing task set, |witness| == k
    double deficit = 0.0;             // headline deficit (max over competitors)
    std::optional<double> tau;        // median threshold, Median only
    std::optional<double> normalized;
    std::optional<int> lower_bound;   // WinRate/Majority global only
};

// Closed form under arithmetic mean: descending-cap prefix covering m*Delta_mean.
RobustnessResult k_mean(const ScoreMatrix& matrix, const std::string& target,
                        const GainCaps& caps);

// Closed form under upper median: Delta_median tasks pushed across tau.
RobustnessResult k_median(const ScoreMatrix& matrix, const std::string& target,
                          const GainCaps& caps);

// q_D(A) for every model A (row for the target itself is all zero).
// q[A][D] is the win-rate lead reduction against A from training on D alone.
std::vector<std::vector<double>> pairwise_gains(const ScoreMatrix& matrix,
                                                const std::string& target,
                                                const GainCaps& caps);

RobustnessResult k_win_pairwise(const ScoreMatrix& matrix, const std::string& target,
                                const std::string& competitor, const GainCaps& caps);

RobustnessResult k_win_global(const ScoreMatrix& matrix, const std::string& target,
                              const GainCaps& caps,
                              std::uint64_t node_budget = 100'000'000);

// Requires score-to-1 training; the closed form needs the target to top each
// trained task's ranking.
RobustnessResult k_maj_pairwise(const ScoreMatrix& matrix, const std::string& target,
                                const std::string& competitor);

RobustnessResult k_maj_global(const ScoreMatrix& matrix, const std::string& target,
                              std::uint64_t node_budget = 100'000'000);

// Normalized robustness in [0,1]; nullopt when the denominator is undefined.
// Throws InputError on an infeasible result.
std::optional<double> normalized(const RobustnessResult& result, const ScoreMatrix& matrix,
                                 const std::string& target, const GainCaps& caps);

// Independent oracle: enumerate subsets by increasing cardinality, apply
// training, recompute the leaderboard and return the first S that makes the
// target a top element (weak Condorcet winner under Majority).
RobustnessResult brute_force_k(const ScoreMatrix& matrix, const std::string& target,
                               const GainCaps& caps, Rule rule,
                               std::size_t task_limit = 20);

// Caps for a given target; used by all_targets to realize DEFAULT or file caps.
using CapsPolicy = std::function<GainCaps(const ScoreMatrix&, const std::string&)>;

CapsPolicy default_caps_policy();

// One result per model, in model_ids order, normalized values filled in.
std::vector<RobustnessResult> all_targets(const ScoreMatrix& matrix, Rule rule,
                                          const CapsPolicy& caps_policy,
                                          unsigned threads = 1,
                                          std::uint64_t node_budget = 100'000'000);

} // namespace leadrig
