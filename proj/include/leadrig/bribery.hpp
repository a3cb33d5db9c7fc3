#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leadrig/score_model.hpp"

namespace leadrig {

// Strict preference profile: each vote is a permutation of candidates, best first.
struct Profile {
    std::vector<std::string> candidates;
    std::vector<std::vector<std::string>> votes;

    void validate() const;
};

// Shift bribery with all-or-nothing prices: paying c_D lets the preferred
// candidate be shifted to the top of voter D's ranking.
struct BriberyInstance {
    Profile profile;
    std::string preferred;
    std::vector<double> costs; // per voter, > 0
    double budget = 0.0;

    void validate() const;
};

struct BriberyOutcome {
    bool winnable = false;       // some voter subset makes `preferred` win
    double cost = 0.0;           // minimum cost over winning subsets
    std::vector<std::size_t> bribed; // voter indices, ascending
    bool within_budget = false;  // cost <= budget
};

// Shift the candidate to the top of one vote; all other candidates keep their
// relative order.
Profile shift_to_top(const Profile& profile, std::size_t voter, const std::string& candidate);

std::vector<long long> profile_borda_scores(const Profile& profile);

std::string borda_winner(const Profile& profile, const TieBreakPolicy& policy = {});

// Exhaustive search over voter subsets in ascending total-cost order.
// The winner check is weak: preferred needs a weakly top Borda score.
BriberyOutcome min_cost_shift_bribery(const BriberyInstance& instance,
                                      std::size_t voter_limit = 20);

// Prop.-3.2 translation: per-task strict rankings become votes, the target
// becomes the preferred candidate. Assumes score-to-1 training.
BriberyInstance bst_to_bribery(const ScoreMatrix& matrix, const std::string& target,
                               const std::vector<double>& costs, double budget,
                               const TieBreakPolicy& policy = {});

} // namespace leadrig
