#include "leadrig/bribery.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace leadrig {

void Profile::validate() const {
    if (candidates.empty() || votes.empty())
        throw InputError("profile requires at least one candidate and one vote");
    std::unordered_set<std::string> cset(candidates.begin(), candidates.end());
    if (cset.size() != candidates.size())
        throw InputError("profile has duplicate candidates");
    for (const auto& vote : votes) {
        if (vote.size() != candidates.size())
            throw InputError("vote is not a permutation of the candidates");
        std::unordered_set<std::string> seen;
        for (const auto& c : vote)
            if (!cset.count(c) || !seen.insert(c).second)
                throw InputError("vote is not a permutation of the candidates");
    }
}

void BriberyInstance::validate() const {
    profile.validate();
    if (std::find(profile.candidates.begin(), profile.candidates.end(), preferred) ==
        profile.candidates.end())
        throw InputError("preferred candidate not in profile");
    if (costs.size() != profile.votes.size())
        throw InputError("costs must align with voters");
    for (double c : costs)
        if (!(c > 0.0) || !std::isfinite(c)) throw InputError("voter costs must be positive");
    if (budget < 0.0 || !std::isfinite(budget))
        throw InputError("budget must be nonnegative");
}

Profile shift_to_top(const Profile& profile, std::size_t voter, const std::string& candidate) {
    if (voter >= profile.votes.size()) throw InputError("voter index out of range");
    Profile out = profile;
    auto& vote = out.votes[voter];
    auto it = std::find(vote.begin(), vote.end(), candidate);
    if (it == vote.end()) throw InputError("candidate not in vote: " + candidate);
    std::rotate(vote.begin(), it, it + 1);
    return out;
}

std::vector<long long> profile_borda_scores(const Profile& profile) {
    std::size_t n = profile.candidates.size();
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(profile.candidates[i], i);
    std::vector<long long> scores(n, 0);
    for (const auto& vote : profile.votes)
        for (std::size_t pos = 0; pos < n; ++pos)
            scores[index.at(vote[pos])] += static_cast<long long>(n - 1 - pos);
    return scores;
}

std::string borda_winner(const Profile& profile, const TieBreakPolicy& policy) {
    profile.validate();
    auto scores = profile_borda_scores(profile);
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i) {
        if (scores[i] > scores[best] ||
            (scores[i] == scores[best] &&
             policy.prefers(profile.candidates[i], profile.candidates[best])))
            best = i;
    }
    return profile.candidates[best];
}

BriberyOutcome min_cost_shift_bribery(const BriberyInstance& instance,
                                      std::size_t voter_limit) {
    instance.validate();
    std::size_t v = instance.profile.votes.size();
    if (v > voter_limit)
        throw ResourceError("bribery enumeration limited to " + std::to_string(voter_limit) +
                            " voters");

    std::size_t n = instance.profile.candidates.size();
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(instance.profile.candidates[i], i);
    std::size_t p = index.at(instance.preferred);

    auto base = profile_borda_scores(instance.profile);
    // Shifting p to the top of vote i: p gains its position, everyone above loses 1.
    std::vector<std::size_t> pos_p(v);
    std::vector<std::vector<std::size_t>> above(v);
    for (std::size_t i = 0; i < v; ++i) {
        const auto& vote = instance.profile.votes[i];
        for (std::size_t pos = 0; pos < n; ++pos) {
            if (vote[pos] == instance.preferred) { pos_p[i] = pos; break; }
            above[i].push_back(index.at(vote[pos]));
        }
    }

    std::vector<std::uint32_t> subsets(std::size_t{1} << v);
    std::iota(subsets.begin(), subsets.end(), 0u);
    std::vector<double> subset_cost(subsets.size(), 0.0);
    for (std::uint32_t mask = 0; mask < subsets.size(); ++mask) {
        double c = 0.0;
        for (std::size_t i = 0; i < v; ++i)
            if (mask & (1u << i)) c += instance.costs[i];
        subset_cost[mask] = c;
    }
    std::stable_sort(subsets.begin(), subsets.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (subset_cost[a] != subset_cost[b]) return subset_cost[a] < subset_cost[b];
        return std::popcount(a) < std::popcount(b);
    });

    std::vector<long long> scores(n);
    for (std::uint32_t mask : subsets) {
        scores = base;
        for (std::size_t i = 0; i < v; ++i) {
            if (!(mask & (1u << i))) continue;
            scores[p] += static_cast<long long>(pos_p[i]);
            for (std::size_t c : above[i]) scores[c] -= 1;
        }
        bool top = true;
        for (std::size_t c = 0; c < n; ++c)
            if (c != p && scores[c] > scores[p]) { top = false; break; }
        if (top) {
            BriberyOutcome out;
            out.winnable = true;
            out.cost = subset_cost[mask];
            for (std::size_t i = 0; i < v; ++i)
                if (mask & (1u << i)) out.bribed.push_back(i);
            out.within_budget = out.cost <= instance.budget + 1e-12;
            return out;
        }
    }
    return BriberyOutcome{}; // no subset wins (cannot happen for Borda, kept for safety)
}

BriberyInstance bst_to_bribery(const ScoreMatrix& matrix, const std::string& target,
                               const std::vector<double>& costs, double budget,
                               const TieBreakPolicy& policy) {
    matrix.model_index(target); // id check
    if (costs.size() != matrix.m())
        throw InputError("costs must align with tasks");
    BriberyInstance instance;
    instance.profile.candidates = matrix.model_ids();
    for (const auto& task : matrix.task_ids())
        instance.profile.votes.push_back(induced_strict_ranking(matrix, task, policy));
    instance.preferred = target;
    instance.costs = costs;
    instance.budget = budget;
    instance.validate();
    return instance;
}

} // namespace leadrig
