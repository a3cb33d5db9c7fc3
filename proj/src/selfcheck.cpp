#include "leadrig/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace leadrig {

RandomInstance random_instance(std::uint64_t seed, std::size_t index, std::size_t max_n,
                               std::size_t max_m, std::size_t restricted_every) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (index + 1));
    std::size_t n = 2 + rng() % (max_n - 1);
    std::size_t m = 2 + rng() % (max_m - 1);

    std::vector<std::string> models, tasks;
    for (std::size_t i = 0; i < n; ++i) models.push_back("m" + std::to_string(i));
    for (std::size_t j = 0; j < m; ++j)
        tasks.push_back("t" + std::string(j < 10 ? "0" : "") + std::to_string(j));

    std::vector<double> scores(n * m);
    for (auto& s : scores) s = static_cast<double>(rng() % 101) / 100.0;
    ScoreMatrix matrix(models, tasks, std::move(scores));

    RandomInstance inst{matrix, models[rng() % n], GainCaps{}, true};
    std::size_t t = matrix.model_index(inst.target);
    bool restricted = restricted_every > 0 && (index % restricted_every == 0);
    inst.default_caps = !restricted;
    for (std::size_t j = 0; j < m; ++j) {
        double bound = 1.0 - matrix.score(t, j);
        if (restricted) {
            double cap = static_cast<double>(rng() % 101) / 100.0 * bound;
            cap = std::round(cap * 100.0) / 100.0;
            inst.caps.caps.push_back(std::min(cap, bound));
        } else {
            inst.caps.caps.push_back(bound);
        }
    }
    return inst;
}

OracleCheckReport oracle_check(std::size_t instances, std::uint64_t seed,
                               std::size_t max_n, std::size_t max_m,
                               std::size_t oracle_limit) {
    if (max_m > oracle_limit)
        throw InputError("max_m exceeds the brute-force oracle limit");
    OracleCheckReport report;
    report.instances = instances;
    for (std::size_t i = 0; i < instances; ++i) {
        RandomInstance inst = random_instance(seed, i, max_n, max_m);
        for (Rule rule : {Rule::Mean, Rule::Median, Rule::WinRate, Rule::Majority}) {
            if (rule == Rule::Majority && !inst.default_caps) continue;
            RobustnessResult fast;
            switch (rule) {
                case Rule::Mean:
                    fast = k_mean(inst.matrix, inst.target, inst.caps);
                    break;
                case Rule::Median:
                    fast = k_median(inst.matrix, inst.target, inst.caps);
                    break;
                case Rule::WinRate:
                    fast = k_win_global(inst.matrix, inst.target, inst.caps);
                    break;
                default:
                    fast = k_maj_global(inst.matrix, inst.target);
                    break;
            }
            RobustnessResult oracle =
                brute_force_k(inst.matrix, inst.target, inst.caps, rule, oracle_limit);
            ++report.comparisons;
            ++report.per_rule[rule_name(rule)];
            if (fast.feasible != oracle.feasible ||
                (fast.feasible && fast.k != oracle.k)) {
                std::string detail =
                    "closed form: " +
                    (fast.feasible ? std::to_string(fast.k) : std::string("INFEASIBLE")) +
                    ", oracle: " +
                    (oracle.feasible ? std::to_string(oracle.k)
                                     : std::string("INFEASIBLE"));
                report.mismatches.push_back({i, rule, inst.target, detail});
            }
        }
    }
    return report;
}

} // namespace leadrig
