#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leadrig/robustness.hpp"

namespace leadrig {

struct RandomInstance {
    ScoreMatrix matrix;
    std::string target;
    GainCaps caps;
    bool default_caps = true;
};

// Seeded random matrix: n in [2,max_n], m in [2,max_m], scores uniform on
// {0.00, 0.01, ..., 1.00}. Every `restricted_every`-th instance draws random
// two-decimal caps instead of score-to-1 caps.
RandomInstance random_instance(std::uint64_t seed, std::size_t index, std::size_t max_n,
                               std::size_t max_m, std::size_t restricted_every = 4);

struct OracleMismatch {
    std::size_t instance_index;
    Rule rule;
    std::string target;
    std::string detail;
};

struct OracleCheckReport {
    std::size_t instances = 0;
    std::size_t comparisons = 0;
    std::map<std::string, std::size_t> per_rule; // rule name -> comparisons run
    std::vector<OracleMismatch> mismatches;
};

// Compare k_mean / k_median / k_win_global / k_maj_global against the
// brute-force oracle on seeded random instances. Majority is skipped for
// restricted-cap instances (the closed form requires score-to-1 caps).
OracleCheckReport oracle_check(std::size_t instances, std::uint64_t seed,
                               std::size_t max_n, std::size_t max_m,
                               std::size_t oracle_limit = 20);

} // namespace leadrig
