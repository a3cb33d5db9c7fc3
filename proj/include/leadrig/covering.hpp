#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leadrig/errors.hpp"

namespace leadrig {

// Binary covering instance: pick a minimum-cardinality item set S so that
// sum_{D in S} weight[c][D] >= threshold[c] for every constraint c.
struct CoveringProgram {
    std::vector<std::string> items;
    std::vector<std::string> constraints;
    std::vector<std::vector<double>> weight; // [constraint][item], >= 0
    std::vector<double> threshold;           // [constraint], >= 0

    void validate() const;
};

struct CoverResult {
    bool feasible = false;
    int k = 0;
    std::vector<std::size_t> chosen; // item indices, ascending
};

// Relative tolerance applied to threshold satisfaction checks.
inline constexpr double kCoverTol = 1e-9;

inline bool covers(double sum, double threshold) {
    return sum >= threshold - kCoverTol * (threshold > 1.0 ? threshold : 1.0);
}

// Greedy incumbent: repeatedly take the item with the largest total residual
// deficit reduction (ties by item index). Never better than solve_exact.
CoverResult greedy_cover(const CoveringProgram& program);

// max over constraints of the descending-weight prefix length needed for that
// constraint alone. Admissible lower bound for solve_exact.
int pairwise_lower_bound(const CoveringProgram& program);

// Exact branch-and-bound. Throws ResourceError when node_budget is exhausted.
CoverResult solve_exact(const CoveringProgram& program,
                        std::uint64_t node_budget = 100'000'000);

} // namespace leadrig
