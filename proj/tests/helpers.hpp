#pragma once

#include <random>
#include <string>
#include <vector>

#include "leadrig/score_model.hpp"

namespace testutil {

// Row-major convenience constructor.
inline leadrig::ScoreMatrix matrix(std::vector<std::string> models,
                                   std::vector<std::string> tasks,
                                   std::vector<std::vector<double>> rows) {
    std::vector<double> flat;
    for (auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
    return leadrig::ScoreMatrix(std::move(models), std::move(tasks), std::move(flat));
}

// Random matrix with two-decimal scores.
inline leadrig::ScoreMatrix random_matrix(std::mt19937_64& rng, std::size_t n,
                                          std::size_t m, bool distinct_columns = false) {
    std::vector<std::string> models, tasks;
    for (std::size_t i = 0; i < n; ++i) models.push_back("m" + std::to_string(i));
    for (std::size_t j = 0; j < m; ++j) tasks.push_back("t" + std::to_string(j));
    std::vector<double> scores(n * m);
    if (distinct_columns) {
        // draw n distinct two-decimal values per column
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<int> pool(101);
            for (int v = 0; v <= 100; ++v) pool[v] = v;
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t pick = i + rng() % (pool.size() - i);
                std::swap(pool[i], pool[pick]);
                scores[i * m + j] = pool[i] / 100.0;
            }
        }
    } else {
        for (auto& s : scores) s = static_cast<double>(rng() % 101) / 100.0;
    }
    return leadrig::ScoreMatrix(std::move(models), std::move(tasks), std::move(scores));
}

} // namespace testutil
