#pragma once

#include <map>
#include <string>
#include <vector>

#include "leadrig/score_model.hpp"

namespace leadrig {

enum class ScoreFormat { Auto, CsvLong, CsvWide, Json };

struct RawRecord {
    std::string model;
    std::string task;
    double score;
};

using RawRecords = std::vector<RawRecord>;

// Supported inputs:
//   CSV long form:  header `model,task,score`, one triple per row
//   CSV wide form:  first header `task`, remaining headers are model ids,
//                   blank cells are missing entries
//   JSON:           { "model": { "task": score, ... }, ... }
// Auto picks by extension (.json) and CSV header shape.
RawRecords parse_scores(const std::string& path, ScoreFormat format = ScoreFormat::Auto);

struct PreprocessReport {
    std::vector<std::string> dropped_models;
    std::vector<std::string> dropped_tasks;
    std::map<std::string, int> duplicate_counts; // "model|task" -> entries averaged
    std::size_t n = 0;
    std::size_t m = 0;
};

struct BuiltMatrix {
    ScoreMatrix matrix;
    PreprocessReport report;
};

// Average duplicates, drop all-missing tasks, drop incomplete models, drop
// residual incomplete tasks. Model and task ids come out sorted, so the
// result is independent of record order.
BuiltMatrix build_matrix(const RawRecords& records);

// One model per namespace: the mean-score argmax, ties by model-id order.
ScoreMatrix best_per_namespace(const ScoreMatrix& matrix);

} // namespace leadrig
