#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "leadrig/errors.hpp"

namespace leadrig {

// Namespace of a model id: lowercased part before the first '/',
// or the whole lowercased id when there is no slash.
std::string extract_namespace(const std::string& model_id);

// Deterministic tie-breaking over model ids. An empty explicit order means
// plain ascending lexicographic comparison of the id strings.
class TieBreakPolicy {
public:
    TieBreakPolicy() = default;
    explicit TieBreakPolicy(std::vector<std::string> explicit_order);

    static TieBreakPolicy lexicographic() { return TieBreakPolicy{}; }

    // True when `a` ranks before `b`.
    bool prefers(const std::string& a, const std::string& b) const;

private:
    std::vector<std::string> order_;
    std::unordered_map<std::string, std::size_t> rank_;
};

// Immutable n×m matrix of scores in [0,1], models by rows, tasks by columns.
class ScoreMatrix {
public:
    ScoreMatrix(std::vector<std::string> model_ids,
                std::vector<std::string> task_ids,
                std::vector<double> scores_row_major,
                std::vector<std::string> namespaces = {});

    std::size_t n() const { return model_ids_.size(); }
    std::size_t m() const { return task_ids_.size(); }

    const std::vector<std::string>& model_ids() const { return model_ids_; }
    const std::vector<std::string>& task_ids() const { return task_ids_; }
    const std::vector<std::string>& namespaces() const { return namespaces_; }

    double score(std::size_t model, std::size_t task) const {
        return scores_[model * task_ids_.size() + task];
    }
    const std::vector<double>& raw_scores() const { return scores_; }

    std::size_t model_index(const std::string& id) const;
    std::size_t task_index(const std::string& id) const;

    ScoreMatrix with_row(std::size_t model, std::vector<double> new_row) const;

private:
    std::vector<std::string> model_ids_;
    std::vector<std::string> task_ids_;
    std::vector<double> scores_;
    std::vector<std::string> namespaces_;
    std::unordered_map<std::string, std::size_t> model_index_;
    std::unordered_map<std::string, std::size_t> task_index_;
};

// Per-task maximal gains G_D for a fixed target model, aligned with task_ids.
struct GainCaps {
    std::vector<double> caps;

    // Throws InputError when some cap lies outside [0, 1 - score(target, D)].
    void validate(const ScoreMatrix& matrix, std::size_t target) const;
};

struct TrainingScenario {
    std::string target;
    std::vector<std::string> selected; // task ids
    GainCaps caps;
};

// The score the target reaches on a task after training with gain g.
// Exactly 1.0 when the gain saturates the cap 1 - phi0.
double trained_score(double phi0, double gain);

// Caps realizing score-to-1 training: G_D = 1 - score(target, D).
GainCaps default_caps(const ScoreMatrix& matrix, const std::string& target);

// Strict per-task ranking, best first: descending score, ties by policy.
std::vector<std::string> induced_strict_ranking(const ScoreMatrix& matrix,
                                                const std::string& task,
                                                const TieBreakPolicy& policy = {});

// Same ranking as model indices (cheaper for internal callers).
std::vector<std::size_t> induced_strict_ranking_idx(const ScoreMatrix& matrix,
                                                    std::size_t task,
                                                    const TieBreakPolicy& policy = {});

// phi^0 -> phi^T: only the target row changes, and only on selected tasks.
ScoreMatrix apply_training(const ScoreMatrix& matrix, const TrainingScenario& scenario);

} // namespace leadrig
