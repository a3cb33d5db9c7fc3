#include "leadrig/score_model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace leadrig {

std::string extract_namespace(const std::string& model_id) {
    std::string ns = model_id.substr(0, model_id.find('/'));
    std::transform(ns.begin(), ns.end(), ns.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return ns;
}

TieBreakPolicy::TieBreakPolicy(std::vector<std::string> explicit_order)
    : order_(std::move(explicit_order)) {
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (!rank_.emplace(order_[i], i).second)
            throw InputError("tie-break order contains duplicate id: " + order_[i]);
    }
}

bool TieBreakPolicy::prefers(const std::string& a, const std::string& b) const {
    if (order_.empty()) return a < b;
    auto ia = rank_.find(a);
    auto ib = rank_.find(b);
    if (ia == rank_.end() || ib == rank_.end())
        throw InputError("tie-break order does not cover model id");
    return ia->second < ib->second;
}

ScoreMatrix::ScoreMatrix(std::vector<std::string> model_ids,
                         std::vector<std::string> task_ids,
                         std::vector<double> scores_row_major,
                         std::vector<std::string> namespaces)
    : model_ids_(std::move(model_ids)),
      task_ids_(std::move(task_ids)),
      scores_(std::move(scores_row_major)),
      namespaces_(std::move(namespaces)) {
    if (model_ids_.empty() || task_ids_.empty())
        throw InputError("score matrix requires at least one model and one task");
    if (scores_.size() != model_ids_.size() * task_ids_.size())
        throw InputError("score matrix has wrong number of entries");
    for (double s : scores_) {
        if (!std::isfinite(s) || s < 0.0 || s > 1.0)
            throw InputError("score outside [0,1]: " + std::to_string(s));
    }
    for (std::size_t i = 0; i < model_ids_.size(); ++i) {
        if (!model_index_.emplace(model_ids_[i], i).second)
            throw InputError("duplicate model id: " + model_ids_[i]);
    }
    for (std::size_t j = 0; j < task_ids_.size(); ++j) {
        if (!task_index_.emplace(task_ids_[j], j).second)
            throw InputError("duplicate task id: " + task_ids_[j]);
    }
    if (namespaces_.empty()) {
        namespaces_.reserve(model_ids_.size());
        for (const auto& id : model_ids_) namespaces_.push_back(extract_namespace(id));
    } else if (namespaces_.size() != model_ids_.size()) {
        throw InputError("namespaces must align with model ids");
    }
}

std::size_t ScoreMatrix::model_index(const std::string& id) const {
    auto it = model_index_.find(id);
    if (it == model_index_.end()) throw InputError("unknown model id: " + id);
    return it->second;
}

std::size_t ScoreMatrix::task_index(const std::string& id) const {
    auto it = task_index_.find(id);
    if (it == task_index_.end()) throw InputError("unknown task id: " + id);
    return it->second;
}

ScoreMatrix ScoreMatrix::with_row(std::size_t model, std::vector<double> new_row) const {
    std::vector<double> scores = scores_;
    std::copy(new_row.begin(), new_row.end(), scores.begin() + model * m());
    return ScoreMatrix(model_ids_, task_ids_, std::move(scores), namespaces_);
}

void GainCaps::validate(const ScoreMatrix& matrix, std::size_t target) const {
    if (caps.size() != matrix.m())
        throw InputError("gain caps must align with task ids");
    for (std::size_t j = 0; j < caps.size(); ++j) {
        double bound = 1.0 - matrix.score(target, j);
        if (!std::isfinite(caps[j]) || caps[j] < 0.0 || caps[j] > bound + 1e-12)
            throw InputError("gain cap for task " + matrix.task_ids()[j] +
                             " outside [0, 1 - score]");
    }
}

double trained_score(double phi0, double gain) {
    if (gain >= 1.0 - phi0) return 1.0;
    double t = phi0 + gain;
    return t > 1.0 ? 1.0 : t;
}

GainCaps default_caps(const ScoreMatrix& matrix, const std::string& target) {
    std::size_t t = matrix.model_index(target);
    GainCaps caps;
    caps.caps.reserve(matrix.m());
    for (std::size_t j = 0; j < matrix.m(); ++j)
        caps.caps.push_back(1.0 - matrix.score(t, j));
    return caps;
}

std::vector<std::size_t> induced_strict_ranking_idx(const ScoreMatrix& matrix,
                                                    std::size_t task,
                                                    const TieBreakPolicy& policy) {
    std::vector<std::size_t> order(matrix.n());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        double sa = matrix.score(a, task);
        double sb = matrix.score(b, task);
        if (sa != sb) return sa > sb;
        return policy.prefers(matrix.model_ids()[a], matrix.model_ids()[b]);
    });
    return order;
}

std::vector<std::string> induced_strict_ranking(const ScoreMatrix& matrix,
                                                const std::string& task,
                                                const TieBreakPolicy& policy) {
    auto idx = induced_strict_ranking_idx(matrix, matrix.task_index(task), policy);
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(matrix.model_ids()[i]);
    return out;
}

ScoreMatrix apply_training(const ScoreMatrix& matrix, const TrainingScenario& scenario) {
    std::size_t t = matrix.model_index(scenario.target);
    scenario.caps.validate(matrix, t);
    std::vector<double> row(matrix.m());
    for (std::size_t j = 0; j < matrix.m(); ++j) row[j] = matrix.score(t, j);
    std::unordered_set<std::string> seen;
    for (const auto& task : scenario.selected) {
        std::size_t j = matrix.task_index(task);
        if (!seen.insert(task).second) continue;
        row[j] = trained_score(matrix.score(t, j), scenario.caps.caps[j]);
    }
    return matrix.with_row(t, std::move(row));
}

} // namespace leadrig
