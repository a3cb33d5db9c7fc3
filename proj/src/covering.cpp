#include "leadrig/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace leadrig {

void CoveringProgram::validate() const {
    if (weight.size() != constraints.size() || threshold.size() != constraints.size())
        throw InputError("covering program shape mismatch");
    for (std::size_t c = 0; c < constraints.size(); ++c) {
        if (weight[c].size() != items.size())
            throw InputError("covering program shape mismatch");
        if (!std::isfinite(threshold[c]) || threshold[c] < 0.0)
            throw InputError("covering threshold must be finite and nonnegative");
        for (double w : weight[c])
            if (!std::isfinite(w) || w < 0.0)
                throw InputError("covering weight must be finite and nonnegative");
    }
}

namespace {

double tol_abs(double threshold) {
    return kCoverTol * (threshold > 1.0 ? threshold : 1.0);
}

// Constraints not satisfied by the empty selection, with exact duplicates merged.
struct Reduced {
    std::vector<std::size_t> constraint; // original index
    std::vector<double> threshold;
};

Reduced reduce(const CoveringProgram& p) {
    Reduced r;
    std::map<std::pair<std::vector<double>, double>, bool> seen;
    for (std::size_t c = 0; c < p.constraints.size(); ++c) {
        if (covers(0.0, p.threshold[c])) continue;
        auto key = std::make_pair(p.weight[c], p.threshold[c]);
        if (!seen.emplace(std::move(key), true).second) continue;
        r.constraint.push_back(c);
        r.threshold.push_back(p.threshold[c]);
    }
    return r;
}

} // namespace

CoverResult greedy_cover(const CoveringProgram& program) {
    program.validate();
    Reduced red = reduce(program);
    std::size_t M = program.items.size();
    CoverResult result;
    std::vector<double> residual = red.threshold;
    std::vector<char> chosen(M, 0);
    auto satisfied = [&](std::size_t c) {
        return residual[c] <= tol_abs(red.threshold[c]);
    };
    while (true) {
        bool all_done = true;
        for (std::size_t c = 0; c < residual.size(); ++c)
            if (!satisfied(c)) { all_done = false; break; }
        if (all_done) break;
        std::size_t best = M;
        double best_red = 0.0;
        for (std::size_t i = 0; i < M; ++i) {
            if (chosen[i]) continue;
            double reduction = 0.0;
            for (std::size_t c = 0; c < residual.size(); ++c) {
                if (satisfied(c)) continue;
                reduction += std::min(program.weight[red.constraint[c]][i], residual[c]);
            }
            if (reduction > best_red) { best_red = reduction; best = i; }
        }
        if (best == M) return CoverResult{false, 0, {}};
        chosen[best] = 1;
        for (std::size_t c = 0; c < residual.size(); ++c)
            residual[c] -= program.weight[red.constraint[c]][best];
    }
    result.feasible = true;
    for (std::size_t i = 0; i < M; ++i)
        if (chosen[i]) result.chosen.push_back(i);
    result.k = static_cast<int>(result.chosen.size());
    return result;
}

int pairwise_lower_bound(const CoveringProgram& program) {
    program.validate();
    int bound = 0;
    for (std::size_t c = 0; c < program.constraints.size(); ++c) {
        if (covers(0.0, program.threshold[c])) continue;
        std::vector<double> w = program.weight[c];
        std::sort(w.begin(), w.end(), std::greater<>());
        double acc = 0.0;
        int k = static_cast<int>(w.size()) + 1; // sentinel: not coverable alone
        for (std::size_t i = 0; i < w.size(); ++i) {
            acc += w[i];
            if (covers(acc, program.threshold[c])) { k = static_cast<int>(i) + 1; break; }
        }
        bound = std::max(bound, k);
    }
    return bound;
}

namespace {

struct Search {
    const CoveringProgram* p;
    Reduced red;
    std::vector<std::size_t> order;           // item positions, search order
    std::vector<std::vector<double>> sufmax;  // [constraint][pos]
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    int best_k;
    std::vector<std::size_t> best_set;        // original item indices
    std::vector<char> selected;               // by position in `order`

    bool done(const std::vector<double>& residual) const {
        for (std::size_t c = 0; c < residual.size(); ++c)
            if (residual[c] > tol_abs(red.threshold[c])) return false;
        return true;
    }

    // depth + max_c ceil(residual_c / best remaining weight for c)
    int bound(std::size_t pos, int depth, const std::vector<double>& residual) const {
        int b = depth;
        for (std::size_t c = 0; c < residual.size(); ++c) {
            double r = residual[c] - tol_abs(red.threshold[c]);
            if (r <= 0.0) continue;
            double mw = sufmax[c][pos];
            if (mw <= 0.0) return std::numeric_limits<int>::max();
            int need = depth + static_cast<int>(std::ceil(r / mw - 1e-12));
            b = std::max(b, need);
        }
        return b;
    }

    void dfs(std::size_t pos, int depth, std::vector<double>& residual) {
        if (++nodes > budget)
            throw ResourceError("covering solver node budget exhausted");
        if (done(residual)) {
            if (depth < best_k) {
                best_k = depth;
                best_set.clear();
                for (std::size_t i = 0; i < order.size(); ++i)
                    if (selected[i]) best_set.push_back(order[i]);
            }
            return;
        }
        if (pos == order.size()) return;
        if (bound(pos, depth, residual) >= best_k) return;

        std::size_t item = order[pos];
        // include
        std::vector<double> saved = residual;
        for (std::size_t c = 0; c < residual.size(); ++c)
            residual[c] -= p->weight[red.constraint[c]][item];
        selected[pos] = 1;
        dfs(pos + 1, depth + 1, residual);
        selected[pos] = 0;
        residual = saved;
        // exclude
        dfs(pos + 1, depth, residual);
    }
};

} // namespace

CoverResult solve_exact(const CoveringProgram& program, std::uint64_t node_budget) {
    program.validate();
    Reduced red = reduce(program);
    if (red.constraint.empty()) return CoverResult{true, 0, {}};

    std::size_t M = program.items.size();
    for (std::size_t c = 0; c < red.constraint.size(); ++c) {
        double total = std::accumulate(program.weight[red.constraint[c]].begin(),
                                       program.weight[red.constraint[c]].end(), 0.0);
        if (!covers(total, red.threshold[c])) return CoverResult{false, 0, {}};
    }

    Search s;
    s.p = &program;
    s.red = red;
    s.budget = node_budget;
    s.order.resize(M);
    std::iota(s.order.begin(), s.order.end(), std::size_t{0});
    std::vector<double> maxw(M, 0.0);
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t c : red.constraint)
            maxw[i] = std::max(maxw[i], program.weight[c][i]);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](std::size_t a, std::size_t b) { return maxw[a] > maxw[b]; });

    s.sufmax.assign(red.constraint.size(), std::vector<double>(M + 1, 0.0));
    for (std::size_t c = 0; c < red.constraint.size(); ++c)
        for (std::size_t pos = M; pos-- > 0;)
            s.sufmax[c][pos] = std::max(s.sufmax[c][pos + 1],
                                        program.weight[red.constraint[c]][s.order[pos]]);

    CoverResult greedy = greedy_cover(program);
    s.best_k = greedy.feasible ? greedy.k : static_cast<int>(M) + 1;
    s.best_set = greedy.chosen;
    s.selected.assign(M, 0);

    std::vector<double> residual = red.threshold;
    s.dfs(0, 0, residual);

    CoverResult result;
    result.feasible = true;
    result.k = s.best_k;
    result.chosen = s.best_set;
    std::sort(result.chosen.begin(), result.chosen.end());
    return result;
}

} // namespace leadrig
