#include "leadrig/robustness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

namespace leadrig {

namespace {

double row_sum(const ScoreMatrix& matrix, std::size_t model) {
    double s = 0.0;
    for (std::size_t j = 0; j < matrix.m(); ++j) s += matrix.score(model, j);
    return s;
}

// Tasks ordered by descending gain, ties by column index.
std::vector<std::size_t> tasks_by_gain(const std::vector<double>& caps) {
    std::vector<std::size_t> order(caps.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return caps[a] > caps[b]; });
    return order;
}

// Sorted score columns plus per-model win counts and totals, shared across
// targets for the win-rate computations.
struct WinCache {
    std::vector<std::vector<double>> sorted_col; // [task]
    std::vector<std::vector<int>> counts;        // [model][task] n * w_D
    std::vector<long long> totals;               // [model] n*m*w

    explicit WinCache(const ScoreMatrix& matrix) {
        std::size_t n = matrix.n(), m = matrix.m();
        sorted_col.assign(m, std::vector<double>(n));
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t i = 0; i < n; ++i) sorted_col[j][i] = matrix.score(i, j);
            std::sort(sorted_col[j].begin(), sorted_col[j].end());
        }
        counts = win_counts(matrix);
        totals.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) totals[i] += counts[i][j];
    }

    int count_leq(std::size_t task, double value) const {
        auto& col = sorted_col[task];
        return static_cast<int>(std::upper_bound(col.begin(), col.end(), value) - col.begin());
    }
};

// Integer pairwise gains n*q_D(A): [model][task], zero on the target's row.
std::vector<std::vector<int>> gain_counts(const ScoreMatrix& matrix, std::size_t target,
                                          const GainCaps& caps, const WinCache& cache) {
    std::size_t n = matrix.n(), m = matrix.m();
    std::vector<std::vector<int>> nq(n, std::vector<int>(m, 0));
    for (std::size_t j = 0; j < m; ++j) {
        double phi0 = matrix.score(target, j);
        double phiT = trained_score(phi0, caps.caps[j]);
        // New win count of the target on task j: the old self value stays <= phiT,
        // so counting values <= phiT over the untouched column is exact.
        int gain1 = cache.count_leq(j, phiT) - cache.counts[target][j];
        for (std::size_t a = 0; a < n; ++a) {
            if (a == target) continue;
            double sa = matrix.score(a, j);
            int loss = (sa >= phi0 ? 1 : 0) - (sa >= phiT ? 1 : 0);
            nq[a][j] = gain1 + loss;
        }
    }
    return nq;
}

// min prefix length of descending-sorted weights covering the threshold;
// returns weights.size()+1 when even the full sum falls short.
int prefix_cover(std::vector<long long> weights, long long threshold) {
    if (threshold <= 0) return 0;
    std::sort(weights.begin(), weights.end(), std::greater<>());
    long long acc = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (acc >= threshold) return static_cast<int>(i) + 1;
    }
    return static_cast<int>(weights.size()) + 1;
}

RobustnessResult k_win_global_impl(const ScoreMatrix& matrix, std::size_t t,
                                   const GainCaps& caps, const WinCache& cache,
                                   std::uint64_t node_budget) {
    std::size_t n = matrix.n(), m = matrix.m();
    auto nq = gain_counts(matrix, t, caps, cache);

    RobustnessResult result;
    result.rule = Rule::WinRate;
    result.target = matrix.model_ids()[t];

    CoveringProgram prog;
    prog.items = matrix.task_ids();
    long long max_thr = 0;
    int lb = 0;
    for (std::size_t a = 0; a < n; ++a) {
        if (a == t) continue;
        long long thr = cache.totals[a] - cache.totals[t]; // n*m*d_win, exact
        if (thr <= 0) continue;
        max_thr = std::max(max_thr, thr);
        std::vector<double> w(m);
        std::vector<long long> wi(m);
        for (std::size_t j = 0; j < m; ++j) {
            w[j] = static_cast<double>(nq[a][j]);
            wi[j] = nq[a][j];
        }
        lb = std::max(lb, prefix_cover(std::move(wi), thr));
        prog.constraints.push_back(matrix.model_ids()[a]);
        prog.weight.push_back(std::move(w));
        prog.threshold.push_back(static_cast<double>(thr));
    }
    result.deficit = static_cast<double>(max_thr) /
                     (static_cast<double>(n) * static_cast<double>(m));
    if (prog.constraints.empty()) return result; // already weakly top

    CoverResult cover = solve_exact(prog, node_budget);
    if (!cover.feasible) {
        result.feasible = false;
        result.lower_bound = lb;
        return result;
    }
    result.k = cover.k;
    for (std::size_t j : cover.chosen) result.witness.push_back(matrix.task_ids()[j]);
    result.lower_bound = lb;
    return result;
}

// Tasks where the competitor strictly beats the target.
std::vector<std::size_t> losing_tasks(const ScoreMatrix& matrix, std::size_t t,
                                      std::size_t a) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < matrix.m(); ++j)
        if (matrix.score(a, j) > matrix.score(t, j)) out.push_back(j);
    return out;
}

int maj_deficit(const ScoreMatrix& matrix, std::size_t l0_size) {
    int m = static_cast<int>(matrix.m());
    int mu = (m + 1) / 2;
    return std::max(0, mu - (m - static_cast<int>(l0_size)));
}

RobustnessResult k_maj_global_impl(const ScoreMatrix& matrix, std::size_t t,
                                   std::uint64_t node_budget) {
    std::size_t n = matrix.n(), m = matrix.m();
    RobustnessResult result;
    result.rule = Rule::Majority;
    result.target = matrix.model_ids()[t];

    CoveringProgram prog;
    prog.items = matrix.task_ids();
    int max_def = 0;
    for (std::size_t a = 0; a < n; ++a) {
        if (a == t) continue;
        auto l0 = losing_tasks(matrix, t, a);
        int def = maj_deficit(matrix, l0.size());
        if (def == 0) continue;
        max_def = std::max(max_def, def);
        std::vector<double> w(m, 0.0);
        for (std::size_t j : l0) w[j] = 1.0;
        prog.constraints.push_back(matrix.model_ids()[a]);
        prog.weight.push_back(std::move(w));
        prog.threshold.push_back(static_cast<double>(def));
    }
    result.deficit = static_cast<double>(max_def);
    result.lower_bound = max_def;
    if (prog.constraints.empty()) return result;

    CoverResult cover = solve_exact(prog, node_budget); // always feasible
    result.k = cover.k;
    for (std::size_t j : cover.chosen) result.witness.push_back(matrix.task_ids()[j]);
    return result;
}

} // namespace

RobustnessResult k_mean(const ScoreMatrix& matrix, const std::string& target,
                        const GainCaps& caps) {
    std::size_t t = matrix.model_index(target);
    caps.validate(matrix, t);
    RobustnessResult result;
    result.rule = Rule::Mean;
    result.target = target;

    double sum_t = row_sum(matrix, t);
    double need = 0.0; // m * Delta_mean
    for (std::size_t a = 0; a < matrix.n(); ++a) {
        if (a == t) continue;
        need = std::max(need, row_sum(matrix, a) - sum_t);
    }
    result.deficit = need / static_cast<double>(matrix.m());
    if (covers(0.0, need)) return result;

    auto order = tasks_by_gain(caps.caps);
    double acc = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        acc += caps.caps[order[i]];
        result.witness.push_back(matrix.task_ids()[order[i]]);
        if (covers(acc, need)) {
            result.k = static_cast<int>(i) + 1;
            return result;
        }
    }
    result.feasible = false;
    result.k = 0;
    result.witness.clear();
    return result;
}

RobustnessResult k_median(const ScoreMatrix& matrix, const std::string& target,
                          const GainCaps& caps) {
    std::size_t t = matrix.model_index(target);
    caps.validate(matrix, t);
    RobustnessResult result;
    result.rule = Rule::Median;
    result.target = target;

    std::size_t m = matrix.m();
    if (matrix.n() == 1) return result;

    double tau = 0.0;
    bool first = true;
    std::vector<double> row(m);
    for (std::size_t a = 0; a < matrix.n(); ++a) {
        if (a == t) continue;
        for (std::size_t j = 0; j < m; ++j) row[j] = matrix.score(a, j);
        double med = upper_median(row);
        if (first || med > tau) { tau = med; first = false; }
    }
    result.tau = tau;

    int already = 0;
    std::vector<std::size_t> pushable;
    for (std::size_t j = 0; j < m; ++j) {
        double phi0 = matrix.score(t, j);
        if (phi0 >= tau) {
            ++already;
        } else if (trained_score(phi0, caps.caps[j]) >= tau) {
            pushable.push_back(j);
        }
    }
    int needed = static_cast<int>(m) - static_cast<int>(m / 2); // m - h + 1 = ceil(m/2)
    int deficit = std::max(0, needed - already);
    result.deficit = static_cast<double>(deficit);
    if (deficit == 0) return result;
    if (static_cast<int>(pushable.size()) < deficit) {
        result.feasible = false;
        return result;
    }
    std::stable_sort(pushable.begin(), pushable.end(), [&](std::size_t a, std::size_t b) {
        return caps.caps[a] > caps.caps[b];
    });
    result.k = deficit;
    for (int i = 0; i < deficit; ++i)
        result.witness.push_back(matrix.task_ids()[pushable[i]]);
    std::sort(result.witness.begin(), result.witness.end());
    return result;
}

std::vector<std::vector<double>> pairwise_gains(const ScoreMatrix& matrix,
                                                const std::string& target,
                                                const GainCaps& caps) {
    std::size_t t = matrix.model_index(target);
    caps.validate(matrix, t);
    WinCache cache(matrix);
    auto nq = gain_counts(matrix, t, caps, cache);
    std::vector<std::vector<double>> q(matrix.n(), std::vector<double>(matrix.m(), 0.0));
    for (std::size_t a = 0; a < matrix.n(); ++a)
        for (std::size_t j = 0; j < matrix.m(); ++j)
            q[a][j] = nq[a][j] / static_cast<double>(matrix.n());
    return q;
}

RobustnessResult k_win_pairwise(const ScoreMatrix& matrix, const std::string& target,
                                const std::string& competitor, const GainCaps& caps) {
    std::size_t t = matrix.model_index(target);
    std::size_t a = matrix.model_index(competitor);
    if (t == a) throw InputError("competitor must differ from target");
    caps.validate(matrix, t);
    WinCache cache(matrix);
    auto nq = gain_counts(matrix, t, caps, cache);

    RobustnessResult result;
    result.rule = Rule::WinRate;
    result.target = target;
    long long thr = cache.totals[a] - cache.totals[t];
    result.deficit = std::max(0.0, static_cast<double>(thr) /
                                       (static_cast<double>(matrix.n()) *
                                        static_cast<double>(matrix.m())));
    if (thr <= 0) return result;

    std::vector<std::size_t> order(matrix.m());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return nq[a][x] > nq[a][y];
    });
    long long acc = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        acc += nq[a][order[i]];
        result.witness.push_back(matrix.task_ids()[order[i]]);
        if (acc >= thr) {
            result.k = static_cast<int>(i) + 1;
            return result;
        }
    }
    result.feasible = false;
    result.witness.clear();
    return result;
}

RobustnessResult k_win_global(const ScoreMatrix& matrix, const std::string& target,
                              const GainCaps& caps, std::uint64_t node_budget) {
    std::size_t t = matrix.model_index(target);
    caps.validate(matrix, t);
    WinCache cache(matrix);
    return k_win_global_impl(matrix, t, caps, cache, node_budget);
}

RobustnessResult k_maj_pairwise(const ScoreMatrix& matrix, const std::string& target,
                                const std::string& competitor) {
    std::size_t t = matrix.model_index(target);
    std::size_t a = matrix.model_index(competitor);
    if (t == a) throw InputError("competitor must differ from target");
    RobustnessResult result;
    result.rule = Rule::Majority;
    result.target = target;
    auto l0 = losing_tasks(matrix, t, a);
    int def = maj_deficit(matrix, l0.size());
    result.deficit = static_cast<double>(def);
    result.k = def;
    for (int i = 0; i < def; ++i) result.witness.push_back(matrix.task_ids()[l0[i]]);
    return result;
}

RobustnessResult k_maj_global(const ScoreMatrix& matrix, const std::string& target,
                              std::uint64_t node_budget) {
    return k_maj_global_impl(matrix, matrix.model_index(target), node_budget);
}

std::optional<double> normalized(const RobustnessResult& result, const ScoreMatrix& matrix,
                                 const std::string& target, const GainCaps& caps) {
    if (!result.feasible) throw InputError("normalized robustness of an infeasible result");
    if (result.k == 0) return 0.0;
    std::size_t t = matrix.model_index(target);
    std::size_t n = matrix.n(), m = matrix.m();

    switch (result.rule) {
        case Rule::Mean: {
            double sum_t = row_sum(matrix, t);
            double need = 0.0;
            for (std::size_t a = 0; a < n; ++a)
                if (a != t) need = std::max(need, row_sum(matrix, a) - sum_t);
            double room = 1.0 - sum_t / static_cast<double>(m);
            if (room <= 0.0) return std::nullopt;
            double denom = std::min(std::ceil(need / room - 1e-9),
                                    static_cast<double>(m));
            if (denom <= 0.0) return std::nullopt;
            return result.k / denom;
        }
        case Rule::Median: {
            if (!result.tau) return std::nullopt;
            double tau = *result.tau;
            int pushable = 0;
            for (std::size_t j = 0; j < m; ++j) {
                double phi0 = matrix.score(t, j);
                if (phi0 < tau && trained_score(phi0, caps.caps[j]) >= tau) ++pushable;
            }
            if (pushable == 0) return std::nullopt;
            return static_cast<double>(result.k) / pushable;
        }
        case Rule::WinRate: {
            WinCache cache(matrix);
            auto nq = gain_counts(matrix, t, caps, cache);
            long long best_thr = 0;
            std::size_t best_a = n;
            for (std::size_t a = 0; a < n; ++a) {
                if (a == t) continue;
                long long thr = cache.totals[a] - cache.totals[t];
                if (thr > best_thr) { best_thr = thr; best_a = a; }
            }
            if (best_a == n) return std::nullopt;
            long long q_sum = 0;
            for (std::size_t j = 0; j < m; ++j) q_sum += nq[best_a][j];
            if (q_sum == 0) return std::nullopt;
            // ceil(m*Delta_win / mean q) with both sides scaled by n*m
            long long denom_ll = (best_thr * static_cast<long long>(m) + q_sum - 1) / q_sum;
            long long denom = std::min<long long>(denom_ll, static_cast<long long>(m));
            if (denom <= 0) return std::nullopt;
            return static_cast<double>(result.k) / static_cast<double>(denom);
        }
        case Rule::Majority: {
            std::vector<char> useful(m, 0);
            for (std::size_t a = 0; a < n; ++a) {
                if (a == t) continue;
                auto l0 = losing_tasks(matrix, t, a);
                if (maj_deficit(matrix, l0.size()) == 0) continue;
                for (std::size_t j : l0) useful[j] = 1;
            }
            int denom = static_cast<int>(std::count(useful.begin(), useful.end(), char(1)));
            if (denom == 0) return std::nullopt;
            return static_cast<double>(result.k) / denom;
        }
        case Rule::Borda:
            return std::nullopt;
    }
    return std::nullopt;
}

RobustnessResult brute_force_k(const ScoreMatrix& matrix, const std::string& target,
                               const GainCaps& caps, Rule rule, std::size_t task_limit) {
    if (matrix.m() > task_limit)
        throw ResourceError("brute-force oracle limited to " + std::to_string(task_limit) +
                            " tasks");
    std::size_t t = matrix.model_index(target);
    caps.validate(matrix, t);
    std::size_t n = matrix.n(), m = matrix.m();

    std::vector<double> base_row(m);
    for (std::size_t j = 0; j < m; ++j) base_row[j] = matrix.score(t, j);

    // Per-rule weak top check on a trained target row.
    auto is_top = [&](const std::vector<double>& row) {
        switch (rule) {
            case Rule::Mean: {
                double sum_t = std::accumulate(row.begin(), row.end(), 0.0);
                for (std::size_t a = 0; a < n; ++a) {
                    if (a == t) continue;
                    if (!covers(sum_t, row_sum(matrix, a))) return false;
                }
                return true;
            }
            case Rule::Median: {
                double med_t = upper_median(row);
                std::vector<double> arow(m);
                for (std::size_t a = 0; a < n; ++a) {
                    if (a == t) continue;
                    for (std::size_t j = 0; j < m; ++j) arow[j] = matrix.score(a, j);
                    if (med_t < upper_median(arow)) return false;
                }
                return true;
            }
            case Rule::WinRate: {
                std::vector<long long> totals(n, 0);
                for (std::size_t j = 0; j < m; ++j) {
                    for (std::size_t a = 0; a < n; ++a) {
                        double sa = (a == t) ? row[j] : matrix.score(a, j);
                        int c = 0;
                        for (std::size_t b = 0; b < n; ++b) {
                            double sb = (b == t) ? row[j] : matrix.score(b, j);
                            c += sa >= sb ? 1 : 0;
                        }
                        totals[a] += c;
                    }
                }
                for (std::size_t a = 0; a < n; ++a)
                    if (a != t && totals[t] < totals[a]) return false;
                return true;
            }
            case Rule::Majority: {
                int mu = static_cast<int>((m + 1) / 2);
                for (std::size_t a = 0; a < n; ++a) {
                    if (a == t) continue;
                    int c = 0;
                    for (std::size_t j = 0; j < m; ++j)
                        c += row[j] >= matrix.score(a, j) ? 1 : 0;
                    if (c < mu) return false;
                }
                return true;
            }
            case Rule::Borda: {
                ScoreMatrix trained = matrix.with_row(t, row);
                auto scores = borda_scores(trained);
                for (std::size_t a = 0; a < n; ++a)
                    if (a != t && scores[t] < scores[a]) return false;
                return true;
            }
        }
        return false;
    };

    RobustnessResult result;
    result.rule = rule;
    result.target = target;

    std::vector<double> row = base_row;
    for (std::size_t k = 0; k <= m; ++k) {
        // combinations of size k in ascending column order
        std::vector<std::size_t> comb(k);
        std::iota(comb.begin(), comb.end(), std::size_t{0});
        while (true) {
            row = base_row;
            for (std::size_t j : comb) row[j] = trained_score(base_row[j], caps.caps[j]);
            if (is_top(row)) {
                result.k = static_cast<int>(k);
                for (std::size_t j : comb) result.witness.push_back(matrix.task_ids()[j]);
                return result;
            }
            if (k == 0) break;
            // next combination
            std::size_t i = k;
            while (i-- > 0) {
                if (comb[i] + (k - i) <= m - 1) {
                    ++comb[i];
                    for (std::size_t l = i + 1; l < k; ++l) comb[l] = comb[l - 1] + 1;
                    break;
                }
                if (i == 0) { i = k + 1; break; }
            }
            if (i == k + 1) break;
        }
    }
    result.feasible = false;
    return result;
}

CapsPolicy default_caps_policy() {
    return [](const ScoreMatrix& matrix, const std::string& target) {
        return default_caps(matrix, target);
    };
}

std::vector<RobustnessResult> all_targets(const ScoreMatrix& matrix, Rule rule,
                                          const CapsPolicy& caps_policy,
                                          unsigned threads, std::uint64_t node_budget) {
    std::size_t n = matrix.n();
    std::vector<RobustnessResult> results(n);
    WinCache cache(matrix);

    auto run_one = [&](std::size_t t) {
        const std::string& target = matrix.model_ids()[t];
        GainCaps caps = caps_policy(matrix, target);
        RobustnessResult r;
        switch (rule) {
            case Rule::Mean:
                r = k_mean(matrix, target, caps);
                break;
            case Rule::Median:
                r = k_median(matrix, target, caps);
                break;
            case Rule::WinRate: {
                caps.validate(matrix, t);
                r = k_win_global_impl(matrix, t, caps, cache, node_budget);
                break;
            }
            case Rule::Majority: {
                for (std::size_t j = 0; j < matrix.m(); ++j)
                    if (caps.caps[j] != 1.0 - matrix.score(t, j))
                        throw InputError("pairwise majority requires default (score-to-1) caps");
                r = k_maj_global_impl(matrix, t, node_budget);
                break;
            }
            case Rule::Borda:
                throw InputError("robustness analysis covers mean, median, winrate, majority");
        }
        if (r.feasible) r.normalized = normalized(r, matrix, target, caps);
        results[t] = std::move(r);
    };

    if (threads <= 1 || n < 2) {
        for (std::size_t t = 0; t < n; ++t) run_one(t);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (true) {
            std::size_t t = next.fetch_add(1);
            if (t >= n) return;
            try {
                run_one(t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(n));
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return results;
}

} // namespace leadrig
