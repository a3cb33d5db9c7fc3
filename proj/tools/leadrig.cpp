// leadrig: leaderboard robustness analysis CLI.
//
// Subcommands:
//   robustness    per-target minimum training-set sizes under each rule
//   summary       medians, k-threshold fractions, bootstrap CIs, ECDF points
//   compare       paired rule comparisons (Wilcoxon + Holm)
//   bribery       shift-bribery translation and minimum bribery cost
//   oracle-check  closed forms vs. brute-force oracle on random instances
//
// Exit codes: 0 ok, 2 input error, 3 resource limit, 4 verification failure.

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leadrig/aggregation.hpp"
#include "leadrig/bribery.hpp"
#include "leadrig/ingest.hpp"
#include "leadrig/robustness.hpp"
#include "leadrig/selfcheck.hpp"
#include "leadrig/stats.hpp"

using json = nlohmann::ordered_json;
using namespace leadrig;

namespace {

// Shortest round-trip decimal form, deterministic across runs.
std::string fmt_num(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write output file: " + path);
    out << content;
}

unsigned worker_threads() {
    if (const char* env = std::getenv("LEADRIG_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1u;
}

ScoreFormat parse_format(const std::string& name) {
    if (name == "auto") return ScoreFormat::Auto;
    if (name == "csv-long") return ScoreFormat::CsvLong;
    if (name == "csv-wide") return ScoreFormat::CsvWide;
    if (name == "json") return ScoreFormat::Json;
    throw InputError("unknown input format: " + name);
}

std::vector<Rule> parse_rules(const std::vector<std::string>& names) {
    std::vector<Rule> rules;
    if (names.empty()) {
        rules = {Rule::Mean, Rule::Median, Rule::WinRate, Rule::Majority};
    } else {
        for (const auto& name : names) rules.push_back(rule_from_name(name));
    }
    return rules;
}

// Per-task caps file: JSON object {task: cap} or CSV with header task,cap.
std::map<std::string, double> parse_caps_file(const std::string& path) {
    std::map<std::string, double> caps;
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        std::ifstream in(path);
        if (!in) throw InputError("cannot read caps file: " + path);
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const std::exception& e) {
            throw InputError(path + ": invalid JSON: " + e.what());
        }
        if (!doc.is_object()) throw InputError(path + ": expected task -> cap object");
        for (auto& [task, value] : doc.items()) {
            if (!value.is_number()) throw InputError(path + ": cap for " + task);
            caps[task] = value.get<double>();
        }
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot read caps file: " + path);
        std::string line;
        if (!std::getline(in, line) || line.rfind("task,cap", 0) != 0)
            throw InputError(path + ": caps CSV requires header task,cap");
        int line_no = 1;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            auto comma = line.find(',');
            if (comma == std::string::npos || comma == 0)
                throw InputError(path + ":" + std::to_string(line_no) + ": malformed row");
            caps[line.substr(0, comma)] = std::stod(line.substr(comma + 1));
        }
    }
    for (const auto& [task, cap] : caps)
        if (!(cap >= 0.0 && cap <= 1.0))
            throw InputError(path + ": cap outside [0,1] for task " + task);
    return caps;
}

struct LoadedInput {
    ScoreMatrix matrix;
    PreprocessReport report;
};

LoadedInput load_input(const std::string& path, const std::string& format,
                       bool dedup_namespaces) {
    auto records = parse_scores(path, parse_format(format));
    auto built = build_matrix(records);
    if (dedup_namespaces)
        return LoadedInput{best_per_namespace(built.matrix), built.report};
    return LoadedInput{built.matrix, built.report};
}

// File caps are clamped into [0, 1 - score] per target; DEFAULT is score-to-1.
CapsPolicy make_caps_policy(const std::string& caps_spec) {
    if (caps_spec.empty() || caps_spec == "DEFAULT") return default_caps_policy();
    auto file_caps = parse_caps_file(caps_spec);
    return [file_caps](const ScoreMatrix& m, const std::string& target) {
        std::size_t t = m.model_index(target);
        GainCaps caps;
        for (std::size_t j = 0; j < m.m(); ++j) {
            auto it = file_caps.find(m.task_ids()[j]);
            if (it == file_caps.end())
                throw InputError("caps file lacks task: " + m.task_ids()[j]);
            caps.caps.push_back(std::min(it->second, 1.0 - m.score(t, j)));
        }
        return caps;
    };
}

RobustnessResult one_target(const ScoreMatrix& matrix, Rule rule,
                            const std::string& target, const CapsPolicy& caps_policy,
                            std::uint64_t node_budget) {
    GainCaps caps = caps_policy(matrix, target);
    RobustnessResult r;
    switch (rule) {
        case Rule::Mean: r = k_mean(matrix, target, caps); break;
        case Rule::Median: r = k_median(matrix, target, caps); break;
        case Rule::WinRate: r = k_win_global(matrix, target, caps, node_budget); break;
        case Rule::Majority: {
            std::size_t t = matrix.model_index(target);
            for (std::size_t j = 0; j < matrix.m(); ++j)
                if (std::fabs(caps.caps[j] - (1.0 - matrix.score(t, j))) > 1e-12)
                    throw InputError("majority robustness requires score-to-1 caps");
            r = k_maj_global(matrix, target, node_budget);
            break;
        }
        default:
            throw InputError("robustness is defined for mean, median, winrate, majority");
    }
    if (r.feasible) r.normalized = normalized(r, matrix, target, caps);
    return r;
}

json preprocess_json(const PreprocessReport& rep) {
    json j;
    j["dropped_models"] = rep.dropped_models;
    j["dropped_tasks"] = rep.dropped_tasks;
    j["duplicate_counts"] = json::object();
    for (const auto& [key, count] : rep.duplicate_counts)
        j["duplicate_counts"][key] = count;
    j["n"] = rep.n;
    j["m"] = rep.m;
    return j;
}

json result_json(const RobustnessResult& r, std::size_t m) {
    json row;
    row["target"] = r.target;
    row["rule"] = rule_name(r.rule);
    row["feasible"] = r.feasible;
    if (r.feasible) {
        row["k"] = r.k;
        row["k_fraction"] = static_cast<double>(r.k) / static_cast<double>(m);
        if (r.normalized)
            row["normalized"] = *r.normalized;
        else
            row["normalized"] = nullptr;
        row["witness"] = r.witness;
    } else {
        row["k"] = nullptr;
        row["k_fraction"] = nullptr;
        row["normalized"] = nullptr;
        row["witness"] = json::array();
    }
    row["deficit"] = r.deficit;
    if (r.tau) row["tau"] = *r.tau;
    if (r.lower_bound) row["lower_bound"] = *r.lower_bound;
    return row;
}

std::string results_csv(const std::vector<RobustnessResult>& results, std::size_t m) {
    std::ostringstream out;
    out << "target,rule,k,k_fraction,normalized,witness,deficit,lower_bound,feasible\n";
    for (const auto& r : results) {
        out << r.target << ',' << rule_name(r.rule) << ',';
        if (r.feasible) {
            out << r.k << ','
                << fmt_num(static_cast<double>(r.k) / static_cast<double>(m)) << ',';
            if (r.normalized)
                out << fmt_num(*r.normalized);
            out << ',';
            for (std::size_t i = 0; i < r.witness.size(); ++i)
                out << (i ? ";" : "") << r.witness[i];
            out << ',';
        } else {
            out << ",,,,";
        }
        out << fmt_num(r.deficit) << ',';
        if (r.lower_bound) out << *r.lower_bound;
        out << ',' << (r.feasible ? "true" : "false") << '\n';
    }
    return out.str();
}

std::vector<RobustnessResult> run_rule(const ScoreMatrix& matrix, Rule rule,
                                       const std::string& target,
                                       const CapsPolicy& caps_policy,
                                       std::uint64_t node_budget) {
    if (target == "ALL")
        return all_targets(matrix, rule, caps_policy, worker_threads(), node_budget);
    matrix.model_index(target); // id check up front
    return {one_target(matrix, rule, target, caps_policy, node_budget)};
}

// ---- robustness ----

int cmd_robustness(const std::string& input, const std::string& format,
                   const std::vector<std::string>& rule_names, const std::string& target,
                   const std::string& caps_spec, bool dedup, const std::string& output,
                   const std::string& report_format, std::uint64_t node_budget) {
    auto loaded = load_input(input, format, dedup);
    auto rules = parse_rules(rule_names);
    auto caps_policy = make_caps_policy(caps_spec);

    std::vector<RobustnessResult> results;
    for (Rule rule : rules) {
        auto rows = run_rule(loaded.matrix, rule, target, caps_policy, node_budget);
        results.insert(results.end(), rows.begin(), rows.end());
    }

    if (report_format == "csv") {
        write_output(output, results_csv(results, loaded.matrix.m()));
        return 0;
    }
    json doc;
    doc["command"] = "robustness";
    doc["input"] = input;
    doc["n"] = loaded.matrix.n();
    doc["m"] = loaded.matrix.m();
    json names = json::array();
    for (Rule rule : rules) names.push_back(rule_name(rule));
    doc["rules"] = names;
    doc["target"] = target;
    doc["preprocess"] = preprocess_json(loaded.report);
    doc["results"] = json::array();
    for (const auto& r : results) doc["results"].push_back(result_json(r, loaded.matrix.m()));
    write_output(output, doc.dump(2) + "\n");
    return 0;
}

// ---- summary ----

json ci_json(const BootstrapSummary& s) {
    json j;
    j["point"] = s.point;
    j["lower"] = s.lower;
    j["upper"] = s.upper;
    return j;
}

int cmd_summary(const std::string& input, const std::string& format,
                const std::vector<std::string>& rule_names, const std::string& caps_spec,
                bool dedup, std::uint64_t seed, int resamples,
                const std::vector<int>& k_thresholds, const std::string& output,
                const std::string& report_format, std::uint64_t node_budget) {
    auto loaded = load_input(input, format, dedup);
    const auto& matrix = loaded.matrix;
    auto rules = parse_rules(rule_names);
    auto caps_policy = make_caps_policy(caps_spec);
    double m = static_cast<double>(matrix.m());

    json doc;
    doc["command"] = "summary";
    doc["input"] = input;
    doc["n"] = matrix.n();
    doc["m"] = matrix.m();
    doc["seed"] = seed;
    doc["resamples"] = resamples;
    doc["k_thresholds"] = k_thresholds;

    auto strict = condorcet_winner(matrix);
    auto weak = weak_condorcet_winner(matrix);
    doc["condorcet"] = {{"strict_winner", strict ? json(*strict) : json(nullptr)},
                        {"weak_winner", weak ? json(*weak) : json(nullptr)}};

    std::ostringstream csv;
    csv << "rule,targets,infeasible,median_k,median_k_pct,median_ci_lower,median_ci_upper";
    for (int K : k_thresholds)
        csv << ",frac_le_" << K << ",frac_le_" << K << "_lower,frac_le_" << K << "_upper";
    csv << '\n';

    doc["rules"] = json::array();
    for (Rule rule : rules) {
        auto results = all_targets(matrix, rule, caps_policy, worker_threads(), node_budget);

        // namespace groups: finite ks for the median, all ks (infeasible as
        // +inf) for the threshold fractions
        std::map<std::string, std::vector<double>> finite_groups, all_groups;
        std::vector<double> finite_ks;
        std::size_t infeasible = 0;
        for (std::size_t i = 0; i < results.size(); ++i) {
            const std::string& ns = matrix.namespaces()[i];
            double v = results[i].feasible
                           ? static_cast<double>(results[i].k)
                           : std::numeric_limits<double>::infinity();
            all_groups[ns].push_back(v);
            if (results[i].feasible) {
                finite_groups[ns].push_back(v);
                finite_ks.push_back(v);
            } else {
                ++infeasible;
            }
        }

        json entry;
        entry["rule"] = rule_name(rule);
        entry["targets"] = results.size();
        entry["infeasible"] = infeasible;
        csv << rule_name(rule) << ',' << results.size() << ',' << infeasible << ',';
        if (finite_ks.empty()) {
            entry["median_k"] = nullptr;
            entry["median_k_pct"] = nullptr;
            entry["median_ci"] = nullptr;
            csv << ",,,";
        } else {
            auto med_stat = [](const std::vector<double>& v) { return midpoint_median(v); };
            auto med_ci = bootstrap_ci(finite_groups, med_stat, resamples, seed, "median_k");
            entry["median_k"] = med_ci.point;
            entry["median_k_pct"] = 100.0 * med_ci.point / m;
            entry["median_ci"] = ci_json(med_ci);
            csv << fmt_num(med_ci.point) << ',' << fmt_num(100.0 * med_ci.point / m) << ','
                << fmt_num(med_ci.lower) << ',' << fmt_num(med_ci.upper);
        }

        entry["thresholds"] = json::array();
        for (int K : k_thresholds) {
            auto frac_stat = [K](const std::vector<double>& v) {
                std::size_t hit = 0;
                for (double x : v)
                    if (x <= static_cast<double>(K)) ++hit;
                return static_cast<double>(hit) / static_cast<double>(v.size());
            };
            auto ci = bootstrap_ci(all_groups, frac_stat, resamples, seed,
                                   "frac_le_" + std::to_string(K));
            json th;
            th["k_threshold"] = K;
            th["fraction"] = ci.point;
            th["ci"] = ci_json(ci);
            entry["thresholds"].push_back(th);
            csv << ',' << fmt_num(ci.point) << ',' << fmt_num(ci.lower) << ','
                << fmt_num(ci.upper);
        }
        csv << '\n';

        entry["ecdf"] = json::array();
        if (!finite_ks.empty())
            for (const auto& [x, f] : ecdf(finite_ks))
                entry["ecdf"].push_back(json::array({x, f}));
        entry["normalized_median"] = nullptr;
        std::vector<double> norm_values;
        for (const auto& r : results)
            if (r.feasible && r.normalized) norm_values.push_back(*r.normalized);
        if (!norm_values.empty()) entry["normalized_median"] = midpoint_median(norm_values);

        doc["rules"].push_back(entry);
    }
    doc["preprocess"] = preprocess_json(loaded.report);

    if (report_format == "csv")
        write_output(output, csv.str());
    else
        write_output(output, doc.dump(2) + "\n");
    return 0;
}

// ---- compare ----

int cmd_compare(const std::string& input, const std::string& format,
                const std::vector<std::string>& rule_names, const std::string& caps_spec,
                bool dedup, const std::string& output, const std::string& report_format,
                std::uint64_t node_budget) {
    auto loaded = load_input(input, format, dedup);
    auto rules = parse_rules(rule_names);
    if (rules.size() < 2) throw InputError("compare needs at least two rules");
    auto caps_policy = make_caps_policy(caps_spec);

    std::vector<std::pair<std::string, std::vector<std::optional<int>>>> per_rule;
    for (Rule rule : rules) {
        auto results =
            all_targets(loaded.matrix, rule, caps_policy, worker_threads(), node_budget);
        std::vector<std::optional<int>> ks;
        for (const auto& r : results)
            ks.push_back(r.feasible ? std::optional<int>(r.k) : std::nullopt);
        per_rule.emplace_back(rule_name(rule), std::move(ks));
    }
    auto pairs = paired_rule_comparison(per_rule, loaded.matrix.m());

    if (report_format == "csv") {
        std::ostringstream out;
        out << "rule_a,rule_b,used,excluded,median_diff_tasks,median_diff_pp,"
               "p_raw,p_adjusted,degenerate\n";
        for (const auto& p : pairs)
            out << p.rule_a << ',' << p.rule_b << ',' << p.used << ',' << p.excluded
                << ',' << fmt_num(p.median_diff_tasks) << ',' << fmt_num(p.median_diff_pp)
                << ',' << fmt_num(p.p_raw) << ',' << fmt_num(p.p_adjusted) << ','
                << (p.degenerate ? "true" : "false") << '\n';
        write_output(output, out.str());
        return 0;
    }
    json doc;
    doc["command"] = "compare";
    doc["input"] = input;
    doc["n"] = loaded.matrix.n();
    doc["m"] = loaded.matrix.m();
    doc["pairs"] = json::array();
    for (const auto& p : pairs) {
        json row;
        row["rule_a"] = p.rule_a;
        row["rule_b"] = p.rule_b;
        row["used"] = p.used;
        row["excluded"] = p.excluded;
        row["median_diff_tasks"] = p.median_diff_tasks;
        row["median_diff_pp"] = p.median_diff_pp;
        row["p_raw"] = p.p_raw;
        row["p_adjusted"] = p.p_adjusted;
        row["degenerate"] = p.degenerate;
        doc["pairs"].push_back(row);
    }
    write_output(output, doc.dump(2) + "\n");
    return 0;
}

// ---- bribery ----

int cmd_bribery(const std::string& input, const std::string& format,
                const std::string& target, const std::string& costs_path, double budget,
                bool dedup, const std::string& output) {
    auto loaded = load_input(input, format, dedup);
    const auto& matrix = loaded.matrix;
    matrix.model_index(target);

    std::vector<double> costs(matrix.m(), 1.0);
    if (!costs_path.empty()) {
        auto by_task = parse_caps_file(costs_path); // same task,value shape
        for (std::size_t j = 0; j < matrix.m(); ++j) {
            auto it = by_task.find(matrix.task_ids()[j]);
            if (it == by_task.end())
                throw InputError("costs file lacks task: " + matrix.task_ids()[j]);
            costs[j] = it->second;
        }
    }

    auto instance = bst_to_bribery(matrix, target, costs, budget);
    auto outcome = min_cost_shift_bribery(instance);

    json doc;
    doc["command"] = "bribery";
    doc["input"] = input;
    doc["target"] = target;
    doc["voters"] = matrix.m();
    doc["candidates"] = matrix.n();
    doc["budget"] = budget;
    doc["costs"] = costs;
    doc["winnable"] = outcome.winnable;
    if (outcome.winnable) {
        doc["cost"] = outcome.cost;
        json bribed = json::array();
        for (std::size_t v : outcome.bribed) bribed.push_back(matrix.task_ids()[v]);
        doc["bribed_tasks"] = bribed;
    } else {
        doc["cost"] = nullptr;
        doc["bribed_tasks"] = json::array();
    }
    doc["within_budget"] = outcome.within_budget;
    write_output(output, doc.dump(2) + "\n");
    return 0;
}

// ---- oracle-check ----

int cmd_oracle_check(std::size_t instances, std::uint64_t seed, std::size_t max_n,
                     std::size_t max_m, std::size_t oracle_limit,
                     const std::string& output) {
    auto report = oracle_check(instances, seed, max_n, max_m, oracle_limit);

    json doc;
    doc["command"] = "oracle-check";
    doc["instances"] = report.instances;
    doc["seed"] = seed;
    doc["max_n"] = max_n;
    doc["max_m"] = max_m;
    doc["comparisons"] = report.comparisons;
    doc["per_rule"] = json::object();
    for (const auto& [rule, count] : report.per_rule) doc["per_rule"][rule] = count;
    doc["mismatches"] = json::array();
    for (const auto& mm : report.mismatches) {
        json row;
        row["instance_index"] = mm.instance_index;
        row["rule"] = rule_name(mm.rule);
        row["target"] = mm.target;
        row["detail"] = mm.detail;
        // full instance dump so the failure can be replayed
        auto inst = random_instance(seed, mm.instance_index, max_n, max_m);
        row["models"] = inst.matrix.model_ids();
        row["tasks"] = inst.matrix.task_ids();
        row["scores"] = inst.matrix.raw_scores();
        row["caps"] = inst.caps.caps;
        doc["mismatches"].push_back(row);
    }
    write_output(output, doc.dump(2) + "\n");
    return report.mismatches.empty() ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"leaderboard manipulation-robustness toolkit"};
    app.require_subcommand(1);

    std::string input, format = "auto", target = "ALL", caps_spec = "DEFAULT";
    std::string output, report_format = "json", costs_path;
    std::vector<std::string> rule_names;
    std::vector<int> k_thresholds{5, 10};
    bool dedup = false;
    std::uint64_t seed = 0;
    int resamples = 1000;
    double budget = 0.0;
    std::size_t instances = 200, max_n = 6, max_m = 12, oracle_limit = 20;
    std::uint64_t node_budget = 100'000'000;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        auto* in = cmd->add_option("--input", input, "score matrix file");
        if (needs_input) in->required();
        cmd->add_option("--format", format, "auto|csv-long|csv-wide|json");
        cmd->add_flag("--dedup-namespaces", dedup, "keep only the best model per namespace");
        cmd->add_option("--output", output, "output path (default stdout)");
    };

    auto* rob = app.add_subcommand("robustness", "per-target robustness");
    add_common(rob, true);
    rob->add_option("--rules", rule_names, "subset of mean,median,winrate,majority")
        ->delimiter(',');
    rob->add_option("--target", target, "model id or ALL");
    rob->add_option("--caps", caps_spec, "DEFAULT or per-task caps file");
    rob->add_option("--report-format", report_format, "json|csv");
    rob->add_option("--node-budget", node_budget, "covering solver node limit");

    auto* sum = app.add_subcommand("summary", "medians, fractions, CIs, ECDF");
    add_common(sum, true);
    sum->add_option("--rules", rule_names, "subset of mean,median,winrate,majority")
        ->delimiter(',');
    sum->add_option("--caps", caps_spec, "DEFAULT or per-task caps file");
    sum->add_option("--seed", seed, "bootstrap seed")->required();
    sum->add_option("--resamples", resamples, "bootstrap resamples")
        ->check(CLI::PositiveNumber);
    sum->add_option("--k-thresholds", k_thresholds, "k cutoffs for fractions")
        ->delimiter(',');
    sum->add_option("--report-format", report_format, "json|csv");
    sum->add_option("--node-budget", node_budget, "covering solver node limit");

    auto* cmp = app.add_subcommand("compare", "paired rule comparison");
    add_common(cmp, true);
    cmp->add_option("--rules", rule_names, "two or more rules")->delimiter(',');
    cmp->add_option("--caps", caps_spec, "DEFAULT or per-task caps file");
    cmp->add_option("--report-format", report_format, "json|csv");
    cmp->add_option("--node-budget", node_budget, "covering solver node limit");

    auto* bri = app.add_subcommand("bribery", "shift-bribery translation");
    add_common(bri, true);
    bri->add_option("--target", target, "preferred model id")->required();
    bri->add_option("--costs", costs_path, "per-task cost file (default unit costs)");
    bri->add_option("--budget", budget, "bribery budget");

    auto* orc = app.add_subcommand("oracle-check", "closed forms vs brute force");
    orc->add_option("--instances", instances, "random instances to run");
    orc->add_option("--seed", seed, "instance stream seed");
    orc->add_option("--max-n", max_n, "max models per instance");
    orc->add_option("--max-m", max_m, "max tasks per instance");
    orc->add_option("--oracle-limit", oracle_limit, "brute-force task limit");
    orc->add_option("--output", output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (report_format != "json" && report_format != "csv")
            throw InputError("unknown report format: " + report_format);
        if (rob->parsed())
            return cmd_robustness(input, format, rule_names, target, caps_spec, dedup,
                                  output, report_format, node_budget);
        if (sum->parsed())
            return cmd_summary(input, format, rule_names, caps_spec, dedup, seed,
                               resamples, k_thresholds, output, report_format,
                               node_budget);
        if (cmp->parsed())
            return cmd_compare(input, format, rule_names, caps_spec, dedup, output,
                               report_format, node_budget);
        if (bri->parsed())
            return cmd_bribery(input, format, target, costs_path, budget, dedup, output);
        if (orc->parsed())
            return cmd_oracle_check(instances, seed, max_n, max_m, oracle_limit, output);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
