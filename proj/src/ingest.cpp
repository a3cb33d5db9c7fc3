#include "leadrig/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "leadrig/aggregation.hpp"

namespace leadrig {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

double parse_score(const std::string& text, const std::string& where) {
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw InputError("unparseable score at " + where + ": '" + text + "'");
    }
    if (used != text.size())
        throw InputError("unparseable score at " + where + ": '" + text + "'");
    if (!std::isfinite(v) || v < 0.0 || v > 1.0)
        throw InputError("score outside [0,1] at " + where + ": " + text);
    return v;
}

RawRecords parse_csv(const std::string& path, ScoreFormat format) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw InputError("empty file: " + path);
    auto header = split_csv_line(strip_cr(line));
    if (header.empty()) throw InputError("empty header in " + path);

    bool wide;
    if (format == ScoreFormat::CsvLong) {
        wide = false;
    } else if (format == ScoreFormat::CsvWide) {
        wide = true;
    } else {
        wide = header[0] == "task";
    }

    RawRecords records;
    if (!wide) {
        if (header.size() != 3 || header[0] != "model" || header[1] != "task" ||
            header[2] != "score")
            throw InputError(path + ": long-form CSV requires header model,task,score");
        int line_no = 1;
        while (std::getline(in, line)) {
            ++line_no;
            line = strip_cr(line);
            if (line.empty()) continue;
            auto fields = split_csv_line(line);
            std::string where = path + ":" + std::to_string(line_no);
            if (fields.size() != 3) throw InputError("malformed row at " + where);
            if (fields[0].empty() || fields[1].empty())
                throw InputError("empty id at " + where);
            records.push_back({fields[0], fields[1], parse_score(fields[2], where)});
        }
    } else {
        if (header[0] != "task")
            throw InputError(path + ": wide-form CSV requires first header 'task'");
        std::set<std::string> seen(header.begin() + 1, header.end());
        if (seen.size() != header.size() - 1 || seen.count(""))
            throw InputError(path + ": duplicate or empty model header");
        int line_no = 1;
        while (std::getline(in, line)) {
            ++line_no;
            line = strip_cr(line);
            if (line.empty()) continue;
            auto fields = split_csv_line(line);
            std::string where = path + ":" + std::to_string(line_no);
            if (fields.size() != header.size()) throw InputError("malformed row at " + where);
            if (fields[0].empty()) throw InputError("empty task id at " + where);
            for (std::size_t c = 1; c < fields.size(); ++c) {
                if (fields[c].empty()) continue; // missing cell
                records.push_back({header[c], fields[0], parse_score(fields[c], where)});
            }
        }
    }
    return records;
}

RawRecords parse_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw InputError(path + ": invalid JSON: " + e.what());
    }
    if (!doc.is_object()) throw InputError(path + ": expected model -> task -> score object");
    RawRecords records;
    for (auto& [model, tasks] : doc.items()) {
        if (!tasks.is_object())
            throw InputError(path + ": entry for model '" + model + "' is not an object");
        for (auto& [task, value] : tasks.items()) {
            if (!value.is_number())
                throw InputError(path + ": score for " + model + "/" + task +
                                 " is not a number");
            double v = value.get<double>();
            if (!std::isfinite(v) || v < 0.0 || v > 1.0)
                throw InputError(path + ": score outside [0,1] for " + model + "/" + task);
            records.push_back({model, task, v});
        }
    }
    return records;
}

} // namespace

RawRecords parse_scores(const std::string& path, ScoreFormat format) {
    if (format == ScoreFormat::Json) return parse_json(path);
    if (format == ScoreFormat::Auto && path.size() > 5 &&
        path.substr(path.size() - 5) == ".json")
        return parse_json(path);
    return parse_csv(path, format);
}

BuiltMatrix build_matrix(const RawRecords& records) {
    if (records.empty()) throw InputError("no records to build a matrix from");

    // Average duplicates. Values summed in ascending order so that the result
    // does not depend on the order of the input records.
    std::map<std::pair<std::string, std::string>, std::vector<double>> cells;
    for (const auto& rec : records) {
        if (rec.model.empty() || rec.task.empty())
            throw InputError("record with empty model or task id");
        cells[{rec.model, rec.task}].push_back(rec.score);
    }
    PreprocessReport report;
    std::map<std::string, std::map<std::string, double>> by_model;
    std::set<std::string> all_tasks;
    for (auto& [key, values] : cells) {
        if (values.size() > 1) {
            std::sort(values.begin(), values.end());
            report.duplicate_counts[key.first + "|" + key.second] =
                static_cast<int>(values.size());
        }
        double sum = 0.0;
        for (double v : values) sum += v;
        by_model[key.first][key.second] = sum / static_cast<double>(values.size());
        all_tasks.insert(key.second);
    }

    // A task missing for every model never reaches RawRecords (missing cells
    // are omitted at parse time), so the all-missing drop stage is vacuous here.
    std::set<std::string> tasks(all_tasks);

    // Drop models missing any remaining task.
    std::vector<std::string> kept_models;
    for (const auto& [model, scores] : by_model) {
        bool complete = true;
        for (const auto& task : tasks)
            if (!scores.count(task)) { complete = false; break; }
        if (complete)
            kept_models.push_back(model);
        else
            report.dropped_models.push_back(model);
    }

    // Residual incomplete tasks (only possible when no model survived earlier).
    if (kept_models.empty()) {
        report.dropped_tasks.assign(tasks.begin(), tasks.end());
        throw InputError("no model has complete scores; matrix is empty after filtering");
    }

    std::vector<std::string> task_ids(tasks.begin(), tasks.end());
    std::vector<double> scores;
    scores.reserve(kept_models.size() * task_ids.size());
    for (const auto& model : kept_models)
        for (const auto& task : task_ids) scores.push_back(by_model[model][task]);

    report.n = kept_models.size();
    report.m = task_ids.size();
    return BuiltMatrix{ScoreMatrix(kept_models, task_ids, std::move(scores)),
                       std::move(report)};
}

ScoreMatrix best_per_namespace(const ScoreMatrix& matrix) {
    auto means = mean_values(matrix);
    std::map<std::string, std::size_t> best; // namespace -> model index
    for (std::size_t i = 0; i < matrix.n(); ++i) {
        const std::string& ns = matrix.namespaces()[i];
        auto it = best.find(ns);
        if (it == best.end() || means[i] > means[it->second]) best[ns] = i;
        // ties keep the earlier model, i.e. model-id order for sorted matrices
    }
    std::vector<std::size_t> keep;
    for (const auto& [ns, idx] : best) keep.push_back(idx);
    std::sort(keep.begin(), keep.end());
    std::vector<std::string> model_ids, namespaces;
    std::vector<double> scores;
    for (std::size_t i : keep) {
        model_ids.push_back(matrix.model_ids()[i]);
        namespaces.push_back(matrix.namespaces()[i]);
        for (std::size_t j = 0; j < matrix.m(); ++j) scores.push_back(matrix.score(i, j));
    }
    return ScoreMatrix(std::move(model_ids), matrix.task_ids(), std::move(scores),
                       std::move(namespaces));
}

} // namespace leadrig
