#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "helpers.hpp"
#include "leadrig/ingest.hpp"

using namespace leadrig;

namespace {

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path("ingest_test_" + name) {
        std::ofstream out(path, std::ios::binary);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("long-form CSV round trip") {
    TempFile f("long.csv",
               "model,task,score\n"
               "b,t1,0.5\n"
               "a,t0,0.9\n"
               "a,t1,0.1\n"
               "b,t0,0.3\n");
    auto records = parse_scores(f.path);
    REQUIRE(records.size() == 4);
    auto built = build_matrix(records);
    CHECK(built.matrix.model_ids() == std::vector<std::string>{"a", "b"});
    CHECK(built.matrix.task_ids() == std::vector<std::string>{"t0", "t1"});
    CHECK(built.matrix.score(0, 0) == 0.9);
    CHECK(built.matrix.score(1, 1) == 0.5);
    CHECK(built.report.n == 2);
    CHECK(built.report.m == 2);
    CHECK(built.report.dropped_models.empty());
}

TEST_CASE("long-form CSV errors carry the line number") {
    TempFile f("bad.csv", "model,task,score\na,t0,1.5\n");
    CHECK_THROWS_WITH_AS(parse_scores(f.path),
                         doctest::Contains((f.path + ":2").c_str()), InputError);
    TempFile g("badhdr.csv", "who,what,much\n");
    CHECK_THROWS_AS(parse_scores(g.path), InputError);
    TempFile h("short.csv", "model,task,score\na,t0\n");
    CHECK_THROWS_AS(parse_scores(h.path), InputError);
    CHECK_THROWS_AS(parse_scores("no_such_file.csv"), InputError);
}

TEST_CASE("wide-form CSV with a blank cell") {
    TempFile f("wide.csv",
               "task,a,b\n"
               "t0,0.9,0.3\n"
               "t1,,0.5\n");
    auto records = parse_scores(f.path);
    REQUIRE(records.size() == 3); // blank cell is simply missing
    auto built = build_matrix(records);
    // a lacks t1 and is dropped
    CHECK(built.matrix.model_ids() == std::vector<std::string>{"b"});
    CHECK(built.report.dropped_models == std::vector<std::string>{"a"});
}

TEST_CASE("wide-form CSV rejects duplicate model headers") {
    TempFile f("dup.csv", "task,a,a\nt0,0.1,0.2\n");
    CHECK_THROWS_AS(parse_scores(f.path), InputError);
}

TEST_CASE("format override forces the parser") {
    TempFile f("forced.csv", "model,task,score\na,t0,0.5\n");
    CHECK_THROWS_AS(parse_scores(f.path, ScoreFormat::CsvWide), InputError);
    auto records = parse_scores(f.path, ScoreFormat::CsvLong);
    CHECK(records.size() == 1);
}

TEST_CASE("JSON input by extension") {
    TempFile f("scores.json",
               R"({"a": {"t0": 0.9, "t1": 0.1}, "b": {"t0": 0.3, "t1": 0.5}})");
    auto records = parse_scores(f.path);
    REQUIRE(records.size() == 4);
    auto built = build_matrix(records);
    CHECK(built.matrix.n() == 2);
    CHECK(built.matrix.score(0, 1) == 0.1);

    TempFile bad("bad.json", R"({"a": {"t0": 2.0}})");
    CHECK_THROWS_AS(parse_scores(bad.path), InputError);
    TempFile worse("worse.json", "[1,2,3]");
    CHECK_THROWS_AS(parse_scores(worse.path), InputError);
}

TEST_CASE("duplicates are averaged and reported") {
    RawRecords records{
        {"a", "t0", 0.6}, {"a", "t0", 0.4}, {"a", "t1", 0.5}, {"b", "t0", 0.2},
        {"b", "t1", 0.3},
    };
    auto built = build_matrix(records);
    CHECK(built.matrix.score(0, 0) == doctest::Approx(0.5));
    REQUIRE(built.report.duplicate_counts.count("a|t0") == 1);
    CHECK(built.report.duplicate_counts.at("a|t0") == 2);
}

TEST_CASE("build_matrix is independent of record order") {
    RawRecords fwd{{"a", "t0", 0.1}, {"a", "t0", 0.7}, {"a", "t0", 0.4},
                   {"a", "t1", 0.9}, {"b", "t0", 0.2}, {"b", "t1", 0.3}};
    RawRecords rev(fwd.rbegin(), fwd.rend());
    auto m1 = build_matrix(fwd);
    auto m2 = build_matrix(rev);
    CHECK(m1.matrix.raw_scores() == m2.matrix.raw_scores());
    CHECK(m1.matrix.model_ids() == m2.matrix.model_ids());
}

TEST_CASE("filtering everything is an input error") {
    RawRecords records{{"a", "t0", 0.1}, {"b", "t1", 0.2}};
    CHECK_THROWS_AS(build_matrix(records), InputError);
    CHECK_THROWS_AS(build_matrix({}), InputError);
}

TEST_CASE("best_per_namespace keeps the mean argmax") {
    auto m = testutil::matrix(
        {"org-a/base", "org-a/large", "org-b/one", "solo"}, {"t0", "t1"},
        {{0.2, 0.2}, {0.8, 0.8}, {0.5, 0.5}, {0.1, 0.1}});
    auto best = best_per_namespace(m);
    CHECK(best.model_ids() ==
          std::vector<std::string>{"org-a/large", "org-b/one", "solo"});
    CHECK(best.score(0, 0) == 0.8);
    CHECK(best.namespaces() ==
          std::vector<std::string>{"org-a", "org-b", "solo"});
}

TEST_CASE("best_per_namespace breaks mean ties by id order") {
    auto m = testutil::matrix({"org/x", "org/y"}, {"t0"}, {{0.5}, {0.5}});
    auto best = best_per_namespace(m);
    CHECK(best.model_ids() == std::vector<std::string>{"org/x"});
}
