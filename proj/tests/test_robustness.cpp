#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "leadrig/robustness.hpp"
#include "leadrig/selfcheck.hpp"

using namespace leadrig;
using testutil::matrix;

TEST_CASE("k_mean closes the deficit with the largest caps") {
    auto m = matrix({"a1", "a2"}, {"t0", "t1", "t2"},
                    {{0.5, 0.5, 0.5}, {0.8, 0.8, 0.8}});
    auto r = k_mean(m, "a1", default_caps(m, "a1"));
    CHECK(r.feasible);
    CHECK(r.k == 2);
    CHECK(r.deficit == doctest::Approx(0.3));
    auto oracle = brute_force_k(m, "a1", default_caps(m, "a1"), Rule::Mean);
    CHECK(oracle.k == 2);
}

TEST_CASE("k_mean is zero when already top") {
    auto m = matrix({"a1", "a2"}, {"t0"}, {{0.9}, {0.5}});
    auto r = k_mean(m, "a1", default_caps(m, "a1"));
    CHECK(r.k == 0);
    CHECK(r.witness.empty());
}

TEST_CASE("k_mean infeasible under a tight cap") {
    auto m = matrix({"a1", "a2"}, {"t0"}, {{0.9}, {0.95}});
    GainCaps caps{{0.02}};
    auto r = k_mean(m, "a1", caps);
    CHECK_FALSE(r.feasible);
    CHECK_FALSE(brute_force_k(m, "a1", caps, Rule::Mean).feasible);
}

TEST_CASE("k_median pushes tasks across the competitor threshold") {
    auto m = matrix({"a1", "a2"}, {"t0", "t1", "t2"},
                    {{0.2, 0.3, 0.9}, {0.6, 0.6, 0.6}});
    auto r = k_median(m, "a1", default_caps(m, "a1"));
    CHECK(r.feasible);
    CHECK(r.k == 1);
    CHECK(r.tau == doctest::Approx(0.6));
    CHECK(brute_force_k(m, "a1", default_caps(m, "a1"), Rule::Median).k == 1);
}

TEST_CASE("k_median zero when already at the threshold") {
    auto m = matrix({"a1", "a2"}, {"t0", "t1", "t2"},
                    {{0.7, 0.7, 0.1}, {0.6, 0.6, 0.6}});
    CHECK(k_median(m, "a1", default_caps(m, "a1")).k == 0);
}

TEST_CASE("k_median infeasible with zero caps") {
    auto m = matrix({"a1", "a2"}, {"t0", "t1"}, {{0.2, 0.2}, {0.6, 0.6}});
    GainCaps caps{{0.0, 0.0}};
    CHECK_FALSE(k_median(m, "a1", caps).feasible);
}

TEST_CASE("pairwise gains on the 3-model example") {
    auto m = matrix({"a", "b", "c"}, {"t0", "t1"},
                    {{0.1, 0.1}, {0.9, 0.2}, {0.5, 0.9}});
    auto q = pairwise_gains(m, "a", default_caps(m, "a"));
    CHECK(q[1][0] == doctest::Approx(1.0));
    CHECK(q[2][0] == doctest::Approx(1.0));
    CHECK(q[1][1] == doctest::Approx(1.0));
    CHECK(q[2][1] == doctest::Approx(1.0));
}

TEST_CASE("pairwise gains vanish with a zero cap on a topped task") {
    auto m = matrix({"a", "b"}, {"t0"}, {{0.9}, {0.5}});
    GainCaps caps{{0.0}};
    auto q = pairwise_gains(m, "a", caps);
    CHECK(q[1][0] == 0.0);
}

TEST_CASE("two-model pairwise gain is a full point") {
    auto m = matrix({"a", "b"}, {"t0", "t1"}, {{0.1, 0.9}, {0.5, 0.1}});
    auto q = pairwise_gains(m, "a", default_caps(m, "a"));
    CHECK(q[1][0] == doctest::Approx(1.0)); // 1/2 gain + 1/2 loss
}

TEST_CASE("pairwise gains match an explicit training simulation") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 40; ++rep) {
        auto m = testutil::random_matrix(rng, 2 + rng() % 5, 2 + rng() % 6);
        auto caps = default_caps(m, "m0");
        auto q = pairwise_gains(m, "m0", caps);
        auto wr0 = win_rates(m);
        for (std::size_t j = 0; j < m.m(); ++j) {
            TrainingScenario sc{"m0", {m.task_ids()[j]}, caps};
            auto wrT = win_rates(apply_training(m, sc));
            for (std::size_t a = 1; a < m.n(); ++a) {
                double expect = (wrT.per_task[0][j] - wr0.per_task[0][j]) +
                                (wr0.per_task[a][j] - wrT.per_task[a][j]);
                CHECK(q[a][j] == doctest::Approx(expect));
                CHECK(q[a][j] >= 0.0);
            }
        }
    }
}

TEST_CASE("k_win_pairwise on the 3-model example") {
    auto m = matrix({"a", "b", "c"}, {"t0", "t1"},
                    {{0.1, 0.1}, {0.9, 0.2}, {0.5, 0.9}});
    auto r = k_win_pairwise(m, "a", "b", default_caps(m, "a"));
    CHECK(r.feasible);
    CHECK(r.k == 1);
    CHECK_THROWS_AS(k_win_pairwise(m, "a", "a", default_caps(m, "a")), InputError);
}

TEST_CASE("k_win_pairwise zero when already weakly ahead") {
    auto m = matrix({"a", "b"}, {"t0"}, {{0.9}, {0.5}});
    CHECK(k_win_pairwise(m, "a", "b", default_caps(m, "a")).k == 0);
}

TEST_CASE("k_win_pairwise infeasible when gains cover nothing") {
    auto m = matrix({"a", "b"}, {"t0", "t1"}, {{0.1, 0.1}, {0.5, 0.5}});
    GainCaps caps{{0.0, 0.0}};
    CHECK_FALSE(k_win_pairwise(m, "a", "b", caps).feasible);
}

TEST_CASE("k_win_global covers both competitors with one task") {
    auto m = matrix({"a", "b", "c"}, {"t0", "t1"},
                    {{0.1, 0.1}, {0.9, 0.2}, {0.5, 0.9}});
    auto r = k_win_global(m, "a", default_caps(m, "a"));
    CHECK(r.feasible);
    CHECK(r.k == 1);
    CHECK(r.lower_bound == 1);
    CHECK(brute_force_k(m, "a", default_caps(m, "a"), Rule::WinRate).k == 1);
}

TEST_CASE("k_win_global can exceed the pairwise lower bound") {
    // b holds 1.0 on t0 and c holds 1.0 on t1, so training only ties the
    // matching leader; each pairwise k is 1 but the global optimum is 2
    auto m = matrix({"a", "b", "c", "d"}, {"t0", "t1"},
                    {{0.22, 0.15}, {1.0, 0.56}, {0.39, 1.0}, {0.08, 0.02}});
    auto caps = default_caps(m, "a");
    CHECK(k_win_pairwise(m, "a", "b", caps).k == 1);
    CHECK(k_win_pairwise(m, "a", "c", caps).k == 1);
    auto r = k_win_global(m, "a", caps);
    CHECK(r.k == 2);
    CHECK(r.lower_bound == 1);
    CHECK(brute_force_k(m, "a", caps, Rule::WinRate).k == 2);
}

TEST_CASE("k_maj_pairwise counts losing tasks") {
    auto m = matrix({"a1", "a2"}, {"t0", "t1", "t2"},
                    {{0.1, 0.1, 0.1}, {0.9, 0.9, 0.9}});
    auto r = k_maj_pairwise(m, "a1", "a2");
    CHECK(r.k == 2);
    CHECK(brute_force_k(m, "a1", default_caps(m, "a1"), Rule::Majority).k == 2);
}

TEST_CASE("k_maj_pairwise zero cases") {
    auto m = matrix({"a1", "a2"}, {"t0", "t1", "t2", "t3"},
                    {{0.9, 0.9, 0.9, 0.1}, {0.1, 0.1, 0.1, 0.9}});
    CHECK(k_maj_pairwise(m, "a1", "a2").k == 0); // |L0| = 1, M = 3 >= mu = 2
}

TEST_CASE("k_maj_global can exceed the max single-competitor deficit") {
    // a beats competitor bi only on task t(i); each deficit is 2, but no pair
    // of tasks lies in every losing set, so three tasks are needed
    std::vector<std::vector<double>> rows{{0.5, 0.5, 0.5, 0.5, 0.5}};
    for (int i = 0; i < 4; ++i) {
        std::vector<double> row(5, 0.9);
        row[i] = 0.1;
        rows.push_back(row);
    }
    auto m = matrix({"a", "b1", "b2", "b3", "b4"}, {"t0", "t1", "t2", "t3", "t4"}, rows);
    auto r = k_maj_global(m, "a");
    CHECK(r.feasible);
    CHECK(r.k == 3);
    CHECK(r.lower_bound == 2);
    CHECK(brute_force_k(m, "a", default_caps(m, "a"), Rule::Majority).k == 3);
}

TEST_CASE("k_maj_global is always finite and at most m") {
    std::mt19937_64 rng(91);
    for (int rep = 0; rep < 50; ++rep) {
        auto m = testutil::random_matrix(rng, 2 + rng() % 5, 2 + rng() % 8);
        auto r = k_maj_global(m, "m0");
        CHECK(r.feasible);
        CHECK(r.k <= static_cast<int>(m.m()));
        CHECK(r.k >= *r.lower_bound);
    }
}

TEST_CASE("normalized robustness values") {
    SUBCASE("zero k normalizes to zero") {
        auto m = matrix({"a1", "a2"}, {"t0"}, {{0.9}, {0.5}});
        auto r = k_mean(m, "a1", default_caps(m, "a1"));
        CHECK(normalized(r, m, "a1", default_caps(m, "a1")) == 0.0);
    }
    SUBCASE("median normalizes by the pushable count") {
        auto m = matrix({"a1", "a2"}, {"t0", "t1", "t2"},
                        {{0.2, 0.3, 0.9}, {0.6, 0.6, 0.6}});
        auto caps = default_caps(m, "a1");
        auto r = k_median(m, "a1", caps);
        CHECK(normalized(r, m, "a1", caps) == doctest::Approx(0.5));
    }
    SUBCASE("mean normalizes by ceil of deficit over room") {
        auto m = matrix({"a1", "a2"}, {"t0", "t1", "t2"},
                        {{0.5, 0.5, 0.5}, {0.8, 0.8, 0.8}});
        auto caps = default_caps(m, "a1");
        auto r = k_mean(m, "a1", caps);
        REQUIRE(r.k == 2);
        CHECK(normalized(r, m, "a1", caps) == doctest::Approx(1.0));
    }
    SUBCASE("infeasible result is rejected") {
        auto m = matrix({"a1", "a2"}, {"t0"}, {{0.9}, {0.95}});
        GainCaps caps{{0.02}};
        auto r = k_mean(m, "a1", caps);
        CHECK_THROWS_AS(normalized(r, m, "a1", caps), InputError);
    }
}

TEST_CASE("brute force refuses oversized instances") {
    std::mt19937_64 rng(1);
    auto m = testutil::random_matrix(rng, 2, 6);
    CHECK_THROWS_AS(brute_force_k(m, "m0", default_caps(m, "m0"), Rule::Mean, 5),
                    ResourceError);
}

TEST_CASE("all_targets covers every model in order") {
    std::mt19937_64 rng(2);
    auto m = testutil::random_matrix(rng, 5, 6);
    for (Rule rule : {Rule::Mean, Rule::Median, Rule::WinRate, Rule::Majority}) {
        auto results = all_targets(m, rule, default_caps_policy());
        REQUIRE(results.size() == m.n());
        for (std::size_t i = 0; i < results.size(); ++i) {
            CHECK(results[i].target == m.model_ids()[i]);
            CHECK(results[i].rule == rule);
            if (results[i].feasible) CHECK(results[i].normalized.has_value());
        }
    }
    auto single = matrix({"only"}, {"t0"}, {{0.5}});
    CHECK(all_targets(single, Rule::Mean, default_caps_policy())[0].k == 0);
}

TEST_CASE("all_targets is thread-count independent") {
    std::mt19937_64 rng(3);
    auto m = testutil::random_matrix(rng, 8, 8);
    auto serial = all_targets(m, Rule::WinRate, default_caps_policy(), 1);
    auto parallel = all_targets(m, Rule::WinRate, default_caps_policy(), 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].k == parallel[i].k);
        CHECK(serial[i].witness == parallel[i].witness);
    }
}

TEST_CASE("closed forms match the oracle on random instances") {
    auto report = oracle_check(60, 2024, 6, 10);
    CHECK(report.mismatches.empty());
}

TEST_CASE("witness replay re-certifies top placement") {
    std::mt19937_64 rng(47);
    for (int rep = 0; rep < 40; ++rep) {
        auto m = testutil::random_matrix(rng, 2 + rng() % 5, 2 + rng() % 8);
        auto caps = default_caps(m, "m0");
        for (Rule rule : {Rule::Mean, Rule::Median, Rule::WinRate, Rule::Majority}) {
            RobustnessResult r;
            switch (rule) {
                case Rule::Mean: r = k_mean(m, "m0", caps); break;
                case Rule::Median: r = k_median(m, "m0", caps); break;
                case Rule::WinRate: r = k_win_global(m, "m0", caps); break;
                default: r = k_maj_global(m, "m0"); break;
            }
            REQUIRE(r.feasible);
            CHECK(static_cast<int>(r.witness.size()) == r.k);
            TrainingScenario sc{"m0", r.witness, caps};
            auto trained = apply_training(m, sc);
            if (rule == Rule::Majority) {
                CHECK(is_weak_condorcet_winner(trained, 0));
            } else {
                auto lb = leaderboard(trained, rule);
                // weakly best: the target's value equals the best value
                std::size_t pos = 0;
                while (lb.order[pos] != "m0") ++pos;
                CHECK(lb.values[pos] >= lb.values[0] - 1e-9);
            }
        }
    }
}

TEST_CASE("enlarging caps never increases k") {
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 40; ++rep) {
        auto m = testutil::random_matrix(rng, 2 + rng() % 4, 2 + rng() % 6);
        auto full = default_caps(m, "m0");
        GainCaps half;
        for (double c : full.caps) half.caps.push_back(std::floor(c * 50.0) / 100.0);
        for (Rule rule : {Rule::Mean, Rule::Median, Rule::WinRate}) {
            RobustnessResult small, big;
            switch (rule) {
                case Rule::Mean:
                    small = k_mean(m, "m0", half);
                    big = k_mean(m, "m0", full);
                    break;
                case Rule::Median:
                    small = k_median(m, "m0", half);
                    big = k_median(m, "m0", full);
                    break;
                default:
                    small = k_win_global(m, "m0", half);
                    big = k_win_global(m, "m0", full);
                    break;
            }
            REQUIRE(big.feasible);
            if (small.feasible) CHECK(big.k <= small.k);
        }
    }
}
