#include <doctest.h>

#include "leadrig/stats.hpp"

using namespace leadrig;

TEST_CASE("ecdf merges duplicates and ends at one") {
    auto f = ecdf({5.0, 2.0, 1.0, 2.0});
    REQUIRE(f.size() == 3);
    CHECK(f[0].first == 1.0);
    CHECK(f[0].second == doctest::Approx(0.25));
    CHECK(f[1].first == 2.0);
    CHECK(f[1].second == doctest::Approx(0.75));
    CHECK(f[2].first == 5.0);
    CHECK(f[2].second == doctest::Approx(1.0));
    CHECK_THROWS_AS(ecdf({}), InputError);
}

TEST_CASE("wilcoxon on strictly positive differences") {
    // d = 1..6, all positive: W+ = 21, two-sided p about 0.036
    std::vector<double> x{1, 2, 3, 4, 5, 6};
    std::vector<double> y{0, 0, 0, 0, 0, 0};
    auto r = wilcoxon_signed_rank(x, y);
    CHECK_FALSE(r.degenerate);
    CHECK(r.n_used == 6);
    CHECK(r.w_plus == doctest::Approx(21.0));
    CHECK(r.p == doctest::Approx(0.0361).epsilon(0.02));
}

TEST_CASE("wilcoxon is symmetric under sign flip") {
    std::vector<double> x{1.5, -2.0, 3.0, 0.5, -1.0, 2.5, 4.0};
    std::vector<double> zero(x.size(), 0.0);
    auto a = wilcoxon_signed_rank(x, zero);
    auto b = wilcoxon_signed_rank(zero, x);
    CHECK(a.p == doctest::Approx(b.p));
}

TEST_CASE("wilcoxon degenerates when all pairs tie") {
    std::vector<double> x{1, 2, 3};
    auto r = wilcoxon_signed_rank(x, x);
    CHECK(r.degenerate);
    CHECK(r.p == 1.0);
    CHECK_THROWS_AS(wilcoxon_signed_rank({1.0}, {1.0, 2.0}), InputError);
}

TEST_CASE("wilcoxon drops zero differences") {
    std::vector<double> x{0, 0, 1, 2, 3, 4, 5, 6};
    std::vector<double> y(x.size(), 0.0);
    auto full = wilcoxon_signed_rank({1, 2, 3, 4, 5, 6}, {0, 0, 0, 0, 0, 0});
    auto padded = wilcoxon_signed_rank(x, y);
    CHECK(padded.n_used == 6);
    CHECK(padded.p == doctest::Approx(full.p));
}

TEST_CASE("holm adjustment on a textbook triple") {
    auto adj = holm_adjust({0.01, 0.04, 0.03});
    CHECK(adj[0] == doctest::Approx(0.03));
    CHECK(adj[1] == doctest::Approx(0.06));
    CHECK(adj[2] == doctest::Approx(0.06));
}

TEST_CASE("holm is monotone and capped at one") {
    auto adj = holm_adjust({0.5, 0.9, 0.2, 0.04});
    for (double p : adj) CHECK(p <= 1.0);
    CHECK(adj[3] == doctest::Approx(0.16));
    CHECK(holm_adjust({}).empty());
    CHECK(holm_adjust({0.2})[0] == doctest::Approx(0.2));
}

TEST_CASE("spearman on a partially concordant sample") {
    std::vector<double> x{1, 2, 3, 4};
    std::vector<double> y{2, 1, 4, 3};
    auto rho = spearman_rho(x, y);
    REQUIRE(rho.has_value());
    CHECK(*rho == doctest::Approx(0.6)); // 1 - 6*4/(4*15)

    CHECK(*spearman_rho({1, 2, 3}, {10, 20, 30}) == doctest::Approx(1.0));
    CHECK(*spearman_rho({1, 2, 3}, {3, 2, 1}) == doctest::Approx(-1.0));
    CHECK_FALSE(spearman_rho({1, 1, 1}, {1, 2, 3}).has_value());
}

TEST_CASE("spearman handles ties via average ranks") {
    auto rho = spearman_rho({1, 2, 2, 4}, {1, 2, 2, 4});
    REQUIRE(rho.has_value());
    CHECK(*rho == doctest::Approx(1.0));
}

TEST_CASE("midpoint median") {
    CHECK(midpoint_median({3, 1, 2}) == doctest::Approx(2.0));
    CHECK(midpoint_median({4, 1, 3, 2}) == doctest::Approx(2.5));
    CHECK(midpoint_median({7}) == doctest::Approx(7.0));
}

TEST_CASE("bootstrap ci is reproducible and ordered") {
    std::map<std::string, std::vector<double>> groups{
        {"org-a", {1.0, 2.0, 3.0}},
        {"org-b", {4.0, 5.0}},
        {"org-c", {0.0, 6.0, 2.0}},
    };
    auto stat = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x;
        return s / static_cast<double>(v.size());
    };
    auto a = bootstrap_ci(groups, stat, 2000, 7, "mean");
    auto b = bootstrap_ci(groups, stat, 2000, 7, "mean");
    CHECK(a.point == b.point);
    CHECK(a.lower == b.lower);
    CHECK(a.upper == b.upper);
    CHECK(a.lower <= a.point);
    CHECK(a.point <= a.upper);
    CHECK(a.point == doctest::Approx(stat({1, 2, 3, 4, 5, 0, 6, 2})));
}

TEST_CASE("bootstrap over one namespace collapses to the point") {
    std::map<std::string, std::vector<double>> groups{{"only", {1.0, 3.0}}};
    auto stat = [](const std::vector<double>& v) { return v.front(); };
    auto s = bootstrap_ci(groups, stat, 500, 1);
    CHECK(s.lower == s.point);
    CHECK(s.upper == s.point);
}

TEST_CASE("bootstrap with two point-mass namespaces brackets both") {
    std::map<std::string, std::vector<double>> groups{{"a", {0.0}}, {"b", {1.0}}};
    auto stat = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x;
        return s / static_cast<double>(v.size());
    };
    auto s = bootstrap_ci(groups, stat, 4000, 11);
    CHECK(s.lower == doctest::Approx(0.0));
    CHECK(s.upper == doctest::Approx(1.0));
    CHECK(s.point == doctest::Approx(0.5));
}

TEST_CASE("paired rule comparison wiring") {
    std::vector<std::pair<std::string, std::vector<std::optional<int>>>> per_rule{
        {"mean", {1, 2, 3, std::nullopt, 5}},
        {"median", {0, 1, 1, 4, std::nullopt}},
        {"winrate", {2, 2, 2, 2, 2}},
    };
    auto res = paired_rule_comparison(per_rule, 10);
    REQUIRE(res.size() == 3);
    CHECK(res[0].rule_a == "mean");
    CHECK(res[0].rule_b == "median");
    CHECK(res[0].used == 3);
    CHECK(res[0].excluded == 2);
    CHECK(res[0].median_diff_tasks == doctest::Approx(1.0));
    CHECK(res[0].median_diff_pp == doctest::Approx(10.0));
    for (const auto& r : res) {
        CHECK(r.p_adjusted >= r.p_raw);
        CHECK(r.p_adjusted <= 1.0);
    }
}
