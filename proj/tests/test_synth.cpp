#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "treeinf/rng.hpp"
#include "treeinf/synth.hpp"

using namespace treeinf;

TEST_CASE("random_tree smallest cases") {
    std::mt19937_64 rng(51);
    const auto single = random_tree(1, rng);
    CHECK(single.node_count() == 1);
    const auto pair = random_tree(2, rng);
    CHECK(pair.node_count() == 2);
    CHECK(pair.parent(1) == 0);
    CHECK_THROWS_AS(random_tree(0, rng), invalid_input_error);
}

TEST_CASE("recursive-tree root degree matches the harmonic prediction") {
    // E[deg(root)] = H_{n-1}; a standard self-test of the growth model.
    const NodeId n = 10;
    const int samples = 10'000;
    std::mt19937_64 rng(52);
    double total = 0.0, total_sq = 0.0;
    for (int s = 0; s < samples; ++s) {
        const auto tree = random_tree(n, rng);
        const auto d = static_cast<double>(tree.out_degree(tree.root()));
        total += d;
        total_sq += d * d;
    }
    const double mean = total / samples;
    double expected = 0.0;
    for (NodeId i = 1; i < n; ++i) expected += 1.0 / i;
    const double var = total_sq / samples - mean * mean;
    const double se = std::sqrt(var / samples);
    CHECK(std::fabs(mean - expected) <= 3.0 * se);
}

TEST_CASE("fixed-height generator hits the exact height") {
    std::mt19937_64 rng(53);
    CHECK(tree_height(random_tree_fixed_height(5, 4, rng)) == 4);   // forced path
    CHECK(tree_height(random_tree_fixed_height(5, 1, rng)) == 1);   // forced star
    CHECK(random_tree_fixed_height(5, 1, rng).out_degree(0) == 4);
    for (int s = 0; s < 1000; ++s)
        CHECK(tree_height(random_tree_fixed_height(50, 10, rng)) == 10);
    CHECK_THROWS_AS(random_tree_fixed_height(5, 5, rng), invalid_input_error);
    CHECK_THROWS_AS(random_tree_fixed_height(5, 0, rng), invalid_input_error);
}

TEST_CASE("growth_vs_n with a star-only generator has slope exactly 1") {
    std::vector<NodeId> ns;
    for (NodeId n = 5; n <= 30; ++n) ns.push_back(n);
    const auto star_gen = [](NodeId n, std::mt19937_64&) { return make_star(n); };
    const auto result = growth_vs_n(ns, 3, 7, star_gen);
    CHECK(result.i_star_fit.slope == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.i_star_fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.i_star_fit.p_value <= 1e-9);
    CHECK(result.k_star_fit.slope == doctest::Approx(0.0).epsilon(1e-12));
    for (const auto& p : result.points) {
        CHECK(p.mean_i_star == doctest::Approx(p.x - 1.0));
        CHECK(p.sd_i_star == 0.0);
        CHECK(p.mean_k_star == doctest::Approx(1.0));
    }
}

TEST_CASE("degenerate fit is flagged") {
    CHECK_THROWS_AS(growth_vs_n({10}, 1, 7), invalid_input_error);
}

TEST_CASE("growth curves are reproducible under a seed") {
    std::vector<NodeId> ns{5, 10, 15, 20};
    const auto a = growth_vs_n(ns, 10, 99);
    const auto b = growth_vs_n(ns, 10, 99);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].mean_i_star == b.points[i].mean_i_star);
        CHECK(a.points[i].sd_k_star == b.points[i].sd_k_star);
    }
    CHECK(a.i_star_fit.slope == b.i_star_fit.slope);
}

TEST_CASE("growth_vs_height endpoints are forced shapes") {
    const NodeId n = 30;
    std::vector<NodeId> hs{1, 10, 20, n - 1};
    const auto points = growth_vs_height(n, hs, 20, 5);
    CHECK(points.front().mean_i_star == doctest::Approx(n - 1.0));
    CHECK(points.front().sd_i_star == 0.0);
    CHECK(points.back().mean_i_star == doctest::Approx(n / 2.0));
    CHECK(points.back().sd_k_star == 0.0);
}

TEST_CASE("mean influence decreases with height") {
    const NodeId n = 40;
    std::vector<NodeId> hs;
    for (NodeId h = 1; h < n; h += 2) hs.push_back(h);
    const auto points = growth_vs_height(n, hs, 30, 17);
    std::vector<double> xs, ys;
    for (const auto& p : points) {
        xs.push_back(static_cast<double>(p.x));
        ys.push_back(p.mean_i_star);
        CHECK(p.mean_i_star >= n / 2.0);
        CHECK(p.mean_i_star <= n - 1.0);
        CHECK(p.mean_k_star >= 1.0);
        CHECK(p.mean_k_star <= n / 2.0);
    }
    CHECK(spearman(xs, ys) < -0.9);
}

TEST_CASE("curve CSV shape") {
    const auto points = growth_vs_height(10, {1, 9}, 2, 3);
    const auto csv = curve_to_csv(points);
    CHECK(csv.substr(0, csv.find('\n')) == "x,mean_I,sd_I,mean_k,sd_k");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("derived rng streams: equal inputs agree, different inputs diverge") {
    auto a = make_rng(1, 2, 3);
    auto same = make_rng(1, 2, 3);
    auto other_rep = make_rng(1, 2, 4);
    auto other_seed = make_rng(2, 2, 3);
    const auto first = a();
    CHECK(first == same());
    CHECK(first != other_rep());
    CHECK(first != other_seed());
}
