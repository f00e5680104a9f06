#include <doctest.h>

#include <cmath>
#include <vector>

#include "treeinf/stats.hpp"

using namespace treeinf;

TEST_CASE("mean_sd") {
    const std::vector<double> v{2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0};
    const auto s = mean_sd(v);
    CHECK(s.mean == doctest::Approx(5.0));
    CHECK(s.sd == doctest::Approx(std::sqrt(32.0 / 7.0)));

    const std::vector<double> one{3.5};
    CHECK(mean_sd(one).sd == 0.0);
    CHECK_THROWS_AS(mean_sd(std::vector<double>{}), invalid_input_error);
}

TEST_CASE("ols on an exact line") {
    std::vector<double> x, y;
    for (int i = 0; i < 20; ++i) {
        x.push_back(i);
        y.push_back(3.0 * i - 7.0);
    }
    const auto fit = ols_fit(x, y);
    CHECK(fit.slope == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(-7.0).epsilon(1e-10));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.p_value == doctest::Approx(0.0));
}

TEST_CASE("ols on noisy data stays close and keeps p small") {
    // fixed pseudo-noise, no rng needed
    std::vector<double> x, y;
    for (int i = 0; i < 50; ++i) {
        x.push_back(i);
        y.push_back(2.0 * i + 1.0 + 0.3 * std::sin(12.9898 * i));
    }
    const auto fit = ols_fit(x, y);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(0.01));
    CHECK(fit.r_squared > 0.99);
    CHECK(fit.p_value < 1e-6);
}

TEST_CASE("ols degenerate inputs") {
    CHECK_THROWS_AS(ols_fit(std::vector<double>{1.0}, std::vector<double>{2.0}),
                    invalid_input_error);
    const std::vector<double> flat{2.0, 2.0, 2.0, 2.0};
    const std::vector<double> y{1.0, 2.0, 3.0, 4.0};
    CHECK_THROWS_AS(ols_fit(flat, y), invalid_input_error);
    CHECK_THROWS_AS(ols_fit(y, std::vector<double>{1.0, 2.0, 3.0}), invalid_input_error);
}

TEST_CASE("incomplete beta sanity") {
    CHECK(incomplete_beta(0.5, 0.5, 0.5) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(incomplete_beta(2.0, 2.0, 0.0) == 0.0);
    CHECK(incomplete_beta(2.0, 2.0, 1.0) == 1.0);
    // I_x(1, 1) = x
    CHECK(incomplete_beta(1.0, 1.0, 0.3) == doctest::Approx(0.3).epsilon(1e-10));
}

TEST_CASE("spearman") {
    const std::vector<double> x{1, 2, 3, 4, 5};
    const std::vector<double> inc{2, 4, 6, 8, 10};
    const std::vector<double> dec{10, 8, 6, 4, 2};
    CHECK(spearman(x, inc) == doctest::Approx(1.0));
    CHECK(spearman(x, dec) == doctest::Approx(-1.0));

    // monotone but nonlinear is still rho = 1
    const std::vector<double> cube{1, 8, 27, 64, 125};
    CHECK(spearman(x, cube) == doctest::Approx(1.0));

    // ties get average ranks
    const std::vector<double> tied{1, 2, 2, 3, 4};
    CHECK(spearman(x, tied) == doctest::Approx(spearman(tied, x)));
    CHECK(spearman(x, tied) > 0.9);

    CHECK_THROWS_AS(spearman(x, std::vector<double>{1, 1, 1, 1, 1}), invalid_input_error);
}
