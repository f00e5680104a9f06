#pragma once

#include <span>
#include <vector>

#include "treeinf/errors.hpp"

namespace treeinf {

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation; 0 when fewer than 2 values
};

MeanSd mean_sd(std::span<const double> values);

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double p_value = 1.0;  // two-sided t-test on the slope
};

// Ordinary least squares y = slope*x + intercept. Throws invalid_input_error
// on degenerate input: fewer than 3 points or zero variance in x.
FitResult ols_fit(std::span<const double> x, std::span<const double> y);

// Spearman rank correlation with average ranks on ties.
double spearman(std::span<const double> x, std::span<const double> y);

// Regularized incomplete beta function I_x(a, b).
double incomplete_beta(double a, double b, double x);

}  // namespace treeinf
