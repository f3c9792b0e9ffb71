#pragma once

#include <vector>

namespace landaulab {

/// Least-squares fit of y = coef * x^exponent through the logs, with a
/// two-sided 95% confidence half-width on the exponent from the t table.
struct PowerFit {
    double exponent = 0.0;
    double coef = 0.0;
    double stderr_exponent = 0.0;
    double ci_half_width = 0.0;
    double r2 = 0.0;
    int n = 0;
};

PowerFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

/// 97.5% quantile of Student's t with the given degrees of freedom.
double student_t_975(int dof);

}  // namespace landaulab
