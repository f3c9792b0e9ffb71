#include <landaulab/scaling.hpp>

#include <landaulab/errors.hpp>

#include <cmath>

namespace landaulab {

double student_t_975(int dof) {
    static const double table[] = {12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365,
                                   2.306,  2.262, 2.228, 2.201, 2.179, 2.160, 2.145,
                                   2.131,  2.120, 2.110, 2.101, 2.093, 2.086, 2.080,
                                   2.074,  2.069, 2.064, 2.060, 2.056, 2.052, 2.048,
                                   2.045,  2.042};
    if (dof < 1) throw DomainError("student_t_975: need at least one degree of freedom");
    if (dof <= 30) return table[dof - 1];
    if (dof <= 40) return 2.021;
    if (dof <= 60) return 2.000;
    if (dof <= 120) return 1.980;
    return 1.960;
}

PowerFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw DomainError("fit_power_law: length mismatch");
    if (x.size() < 3) throw DomainError("fit_power_law: need at least three points");
    const int n = static_cast<int>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (int i = 0; i < n; ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw DomainError("fit_power_law: values must be positive");
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly, syy += ly * ly;
    }
    const double vxx = sxx - sx * sx / n;
    const double vxy = sxy - sx * sy / n;
    const double vyy = syy - sy * sy / n;
    if (!(vxx > 0.0)) throw DomainError("fit_power_law: abscissae are all equal");

    PowerFit fit;
    fit.n = n;
    fit.exponent = vxy / vxx;
    fit.coef = std::exp((sy - fit.exponent * sx) / n);
    const double ss_res = std::max(0.0, vyy - fit.exponent * vxy);
    fit.r2 = vyy > 0.0 ? 1.0 - ss_res / vyy : 1.0;
    if (n > 2) {
        fit.stderr_exponent = std::sqrt(ss_res / (n - 2) / vxx);
        fit.ci_half_width = student_t_975(n - 2) * fit.stderr_exponent;
    }
    return fit;
}

}  // namespace landaulab
