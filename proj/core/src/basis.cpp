#include <landaulab/basis.hpp>

#include <cmath>

namespace landaulab {

namespace {
constexpr double two_pi = 6.283185307179586476925286766559;

// Generalized Laguerre recurrence seeded with exp(log_lead).  Returns
// exp(log_lead) * L_p^alpha(u); the recurrence is linear, so any damping
// belongs in log_lead.
double laguerre_scaled(int p, int alpha, double u, double log_lead) {
    double lead = std::exp(log_lead);
    if (lead == 0.0) return 0.0;
    double gm1 = lead;
    if (p == 0) return gm1;
    double g = lead * (1.0 + alpha - u);
    for (int j = 1; j < p; ++j) {
        double gn = ((2.0 * j + 1.0 + alpha - u) * g - (j + alpha) * gm1) / (j + 1.0);
        gm1 = g;
        g = gn;
    }
    return g;
}
}  // namespace

double laguerre_damped(int k, double u) {
    if (k < 0) throw DomainError("laguerre_damped: order must be >= 0");
    if (u < 0.0) throw DomainError("laguerre_damped: argument must be >= 0");
    return laguerre_scaled(k, 0, u, -0.5 * u);
}

double landau_radial(int k, int m, double r) {
    if (k < 0 || m < 0) throw DomainError("landau_radial: indices must be >= 0");
    if (r < 0.0) throw DomainError("landau_radial: radius must be >= 0");
    const int l = m - k;
    const int a = std::abs(l);
    const int p = std::min(k, m);
    if (r == 0.0) {
        if (a > 0) return 0.0;
        return std::exp(-0.5 * std::log(two_pi));  // L_p(0) = 1
    }
    const double u = 0.5 * r * r;
    double log_lead = -0.5 * std::log(two_pi) - 0.5 * a * std::log(2.0)
                      - 0.5 * (std::lgamma(p + a + 1.0) - std::lgamma(p + 1.0))
                      + a * std::log(r) - 0.5 * u;
    return laguerre_scaled(p, a, u, log_lead);
}

RadialLineWalker::RadialLineWalker(int ell, const Eigen::VectorXd& r)
    : a_(std::abs(ell)), k_(std::max(0, -ell)) {
    const Eigen::Index nr = r.size();
    u_ = 0.5 * r.array().square();
    s_.resize(nr);
    off_ = Eigen::ArrayXd::Zero(nr);
    sm1_ = Eigen::ArrayXd::Zero(nr);
    const double log_norm0 =
        -0.5 * (std::log(two_pi) + a_ * std::log(2.0) + std::lgamma(a_ + 1.0));
    for (Eigen::Index i = 0; i < nr; ++i) {
        if (r[i] < 0.0) throw DomainError("RadialLineWalker: radius must be >= 0");
        if (r[i] == 0.0) {
            s_[i] = a_ > 0 ? 0.0 : std::exp(log_norm0);
            continue;
        }
        const double lg = log_norm0 + a_ * std::log(r[i]) - 0.5 * u_[i];
        if (lg < -700.0) {  // seed would underflow: stash the deficit
            s_[i] = std::exp(-700.0);
            off_[i] = lg + 700.0;
            scaled_ = true;
        } else {
            s_[i] = std::exp(lg);
        }
    }
}

const Eigen::ArrayXd& RadialLineWalker::values() const {
    if (!scaled_) return s_;
    if (!fresh_) {
        out_ = s_ * off_.exp();
        fresh_ = true;
    }
    return out_;
}

void RadialLineWalker::advance() {
    const int p = ++p_;
    ++k_;
    const double ap = 1.0 / std::sqrt(static_cast<double>(p) * (p + a_));
    const double bp =
        std::sqrt((p - 1.0) * (p - 1.0 + a_) / (static_cast<double>(p) * (p + a_)));
    Eigen::ArrayXd sn = ap * (2.0 * p - 1.0 + a_ - u_) * s_ - bp * sm1_;
    sm1_.swap(s_);
    s_.swap(sn);
    if (scaled_) {
        fresh_ = false;
        for (Eigen::Index i = 0; i < s_.size(); ++i) {
            if (off_[i] < 0.0 && std::abs(s_[i]) > 1e100) {
                const double step = std::max(off_[i], -500.0);
                const double f = std::exp(step);
                s_[i] *= f;
                sm1_[i] *= f;
                off_[i] -= step;
            }
        }
    }
}

Eigen::MatrixXd landau_radial_line(int ell, int k_lo, int k_hi, const Eigen::VectorXd& r) {
    if (k_lo < 0 || k_lo + std::min(0, ell) < 0)
        throw DomainError("landau_radial_line: no state with that index on the line");
    if (k_hi < k_lo) throw DomainError("landau_radial_line: empty level range");
    RadialLineWalker walk(ell, r);
    while (walk.level() < k_lo) walk.advance();
    Eigen::MatrixXd out(k_hi - k_lo + 1, r.size());
    for (int k = k_lo; k <= k_hi; ++k) {
        out.row(k - k_lo) = walk.values().transpose();
        if (k < k_hi) walk.advance();
    }
    return out;
}

std::complex<double> eigenfunction_eval(int k, int m, double x, double y) {
    const double r = std::hypot(x, y);
    const double R = landau_radial(k, m, r);
    const int l = m - k;
    if (l == 0 || R == 0.0) return {R, 0.0};
    const double th = l * std::atan2(y, x);
    return {R * std::cos(th), R * std::sin(th)};
}

std::complex<double> eigenfunction_eval(LevelIndex idx, int m, double x, double y) {
    if (idx.n != 1)
        throw DomainError("eigenfunction_eval: pointwise evaluation is planar only (n = 1)");
    return eigenfunction_eval(idx.k, m, x, y);
}

std::complex<double> projection_kernel(int k, const Eigen::Vector2d& x,
                                       const Eigen::Vector2d& y) {
    if (k < 0) throw DomainError("projection_kernel: level must be >= 0");
    const double dx = x[0] - y[0], dy = x[1] - y[1];
    const double u = 0.5 * (dx * dx + dy * dy);
    const double radial = laguerre_damped(k, u) / two_pi;
    const double phase = 0.5 * (x[1] * y[0] - x[0] * y[1]);
    return {radial * std::cos(phase), radial * std::sin(phase)};
}

}  // namespace landaulab
