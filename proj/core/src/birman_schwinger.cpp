#include <landaulab/birman_schwinger.hpp>

#include <landaulab/basis.hpp>
#include <landaulab/cluster.hpp>
#include <landaulab/grid.hpp>
#include <landaulab/levels.hpp>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace landaulab {

namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

// 2 pi w r |V|(r) folded into one weight vector for the given rule.
Eigen::VectorXd potential_weights(const PotentialSpec& v, const Eigen::VectorXd& r,
                                  const Eigen::VectorXd& w) {
    Eigen::VectorXd w2(r.size());
    for (Eigen::Index i = 0; i < r.size(); ++i)
        w2[i] = two_pi * w[i] * r[i] * v.abs_radial(r[i]);
    return w2;
}

// Per-level masses mu_k = <W R_k, W R_k> along one line, k = k_a .. k_hi.
Eigen::VectorXd line_masses(int ell, int k_hi, const Eigen::VectorXd& r,
                            const Eigen::VectorXd& w2) {
    RadialLineWalker walk(ell, r);
    const int k_a = walk.level();
    Eigen::VectorXd mu(k_hi - k_a + 1);
    for (int k = k_a; k <= k_hi; ++k) {
        mu[k - k_a] = (walk.values().square() * w2.array()).sum();
        if (k < k_hi) walk.advance();
    }
    return mu;
}

}  // namespace

RadialBSOperator::RadialBSOperator(const PotentialSpec& v, const BSOptions& opts)
    : opts_(opts) {
    if (!v.is_radial()) throw DomainError("RadialBSOperator: potential must be radial");
    if (opts_.k_main < 8 || opts_.k_meas <= opts_.k_main)
        throw DomainError("RadialBSOperator: need 8 <= k_main < k_meas");

    const double R = potential_support_radius(v, LebesgueExponent(1.0), opts_.support_tol);
    Eigen::VectorXd r_main, w_main, r_mu, w_mu;
    radial_oscillation_rule(R, std::sqrt(2.0 * landau_eigenvalue(opts_.k_main)), r_main,
                            w_main);
    radial_oscillation_rule(R, std::sqrt(2.0 * landau_eigenvalue(opts_.k_meas)), r_mu, w_mu);
    const Eigen::VectorXd w2_main = potential_weights(v, r_main, w_main);
    const Eigen::VectorXd w2_mu = potential_weights(v, r_mu, w_mu);

    mu_ = Eigen::VectorXd::Zero(opts_.k_meas + 1);
    double glob_gram = 0.0, glob_tail = 0.0;
    double trimmed_mass = 0.0;

    for (int dir : {1, -1}) {
        int quiet = 0;
        for (int step = 0; quiet < 3; ++step) {
            const int ell = dir > 0 ? step : -1 - step;
            if (std::abs(ell) > 4000)
                throw DomainError("RadialBSOperator: line scan failed to terminate");
            const int k_a = std::max(0, -ell);
            if (k_a > opts_.k_meas) break;  // no states left on this side
            Eigen::VectorXd mu = line_masses(ell, opts_.k_meas, r_mu, w2_mu);
            double gram_metric = 0.0, tail_metric = 0.0;
            for (int k = k_a; k <= opts_.k_meas; ++k) {
                if (k <= opts_.k_main)
                    gram_metric = std::max(gram_metric, mu[k - k_a]);
                else
                    tail_metric += mu[k - k_a] / landau_eigenvalue(k);
            }
            glob_gram = std::max(glob_gram, gram_metric);
            glob_tail = std::max(glob_tail, tail_metric);
            const bool gram_live = gram_metric >= opts_.line_rel_tol * glob_gram;
            const bool tail_live = tail_metric >= opts_.line_rel_tol * glob_tail;
            if (!gram_live && !tail_live) {
                // trace bounds the resolved part of a dropped line
                if (k_a <= opts_.k_main)
                    dropped_gmax_ =
                        std::max(dropped_gmax_, mu.head(opts_.k_main - k_a + 1).sum());
                dropped_mu_ = std::max(dropped_mu_, tail_metric);
                ++quiet;
                continue;
            }
            quiet = 0;

            Line line;
            line.ell = ell;
            line.k_a = k_a;
            line.mu = std::move(mu);
            for (int k = k_a; k <= opts_.k_meas; ++k)
                mu_[k] = std::max(mu_[k], line.mu[k - k_a]);

            if (gram_live) {
                Eigen::MatrixXd table =
                    landau_radial_line(ell, k_a, opts_.k_main, r_main);
                // skip leading levels with no mass in the support
                Eigen::VectorXd diag = table.array().square().matrix() * w2_main;
                const double trim_tol = 1e-10 * opts_.line_rel_tol * glob_gram;
                int first = 0;
                double skipped = 0.0;
                while (first < diag.size() - 1 && diag[first] < trim_tol)
                    skipped += diag[first++];
                trimmed_mass = std::max(trimmed_mass, skipped);
                const Eigen::Index kept = diag.size() - first;
                Eigen::MatrixXd t = table.bottomRows(kept);
                Eigen::MatrixXd gram = t * w2_main.asDiagonal() * t.transpose();
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
                line.gmax = es.eigenvalues().maxCoeff();
                Eigen::VectorXd root =
                    es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
                line.gram_sqrt = es.eigenvectors() * root.asDiagonal() *
                                 es.eigenvectors().transpose();
                line.k_a = k_a + first;  // gram rows start here; mu keeps k_a
                line.mu = line.mu.tail(line.mu.size() - first).eval();
            }
            lines_.push_back(std::move(line));
        }
    }
    dropped_gmax_ += trimmed_mass;

    std::sort(lines_.begin(), lines_.end(),
              [](const Line& a, const Line& b) { return a.gmax > b.gmax; });

    // decay of the measured per-level norms over the top octave
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (int k = opts_.k_meas / 2; k <= opts_.k_meas; ++k) {
        if (mu_[k] <= 0.0) continue;
        const double x = std::log(landau_eigenvalue(k)), y = std::log(mu_[k]);
        sx += x, sy += y, sxx += x * x, sxy += x * y;
        ++n;
    }
    if (n < 8) throw DomainError("RadialBSOperator: too few level norms to fit a decay");
    fit_exp_ = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit_coef_ = std::exp((sy - fit_exp_ * sx) / n);
    if (fit_exp_ > -0.05)
        throw DomainError("RadialBSOperator: level norms do not decay; tail unbounded");
}

double RadialBSOperator::level_norm(int k) const {
    if (k < 0) throw DomainError("level_norm: level must be >= 0");
    if (k <= opts_.k_meas) return mu_[k];
    return fit_coef_ * std::pow(landau_eigenvalue(k), fit_exp_);
}

double RadialBSOperator::tail_beyond(double re_z, int k_from) const {
    const double lam_lo = landau_eigenvalue(k_from + 1);
    if (!(re_z < lam_lo - 1.0))
        throw DomainError("tail_beyond: point too close to the unresolved levels");
    double best = 0.0;
    for (const auto& line : lines_) {
        const int k0 = std::max(k_from + 1, line.k_a);
        double s = 0.0;
        for (int k = k0; k <= opts_.k_meas; ++k)
            s += line.mu[k - line.k_a] / (landau_eigenvalue(k) - re_z);
        best = std::max(best, s);
    }
    // fitted remainder beyond k_meas plus the lines left out of the scan
    const double lam_meas = landau_eigenvalue(opts_.k_meas);
    const double rem = 1.5 * fit_coef_ * std::pow(lam_meas, fit_exp_) /
                       (2.0 * -fit_exp_) / (1.0 - re_z / lam_meas);
    const double dropped = dropped_mu_ * lam_lo / (lam_lo - re_z);
    return best + rem + dropped;
}

double RadialBSOperator::line_norm(const Line& line, const Eigen::VectorXd& c) const {
    Eigen::MatrixXd h = line.gram_sqrt * c.asDiagonal() * line.gram_sqrt;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

double RadialBSOperator::line_norm(const Line& line, const Eigen::VectorXcd& c) const {
    Eigen::MatrixXcd h = line.gram_sqrt * c.asDiagonal() * line.gram_sqrt;
    return h.jacobiSvd().singularValues()[0];
}

NormInterval RadialBSOperator::top_eigenvalue(double e) const {
    if (!(e < landau_eigenvalue(opts_.k_main) - 1.0))
        throw DomainError("top_eigenvalue: point too close to the unresolved levels");
    Eigen::VectorXd c(opts_.k_main + 1);
    double cmax = 0.0;
    for (int k = 0; k <= opts_.k_main; ++k) {
        c[k] = 1.0 / (landau_eigenvalue(k) - e);
        cmax = std::max(cmax, std::abs(c[k]));
    }
    NormInterval out;
    for (const auto& line : lines_) {
        if (line.gram_sqrt.size() == 0) continue;
        if (line.gmax * cmax <= out.main) break;
        const auto slice = c.segment(line.k_a, opts_.k_main - line.k_a + 1);
        Eigen::MatrixXd h = line.gram_sqrt * slice.asDiagonal() * line.gram_sqrt;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
        out.main = std::max(out.main, es.eigenvalues().maxCoeff());
    }
    out.tail = tail_beyond(e, opts_.k_main) + cmax * dropped_gmax_;
    return out;
}

NormInterval RadialBSOperator::norm(std::complex<double> z, int drop) const {
    if (drop > opts_.k_main)
        throw DomainError("norm: dropped level must be resolved (k <= k_main)");
    if (!(z.real() < landau_eigenvalue(opts_.k_main) - 1.0))
        throw DomainError("norm: point too close to the unresolved levels");
    const bool real_z = z.imag() == 0.0;
    Eigen::VectorXcd c(opts_.k_main + 1);
    double cmax = 0.0;
    for (int k = 0; k <= opts_.k_main; ++k) {
        c[k] = k == drop ? 0.0 : 1.0 / (landau_eigenvalue(k) - z);
        cmax = std::max(cmax, std::abs(c[k]));
    }
    NormInterval out;
    for (const auto& line : lines_) {
        if (line.gram_sqrt.size() == 0) continue;
        if (line.gmax * cmax <= out.main) break;  // lines sorted by gmax
        const auto slice = c.segment(line.k_a, opts_.k_main - line.k_a + 1);
        const double val = real_z ? line_norm(line, Eigen::VectorXd(slice.real()))
                                  : line_norm(line, Eigen::VectorXcd(slice));
        out.main = std::max(out.main, val);
    }
    out.tail = tail_beyond(z.real(), opts_.k_main) + cmax * dropped_gmax_;
    return out;
}

}  // namespace landaulab
