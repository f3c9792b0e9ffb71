#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include <landaulab/potential.hpp>

namespace landaulab {

struct BSOptions {
    int k_main = 192;            // levels resolved exactly
    int k_meas = 1200;           // per-level norms measured out to here
    double support_tol = 1e-12;  // potential mass allowed beyond the radial rule
    double line_rel_tol = 1e-7;  // drop lines this far below the strongest one
};

/// Two-sided enclosure: the resolved block plus a bound on everything left
/// out (higher levels and dropped lines).
struct NormInterval {
    double main = 0.0;
    double tail = 0.0;
    double lower() const { return main > tail ? main - tail : 0.0; }
    double upper() const { return main + tail; }
};

/// sum_k  W P_k W / (lambda_k - z)  with W = |V|^{1/2} for a radial
/// potential.  Angular-momentum lines decouple and each level contributes a
/// rank-one term per line, so operator norms reduce to small dense spectra
/// of G^{1/2} diag(c) G^{1/2} with the Gram factors G independent of z.
class RadialBSOperator {
  public:
    explicit RadialBSOperator(const PotentialSpec& v, const BSOptions& opts = {});

    /// Norm with the weights c_k = 1/(lambda_k - z); drop >= 0 zeroes that
    /// level's weight (off-level part of the operator).  Requires
    /// Re z < lambda_{k_main} - 1 so the discarded levels stay bounded.
    NormInterval norm(std::complex<double> z, int drop = -1) const;

    /// Largest signed eigenvalue of the resolved block at a real point in
    /// the gap below a level; an eigenvalue of H0 - W^2 sits exactly where
    /// this crosses 1 (monotone increasing between levels).
    NormInterval top_eigenvalue(double e) const;

    /// || W P_k W ||: measured through k_meas, fitted decay beyond.
    double level_norm(int k) const;

    /// max over lines of sum_{k > k_from} mu_k^line / (lambda_k - re_z),
    /// including the fitted remainder beyond k_meas.
    double tail_beyond(double re_z, int k_from) const;

    double fitted_exponent() const { return fit_exp_; }
    int line_count() const { return static_cast<int>(lines_.size()); }
    const BSOptions& options() const { return opts_; }

  private:
    struct Line {
        int ell = 0;
        int k_a = 0;                // lowest level the line admits
        Eigen::MatrixXd gram_sqrt;  // G^{1/2} over levels k_a .. k_main
        Eigen::VectorXd mu;         // per-level masses, k_a .. k_meas
        double gmax = 0.0;          // largest Gram eigenvalue
    };

    double line_norm(const Line& line, const Eigen::VectorXd& c) const;
    double line_norm(const Line& line, const Eigen::VectorXcd& c) const;

    BSOptions opts_;
    std::vector<Line> lines_;      // sorted by decreasing gmax
    Eigen::VectorXd mu_;           // max over lines, 0 .. k_meas
    double fit_coef_ = 0.0, fit_exp_ = 0.0;
    double dropped_gmax_ = 0.0;    // strongest line left out of the resolved set
    double dropped_mu_ = 0.0;      // strongest per-level mass left out
};

}  // namespace landaulab
