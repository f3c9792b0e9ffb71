#pragma once

#include <landaulab/levels.hpp>

#include <Eigen/Dense>

#include <complex>

namespace landaulab {

// L_k(u) e^{-u/2} (alpha = 0) by the upward recurrence with the damping
// folded into the starting values.
double laguerre_damped(int k, double u);

// Normalized radial factor of the symmetric-gauge eigenfunction,
//   phi_{k,m}(x) = R_{k,m}(r) e^{i (m-k) theta},
//   R_{k,m}(r) = c r^{|l|} L_p^{|l|}(r^2/2) e^{-r^2/4},
// with l = m - k, p = min(k, m) and c the L^2(R^2) normalization.  The
// normalization, the power prefactor and the Gaussian are folded into the
// recurrence start through logs, so levels up to k ~ 60 evaluate without
// overflow.
double landau_radial(int k, int m, double r);

// phi_{k,m} at a planar point (n = 1 planar factor only).
std::complex<double> eigenfunction_eval(int k, int m, double x, double y);
std::complex<double> eigenfunction_eval(LevelIndex idx, int m, double x, double y);

// Streams R_{k, k+l}(r_i) one level at a time along a fixed angular line,
// starting from the lowest k the line admits.  The L^2 normalization is
// folded into the recurrence coefficients, so the values stay O(1) at any
// level and the cost per step is one pass over the radii.  Nodes whose
// Gaussian seed underflows carry a log-scale offset that unwinds as the
// recurrence climbs, so far-out radii survive arbitrarily deep levels.
class RadialLineWalker {
  public:
    RadialLineWalker(int ell, const Eigen::VectorXd& r);

    int level() const { return k_; }
    const Eigen::ArrayXd& values() const;
    void advance();

  private:
    int a_ = 0, k_ = 0, p_ = 0;
    bool scaled_ = false;
    Eigen::ArrayXd u_, s_, sm1_, off_;
    mutable Eigen::ArrayXd out_;
    mutable bool fresh_ = false;
};

// All of R_{k, k+l}(r_i) for k = k_lo .. k_hi on one line, row (k - k_lo).
Eigen::MatrixXd landau_radial_line(int ell, int k_lo, int k_hi, const Eigen::VectorXd& r);

// Closed-form kernel of the level-k spectral projection,
//   P_k(x, y) = (1/2pi) L_k(|x-y|^2/2) e^{-|x-y|^2/4} e^{i (x2 y1 - x1 y2)/2}.
// The gauge-phase sign is pinned by the eigenfunction-sum cross-check.
std::complex<double> projection_kernel(int k, const Eigen::Vector2d& x,
                                       const Eigen::Vector2d& y);

}  // namespace landaulab
