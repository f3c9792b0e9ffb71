#pragma once

#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Dense>

namespace landaulab {

/// Angular Fourier transforms of polar-grid fields, one FFT per radius.
///
/// Analysis:   fhat_l(r_i) = (1/n) sum_j f(r_i, theta_j) e^{-i l theta_j},
/// synthesis:  f(r_i, theta_j) = sum_l fhat_l(r_i) e^{+i l theta_j}.
/// The harmonic l lives at column (l mod n); harmonics are only faithful
/// for |l| < n/2, which the grid builder guarantees by construction.
class AngularFFT {
  public:
    explicit AngularFFT(int n_angular);

    int size() const { return n_; }

    /// Rows of coef are radii, columns angular harmonics (l mod n).
    void analyze(const Eigen::VectorXcd& field, Eigen::MatrixXcd& coef) const;
    void synthesize(const Eigen::MatrixXcd& coef, Eigen::VectorXcd& field) const;

  private:
    int n_;
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

}  // namespace landaulab
