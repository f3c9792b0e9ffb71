#pragma once

#include <landaulab/errors.hpp>

#include <Eigen/Dense>

namespace landaulab {

// Polar quadrature grid: Gauss-Legendre nodes in radius on [0, extent] with
// the polar jacobian folded into the radial weights, times uniform angles.
// Points are stored flattened, index = ir * n_angular + it.  The angular
// count is a power of two so angular transforms can run through the FFT.
//
// A grid must pass calibrate() for the levels it is used with before any
// norm or matrix element is trusted; operations check require_calibrated().
struct QuadratureGrid {
    double extent = 0.0;
    Eigen::VectorXd r;   // radial nodes, ascending
    Eigen::VectorXd wr;  // GL weight times r
    int n_angular = 0;
    int calibrated_k = -1;
    int calibrated_m = -1;

    int n_radial() const { return static_cast<int>(r.size()); }
    long n_points() const { return static_cast<long>(r.size()) * n_angular; }
    double theta(int j) const;
    double angular_weight() const;                 // 2 pi / n_angular
    double point_weight(int ir) const { return wr[ir] * angular_weight(); }
    double point_x(int ir, int it) const;
    double point_y(int ir, int it) const;

    void require_calibrated(int k, int m) const;
};

// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on P_n.
void gauss_legendre(int n, Eigen::VectorXd& x, Eigen::VectorXd& w);

QuadratureGrid build_grid(double extent, double radial_density, int n_angular);

// Composite Gauss-Legendre rule for integrals over [0, R] of functions
// oscillating with radial wavenumber up to osc (several nodes per wave).
void radial_oscillation_rule(double R, double osc, Eigen::VectorXd& r, Eigen::VectorXd& w);

// Quadrature mass of |phi_{k,m}|^2 (angular part integrates exactly).
double quadrature_mass(const QuadratureGrid& g, int k, int m);

// Mandatory self-calibration: total weight against the disc area (1%), unit
// mass of phi_{0,0} within 1e-6, and mass of the outermost retained states
// within tail_tol.  Throws GridError on failure.
void calibrate(QuadratureGrid& g, int k_max, int m_max, double tail_tol = 1e-8);

// Extent from the classical radius sqrt(2 lambda) of the outermost retained
// state plus padding, widened until calibration passes or the point budget
// is exhausted.  radial_density <= 0 and n_angular <= 0 pick defaults.
QuadratureGrid build_grid_for_level(int k_max, int m_max, double radial_density = 0.0,
                                    int n_angular = 0, double tail_tol = 1e-8);

int next_pow2(int n);

}  // namespace landaulab
