#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include <landaulab/exponents.hpp>
#include <landaulab/fields.hpp>
#include <landaulab/grid.hpp>

namespace landaulab {

/// Coefficients of a single-level superposition  f = sum_m c_m phi_{k0,m},
/// used to represent optimizer-produced potentials in closed form.
struct LevelState {
    int k0 = 0;
    Eigen::VectorXcd coef;  // index m = 0 .. coef.size()-1
};

/// A real potential on the plane. Families:
///   gaussian    V = s A exp(-|x-c|^2 / (2 sigma^2))
///   bump        V = s A e exp(-1 / (1 - |x-c|^2/R^2)) on |x-c| < R, else 0
///   power_tail  V = s A (1 + |x|^2/sigma^2)^(-beta/2)
///   tabulated   radial, linear interpolation of |V| samples, sign s
///   level_power V = s (scale |f|^gamma)^2 with f a LevelState superposition
/// with s = sign (+1 or -1) and A = amplitude > 0.
struct PotentialSpec {
    enum class Family { gaussian, bump, power_tail, tabulated, level_power };

    Family family = Family::gaussian;
    int sign = -1;
    double amplitude = 1.0;
    double sigma = 1.0;
    double beta = 6.0;
    double radius = 1.0;
    std::array<double, 2> center{0.0, 0.0};
    std::vector<double> table_r, table_v;
    LevelState state;
    double gamma = 1.0;
    double scale = 1.0;

    bool is_radial() const;
    double operator()(double x, double y) const;
    double abs_radial(double r) const;  // requires is_radial()

    /// L^r norm of |V|, closed form where available, high-order radial
    /// quadrature otherwise (radial families only).
    double lp_norm(LebesgueExponent r) const;

    /// Fraction of the L^r mass of |V| outside radius R about the origin.
    double tail_fraction(double R, LebesgueExponent r) const;

    std::string family_name() const;
};

PotentialSpec gaussian_potential(double amplitude, double sigma, int sign = -1);
PotentialSpec bump_potential(double amplitude, double radius, int sign = -1);
PotentialSpec power_tail_potential(double amplitude, double sigma, double beta,
                                   int sign = -1);

/// Sample V on a grid, erroring out if more than tail_tol of the L^r mass
/// lies beyond the grid extent.
PlanarField sample_potential(const QuadratureGrid& g, const PotentialSpec& v,
                             LebesgueExponent r, double tail_tol = 1e-6);

}  // namespace landaulab
