#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include <landaulab/exponents.hpp>
#include <landaulab/grid.hpp>

namespace landaulab {

/// A complex-valued function sampled on a polar QuadratureGrid, stored
/// row-major in the radius index: entry ir * n_angular + it.
using PlanarField = Eigen::VectorXcd;

/// Weighted L^p norm of a field on its grid. Accepts any exponent >= 1,
/// including infinity (sup of |f| over grid points).
double lp_norm(const QuadratureGrid& g, const PlanarField& f, LebesgueExponent p);

/// Weighted inner product  integral conj(a) * b.
std::complex<double> inner(const QuadratureGrid& g, const PlanarField& a,
                           const PlanarField& b);

/// Sample a pointwise function f(x, y) on the grid.
PlanarField sample_field(const QuadratureGrid& g,
                         const std::function<std::complex<double>(double, double)>& f);

/// Sample a radial function f(r) on the grid.
PlanarField sample_radial_field(const QuadratureGrid& g,
                                const std::function<double(double)>& f);

}  // namespace landaulab
