#pragma once

#include <vector>

#include <Eigen/Dense>

#include <landaulab/basis.hpp>
#include <landaulab/fields.hpp>
#include <landaulab/fourier.hpp>
#include <landaulab/grid.hpp>

namespace landaulab {

/// Radial samples R_{k,m}(r_i) of one level's eigenfunctions on a grid,
/// one column per angular index m = 0 .. m_max.
struct LevelBasis {
    int k = 0;
    int m_max = 0;
    Eigen::MatrixXd radial;

    int size() const { return m_max + 1; }
    int ell(int m) const { return m - k; }
};

LevelBasis make_level_basis(const QuadratureGrid& g, int k, int m_max);

/// L^2 mass of the (k, m) eigenfunction inside the disc of radius R.
double mass_in_disc(int k, int m, double R);

/// Smallest M such that every m >= M keeps less than tol of its mass
/// inside the disc of radius r_support; states beyond it cannot couple
/// through a potential supported there.
int angular_cutoff(int k, double r_support, double tol = 1e-12);

/// Spectral projection onto one Landau level, acting on grid fields via
/// angular FFT analysis and radial contraction against the level basis.
class LevelProjector {
  public:
    LevelProjector(const QuadratureGrid& g, int k, int m_max);

    int k() const { return b_.k; }
    int m_max() const { return b_.m_max; }
    const LevelBasis& basis() const { return b_; }
    const QuadratureGrid& grid() const { return *g_; }

    /// coef[m] = <phi_{k,m}, f>
    Eigen::VectorXcd analyze(const PlanarField& f) const;
    PlanarField synthesize(const Eigen::VectorXcd& coef) const;
    PlanarField apply(const PlanarField& f) const;

  private:
    const QuadratureGrid* g_;
    LevelBasis b_;
    AngularFFT fft_;
};

/// Dense matrix <phi_a, V phi_b> over the concatenated per-level bases.
Eigen::MatrixXcd assemble_projected_potential(const QuadratureGrid& g,
                                              const PlanarField& v,
                                              const std::vector<LevelBasis>& levels);

/// || P_k |V| P_k ||  for a general sampled |V| (dense eigensolve).
double level_potential_norm(const QuadratureGrid& g, const PlanarField& vabs,
                            const LevelBasis& b);

/// Radial fast path: |V| given by samples on the radial nodes.
double level_potential_norm(const QuadratureGrid& g, const Eigen::VectorXd& vabs_radial,
                            const LevelBasis& b);

}  // namespace landaulab
