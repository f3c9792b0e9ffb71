#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include <landaulab/exponents.hpp>
#include <landaulab/fields.hpp>
#include <landaulab/grid.hpp>

namespace landaulab {

/// Uniform axial grid x_j = x0 + j h, j = 0 .. n-1, quadrature weight h.
struct AxialGrid {
    double x0 = 0.0;
    double h = 0.0;
    int n = 0;

    double point(int j) const { return x0 + j * h; }
    double half_width() const { return 0.5 * (n - 1) * h; }
    bool same_as(const AxialGrid& o) const;
};

/// Symmetric grid with n samples covering [-half, half].  n is capped at
/// 4096: every convolution below is a direct double sum, so the cap keeps
/// all kernels exact (no circular aliasing) at desk-scale cost.
AxialGrid make_axial_grid(double half, int n);

/// Symmetric grid sized so the mass of |profile|^2 outside it is below
/// tail_tol of the total; the half-width doubles from half_start until the
/// captured mass stabilizes.  Sample count follows from the target step.
AxialGrid auto_axial_grid(const std::function<double(double)>& profile, double h_target,
                          double half_start = 4.0, double tail_tol = 1e-8);

/// One Landau channel: level k, angular index m (momentum m - k), with the
/// axial coefficient sampled on the shared grid.
struct Channel {
    int k = 0;
    int m = 0;
    Eigen::VectorXcd axial;
};

/// Function on R^2 x R decomposed as  f = sum_{k,m} c_{k,m}(x_d) phi_{k,m}.
/// Planar orthonormality makes L^2 quantities and level-diagonal operators
/// independent 1D computations per channel.  truncation_tail records the
/// worst relative L^2 mass dropped by any channel-window truncation applied
/// while producing the function (0 for functions built directly in channel
/// form).
struct LayeredFunction {
    AxialGrid grid;
    std::vector<Channel> channels;
    double truncation_tail = 0.0;

    double l2_norm() const;
    int find(int k, int m) const;  // channel index, or -1
    int max_level() const;
    int max_angular() const;
};

LayeredFunction single_channel(const AxialGrid& g, int k, int m,
                               const std::function<std::complex<double>(double)>& profile);

/// integral conj(a) b over R^2 x R; channels missing from either side
/// contribute nothing.  Grids must coincide.
std::complex<double> layered_inner(const LayeredFunction& a, const LayeredFunction& b);

/// a - b with channels matched by (k, m); grids must coincide.
LayeredFunction layered_sub(const LayeredFunction& a, const LayeredFunction& b);

/// Weighted axial L^p norm of a sampled profile (sup for p = infinity).
double axial_lp_norm(const AxialGrid& g, const Eigen::VectorXd& profile, LebesgueExponent p);

enum class MixedSpace { Xq, Vq };

/// Mixed axial-planar norm: an intersection of two axial Lebesgue norms
/// applied to the planar-norm profile of f.  The axial partner to L^1 is
/// 2/(1-2rho) for Xq and -1/(2rho) for Vq with rho = rho(d, q); both are
/// finite and exceed 1 exactly when q lies strictly between 2 and
/// 2d/(d-2), where -2rho lands in (0,1).
struct MixedNormSpec {
    MixedSpace space = MixedSpace::Xq;
    LebesgueExponent q = LebesgueExponent(4.0);
    int d = 3;

    double rho() const;
    LebesgueExponent axial_exponent() const;
    /// q' for Xq; the potential-side r with q = 2r' for Vq.
    LebesgueExponent planar_exponent() const;
};

/// g(x_j) = || f(., x_j) ||_{L^p(R^2)} by planar quadrature, slice by slice.
Eigen::VectorXd planar_profile(const LayeredFunction& f, LebesgueExponent p,
                               const QuadratureGrid& planar);

/// max of the two axial norms of the planar profile of f.
double mixed_norm(const LayeredFunction& f, const MixedNormSpec& spec,
                  const QuadratureGrid& planar);

/// Same reduction when the planar profile is already in hand (separable
/// functions factor: profile = planar-norm constant times |axial part|).
double mixed_norm_profile(const AxialGrid& g, const Eigen::VectorXd& profile,
                          const MixedNormSpec& spec);

/// Pointwise multiplication by a separable potential v_perp(x_perp) v_d(x_d)
/// in channel form.  The planar factor is compressed once into the matrix
/// <phi_a, v_perp phi_b> over a fixed channel window (levels 0..k_top,
/// angular 0..m_top); applying the multiplier is then a dense matrix-vector
/// product per axial sample, scaled by v_d.  The relative planar L^2 mass
/// the window drops, maximized over basis channels, is reported as
/// window_leak and folded into the output's truncation_tail.
class SeparableMultiplier {
  public:
    SeparableMultiplier(const QuadratureGrid& g, int k_top, int m_top,
                        const PlanarField& v_perp, const AxialGrid& ax,
                        const Eigen::VectorXd& v_axial);

    LayeredFunction apply(const LayeredFunction& u) const;

    double window_leak() const { return leak_; }
    double sup_abs() const { return sup_; }
    int k_top() const { return k_top_; }
    int m_top() const { return m_top_; }
    const AxialGrid& axial_grid() const { return ax_; }

  private:
    int k_top_, m_top_;
    AxialGrid ax_;
    Eigen::VectorXd vax_;
    Eigen::MatrixXcd mat_;
    double leak_ = 0.0;
    double sup_ = 0.0;
};

}  // namespace landaulab
