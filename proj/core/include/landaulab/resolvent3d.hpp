#pragma once

#include <complex>
#include <vector>

#include <landaulab/layered.hpp>
#include <landaulab/potential.hpp>

namespace landaulab {

/// Green's function of (-d^2/dt^2 - mu) on the line,  i e^{i s |t|} / (2 s)
/// with s the principal square root of mu taken in the upper half-plane.
/// Requires mu off the cut [0, inf).
std::complex<double> halfline_resolvent_kernel(std::complex<double> mu, double t);

/// Free resolvent of the full operator on channel form: each channel is
/// convolved with the half-line kernel at mu = z - lambda_k by a direct
/// double sum over the axial grid (exact in the channel index, since the
/// level decomposition diagonalizes the planar part).  extend widens the
/// output grid by that many samples on each side so that difference
/// stencils can be evaluated on all of the input grid.
LayeredFunction layered_resolvent_apply(std::complex<double> z, const LayeredFunction& f,
                                        int extend = 0);

/// Discrete (H0 - z) f: (lambda_k - z) c - c'' with central second
/// differences; the output grid loses one sample on each side.
LayeredFunction layered_hamiltonian_apply(std::complex<double> z, const LayeredFunction& f);

struct KernelSumOptions {
    double tail_tol = 1e-8;   // absolute certified-tail target
    long k_cap = 30'000'000;  // hard truncation-search limit
};

struct KernelSumValue {
    double value = 0.0;  // truncated sum
    double tail = 0.0;   // certified bound on everything omitted
    long k_used = 0;     // last level summed
};

/// sum_k  lambda_k^{rho(q)} e^{-Im sqrt(z - lambda_k) |t|} / |z - lambda_k|^{1/2},
/// summed until the closed-form remainder bound drops below tail_tol (k_max
/// acts as a floor, so raising it beyond the certified point cannot move
/// the value by more than the reported tail).  The remainder bound uses
/// Im sqrt(w) >= sqrt(-Re w) for Re w < 0 and an exact integral of the
/// resulting envelope, so it is rigorous for z in the k0-th cluster strip.
KernelSumValue kernel_sum_lhs(double t, std::complex<double> z, LebesgueExponent q,
                              long k_max, int d = 3, const KernelSumOptions& opts = {});

/// |t|^{-1-2rho} + k0^{rho} (k0^{1/2} + delta(z)^{-1/2}) with delta the
/// distance from z to the level set.
double kernel_sum_rhs(double t, std::complex<double> z, LebesgueExponent q, int k0,
                      int d = 3);

struct KernelSumSample {
    double t = 0.0;
    std::complex<double> z;
    double q = 4.0;
    int k0 = 0;
    double delta = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

struct KernelSumSweep {
    std::vector<KernelSumSample> rows;
    double max_ratio = 0.0;
    int argmax = -1;
};

/// Cluster-strip points z = lambda_k0 + delta (0.8 + 0.6 i): the offset has
/// unit modulus scale, so dist(z, levels) is exactly delta for delta <= 1.
std::vector<KernelSumSample> make_kernel_sum_lattice(const std::vector<double>& qs,
                                                     const std::vector<int>& k0s,
                                                     const std::vector<double>& ts,
                                                     const std::vector<double>& deltas);

KernelSumSweep kernel_sum_check(std::vector<KernelSumSample> samples, long k_max = 0,
                                int d = 3, const KernelSumOptions& opts = {});

/// A separable perturbation v_perp(x_perp) v_d(x_d) packaged with the two
/// multipliers the resolvent identity needs, its mixed-space norm, and the
/// data for the smallness gate.
struct LayeredPotential {
    SeparableMultiplier full;      // multiply by V
    SeparableMultiplier sqrt_abs;  // multiply by |V|^{1/2}
    int sign = -1;                 // V^{1/2} = sign |V|^{1/2}
    double vq_norm = 0.0;          // ||V|| in the V_q mixed space
    double sup_abs = 0.0;          // sup |V|
};

/// Gaussian axial factor exp(-x^2 / (2 sigma^2)); the planar factor and
/// overall sign come from the potential spec.
LayeredPotential make_layered_potential(const QuadratureGrid& g, int k_top, int m_top,
                                        const PotentialSpec& v_perp, double axial_sigma,
                                        const AxialGrid& ax, const MixedNormSpec& vq);

struct LapScanRow {
    double lambda = 0.0;
    double eps = 0.0;
    double value = 0.0;  // |<R(lambda+i eps) f, g>| / (f_norm g_norm); NaN if refused
    double f_norm = 0.0;
    double g_norm = 0.0;
    bool gated = false;  // smallness gate passed (vacuously true for V = 0)
    double eta = 0.0;    // estimate of || |V|^{1/2} R_0 V^{1/2} ||
};

struct LapScanTable {
    std::vector<LapScanRow> rows;
    bool any_refused = false;
};

/// Bilinear limiting-absorption scan.  For V = 0 the pairing uses the free
/// resolvent; otherwise the perturbed pairing comes from the weighted
/// resolvent identity, whose Neumann series is run only when the smallness
/// gate || |V|^{1/2} R_0 V^{1/2} || < 1 is passed, either by the rigorous
/// bound sup|V| / dist(z, levels) or by a converged power-iteration
/// estimate with margin.  A failed gate refuses the perturbed value (NaN)
/// and records the obstruction norm in eta.
LapScanTable lap_bilinear_scan(const std::vector<double>& lambdas,
                               const std::vector<double>& eps_list,
                               const LayeredFunction& f, const LayeredFunction& g,
                               const MixedNormSpec& spec, const QuadratureGrid& planar,
                               const LayeredPotential* pot = nullptr);

}  // namespace landaulab
