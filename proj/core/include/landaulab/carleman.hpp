#pragma once

#include <complex>
#include <vector>

#include <landaulab/layered.hpp>

namespace landaulab {

/// Weighted estimates need dist(tau^2, 2N + n) >= 1/2, a margin from the
/// squared level frequencies omega_k = sqrt(2k + n).  The inverse apply and
/// the norm quotients enforce it; the pointwise multiplier only needs tau
/// off the frequencies themselves.
bool carleman_admissible(double tau, int n = 1);
void require_admissible(double tau, int n = 1);

double carleman_frequency(int k, int n = 1);  // omega_k = sqrt(2k + n)

/// Axial multiplier of the conjugated-operator inverse at level k: residue
/// evaluation of (1/2pi) int e^{i t eta} / ((eta + i tau)^2 + omega_k^2).
/// For |tau| < omega the poles straddle the axis and
///   m = e^{tau t - omega |t|} / (2 omega);
/// for |tau| > omega both poles sit in one half-plane and m is one-sided,
///   m = 0 for t > 0,   m = (e^{(tau+omega) t} - e^{(tau-omega) t}) / (2 omega) for t <= 0,
/// with tau < 0 reduced through m_{-tau}(t) = m_tau(-t).  The value is
/// real and satisfies |m| <= e^{-|tau - omega| |t|} / (2 omega).
std::complex<double> carleman_multiplier(double t, double tau, int k, int n = 1);

/// Direct quadrature of the eta-integral (oracle for the closed form).
/// The 1/(eta + i tau)^2 asymptote is removed and integrated by residues,
/// leaving an eta^{-4} remainder that a finite window resolves to tol.
std::complex<double> carleman_multiplier_quadrature(double t, double tau, int k, int n = 1,
                                                    double window = 1000.0, double tol = 1e-9);

struct MultiplierSumValue {
    double value = 0.0;  // truncated sum of (1+2k)^{-1/d} |m|
    double tail = 0.0;   // certified bound on the omitted levels
    double ratio = 0.0;  // (value + tail) / (1 + |t|^{2/d-1})
    long k_used = 0;
};

/// Level sum of the damped multiplier against its |t|-profile envelope;
/// k_max is a floor, the sum extends until the pointwise-bound tail drops
/// below tail_tol.
MultiplierSumValue multiplier_sum_check(double t, double tau, int d = 3, long k_max = 0,
                                        double tail_tol = 1e-10);

/// G_tau f: channelwise axial convolution against the multiplier.  Inverse
/// of the conjugated operator D^2 + 2 i tau D - tau^2 + H_{0,perp}; extend
/// widens the output grid for stencil checks.
LayeredFunction conjugated_inverse_apply(double tau, const LayeredFunction& f, int extend = 0);

/// Discrete conjugated operator -c'' + 2 tau c' + (lambda_k - tau^2) c by
/// central differences; the grid loses one sample per side.
LayeredFunction conjugated_operator_apply(double tau, const LayeredFunction& f);

struct CarlemanRatio {
    double tau = 0.0;
    double lhs = 0.0;  // || e^{tau x} u ||_{L^6},      factor e^{tau max I} removed
    double rhs = 0.0;  // || e^{tau x} H_0 u ||_{L^{6/5}}, same factor removed
    double ratio = 0.0;
    bool admissible = false;
};

/// Weighted-norm quotient in d = 3.  The weight enters as
/// e^{tau (x - max I)} <= 1 on both sides; the common factor e^{tau max I}
/// cancels in the quotient, which is therefore exact and overflow-free.
/// Inputs whose image under H_0 falls below 1e-12 are rejected.
CarlemanRatio carleman_ratio(const LayeredFunction& u, double tau,
                             const QuadratureGrid& planar);

/// Quotients over the admissible members of a tau grid; inadmissible
/// entries are kept as flagged rows without values.  The maximum over the
/// admissible rows is the empirical constant for this u.
std::vector<CarlemanRatio> carleman_sweep(const LayeredFunction& u,
                                          const std::vector<double>& taus,
                                          const QuadratureGrid& planar);

}  // namespace landaulab
