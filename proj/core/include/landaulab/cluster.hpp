#pragma once

#include <vector>

#include <landaulab/potential.hpp>
#include <landaulab/projector.hpp>

namespace landaulab {

struct ClusterOptions {
    int window = 2;              // levels k0 - w .. k0 + w in the basis
    double member_band = 1.0;    // |E - lambda_{k0}| <= band marks membership
    double support_tol = 1e-10;  // potential mass allowed outside the basis
    bool check_stability = true; // re-run with a doubled window
    double stability_tol = 0.01;
};

struct ClusterReport {
    int k0 = 0;
    double lambda = 0.0;
    int dim = 0;                   // Galerkin dimension actually used
    std::vector<double> members;   // eigenvalues within the band, ascending
    double shift_max = 0.0;        // max |E - lambda_{k0}| over members
    double delta_max = 0.0;        // max distance from members to {2k + n}
    bool band_edge = false;        // a member sits within 20% of the band edge
    bool stable = true;            // doubled window moved shift_max < tol
    double stability_change = 0.0;
};

/// Eigenvalues of the window-projected Hamiltonian around one level.  Radial
/// potentials decompose into independent angular-momentum lines; general
/// ones assemble the dense coupled block.
ClusterReport cluster_spectrum(const PotentialSpec& v, int k0,
                               const ClusterOptions& opts = {});

/// Radius beyond which the potential keeps less than tol of its L^r mass.
double potential_support_radius(const PotentialSpec& v, LebesgueExponent r, double tol);

}  // namespace landaulab
