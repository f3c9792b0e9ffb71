#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace landaulab::oracle {

/// Five-point finite-difference model of the planar magnetic Hamiltonian
/// (-i d_x + y/2)^2 + (-i d_y - x/2)^2 + V on a Dirichlet box [-L, L]^2.
/// The first-order gauge terms are centered, so the matrix is exactly
/// Hermitian for every h.
struct FDProblem {
    double half_width = 5.0;
    double h = 0.1;
    std::function<double(double, double)> potential;  // optional, signed

    /// Interior eigenvalues near each shift (shift-invert); when empty,
    /// the lowest `count` eigenvalues are computed instead.
    std::vector<double> shifts;
    int per_shift = 8;
    int count = 12;
    unsigned seed = 2024;
};

struct FDEigenpair {
    double value = 0.0;
    double residual = 0.0;       // ||H u - value u||_2 (discrete l2, unit u)
    double boundary_mass = 0.0;  // |u|^2 within 2h of the wall
};

struct FDSpectrum {
    std::vector<FDEigenpair> pairs;  // ascending by value
    int grid_side = 0;               // interior points per side
    bool boundary_leak = false;      // any boundary_mass above 1e-4
};

Eigen::SparseMatrix<std::complex<double>> fd_hamiltonian(const FDProblem& p);

FDSpectrum fd_spectrum(const FDProblem& p);

/// Truncated eigenfunction sum  sum_{m<=M} phi_{k,m}(x) conj(phi_{k,m}(y)),
/// converging to the closed-form projection kernel as M grows.
std::complex<double> kernel_by_sum(int k, const Eigen::Vector2d& x,
                                   const Eigen::Vector2d& y, int M = 200);

}  // namespace landaulab::oracle
