#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace landaulab {

/// Hermitian operator given as a matvec callback.
using HermitianApply =
    std::function<void(const Eigen::VectorXcd& in, Eigen::VectorXcd& out)>;

struct LanczosOptions {
    int want = 10;            // eigenpairs to lock
    int steps = 60;           // Krylov steps per restart sweep
    int max_sweeps = 64;      // random restarts before giving up
    double tol = 1e-10;       // Ritz residual, relative to |theta|
    unsigned seed = 1234;
};

struct LanczosResult {
    std::vector<double> values;                // operator eigenvalues theta
    std::vector<Eigen::VectorXcd> vectors;     // matching unit eigenvectors
    int sweeps = 0;
    bool saturated = false;  // restarts stopped producing new pairs
};

/// Thick-restart-free deflated Lanczos with full reorthogonalization:
/// each sweep runs a fresh Krylov basis orthogonal to everything locked so
/// far, so degenerate eigenvalues are collected one copy per sweep. Stops
/// when `want` pairs are locked or two consecutive sweeps lock nothing.
LanczosResult deflated_lanczos(Eigen::Index dim, const HermitianApply& apply,
                               const LanczosOptions& opts);

}  // namespace landaulab
