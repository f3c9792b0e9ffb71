#pragma once

#include <landaulab/errors.hpp>

namespace landaulab {

// Landau level: index k >= 0 at planar half-dimension n = d/2 >= 1.
struct LevelIndex {
    int k = 0;
    int n = 1;
};

// lambda_k = 2k + n; for n = 1 these are the odd integers.
double landau_eigenvalue(LevelIndex idx);
double landau_eigenvalue(int k, int n = 1);

// Distance from a real value to the unperturbed spectrum {2k + n : k >= 0}.
double spectrum_distance(double e, int n = 1);

// Per-level basis truncation: angular indices m = 0..m_max retained, the
// state (k, m) carrying angular momentum m - k.
struct BasisTruncation {
    int k_max = 0;
    int m_max = 0;
    double tail_tol = 1e-8;
};

}  // namespace landaulab
