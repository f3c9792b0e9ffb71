#pragma once

#include <vector>

#include <landaulab/exponents.hpp>
#include <landaulab/fields.hpp>
#include <landaulab/projector.hpp>

namespace landaulab {

struct PowerIterationOptions {
    int max_iters = 400;
    double rel_tol = 1e-6;   // stop when the gain over a window drops below
    int window = 8;
    int starts = 3;          // random starts in addition to structured ones
    unsigned seed = 77;
};

struct PowerIterationResult {
    double norm = 0.0;       // best lower bound reached
    int iters = 0;           // iterations spent on the winning start
    bool converged = false;
    std::vector<double> trace;  // winning start's monotone norm sequence
};

/// || P_k ||_{q' -> q} on the grid by dual-exponent power iteration.  Each
/// step maps f -> |Pf|^{q-2} Pf (normalized in L^q'), which never decreases
/// the Rayleigh quotient; the sequence is a certified lower bound chain.
PowerIterationResult projection_norm(const LevelProjector& proj, LebesgueExponent q,
                                     const PowerIterationOptions& opts = {});

/// One row of a norm-versus-level sweep.
struct NormSweepRow {
    int k = 0;
    double lambda = 0.0;
    double norm = 0.0;
    int iters = 0;
    bool converged = false;
};

std::vector<NormSweepRow> projection_norm_sweep(const std::vector<int>& ks,
                                                LebesgueExponent q,
                                                const PowerIterationOptions& opts = {});

}  // namespace landaulab
