#include <landaulab/levels.hpp>

#include <cmath>

namespace landaulab {

double landau_eigenvalue(int k, int n) {
    if (k < 0) throw DomainError("level index k must be >= 0");
    if (n < 1) throw DomainError("half-dimension n must be >= 1");
    return 2.0 * k + n;
}

double landau_eigenvalue(LevelIndex idx) { return landau_eigenvalue(idx.k, idx.n); }

double spectrum_distance(double e, int n) {
    if (n < 1) throw DomainError("half-dimension n must be >= 1");
    if (e <= n) return n - e;
    double k = std::round(0.5 * (e - n));
    return std::abs(e - (2.0 * k + n));
}

}  // namespace landaulab
