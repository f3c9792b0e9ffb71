#include <landaulab/eigensolvers.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <landaulab/errors.hpp>

namespace landaulab {

namespace {

void orthogonalize(Eigen::VectorXcd& v, const std::vector<Eigen::VectorXcd>& basis,
                   int passes = 2) {
    for (int p = 0; p < passes; ++p)
        for (const auto& u : basis) v -= u.dot(v) * u;
}

Eigen::VectorXcd random_start(Eigen::Index dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v[i] = {gauss(rng), gauss(rng)};
    return v;
}

}  // namespace

LanczosResult deflated_lanczos(Eigen::Index dim, const HermitianApply& apply,
                               const LanczosOptions& opts) {
    if (dim <= 0) throw DomainError("operator dimension must be positive");
    const int m = static_cast<int>(std::min<Eigen::Index>(opts.steps, dim));
    std::mt19937_64 rng(opts.seed);

    LanczosResult res;
    std::vector<Eigen::VectorXcd>& locked = res.vectors;
    int barren = 0;

    while (static_cast<int>(locked.size()) < opts.want && res.sweeps < opts.max_sweeps) {
        ++res.sweeps;
        std::vector<Eigen::VectorXcd> basis;
        basis.reserve(static_cast<size_t>(m));
        Eigen::VectorXd alpha = Eigen::VectorXd::Zero(m);
        Eigen::VectorXd beta = Eigen::VectorXd::Zero(m);

        Eigen::VectorXcd v = random_start(dim, rng);
        orthogonalize(v, locked);
        double nv = v.norm();
        if (nv < 1e-12) break;  // locked space exhausted the whole space
        v /= nv;
        basis.push_back(v);

        Eigen::VectorXcd w(dim);
        int steps = 0;
        for (int j = 0; j < m; ++j) {
            apply(basis.back(), w);
            alpha[j] = basis.back().dot(w).real();
            w -= alpha[j] * basis.back();
            if (j > 0) w -= beta[j - 1] * basis[static_cast<size_t>(j) - 1];
            orthogonalize(w, locked, 1);
            orthogonalize(w, basis, 2);
            steps = j + 1;
            const double nb = w.norm();
            beta[j] = nb;
            if (nb < 1e-13) break;
            if (j + 1 < m) basis.push_back(w / nb);
        }

        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(steps, steps);
        for (int j = 0; j < steps; ++j) {
            t(j, j) = alpha[j];
            if (j + 1 < steps) t(j, j + 1) = t(j + 1, j) = beta[j];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
        if (es.info() != Eigen::Success) throw ConvergenceError("tridiagonal eigensolve failed");

        std::vector<int> order(static_cast<size_t>(steps));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::abs(es.eigenvalues()[a]) > std::abs(es.eigenvalues()[b]);
        });

        const double last_beta = beta[steps - 1];
        int added = 0;
        for (int idx : order) {
            if (static_cast<int>(locked.size()) >= opts.want) break;
            const double theta = es.eigenvalues()[idx];
            const double resid = std::abs(last_beta * es.eigenvectors()(steps - 1, idx));
            if (resid > opts.tol * std::max(1.0, std::abs(theta))) continue;
            Eigen::VectorXcd u = Eigen::VectorXcd::Zero(dim);
            for (int j = 0; j < steps; ++j) u += es.eigenvectors()(j, idx) * basis[static_cast<size_t>(j)];
            orthogonalize(u, locked, 1);
            const double nu = u.norm();
            if (nu < 0.5) continue;  // rediscovered a locked direction
            u /= nu;
            locked.push_back(std::move(u));
            res.values.push_back(theta);
            ++added;
        }
        barren = added == 0 ? barren + 1 : 0;
        if (barren >= 2) {
            res.saturated = true;
            break;
        }
    }
    return res;
}

}  // namespace landaulab
