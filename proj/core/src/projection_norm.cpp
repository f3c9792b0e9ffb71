#include <landaulab/projection_norm.hpp>

#include <cmath>
#include <random>

#include <landaulab/errors.hpp>
#include <landaulab/levels.hpp>

namespace landaulab {

namespace {

// pointwise dual map |u|^{q-2} u; quadrature weights cancel out of the
// discrete duality, so the map is weight-free
PlanarField dual_map(const PlanarField& u, double q) {
    PlanarField v(u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        const double a = std::abs(u[i]);
        v[i] = a > 0.0 ? std::pow(a, q - 2.0) * u[i] : 0.0;
    }
    return v;
}

PowerIterationResult run_from(const LevelProjector& proj, double q, double qp,
                              PlanarField f, const PowerIterationOptions& opts) {
    const QuadratureGrid& g = proj.grid();
    PowerIterationResult out;
    const double nf = lp_norm(g, f, qp);
    if (!(nf > 0.0)) return out;
    f /= nf;
    for (int it = 0; it < opts.max_iters; ++it) {
        PlanarField u = proj.apply(f);
        const double s = lp_norm(g, u, q);
        out.iters = it + 1;
        if (!(s > 0.0)) break;
        out.trace.push_back(s);
        out.norm = s;
        const int n = static_cast<int>(out.trace.size());
        if (n > opts.window) {
            const double past = out.trace[static_cast<size_t>(n - 1 - opts.window)];
            if (s / past - 1.0 < opts.rel_tol) {
                out.converged = true;
                break;
            }
        }
        f = dual_map(u, q);
        f /= lp_norm(g, f, qp);
    }
    return out;
}

}  // namespace

PowerIterationResult projection_norm(const LevelProjector& proj, LebesgueExponent q,
                                     const PowerIterationOptions& opts) {
    if (q.is_infinite()) throw DomainError("power iteration needs a finite norm exponent");
    const double qv = q.value();
    if (qv < 2.0) throw DomainError("norm exponent must be at least 2");
    const double qp = q.conjugate().value();
    const QuadratureGrid& g = proj.grid();

    std::vector<PlanarField> starts;
    // central peak of the level (the zero-angular-momentum profile)
    starts.push_back(sample_radial_field(
        g, [&](double r) { return landau_radial(proj.k(), proj.k(), r); }));
    // annulus at the classical radius
    const double rc = std::sqrt(2.0 * landau_eigenvalue(proj.k()));
    starts.push_back(sample_radial_field(
        g, [&](double r) { return std::exp(-0.5 * (r - rc) * (r - rc)); }));
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int s = 0; s < opts.starts; ++s) {
        PlanarField f(g.n_points());
        for (Eigen::Index i = 0; i < f.size(); ++i) f[i] = {gauss(rng), gauss(rng)};
        starts.push_back(std::move(f));
    }

    PowerIterationResult best;
    for (auto& f0 : starts) {
        PowerIterationResult r = run_from(proj, qv, qp, std::move(f0), opts);
        if (r.norm > best.norm) best = std::move(r);
    }
    return best;
}

std::vector<NormSweepRow> projection_norm_sweep(const std::vector<int>& ks,
                                                LebesgueExponent q,
                                                const PowerIterationOptions& opts) {
    const int qi = static_cast<int>(std::ceil(q.value()));
    std::vector<NormSweepRow> rows;
    rows.reserve(ks.size());
    for (int k : ks) {
        const int m_max = 2 * k + 40;
        const int n_ang = next_pow2(std::max(64, qi * std::max(k, m_max - k) + 32));
        QuadratureGrid g = build_grid_for_level(k, m_max, 0.0, n_ang);
        LevelProjector proj(g, k, m_max);
        PowerIterationResult r = projection_norm(proj, q, opts);
        rows.push_back({k, landau_eigenvalue(k), r.norm, r.iters, r.converged});
    }
    return rows;
}

}  // namespace landaulab
