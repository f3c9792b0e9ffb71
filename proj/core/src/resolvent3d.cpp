#include <landaulab/resolvent3d.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include <landaulab/errors.hpp>
#include <landaulab/levels.hpp>

namespace landaulab {

namespace {

std::complex<double> upper_sqrt(std::complex<double> mu) {
    std::complex<double> s = std::sqrt(mu);
    if (s.imag() < 0.0) s = -s;
    if (s.imag() == 0.0)
        throw DomainError("square root requested on the branch cut [0, inf)");
    return s;
}

int planar_half_dim(int d) {
    if (d < 3 || d % 2 == 0) throw DomainError("layered operators need odd dimension d >= 3");
    return (d - 1) / 2;
}

// Envelope bound on everything past level K: for k > K the real part of
// z - lambda_k is negative, Im sqrt(w) >= sqrt(-Re w), and the level step
// is 2, so the sum is dominated by its first term plus half the integral
// of g -> e^{-sqrt(g) t} / sqrt(g), which integrates in closed form.
double kernel_sum_tail(double t, double re_z, double rho, long K, int n) {
    const double lam = 2.0 * static_cast<double>(K + 1) + n;
    const double g0 = lam - re_z;
    if (g0 <= 0.0) return std::numeric_limits<double>::infinity();
    const double rg = std::sqrt(g0);
    return std::pow(lam, rho) * std::exp(-rg * t) * (1.0 / rg + 1.0 / t);
}

LayeredFunction scale_channels(const LayeredFunction& f, double a) {
    LayeredFunction out = f;
    for (auto& c : out.channels) c.axial *= a;
    return out;
}

}  // namespace

std::complex<double> halfline_resolvent_kernel(std::complex<double> mu, double t) {
    const std::complex<double> s = upper_sqrt(mu);
    const std::complex<double> i(0.0, 1.0);
    return i * std::exp(i * s * std::abs(t)) / (2.0 * s);
}

LayeredFunction layered_resolvent_apply(std::complex<double> z, const LayeredFunction& f,
                                        int extend) {
    if (z.imag() == 0.0 || std::abs(z.imag()) >= 1.0)
        throw DomainError("resolvent needs 0 < |Im z| < 1");
    if (extend < 0) throw DomainError("grid extension must be nonnegative");

    const int n = f.grid.n;
    const double h = f.grid.h;
    LayeredFunction out;
    out.grid = f.grid;
    out.grid.x0 -= extend * h;
    out.grid.n += 2 * extend;
    out.truncation_tail = f.truncation_tail;
    out.channels.reserve(f.channels.size());

    // kr[p] holds the kernel at offset (n - 1 + extend - p) * h, so each
    // output sample is one contiguous product against the input channel.
    const int span = n - 1 + extend;
    Eigen::VectorXcd kr(2 * span + 1);
    for (const auto& ch : f.channels) {
        const std::complex<double> mu = z - landau_eigenvalue(ch.k, 1);
        for (int p = 0; p <= 2 * span; ++p)
            kr[p] = halfline_resolvent_kernel(mu, (span - p) * h);

        Channel oc;
        oc.k = ch.k;
        oc.m = ch.m;
        oc.axial.resize(out.grid.n);
        for (int i = 0; i < out.grid.n; ++i)
            oc.axial[i] = h * kr.segment(span + extend - i, n).cwiseProduct(ch.axial).sum();
        out.channels.push_back(std::move(oc));
    }
    return out;
}

LayeredFunction layered_hamiltonian_apply(std::complex<double> z, const LayeredFunction& f) {
    if (f.grid.n < 3) throw DomainError("difference stencil needs at least 3 samples");
    const double h2 = f.grid.h * f.grid.h;
    LayeredFunction out;
    out.grid = f.grid;
    out.grid.x0 += f.grid.h;
    out.grid.n -= 2;
    out.truncation_tail = f.truncation_tail;
    for (const auto& ch : f.channels) {
        Channel oc;
        oc.k = ch.k;
        oc.m = ch.m;
        oc.axial.resize(out.grid.n);
        const std::complex<double> diag = landau_eigenvalue(ch.k, 1) - z;
        for (int j = 0; j < out.grid.n; ++j)
            oc.axial[j] = diag * ch.axial[j + 1] -
                          (ch.axial[j + 2] - 2.0 * ch.axial[j + 1] + ch.axial[j]) / h2;
        out.channels.push_back(std::move(oc));
    }
    return out;
}

KernelSumValue kernel_sum_lhs(double t, std::complex<double> z, LebesgueExponent q,
                              long k_max, int d, const KernelSumOptions& opts) {
    if (!(t > 0.0)) throw DomainError("kernel sum needs t > 0");
    if (z.imag() == 0.0) throw DomainError("kernel sum needs Im z != 0");
    const int n = planar_half_dim(d);
    const double rho = rho_exponent(d, q);
    const long k0 = std::max(0L, std::lround((z.real() - n) / 2.0));

    auto term = [&](long k) {
        const double lam = 2.0 * static_cast<double>(k) + n;
        const std::complex<double> w = z - lam;
        const std::complex<double> s = upper_sqrt(w);
        return std::pow(lam, rho) * std::exp(-s.imag() * t) / std::sqrt(std::abs(w));
    };

    KernelSumValue out;
    long K = std::max({k_max, 2 * k0 + 16, 8L});
    for (long k = 0; k <= K; ++k) out.value += term(k);
    while (true) {
        out.tail = kernel_sum_tail(t, z.real(), rho, K, n);
        if (out.tail <= opts.tail_tol) break;
        if (K >= opts.k_cap)
            throw CertificateError("kernel sum tail not certified below tolerance at the level cap");
        const long stop = std::min(opts.k_cap, K + 512);
        for (long k = K + 1; k <= stop; ++k) out.value += term(k);
        K = stop;
    }
    out.k_used = K;
    return out;
}

double kernel_sum_rhs(double t, std::complex<double> z, LebesgueExponent q, int k0, int d) {
    if (!(t > 0.0)) throw DomainError("kernel sum needs t > 0");
    if (k0 < 1) throw DomainError("cluster index must be at least 1");
    const int n = planar_half_dim(d);
    const double rho = rho_exponent(d, q);
    const double delta = std::hypot(spectrum_distance(z.real(), n), z.imag());
    return std::pow(t, -1.0 - 2.0 * rho) +
           std::pow(static_cast<double>(k0), rho) * (std::sqrt(static_cast<double>(k0)) + 1.0 / std::sqrt(delta));
}

std::vector<KernelSumSample> make_kernel_sum_lattice(const std::vector<double>& qs,
                                                     const std::vector<int>& k0s,
                                                     const std::vector<double>& ts,
                                                     const std::vector<double>& deltas) {
    std::vector<KernelSumSample> rows;
    for (double q : qs)
        for (int k0 : k0s)
            for (double delta : deltas)
                for (double t : ts) {
                    KernelSumSample s;
                    s.q = q;
                    s.k0 = k0;
                    s.delta = delta;
                    s.t = t;
                    s.z = landau_eigenvalue(k0, 1) + delta * std::complex<double>(0.8, 0.6);
                    rows.push_back(s);
                }
    return rows;
}

KernelSumSweep kernel_sum_check(std::vector<KernelSumSample> samples, long k_max, int d,
                                const KernelSumOptions& opts) {
    KernelSumSweep sweep;
    sweep.rows = std::move(samples);
    for (size_t i = 0; i < sweep.rows.size(); ++i) {
        auto& row = sweep.rows[i];
        const KernelSumValue lhs =
            kernel_sum_lhs(row.t, row.z, LebesgueExponent(row.q), k_max, d, opts);
        row.lhs = lhs.value + lhs.tail;
        row.rhs = kernel_sum_rhs(row.t, row.z, LebesgueExponent(row.q), row.k0, d);
        row.ratio = row.lhs / row.rhs;
        if (row.ratio > sweep.max_ratio) {
            sweep.max_ratio = row.ratio;
            sweep.argmax = static_cast<int>(i);
        }
    }
    return sweep;
}

LayeredPotential make_layered_potential(const QuadratureGrid& g, int k_top, int m_top,
                                        const PotentialSpec& v_perp, double axial_sigma,
                                        const AxialGrid& ax, const MixedNormSpec& vq) {
    if (!(axial_sigma > 0.0)) throw DomainError("axial width must be positive");
    if (vq.space != MixedSpace::Vq) throw DomainError("potential norms live in the V_q space");

    const LebesgueExponent r = vq.planar_exponent();
    const PlanarField vp = sample_potential(g, v_perp, r);
    const PlanarField wp = vp.cwiseAbs().cwiseSqrt().cast<std::complex<double>>();

    Eigen::VectorXd vax(ax.n), wax(ax.n);
    for (int j = 0; j < ax.n; ++j) {
        const double x = ax.point(j);
        vax[j] = std::exp(-x * x / (2.0 * axial_sigma * axial_sigma));
        wax[j] = std::sqrt(vax[j]);
    }

    LayeredPotential pot{SeparableMultiplier(g, k_top, m_top, vp, ax, vax),
                         SeparableMultiplier(g, k_top, m_top, wp, ax, wax), v_perp.sign, 0.0,
                         0.0};
    pot.vq_norm = mixed_norm_profile(ax, v_perp.lp_norm(r) * vax, vq);
    pot.sup_abs = std::max(v_perp.amplitude, pot.full.sup_abs());
    return pot;
}

LapScanTable lap_bilinear_scan(const std::vector<double>& lambdas,
                               const std::vector<double>& eps_list,
                               const LayeredFunction& f, const LayeredFunction& g,
                               const MixedNormSpec& spec, const QuadratureGrid& planar,
                               const LayeredPotential* pot) {
    for (double l : lambdas)
        if (spectrum_distance(l, 1) < 0.1 - 1e-12)
            throw DomainError("scan energies must keep distance 0.1 from the levels");
    for (double e : eps_list)
        if (e == 0.0 || std::abs(e) >= 1.0)
            throw DomainError("scan needs 0 < |eps| < 1");
    if (!f.grid.same_as(g.grid)) throw DomainError("test pair must share one axial grid");

    const double fn = mixed_norm(f, spec, planar);
    const double gn = mixed_norm(g, spec, planar);
    if (!(fn > 0.0) || !(gn > 0.0)) throw DomainError("test pair must be nonzero");

    const int sign = pot ? pot->sign : 1;
    auto weighted = [&](std::complex<double> zz, const LayeredFunction& x) {
        return pot->sqrt_abs.apply(layered_resolvent_apply(zz, pot->sqrt_abs.apply(x)));
    };

    LapScanTable table;
    for (double lambda : lambdas)
        for (double eps : eps_list) {
            const std::complex<double> z(lambda, eps);
            LapScanRow row;
            row.lambda = lambda;
            row.eps = eps;
            row.f_norm = fn;
            row.g_norm = gn;

            const LayeredFunction u0 = layered_resolvent_apply(z, f);
            if (!pot) {
                row.value = std::abs(layered_inner(g, u0)) / (fn * gn);
                row.gated = true;
                table.rows.push_back(row);
                continue;
            }

            // Smallness gate for the weighted free resolvent: rigorous
            // multiplication bound first, then a converged power-iteration
            // estimate of the norm (a lower-bound chain, so crossing 1 is a
            // certified refusal; passing keeps a safety margin).
            const double delta = std::hypot(spectrum_distance(lambda, 1), eps);
            const double rigorous = pot->sup_abs / delta;
            double eta = rigorous;
            if (rigorous >= 1.0) {
                LayeredFunction x = f;
                for (auto& c : x.channels) c.axial.setOnes();
                x = pot->sqrt_abs.apply(x);
                double ray = 0.0;
                for (int it = 0; it < 48; ++it) {
                    const double nx = x.l2_norm();
                    if (!(nx > 0.0)) break;
                    x = scale_channels(x, 1.0 / nx);
                    const LayeredFunction y = scale_channels(weighted(z, x), sign);
                    const double r2 = y.l2_norm() * y.l2_norm();
                    x = scale_channels(weighted(std::conj(z), y), sign);
                    if (it >= 5 && std::abs(r2 - ray) <= 3e-4 * std::max(r2, 1e-300)) {
                        ray = r2;
                        break;
                    }
                    ray = r2;
                }
                eta = std::sqrt(ray);
            }
            row.eta = eta;
            if (!(rigorous < 1.0) && !(eta < 0.995)) {
                row.value = std::numeric_limits<double>::quiet_NaN();
                row.gated = false;
                table.rows.push_back(row);
                table.any_refused = true;
                continue;
            }

            // (1 + |V|^{1/2} R_0 V^{1/2}) y = |V|^{1/2} R_0 f by Neumann
            // iteration, then R f = R_0 f - R_0 V^{1/2} y.
            const LayeredFunction a = pot->sqrt_abs.apply(u0);
            LayeredFunction y = a;
            const double ref = a.l2_norm();
            bool settled = false;
            for (int it = 0; it < 2000 && !settled; ++it) {
                const LayeredFunction ty = scale_channels(weighted(z, y), sign);
                LayeredFunction ynew = layered_sub(a, ty);
                settled = layered_sub(ynew, y).l2_norm() <= 1e-11 * std::max(ref, 1e-300);
                y = std::move(ynew);
            }
            if (!settled) throw ConvergenceError("weighted resolvent series did not settle");
            const LayeredFunction u =
                layered_sub(u0, layered_resolvent_apply(z, scale_channels(pot->sqrt_abs.apply(y), sign)));
            row.value = std::abs(layered_inner(g, u)) / (fn * gn);
            row.gated = true;
            table.rows.push_back(row);
        }
    return table;
}

}  // namespace landaulab
