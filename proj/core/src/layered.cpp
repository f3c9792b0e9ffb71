#include <landaulab/layered.hpp>

#include <algorithm>
#include <cmath>

#include <landaulab/errors.hpp>
#include <landaulab/projector.hpp>

namespace landaulab {

namespace {

constexpr double two_pi = 6.283185307179586476925286766559005768;

double window_mass(const std::function<double(double)>& profile, double half) {
    const int n = 4096;
    const double h = 2.0 * half / n;
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        const double v = profile(-half + (j + 0.5) * h);
        acc += v * v;
    }
    return acc * h;
}

}  // namespace

bool AxialGrid::same_as(const AxialGrid& o) const {
    return n == o.n && std::abs(x0 - o.x0) <= 1e-12 * std::max(1.0, std::abs(x0)) &&
           std::abs(h - o.h) <= 1e-12 * h;
}

AxialGrid make_axial_grid(double half, int n) {
    if (!(half > 0.0)) throw DomainError("axial half-width must be positive");
    if (n < 2 || n > 4096) throw DomainError("axial sample count must lie in [2, 4096]");
    AxialGrid g;
    g.x0 = -half;
    g.n = n;
    g.h = 2.0 * half / (n - 1);
    return g;
}

AxialGrid auto_axial_grid(const std::function<double(double)>& profile, double h_target,
                          double half_start, double tail_tol) {
    if (!(h_target > 0.0)) throw DomainError("axial step must be positive");
    double half = std::max(half_start, 4.0 * h_target);
    double mass = window_mass(profile, half);
    for (int it = 0; it < 40; ++it) {
        const double wider = window_mass(profile, 2.0 * half);
        if (wider > 0.0 && wider - mass <= tail_tol * wider) {
            const int n = std::min(4096, static_cast<int>(std::ceil(2.0 * half / h_target)) + 1);
            return make_axial_grid(half, std::max(n, 16));
        }
        half *= 2.0;
        mass = wider;
    }
    throw ConvergenceError("axial profile mass did not stabilize under widening");
}

double LayeredFunction::l2_norm() const {
    double acc = 0.0;
    for (const auto& c : channels) acc += c.axial.squaredNorm();
    return std::sqrt(grid.h * acc);
}

int LayeredFunction::find(int k, int m) const {
    for (size_t i = 0; i < channels.size(); ++i)
        if (channels[i].k == k && channels[i].m == m) return static_cast<int>(i);
    return -1;
}

int LayeredFunction::max_level() const {
    int k = 0;
    for (const auto& c : channels) k = std::max(k, c.k);
    return k;
}

int LayeredFunction::max_angular() const {
    int m = 0;
    for (const auto& c : channels) m = std::max(m, c.m);
    return m;
}

LayeredFunction single_channel(const AxialGrid& g, int k, int m,
                               const std::function<std::complex<double>(double)>& profile) {
    if (k < 0 || m < 0) throw DomainError("channel indices must be nonnegative");
    LayeredFunction f;
    f.grid = g;
    Channel c;
    c.k = k;
    c.m = m;
    c.axial.resize(g.n);
    for (int j = 0; j < g.n; ++j) c.axial[j] = profile(g.point(j));
    f.channels.push_back(std::move(c));
    return f;
}

std::complex<double> layered_inner(const LayeredFunction& a, const LayeredFunction& b) {
    if (!a.grid.same_as(b.grid)) throw DomainError("layered inner product needs one shared grid");
    std::complex<double> acc = 0.0;
    for (const auto& ca : a.channels) {
        const int j = b.find(ca.k, ca.m);
        if (j >= 0) acc += ca.axial.dot(b.channels[static_cast<size_t>(j)].axial);
    }
    return a.grid.h * acc;
}

LayeredFunction layered_sub(const LayeredFunction& a, const LayeredFunction& b) {
    if (!a.grid.same_as(b.grid)) throw DomainError("layered difference needs one shared grid");
    LayeredFunction out;
    out.grid = a.grid;
    out.truncation_tail = std::max(a.truncation_tail, b.truncation_tail);
    out.channels = a.channels;
    for (const auto& cb : b.channels) {
        const int j = out.find(cb.k, cb.m);
        if (j >= 0) {
            out.channels[static_cast<size_t>(j)].axial -= cb.axial;
        } else {
            Channel c = cb;
            c.axial = -cb.axial;
            out.channels.push_back(std::move(c));
        }
    }
    return out;
}

double axial_lp_norm(const AxialGrid& g, const Eigen::VectorXd& profile, LebesgueExponent p) {
    if (profile.size() != g.n) throw DomainError("profile length does not match axial grid");
    if (p.is_infinite()) return profile.cwiseAbs().maxCoeff();
    const double pv = p.value();
    if (pv == 1.0) return g.h * profile.cwiseAbs().sum();
    if (pv == 2.0) return std::sqrt(g.h) * profile.norm();
    return std::pow(g.h * profile.cwiseAbs().array().pow(pv).sum(), 1.0 / pv);
}

double MixedNormSpec::rho() const {
    const double edge = 2.0 * d / (d - 2.0);
    if (q.is_infinite() || !(q.value() > 2.0) || !(q.value() < edge))
        throw DomainError("mixed norms need q strictly between 2 and 2d/(d-2)");
    return rho_exponent(d, q);
}

LebesgueExponent MixedNormSpec::axial_exponent() const {
    const double r = rho();
    return space == MixedSpace::Xq ? LebesgueExponent(2.0 / (1.0 - 2.0 * r))
                                   : LebesgueExponent(-1.0 / (2.0 * r));
}

LebesgueExponent MixedNormSpec::planar_exponent() const {
    rho();  // validates the range of q
    if (space == MixedSpace::Xq) return q.conjugate();
    return LebesgueExponent(q.value() / 2.0).conjugate();
}

Eigen::VectorXd planar_profile(const LayeredFunction& f, LebesgueExponent p,
                               const QuadratureGrid& planar) {
    std::vector<int> m_top;
    for (const auto& c : f.channels) {
        if (c.k >= static_cast<int>(m_top.size())) m_top.resize(static_cast<size_t>(c.k) + 1, -1);
        m_top[static_cast<size_t>(c.k)] = std::max(m_top[static_cast<size_t>(c.k)], c.m);
    }
    std::vector<LevelProjector> projs;
    std::vector<int> proj_k;
    for (size_t k = 0; k < m_top.size(); ++k)
        if (m_top[k] >= 0) {
            projs.emplace_back(planar, static_cast<int>(k), m_top[k]);
            proj_k.push_back(static_cast<int>(k));
        }

    Eigen::VectorXd out(f.grid.n);
    PlanarField slice(planar.n_points());
    for (int j = 0; j < f.grid.n; ++j) {
        slice.setZero();
        for (size_t ip = 0; ip < projs.size(); ++ip) {
            Eigen::VectorXcd coef = Eigen::VectorXcd::Zero(m_top[static_cast<size_t>(proj_k[ip])] + 1);
            for (const auto& c : f.channels)
                if (c.k == proj_k[ip]) coef[c.m] = c.axial[j];
            slice += projs[ip].synthesize(coef);
        }
        out[j] = lp_norm(planar, slice, p);
    }
    return out;
}

double mixed_norm(const LayeredFunction& f, const MixedNormSpec& spec,
                  const QuadratureGrid& planar) {
    const Eigen::VectorXd profile = planar_profile(f, spec.planar_exponent(), planar);
    return mixed_norm_profile(f.grid, profile, spec);
}

double mixed_norm_profile(const AxialGrid& g, const Eigen::VectorXd& profile,
                          const MixedNormSpec& spec) {
    return std::max(axial_lp_norm(g, profile, spec.axial_exponent()),
                    axial_lp_norm(g, profile, LebesgueExponent(1.0)));
}

SeparableMultiplier::SeparableMultiplier(const QuadratureGrid& g, int k_top, int m_top,
                                         const PlanarField& v_perp, const AxialGrid& ax,
                                         const Eigen::VectorXd& v_axial)
    : k_top_(k_top), m_top_(m_top), ax_(ax), vax_(v_axial) {
    if (k_top < 0 || m_top < 0) throw DomainError("channel window indices must be nonnegative");
    if (v_perp.size() != g.n_points()) throw GridError("planar factor does not match grid");
    if (v_axial.size() != ax.n) throw DomainError("axial factor does not match axial grid");
    g.require_calibrated(k_top, m_top);

    std::vector<LevelBasis> levels;
    levels.reserve(static_cast<size_t>(k_top) + 1);
    for (int k = 0; k <= k_top; ++k) levels.push_back(make_level_basis(g, k, m_top));
    mat_ = assemble_projected_potential(g, v_perp, levels);

    // Angular-averaged |v_perp|^2 per radius, for the per-channel mass of
    // v_perp phi that the window projection keeps.
    const Eigen::Index nr = g.n_radial();
    const int nt = g.n_angular;
    Eigen::VectorXd vsq(nr);
    for (Eigen::Index ir = 0; ir < nr; ++ir) {
        double acc = 0.0;
        for (int it = 0; it < nt; ++it) acc += std::norm(v_perp[ir * nt + it]);
        vsq[ir] = acc * (two_pi / nt);
    }
    for (int k = 0; k <= k_top; ++k)
        for (int m = 0; m <= m_top; ++m) {
            const Eigen::Index col = static_cast<Eigen::Index>(k) * (m_top + 1) + m;
            const double total =
                levels[static_cast<size_t>(k)].radial.col(m).cwiseAbs2().dot(g.wr.cwiseProduct(vsq));
            if (total < 1e-280) continue;
            const double kept = mat_.col(col).squaredNorm();
            leak_ = std::max(leak_, std::max(0.0, (total - kept) / total));
        }

    sup_ = v_perp.cwiseAbs().maxCoeff() * v_axial.cwiseAbs().maxCoeff();
}

LayeredFunction SeparableMultiplier::apply(const LayeredFunction& u) const {
    if (!u.grid.same_as(ax_)) throw DomainError("multiplier and function use different axial grids");
    const Eigen::Index dim = static_cast<Eigen::Index>(k_top_ + 1) * (m_top_ + 1);
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(dim, ax_.n);
    for (const auto& ch : u.channels) {
        if (ch.k > k_top_ || ch.m > m_top_)
            throw DomainError("input channel falls outside the multiplier window");
        c.row(static_cast<Eigen::Index>(ch.k) * (m_top_ + 1) + ch.m) = ch.axial.transpose();
    }
    Eigen::MatrixXcd out = mat_ * c;
    out *= vax_.asDiagonal();

    LayeredFunction res;
    res.grid = ax_;
    res.truncation_tail = std::max(u.truncation_tail, leak_);
    res.channels.reserve(static_cast<size_t>(dim));
    for (int k = 0; k <= k_top_; ++k)
        for (int m = 0; m <= m_top_; ++m) {
            Channel ch;
            ch.k = k;
            ch.m = m;
            ch.axial = out.row(static_cast<Eigen::Index>(k) * (m_top_ + 1) + m).transpose();
            res.channels.push_back(std::move(ch));
        }
    return res;
}

}  // namespace landaulab
