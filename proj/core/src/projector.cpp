#include <landaulab/projector.hpp>

#include <cmath>

#include <landaulab/errors.hpp>

namespace landaulab {

namespace {

constexpr double two_pi = 6.283185307179586476925286766559005768;

int wrap(int l, int n) {
    int w = l % n;
    return w < 0 ? w + n : w;
}

}  // namespace

LevelBasis make_level_basis(const QuadratureGrid& g, int k, int m_max) {
    if (k < 0 || m_max < 0) throw DomainError("level indices must be nonnegative");
    LevelBasis b;
    b.k = k;
    b.m_max = m_max;
    b.radial.resize(g.n_radial(), m_max + 1);
    for (int m = 0; m <= m_max; ++m)
        for (Eigen::Index ir = 0; ir < g.n_radial(); ++ir)
            b.radial(ir, m) = landau_radial(k, m, g.r[ir]);
    return b;
}

double mass_in_disc(int k, int m, double R) {
    Eigen::VectorXd x, w;
    gauss_legendre(24, x, w);
    const int panels = std::max(16, static_cast<int>(std::ceil(R * 4.0)));
    const double dh = R / panels;
    double acc = 0.0;
    for (int s = 0; s < panels; ++s) {
        for (int i = 0; i < x.size(); ++i) {
            const double r = s * dh + 0.5 * dh * (x[i] + 1.0);
            const double v = landau_radial(k, m, r);
            acc += 0.5 * dh * w[i] * v * v * r;
        }
    }
    return two_pi * acc;
}

int angular_cutoff(int k, double r_support, double tol) {
    const int floor_m = static_cast<int>(std::ceil(0.5 * r_support * r_support)) + k;
    int consecutive = 0;
    for (int m = floor_m; m < floor_m + 4096; ++m) {
        if (mass_in_disc(k, m, r_support) < 0.1 * tol) {
            if (++consecutive == 3) return m - 2;
        } else {
            consecutive = 0;
        }
    }
    throw ConvergenceError("no angular cutoff found below the search limit");
}

LevelProjector::LevelProjector(const QuadratureGrid& g, int k, int m_max)
    : g_(&g), b_(make_level_basis(g, k, m_max)), fft_(g.n_angular) {
    g.require_calibrated(k, m_max);
    const int span = std::max(k, m_max - k);
    if (2 * span >= g.n_angular)
        throw GridError("angular resolution too small for the requested level basis");
}

Eigen::VectorXcd LevelProjector::analyze(const PlanarField& f) const {
    if (f.size() != g_->n_points()) throw GridError("field size does not match grid");
    Eigen::MatrixXcd coef;
    fft_.analyze(f, coef);
    Eigen::VectorXcd c(b_.size());
    const int n = g_->n_angular;
    for (int m = 0; m <= b_.m_max; ++m) {
        const int col = wrap(b_.ell(m), n);
        std::complex<double> acc = 0.0;
        for (Eigen::Index ir = 0; ir < g_->n_radial(); ++ir)
            acc += g_->wr[ir] * b_.radial(ir, m) * coef(ir, col);
        c[m] = two_pi * acc;
    }
    return c;
}

PlanarField LevelProjector::synthesize(const Eigen::VectorXcd& coef) const {
    if (coef.size() != b_.size()) throw GridError("coefficient count does not match basis");
    const int n = g_->n_angular;
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(g_->n_radial(), n);
    for (int m = 0; m <= b_.m_max; ++m)
        mat.col(wrap(b_.ell(m), n)) += coef[m] * b_.radial.col(m).cast<std::complex<double>>();
    PlanarField out;
    fft_.synthesize(mat, out);
    return out;
}

PlanarField LevelProjector::apply(const PlanarField& f) const {
    return synthesize(analyze(f));
}

Eigen::MatrixXcd assemble_projected_potential(const QuadratureGrid& g,
                                              const PlanarField& v,
                                              const std::vector<LevelBasis>& levels) {
    Eigen::Index total = 0;
    for (const auto& b : levels) total += b.size();
    if (total == 0) return {};
    if (total > 4000) throw GridError("projected block too large to assemble densely");

    AngularFFT fft(g.n_angular);
    Eigen::MatrixXcd vhat;
    fft.analyze(v, vhat);

    struct Entry {
        const LevelBasis* b;
        int m;
        int ell;
    };
    std::vector<Entry> flat;
    flat.reserve(static_cast<size_t>(total));
    int ell_lo = 0, ell_hi = 0;
    for (const auto& b : levels)
        for (int m = 0; m <= b.m_max; ++m) {
            flat.push_back({&b, m, b.ell(m)});
            ell_lo = std::min(ell_lo, b.ell(m));
            ell_hi = std::max(ell_hi, b.ell(m));
        }
    if (ell_hi - ell_lo >= g.n_angular)
        throw GridError("angular resolution too small for the requested coupling span");

    const Eigen::Index nr = g.n_radial();
    Eigen::MatrixXd weighted(nr, total);
    for (Eigen::Index a = 0; a < total; ++a)
        weighted.col(a) = g.wr.cwiseProduct(flat[static_cast<size_t>(a)].b->radial.col(
            flat[static_cast<size_t>(a)].m));

    Eigen::MatrixXcd out(total, total);
    for (Eigen::Index a = 0; a < total; ++a) {
        const auto& ea = flat[static_cast<size_t>(a)];
        for (Eigen::Index bcol = a; bcol < total; ++bcol) {
            const auto& eb = flat[static_cast<size_t>(bcol)];
            const int col = wrap(ea.ell - eb.ell, g.n_angular);
            std::complex<double> acc = 0.0;
            const double* wa = weighted.col(a).data();
            const double* rb = eb.b->radial.col(eb.m).data();
            for (Eigen::Index ir = 0; ir < nr; ++ir) acc += wa[ir] * rb[ir] * vhat(ir, col);
            out(a, bcol) = two_pi * acc;
            out(bcol, a) = std::conj(out(a, bcol));
        }
    }
    return out;
}

double level_potential_norm(const QuadratureGrid& g, const PlanarField& vabs,
                            const LevelBasis& b) {
    Eigen::MatrixXcd block = assemble_projected_potential(g, vabs, {b});
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw ConvergenceError("eigensolve failed");
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

double level_potential_norm(const QuadratureGrid& g, const Eigen::VectorXd& vabs_radial,
                            const LevelBasis& b) {
    if (vabs_radial.size() != g.n_radial())
        throw GridError("radial sample count does not match grid");
    const Eigen::VectorXd wv = g.wr.cwiseProduct(vabs_radial);
    double best = 0.0;
    for (int m = 0; m <= b.m_max; ++m) {
        const double d = two_pi * b.radial.col(m).cwiseAbs2().dot(wv);
        best = std::max(best, std::abs(d));
    }
    return best;
}

}  // namespace landaulab
