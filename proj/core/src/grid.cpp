#include <landaulab/grid.hpp>

#include <landaulab/basis.hpp>
#include <landaulab/levels.hpp>

#include <cmath>
#include <sstream>

namespace landaulab {

namespace {
constexpr double pi = 3.14159265358979323846264338328;
constexpr long point_budget = 1L << 23;
}

double QuadratureGrid::theta(int j) const { return 2.0 * pi * j / n_angular; }
double QuadratureGrid::angular_weight() const { return 2.0 * pi / n_angular; }
double QuadratureGrid::point_x(int ir, int it) const { return r[ir] * std::cos(theta(it)); }
double QuadratureGrid::point_y(int ir, int it) const { return r[ir] * std::sin(theta(it)); }

void QuadratureGrid::require_calibrated(int k, int m) const {
    if (k > calibrated_k || m > calibrated_m) {
        std::ostringstream os;
        os << "grid not calibrated for level " << k << ", angular index " << m
           << " (calibrated through k = " << calibrated_k << ", m = " << calibrated_m << ")";
        throw GridError(os.str());
    }
}

void gauss_legendre(int n, Eigen::VectorXd& x, Eigen::VectorXd& w) {
    if (n < 1) throw DomainError("gauss_legendre: order must be >= 1");
    x.resize(n);
    w.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

int next_pow2(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

void radial_oscillation_rule(double R, double osc, Eigen::VectorXd& r, Eigen::VectorXd& w) {
    if (!(R > 0.0)) throw DomainError("radial_oscillation_rule: length must be positive");
    const int order = 8;
    // GL of order n handles phases up to roughly n per panel; keep half that.
    const int panels = std::max(8, static_cast<int>(std::ceil(R * std::max(osc, 1.0) / 4.0)));
    Eigen::VectorXd x0, w0;
    gauss_legendre(order, x0, w0);
    r.resize(panels * order);
    w.resize(panels * order);
    const double h = R / panels;
    for (int p = 0; p < panels; ++p)
        for (int j = 0; j < order; ++j) {
            r[p * order + j] = h * (p + 0.5 * (x0[j] + 1.0));
            w[p * order + j] = 0.5 * h * w0[j];
        }
}

QuadratureGrid build_grid(double extent, double radial_density, int n_angular) {
    if (!(extent > 0.0)) throw DomainError("build_grid: extent must be positive");
    if (!(radial_density > 0.0)) throw DomainError("build_grid: radial density must be positive");
    if (n_angular < 1) throw DomainError("build_grid: angular count must be positive");
    n_angular = next_pow2(n_angular);
    int nr = std::max(32, static_cast<int>(std::ceil(extent * radial_density)));
    if (static_cast<long>(nr) * n_angular > point_budget)
        throw GridError("build_grid: grid exceeds the point budget");
    Eigen::VectorXd x, w;
    gauss_legendre(nr, x, w);
    QuadratureGrid g;
    g.extent = extent;
    g.n_angular = n_angular;
    g.r.resize(nr);
    g.wr.resize(nr);
    for (int i = 0; i < nr; ++i) {
        g.r[i] = 0.5 * extent * (x[i] + 1.0);
        g.wr[i] = 0.5 * extent * w[i] * g.r[i];
    }
    return g;
}

double quadrature_mass(const QuadratureGrid& g, int k, int m) {
    double s = 0.0;
    for (int i = 0; i < g.n_radial(); ++i) {
        double R = landau_radial(k, m, g.r[i]);
        s += g.wr[i] * R * R;
    }
    return 2.0 * pi * s;
}

void calibrate(QuadratureGrid& g, int k_max, int m_max, double tail_tol) {
    const double area = pi * g.extent * g.extent;
    const double total = g.wr.sum() * 2.0 * pi;
    if (std::abs(total - area) > 0.01 * area)
        throw GridError("calibrate: total weight misses the disc area by more than 1%");
    double m00 = quadrature_mass(g, 0, 0);
    if (std::abs(m00 - 1.0) > 1e-6)
        throw GridError("calibrate: phi_{0,0} mass off by more than 1e-6");
    // Outermost states: largest classical radius (k_max, m_max) and the
    // innermost-centered, most oscillatory one (k_max, 0).
    for (int m : {0, m_max}) {
        double mass = quadrature_mass(g, k_max, m);
        if (!(mass > 1.0 - tail_tol && mass < 1.0 + 1e-6)) {
            std::ostringstream os;
            os << "calibrate: mass of state (" << k_max << ", " << m << ") = " << mass
               << " outside [1 - " << tail_tol << ", 1 + 1e-6]";
            throw GridError(os.str());
        }
    }
    g.calibrated_k = k_max;
    g.calibrated_m = m_max;
}

QuadratureGrid build_grid_for_level(int k_max, int m_max, double radial_density,
                                    int n_angular, double tail_tol) {
    if (k_max < 0 || m_max < 0) throw DomainError("build_grid_for_level: indices must be >= 0");
    const double lam_out = 2.0 * std::min(k_max, m_max) + std::abs(m_max - k_max) + 1.0;
    double extent = std::sqrt(2.0 * lam_out) + 6.0;
    const double lam = landau_eigenvalue(k_max, 1);
    if (radial_density <= 0.0)
        radial_density = std::max(8.0, 1.25 * std::sqrt(2.0 * lam));
    if (n_angular <= 0)
        n_angular = next_pow2(std::max(64, 2 * (std::max(k_max, m_max - k_max) + 8)));
    for (int attempt = 0; attempt < 6; ++attempt) {
        QuadratureGrid g = build_grid(extent, radial_density, n_angular);
        try {
            calibrate(g, k_max, m_max, tail_tol);
            return g;
        } catch (const GridError&) {
            extent += 2.0;
        }
    }
    throw GridError("build_grid_for_level: calibration failed within the widening budget");
}

}  // namespace landaulab
