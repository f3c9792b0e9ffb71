#include <landaulab/carleman.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include <landaulab/errors.hpp>
#include <landaulab/levels.hpp>
#include <landaulab/resolvent3d.hpp>

namespace landaulab {

namespace {

using cd = std::complex<double>;

// Integrand of the multiplier oracle after the 1/(eta + i tau)^2 asymptote
// has been removed; decays like omega^2 / eta^4.
struct EtaIntegrand {
    double t;
    double tau;
    double om2;

    cd operator()(double e) const {
        const cd p(e, tau);
        const cd p2 = p * p;
        return std::exp(cd(0.0, t * e)) * (-om2) / ((p2 + om2) * p2);
    }
};

cd simpson(double a, double b, cd fa, cd fm, cd fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

cd adapt_panel(const EtaIntegrand& f, double a, double m, double b, cd fa, cd fm, cd fb,
               cd whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const cd flm = f(lm);
    const cd frm = f(rm);
    const cd left = simpson(a, m, fa, flm, fm);
    const cd right = simpson(m, b, fm, frm, fb);
    const cd delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adapt_panel(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt_panel(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// Closed form of (1/2pi) int e^{i t eta} / (eta + i tau)^2 d eta, tau > 0:
// the double pole at -i tau only contributes when the contour closes below.
cd asymptote_term(double t, double tau) {
    if (t < 0.0) return cd(t * std::exp(tau * t), 0.0);
    return cd(0.0, 0.0);
}

double require_odd_dimension(int d) {
    if (d < 3 || d % 2 == 0)
        throw DomainError("level sums are defined for odd dimension d >= 3");
    return 0.5 * static_cast<double>(d - 1);  // planar index n
}

}  // namespace

bool carleman_admissible(double tau, int n) {
    return spectrum_distance(tau * tau, n) >= 0.5;
}

void require_admissible(double tau, int n) {
    if (!carleman_admissible(tau, n))
        throw DomainError("weight rate resonates with a level: dist(tau^2, 2N+n) < 1/2");
}

double carleman_frequency(int k, int n) {
    if (k < 0) throw DomainError("level index must be >= 0");
    return std::sqrt(landau_eigenvalue(k, n));
}

std::complex<double> carleman_multiplier(double t, double tau, int k, int n) {
    if (tau < 0.0) return carleman_multiplier(-t, -tau, k, n);
    const double om = carleman_frequency(k, n);
    if (std::abs(tau - om) < 1e-9)
        throw DomainError("weight rate coincides with a level frequency");
    if (tau < om) return cd(std::exp(tau * t - om * std::abs(t)) / (2.0 * om), 0.0);
    // tau > om: both poles below the axis, the multiplier is supported on t <= 0.
    if (t > 0.0) return cd(0.0, 0.0);
    return cd((std::exp((tau + om) * t) - std::exp((tau - om) * t)) / (2.0 * om), 0.0);
}

std::complex<double> carleman_multiplier_quadrature(double t, double tau, int k, int n,
                                                    double window, double tol) {
    if (tau == 0.0)
        throw DomainError("quadrature oracle needs tau != 0 (asymptote pole on the axis)");
    if (tau < 0.0) return carleman_multiplier_quadrature(-t, -tau, k, n, window, tol);
    if (!(window > 1.0) || !(tol > 0.0)) throw DomainError("bad quadrature window or tolerance");

    const double om = carleman_frequency(k, n);
    if (std::abs(tau - om) < 1e-9)
        throw DomainError("weight rate coincides with a level frequency");
    const EtaIntegrand f{t, tau, om * om};

    // Pre-split so each panel sees at most a few phase cycles, then refine.
    const int panels = std::clamp(static_cast<int>(std::ceil(2.0 * window * std::abs(t) / 3.0)),
                                  64, 8192);
    const double width = 2.0 * window / panels;
    const double panel_tol = tol / panels;
    cd total(0.0, 0.0);
    double a = -window;
    cd fa = f(a);
    for (int p = 0; p < panels; ++p) {
        const double b = (p + 1 == panels) ? window : a + width;
        const double m = 0.5 * (a + b);
        const cd fm = f(m);
        const cd fb = f(b);
        total += adapt_panel(f, a, m, b, fa, fm, fb, simpson(a, b, fa, fm, fb), panel_tol, 32);
        a = b;
        fa = fb;
    }
    constexpr double two_pi = 6.283185307179586476925286766559;
    return asymptote_term(t, tau) + total / two_pi;
}

MultiplierSumValue multiplier_sum_check(double t, double tau, int d, long k_max,
                                        double tail_tol) {
    const double nd = require_odd_dimension(d);
    const int n = static_cast<int>(std::lround(nd));
    if (t == 0.0) throw DomainError("level sum diverges at t = 0");
    if (!(tail_tol > 0.0)) throw DomainError("tail tolerance must be positive");

    const double ta = std::abs(t);
    const double taua = std::abs(tau);
    const double inv_d = 1.0 / static_cast<double>(d);

    // Beyond U = omega_{K+1} >= max(tau+1, sqrt(2n)) the term envelope
    // b(k) = (1+2k)^{-1/d} e^{-(omega_k - |tau|)|t|} / (2 omega_k) decreases, and
    //   sum_{k>K} b <= b(K+1) + (e^{|tau||t|}/2) 2^{1/d} U^{-2/d} e^{-U|t|} / |t|
    // by comparison with the integral in u = omega.
    const auto tail_bound = [&](long K) -> double {
        const double lam = 2.0 * static_cast<double>(K + 1) + n;
        const double U = std::sqrt(lam);
        if (U < taua + 1.0 || lam < 2.0 * n) return std::numeric_limits<double>::infinity();
        const double b1 = std::pow(1.0 + 2.0 * static_cast<double>(K + 1), -inv_d) *
                          std::exp(-(U - taua) * ta) / (2.0 * U);
        const double integral = 0.5 * std::pow(2.0, inv_d) * std::pow(U, -2.0 * inv_d) *
                                std::exp(taua * ta - U * ta) / ta;
        return b1 + integral;
    };

    const long k_valid = static_cast<long>(std::ceil(std::max(
        ((taua + 1.0) * (taua + 1.0) - n) / 2.0, static_cast<double>(n))));
    long K = std::max({k_max, k_valid, 8L});
    constexpr long k_cap = 20'000'000L;
    constexpr long chunk = 256;

    MultiplierSumValue out;
    const auto add_terms = [&](long lo, long hi) {
        for (long k = lo; k <= hi; ++k) {
            const double w = std::pow(1.0 + 2.0 * static_cast<double>(k), -inv_d);
            out.value += w * std::abs(carleman_multiplier(t, tau, static_cast<int>(k), n));
        }
    };

    add_terms(0, K);
    double tail = tail_bound(K);
    while (tail > tail_tol) {
        if (K >= k_cap)
            throw CertificateError("level sum tail did not certify below tolerance");
        const long next = std::min(K + chunk, k_cap);
        add_terms(K + 1, next);
        K = next;
        tail = tail_bound(K);
    }
    out.tail = tail;
    out.k_used = K;
    out.ratio = (out.value + out.tail) / (1.0 + std::pow(ta, 2.0 * inv_d - 1.0));
    return out;
}

LayeredFunction conjugated_inverse_apply(double tau, const LayeredFunction& f, int extend) {
    require_admissible(tau);
    if (extend < 0) throw DomainError("grid extension must be >= 0");
    if (f.grid.n < 2) throw GridError("axial grid too small");

    const AxialGrid& g = f.grid;
    const int span = g.n - 1 + extend;

    LayeredFunction out;
    out.grid = g;
    out.grid.x0 -= extend * g.h;
    out.grid.n += 2 * extend;
    out.truncation_tail = f.truncation_tail;
    out.channels.reserve(f.channels.size());

    for (const Channel& ch : f.channels) {
        Eigen::VectorXcd kr(2 * span + 1);
        for (int p = 0; p <= 2 * span; ++p)
            kr[p] = carleman_multiplier((span - p) * g.h, tau, ch.k);
        Channel oc;
        oc.k = ch.k;
        oc.m = ch.m;
        oc.axial.resize(out.grid.n);
        for (int i = 0; i < out.grid.n; ++i)
            oc.axial[i] =
                g.h * kr.segment(span + extend - i, g.n).cwiseProduct(ch.axial).sum();
        out.channels.push_back(std::move(oc));
    }
    return out;
}

LayeredFunction conjugated_operator_apply(double tau, const LayeredFunction& f) {
    if (f.grid.n < 3) throw GridError("need at least three axial samples for the stencil");
    const double h = f.grid.h;
    const double h2 = h * h;

    LayeredFunction out;
    out.grid = f.grid;
    out.grid.x0 += h;
    out.grid.n -= 2;
    out.truncation_tail = f.truncation_tail;
    out.channels.reserve(f.channels.size());

    for (const Channel& ch : f.channels) {
        const double lam = landau_eigenvalue(ch.k);
        Channel oc;
        oc.k = ch.k;
        oc.m = ch.m;
        oc.axial.resize(out.grid.n);
        for (int j = 0; j < out.grid.n; ++j) {
            const cd cm = ch.axial[j];
            const cd cc = ch.axial[j + 1];
            const cd cp = ch.axial[j + 2];
            oc.axial[j] = -(cp - 2.0 * cc + cm) / h2 + tau * (cp - cm) / h +
                          (lam - tau * tau) * cc;
        }
        out.channels.push_back(std::move(oc));
    }
    return out;
}

CarlemanRatio carleman_ratio(const LayeredFunction& u, double tau,
                             const QuadratureGrid& planar) {
    require_admissible(tau);
    if (u.channels.empty()) throw DomainError("empty layered function");

    const LayeredFunction hu = layered_hamiltonian_apply(cd(0.0, 0.0), u);
    const Eigen::VectorXd su = planar_profile(u, LebesgueExponent(6.0), planar);
    const Eigen::VectorXd sh = planar_profile(hu, LebesgueExponent(1.2), planar);

    // Reference the weight at the endpoint where it peaks so the retained
    // factor e^{tau (x - x_ref)} never exceeds one.
    const double x_ref =
        tau >= 0.0 ? u.grid.point(u.grid.n - 1) : u.grid.point(0);

    const auto weighted_norm = [&](const AxialGrid& g, const Eigen::VectorXd& prof,
                                   double p) -> double {
        double acc = 0.0;
        for (int j = 0; j < g.n; ++j) {
            const double w = std::exp(tau * (g.point(j) - x_ref));
            acc += g.h * std::pow(w * prof[j], p);
        }
        return std::pow(acc, 1.0 / p);
    };

    CarlemanRatio row;
    row.tau = tau;
    row.admissible = true;
    row.lhs = weighted_norm(u.grid, su, 6.0);
    row.rhs = weighted_norm(hu.grid, sh, 1.2);
    if (row.rhs < 1e-12)
        throw DomainError("conjugated image is numerically zero; quotient is unreliable");
    row.ratio = row.lhs / row.rhs;
    return row;
}

std::vector<CarlemanRatio> carleman_sweep(const LayeredFunction& u,
                                          const std::vector<double>& taus,
                                          const QuadratureGrid& planar) {
    std::vector<CarlemanRatio> rows;
    rows.reserve(taus.size());
    for (double tau : taus) {
        if (!carleman_admissible(tau)) {
            CarlemanRatio row;
            row.tau = tau;
            row.lhs = row.rhs = row.ratio = std::numeric_limits<double>::quiet_NaN();
            row.admissible = false;
            rows.push_back(row);
            continue;
        }
        rows.push_back(carleman_ratio(u, tau, planar));
    }
    return rows;
}

}  // namespace landaulab
