#include <landaulab/potential.hpp>

#include <algorithm>
#include <cmath>

#include <landaulab/basis.hpp>
#include <landaulab/errors.hpp>

namespace landaulab {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

double interp_table(const std::vector<double>& xs, const std::vector<double>& ys,
                    double x) {
    if (xs.empty()) throw ConfigError("tabulated potential has no samples");
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return 0.0;
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const size_t hi = static_cast<size_t>(it - xs.begin());
    const size_t lo = hi - 1;
    const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + t * (ys[hi] - ys[lo]);
}

// integral of f(rho)^p * 2 pi rho on [a, b] by composite Gauss-Legendre
double radial_power_integral(const std::function<double(double)>& f, double p,
                             double a, double b, int panels = 64, int order = 12) {
    Eigen::VectorXd x, w;
    gauss_legendre(order, x, w);
    double acc = 0.0;
    const double dh = (b - a) / panels;
    for (int s = 0; s < panels; ++s) {
        const double lo = a + s * dh;
        for (int i = 0; i < order; ++i) {
            const double rho = lo + 0.5 * dh * (x[i] + 1.0);
            acc += 0.5 * dh * w[i] * std::pow(std::abs(f(rho)), p) * 2.0 * pi * rho;
        }
    }
    return acc;
}

double state_extent(const LevelState& st) {
    const int m_hi = std::max<int>(0, static_cast<int>(st.coef.size()) - 1);
    return std::sqrt(2.0 * (2.0 * std::min(st.k0, m_hi) + std::abs(m_hi - st.k0) + 1.0)) + 10.0;
}

}  // namespace

bool PotentialSpec::is_radial() const {
    switch (family) {
        case Family::gaussian:
        case Family::bump:
            return center[0] == 0.0 && center[1] == 0.0;
        case Family::power_tail:
        case Family::tabulated:
            return true;
        case Family::level_power: {
            for (Eigen::Index m = 0; m < state.coef.size(); ++m)
                if (m != state.k0 && state.coef[m] != 0.0) return false;
            return true;
        }
    }
    return false;
}

double PotentialSpec::operator()(double x, double y) const {
    const double dx = x - center[0];
    const double dy = y - center[1];
    const double rho2 = dx * dx + dy * dy;
    switch (family) {
        case Family::gaussian:
            return sign * amplitude * std::exp(-rho2 / (2.0 * sigma * sigma));
        case Family::bump: {
            const double u = rho2 / (radius * radius);
            if (u >= 1.0) return 0.0;
            return sign * amplitude * std::exp(1.0 - 1.0 / (1.0 - u));
        }
        case Family::power_tail:
            return sign * amplitude *
                   std::pow(1.0 + (x * x + y * y) / (sigma * sigma), -0.5 * beta);
        case Family::tabulated:
            return sign * interp_table(table_r, table_v, std::sqrt(x * x + y * y));
        case Family::level_power: {
            std::complex<double> f = 0.0;
            for (Eigen::Index m = 0; m < state.coef.size(); ++m) {
                if (state.coef[m] == 0.0) continue;
                f += state.coef[m] * eigenfunction_eval(state.k0, static_cast<int>(m), x, y);
            }
            const double w = scale * std::pow(std::abs(f), gamma);
            return sign * w * w;
        }
    }
    throw ConfigError("unknown potential family");
}

double PotentialSpec::abs_radial(double r) const {
    if (!is_radial()) throw DomainError("potential is not radial");
    if (family == Family::level_power) {
        if (static_cast<Eigen::Index>(state.k0) >= state.coef.size()) return 0.0;
        const double g = std::abs(state.coef[state.k0]) *
                         std::abs(landau_radial(state.k0, state.k0, r));
        const double w = scale * std::pow(g, gamma);
        return w * w;
    }
    return std::abs((*this)(r, 0.0));
}

double PotentialSpec::lp_norm(LebesgueExponent r) const {
    if (r.is_infinite()) {
        switch (family) {
            case Family::gaussian:
            case Family::power_tail:
                return amplitude;
            case Family::bump:
                return amplitude;
            case Family::tabulated: {
                double m = 0.0;
                for (double v : table_v) m = std::max(m, std::abs(v));
                return m;
            }
            case Family::level_power:
                break;  // fall through to quadrature-free scan below
        }
    }
    const double rv = r.is_infinite() ? 0.0 : r.value();
    switch (family) {
        case Family::gaussian:
            return amplitude * std::pow(2.0 * pi * sigma * sigma / rv, 1.0 / rv);
        case Family::power_tail: {
            if (beta * rv <= 2.0)
                throw DomainError("power-tail potential is not in the requested Lebesgue space");
            return amplitude * std::pow(2.0 * pi * sigma * sigma / (beta * rv - 2.0), 1.0 / rv);
        }
        case Family::bump: {
            auto f = [&](double rho) { return std::abs((*this)(center[0] + rho, center[1])); };
            return std::pow(radial_power_integral(f, rv, 0.0, radius), 1.0 / rv);
        }
        case Family::tabulated: {
            auto f = [&](double rho) { return interp_table(table_r, table_v, rho); };
            return std::pow(radial_power_integral(f, rv, 0.0, table_r.back(), 256), 1.0 / rv);
        }
        case Family::level_power: {
            if (is_radial()) {
                if (r.is_infinite()) {
                    const double extent = state_extent(state);
                    double m = 0.0;
                    for (int i = 0; i <= 4000; ++i)
                        m = std::max(m, abs_radial(extent * i / 4000.0));
                    return m;
                }
                auto f = [&](double rho) { return abs_radial(rho); };
                return std::pow(
                    radial_power_integral(f, rv, 0.0, state_extent(state), 256), 1.0 / rv);
            }
            QuadratureGrid g = build_grid_for_level(
                state.k0, std::max<int>(state.k0, static_cast<int>(state.coef.size()) - 1));
            PlanarField v = sample_field(
                g, [&](double x, double y) { return std::complex<double>((*this)(x, y), 0.0); });
            return landaulab::lp_norm(g, v, r);
        }
    }
    throw ConfigError("unknown potential family");
}

double PotentialSpec::tail_fraction(double R, LebesgueExponent r) const {
    const double rv = r.is_infinite() ? 1.0 : r.value();
    const double off = std::hypot(center[0], center[1]);
    switch (family) {
        case Family::gaussian: {
            const double d = std::max(0.0, R - off);
            return std::exp(-rv * d * d / (2.0 * sigma * sigma));
        }
        case Family::bump:
            if (R >= off + radius) return 0.0;
            return 1.0;  // conservative: support is not inside the disc
        case Family::power_tail: {
            if (beta * rv <= 2.0) return 1.0;
            return std::pow(1.0 + R * R / (sigma * sigma), 1.0 - 0.5 * beta * rv);
        }
        case Family::tabulated:
            if (R >= table_r.back()) return 0.0;
            else {
                auto f = [&](double rho) { return interp_table(table_r, table_v, rho); };
                const double total = radial_power_integral(f, rv, 0.0, table_r.back(), 256);
                const double out = radial_power_integral(f, rv, R, table_r.back(), 256);
                return total > 0.0 ? out / total : 0.0;
            }
        case Family::level_power: {
            const double extent = std::max(state_extent(state), R + 1.0);
            if (is_radial()) {
                auto f = [&](double rho) { return abs_radial(rho); };
                const double total = radial_power_integral(f, rv, 0.0, extent, 256);
                const double out = radial_power_integral(f, rv, R, extent, 256);
                return total > 0.0 ? out / total : 0.0;
            }
            QuadratureGrid g = build_grid(extent, 16.0, 256);
            PlanarField v = sample_field(
                g, [&](double x, double y) { return std::complex<double>((*this)(x, y), 0.0); });
            double total = 0.0, out = 0.0;
            for (Eigen::Index ir = 0; ir < g.n_radial(); ++ir) {
                double ring = 0.0;
                for (int it = 0; it < g.n_angular; ++it)
                    ring += std::pow(std::abs(v[ir * g.n_angular + it]), rv);
                ring *= g.wr[ir];
                total += ring;
                if (g.r[ir] > R) out += ring;
            }
            return total > 0.0 ? out / total : 0.0;
        }
    }
    throw ConfigError("unknown potential family");
}

std::string PotentialSpec::family_name() const {
    switch (family) {
        case Family::gaussian: return "gaussian";
        case Family::bump: return "bump";
        case Family::power_tail: return "power_tail";
        case Family::tabulated: return "tabulated";
        case Family::level_power: return "level_power";
    }
    return "unknown";
}

PotentialSpec gaussian_potential(double amplitude, double sigma, int sign) {
    PotentialSpec v;
    v.family = PotentialSpec::Family::gaussian;
    v.amplitude = amplitude;
    v.sigma = sigma;
    v.sign = sign;
    return v;
}

PotentialSpec bump_potential(double amplitude, double radius, int sign) {
    PotentialSpec v;
    v.family = PotentialSpec::Family::bump;
    v.amplitude = amplitude;
    v.radius = radius;
    v.sign = sign;
    return v;
}

PotentialSpec power_tail_potential(double amplitude, double sigma, double beta, int sign) {
    PotentialSpec v;
    v.family = PotentialSpec::Family::power_tail;
    v.amplitude = amplitude;
    v.sigma = sigma;
    v.beta = beta;
    v.sign = sign;
    return v;
}

PlanarField sample_potential(const QuadratureGrid& g, const PotentialSpec& v,
                             LebesgueExponent r, double tail_tol) {
    const double tf = v.tail_fraction(g.extent, r);
    if (tf > tail_tol)
        throw GridError("potential mass beyond grid extent: fraction " + std::to_string(tf));
    if (v.is_radial())
        return sample_radial_field(g, [&](double rr) {
            return v.sign < 0 ? -v.abs_radial(rr) : v.abs_radial(rr);
        });
    return sample_field(
        g, [&](double x, double y) { return std::complex<double>(v(x, y), 0.0); });
}

}  // namespace landaulab
