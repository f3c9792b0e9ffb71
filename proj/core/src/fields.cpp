#include <landaulab/fields.hpp>

#include <cmath>

#include <landaulab/errors.hpp>

namespace landaulab {

namespace {

void check_size(const QuadratureGrid& g, const PlanarField& f) {
    if (f.size() != g.n_points())
        throw GridError("field size does not match grid");
}

}  // namespace

double lp_norm(const QuadratureGrid& g, const PlanarField& f, LebesgueExponent p) {
    check_size(g, f);
    if (p.is_infinite()) return f.cwiseAbs().maxCoeff();
    const double pv = p.value();
    const int nt = g.n_angular;
    double acc = 0.0;
    for (Eigen::Index ir = 0; ir < g.n_radial(); ++ir) {
        double ring = 0.0;
        if (pv == 2.0) {
            ring = f.segment(ir * nt, nt).squaredNorm();
        } else {
            for (int it = 0; it < nt; ++it)
                ring += std::pow(std::abs(f[ir * nt + it]), pv);
        }
        acc += ring * g.wr[ir];
    }
    acc *= g.angular_weight();
    return std::pow(acc, 1.0 / pv);
}

std::complex<double> inner(const QuadratureGrid& g, const PlanarField& a,
                           const PlanarField& b) {
    check_size(g, a);
    check_size(g, b);
    const int nt = g.n_angular;
    std::complex<double> acc = 0.0;
    for (Eigen::Index ir = 0; ir < g.n_radial(); ++ir)
        acc += g.wr[ir] * a.segment(ir * nt, nt).dot(b.segment(ir * nt, nt));
    return acc * g.angular_weight();
}

PlanarField sample_field(const QuadratureGrid& g,
                         const std::function<std::complex<double>(double, double)>& f) {
    PlanarField out(g.n_points());
    const int nt = g.n_angular;
    for (Eigen::Index ir = 0; ir < g.n_radial(); ++ir) {
        const double r = g.r[ir];
        for (int it = 0; it < nt; ++it) {
            const double th = g.theta(it);
            out[ir * nt + it] = f(r * std::cos(th), r * std::sin(th));
        }
    }
    return out;
}

PlanarField sample_radial_field(const QuadratureGrid& g,
                                const std::function<double(double)>& f) {
    PlanarField out(g.n_points());
    const int nt = g.n_angular;
    for (Eigen::Index ir = 0; ir < g.n_radial(); ++ir) {
        const std::complex<double> v = f(g.r[ir]);
        for (int it = 0; it < nt; ++it) out[ir * nt + it] = v;
    }
    return out;
}

}  // namespace landaulab
