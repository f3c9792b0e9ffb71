#include <landaulab/exponents.hpp>

#include <sstream>

namespace landaulab {

std::string LebesgueExponent::str() const {
    if (inf_) return "inf";
    std::ostringstream os;
    os << v_;
    return os.str();
}

LebesgueExponent dual_pair_exponent(LebesgueExponent r) {
    LebesgueExponent rp = r.conjugate();
    if (rp.is_infinite()) return LebesgueExponent::infinity();
    return LebesgueExponent(2.0 * rp.value());
}

static void check_dim(int d) {
    if (d < 2) throw DomainError("dimension must satisfy d >= 2");
}

double nu_exponent(int d, LebesgueExponent r) {
    check_dim(d);
    if (r.is_infinite()) return 0.0;
    double rv = r.value();
    if (rv < 0.5 * d - 1e-12)
        throw DomainError("nu requires r >= d/2");
    if (rv <= nu_break(d)) return 0.5 * d / rv - 1.0;
    return -0.5 / rv;
}

double rho_exponent(int d, LebesgueExponent q) {
    check_dim(d);
    if (q.is_infinite()) return 0.5 * (d - 2);
    double qv = q.value();
    if (qv < 2.0 - 1e-12)
        throw DomainError("rho requires q >= 2");
    if (qv <= rho_break(d)) return 1.0 / qv - 0.5;
    return 0.5 * (d - 2) - d / qv;
}

ExponentTable make_exponent_table(int d, const std::vector<LebesgueExponent>& r_values) {
    ExponentTable t;
    t.d = d;
    t.rows.reserve(r_values.size());
    for (const auto& r : r_values) {
        ExponentTableRow row;
        row.r = r;
        row.q = dual_pair_exponent(r);
        row.nu = nu_exponent(d, r);
        row.rho = rho_exponent(d, row.q);
        t.rows.push_back(row);
    }
    return t;
}

}  // namespace landaulab
