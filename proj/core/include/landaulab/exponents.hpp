#pragma once

#include <landaulab/errors.hpp>

#include <string>
#include <vector>

namespace landaulab {

// Lebesgue exponent in [1, inf].  Infinity is a genuine symbolic state so
// conjugation and the duality map stay exact; it is never a large float.
class LebesgueExponent {
  public:
    LebesgueExponent() : v_(2.0), inf_(false) {}
    LebesgueExponent(double v) : v_(v), inf_(false) {
        if (!(v >= 1.0))
            throw DomainError("Lebesgue exponent must satisfy r >= 1");
        if (!(v < 1e300))
            throw DomainError("use LebesgueExponent::infinity() for r = inf");
    }
    static LebesgueExponent infinity() {
        LebesgueExponent e;
        e.inf_ = true;
        e.v_ = 0.0;
        return e;
    }

    bool is_infinite() const { return inf_; }
    double value() const {
        if (inf_) throw DomainError("finite value requested from infinite exponent");
        return v_;
    }
    // 1/r, exactly 0 at infinity.
    double reciprocal() const { return inf_ ? 0.0 : 1.0 / v_; }

    LebesgueExponent conjugate() const {
        if (inf_) return LebesgueExponent(1.0);
        if (v_ == 1.0) return infinity();
        return LebesgueExponent(v_ / (v_ - 1.0));
    }

    bool operator==(const LebesgueExponent& o) const {
        return inf_ == o.inf_ && (inf_ || v_ == o.v_);
    }
    std::string str() const;

  private:
    double v_;
    bool inf_;
};

// Duality map q = 2 r' pairing the potential-side exponent r with the
// projection-side exponent q.
LebesgueExponent dual_pair_exponent(LebesgueExponent r);

// nu(d, r) on [d/2, inf]: d/(2r) - 1 up to the break at (d+1)/2, then -1/(2r).
// Piecewise linear in 1/r and continuous at the break.
double nu_exponent(int d, LebesgueExponent r);

// rho(d, q) on [2, inf]: 1/q - 1/2 up to the break at 2(d+1)/(d-1), then
// (d-2)/2 - d/q.  Minimum -1/(d+1), attained at the break.
double rho_exponent(int d, LebesgueExponent q);

inline double rho_break(int d) { return 2.0 * (d + 1) / (d - 1); }
inline double nu_break(int d) { return 0.5 * (d + 1); }

struct ExponentTableRow {
    LebesgueExponent r, q;  // q = 2 r'
    double nu, rho;
};

// nu and rho tabulated along the duality map for one dimension.
struct ExponentTable {
    int d = 2;
    std::vector<ExponentTableRow> rows;
};

ExponentTable make_exponent_table(int d, const std::vector<LebesgueExponent>& r_values);

}  // namespace landaulab
