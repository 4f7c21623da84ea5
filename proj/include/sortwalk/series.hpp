#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sortwalk/enumeration.hpp"
#include "sortwalk/errors.hpp"

namespace sortwalk {

// Truncated formal power series with exact rational coefficients. A series of
// order N is known modulo t^{N+1}. Mixed-order operations truncate to the
// smaller order; shift(k) raises the order by k (the information content is
// unchanged). No floating point anywhere in this module.
class PowerSeries {
  public:
    PowerSeries() : coeffs_(1) {}
    explicit PowerSeries(std::vector<mpq_class> coeffs);
    static PowerSeries zero(int order);
    static PowerSeries one(int order);
    // Coefficients from a count table; entries must cover 0..n_max densely.
    static PowerSeries from_counts(const CountTable& table, int n_max);

    int order() const { return int(coeffs_.size()) - 1; }
    const mpq_class& coeff(int n) const { return coeffs_[std::size_t(n)]; }
    mpq_class& coeff(int n) { return coeffs_[std::size_t(n)]; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    PowerSeries add(const PowerSeries& other) const;
    PowerSeries sub(const PowerSeries& other) const;
    PowerSeries mul(const PowerSeries& other) const;
    PowerSeries scalar_mul(const mpq_class& c) const;
    PowerSeries shift(int k) const;     // multiply by t^k; order becomes order()+k
    PowerSeries truncate(int n) const;  // lower the order to n

    // r with this*r = 1 mod t^{order+1}; throws ZeroConstantTerm.
    PowerSeries reciprocal() const;
    // r with r*r = this mod t^{order+1} and r(0) = +1; throws BadConstantTerm
    // unless the constant term is exactly 1. Newton iteration, order doubling.
    PowerSeries sqrt() const;

    bool is_integral() const;      // every coefficient has denominator 1
    bool is_non_negative() const;  // every coefficient >= 0

    mpq_class evaluate(const mpq_class& t) const;  // Horner on the truncation

    std::string to_string() const;  // "c0 + c1*t + ..." with rationals as p/q
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  private:
    std::vector<mpq_class> coeffs_;
};

// The radicand 1 - 4P + 4P^2 - 8P^2 t + 4P^2 t^2 - 4Pt at order(P).
PowerSeries dinp_radicand(const PowerSeries& P);

// D from P: 2D = 2 + t + 2Pt - 2Pt^2 - t*sqrt(radicand), at order(P).
// Requires P(0) = 1 (BadConstantTerm propagated from sqrt otherwise).
PowerSeries d_from_p(const PowerSeries& P);

// Verifies (u-1-v)^2 - 4v == claimed_radicand with u = 2P, v = 2tP, as series
// mod t^{N+1}. Pairing the quartic's conjugate factors keeps everything
// rational. The one-argument form checks against dinp_radicand(P); passing an
// independently obtained radicand makes the comparison falsifiable.
bool quartic_identity_check(const PowerSeries& P, int N);
bool quartic_identity_check(const PowerSeries& P, const PowerSeries& claimed_radicand, int N);

// Exact pointwise probe of sqrt(2P(t)) >= 1 + sqrt(2tP(t)) on a rational
// grid, via the squared form: 2P >= 1 + 2tP and (2P - 1 - 2tP)^2 >= 8tP.
// Grid points must lie in [0, 23/200]; near the true radius of convergence a
// truncated check is a heuristic, and the report says so.
struct InequalityPoint {
    mpq_class t;
    bool pass = false;
    double margin = 0.0;  // display-only approximation of sqrt(2P)-1-sqrt(2tP)
};
struct InequalityReport {
    std::vector<InequalityPoint> points;
    bool all_pass = true;
    std::string note;
};
InequalityReport inequality_scan(const PowerSeries& P, const std::vector<mpq_class>& grid);

// Evenly spaced rational grid i*hi/k for i = 1..k (hi defaults to 23/200).
std::vector<mpq_class> make_grid(int k, const mpq_class& hi = mpq_class(23, 200));

}  // namespace sortwalk
