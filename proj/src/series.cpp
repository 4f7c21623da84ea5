#include "sortwalk/series.hpp"

#include <algorithm>
#include <cmath>

namespace sortwalk {

PowerSeries::PowerSeries(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
}

PowerSeries PowerSeries::zero(int order) {
    return PowerSeries(std::vector<mpq_class>(std::size_t(order) + 1));
}

PowerSeries PowerSeries::one(int order) {
    PowerSeries s = zero(order);
    s.coeffs_[0] = 1;
    return s;
}

PowerSeries PowerSeries::from_counts(const CountTable& table, int n_max) {
    std::vector<mpq_class> c(std::size_t(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const auto it = table.entries.find(n);
        if (it == table.entries.end())
            throw IngestFormatError("count table '" + table.class_tag + "' missing n=" +
                                    std::to_string(n));
        c[std::size_t(n)] = mpq_class(it->second);
    }
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::add(const PowerSeries& other) const {
    const int n = std::min(order(), other.order());
    std::vector<mpq_class> c(std::size_t(n) + 1);
    for (int i = 0; i <= n; ++i) c[std::size_t(i)] = coeffs_[std::size_t(i)] + other.coeffs_[std::size_t(i)];
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::sub(const PowerSeries& other) const {
    const int n = std::min(order(), other.order());
    std::vector<mpq_class> c(std::size_t(n) + 1);
    for (int i = 0; i <= n; ++i) c[std::size_t(i)] = coeffs_[std::size_t(i)] - other.coeffs_[std::size_t(i)];
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::mul(const PowerSeries& other) const {
    const int n = std::min(order(), other.order());
    std::vector<mpq_class> c(std::size_t(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (coeffs_[std::size_t(i)] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (other.coeffs_[std::size_t(j)] == 0) continue;
            c[std::size_t(i + j)] += coeffs_[std::size_t(i)] * other.coeffs_[std::size_t(j)];
        }
    }
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::scalar_mul(const mpq_class& k) const {
    std::vector<mpq_class> c = coeffs_;
    for (auto& x : c) x *= k;
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::shift(int k) const {
    std::vector<mpq_class> c(coeffs_.size() + std::size_t(k));
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + k);
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::truncate(int n) const {
    std::vector<mpq_class> c(coeffs_.begin(),
                             coeffs_.begin() + std::min<std::size_t>(std::size_t(n) + 1, coeffs_.size()));
    c.resize(std::size_t(n) + 1);
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::reciprocal() const {
    if (coeffs_[0] == 0) throw ZeroConstantTerm("reciprocal of series with zero constant term");
    const int n = order();
    std::vector<mpq_class> r(std::size_t(n) + 1);
    const mpq_class inv0 = 1 / coeffs_[0];
    r[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        mpq_class acc = 0;
        for (int j = 1; j <= k && j <= order(); ++j) acc += coeffs_[std::size_t(j)] * r[std::size_t(k - j)];
        r[std::size_t(k)] = -inv0 * acc;
    }
    return PowerSeries(std::move(r));
}

PowerSeries PowerSeries::sqrt() const {
    if (coeffs_[0] != 1) throw BadConstantTerm("sqrt requires constant term exactly 1");
    const int n = order();
    // Newton iteration r <- (r + s/r)/2, doubling the correct order each pass.
    PowerSeries r = PowerSeries::one(0);
    int correct = 0;
    while (correct < n) {
        correct = std::min(2 * correct + 1, n);
        const PowerSeries s = truncate(correct);
        PowerSeries rr = r.truncate(correct);
        r = rr.add(s.mul(rr.reciprocal())).scalar_mul(mpq_class(1, 2));
    }
    return r;
}

bool PowerSeries::is_integral() const {
    for (const auto& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

bool PowerSeries::is_non_negative() const {
    for (const auto& c : coeffs_)
        if (c < 0) return false;
    return true;
}

mpq_class PowerSeries::evaluate(const mpq_class& t) const {
    mpq_class acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
    return acc;
}

std::string PowerSeries::to_string() const {
    std::string out;
    for (int i = 0; i <= order(); ++i) {
        if (i) out += " + ";
        out += coeffs_[std::size_t(i)].get_str();
        if (i == 1) out += "*t";
        if (i > 1) out += "*t^" + std::to_string(i);
    }
    return out;
}

PowerSeries dinp_radicand(const PowerSeries& P) {
    const int n = P.order();
    const PowerSeries one = PowerSeries::one(n);
    const PowerSeries P2 = P.mul(P);
    const PowerSeries Pt = P.shift(1).truncate(n);
    const PowerSeries P2t = P2.shift(1).truncate(n);
    const PowerSeries P2t2 = P2.shift(2).truncate(n);
    // 1 - 4P + 4P^2 - 8P^2 t + 4P^2 t^2 - 4Pt
    return one.sub(P.scalar_mul(4))
        .add(P2.scalar_mul(4))
        .sub(P2t.scalar_mul(8))
        .add(P2t2.scalar_mul(4))
        .sub(Pt.scalar_mul(4));
}

PowerSeries d_from_p(const PowerSeries& P) {
    if (P.coeff(0) != 1) throw BadConstantTerm("d_from_p requires P(0) = 1");
    const int n = P.order();
    const PowerSeries root = dinp_radicand(P).sqrt();
    // 2D = 2 + t + 2Pt - 2Pt^2 - t*sqrt(radicand)
    PowerSeries two_d = PowerSeries::one(n).scalar_mul(2);
    PowerSeries t = PowerSeries::one(n).shift(1).truncate(n);
    two_d = two_d.add(t);
    two_d = two_d.add(P.shift(1).truncate(n).scalar_mul(2));
    two_d = two_d.sub(P.shift(2).truncate(n).scalar_mul(2));
    two_d = two_d.sub(root.shift(1).truncate(n));
    return two_d.scalar_mul(mpq_class(1, 2));
}

bool quartic_identity_check(const PowerSeries& P, int N) {
    return quartic_identity_check(P, dinp_radicand(P).truncate(N), N);
}

bool quartic_identity_check(const PowerSeries& P, const PowerSeries& claimed_radicand, int N) {
    const PowerSeries u = P.scalar_mul(2).truncate(N);
    const PowerSeries v = P.scalar_mul(2).shift(1).truncate(N);
    const PowerSeries w = u.sub(PowerSeries::one(N)).sub(v);
    const PowerSeries lhs = w.mul(w).sub(v.scalar_mul(4));
    return lhs == claimed_radicand.truncate(N);
}

std::vector<mpq_class> make_grid(int k, const mpq_class& hi) {
    std::vector<mpq_class> grid;
    grid.reserve(std::size_t(k));
    for (int i = 1; i <= k; ++i) grid.push_back(hi * i / k);
    return grid;
}

InequalityReport inequality_scan(const PowerSeries& P, const std::vector<mpq_class>& grid) {
    const mpq_class cap(23, 200);
    InequalityReport report;
    report.note =
        "truncated-series probe on [0, 23/200]; exact rational comparisons, "
        "heuristic near the radius of convergence";
    for (const auto& t : grid) {
        if (t < 0 || t > cap)
            throw GridOutOfRange("grid point " + t.get_str() + " outside [0, 23/200]");
        const mpq_class p = P.evaluate(t);
        const mpq_class lhs = 2 * p - 1 - 2 * t * p;  // must be >= 0, then square
        const mpq_class rhs = 8 * t * p;
        InequalityPoint point;
        point.t = t;
        point.pass = lhs >= 0 && lhs * lhs >= rhs;
        point.margin = std::sqrt(2.0 * p.get_d()) - 1.0 - std::sqrt(2.0 * t.get_d() * p.get_d());
        if (!point.pass) report.all_pass = false;
        report.points.push_back(point);
    }
    return report;
}

}  // namespace sortwalk
