#include "sortwalk/bounds.hpp"

#include <algorithm>

namespace sortwalk {

PowerSeries primitive_series(const PowerSeries& D) {
    if (D.coeff(0) != 1) throw BadConstantTerm("primitive_series requires D(0) = 1");
    const PowerSeries V = PowerSeries::one(D.order()).sub(D.reciprocal());
    if (!V.is_non_negative() || !V.is_integral())
        throw NegativeCoefficient("V = 1 - 1/D is not a non-negative integer series; "
                                  "input D looks corrupted");
    return V;
}

namespace {
mpq_class eval_one_minus(const PowerSeries& V, const mpq_class& t) {
    return 1 - V.evaluate(t);
}
}  // namespace

BoundResult lower_bound(const PowerSeries& V, int N) {
    if (V.coeff(0) != 0) throw BadConstantTerm("lower_bound requires V(0) = 0");
    const PowerSeries VN = V.truncate(std::min(N, V.order()));
    bool has_mass = false;
    for (int i = 1; i <= VN.order(); ++i)
        if (VN.coeff(i) > 0) has_mass = true;
    if (!has_mass) throw NoRootInUnitInterval("V_{<=N} has no positive coefficient");

    BoundResult result;
    result.N = N;
    mpq_class lo(1, 16), hi(1);
    const mpq_class f_hi_end = eval_one_minus(VN, hi);
    if (f_hi_end > 0)
        throw NoRootInUnitInterval("1 - V_{<=N}(1) = " + f_hi_end.get_str() +
                                   " > 0; too few coefficients");
    const mpq_class f_lo_start = eval_one_minus(VN, lo);
    if (f_lo_start <= 0)
        throw NoRootInUnitInterval("1 - V_{<=N}(1/16) <= 0; no growth rate here exceeds 16");

    if (f_hi_end == 0) {
        // Root exactly at 1 (e.g. V = t). Degenerate certificate.
        result.lo = result.hi = hi;
        result.f_lo = result.f_hi = 0;
        result.exact_root = true;
        result.mu_lower = 1;
        return result;
    }

    const mpq_class width_target(1, 1000000000000LL);  // 10^-12
    while (hi - lo > width_target) {
        const mpq_class mid = (lo + hi) / 2;
        const mpq_class f_mid = eval_one_minus(VN, mid);
        if (f_mid == 0) {
            result.lo = result.hi = mid;
            result.f_lo = result.f_hi = 0;
            result.exact_root = true;
            result.mu_lower = 1 / mid;
            return result;
        }
        if (f_mid > 0)
            lo = mid;
        else
            hi = mid;
    }
    result.lo = lo;
    result.hi = hi;
    result.f_lo = eval_one_minus(VN, lo);
    result.f_hi = eval_one_minus(VN, hi);
    result.mu_lower = 1 / hi;
    return result;
}

bool verify_certificate(const BoundResult& r, const PowerSeries& V) {
    const PowerSeries VN = V.truncate(std::min(r.N, V.order()));
    if (r.exact_root) return eval_one_minus(VN, r.hi) == 0 && r.mu_lower == 1 / r.hi;
    return eval_one_minus(VN, r.lo) > 0 && eval_one_minus(VN, r.hi) < 0 &&
           r.mu_lower == 1 / r.hi && r.hi - r.lo <= mpq_class(1, 1000000000000LL);
}

BoundResult bound_pipeline_enumerated(int n_max, const EnumerateOptions& opts) {
    const CountTable d_counts = count_sequence(WalkClass::Deque, n_max, opts);
    const PowerSeries D = PowerSeries::from_counts(d_counts, n_max);
    const PowerSeries V = primitive_series(D);
    // Decomposition chain sanity: 1/(1-V) must reproduce D exactly at this order.
    const PowerSeries back = PowerSeries::one(n_max).sub(V).reciprocal();
    if (!(back == D))
        throw NegativeCoefficient("1/(1-V) does not reproduce the enumerated D");
    BoundResult r = lower_bound(V, n_max);
    r.source = Provenance::Enumerated;
    return r;
}

BoundResult bound_pipeline_file(const std::string& path) {
    const CountTable table = load_count_table_file(path, Provenance::Ingested);
    std::string tag = table.class_tag;
    std::transform(tag.begin(), tag.end(), tag.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    if (tag != "d" && tag != "deque")
        throw IngestFormatError("expected class=D table, got class=" + table.class_tag);
    if (table.entries.empty()) throw IngestFormatError("empty coefficient table");
    const int n_max = table.entries.rbegin()->first;
    const PowerSeries D = PowerSeries::from_counts(table, n_max);
    const PowerSeries V = primitive_series(D);
    BoundResult r = lower_bound(V, n_max);
    r.source = Provenance::Ingested;
    return r;
}

std::string decimal_floor(const mpq_class& q, int sig) {
    if (q < 0) throw std::invalid_argument("decimal_floor expects a non-negative rational");
    const mpz_class whole = q.get_num() / q.get_den();
    int int_digits = int(whole.get_str().size());
    if (whole == 0) int_digits = 1;
    const int frac = std::max(0, sig - int_digits);
    mpz_class scale = 1;
    for (int i = 0; i < frac; ++i) scale *= 10;
    const mpz_class scaled = (q.get_num() * scale) / q.get_den();  // floor
    std::string digits = scaled.get_str();
    if (frac == 0) return digits;
    while (int(digits.size()) <= frac) digits.insert(digits.begin(), '0');
    digits.insert(digits.end() - frac, '.');
    return digits;
}

IntervalReport interval_report(const BoundResult& r) {
    IntervalReport report;
    report.mu_lower = r.mu_lower;
    report.below_upper = r.mu_lower < report.reference_upper;
    report.text = "computed lower bound  mu >= " + decimal_floor(r.mu_lower, 6) +
                  "  (exact " + r.mu_lower.get_str() + ")\n" +
                  "reference upper bound mu <  " + decimal_floor(report.reference_upper, 6) +
                  "\n" + "reference estimate    mu ~= " +
                  decimal_floor(report.reference_estimate, 10) + "\n" +
                  (report.below_upper ? "consistency: lower < upper  OK"
                                      : "consistency: lower < upper  VIOLATED");
    return report;
}

}  // namespace sortwalk
