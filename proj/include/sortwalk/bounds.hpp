#pragma once

#include <gmpxx.h>

#include <string>

#include "sortwalk/series.hpp"

namespace sortwalk {

// V = 1 - 1/D, the generating function of primitive deque-walks. Requires
// D(0) = 1; throws NegativeCoefficient if the result is not a series of
// non-negative integers (which signals corrupted input).
PowerSeries primitive_series(const PowerSeries& D);

struct BoundResult {
    int N = 0;                 // truncation order used
    mpq_class lo, hi;          // enclosing interval for the root of 1 - V_{<=N}
    mpq_class f_lo, f_hi;      // exact endpoint values of f(t) = 1 - V_{<=N}(t)
    bool exact_root = false;   // f(hi) == 0 exactly (degenerate certificate)
    mpq_class mu_lower;        // 1/hi, certified lower bound on the growth rate
    Provenance source = Provenance::Enumerated;
};

// Finds the unique root of f(t) = 1 - V_{<=N}(t) in (0, 1] by bisection with
// exact rational evaluation; f is strictly decreasing on t > 0. The bracket
// starts at [1/16, 1] (no growth rate here exceeds 16). Returns an interval
// of width <= 10^-12. Throws NoRootInUnitInterval when f(1) > 0.
BoundResult lower_bound(const PowerSeries& V, int N);

// Recomputes the sign certificate from scratch: f(lo) > 0 and f(hi) < 0
// (or the exact-root degenerate form), using only exact rational arithmetic.
bool verify_certificate(const BoundResult& r, const PowerSeries& V);

// Enumerated source: counts deque-walks to n_max, forms D then V, and also
// asserts the decomposition chain (reciprocal round-trip and V's integrality)
// before rooting. File source: ingests a D coefficient table (count-cache
// format, class tag D or deque).
BoundResult bound_pipeline_enumerated(int n_max, const EnumerateOptions& opts = {});
BoundResult bound_pipeline_file(const std::string& path);

// Human-readable comparison of a computed bound against the reference
// interval for this growth rate. Asserts computed lower < 8.346.
struct IntervalReport {
    mpq_class mu_lower;
    mpq_class reference_upper{mpq_class(8346, 1000)};        // published upper bound
    mpq_class reference_estimate{mpq_class(8281402207, 1000000000)};  // numerical estimate
    bool below_upper = false;
    std::string text;
};
IntervalReport interval_report(const BoundResult& r);

// Decimal display of an exact rational, rounded toward zero at `sig` significant
// digits so a printed lower bound is still a true lower bound.
std::string decimal_floor(const mpq_class& q, int sig);

}  // namespace sortwalk
