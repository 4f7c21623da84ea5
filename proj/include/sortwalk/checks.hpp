#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sortwalk/enumeration.hpp"

namespace sortwalk {

// One verification bundle: a named cross-check of the library against an
// independent route (machine search vs walk enumeration, series identity vs
// enumerated coefficients, ...). These back both `sortwalk check` and the
// acceptance suite.
struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

// Stack-producible counts equal the Catalan numbers, n = 0..n_max.
CheckResult check_catalan(int n_max = 7);

// p_n <= d_n <= b_n and 2*bhat_n >= b_n by exhaustive enumeration.
CheckResult check_containment(int n_max = 6, const EnumerateOptions& opts = {});

// #left(2n) == #right(2n) and the reflection is a verified bijection:
// class-correct, length-preserving, involutive, collision-free.
CheckResult check_left_right_lemma(int n_max = 6, const EnumerateOptions& opts = {});

// Image of 2sip-/deque-walks under walk_to_permutation equals the sortable
// set of the matching machine, with no collisions.
CheckResult check_propositions(int n_max = 6, const EnumerateOptions& opts = {});

// d_from_p applied to enumerated P reproduces enumerated D exactly.
CheckResult check_dinp(int n_max = 8, const EnumerateOptions& opts = {});

// (u-1-v)^2 - 4v equals the radicand as a series identity at the given order.
CheckResult check_quartic(int order = 8, const EnumerateOptions& opts = {});

// sqrt(2P) >= 1 + sqrt(2tP) at `points` rational grid points in (0, 23/200].
CheckResult check_inequality(int points = 50, int n_max = 8,
                             const EnumerateOptions& opts = {});

// All left-walk tuples for m = 1..m_max: composed walks validate as
// 2sip-walks of length 2m^2+8m+4, decompose back, and are pairwise distinct.
CheckResult check_construction(int m_max = 3, const EnumerateOptions& opts = {});

// Lower bound is monotone nondecreasing across the given truncations and
// lies in (1, 8.346); certificates recomputed exactly.
CheckResult check_bound_monotone(const std::vector<int>& n_levels = {4, 6, 8},
                                 const EnumerateOptions& opts = {});

// Conditional: needs an external D-coefficient table with >= 1336 entries.
// Skips (not fails) when path is empty or unreadable.
CheckResult check_bound_ingested(const std::string& path);

// b_{m+n} >= b_m*b_n for all m <= n with m+n <= sum_max, plus sampled
// concatenation witnesses.
CheckResult check_supermultiplicative_all(int sum_max = 6, std::uint64_t seed = 0,
                                          const EnumerateOptions& opts = {});

// V-from-D coefficients equal direct counts of primitive deque-walks.
CheckResult check_primitive(int n_max = 6, const EnumerateOptions& opts = {});

std::vector<CheckResult> run_all_checks(const std::string& ingest_path = "",
                                        std::uint64_t seed = 0,
                                        const EnumerateOptions& opts = {});

}  // namespace sortwalk
