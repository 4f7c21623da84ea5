#include "sortwalk/checks.hpp"

#include <algorithm>
#include <filesystem>
#include <set>

#include "sortwalk/bijections.hpp"
#include "sortwalk/bounds.hpp"
#include "sortwalk/machines.hpp"
#include "sortwalk/series.hpp"

namespace sortwalk {

namespace {

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, false, std::move(detail)};
}

CheckResult pass(std::string name, std::string detail) {
    return {std::move(name), true, false, std::move(detail)};
}

// All length-n permutations, lexicographic.
std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> v(std::size_t(n));
    std::iota(v.begin(), v.end(), 1);
    do out.push_back(Permutation(v));
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

CheckResult check_catalan(int n_max) {
    const char* name = "catalan";
    mpz_class catalan = 1;  // C_0
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) catalan = catalan * 2 * (2 * n - 1) / (n + 1);
        const std::uint64_t got = count_producible(MachineKind::Stack, n, n_max);
        if (mpz_class(static_cast<unsigned long>(got)) != catalan)
            return fail(name, "n=" + std::to_string(n) + ": got " + std::to_string(got) +
                                  ", want C_n = " + catalan.get_str());
    }
    return pass(name, "stack-producible counts = Catalan numbers, n <= " +
                          std::to_string(n_max));
}

CheckResult check_containment(int n_max, const EnumerateOptions& opts) {
    const char* name = "containment";
    for (int n = 0; n <= n_max; ++n) {
        const mpz_class p = count_class(WalkClass::TwoSip, n, opts);
        const mpz_class d = count_class(WalkClass::Deque, n, opts);
        const mpz_class b = count_class(WalkClass::Big, n, opts);
        const mpz_class bhat = count_class(WalkClass::Left, n, opts);
        if (!(p <= d && d <= b))
            return fail(name, "n=" + std::to_string(n) + ": p=" + p.get_str() +
                                  " d=" + d.get_str() + " b=" + b.get_str());
        if (!(2 * bhat >= b && bhat <= b))
            return fail(name, "n=" + std::to_string(n) + ": bhat=" + bhat.get_str() +
                                  " vs b=" + b.get_str());
        mpz_class sixteen_n = 1;
        for (int i = 0; i < n; ++i) sixteen_n *= 16;
        if (b > sixteen_n)
            return fail(name, "n=" + std::to_string(n) + ": b exceeds 16^n");
    }
    return pass(name, "p <= d <= b, 2*bhat >= b, b <= 16^n for n <= " +
                          std::to_string(n_max));
}

CheckResult check_left_right_lemma(int n_max, const EnumerateOptions& opts) {
    const char* name = "lemma";
    for (int n = 0; n <= n_max; ++n) {
        const auto left = enumerate_class(WalkClass::Left, n, opts);
        const auto right = enumerate_class(WalkClass::Right, n, opts);
        if (left.size() != right.size())
            return fail(name, "n=" + std::to_string(n) + ": #left=" +
                                  std::to_string(left.size()) + " #right=" +
                                  std::to_string(right.size()));
        std::set<Walk> images;
        for (const Walk& w : left) {
            const Walk r = reflect_left_to_right(w);
            if (r.length() != w.length())
                return fail(name, "length changed for " + w.to_string());
            if (!classify(r).contains(WalkClass::Right))
                return fail(name, "image of " + w.to_string() + " is not a right-walk");
            if (reflect_transform(r) != w)
                return fail(name, "reflection not involutive on " + w.to_string());
            images.insert(r);
        }
        if (images.size() != left.size())
            return fail(name, "n=" + std::to_string(n) + ": reflection not injective");
        const std::set<Walk> right_set(right.begin(), right.end());
        if (images != right_set)
            return fail(name, "n=" + std::to_string(n) + ": image != right-walk set");
    }
    return pass(name, "#left = #right and reflection is a bijection, n <= " +
                          std::to_string(n_max));
}

CheckResult check_propositions(int n_max, const EnumerateOptions& opts) {
    const char* name = "propositions";
    struct Side {
        WalkClass cls;
        MachineKind kind;
    };
    for (const Side side : {Side{WalkClass::TwoSip, MachineKind::TwoSip},
                            Side{WalkClass::Deque, MachineKind::Deque}}) {
        for (int n = 0; n <= n_max; ++n) {
            const auto walks = enumerate_class(side.cls, n, opts);
            std::set<Permutation> image;
            for (const Walk& w : walks) image.insert(walk_to_permutation(side.kind, w));
            if (image.size() != walks.size())
                return fail(name, machine_kind_name(side.kind) + " n=" + std::to_string(n) +
                                      ": collisions in walk -> permutation map");
            std::set<Permutation> sortable_set;
            for (const Permutation& p : all_permutations(n))
                if (sortable(side.kind, p)) sortable_set.insert(p);
            if (image != sortable_set)
                return fail(name, machine_kind_name(side.kind) + " n=" + std::to_string(n) +
                                      ": image has " + std::to_string(image.size()) +
                                      " elements, sortable set " +
                                      std::to_string(sortable_set.size()));
        }
    }
    return pass(name, "walk images = sortable sets for 2sip and deque, n <= " +
                          std::to_string(n_max));
}

CheckResult check_dinp(int n_max, const EnumerateOptions& opts) {
    const char* name = "dinp";
    const PowerSeries P =
        PowerSeries::from_counts(count_sequence(WalkClass::TwoSip, n_max, opts), n_max);
    const PowerSeries D =
        PowerSeries::from_counts(count_sequence(WalkClass::Deque, n_max, opts), n_max);
    const PowerSeries computed = d_from_p(P);
    if (!computed.is_integral() || !computed.is_non_negative())
        return fail(name, "d_from_p(P) is not a non-negative integer series");
    if (!(computed == D)) {
        for (int n = 0; n <= n_max; ++n)
            if (computed.coeff(n) != D.coeff(n))
                return fail(name, "first mismatch at n=" + std::to_string(n) + ": got " +
                                      computed.coeff(n).get_str() + ", enumerated " +
                                      D.coeff(n).get_str());
        return fail(name, "series mismatch");
    }
    return pass(name, "d_from_p(P_enumerated) = D_enumerated exactly to n = " +
                          std::to_string(n_max));
}

CheckResult check_quartic(int order, const EnumerateOptions& opts) {
    const char* name = "quartic";
    const PowerSeries P =
        PowerSeries::from_counts(count_sequence(WalkClass::TwoSip, order, opts), order);
    const PowerSeries radicand = dinp_radicand(P);
    if (radicand.coeff(0) != 1) return fail(name, "radicand constant term != 1");
    if (!quartic_identity_check(P, order))
        return fail(name, "factorization identity failed at order " + std::to_string(order));
    return pass(name, "(u-1-v)^2 - 4v = radicand as series, order " + std::to_string(order));
}

CheckResult check_inequality(int points, int n_max, const EnumerateOptions& opts) {
    const char* name = "inequality";
    const PowerSeries P =
        PowerSeries::from_counts(count_sequence(WalkClass::TwoSip, n_max, opts), n_max);
    const auto report = inequality_scan(P, make_grid(points));
    if (!report.all_pass) {
        for (const auto& pt : report.points)
            if (!pt.pass)
                return fail(name, "fails at t = " + pt.t.get_str());
    }
    return pass(name, "sqrt(2P) >= 1 + sqrt(2tP) at " + std::to_string(points) +
                          " grid points in (0, 23/200]");
}

CheckResult check_construction(int m_max, const EnumerateOptions& opts) {
    const char* name = "construction";
    for (int m = 1; m <= m_max; ++m) {
        const auto lefts = enumerate_class(WalkClass::Left, m, opts);
        const std::size_t want_len = 2 * std::size_t(m) * std::size_t(m) + 8 * std::size_t(m) + 4;
        // Cartesian power: all m-tuples of left-walks of length 2m.
        std::vector<std::size_t> idx(std::size_t(m), 0);
        std::set<Walk> composed_set;
        std::size_t tuples = 0;
        while (true) {
            std::vector<Walk> parts;
            parts.reserve(std::size_t(m));
            for (std::size_t k = 0; k < std::size_t(m); ++k) parts.push_back(lefts[idx[k]]);
            const Walk composed = compose_theorem1(parts);
            ++tuples;
            if (composed.length() != want_len)
                return fail(name, "m=" + std::to_string(m) + ": length " +
                                      std::to_string(composed.length()) + ", want " +
                                      std::to_string(want_len));
            if (!classify(composed).contains(WalkClass::TwoSip))
                return fail(name, "m=" + std::to_string(m) +
                                      ": composed walk fails the 2sip validator");
            if (decompose_theorem1(composed, std::size_t(m)) != parts)
                return fail(name, "m=" + std::to_string(m) + ": decompose != parts");
            composed_set.insert(composed);
            // Next tuple.
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == lefts.size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
        std::size_t expect = 1;
        for (int k = 0; k < m; ++k) expect *= lefts.size();
        if (tuples != expect || composed_set.size() != expect)
            return fail(name, "m=" + std::to_string(m) + ": " +
                                  std::to_string(composed_set.size()) +
                                  " distinct walks, want bhat^m = " + std::to_string(expect));
    }
    return pass(name, "all tuples compose to valid 2sip-walks and decompose back, m <= " +
                          std::to_string(m_max));
}

CheckResult check_bound_monotone(const std::vector<int>& n_levels,
                                 const EnumerateOptions& opts) {
    const char* name = "bound-monotone";
    mpq_class prev = 0;
    const mpq_class upper(8346, 1000);
    std::string detail;
    for (int n : n_levels) {
        const BoundResult r = bound_pipeline_enumerated(n, opts);
        const PowerSeries D = PowerSeries::from_counts(
            count_sequence(WalkClass::Deque, n, opts), n);
        if (!verify_certificate(r, primitive_series(D)))
            return fail(name, "certificate failed at n_max=" + std::to_string(n));
        if (r.mu_lower < prev)
            return fail(name, "bound decreased at n_max=" + std::to_string(n));
        if (!(r.mu_lower > 1 && r.mu_lower < upper))
            return fail(name, "bound outside (1, 8.346) at n_max=" + std::to_string(n));
        prev = r.mu_lower;
        detail += (detail.empty() ? "" : ", ") + std::to_string(n) + " -> " +
                  decimal_floor(r.mu_lower, 6);
    }
    return pass(name, "monotone and in (1, 8.346): " + detail);
}

CheckResult check_bound_ingested(const std::string& path) {
    const char* name = "bound-ingested";
    if (path.empty() || !std::filesystem::exists(path))
        return {name, false, true,
                "no external D-coefficient file provided; need >= 1336 coefficients"};
    const BoundResult r = bound_pipeline_file(path);
    if (r.N < 1336)
        return {name, false, true,
                "table has only " + std::to_string(r.N) + " coefficients, need >= 1336"};
    const mpq_class mu_ref(821927, 100000), mu_tol(1, 10000);
    const mpq_class t_ref(1217, 10000), t_tol(1, 1000);
    if (abs(r.mu_lower - mu_ref) > mu_tol)
        return fail(name, "mu_lower = " + decimal_floor(r.mu_lower, 8) +
                              ", want 8.21927 +- 1e-4");
    if (abs(r.hi - t_ref) > t_tol)
        return fail(name, "t_root = " + decimal_floor(r.hi, 8) + ", want 0.1217 +- 1e-3");
    return pass(name, "mu_lower = " + decimal_floor(r.mu_lower, 8) + " (8.21927 +- 1e-4), " +
                          "t_root = " + decimal_floor(r.hi, 6) + " (0.1217 +- 1e-3)");
}

CheckResult check_supermultiplicative_all(int sum_max, std::uint64_t seed,
                                          const EnumerateOptions& opts) {
    const char* name = "supermultiplicative";
    std::vector<std::pair<int, int>> pairs;
    for (int m = 0; m <= sum_max; ++m)
        for (int n = m; m + n <= sum_max; ++n) pairs.emplace_back(m, n);
    const auto report = check_supermultiplicative(pairs, seed, opts);
    if (!report.all_hold) {
        for (const auto& e : report.entries)
            if (!e.holds)
                return fail(name, "b_{m+n} < b_m*b_n at (" + std::to_string(e.m) + "," +
                                      std::to_string(e.n) + ")");
        return fail(name, std::to_string(report.witness_failures) +
                              " concatenation witnesses left the big class");
    }
    return pass(name, std::to_string(pairs.size()) + " pairs with m+n <= " +
                          std::to_string(sum_max) + ", " +
                          std::to_string(report.witness_samples) + " witnesses sampled");
}

CheckResult check_primitive(int n_max, const EnumerateOptions& opts) {
    const char* name = "primitive";
    const PowerSeries D =
        PowerSeries::from_counts(count_sequence(WalkClass::Deque, n_max, opts), n_max);
    const PowerSeries V = primitive_series(D);
    for (int n = 0; n <= n_max; ++n) {
        const mpz_class direct = count_primitive_deque(n, opts);
        if (mpq_class(direct) != V.coeff(n))
            return fail(name, "n=" + std::to_string(n) + ": direct count " +
                                  direct.get_str() + ", V coefficient " +
                                  V.coeff(n).get_str());
    }
    return pass(name, "V = 1 - 1/D matches direct primitive counts, n <= " +
                          std::to_string(n_max));
}

std::vector<CheckResult> run_all_checks(const std::string& ingest_path, std::uint64_t seed,
                                        const EnumerateOptions& opts) {
    std::vector<CheckResult> results;
    results.push_back(check_catalan());
    results.push_back(check_containment(6, opts));
    results.push_back(check_left_right_lemma(6, opts));
    results.push_back(check_propositions(6, opts));
    results.push_back(check_dinp(8, opts));
    results.push_back(check_quartic(8, opts));
    results.push_back(check_inequality(50, 8, opts));
    results.push_back(check_construction(3, opts));
    results.push_back(check_bound_monotone({4, 6, 8}, opts));
    results.push_back(check_bound_ingested(ingest_path));
    results.push_back(check_supermultiplicative_all(6, seed, opts));
    results.push_back(check_primitive(6, opts));
    return results;
}

}  // namespace sortwalk
