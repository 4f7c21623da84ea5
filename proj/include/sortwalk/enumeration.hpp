#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sortwalk/walks.hpp"

namespace sortwalk {

// Bumped whenever the generation algorithm changes; keys the on-disk cache.
inline constexpr const char* kGeneratorVersion = "1";

enum class Provenance { Enumerated, Ingested };

// Exact counts by half-length for one named class.
struct CountTable {
    std::string class_tag;
    std::map<int, mpz_class> entries;  // half-length n -> count
    Provenance provenance = Provenance::Enumerated;
    std::string generator_version = kGeneratorVersion;

    friend bool operator==(const CountTable& a, const CountTable& b) {
        return a.class_tag == b.class_tag && a.entries == b.entries;
    }
};

// Count-cache file format: header `# sortwalk-counts v1 class=<tag>`, then
// `n<TAB>count` lines in decimal, sorted by n. Also the ingest format for
// externally computed coefficient tables.
void save_count_table(const CountTable& table, std::ostream& out);
CountTable load_count_table(std::istream& in, Provenance prov = Provenance::Ingested);
void save_count_table_file(const CountTable& table, const std::string& path);
CountTable load_count_table_file(const std::string& path,
                                 Provenance prov = Provenance::Ingested);

struct EnumerateOptions {
    int limit = 9;          // desk-scale half-length cap (b-class sized)
    int jobs = 1;           // parallel DFS subtrees; output order is canonical
    std::string cache_dir;  // empty = caching disabled
};

// All walks of length 2n in the class, lexicographic in step order N<E<S<W.
// Prefix DFS pruned on confinement, eagerness, vertical-happiness and an
// incremental standardness check (a violated QP-subloop never un-violates).
std::vector<Walk> enumerate_class(WalkClass c, int n, const EnumerateOptions& opts = {});

// Streaming variant; emits walks in canonical order without storing them.
void for_each_in_class(WalkClass c, int n, const std::function<void(const Walk&)>& emit,
                       const EnumerateOptions& opts = {});

mpz_class count_class(WalkClass c, int n, const EnumerateOptions& opts = {});
CountTable count_sequence(WalkClass c, int n_max, const EnumerateOptions& opts = {});

// Deque-walks that touch x+y=0 only at their endpoints. n=0 counts 0: the
// empty walk is the unit of the concatenation decomposition, not primitive.
std::vector<Walk> enumerate_primitive_deque(int n, const EnumerateOptions& opts = {});
mpz_class count_primitive_deque(int n, const EnumerateOptions& opts = {});
CountTable count_primitive_sequence(int n_max, const EnumerateOptions& opts = {});

// b_{m+n} >= b_m * b_n for each pair, plus sampled checks that concatenating
// two big-walks lands in the big class again.
struct SupermultReport {
    struct Entry {
        int m = 0, n = 0;
        mpz_class b_m, b_n, b_mn;
        bool holds = false;
    };
    std::vector<Entry> entries;
    int witness_samples = 0;
    int witness_failures = 0;
    bool all_hold = true;
};
SupermultReport check_supermultiplicative(const std::vector<std::pair<int, int>>& pairs,
                                          std::uint64_t seed = 0,
                                          const EnumerateOptions& opts = {});

}  // namespace sortwalk
