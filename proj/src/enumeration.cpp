#include "sortwalk/enumeration.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <random>
#include <sstream>

namespace sortwalk {

namespace {

constexpr int kDx[4] = {0, 1, 0, -1};
constexpr int kDy[4] = {1, 0, -1, 0};

struct GenConfig {
    bool quarter_plane = false;
    bool vertical_happy = false;
    bool interior_positive = false;  // primitive: x+y > 0 strictly inside
    int end_x_sign = 0;              // -1 left, +1 right, 0 unrestricted
};

GenConfig config_for(WalkClass c) {
    switch (c) {
        case WalkClass::TwoSip: return {.quarter_plane = true};
        case WalkClass::Deque: return {.vertical_happy = true};
        case WalkClass::Big: return {};
        case WalkClass::Left: return {.end_x_sign = -1};
        case WalkClass::Right: return {.end_x_sign = +1};
    }
    return {};
}

struct Dfs {
    int target_len;
    GenConfig cfg;
    const std::function<void(const Walk&)>* emit;
    std::vector<Step> steps;
    std::vector<Point> pos;  // pos[k] = point after k steps

    explicit Dfs(int len2n, const GenConfig& c, const std::function<void(const Walk&)>& e)
        : target_len(len2n), cfg(c), emit(&e) {
        steps.reserve(std::size_t(len2n));
        pos.reserve(std::size_t(len2n) + 1);
        pos.push_back({0, 0});
    }

    bool step_allowed(Step s) const {
        const int len = int(steps.size());
        const Point cur = pos.back();
        const int nx = cur.x + kDx[int(s)];
        const int ny = cur.y + kDy[int(s)];
        if (cfg.quarter_plane) {
            if (nx < 0 || ny < 0) return false;
        } else if (nx + ny < 0) {
            return false;
        }
        if (len > 0) {
            const Step last = steps.back();
            if (last == Step::E && s == Step::S) return false;  // ES corner
            if (last == Step::N && s == Step::W) return false;  // NW corner
        }
        if (cfg.vertical_happy) {
            const int line = cur.x + cur.y;
            if ((line == 0 || line == 1) && s != Step::N && s != Step::S) return false;
        }
        if (cfg.interior_positive && len + 1 < target_len && nx + ny == 0) return false;
        // Enough steps must remain to get back to the line x+y=0.
        if (nx + ny > target_len - (len + 1)) return false;
        // Incremental standardness: reject if a QP-subloop ending at the new
        // point starts with a non-N step. Walk the window backwards keeping
        // running minima; (i, len+1) is a subloop iff pos[i] equals the new
        // point and the window minima equal it componentwise.
        int minx = nx, miny = ny;
        for (int i = len; i >= 0; --i) {
            minx = std::min(minx, pos[std::size_t(i)].x);
            miny = std::min(miny, pos[std::size_t(i)].y);
            if (pos[std::size_t(i)].x == nx && pos[std::size_t(i)].y == ny && minx == nx &&
                miny == ny && steps[std::size_t(i)] != Step::N)
                return false;
            if (minx < nx || miny < ny) break;  // no earlier start can still match
        }
        return true;
    }

    void push(Step s) {
        const Point cur = pos.back();
        steps.push_back(s);
        pos.push_back({cur.x + kDx[int(s)], cur.y + kDy[int(s)]});
    }

    void pop() {
        steps.pop_back();
        pos.pop_back();
    }

    bool end_ok() const {
        const Point e = pos.back();
        if (e.x + e.y != 0) return false;
        if (cfg.end_x_sign < 0 && e.x > 0) return false;
        if (cfg.end_x_sign > 0 && e.x < 0) return false;
        return true;
    }

    void run() {
        if (int(steps.size()) == target_len) {
            if (end_ok()) (*emit)(Walk(steps));
            return;
        }
        for (Step s : {Step::N, Step::E, Step::S, Step::W}) {
            if (!step_allowed(s)) continue;
            push(s);
            run();
            pop();
        }
    }

    // Enumerates the valid prefixes of a given depth, in canonical order.
    void collect_prefixes(int depth, std::vector<std::vector<Step>>& out) {
        if (int(steps.size()) == depth) {
            out.push_back(steps);
            return;
        }
        for (Step s : {Step::N, Step::E, Step::S, Step::W}) {
            if (!step_allowed(s)) continue;
            push(s);
            collect_prefixes(depth, out);
            pop();
        }
    }

    void seed_with(const std::vector<Step>& prefix) {
        for (Step s : prefix) push(s);
    }
};

void generate(int n, const GenConfig& cfg, int jobs,
              const std::function<void(const Walk&)>& emit) {
    const int len = 2 * n;
    if (n == 0) {
        // The empty walk qualifies for every class except the primitive one.
        if (!cfg.interior_positive) emit(Walk{});
        return;
    }
    if (jobs <= 1 || len <= 4) {
        Dfs dfs(len, cfg, emit);
        dfs.run();
        return;
    }
    // Split at a fixed shallow depth; subtrees are independent and results
    // are concatenated in prefix order, so the output stays canonical.
    const int depth = std::min(len, 4);
    std::vector<std::vector<Step>> prefixes;
    {
        std::function<void(const Walk&)> nop = [](const Walk&) {};
        Dfs dfs(len, cfg, nop);
        dfs.collect_prefixes(depth, prefixes);
    }
    std::vector<std::future<std::vector<Walk>>> futures;
    futures.reserve(prefixes.size());
    for (const auto& prefix : prefixes) {
        futures.push_back(std::async(std::launch::async, [&, prefix]() {
            std::vector<Walk> local;
            std::function<void(const Walk&)> sink = [&local](const Walk& w) {
                local.push_back(w);
            };
            Dfs dfs(len, cfg, sink);
            dfs.seed_with(prefix);
            dfs.run();
            return local;
        }));
        // Cap in-flight tasks at `jobs`.
        if (int(futures.size()) >= jobs) {
            for (Walk& w : futures.front().get()) emit(w);
            futures.erase(futures.begin());
        }
    }
    for (auto& f : futures)
        for (Walk& w : f.get()) emit(w);
}

void check_limit(int n, const EnumerateOptions& opts, const char* what) {
    if (n > opts.limit)
        throw LimitExceeded(std::string(what) + " n=" + std::to_string(n) +
                            " above desk-scale limit " + std::to_string(opts.limit));
    if (n < 0) throw LimitExceeded("negative half-length");
}

std::string cache_path(const std::string& dir, const std::string& tag) {
    return dir + "/" + tag + ".v" + kGeneratorVersion + ".counts";
}

}  // namespace

void save_count_table(const CountTable& table, std::ostream& out) {
    out << "# sortwalk-counts v1 class=" << table.class_tag << "\n";
    for (const auto& [n, count] : table.entries) out << n << "\t" << count.get_str() << "\n";
}

CountTable load_count_table(std::istream& in, Provenance prov) {
    CountTable table;
    table.provenance = prov;
    std::string header;
    if (!std::getline(in, header)) throw IngestFormatError("empty count table");
    const std::string magic = "# sortwalk-counts v1 ";
    if (header.rfind(magic, 0) != 0)
        throw IngestFormatError("bad header '" + header + "'");
    const auto cls = header.find("class=");
    if (cls == std::string::npos) throw IngestFormatError("header missing class tag");
    std::istringstream tag_in(header.substr(cls + 6));
    tag_in >> table.class_tag;
    if (table.class_tag.empty()) throw IngestFormatError("empty class tag");

    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw IngestFormatError("line " + std::to_string(lineno) + ": missing tab");
        int n = 0;
        try {
            n = std::stoi(line.substr(0, tab));
        } catch (const std::exception&) {
            throw IngestFormatError("line " + std::to_string(lineno) + ": bad index");
        }
        mpz_class count;
        if (count.set_str(line.substr(tab + 1), 10) != 0)
            throw IngestFormatError("line " + std::to_string(lineno) + ": bad count");
        if (count < 0)
            throw IngestFormatError("line " + std::to_string(lineno) + ": negative count");
        if (!table.entries.emplace(n, count).second)
            throw IngestFormatError("line " + std::to_string(lineno) + ": duplicate index " +
                                    std::to_string(n));
    }
    return table;
}

void save_count_table_file(const CountTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IngestFormatError("cannot write '" + path + "'");
    save_count_table(table, out);
}

CountTable load_count_table_file(const std::string& path, Provenance prov) {
    std::ifstream in(path);
    if (!in) throw IngestFormatError("cannot read '" + path + "'");
    return load_count_table(in, prov);
}

void for_each_in_class(WalkClass c, int n, const std::function<void(const Walk&)>& emit,
                       const EnumerateOptions& opts) {
    check_limit(n, opts, "enumerate_class");
    generate(n, config_for(c), opts.jobs, emit);
}

std::vector<Walk> enumerate_class(WalkClass c, int n, const EnumerateOptions& opts) {
    std::vector<Walk> out;
    for_each_in_class(c, n, [&](const Walk& w) { out.push_back(w); }, opts);
    return out;
}

mpz_class count_class(WalkClass c, int n, const EnumerateOptions& opts) {
    check_limit(n, opts, "count_class");
    std::uint64_t count = 0;
    generate(n, config_for(c), opts.jobs, [&](const Walk&) { ++count; });
    return mpz_class(static_cast<unsigned long>(count));
}

CountTable count_sequence(WalkClass c, int n_max, const EnumerateOptions& opts) {
    check_limit(n_max, opts, "count_sequence");
    const std::string tag = walk_class_name(c);
    if (!opts.cache_dir.empty()) {
        const std::string path = cache_path(opts.cache_dir, tag);
        if (std::filesystem::exists(path)) {
            CountTable cached = load_count_table_file(path, Provenance::Enumerated);
            if (cached.class_tag == tag && !cached.entries.empty() &&
                cached.entries.begin()->first == 0 &&
                cached.entries.rbegin()->first >= n_max &&
                int(cached.entries.size()) == cached.entries.rbegin()->first + 1) {
                cached.entries.erase(cached.entries.upper_bound(n_max), cached.entries.end());
                return cached;
            }
        }
    }
    CountTable table;
    table.class_tag = tag;
    table.provenance = Provenance::Enumerated;
    for (int n = 0; n <= n_max; ++n) table.entries[n] = count_class(c, n, opts);
    if (!opts.cache_dir.empty()) {
        std::filesystem::create_directories(opts.cache_dir);
        save_count_table_file(table, cache_path(opts.cache_dir, tag));
    }
    return table;
}

std::vector<Walk> enumerate_primitive_deque(int n, const EnumerateOptions& opts) {
    check_limit(n, opts, "enumerate_primitive_deque");
    GenConfig cfg = config_for(WalkClass::Deque);
    cfg.interior_positive = true;
    std::vector<Walk> out;
    std::function<void(const Walk&)> sink = [&](const Walk& w) { out.push_back(w); };
    generate(n, cfg, opts.jobs, sink);
    return out;
}

mpz_class count_primitive_deque(int n, const EnumerateOptions& opts) {
    check_limit(n, opts, "count_primitive_deque");
    GenConfig cfg = config_for(WalkClass::Deque);
    cfg.interior_positive = true;
    std::uint64_t count = 0;
    std::function<void(const Walk&)> sink = [&](const Walk&) { ++count; };
    generate(n, cfg, opts.jobs, sink);
    return mpz_class(static_cast<unsigned long>(count));
}

CountTable count_primitive_sequence(int n_max, const EnumerateOptions& opts) {
    check_limit(n_max, opts, "count_primitive_sequence");
    CountTable table;
    table.class_tag = "primitive";
    table.provenance = Provenance::Enumerated;
    for (int n = 0; n <= n_max; ++n) table.entries[n] = count_primitive_deque(n, opts);
    return table;
}

SupermultReport check_supermultiplicative(const std::vector<std::pair<int, int>>& pairs,
                                          std::uint64_t seed,
                                          const EnumerateOptions& opts) {
    SupermultReport report;
    std::mt19937_64 rng(seed);
    for (const auto& [m, n] : pairs) {
        check_limit(m + n, opts, "check_supermultiplicative");
        SupermultReport::Entry e;
        e.m = m;
        e.n = n;
        e.b_m = count_class(WalkClass::Big, m, opts);
        e.b_n = count_class(WalkClass::Big, n, opts);
        e.b_mn = count_class(WalkClass::Big, m + n, opts);
        e.holds = e.b_mn >= e.b_m * e.b_n;
        if (!e.holds) report.all_hold = false;
        report.entries.push_back(e);

        // Witness map: concatenation of two big-walks is a big-walk.
        const auto left = enumerate_class(WalkClass::Big, m, opts);
        const auto right = enumerate_class(WalkClass::Big, n, opts);
        if (left.empty() || right.empty()) continue;
        const int samples = 20;
        for (int k = 0; k < samples; ++k) {
            const Walk& a = left[rng() % left.size()];
            const Walk& b = right[rng() % right.size()];
            std::vector<Step> cat = a.steps();
            cat.insert(cat.end(), b.steps().begin(), b.steps().end());
            ++report.witness_samples;
            if (!classify(Walk(std::move(cat))).contains(WalkClass::Big)) {
                ++report.witness_failures;
                report.all_hold = false;
            }
        }
    }
    return report;
}

}  // namespace sortwalk
