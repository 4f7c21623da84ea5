#include "sortwalk/walks.hpp"

#include <algorithm>
#include <array>

namespace sortwalk {

namespace {
constexpr std::array<int, 4> kDx = {0, 1, 0, -1};
constexpr std::array<int, 4> kDy = {1, 0, -1, 0};

inline int dx(Step s) { return kDx[static_cast<int>(s)]; }
inline int dy(Step s) { return kDy[static_cast<int>(s)]; }
}  // namespace

char step_char(Step s) {
    static constexpr std::array<char, 4> c = {'N', 'E', 'S', 'W'};
    return c[static_cast<int>(s)];
}

Step step_from_char(char c) {
    switch (c) {
        case 'N': return Step::N;
        case 'E': return Step::E;
        case 'S': return Step::S;
        case 'W': return Step::W;
        default:
            throw MalformedWalk(std::string("unknown step character '") + c + "'");
    }
}

Walk Walk::parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) steps.push_back(step_from_char(c));
    return Walk(std::move(steps));
}

std::size_t Walk::half_length() const {
    if (steps_.size() % 2 != 0)
        throw MalformedWalk("half_length of odd-length walk " + to_string());
    return steps_.size() / 2;
}

std::vector<Point> Walk::positions() const {
    std::vector<Point> pos(steps_.size() + 1);
    Point p;
    pos[0] = p;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        p.x += dx(steps_[i]);
        p.y += dy(steps_[i]);
        pos[i + 1] = p;
    }
    return pos;
}

Point Walk::end() const {
    Point p;
    for (Step s : steps_) {
        p.x += dx(s);
        p.y += dy(s);
    }
    return p;
}

std::string Walk::to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(step_char(s));
    return out;
}

std::string walk_class_name(WalkClass c) {
    switch (c) {
        case WalkClass::TwoSip: return "twosip";
        case WalkClass::Deque: return "deque";
        case WalkClass::Big: return "big";
        case WalkClass::Left: return "left";
        case WalkClass::Right: return "right";
    }
    return "?";
}

WalkClass walk_class_from_name(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return char(std::tolower(ch)); });
    if (lower == "twosip" || lower == "2sip" || lower == "p") return WalkClass::TwoSip;
    if (lower == "deque" || lower == "d") return WalkClass::Deque;
    if (lower == "big" || lower == "b") return WalkClass::Big;
    if (lower == "left") return WalkClass::Left;
    if (lower == "right") return WalkClass::Right;
    throw InvalidWalkClass("unknown walk class '" + std::string(name) + "'");
}

std::vector<WalkClass> ClassSet::to_vector() const {
    std::vector<WalkClass> out;
    for (auto c : {WalkClass::TwoSip, WalkClass::Deque, WalkClass::Big, WalkClass::Left,
                   WalkClass::Right})
        if (contains(c)) out.push_back(c);
    return out;
}

std::string ClassSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (WalkClass c : to_vector()) {
        if (!first) out += ",";
        out += walk_class_name(c);
        first = false;
    }
    return out + "}";
}

bool is_eager(const Walk& w) {
    const auto& s = w.steps();
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == Step::E && s[i + 1] == Step::S) return false;
        if (s[i] == Step::N && s[i + 1] == Step::W) return false;
    }
    return true;
}

std::vector<SubloopSpan> qp_subloops(const Walk& w) {
    std::vector<SubloopSpan> out;
    const auto pos = w.positions();
    const std::size_t L = w.length();
    for (std::size_t i = 0; i < L; ++i) {
        int minx = pos[i].x, miny = pos[i].y;
        for (std::size_t j = i + 1; j <= L; ++j) {
            minx = std::min(minx, pos[j].x);
            miny = std::min(miny, pos[j].y);
            if (pos[j] == pos[i] && minx == pos[i].x && miny == pos[i].y)
                out.push_back({i, j});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_standard(const Walk& w) {
    // Early exit: scan loop ends left to right; for each end j, scan starts i
    // backwards with running window minima. A subloop (i, j) exists iff
    // pos[i] == pos[j] and the window minima equal pos[i] componentwise.
    const auto pos = w.positions();
    const std::size_t L = w.length();
    for (std::size_t j = 1; j <= L; ++j) {
        int minx = pos[j].x, miny = pos[j].y;
        for (std::size_t i = j; i-- > 0;) {
            minx = std::min(minx, pos[i].x);
            miny = std::min(miny, pos[i].y);
            if (pos[i] == pos[j] && minx == pos[i].x && miny == pos[i].y &&
                w.steps()[i] != Step::N)
                return false;
        }
    }
    return true;
}

bool is_vertical_happy(const Walk& w) {
    const auto pos = w.positions();
    for (std::size_t i = 0; i < w.length(); ++i) {
        int line = pos[i].x + pos[i].y;
        if ((line == 0 || line == 1) && w.steps()[i] != Step::N && w.steps()[i] != Step::S)
            return false;
    }
    return true;
}

bool confined_quarter_plane(const Walk& w) {
    Point p;
    for (Step s : w.steps()) {
        p.x += dx(s);
        p.y += dy(s);
        if (p.x < 0 || p.y < 0) return false;
    }
    return true;
}

bool confined_half_plane(const Walk& w) {
    Point p;
    for (Step s : w.steps()) {
        p.x += dx(s);
        p.y += dy(s);
        if (p.x + p.y < 0) return false;
    }
    return true;
}

ClassSet classify(const Walk& w) {
    ClassSet set;
    const Point e = w.end();
    if (e.x + e.y != 0) return set;  // all five classes end on x+y=0
    if (!confined_half_plane(w) || !is_eager(w) || !is_standard(w)) return set;
    set.insert(WalkClass::Big);
    if (e.x <= 0) set.insert(WalkClass::Left);
    if (e.x >= 0) set.insert(WalkClass::Right);
    if (e.x == 0 && e.y == 0 && confined_quarter_plane(w)) set.insert(WalkClass::TwoSip);
    if (is_vertical_happy(w)) set.insert(WalkClass::Deque);
    return set;
}

}  // namespace sortwalk
