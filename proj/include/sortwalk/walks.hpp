#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sortwalk/errors.hpp"

namespace sortwalk {

// Unit steps on the square lattice. The enumeration order N < E < S < W is
// fixed; all generated output is sorted by it.
enum class Step : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };

char step_char(Step s);
Step step_from_char(char c);  // throws MalformedWalk on anything outside NESW

struct Point {
    int x = 0;
    int y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

// A walk starts at the origin; everything else is derived from its steps.
class Walk {
  public:
    Walk() = default;
    explicit Walk(std::vector<Step> steps) : steps_(std::move(steps)) {}
    static Walk parse(std::string_view text);  // text over NESW, no separators

    const std::vector<Step>& steps() const { return steps_; }
    std::size_t length() const { return steps_.size(); }
    std::size_t half_length() const;  // throws MalformedWalk if length is odd
    bool empty() const { return steps_.empty(); }

    // Prefix positions: positions()[k] is the point after the first k steps,
    // so the vector has length()+1 entries and starts at (0,0).
    std::vector<Point> positions() const;
    Point end() const;

    std::string to_string() const;
    friend bool operator==(const Walk&, const Walk&) = default;
    friend bool operator<(const Walk& a, const Walk& b) { return a.steps_ < b.steps_; }

  private:
    std::vector<Step> steps_;
};

enum class WalkClass : std::uint8_t { TwoSip = 0, Deque = 1, Big = 2, Left = 3, Right = 4 };

std::string walk_class_name(WalkClass c);
WalkClass walk_class_from_name(std::string_view name);  // throws InvalidWalkClass

// Small set of class tags, bitmask-backed.
class ClassSet {
  public:
    ClassSet() = default;
    void insert(WalkClass c) { bits_ |= mask(c); }
    bool contains(WalkClass c) const { return bits_ & mask(c); }
    bool empty() const { return bits_ == 0; }
    std::vector<WalkClass> to_vector() const;
    std::string to_string() const;
    friend bool operator==(const ClassSet&, const ClassSet&) = default;

  private:
    static std::uint8_t mask(WalkClass c) { return std::uint8_t(1u << static_cast<int>(c)); }
    std::uint8_t bits_ = 0;
};

// Half-open index range [begin, end) into the walk's steps.
struct SubloopSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
    friend bool operator==(const SubloopSpan&, const SubloopSpan&) = default;
    friend auto operator<=>(const SubloopSpan&, const SubloopSpan&) = default;
};

// True iff no adjacent step pair is ES or NW.
bool is_eager(const Walk& w);

// All nonempty contiguous subsections [i, j) that return to their start point
// (p,q) without ever leaving {x >= p, y >= q}, in lexicographic (i, j) order.
std::vector<SubloopSpan> qp_subloops(const Walk& w);

// True iff every QP-subloop begins with an N step.
bool is_standard(const Walk& w);

// True iff every step taken from a point on x+y=0 or x+y=1 is N or S.
bool is_vertical_happy(const Walk& w);

bool confined_quarter_plane(const Walk& w);
bool confined_half_plane(const Walk& w);

// All class tags whose full definition w satisfies. Containments
// TwoSip, Deque <= Big and Big = Left u Right fall out of the predicates.
ClassSet classify(const Walk& w);

}  // namespace sortwalk
