#pragma once

#include <string>

#include "sortwalk/bijections.hpp"
#include "sortwalk/walks.hpp"

namespace sortwalk {

// Character-grid picture: 'o' marks the origin, '+' other visited lattice
// points, '-' and '|' the traversed edges. Empty walk -> a single 'o'.
std::string render_ascii(const Walk& w);

// One <line> element per step inside a fixed-scale <svg>. Single color.
std::string render_svg(const Walk& w);

// Stage-colored SVG for a composed walk: the opening section orange, the m
// middle parts cycling red/purple/blue, the closing section green.
std::string render_svg_composed(const ComposedWalk& cw);

}  // namespace sortwalk
