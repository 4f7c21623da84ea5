#include "sortwalk/render.hpp"

#include <algorithm>
#include <sstream>

namespace sortwalk {

std::string render_ascii(const Walk& w) {
    const auto pos = w.positions();
    int minx = 0, maxx = 0, miny = 0, maxy = 0;
    for (const Point& p : pos) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    // Vertex (x, y) sits at row 2*(maxy-y), column 2*(x-minx); edges between.
    const int rows = 2 * (maxy - miny) + 1;
    const int cols = 2 * (maxx - minx) + 1;
    std::vector<std::string> grid(std::size_t(rows), std::string(std::size_t(cols), ' '));
    auto at = [&](const Point& p) -> std::pair<int, int> {
        return {2 * (maxy - p.y), 2 * (p.x - minx)};
    };
    for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
        const auto [r1, c1] = at(pos[i]);
        const auto [r2, c2] = at(pos[i + 1]);
        grid[std::size_t((r1 + r2) / 2)][std::size_t((c1 + c2) / 2)] = (r1 == r2) ? '-' : '|';
    }
    for (const Point& p : pos) {
        const auto [r, c] = at(p);
        grid[std::size_t(r)][std::size_t(c)] = '+';
    }
    const auto [ro, co] = at(Point{0, 0});
    grid[std::size_t(ro)][std::size_t(co)] = 'o';
    std::string out;
    for (const auto& row : grid) {
        std::string trimmed = row;
        while (!trimmed.empty() && trimmed.back() == ' ') trimmed.pop_back();
        out += trimmed;
        out += '\n';
    }
    return out;
}

namespace {

constexpr int kScale = 16;
constexpr int kPad = 8;

std::string svg_lines(const Walk& w, const std::vector<std::pair<std::size_t, std::string>>&
                                          color_breaks) {
    // color_breaks: (first step index using the color, color); must start at 0.
    const auto pos = w.positions();
    int minx = 0, maxx = 0, miny = 0, maxy = 0;
    for (const Point& p : pos) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    const int width = (maxx - minx) * kScale + 2 * kPad;
    const int height = (maxy - miny) * kScale + 2 * kPad;
    auto X = [&](int x) { return (x - minx) * kScale + kPad; };
    auto Y = [&](int y) { return (maxy - y) * kScale + kPad; };  // SVG y grows downward

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    std::size_t break_idx = 0;
    std::string color = "black";
    for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
        while (break_idx < color_breaks.size() && color_breaks[break_idx].first == i) {
            color = color_breaks[break_idx].second;
            ++break_idx;
        }
        out << "  <line x1=\"" << X(pos[i].x) << "\" y1=\"" << Y(pos[i].y) << "\" x2=\""
            << X(pos[i + 1].x) << "\" y2=\"" << Y(pos[i + 1].y) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
    }
    out << "  <circle cx=\"" << X(0) << "\" cy=\"" << Y(0)
        << "\" r=\"3\" fill=\"black\"/>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render_svg(const Walk& w) {
    return svg_lines(w, {{0, "black"}});
}

std::string render_svg_composed(const ComposedWalk& cw) {
    static const std::string part_colors[3] = {"red", "purple", "blue"};
    std::vector<std::pair<std::size_t, std::string>> breaks;
    // cuts = {0, end of stage 1, end of part 1, ..., end of part m, total}.
    breaks.emplace_back(0, "orange");
    for (std::size_t p = 0; p < cw.m; ++p)
        breaks.emplace_back(cw.cuts[1 + p], part_colors[p % 3]);
    breaks.emplace_back(cw.cuts[1 + cw.m], "green");
    return svg_lines(cw.walk, breaks);
}

}  // namespace sortwalk
